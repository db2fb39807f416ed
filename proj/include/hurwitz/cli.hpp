#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

namespace hk::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

// Numbers, fractions p/q and multiples of pi ("pi", "2pi", "3*pi/4").
double parse_real(std::string_view s);
// alpha/pi for an alpha literal; "pi" gives exactly 1.
double parse_ratio(std::string_view s);
// Comma lists; integer items may be ranges lo..hi.
std::vector<int> parse_int_list(std::string_view s);
std::vector<double> parse_real_list(std::string_view s);
std::vector<double> parse_ratio_list(std::string_view s);

// Worker count from HK_THREADS, else hardware concurrency.
unsigned worker_count();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hk::cli
