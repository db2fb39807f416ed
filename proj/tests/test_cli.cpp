#include "hurwitz/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result hk_run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"hk"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = hk::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

long count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("literal parsing") {
    using namespace hk::cli;
    CHECK(parse_real("pi") == std::numbers::pi);
    CHECK(parse_real("2pi") == 2 * std::numbers::pi);
    CHECK(parse_real("3*pi/4") == doctest::Approx(0.75 * std::numbers::pi).epsilon(1e-16));
    CHECK(parse_real("1/3") == 1.0 / 3);
    CHECK(parse_real("-0.25") == -0.25);
    CHECK(parse_ratio("pi") == 1.0);
    CHECK(parse_ratio("pi/2") == 0.5);
    CHECK(parse_int_list("1..3,5") == std::vector<int>{1, 2, 3, 5});
    CHECK(parse_real_list("0.5,1/4").size() == 2);
    CHECK_THROWS(parse_real("abc"));
    CHECK_THROWS(parse_int_list("3..1"));
    CHECK_THROWS(parse_int_list(""));
}

TEST_CASE("verify exit codes") {
    CHECK(hk_run({"verify", "thm_2_1", "--k", "1", "--N", "1", "--a", "1", "--b", "1", "--alpha", "pi"}).code == 0);
    const Result bad = hk_run({"verify", "thm_2_1", "--k", "0", "--N", "1", "--a", "1", "--b", "1", "--alpha", "pi"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("k must be ≥ 1") != std::string::npos);
    CHECK(hk_run({"verify", "classical_ramanujan", "--n", "1", "--alpha", "pi"}).code == 0);
    CHECK(hk_run({"verify", "no_such_identity"}).code == 2);
    CHECK(hk_run({"verify", "thm_2_1", "--k", "1,2"}).code == 2);
    CHECK(hk_run({"verify", "glaisher", "--a", "0.5"}).code == 2);
    CHECK(hk_run({"verify", "thm_2_1", "--variant", "p_from_0"}).code == 2);
    // a reading known to be wrong fails its residual check
    CHECK(hk_run({"verify", "cor_2_2", "--k", "1", "--N", "1", "--a", "0.5", "--variant", "printed"}).code == 1);
    CHECK(hk_run({"frobnicate"}).code == 2);
    CHECK(hk_run({}).code == 2);
}

TEST_CASE("scan rows and formats") {
    const Result csv = hk_run({"scan", "thm1", "--k", "1,2", "--m", "1,2", "--a", "0.5", "--b", "0.5", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("id,k,N_or_m,a,b,alpha,lhs,rhs,abs_res,rel_res,variant,bound\n", 0) == 0);
    CHECK(count_lines(csv.out) == 5);

    const Result js = hk_run({"scan", "thm1", "--k", "1,2", "--m", "1,2", "--a", "0.5", "--b", "0.5", "--format", "json"});
    REQUIRE(js.code == 0);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["schema"] == 1);
    REQUIRE(doc["rows"].size() == 4);
    for (const auto& row : doc["rows"]) CHECK(row["pass"] == true);
    CHECK(doc["rows"][0]["k"] == 1);
    CHECK(doc["rows"][3]["k"] == 2);

    CHECK(hk_run({"scan", "thm1", "--k", ""}).code == 2);
    CHECK(hk_run({"scan", "thm1", "--k", "1,x"}).code == 2);
}

TEST_CASE("scan all --quick is deterministic") {
    const Result a = hk_run({"scan", "all", "--quick", "--format", "csv"});
    const Result b = hk_run({"scan", "all", "--quick", "--format", "csv"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Result j1 = hk_run({"scan", "all", "--quick", "--format", "json"});
    const Result j2 = hk_run({"scan", "all", "--quick", "--format", "json"});
    CHECK(j1.out == j2.out);
    CHECK(nlohmann::json::parse(j1.out)["rows"].size() == nlohmann::json::parse(hk_run({"list", "--format", "json"}).out)["identities"].size());
}

TEST_CASE("kernel command") {
    const Result psi = hk_run({"kernel", "psi", "--x", "1", "--a", "1", "--k", "1"});
    CHECK(psi.code == 0);
    CHECK(psi.out.find("1.87093659866") != std::string::npos);
    const Result phi = hk_run({"kernel", "phi", "--x", "1", "--a", "1", "--k", "1", "--cross-check", "--format", "json"});
    REQUIRE(phi.code == 0);
    const auto doc = nlohmann::json::parse(phi.out);
    CHECK(std::abs(doc["difference"].get<double>()) <= 1e-6);
    CHECK(hk_run({"kernel", "psi", "--x", "-1", "--a", "1", "--k", "1"}).code == 2);
    CHECK(hk_run({"kernel", "omega", "--x", "1"}).code == 2);
}

TEST_CASE("errata") {
    const Result md = hk_run({"errata"});
    CHECK(md.code == 0);
    CHECK(md.out.find("UNRESOLVED") == std::string::npos);
    const Result js = hk_run({"errata", "--format", "json"});
    REQUIRE(js.code == 0);
    const auto doc = nlohmann::json::parse(js.out);
    int resolved = 0;
    for (const auto& e : doc["entries"]) {
        if (e["status"] == "RESOLVED") ++resolved;
        for (const auto& v : e["variants"]) CHECK(v["residuals"].size() == e["grid"].size());
    }
    CHECK(resolved >= 4);
}

TEST_CASE("list") {
    const Result r = hk_run({"list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("thm_2_1") != std::string::npos);
}
