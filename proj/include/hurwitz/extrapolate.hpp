#pragma once

#include <vector>

namespace hk {

// Fits S(M) = S_inf - sum_{i<terms} (d_i + g_i log u) u^{-(p-1)-i} to the partial sums S at
// u = M + h and returns S_inf. Needs 1 + terms*(with_log ? 2 : 1) samples.
long double extrapolate_limit(const std::vector<long double>& u, const std::vector<long double>& S, double p,
                              bool with_log, int terms);

struct Extrapolated {
    long double value;
    double spread;  // difference to the fit with one fewer term
};

// Partial sums of f(n) for n >= base sampled at M0, M0 + step, ...; the summand decays like
// (n+h)^{-p} (times log when with_log).
template <class F>
Extrapolated extrapolate_series(F&& f, long base, double h, double p, bool with_log, int terms = 3, long M0 = 160,
                                long step = 40);

}  // namespace hk

#include <cmath>

namespace hk {

template <class F>
Extrapolated extrapolate_series(F&& f, long base, double h, double p, bool with_log, int terms, long M0, long step) {
    const int per = with_log ? 2 : 1;
    const int samples = 1 + terms * per;
    std::vector<long double> u, S;
    long double acc = 0, comp = 0;
    long next = base + M0;
    for (long n = base; static_cast<int>(S.size()) < samples; ++n) {
        // Neumaier step
        const long double v = f(n);
        const long double t = acc + v;
        comp += std::fabs(acc) >= std::fabs(v) ? (acc - t) + v : (v - t) + acc;
        acc = t;
        if (n + 1 == next) {
            S.push_back(acc + comp);
            u.push_back(static_cast<long double>(n + 1) + h);
            next += step;
        }
    }
    const long double full = extrapolate_limit(u, S, p, with_log, terms);
    std::vector<long double> u2(u.begin(), u.end() - per), S2(S.begin(), S.end() - per);
    const long double less = extrapolate_limit(u2, S2, p, with_log, terms - 1);
    return {full, static_cast<double>(std::fabs(full - less))};
}

}  // namespace hk
