#pragma once

#include "hurwitz/kernels.hpp"

#include <cmath>
#include <vector>

namespace hk {

template <class T>
struct SumEstimate {
    T value;
    double bound;  // truncation plus rounding estimate, absolute
};

// sum_{n>=0} (n+b)^e [K(x_n, a; k) - sum_{p=1}^{m} c_p x_n^{-d_p}],  x_n = alpha (n+b) / pi.
// The head runs until the exponentially small remainder of the large-x expansion is
// negligible; the rest is sum_{p>m} c_p lambda^{-d_p} zeta(d_p - e, M + b). When that
// asymptotic tail turns before reaching eps, the smallest term is returned in the bound.
template <class T>
SumEstimate<T> kernel_weighted_sum(KernelFamily f, T alpha, T a, int k, T b, int e, int m) {
    using std::abs;
    using std::log;
    using std::pow;
    const T pi = pi_v<T>();
    const T lambda = alpha / pi;
    const double eps = static_cast<double>(eps_v<T>());
    if (m < 0) throw Error(ErrorCode::InvalidParams, "subtraction count must be >= 0");
    if (asymptotic_power(f, m + 1, k) - e <= 1)
        throw Error(ErrorCode::DivergentAtOrder, "kernel-weighted sum diverges");

    // Switch point: exp(-2 pi x s_k) (x/lambda)^{max(e,0)+2} below eps / 1e3.
    const double sk = std::sin(std::numbers::pi / (2.0 * k));
    const double lam = static_cast<double>(lambda);
    const double grow = std::max(e, 0) + 2;
    double xs = 4.0;
    for (int it = 0; it < 30; ++it) {
        double next = (std::log(1e3 / eps) + grow * std::log(std::max(xs / lam, 1.0))) / (2 * std::numbers::pi * sk);
        if (std::abs(next - xs) < 1e-6) break;
        xs = std::max(next, 4.0);
    }
    const double bd = static_cast<double>(b);
    const long M = std::max<long>(0, static_cast<long>(std::ceil(xs / lam - bd)));

    std::vector<T> coeff(m + 1);
    for (int p = 1; p <= m; ++p) coeff[p] = asymptotic_coeff<T>(f, p, a, k);

    Accumulator<T> acc;
    double bound = 0.0;
    for (long n = M - 1; n >= 0; --n) {
        const T u = T(n) + b;
        const T x = scaled_argument(u, alpha);
        TailPlan plan;
        T v = kernel_series_t<T>(f, x, a, k, eps_v<T>(), &plan);
        double mag = plan.magnitude;
        for (int p = 1; p <= m; ++p) {
            T c = coeff[p] * ipow(x, -asymptotic_power(f, p, k));
            v -= c;
            mag += static_cast<double>(abs(c));
        }
        const T w = ipow(u, e);
        acc += w * v;
        bound += static_cast<double>(abs(w)) * (plan.bound + 16 * eps * mag);
    }

    // Tail beyond M through Hurwitz zeta values.
    const T A = T(M) + b;
    const ZetaEvalConfig cfg = detail::tail_zeta_config<T>();
    T prev = T(0);
    double last = 0.0;
    for (int p = m + 1; p < m + 400; ++p) {
        const int d = asymptotic_power(f, p, k);
        T c = asymptotic_coeff<T>(f, p, a, k);
        T term = c * pow(lambda, T(-d)) * hurwitz_zeta_t<T>(T(d - e), A, cfg);
        acc += term;
        last = static_cast<double>(abs(term));
        const double scale = std::max(static_cast<double>(acc.magnitude()), 1e-300);
        if (last < eps * 1e-2 * scale) break;
        // past the smallest term: stop there and charge it to the bound, callers climb precision
        if (p > m + 2 && abs(term) > abs(prev) && abs(prev) > T(0)) {
            acc += -term;
            last = static_cast<double>(abs(prev));
            break;
        }
        prev = term;
    }
    // exponentially small remainder of the expansion past the switch point
    const double remainder = std::exp(-2 * std::numbers::pi * sk * xs) * std::pow(std::max(xs / lam, 1.0), grow) / (1 - std::exp(-2 * std::numbers::pi * sk * lam));
    bound += last + remainder + eps * static_cast<double>(acc.magnitude());
    return {acc.value(), bound};
}

}  // namespace hk
