#pragma once

#include "hurwitz/accumulator.hpp"
#include "hurwitz/digamma.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/scalar.hpp"
#include "hurwitz/zeta.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hk {

struct KernelParams {
    double x = 1.0;
    double a = 1.0;
    int k = 1;
    double alpha = std::numbers::pi;  // pi means unscaled
};

struct TailPlan {
    long head_terms = 0;
    int geom_terms = 0;
    double bound = 0.0;      // certified absolute remainder of the truncated tail
    double magnitude = 0.0;  // size of the summed constituents; rounding scales with it
};

enum class KernelFamily { Psi, Phi };

void validate(const KernelParams& p);

inline constexpr long kMaxHeadTerms = 100'000'000;
inline constexpr int kMaxGeomTerms = 400;

template <class T>
T ipow(T x, int n) {
    T r(1);
    bool neg = n < 0;
    unsigned e = neg ? static_cast<unsigned>(-n) : static_cast<unsigned>(n);
    while (e) {
        if (e & 1u) r *= x;
        x *= x;
        e >>= 1;
    }
    return neg ? T(1) / r : r;
}

// 1/(2k cos(pi(k-1)/(2k))); exactly 1/2 for k = 1.
template <class T>
T psi_constant(int k) {
    using std::cos;
    if (k == 1) return T(0.5);
    const T pi = pi_v<T>();
    return T(1) / (T(2 * k) * cos(pi * T(k - 1) / T(2 * k)));
}

// x' = alpha x / pi, with alpha == pi taking the identity path.
template <class T>
T scaled_argument(T x, T alpha) {
    const T pi = pi_v<T>();
    return alpha == pi ? x : alpha * x / pi;
}

namespace detail {

template <class T>
long head_length(T x) {
    using std::ceil;
    T n = ceil(T(2) * x) + T(16);
    if (!(n <= T(kMaxHeadTerms)))
        throw Error(ErrorCode::ToleranceUnreachable, "kernel head length exceeds budget");
    return std::max<long>(16, static_cast<long>(n));
}

template <class T>
ZetaEvalConfig tail_zeta_config() {
    ZetaEvalConfig cfg = extended_zeta_config();
    cfg.target_abs_err = static_cast<double>(T(4) * eps_v<T>());
    return cfg;
}

// sum_{j>=0} (-1)^j r^{2k(j+1)} A^{s_j} zeta(s_j, A) with s_j = 2k(j+1) + extra,
// r = x/A < 1/2, stopped when a term drops below tol_scaled.
template <class T>
T alternating_tail(T r, T A, int k, int extra, T tol_scaled, TailPlan* plan) {
    const ZetaEvalConfig cfg = tail_zeta_config<T>();
    const T r2k = ipow(r, 2 * k);
    Accumulator<T> acc;
    T rp = r2k;
    for (int j = 0; j < kMaxGeomTerms; ++j) {
        const int s = 2 * k * (j + 1) + extra;
        T term = rp * hurwitz_zeta_scaled_t<T>(T(s), A, cfg);
        using std::abs;
        if (abs(term) < tol_scaled) {
            if (plan) {
                plan->geom_terms = j;
                plan->bound = static_cast<double>(abs(term));
            }
            return acc.value();
        }
        acc += (j % 2 == 0) ? term : -term;
        rp *= r2k;
    }
    throw Error(ErrorCode::ToleranceUnreachable, "geometric tail did not reach tolerance");
}

}  // namespace detail

// Psi(x,a;k) at an already scaled argument x.
template <class T>
T psi_series_t(T x, T a, int k, T tol, TailPlan* plan = nullptr) {
    const T pi = pi_v<T>();
    const long N0 = detail::head_length(x);
    Accumulator<T> head;
    for (long n = N0 - 1; n >= 0; --n) {
        T r = (T(n) + a) / x;
        head += T(1) / (x * (T(1) + ipow(r, 2 * k)));
    }
    const T A = T(N0) + a;
    // tail = (1/(pi x)) sum_j (-1)^j (x/A)^{2k(j+1)} A^{s} zeta(s, A)
    T tail = detail::alternating_tail<T>(x / A, A, k, 0, tol * pi * x, plan);
    const T lead = (T(2) * a - T(1)) / (T(2) * pi * x);
    if (plan) {
        using std::abs;
        plan->head_terms = N0;
        plan->bound /= static_cast<double>(pi * x);
        plan->magnitude = static_cast<double>(abs(lead) + psi_constant<T>(k) + head.magnitude() / pi);
    }
    return lead - psi_constant<T>(k) + (head.value() + tail / x) / pi;
}

// Phi(x,a;k) at an already scaled argument x.
template <class T>
T phi_series_t(T x, T a, int k, T tol, TailPlan* plan = nullptr) {
    using std::log;
    const T pi = pi_v<T>();
    const long N0 = detail::head_length(x);
    Accumulator<T> head;
    for (long n = N0 - 1; n >= 0; --n) {
        T u = T(n) + a;
        T r = u / x;
        head += T(1) / (u * (T(1) + ipow(r, 2 * k)));
    }
    const T A = T(N0) + a;
    // tail = (1/(pi A)) sum_j (-1)^j (x/A)^{2k(j+1)} A^{s} zeta(s, A), s = 2k(j+1)+1
    T tail = detail::alternating_tail<T>(x / A, A, k, 1, tol * pi * A, plan);
    const T lead = (log(x) + stieltjes_gamma0_t<T>(a)) / pi;
    if (plan) {
        using std::abs;
        plan->head_terms = N0;
        plan->bound /= static_cast<double>(pi * A);
        plan->magnitude = static_cast<double>(abs(lead) + head.magnitude() / pi);
    }
    return lead - (head.value() + tail / A) / pi;
}

template <class T>
T kernel_series_t(KernelFamily f, T x, T a, int k, T tol, TailPlan* plan = nullptr) {
    return f == KernelFamily::Psi ? psi_series_t<T>(x, a, k, tol, plan) : phi_series_t<T>(x, a, k, tol, plan);
}

// Large-x expansions: Psi(x) ~ sum_{p>=1} c_p x^{-1-2kp}, Phi(x) ~ sum_{p>=1} c_p x^{-2kp},
// with exponentially small remainders.
template <class T>
T asymptotic_coeff(KernelFamily f, int p, T a, int k) {
    const T pi = pi_v<T>();
    const T sign = (p % 2 == 0) ? T(1) : T(-1);
    if (f == KernelFamily::Psi) {
        const unsigned n = static_cast<unsigned>(2 * k * p + 1);
        return -sign * bernoulli_polynomial_real<T>(n, a) / (T(n) * pi);
    }
    const unsigned n = static_cast<unsigned>(2 * k * p);
    return sign * bernoulli_polynomial_real<T>(n, a) / (T(n) * pi);
}

inline int asymptotic_power(KernelFamily f, int p, int k) {
    return f == KernelFamily::Psi ? 1 + 2 * k * p : 2 * k * p;
}

double psi_kernel(const KernelParams& p, double tol = 1e-14, TailPlan* plan = nullptr);
double phi_kernel(const KernelParams& p, double tol = 1e-14, TailPlan* plan = nullptr);

// Relative-accuracy evaluation: starts in long double and climbs to 50 and 100 digits
// while the estimated cancellation error exceeds rel_tol * |value|.
struct KernelValue {
    double value = 0.0;
    double rel_err = 0.0;  // estimated relative error of the returned value
    int digits = 0;        // decimal digits of the working precision that was used
};
KernelValue kernel_relative(KernelFamily f, const KernelParams& p, double rel_tol = 1e-12);

double ramanujan_kernel_closed(double x);
double phi_closed_k1(double x);

}  // namespace hk
