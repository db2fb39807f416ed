#pragma once

#include "hurwitz/accumulator.hpp"
#include "hurwitz/bernoulli.hpp"
#include "hurwitz/errors.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace hk {

struct ZetaEvalConfig {
    int em_terms = 10;
    int shift = 16;
    // Met when the first dropped Euler-Maclaurin term is below
    // target_abs_err * max(|zeta|, |(M+a)^{1-s}/(s-1)|).
    double target_abs_err = 1e-16;
};

void validate(const ZetaEvalConfig& cfg);

// Config for extended-precision callers: more correction terms, tighter target.
inline ZetaEvalConfig extended_zeta_config() { return {40, 16, 2e-19}; }

inline constexpr double kPoleRadius = 1e-8;
inline constexpr long kMaxShift = 1L << 20;

namespace detail {

template <class T>
T magnitude(T x) {
    using std::abs;
    return abs(x);
}
template <class T>
T magnitude(const std::complex<T>& z) {
    return std::abs(z);
}

template <class T, class S>
void check_zeta_args(const S& s, T a) {
    if (!(a > T(0))) throw Error(ErrorCode::InvalidParams, "hurwitz zeta needs a > 0");
    if (magnitude<T>(s - S(T(1))) < T(kPoleRadius)) throw Error(ErrorCode::PoleAt1, "|s-1| < 1e-8");
}

// Euler-Maclaurin for zeta(s,a) (deriv=false) or d/ds zeta(s,a) (deriv=true).
// S is T or std::complex<T>. A nonzero log_scale returns exp(s*log_scale)
// times the value, which keeps A^s zeta(s,A) finite for large s and A.
template <class T, class S>
S euler_maclaurin(const S& s, T a, const ZetaEvalConfig& cfg, bool deriv, T log_scale = T(0)) {
    using std::exp;
    using std::log;
    check_zeta_args<T>(s, a);
    const auto& c = em_coefficients<T>();
    const T target = T(cfg.target_abs_err);
    const S one(T(1));
    T prev_dropped = std::numeric_limits<T>::infinity();
    for (long M = cfg.shift; M <= kMaxShift; M *= 2) {
        Accumulator<S> head;
        for (long n = 0; n < M; ++n) {
            T L = log(T(n) + a);
            S t = exp(-s * S(L - log_scale));
            head += deriv ? S(-L) * t : t;
        }
        const T X = T(M) + a;
        const T L = log(X);
        const S Xs = exp(-s * S(L - log_scale));  // X^{-s}, scaled
        const S inv = one / (s - one);
        S t0, t1;
        if (deriv) {
            t0 = S(X) * Xs * (S(-L) * inv - inv * inv);
            t1 = S(-L / 2) * Xs;
        } else {
            t0 = S(X) * Xs * inv;
            t1 = Xs / S(T(2));
        }
        const T scale_base = magnitude<T>(t0);
        S total = head.value() + t0 + t1;
        S poch = s;
        S dpoch = one;
        S pw = Xs / S(X);  // X^{-s-1}
        const S invX2(T(1) / (X * X));
        T dropped = std::numeric_limits<T>::infinity();
        T last = std::numeric_limits<T>::infinity();
        bool ok = false;
        for (int j = 1; j <= cfg.em_terms + 1; ++j) {
            S term = S(c[j]) * (deriv ? (dpoch - poch * S(L)) * pw : poch * pw);
            T mag = magnitude<T>(term);
            T scale = std::max(magnitude<T>(total), scale_base);
            if (mag <= target * scale) {
                dropped = mag;
                ok = true;
                break;
            }
            if (j == cfg.em_terms + 1 || mag > last) {
                dropped = mag;
                break;
            }
            last = mag;
            total += term;
            S f = (s + S(T(2 * j - 1))) * (s + S(T(2 * j)));
            dpoch = dpoch * f + poch * (s + s + S(T(4 * j - 1)));
            poch *= f;
            pw *= invX2;
        }
        if (ok) return total;
        if (!(dropped < prev_dropped)) break;
        prev_dropped = dropped;
    }
    throw Error(ErrorCode::NonconvergentConfig, "Euler-Maclaurin target not reachable with shift <= 2^20");
}

}  // namespace detail

template <class T>
T hurwitz_zeta_t(T s, T a, const ZetaEvalConfig& cfg = {}) {
    return detail::euler_maclaurin<T, T>(s, a, cfg, false);
}

// A^s zeta(s, A).
template <class T>
T hurwitz_zeta_scaled_t(T s, T A, const ZetaEvalConfig& cfg = {}) {
    using std::log;
    return detail::euler_maclaurin<T, T>(s, A, cfg, false, log(A));
}

template <class T>
T hurwitz_zeta_sderiv_t(T s, T a, const ZetaEvalConfig& cfg = {}) {
    return detail::euler_maclaurin<T, T>(s, a, cfg, true);
}

template <class T>
std::complex<T> hurwitz_zeta_t(const std::complex<T>& s, T a, const ZetaEvalConfig& cfg = {}) {
    return detail::euler_maclaurin<T, std::complex<T>>(s, a, cfg, false);
}

template <class T>
std::complex<T> hurwitz_zeta_sderiv_t(const std::complex<T>& s, T a, const ZetaEvalConfig& cfg = {}) {
    return detail::euler_maclaurin<T, std::complex<T>>(s, a, cfg, true);
}

// zeta(-n,a) = -B_{n+1}(a)/(n+1); also covers zeta(0,a) = 1/2 - a.
template <class T>
T hurwitz_zeta_neg_int_t(unsigned n, T a) {
    if (!(a > T(0))) throw Error(ErrorCode::InvalidParams, "hurwitz zeta needs a > 0");
    return -bernoulli_polynomial_real<T>(n + 1, a) / T(n + 1);
}

// zeta(s,a) for integer s, routing s <= 0 to the exact Bernoulli form.
template <class T>
T hurwitz_zeta_int_t(int s, T a, const ZetaEvalConfig& cfg = {}) {
    if (s <= 0) return hurwitz_zeta_neg_int_t<T>(static_cast<unsigned>(-s), a);
    return hurwitz_zeta_t<T>(T(s), a, cfg);
}

}  // namespace hk
