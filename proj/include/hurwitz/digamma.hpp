#pragma once

#include "hurwitz/bernoulli.hpp"
#include "hurwitz/errors.hpp"

#include <cmath>
#include <complex>
#include <algorithm>
#include <limits>

namespace hk {

namespace detail {

template <class T>
struct DigammaPlan {
    T threshold;
    int terms;
};

template <class T>
DigammaPlan<T> digamma_plan() {
    if constexpr (std::numeric_limits<T>::digits <= 53)
        return {T(12), 8};
    else if constexpr (std::numeric_limits<T>::digits <= 64)
        return {T(20), 14};
    else
        return {T(std::max(20, std::numeric_limits<T>::digits10)), 20};
}

// B_{2j}/(2j) for the asymptotic series.
template <class T>
const std::vector<T>& digamma_coefficients() {
    static const std::vector<T> c = [] {
        std::vector<T> v;
        auto b = bernoulli_numbers(40);
        for (int j = 0; j <= 20; ++j) v.push_back(j == 0 ? T(0) : to_scalar<T>(b[2 * j] / Rational(2 * j)));
        return v;
    }();
    return c;
}

template <class T>
bool near_nonpos_int(T re, T im) {
    using std::abs;
    using std::round;
    if (re > T(0.5)) return false;
    T r = round(re);
    return abs(re - r) < T(1e-10) && abs(im) < T(1e-10);
}

}  // namespace detail

// Upward recurrence to Re z >= threshold, then log z - 1/(2z) - sum B_{2j}/(2j z^{2j}).
template <class T>
std::complex<T> digamma_t(std::complex<T> z) {
    if (detail::near_nonpos_int(z.real(), z.imag()))
        throw Error(ErrorCode::PoleAtNonposInt, "digamma at a non-positive integer");
    const auto plan = detail::digamma_plan<T>();
    const auto& c = detail::digamma_coefficients<T>();
    std::complex<T> shift(0);
    while (z.real() < plan.threshold) {
        shift -= T(1) / z;
        z += T(1);
    }
    std::complex<T> inv2 = T(1) / (z * z);
    std::complex<T> pw = inv2;
    std::complex<T> series(0);
    for (int j = 1; j <= plan.terms; ++j) {
        series += c[j] * pw;
        pw *= inv2;
    }
    return shift + std::log(z) - T(0.5) / z - series;
}

template <class T>
T digamma_t(T x) {
    using std::log;
    if (detail::near_nonpos_int(x, T(0)))
        throw Error(ErrorCode::PoleAtNonposInt, "digamma at a non-positive integer");
    const auto plan = detail::digamma_plan<T>();
    const auto& c = detail::digamma_coefficients<T>();
    T shift(0);
    while (x < plan.threshold) {
        shift -= T(1) / x;
        x += T(1);
    }
    T inv2 = T(1) / (x * x);
    T pw = inv2;
    T series(0);
    for (int j = 1; j <= plan.terms; ++j) {
        series += c[j] * pw;
        pw *= inv2;
    }
    return shift + log(x) - T(0.5) / x - series;
}

// gamma_0(a) = -psi(a).
template <class T>
T stieltjes_gamma0_t(T a) {
    if (!(a > T(0))) throw Error(ErrorCode::InvalidParams, "gamma0 needs a > 0");
    return -digamma_t<T>(a);
}

}  // namespace hk
