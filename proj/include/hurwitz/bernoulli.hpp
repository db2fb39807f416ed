#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

namespace hk {

// Exact rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

Rational rational_div(const Rational& num, const Rational& den);  // throws DivisionByZero

Rational bernoulli_number(unsigned n);
// B_0..B_n in one locked read.
std::vector<Rational> bernoulli_numbers(unsigned n);
Rational bernoulli_polynomial(unsigned n, const Rational& x);
Rational binomial(unsigned n, unsigned k);

template <class T>
T to_scalar(const Rational& r) {
    return r.template convert_to<T>();
}

// Exact value of a finite binary float, peeled 32 mantissa bits at a time.
template <class T>
Rational exact_rational(T x) {
    using std::floor;
    using std::frexp;
    using std::ldexp;
    if (x == T(0)) return Rational(0);
    int e = 0;
    T m = frexp(x, &e);  // x = m 2^e, 1/2 <= |m| < 1
    const bool neg = m < 0;
    if (neg) m = -m;
    BigInt num(0);
    int bits = 0;
    while (m != T(0)) {
        m = ldexp(m, 32);
        T chunk = floor(m);
        m -= chunk;
        num = (num << 32) + BigInt(static_cast<std::uint64_t>(chunk));
        bits += 32;
    }
    if (neg) num = -num;
    const int shift = e - bits;
    if (shift >= 0) return Rational(num << shift);
    return Rational(num, BigInt(1) << (-shift));
}

// B_n(x) for binary-float x: Horner on the exact coefficients in exact
// arithmetic, rounded once.
template <class T>
T bernoulli_polynomial_real(unsigned n, T x) {
    return to_scalar<T>(bernoulli_polynomial(n, exact_rational(x)));
}

inline constexpr int kMaxEmTerms = 60;

// B_{2j}/(2j)! for j = 0..kMaxEmTerms.
template <class T>
const std::vector<T>& em_coefficients() {
    static const std::vector<T> coeffs = [] {
        std::vector<T> c;
        auto b = bernoulli_numbers(2 * kMaxEmTerms);
        Rational fact(1);
        for (int j = 0; j <= kMaxEmTerms; ++j) {
            if (j > 0) fact *= Rational((2 * j - 1) * (2 * j));
            c.push_back(to_scalar<T>(b[2 * j] / fact));
        }
        return c;
    }();
    return coeffs;
}

}  // namespace hk
