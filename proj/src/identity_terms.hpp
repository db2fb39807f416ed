#pragma once

#include "hurwitz/kernels.hpp"

#include <complex>

namespace hk::terms {

using Real = long double;

struct Sum {
    Real value = 0;
    double bound = 0.0;
};

Real pi();
Real zeta(int s, Real a);  // s <= 0 takes the exact Bernoulli route
Real zeta_d(Real s, Real a);
Real bern(int n, Real x);
Real bnum(int n);
Real gamma0(Real a);
Real euler_gamma();
std::complex<Real> digamma_c(std::complex<Real> z);

// Rounding estimate for a sum of terms with the given total magnitude.
double rounding(Real magnitude);

// sum_{n>=0} (n+b)^e [K_lambda(n+b, a; k) - first m terms of the large-x expansion],
// lambda = ratio (or 1/ratio when invert). Climbs long double -> float128 -> 50 digits until
// bound <= 1e-11 * max(|value|, floor).
Sum kernel_sum(KernelFamily f, double ratio, bool invert, double a, int k, double b, int e, int m, double floor);

// sum_n (n+h)^{-s} sum_i (i+g)^{-t} / (d (i+g)^{2k} + c (n+h)^{2k}) via the generating-function engine.
Sum double_sum(int s, Real h, int t, Real g, Real d, Real c, int k);

// sum_{n>=0} K_lambda(n+b, a; k) / (n+b)^w from the double-sum representation of the series.
Sum kernel_sum_route2(KernelFamily f, double ratio, bool invert, double a, int k, double b, int w);

// sum_{m>=1} m^q / (e^{2 x m} - 1)
Sum exp_sum(int q, Real x);

// sum_{n>=1} Re psi(i n lambda) / n^w, asymptotic tail through Hurwitz zeta values.
Sum re_digamma_sum(Real lambda, int w);

}  // namespace hk::terms
