#pragma once

#include "hurwitz/bernoulli.hpp"
#include "hurwitz/digamma.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/zeta.hpp"

#include <complex>

namespace hk {

using Complex = std::complex<double>;

// Rejects NaN and infinite components.
Complex make_complex(double re, double im = 0.0);

Complex hurwitz_zeta(Complex s, double a, const ZetaEvalConfig& cfg = {});
double hurwitz_zeta(double s, double a, const ZetaEvalConfig& cfg = {});
double hurwitz_zeta_neg_int(unsigned n, double a);
Complex hurwitz_zeta_sderiv(Complex s, double a, const ZetaEvalConfig& cfg = {});
double hurwitz_zeta_sderiv(double s, double a, const ZetaEvalConfig& cfg = {});
Complex riemann_zeta(Complex s, const ZetaEvalConfig& cfg = {});
double riemann_zeta(double s, const ZetaEvalConfig& cfg = {});

Complex digamma(Complex z);
double digamma(double x);
double stieltjes_gamma0(double a);

}  // namespace hk
