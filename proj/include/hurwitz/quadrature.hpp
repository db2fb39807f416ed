#pragma once

#include "hurwitz/kernels.hpp"
#include "hurwitz/special_functions.hpp"

namespace hk {

// Mellin-side prefactor of the sine-type integral: 1/(2 sin) or 1/(2k sin).
enum class NormVariant { Factor1, Factor1OverK };

struct LineIntegralSpec {
    double c = 1.5;
    double T = 0.0;      // truncation height; 0 selects it from the decay bound
    double step = 0.05;  // initial trapezoid step, halved until converged
    KernelFamily family = KernelFamily::Psi;
    NormVariant norm = NormVariant::Factor1OverK;
    double budget = 1e-9;  // absolute error budget
};

struct QuadratureResult {
    Complex value;
    double error = 0.0;  // step-halving difference plus truncated-tail bound
    double T = 0.0;
    double step = 0.0;
    double tail_bound = 0.0;
    int nodes = 0;
};

void validate(const LineIntegralSpec& spec);

// Bound on 1/|cos(pi(s+k-1)/2k)| or 1/|sin(pi s/2k)| at |Im s| = t >= 1.
double decay_bound(KernelFamily family, int k, double t);

// Triangle-inequality bound on |zeta(sigma + it, a)| from the Euler-Maclaurin form.
double zeta_line_bound(double sigma, double t, double a);

QuadratureResult kernel_via_quadrature(const KernelParams& p, const LineIntegralSpec& spec);

const char* to_string(NormVariant v);

}  // namespace hk
