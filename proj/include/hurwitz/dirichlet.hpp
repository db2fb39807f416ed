#pragma once

#include "hurwitz/special_functions.hpp"

#include <functional>
#include <optional>
#include <string>

namespace hk {

// x_n = c (n+h)^e and a_n = w (n+h)^{-f} for every n >= base.
struct PowerTail {
    Complex c;
    double h = 0.0;
    int e = 1;
    Complex w{1.0, 0.0};
    int f = 0;
};

struct WeightedSequence {
    long base = 1;
    std::function<Complex(long)> zero;
    std::function<Complex(long)> weight;
    PowerTail tail;
    std::string name;
};

// Builds generator callbacks that agree with the tail law.
WeightedSequence power_sequence(long base, PowerTail tail, std::string name = {});

struct ConvolutionInstance {
    WeightedSequence left;   // x, a
    WeightedSequence right;  // y, b
    int order = 1;           // N; the convolution is evaluated at N+1
};

struct SeriesValue {
    Complex value;
    double bound = 0.0;
};

SeriesValue dirichlet_series(const WeightedSequence& seq, int N, double tol = 1e-15);
SeriesValue zeta_generating_fn(const WeightedSequence& seq, Complex z, double tol = 1e-15);

// sum_{k=1}^{N} zeta_y(k) zeta_x(N+1-k)
SeriesValue convolve(const ConvolutionInstance& inst, double tol = 1e-15);
// Three-fold convolution at N+1: sum over k1+k2+k3 = N+1, k_i >= 1.
SeriesValue convolve3(const WeightedSequence& s1, const WeightedSequence& s2, const WeightedSequence& s3, int N,
                      double tol = 1e-15);

// sum_n a_n psi_y(x_n) / x_n^{N+1}, outer tail removed by extrapolation.
SeriesValue weighted_generating_sum(const WeightedSequence& outer, const WeightedSequence& inner, int N,
                                    double tol = 1e-12);

struct TwoTermReport {
    Complex lhs;  // convolution
    Complex rhs;  // sum of the two generating-function series
    Complex left_part;
    Complex right_part;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double bound = 0.0;
};

TwoTermReport verify_two_term(const ConvolutionInstance& inst, double tol = 1e-12);

// Decay exponent p of n -> a_n psi_y(x_n)/x_n^{N+1}, and whether a log factor appears.
struct OuterDecay {
    double p;
    bool log_factor;
};
OuterDecay outer_decay(const PowerTail& outer, const PowerTail& inner, int N);

// Kernel instantiations: x_n = -(n+a)^{2k}/alpha^k and y_n = (n+b)^{2k}/beta^k, base 0.
enum class Instantiation { UnitWeights, ReciprocalWeights, MixedWeights };
ConvolutionInstance kernel_instance(Instantiation which, int k, int N, double a, double b, double alpha);

}  // namespace hk
