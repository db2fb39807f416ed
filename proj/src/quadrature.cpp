#include "hurwitz/quadrature.hpp"

#include "hurwitz/accumulator.hpp"

#include <cmath>
#include <numbers>

namespace hk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxHalvings = 7;
constexpr double kMaxHeight = 2000.0;

}  // namespace

const char* to_string(NormVariant v) { return v == NormVariant::Factor1 ? "factor_1" : "factor_1_over_k"; }

void validate(const LineIntegralSpec& spec) {
    if (!(spec.c > 1)) throw Error(ErrorCode::InvalidParams, "abscissa c must be > 1");
    if (spec.T != 0.0 && !(spec.T >= 10)) throw Error(ErrorCode::InvalidParams, "truncation height must be >= 10");
    if (!(spec.step > 0) || spec.step > 0.25) throw Error(ErrorCode::InvalidParams, "step must be in (0, 0.25]");
    if (!(spec.budget > 0)) throw Error(ErrorCode::InvalidParams, "budget must be > 0");
}

double decay_bound(KernelFamily, int k, double t) {
    if (k < 1) throw Error(ErrorCode::InvalidParams, "k must be >= 1");
    if (!(std::abs(t) >= 1)) throw Error(ErrorCode::InvalidParams, "|t| must be >= 1");
    return 4.0 * std::exp(-kPi * std::abs(t) / (2.0 * k));
}

double zeta_line_bound(double sigma, double t, double a) {
    const double at = std::abs(t);
    const long M = std::max<long>(16, static_cast<long>(std::ceil(at)));
    double head = 0.0;
    for (long n = 0; n < M; ++n) head += std::pow(n + a, -sigma);
    const double A = M + a;
    const double s_abs = std::hypot(sigma, t);
    const double pole = std::pow(A, 1 - sigma) / std::hypot(sigma - 1, t);
    // first correction term (s) B_2/2 A^{-s-1}, doubled to cover the remainder
    const double em = 2.0 * s_abs / 12.0 * std::pow(A, -sigma - 1);
    return head + pole + 0.5 * std::pow(A, -sigma) + em;
}

namespace {

struct Integrand {
    KernelFamily family;
    double x;
    double a;
    int k;
    double c;
    double norm;  // 2k or 2 (or 2k) in the denominator

    Complex operator()(double t) const {
        const Complex s(c, t);
        const Complex z = hurwitz_zeta(Complex(1.0) - s, a, ZetaEvalConfig{10, 16, 1e-17});
        const Complex xs = std::exp(-s * std::log(x));
        Complex trig;
        if (family == KernelFamily::Psi)
            trig = std::cos(kPi * (s + Complex(k - 1.0)) / (2.0 * k));
        else
            trig = std::sin(kPi * s / (2.0 * k));
        return z * xs / (norm * trig);
    }
};

double tail_estimate(const Integrand& f, double T) {
    // (1/2pi) * 2 * int_T^inf |zeta| x^{-c} decay / norm dt, with |zeta| bounded at a
    // height where the exponential has dropped by e^2 and the integral in closed form.
    const double rate = kPi / (2.0 * f.k);
    const double zb = zeta_line_bound(1 - f.c, T + 2.0 / rate, f.a);
    const double lead = zb * std::pow(f.x, -f.c) * decay_bound(f.family, f.k, T) / std::abs(f.norm);
    return lead / (kPi * rate) * 2.0;
}

}  // namespace

QuadratureResult kernel_via_quadrature(const KernelParams& p, const LineIntegralSpec& spec) {
    validate(p);
    validate(spec);
    const double x = scaled_argument(p.x, p.alpha);
    double norm = 2.0 * p.k;
    if (spec.family == KernelFamily::Phi && spec.norm == NormVariant::Factor1) norm = 2.0;
    const Integrand f{spec.family, x, p.a, p.k, spec.c, norm};

    QuadratureResult r;
    double T = spec.T;
    if (T == 0.0) {
        T = 10.0;
        while (tail_estimate(f, T) > 0.1 * spec.budget) {
            T += 5.0;
            if (T > kMaxHeight) throw Error(ErrorCode::QuadratureNotConverged, "truncation height exceeds budget");
        }
    }
    r.T = T;
    r.tail_bound = tail_estimate(f, T);

    // Trapezoid on [-T, T]; each halving only evaluates the new midpoints.
    double h = spec.step;
    long n = static_cast<long>(std::ceil(2 * T / h));
    h = 2 * T / static_cast<double>(n);
    Accumulator<Complex> sum;
    sum += 0.5 * (f(-T) + f(T));
    for (long i = 1; i < n; ++i) sum += f(-T + i * h);
    int nodes = static_cast<int>(n + 1);
    Complex prev = sum.value() * h / (2 * kPi);
    for (int halving = 1; halving <= kMaxHalvings; ++halving) {
        for (long i = 0; i < n; ++i) sum += f(-T + (i + 0.5) * h);
        nodes += static_cast<int>(n);
        n *= 2;
        h /= 2;
        const Complex cur = sum.value() * h / (2 * kPi);
        const double diff = std::abs(cur - prev);
        if (diff + r.tail_bound <= spec.budget) {
            r.value = cur;
            r.error = diff + r.tail_bound;
            r.step = h;
            r.nodes = nodes;
            return r;
        }
        prev = cur;
    }
    throw Error(ErrorCode::QuadratureNotConverged, "trapezoid rule did not converge within the halving budget");
}

}  // namespace hk
