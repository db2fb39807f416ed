#include "hurwitz/kernels.hpp"

#include "hurwitz/special_functions.hpp"

#include <cmath>

namespace hk {

void validate(const KernelParams& p) {
    if (!(p.x > 0) || !std::isfinite(p.x)) throw Error(ErrorCode::InvalidParams, "x must be > 0");
    if (!(p.a > 0) || !std::isfinite(p.a)) throw Error(ErrorCode::InvalidParams, "a must be > 0");
    if (p.k < 1) throw Error(ErrorCode::InvalidParams, "k must be >= 1");
    if (!(p.alpha > 0) || !std::isfinite(p.alpha)) throw Error(ErrorCode::InvalidParams, "alpha must be > 0");
}

namespace {
void check_tol(double tol) {
    if (!(tol >= 1e-14)) throw Error(ErrorCode::InvalidParams, "tol must be >= 1e-14");
}
}  // namespace

double psi_kernel(const KernelParams& p, double tol, TailPlan* plan) {
    validate(p);
    check_tol(tol);
    return psi_series_t<double>(scaled_argument(p.x, p.alpha), p.a, p.k, tol, plan);
}

double phi_kernel(const KernelParams& p, double tol, TailPlan* plan) {
    validate(p);
    check_tol(tol);
    return phi_series_t<double>(scaled_argument(p.x, p.alpha), p.a, p.k, tol, plan);
}

namespace {

template <class T>
bool try_relative(KernelFamily f, const KernelParams& p, double rel_tol, KernelValue& out) {
    using std::abs;
    const T x = scaled_argument(T(p.x), T(p.alpha));
    TailPlan plan;
    const T v = kernel_series_t<T>(f, x, T(p.a), p.k, eps_v<T>(), &plan);
    const double av = static_cast<double>(abs(v));
    // rounding grows with the constituent size and the head length
    const double rounding = static_cast<double>(eps_v<T>()) * plan.magnitude * 16.0 * std::log2(plan.head_terms + 2.0);
    const double err = rounding + plan.bound;
    out.value = static_cast<double>(v);
    out.rel_err = av > 0 ? err / av : std::numeric_limits<double>::infinity();
    out.digits = std::numeric_limits<T>::digits10;
    return out.rel_err <= rel_tol;
}

}  // namespace

KernelValue kernel_relative(KernelFamily f, const KernelParams& p, double rel_tol) {
    validate(p);
    if (!(rel_tol > 0)) throw Error(ErrorCode::InvalidParams, "rel_tol must be > 0");
    KernelValue out;
    if (try_relative<Extended>(f, p, rel_tol, out)) return out;
    if (try_relative<Mp50>(f, p, rel_tol, out)) return out;
    if (try_relative<Mp100>(f, p, rel_tol, out)) return out;
    throw Error(ErrorCode::ToleranceUnreachable, "kernel cancellation exceeds 100-digit working precision");
}

double ramanujan_kernel_closed(double x) {
    if (!(x > 0)) throw Error(ErrorCode::InvalidParams, "x must be > 0");
    return 1.0 / std::expm1(2 * std::numbers::pi * x);
}

double phi_closed_k1(double x) {
    if (!(x > 0)) throw Error(ErrorCode::InvalidParams, "x must be > 0");
    Complex sum = digamma(Complex(0, x)) + digamma(Complex(0, -x));
    return (std::log(x) - 0.5 * sum.real()) / std::numbers::pi;
}

}  // namespace hk
