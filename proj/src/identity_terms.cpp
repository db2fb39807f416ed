#include "identity_terms.hpp"

#include "hurwitz/dirichlet.hpp"
#include "hurwitz/weighted_sum.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <limits>

namespace hk::terms {

namespace {

const ZetaEvalConfig& cfg() {
    static const ZetaEvalConfig c = extended_zeta_config();
    return c;
}

constexpr double kSumTarget = 1e-11;

template <class T>
Sum kernel_sum_in(KernelFamily f, double ratio, bool invert, double a, int k, double b, int e, int m) {
    const T r = invert ? T(1) / T(ratio) : T(ratio);
    const T alpha = r * pi_v<T>();
    SumEstimate<T> s = kernel_weighted_sum<T>(f, alpha, T(a), k, T(b), e, m);
    return {static_cast<Real>(s.value), s.bound};
}

}  // namespace

Real pi() { return pi_v<Real>(); }
Real zeta(int s, Real a) { return hurwitz_zeta_int_t<Real>(s, a, cfg()); }
Real zeta_d(Real s, Real a) {
    // left of the critical line the head sum cancels like (M+a)^{1-s}; absorb that in 50 digits
    if (s < Real(0.5)) {
        static const ZetaEvalConfig wide{40, 16, 1e-32};
        return static_cast<Real>(hurwitz_zeta_sderiv_t<Mp50>(Mp50(s), Mp50(a), wide));
    }
    return hurwitz_zeta_sderiv_t<Real>(s, a, cfg());
}
Real bern(int n, Real x) { return bernoulli_polynomial_real<Real>(static_cast<unsigned>(n), x); }
Real bnum(int n) { return to_scalar<Real>(bernoulli_number(static_cast<unsigned>(n))); }
Real gamma0(Real a) { return stieltjes_gamma0_t<Real>(a); }
Real euler_gamma() { return boost::math::constants::euler<Real>(); }
std::complex<Real> digamma_c(std::complex<Real> z) { return digamma_t<Real>(z); }

double rounding(Real magnitude) {
    return 8.0 * static_cast<double>(std::numeric_limits<Real>::epsilon() * std::fabs(magnitude));
}

Sum kernel_sum(KernelFamily f, double ratio, bool invert, double a, int k, double b, int e, int m, double floor) {
    auto ok = [&](const Sum& s) {
        return s.bound <= kSumTarget * std::max(static_cast<double>(std::fabs(s.value)), floor);
    };
    if (e <= 0) {
        Sum s = kernel_sum_in<Extended>(f, ratio, invert, a, k, b, e, m);
        if (ok(s)) return s;
    }
    Sum s = kernel_sum_in<Quad>(f, ratio, invert, a, k, b, e, m);
    if (ok(s)) return s;
    return kernel_sum_in<Mp50>(f, ratio, invert, a, k, b, e, m);
}

Sum double_sum(int s, Real h, int t, Real g, Real d, Real c, int k) {
    const PowerTail outer_tail{Complex(1.0), static_cast<double>(h), 2 * k, Complex(1.0), s};
    const PowerTail inner_tail{Complex(-static_cast<double>(d / c)), static_cast<double>(g), 2 * k, Complex(-1.0), t};
    const WeightedSequence outer = power_sequence(0, outer_tail, "outer");
    const WeightedSequence inner = power_sequence(0, inner_tail, "inner");
    SeriesValue v = weighted_generating_sum(outer, inner, 0, 1e-15);
    return {static_cast<Real>(v.value.real()) / c, v.bound / static_cast<double>(c)};
}

Sum kernel_sum_route2(KernelFamily f, double ratio, bool invert, double a, int k, double b, int w) {
    const Real r = invert ? Real(1) / Real(ratio) : Real(ratio);
    const Real alpha = r * pi();
    const Real beta = pi() / r;
    const Real ak = std::pow(alpha, Real(k));
    const Real bk = std::pow(beta, Real(k));
    if (f == KernelFamily::Psi) {
        // (2a-1)/(2 alpha) zeta(w+1,b) - C zeta(w,b) + alpha^{k-1} double sum
        const Real lead = (2 * Real(a) - 1) / (2 * alpha) * zeta(w + 1, b);
        const Real cst = psi_constant<Real>(k) * zeta(w, b);
        Sum ds = double_sum(w - 2 * k + 1, b, 0, a, bk, ak, k);
        const Real pre = std::pow(alpha, Real(k - 1));
        const Real v = lead - cst + pre * ds.value;
        return {v, static_cast<double>(pre) * ds.bound + rounding(std::fabs(lead) + std::fabs(cst) + std::fabs(pre * ds.value))};
    }
    // ((log(alpha/pi) + gamma0(a)) zeta(w,b) - zeta'(w,b)) / pi - alpha^k / pi * double sum
    const Real lead = ((std::log(r) + gamma0(a)) * zeta(w, b) - zeta_d(w, b)) / pi();
    Sum ds = double_sum(w - 2 * k, b, 1, a, bk, ak, k);
    const Real pre = ak / pi();
    const Real v = lead - pre * ds.value;
    return {v, static_cast<double>(pre) * ds.bound + rounding(std::fabs(lead) + std::fabs(pre * ds.value))};
}

Sum exp_sum(int q, Real x) {
    Real acc = 0;
    Real mag = 0;
    for (long m = 1;; ++m) {
        const Real mm = static_cast<Real>(m);
        const Real term = std::pow(mm, Real(q)) / std::expm1(2 * x * mm);
        acc += term;
        mag += std::fabs(term);
        // past the peak of m^q e^{-2xm} the terms fall geometrically
        if (2 * x * mm > q && term < acc * 1e-24L) {
            const Real ratio = std::exp(-2 * x) * std::pow((mm + 1) / mm, Real(q));
            return {acc, static_cast<double>(term * ratio / (1 - ratio)) + rounding(mag)};
        }
        if (m > 100'000'000) throw Error(ErrorCode::ToleranceUnreachable, "exponential sum did not converge");
    }
}

Sum re_digamma_sum(Real lambda, int w) {
    const long M = std::max<long>(2, static_cast<long>(std::ceil(16 / lambda)));
    Real head = 0;
    Real mag = 0;
    for (long n = M - 1; n >= 1; --n) {
        const Real nn = static_cast<Real>(n);
        const Real term = digamma_c({0, nn * lambda}).real() / std::pow(nn, Real(w));
        head += term;
        mag += std::fabs(term);
    }
    // Re psi(iy) = log y + sum_j (-1)^{j+1} B_{2j} / (2j y^{2j}) up to O(e^{-2 pi y})
    const Real A = static_cast<Real>(M);
    Real tail = std::log(lambda) * zeta(w, A) - zeta_d(w, A);
    Real last = 0;
    for (int j = 1; j <= 30; ++j) {
        const Real c = ((j % 2) ? 1 : -1) * bnum(2 * j) / (2 * j);
        last = c * std::pow(lambda, Real(-2 * j)) * zeta(w + 2 * j, A);
        tail += last;
        if (std::fabs(last) < 1e-24L * std::fabs(tail)) break;
    }
    const double remainder = std::exp(-2 * std::numbers::pi * static_cast<double>(A * lambda));
    return {head + tail, rounding(mag + std::fabs(tail)) + static_cast<double>(std::fabs(last)) + remainder};
}

}  // namespace hk::terms
