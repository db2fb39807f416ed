#include "hurwitz/dirichlet.hpp"

#include "hurwitz/accumulator.hpp"
#include "hurwitz/extrapolate.hpp"
#include "hurwitz/kernels.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace hk {

namespace {

constexpr double kPoleGuard = 1e-10;
constexpr int kMaxGenTerms = 400;

double cabs(Complex z) { return std::abs(z); }

ZetaEvalConfig series_config() { return {30, 16, 1e-17}; }

void check_sequence(const WeightedSequence& seq) {
    if (!seq.zero || !seq.weight) throw Error(ErrorCode::InvalidParams, "sequence callbacks missing");
    if (seq.tail.e < 1) throw Error(ErrorCode::InvalidParams, "tail growth exponent must be >= 1");
    if (cabs(seq.tail.c) == 0.0) throw Error(ErrorCode::InvalidParams, "tail scale must be nonzero");
    if (!(seq.tail.h + static_cast<double>(seq.base) > 0))
        throw Error(ErrorCode::InvalidParams, "tail offset must keep n+h > 0");
}

// w c^{-N} zeta(eN+f, n0+h), computed as w (c A^e)^{-N} A^{-f} A^s zeta(s, A).
Complex power_tail_series(const PowerTail& t, long n0, int N) {
    const double A = static_cast<double>(n0) + t.h;
    const int s = t.e * N + t.f;
    if (s <= 1) throw Error(ErrorCode::DivergentAtOrder, "Dirichlet series diverges at this order");
    const double scaled = hurwitz_zeta_scaled_t<double>(s, A, series_config());
    Complex ratio = 1.0 / (t.c * std::pow(A, t.e));
    return t.w * std::pow(ratio, N) * std::pow(A, -t.f) * scaled;
}

}  // namespace

WeightedSequence power_sequence(long base, PowerTail tail, std::string name) {
    WeightedSequence s;
    s.base = base;
    s.tail = tail;
    s.name = std::move(name);
    s.zero = [tail](long n) { return tail.c * std::pow(static_cast<double>(n) + tail.h, tail.e); };
    s.weight = [tail](long n) { return tail.w * std::pow(static_cast<double>(n) + tail.h, -tail.f); };
    return s;
}

SeriesValue dirichlet_series(const WeightedSequence& seq, int N, double tol) {
    check_sequence(seq);
    if (N < 1) throw Error(ErrorCode::InvalidParams, "order must be >= 1");
    if (seq.tail.e * N + seq.tail.f <= 1) throw Error(ErrorCode::DivergentAtOrder, "Dirichlet series diverges at this order");
    constexpr long head = 32;
    Accumulator<Complex> acc;
    for (long n = seq.base; n < seq.base + head; ++n) acc += seq.weight(n) / std::pow(seq.zero(n), N);
    Complex tail = power_tail_series(seq.tail, seq.base + head, N);
    acc += tail;
    double bound = cabs(tail) * 1e-16 + acc.magnitude() * 4e-16;
    (void)tol;
    return {acc.value(), bound};
}

SeriesValue zeta_generating_fn(const WeightedSequence& seq, Complex z, double tol) {
    check_sequence(seq);
    if (z == Complex(0.0)) return {Complex(0.0), 0.0};
    const PowerTail& t = seq.tail;
    // First index with |x_n| >= 4|z|, so the geometric ratio is <= 1/4.
    const double need = std::pow(4.0 * cabs(z) / cabs(t.c), 1.0 / t.e) - t.h;
    const long n0 = std::max(seq.base + 1, static_cast<long>(std::ceil(need)));
    Accumulator<Complex> acc;
    for (long n = n0 - 1; n >= seq.base; --n) {
        Complex xn = seq.zero(n);
        if (cabs(xn - z) < kPoleGuard * cabs(xn)) throw Error(ErrorCode::OnPole, "z coincides with a zero of the sequence");
        acc += seq.weight(n) * z / (xn - z);
    }
    // sum_{i>=1} z^i w c^{-i} zeta(e i + f, n0 + h)
    const double A = static_cast<double>(n0) + t.h;
    const Complex q = z / (t.c * std::pow(A, t.e));
    const double Af = std::pow(A, -t.f);
    Complex qi = q;
    double scale = std::max(cabs(acc.value()), 1e-300);
    double last = 0.0;
    for (int i = 1; i <= kMaxGenTerms; ++i) {
        const int s = t.e * i + t.f;
        if (s <= 1) throw Error(ErrorCode::DivergentAtOrder, "generating function tail diverges");
        Complex term = t.w * qi * Af * hurwitz_zeta_scaled_t<double>(s, A, series_config());
        acc += term;
        scale = std::max(scale, cabs(acc.value()));
        last = cabs(term);
        if (last < tol * 1e-3 * scale) {
            // remaining geometric terms are bounded by last * |q| / (1 - |q|)
            double bound = last * cabs(q) / (1 - cabs(q)) + acc.magnitude() * 4e-16;
            return {acc.value(), bound};
        }
        qi *= q;
    }
    throw Error(ErrorCode::ToleranceUnreachable, "generating function tail did not converge");
}

SeriesValue convolve(const ConvolutionInstance& inst, double tol) {
    if (inst.order < 1) throw Error(ErrorCode::InvalidParams, "order must be >= 1");
    const int N = inst.order;
    Accumulator<Complex> acc;
    double bound = 0.0;
    for (int k = 1; k <= N; ++k) {
        SeriesValue y = dirichlet_series(inst.right, k, tol);
        SeriesValue x = dirichlet_series(inst.left, N + 1 - k, tol);
        acc += y.value * x.value;
        bound += y.bound * cabs(x.value) + x.bound * cabs(y.value);
    }
    return {acc.value(), bound + acc.magnitude() * 4e-16};
}

SeriesValue convolve3(const WeightedSequence& s1, const WeightedSequence& s2, const WeightedSequence& s3, int N,
                      double tol) {
    if (N < 2) throw Error(ErrorCode::InvalidParams, "three-fold convolution needs N >= 2");
    Accumulator<Complex> acc;
    double bound = 0.0;
    for (int k1 = 1; k1 <= N; ++k1) {
        for (int k2 = 1; k1 + k2 <= N; ++k2) {
            const int k3 = N + 1 - k1 - k2;
            SeriesValue v1 = dirichlet_series(s1, k1, tol);
            SeriesValue v2 = dirichlet_series(s2, k2, tol);
            SeriesValue v3 = dirichlet_series(s3, k3, tol);
            Complex prod = v1.value * v2.value * v3.value;
            acc += prod;
            bound += cabs(prod) * (v1.bound / std::max(cabs(v1.value), 1e-300) + v2.bound / std::max(cabs(v2.value), 1e-300) +
                                   v3.bound / std::max(cabs(v3.value), 1e-300));
        }
    }
    return {acc.value(), bound + acc.magnitude() * 4e-16};
}

OuterDecay outer_decay(const PowerTail& outer, const PowerTail& inner, int N) {
    // |psi_y(z)| grows like |z|^{(1-f_y)/e_y} for f_y < 1, like log|z| for f_y = 1.
    double growth = inner.f < 1 ? static_cast<double>(1 - inner.f) / inner.e : 0.0;
    double p = outer.e * (N + 1) + outer.f - outer.e * growth;
    return {p, inner.f == 1};
}

SeriesValue weighted_generating_sum(const WeightedSequence& outer, const WeightedSequence& inner, int N, double tol) {
    check_sequence(outer);
    check_sequence(inner);
    const OuterDecay decay = outer_decay(outer.tail, inner.tail, N);
    if (!(decay.p > 1)) throw Error(ErrorCode::DivergentAtOrder, "outer series does not converge");
    constexpr int kTerms = 3;
    const int samples = 1 + kTerms * (decay.log_factor ? 2 : 1);
    const long M0 = 160;
    const long step = 40;
    std::vector<long> marks;
    for (int j = 0; j < samples; ++j) marks.push_back(outer.base + M0 + step * j);

    Accumulator<long double> re, im;
    std::vector<long double> S_re, S_im, u;
    double inner_bound = 0.0;
    size_t next = 0;
    for (long n = outer.base; next < marks.size(); ++n) {
        const Complex xn = outer.zero(n);
        SeriesValue g = zeta_generating_fn(inner, xn, tol);
        const Complex term = outer.weight(n) * g.value / std::pow(xn, N + 1);
        re += term.real();
        im += term.imag();
        inner_bound += cabs(outer.weight(n) / std::pow(xn, N + 1)) * g.bound;
        if (n + 1 == marks[next]) {
            S_re.push_back(re.value());
            S_im.push_back(im.value());
            u.push_back(static_cast<long double>(n + 1) + outer.tail.h);
            ++next;
        }
    }
    const long double r_full = extrapolate_limit(u, S_re, decay.p, decay.log_factor, kTerms);
    const long double i_full = extrapolate_limit(u, S_im, decay.p, decay.log_factor, kTerms);
    // Spread against the fit with one fewer term estimates the extrapolation error.
    std::vector<long double> u2(u.begin(), u.end() - (decay.log_factor ? 2 : 1));
    std::vector<long double> r2(S_re.begin(), S_re.end() - (decay.log_factor ? 2 : 1));
    std::vector<long double> i2(S_im.begin(), S_im.end() - (decay.log_factor ? 2 : 1));
    const long double r_less = extrapolate_limit(u2, r2, decay.p, decay.log_factor, kTerms - 1);
    const long double i_less = extrapolate_limit(u2, i2, decay.p, decay.log_factor, kTerms - 1);
    const double spread = static_cast<double>(std::hypot(r_full - r_less, i_full - i_less));
    const double rounding = static_cast<double>(re.magnitude() + im.magnitude()) * 1e-15;
    return {Complex(static_cast<double>(r_full), static_cast<double>(i_full)), spread + inner_bound + rounding};
}

TwoTermReport verify_two_term(const ConvolutionInstance& inst, double tol) {
    TwoTermReport rep;
    SeriesValue conv = convolve(inst, tol);
    SeriesValue A = weighted_generating_sum(inst.left, inst.right, inst.order, tol);
    SeriesValue B = weighted_generating_sum(inst.right, inst.left, inst.order, tol);
    rep.lhs = conv.value;
    rep.left_part = A.value;
    rep.right_part = B.value;
    rep.rhs = A.value + B.value;
    rep.abs_residual = cabs(rep.lhs - rep.rhs);
    rep.rel_residual = rep.abs_residual / std::max({cabs(rep.lhs), cabs(rep.rhs), 1.0});
    rep.bound = conv.bound + A.bound + B.bound;
    return rep;
}

ConvolutionInstance kernel_instance(Instantiation which, int k, int N, double a, double b, double alpha) {
    if (k < 1 || N < 1) throw Error(ErrorCode::InvalidParams, "k and N must be >= 1");
    if (!(a > 0) || !(b > 0) || !(alpha > 0)) throw Error(ErrorCode::InvalidParams, "a, b, alpha must be > 0");
    const double pi = std::numbers::pi;
    const double beta = pi * pi / alpha;
    PowerTail x{Complex(-std::pow(alpha, -k), 0.0), a, 2 * k, Complex(1.0), 0};
    PowerTail y{Complex(std::pow(beta, -k), 0.0), b, 2 * k, Complex(1.0), 0};
    switch (which) {
        case Instantiation::UnitWeights: break;
        case Instantiation::ReciprocalWeights:
            x.f = 1;
            y.f = 1;
            break;
        case Instantiation::MixedWeights: x.f = 1; break;
    }
    return {power_sequence(0, x, "x"), power_sequence(0, y, "y"), N};
}

}  // namespace hk
