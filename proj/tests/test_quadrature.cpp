#include "hurwitz/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hk;

namespace {
constexpr double pi = std::numbers::pi;

LineIntegralSpec spec_for(KernelFamily f, NormVariant n = NormVariant::Factor1OverK) {
    LineIntegralSpec s;
    s.family = f;
    s.norm = n;
    return s;
}
}  // namespace

TEST_CASE("decay bound") {
    CHECK(decay_bound(KernelFamily::Psi, 1, 10) <= 4 * std::exp(-5 * pi) * (1 + 1e-12));
    CHECK(decay_bound(KernelFamily::Phi, 2, 20) <= 4 * std::exp(-5 * pi) * (1 + 1e-12));
    double prev = decay_bound(KernelFamily::Psi, 2, 1);
    for (double t = 2; t <= 200; t += 7) {
        const double d = decay_bound(KernelFamily::Psi, 2, t);
        CHECK(d < prev);
        prev = d;
    }
    // the bound holds against the actual reciprocal trig factors
    for (int k : {1, 2, 3})
        for (double t : {1.0, 3.0, 10.0, 25.0}) {
            const Complex s(1.5, t);
            const double cosf = 1 / std::abs(std::cos(pi * (s + double(k - 1)) / (2.0 * k)));
            const double sinf = 1 / std::abs(std::sin(pi * s / (2.0 * k)));
            CHECK(cosf <= decay_bound(KernelFamily::Psi, k, t));
            CHECK(sinf <= decay_bound(KernelFamily::Phi, k, t));
        }
}

TEST_CASE("cosine family at k = 1 against the closed form") {
    LineIntegralSpec s = spec_for(KernelFamily::Psi);
    s.T = 60;
    const QuadratureResult r1 = kernel_via_quadrature({1, 1, 1}, s);
    CHECK(std::abs(r1.value.real() - ramanujan_kernel_closed(1)) <= 1e-7);
    for (double x : {0.5, 1.0, 2.0}) {
        const QuadratureResult r = kernel_via_quadrature({x, 1, 1}, spec_for(KernelFamily::Psi));
        CHECK(std::abs(r.value.real() - ramanujan_kernel_closed(x)) <= 1e-6);
    }
    const QuadratureResult r2 = kernel_via_quadrature({2, 0.5, 2}, spec_for(KernelFamily::Psi));
    CHECK(std::abs(r2.value.real() - psi_kernel({2, 0.5, 2})) <= 1e-6);
}

TEST_CASE("sine family normalization has one surviving reading") {
    const double series = phi_kernel({1, 1, 2});
    const double d1 = std::abs(kernel_via_quadrature({1, 1, 2}, spec_for(KernelFamily::Phi, NormVariant::Factor1)).value.real() - series);
    const double dk = std::abs(kernel_via_quadrature({1, 1, 2}, spec_for(KernelFamily::Phi, NormVariant::Factor1OverK)).value.real() - series);
    CHECK((d1 <= 1e-6) != (dk <= 1e-6));
    CHECK(dk <= 1e-6);
    // at k = 1 the two readings coincide
    const double e1 = kernel_via_quadrature({1, 1, 1}, spec_for(KernelFamily::Phi, NormVariant::Factor1)).value.real();
    const double ek = kernel_via_quadrature({1, 1, 1}, spec_for(KernelFamily::Phi, NormVariant::Factor1OverK)).value.real();
    CHECK(std::abs(e1 - ek) <= 1e-12);
}

TEST_CASE("imaginary part and error estimate") {
    struct P { double x, a; int k; KernelFamily f; };
    for (P p : {P{1, 1, 1, KernelFamily::Psi}, P{0.7, 0.3, 2, KernelFamily::Psi}, P{2.5, 1.6, 1, KernelFamily::Phi},
                P{1.2, 0.8, 2, KernelFamily::Phi}}) {
        const QuadratureResult r = kernel_via_quadrature({p.x, p.a, p.k}, spec_for(p.f));
        CHECK(std::abs(r.value.imag()) <= 10 * r.error);
        CHECK(r.T >= 10);
        CHECK(r.step <= 0.25);
    }
}

TEST_CASE("step halving and longer lines stay within the estimates") {
    const KernelParams p{1.3, 0.6, 2};
    LineIntegralSpec s = spec_for(KernelFamily::Psi);
    const QuadratureResult r = kernel_via_quadrature(p, s);
    LineIntegralSpec finer = s;
    finer.T = r.T;
    finer.step = r.step / 2;
    const QuadratureResult rf = kernel_via_quadrature(p, finer);
    CHECK(std::abs(rf.value - r.value) <= r.error);

    LineIntegralSpec longer = s;
    longer.T = r.T + 10;
    longer.step = r.step;
    const QuadratureResult rl = kernel_via_quadrature(p, longer);
    CHECK(std::abs(rl.value - r.value) <= r.tail_bound + r.error);
}

TEST_CASE("invalid line specs") {
    LineIntegralSpec s;
    s.c = 1.0;
    CHECK_THROWS_AS(validate(s), Error);
    s = {};
    s.T = 5;
    CHECK_THROWS_AS(validate(s), Error);
    s = {};
    s.step = 0.5;
    CHECK_THROWS_AS(validate(s), Error);
    CHECK_THROWS_AS(kernel_via_quadrature({-1, 1, 1}, LineIntegralSpec{}), Error);
}
