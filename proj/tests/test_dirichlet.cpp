#include "hurwitz/dirichlet.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hk;

namespace {
constexpr double pi = std::numbers::pi;

WeightedSequence integers(int e) { return power_sequence(1, PowerTail{Complex(1.0), 0.0, e}, "n^e"); }

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidParams;
}
}  // namespace

TEST_CASE("dirichlet series instances") {
    CHECK(std::abs(dirichlet_series(integers(1), 2).value - pi * pi / 6) <= 1e-13);
    CHECK(std::abs(dirichlet_series(integers(2), 2).value - riemann_zeta(4.0)) <= 1e-13);

    for (int k : {1, 2})
        for (double a : {0.3, 1.0, 1.6})
            for (double alpha : {0.7, pi, 4.0})
                for (int q : {1, 2, 3}) {
                    const double beta = pi * pi / alpha;
                    const auto unit = kernel_instance(Instantiation::UnitWeights, k, 1, a, a, alpha);
                    const Complex xv = dirichlet_series(unit.left, q).value;
                    const double want = (q % 2 ? -1.0 : 1.0) * std::pow(alpha, k * q) * hurwitz_zeta(2.0 * k * q, a);
                    CHECK(std::abs(xv - want) <= 1e-12 * std::abs(want));

                    const auto recip = kernel_instance(Instantiation::ReciprocalWeights, k, 1, a, a, alpha);
                    const Complex yv = dirichlet_series(recip.right, q).value;
                    const double want_y = std::pow(beta, k * q) * hurwitz_zeta(2.0 * k * q + 1, a);
                    CHECK(std::abs(yv - want_y) <= 1e-12 * std::abs(want_y));
                }
}

TEST_CASE("zeta generating function") {
    CHECK(std::abs(zeta_generating_fn(integers(2), Complex(0.0)).value) == 0.0);
    // sum_{n>=1} -1/(n^2+1) = (1 - pi coth pi)/2
    const double want = (1 - pi / std::tanh(pi)) / 2;
    CHECK(std::abs(zeta_generating_fn(integers(2), Complex(-1.0)).value - want) <= 1e-12);
    CHECK(code_of([] { zeta_generating_fn(integers(2), Complex(4.0)); }) == ErrorCode::OnPole);
    CHECK(code_of([] { zeta_generating_fn(integers(2), Complex(9.0 + 1e-12)); }) == ErrorCode::OnPole);
}

TEST_CASE("convolution") {
    const auto sq = integers(2);
    const auto one = convolve({sq, sq, 1});
    CHECK(std::abs(one.value - riemann_zeta(2.0) * riemann_zeta(2.0)) <= 1e-13);
    const double z2 = riemann_zeta(2.0), z4 = riemann_zeta(4.0), z6 = riemann_zeta(6.0);
    CHECK(std::abs(convolve({sq, sq, 3}).value - (2 * z2 * z6 + z4 * z4)) <= 1e-12);
    CHECK(std::abs(convolve3(sq, sq, sq, 2).value - z2 * z2 * z2) <= 1e-12);

    // k = 1, N = 1, a = b = 1, alpha = beta = pi: zeta_y(1) zeta_x(1) = -pi zeta(2) * pi zeta(2)
    const auto inst = kernel_instance(Instantiation::UnitWeights, 1, 1, 1, 1, pi);
    CHECK(std::abs(convolve(inst).value + pi * pi * z2 * z2) <= 1e-11);
}

TEST_CASE("two-term identity is symmetric in its factors") {
    for (Instantiation w : {Instantiation::UnitWeights, Instantiation::ReciprocalWeights, Instantiation::MixedWeights}) {
        auto inst = kernel_instance(w, 1, 2, 0.4, 1.3, 2.0);
        const Complex l1 = verify_two_term(inst).lhs;
        std::swap(inst.left, inst.right);
        const Complex l2 = verify_two_term(inst).lhs;
        CHECK(std::abs(l1 - l2) <= 1e-12 * std::max(1.0, std::abs(l1)));
    }
}

TEST_CASE("monotone damping") {
    const auto s = power_sequence(1, PowerTail{Complex(1.0), 1.0, 1, Complex(1.0), 1}, "n+1");
    for (int N = 2; N <= 10; ++N) CHECK(std::abs(dirichlet_series(s, N + 2).value) <= std::abs(dirichlet_series(s, N).value));
}

TEST_CASE("divergence and invalid input") {
    CHECK(code_of([] { dirichlet_series(integers(1), 1); }) == ErrorCode::DivergentAtOrder);
    CHECK(code_of([] { kernel_instance(Instantiation::UnitWeights, 0, 1, 1, 1, pi); }) == ErrorCode::InvalidParams);
    CHECK(code_of([] { kernel_instance(Instantiation::UnitWeights, 1, 1, -1, 1, pi); }) == ErrorCode::InvalidParams);
}

TEST_CASE("kernel instantiations satisfy the two-term identity") {
    for (Instantiation w : {Instantiation::UnitWeights, Instantiation::ReciprocalWeights, Instantiation::MixedWeights}) {
        const TwoTermReport r = verify_two_term(kernel_instance(w, 1, 2, 1, 1, pi));
        CHECK(r.abs_residual <= 1e-8);
        for (auto [k, N, a, b, alpha] : {std::tuple{1, 1, 0.5, 0.8, 2.0}, std::tuple{2, 1, 0.3, 1.4, 1.2},
                                         std::tuple{1, 3, 1.7, 0.6, 5.0}}) {
            const TwoTermReport q = verify_two_term(kernel_instance(w, k, N, a, b, alpha));
            CHECK(q.rel_residual <= 1e-8);
            CHECK(q.abs_residual <= std::max(q.bound, 1e-8 * std::max(1.0, std::abs(q.lhs))));
        }
    }
}
