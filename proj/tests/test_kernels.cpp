#include "hurwitz/kernels.hpp"
#include "hurwitz/special_functions.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hk;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double grid[] = {0.1, 0.25, 0.5, 1, 2, 5, 10};

// Direct partial sums over n < N, compensated in long double.
long double psi_brute(double x, double a, int k, long N) {
    long double s = 0, c = 0;
    const long double X = std::pow(static_cast<long double>(x), 2 * k);
    const long double num = std::pow(static_cast<long double>(x), 2 * k - 1);
    for (long n = N - 1; n >= 0; --n) {
        long double y = num / (X + std::pow(n + static_cast<long double>(a), 2 * k)) - c;
        long double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return (2 * a - 1) / (2 * pi * x) - psi_constant<double>(k) + s / std::numbers::pi_v<long double>;
}

long double phi_series_brute(double x, double a, int k, long N) {
    long double s = 0, c = 0;
    const long double X = std::pow(static_cast<long double>(x), 2 * k);
    for (long n = N - 1; n >= 0; --n) {
        const long double u = n + static_cast<long double>(a);
        long double y = 1 / (u * (std::pow(u, 2 * k) + X)) - c;
        long double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

// x^{2k-1} zeta(2k, N + a) / pi bounds what the Psi partial sum leaves out.
double psi_brute_tail(double x, double a, int k, long N) {
    return std::pow(x, 2 * k - 1) * std::pow(N + a, 1 - 2 * k) * (1 + 2 * k / (N + a)) / ((2 * k - 1) * pi);
}
}  // namespace

TEST_CASE("psi at k = a = 1 is the Ramanujan kernel") {
    // 1/(e^{2 pi} - 1) and 1/(e^{pi/5} - 1) from a 30-digit evaluation
    CHECK(std::abs(psi_kernel({1, 1, 1}) - 0.0018709365986606441) <= 1e-14);
    CHECK(std::abs(ramanujan_kernel_closed(1) - 0.0018709365986606441) <= 1e-18);
    CHECK(std::abs(ramanujan_kernel_closed(0.1) - 1.1435680009516884) <= 1e-15);
    for (double x : grid) {
        const double want = 1 / std::expm1(2 * pi * x);
        CHECK(std::abs(ramanujan_kernel_closed(x) - want) <= 1e-16 * want);
        CHECK(std::abs(psi_kernel({x, 1, 1}) - want) <= 1e-10 * (1 + want));
    }
    for (double x = 1; x <= 8; x += 0.5) CHECK(ramanujan_kernel_closed(x) < 2 * std::exp(-2 * pi * x));
}

TEST_CASE("phi at k = a = 1 against the digamma closed form") {
    CHECK(std::abs(phi_closed_k1(1) + 0.0946503206224770 / pi) <= 1e-15);
    for (double x : grid) {
        const Complex s = digamma(Complex(0, x)) + digamma(Complex(0, -x));
        CHECK(std::abs(s.imag()) <= 1e-12);
        CHECK(std::abs(phi_kernel({x, 1, 1}) - phi_closed_k1(x)) <= 1e-9);
    }
    CHECK(std::abs(phi_closed_k1(10) - phi_kernel({10, 1, 1})) <= 1e-9);
}

TEST_CASE("brute force partial sums") {
    const long N = 10'000'000;
    SUBCASE("psi(0.5, 0.5; 2)") {
        const double v = psi_kernel({0.5, 0.5, 2});
        CHECK(std::abs(v - static_cast<double>(psi_brute(0.5, 0.5, 2, N))) <= 1e-9);
    }
    SUBCASE("phi(1, 1; 1) and phi(2, 1; 1)") {
        for (double x : {1.0, 2.0}) {
            const double brute = (std::log(x) + std::numbers::egamma) / pi - x * x / pi * static_cast<double>(phi_series_brute(x, 1, 1, N));
            // dropped tail is about x^2 / (2 pi N^2)
            CHECK(std::abs(phi_kernel({x, 1, 1}) - brute) <= 1e-9);
        }
    }
}

TEST_CASE("small x limit") {
    for (double x : {1e-4, 1e-6, 1e-8}) CHECK(std::abs(psi_kernel({x, 0.75, 2}) * x - 0.25 / pi) <= 2 * x);
}

TEST_CASE("scaling contract") {
    for (double alpha : {0.3, 1.0, 2.0, 7.5})
        for (int k : {1, 2, 3}) {
            const double x = 0.8, a = 0.4;
            CHECK(psi_kernel({x, a, k, alpha}) == psi_kernel({alpha * x / pi, a, k}));
            CHECK(phi_kernel({x, a, k, alpha}) == phi_kernel({alpha * x / pi, a, k}));
        }
    CHECK(scaled_argument(1.25, pi) == 1.25);
}

TEST_CASE("tail certificate against brute force") {
    const long N = 2'000'000;
    struct P { double x, a; int k; };
    for (P p : {P{0.7, 0.3, 2}, P{3.1, 1.9, 2}, P{1.4, 0.65, 3}, P{12.0, 0.2, 2}, P{0.9, 2.5, 1}}) {
        TailPlan plan;
        const double v = psi_kernel({p.x, p.a, p.k}, 1e-14, &plan);
        CHECK(plan.head_terms >= 16);
        CHECK(std::pow(p.x / (plan.head_terms + p.a), 2 * p.k) < 0.5);
        CHECK(plan.bound < 1e-14);
        const double rounding = 8 * std::numeric_limits<double>::epsilon() * plan.magnitude;
        CHECK(std::abs(v - static_cast<double>(psi_brute(p.x, p.a, p.k, N))) <=
              plan.bound + psi_brute_tail(p.x, p.a, p.k, N) + rounding);
    }
}

TEST_CASE("series terms are positive and the constant term is exact") {
    for (int k = 1; k <= 5; ++k)
        for (double x : {0.01, 1.0, 50.0})
            for (double u : {0.2, 1.0, 30.0}) CHECK(std::pow(x, 2 * k - 1) / (std::pow(x, 2 * k) + std::pow(u, 2 * k)) > 0);
    CHECK(psi_constant<double>(1) == 0.5);
    CHECK(std::abs(psi_constant<double>(2) - 1 / (4 * std::cos(pi / 4))) <= 1e-16);
    CHECK(std::abs(psi_constant<double>(3) - 1 / (6 * std::cos(pi / 3))) <= 1e-16);
}

TEST_CASE("invalid kernel parameters") {
    CHECK_THROWS_AS(psi_kernel({-1, 1, 1}), Error);
    CHECK_THROWS_AS(psi_kernel({0, 1, 1}), Error);
    CHECK_THROWS_AS(phi_kernel({1, 0, 1}), Error);
    CHECK_THROWS_AS(phi_kernel({1, 1, 0}), Error);
    CHECK_THROWS_AS(psi_kernel({1, 1, 1, -2}), Error);
    CHECK_THROWS_AS(psi_kernel({1, 1, 1}, 1e-16), Error);
    CHECK_THROWS_AS(ramanujan_kernel_closed(0), Error);
    try {
        psi_kernel({1, 1, 0});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidParams);
    }
}

TEST_CASE("relative accuracy where the series cancels") {
    for (double x : {0.5, 3.0, 6.0, 10.0}) {
        const KernelValue v = kernel_relative(KernelFamily::Psi, {x, 1, 1});
        const double want = 1 / std::expm1(2 * pi * x);
        CHECK(std::abs(v.value - want) <= 1e-10 * want);
        CHECK(v.rel_err <= 1e-12);
    }
    const KernelValue v = kernel_relative(KernelFamily::Psi, {10, 1, 1});
    CHECK(v.digits > 18);
    CHECK_THROWS_AS(kernel_relative(KernelFamily::Phi, {1, 1, 1}, 0), Error);
}
