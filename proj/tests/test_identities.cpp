#include "hurwitz/identities.hpp"
#include "hurwitz/special_functions.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

using namespace hk;

namespace {
constexpr double pi = std::numbers::pi;

IdentityReport run(const std::string& id, int k, int order, double a, double b, double ratio = 1.0) {
    return evaluate_identity({id, CaseParams{k, order, a, b, ratio}, ""});
}

// sum_{m>=1} m^{-e} / (e^{2 t m} - 1) by direct exponentials
double exp_sum(double t, int e) {
    double s = 0;
    for (int m = 60; m >= 1; --m) s += std::pow(m, -e) / std::expm1(2 * t * m);
    return s;
}

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

TEST_CASE("registry") {
    const auto& reg = identity_registry();
    CHECK(reg.size() >= 20);
    for (const auto& info : reg) {
        CHECK(!info.variants.empty());
        CHECK(std::find(info.variants.begin(), info.variants.end(), info.default_variant) != info.variants.end());
        CHECK(info.ambiguity.empty() == (info.variants.size() == 1));
    }
    CHECK(code_of([] { find_identity("no_such_identity"); }) == ErrorCode::InvalidParams);
}

TEST_CASE("documented examples") {
    struct Ex { const char* id; int k, order; double a, b, ratio, tol; };
    const Ex examples[] = {
        {"thm_2_1", 1, 1, 1, 1, 1, 1e-9},           {"thm_2_1", 2, 1, 0.5, 0.5, 1, 1e-8},
        {"thm_2_1", 1, 2, 1.0 / 3, 2.0 / 3, 2, 1e-8}, {"cor_2_2", 1, 1, 1, 1, 1, 1e-9},
        {"cor_2_2", 2, 2, 0.7, 0.7, 1, 1e-8},        {"k1_digamma", 1, 1, 1, 1, 1, 1e-8},
        {"k1_digamma", 1, 2, 0.5, 0.25, 1, 1e-8},    {"thm1", 1, 2, 1, 1, 1, 1e-9},
        {"thm1", 1, 1, 1, 1, 1, 1e-10},              {"thm1", 2, 1, 0.5, 0.5, 1, 1e-8},
        {"prop", 1, 2, 1, 1, 1, 1e-10},              {"prop", 1, 1, 1, 1, 2, 1e-10},
        {"prop", 2, 2, 1, 1, 1, 1e-8},               {"thm2", 1, 1, 1, 1, 1, 1e-7},
        {"thm2", 1, 2, 0.5, 0.5, 1, 1e-7},           {"thm2", 2, 1, 1, 1, 1, 1e-7},
        {"odd_zeta", 1, 2, 1, 1, 1, 1e-7},           {"odd_zeta", 1, 3, 0.5, 0.5, 1, 1e-7},
        {"odd_zeta", 2, 2, 1, 1, 1, 1e-7},           {"kernel_relation", 1, 1, 1, 1, 1, 1e-7},
        {"kernel_relation", 1, 2, 0.75, 0.25, 1, 1e-7}, {"kernel_relation", 2, 1, 1, 1, 1, 1e-7},
        {"classical_ramanujan", 1, 1, 1, 1, 1, 1e-12}, {"classical_ramanujan", 1, 2, 1, 1, 1, 1e-12},
        {"classical_ramanujan", 1, 1, 1, 1, 2, 1e-11},
    };
    for (const Ex& e : examples) {
        CAPTURE(e.id);
        CAPTURE(e.k);
        CAPTURE(e.order);
        const IdentityReport r = run(e.id, e.k, e.order, e.a, e.b, e.ratio);
        CHECK(r.pass);
        CHECK(r.rel_residual <= e.tol);
        // residuals are formed before the sides are rounded to double
        CHECK(std::abs(r.abs_residual - std::abs(r.lhs - r.rhs)) <= 4e-16 * std::max({std::abs(r.lhs), std::abs(r.rhs), 1e-300}));
        CHECK(r.rel_residual == doctest::Approx(r.abs_residual / std::max({std::abs(r.lhs), std::abs(r.rhs), 1.0})));
    }
}

TEST_CASE("closed values") {
    // sum n^5/(e^{2 pi n} - 1) = B_6 / 12 = 1/504
    CHECK(std::abs(run("eq_R", 1, 1, 1, 1).lhs - 1.0 / 504) <= 1e-15);
    CHECK(std::abs(run("glaisher", 1, 1, 1, 1).lhs - 1.0 / 504) <= 1e-15);
    // zeta(3) = 7 pi^3 / 180 - 2 sum n^{-3}/(e^{2 pi n} - 1)
    CHECK(std::abs(riemann_zeta(3.0) - (7 * pi * pi * pi / 180 - 2 * exp_sum(pi, 3))) <= 1e-14);
}

TEST_CASE("k1 digamma right side is real") {
    for (auto [N, a, b] : {std::tuple{1, 1.0, 1.0}, std::tuple{2, 0.5, 0.25}, std::tuple{3, 0.75, 1.0 / 3}})
        CHECK(std::abs(run("k1_digamma", 1, N, a, b).imag) <= 1e-10);
}

TEST_CASE("thm_2_1 at a = b = 1 against Ramanujan's exponential sums") {
    for (double ratio : {0.5, 1.0, 2.0})
        for (int N : {1, 2, 3}) {
            const double al = ratio * pi, be = pi / ratio;
            const double want = std::pow(be, N) * exp_sum(al, 2 * N + 1) - (N % 2 ? -1.0 : 1.0) * std::pow(al, N) * exp_sum(be, 2 * N + 1);
            const IdentityReport t = run("thm_2_1", 1, N, 1, 1, ratio);
            CHECK(std::abs(t.lhs - want) <= 1e-10 * std::max(1.0, std::abs(want)));
            const IdentityReport c = run("classical_ramanujan", 1, N, 1, 1, ratio);
            CHECK(c.pass);
            CHECK(t.pass);
        }
}

TEST_CASE("thm_2_1 under alpha and beta exchange") {
    for (int N : {1, 2, 3})
        for (double a : {0.5, 1.0, 1.0 / 3}) {
            const IdentityReport r = run("thm_2_1", 1, N, a, a, 2.0);
            const IdentityReport s = run("thm_2_1", 1, N, a, a, 0.5);
            // swapping gives lhs' = -(-1)^N lhs
            const double sign = N % 2 ? -1.0 : 1.0;
            CHECK(std::abs(s.lhs + sign * r.lhs) <= 1e-12 * std::max(1.0, std::abs(r.lhs)));
            CHECK(std::abs(s.abs_residual - r.abs_residual) <= 1e-12 * std::max(1.0, std::abs(r.lhs)));
        }
}

TEST_CASE("variant resolution") {
    const std::map<std::string, std::string> winners = {
        {"thm_2_1_substitute", "printed"}, {"cor_2_2", "thm21_sign"},       {"riemann_cor", "thm21_sign"},
        {"thm1", "corrected"},             {"thm2", "deriv_at_0"},          {"odd_zeta", "exponent_2km1"},
        {"herglotz", "B_eq_2alpha"},       {"eqtransform_2", "corrected"},  {"atul_odd_even", "from_n1"},
        {"eqtransfrom_1", "line_difference"}, {"phi_normalization", "factor_1_over_k"},
    };
    for (const auto& [id, want] : winners) {
        CAPTURE(id);
        const VariantResolution r = resolve_variant(id);
        CHECK(r.resolved);
        CHECK(r.winner == want);
        CHECK(r.separation >= kRequiredSeparation);
        CHECK(find_identity(id).default_variant == want);
    }
    CHECK(code_of([] { resolve_variant("glaisher"); }) == ErrorCode::InvalidParams);
    // m = 1 makes both herglotz sides vanish, so no reading can separate
    const std::vector<CaseParams> flat = {CaseParams{1, 1, 1, 1, 0.5}, CaseParams{1, 1, 1, 1, 2.0}};
    CHECK(code_of([&] { resolve_variant("herglotz", flat); }) == ErrorCode::VariantUnresolved);
    CHECK_FALSE(compare_variants("herglotz", flat).resolved);
}

TEST_CASE("route equivalence") {
    for (const char* id : {"thm_2_1", "odd_zeta", "kernel_relation"})
        for (CaseParams p : {CaseParams{1, 1, 1, 1, 1}, CaseParams{1, 2, 0.25, 0.75, 2}, CaseParams{2, 1, 0.5, 1.0 / 3, 0.5}}) {
            CAPTURE(id);
            const RouteComparison r = compare_routes(id, p);
            CHECK(r.agree);
            CHECK(r.difference <= r.bound1 + r.bound2);
        }
}

TEST_CASE("case validation") {
    const IdentityInfo& info = find_identity("thm_2_1");
    CHECK(code_of([&] { validate_case(info, CaseParams{0, 1, 1, 1, 1}); }) == ErrorCode::InvalidParams);
    CHECK(code_of([&] { validate_case(info, CaseParams{1, 1, -1, 1, 1}); }) == ErrorCode::InvalidParams);
    CHECK(code_of([&] { validate_case(info, CaseParams{1, 1, 1, 1, 0}); }) == ErrorCode::InvalidParams);
    CHECK(code_of([] { evaluate_identity({"thm_2_1", CaseParams{1, 1, 1, 1, 1}, "no_such_variant"}); }) == ErrorCode::InvalidParams);
}

TEST_CASE("every registry grid case passes") {
    for (const auto& info : identity_registry()) {
        CAPTURE(info.id);
        const IdentityReport q = evaluate_identity({info.id, info.quick, ""});
        CHECK(q.pass);
    }
}
