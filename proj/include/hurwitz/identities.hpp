#pragma once

#include "hurwitz/errors.hpp"

#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hk {

// alpha is carried as alpha/pi so that alpha = pi stays exact; beta = pi^2/alpha.
struct CaseParams {
    int k = 1;
    int order = 1;  // N, m, n or p depending on the identity
    double a = 1.0;
    double b = 1.0;
    double alpha_ratio = 1.0;
    double x = 1.0;  // kernel argument, used by the normalization check only

    double alpha() const { return alpha_ratio * std::numbers::pi; }
    double beta() const { return std::numbers::pi / alpha_ratio; }
};

struct IdentityCase {
    std::string id;
    CaseParams params;
    std::string variant;  // empty selects the registry default
};

struct IdentityReport {
    IdentityCase icase;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double bound = 0.0;  // combined truncation and rounding estimate of both sides
    double imag = 0.0;   // leftover imaginary part where a side is assembled from complex terms
    double tol = 0.0;
    std::string variant;
    bool pass = false;
    std::string note;  // set when a side could not be evaluated
};

// Parameter slots an identity reads; the CLI validates against these.
enum ParamMask : unsigned {
    UsesK = 1u << 0,
    UsesOrder = 1u << 1,
    UsesA = 1u << 2,
    UsesB = 1u << 3,
    UsesAlpha = 1u << 4,
    UsesX = 1u << 5,
};

struct Sides {
    long double lhs = 0;
    long double rhs = 0;
    double bound = 0.0;
    double imag = 0.0;
};

struct IdentityInfo {
    std::string id;
    std::string summary;
    std::string order_name;  // "N", "m", "n", "p" or empty
    unsigned params = 0;
    int min_order = 1;
    int max_order = 3;
    int max_k = 3;
    std::vector<std::string> variants;  // first entry is the printed reading
    std::string default_variant;
    std::string ambiguity;  // nonempty when the printed form admits several readings
    std::function<Sides(const CaseParams&, const std::string&)> evaluate;
    std::function<double(const CaseParams&)> tolerance;
    CaseParams quick;
    std::vector<CaseParams> grid;             // standard verification grid
    std::vector<CaseParams> resolution_grid;  // grid that separates the readings
};

const std::vector<IdentityInfo>& identity_registry();
const IdentityInfo& find_identity(std::string_view id);  // throws InvalidParams for unknown ids

// Checks ranges and domain constraints; throws InvalidParams with a user-facing message.
void validate_case(const IdentityInfo& info, const CaseParams& p);

IdentityReport evaluate_identity(const IdentityCase& c, std::optional<double> tol = std::nullopt);

struct VariantEvidence {
    std::string variant;
    std::vector<double> residuals;  // relative, infinity where a side diverges
    double max_residual = 0.0;
    double min_residual = 0.0;
};

struct VariantResolution {
    std::string id;
    std::string ambiguity;
    std::string winner;  // empty when unresolved
    bool resolved = false;
    double separation = 0.0;  // min residual of the losers over max residual of the winner
    double tol = 0.0;
    std::vector<CaseParams> grid;
    std::vector<VariantEvidence> evidence;
};

inline constexpr double kRequiredSeparation = 1e3;

// Evaluates every reading on the grid (the registry resolution grid when empty).
VariantResolution compare_variants(std::string_view id, const std::vector<CaseParams>& grid = {});
// As compare_variants; throws VariantUnresolved when no reading wins with the required separation.
VariantResolution resolve_variant(std::string_view id, const std::vector<CaseParams>& grid = {});

// Independent left-hand side evaluation by kernel sums (route 1) and by Dirichlet
// generating-function double sums (route 2).
struct RouteComparison {
    double route1 = 0.0;
    double route2 = 0.0;
    double bound1 = 0.0;
    double bound2 = 0.0;
    double difference = 0.0;
    bool agree = false;
};

RouteComparison compare_routes(std::string_view id, const CaseParams& p);

}  // namespace hk
