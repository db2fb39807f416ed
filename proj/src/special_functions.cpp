#include "hurwitz/special_functions.hpp"

#include "hurwitz/scalar.hpp"

#include <cmath>
#include <string>

namespace hk {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::PoleAt1: return "PoleAt1";
        case ErrorCode::NonconvergentConfig: return "NonconvergentConfig";
        case ErrorCode::PoleAtNonposInt: return "PoleAtNonposInt";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::ToleranceUnreachable: return "ToleranceUnreachable";
        case ErrorCode::DivergentAtOrder: return "DivergentAtOrder";
        case ErrorCode::OnPole: return "OnPole";
        case ErrorCode::VariantUnresolved: return "VariantUnresolved";
        case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
    }
    return "Unknown";
}

void validate(const ZetaEvalConfig& cfg) {
    if (cfg.em_terms < 2 || cfg.em_terms > kMaxEmTerms)
        throw Error(ErrorCode::InvalidParams, "em_terms must lie in [2, " + std::to_string(kMaxEmTerms) + "]");
    if (cfg.shift < 8) throw Error(ErrorCode::InvalidParams, "shift must be >= 8");
    if (!(cfg.target_abs_err > 0)) throw Error(ErrorCode::InvalidParams, "target_abs_err must be > 0");
}

Complex make_complex(double re, double im) {
    if (!std::isfinite(re) || !std::isfinite(im))
        throw Error(ErrorCode::InvalidParams, "complex components must be finite");
    return {re, im};
}

namespace {
// Below s = 1/2 the head sum cancels against (M+a)^{1-s}; carry it in Mp50.
constexpr double kWideBelow = 0.5;
const ZetaEvalConfig& wide_config() {
    static const ZetaEvalConfig c{40, 16, 1e-32};
    return c;
}
// Complex s keeps long double: only the real part drives the cancellation.
using WideC = std::complex<long double>;
}  // namespace

Complex hurwitz_zeta(Complex s, double a, const ZetaEvalConfig& cfg) {
    validate(cfg);
    if (s.real() < kWideBelow)
        return Complex(hurwitz_zeta_t<long double>(WideC(s), static_cast<long double>(a), extended_zeta_config()));
    return hurwitz_zeta_t<double>(s, a, cfg);
}

double hurwitz_zeta(double s, double a, const ZetaEvalConfig& cfg) {
    validate(cfg);
    if (s < kWideBelow) return static_cast<double>(hurwitz_zeta_t<Mp50>(Mp50(s), Mp50(a), wide_config()));
    return hurwitz_zeta_t<double>(s, a, cfg);
}

double hurwitz_zeta_neg_int(unsigned n, double a) { return hurwitz_zeta_neg_int_t<double>(n, a); }

Complex hurwitz_zeta_sderiv(Complex s, double a, const ZetaEvalConfig& cfg) {
    validate(cfg);
    if (s.real() < kWideBelow)
        return Complex(hurwitz_zeta_sderiv_t<long double>(WideC(s), static_cast<long double>(a), extended_zeta_config()));
    return hurwitz_zeta_sderiv_t<double>(s, a, cfg);
}

double hurwitz_zeta_sderiv(double s, double a, const ZetaEvalConfig& cfg) {
    validate(cfg);
    if (s < kWideBelow) return static_cast<double>(hurwitz_zeta_sderiv_t<Mp50>(Mp50(s), Mp50(a), wide_config()));
    return hurwitz_zeta_sderiv_t<double>(s, a, cfg);
}

Complex riemann_zeta(Complex s, const ZetaEvalConfig& cfg) { return hurwitz_zeta(s, 1.0, cfg); }
double riemann_zeta(double s, const ZetaEvalConfig& cfg) { return hurwitz_zeta(s, 1.0, cfg); }

Complex digamma(Complex z) {
    make_complex(z.real(), z.imag());
    return digamma_t<double>(z);
}

double digamma(double x) { return digamma_t<double>(x); }

double stieltjes_gamma0(double a) { return stieltjes_gamma0_t<double>(a); }

}  // namespace hk
