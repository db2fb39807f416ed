#include "hurwitz/extrapolate.hpp"

#include "hurwitz/errors.hpp"

#include <cmath>
#include <utility>

namespace hk {

namespace {

std::vector<long double> solve(std::vector<std::vector<long double>> m, std::vector<long double> rhs) {
    const size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        std::swap(rhs[col], rhs[piv]);
        if (m[col][col] == 0) throw Error(ErrorCode::DivisionByZero, "singular extrapolation system");
        for (size_t r = col + 1; r < n; ++r) {
            const long double f = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<long double> x(n);
    for (size_t i = n; i-- > 0;) {
        long double s = rhs[i];
        for (size_t c = i + 1; c < n; ++c) s -= m[i][c] * x[c];
        x[i] = s / m[i][i];
    }
    return x;
}

}  // namespace

long double extrapolate_limit(const std::vector<long double>& u, const std::vector<long double>& S, double p,
                              bool with_log, int terms) {
    const size_t unknowns = 1 + static_cast<size_t>(terms) * (with_log ? 2 : 1);
    if (u.size() < unknowns || S.size() < unknowns)
        throw Error(ErrorCode::InvalidParams, "not enough samples for extrapolation");
    std::vector<std::vector<long double>> m;
    std::vector<long double> rhs;
    for (size_t j = 0; j < unknowns; ++j) {
        std::vector<long double> row{1.0L};
        for (int i = 0; i < terms; ++i) {
            const long double base = std::pow(u[j], -(static_cast<long double>(p) - 1 + i));
            row.push_back(-base);
            if (with_log) row.push_back(-base * std::log(u[j]));
        }
        m.push_back(std::move(row));
        rhs.push_back(S[j]);
    }
    return solve(std::move(m), std::move(rhs))[0];
}

}  // namespace hk
