#include "hurwitz/bernoulli.hpp"

#include "hurwitz/errors.hpp"

#include <mutex>
#include <shared_mutex>

namespace hk {

namespace {

struct BernoulliCache {
    std::shared_mutex mu;
    std::vector<Rational> values{Rational(1)};
};

BernoulliCache& cache() {
    static BernoulliCache c;
    return c;
}

// Grows the cache through index n. Caller holds the unique lock.
void grow(std::vector<Rational>& b, unsigned n) {
    for (unsigned m = static_cast<unsigned>(b.size()); m <= n; ++m) {
        if (m >= 3 && m % 2 == 1) {
            b.emplace_back(0);
            continue;
        }
        // sum_{k<=m} C(m+1,k) B_k = 0
        Rational acc(0);
        BigInt c(1);  // C(m+1, k)
        for (unsigned k = 0; k < m; ++k) {
            acc += Rational(c) * b[k];
            c = c * (m + 1 - k) / (k + 1);
        }
        b.push_back(-acc / Rational(m + 1));
    }
}

}  // namespace

Rational rational_div(const Rational& num, const Rational& den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
    return num / den;
}

std::vector<Rational> bernoulli_numbers(unsigned n) {
    auto& c = cache();
    {
        std::shared_lock lock(c.mu);
        if (c.values.size() > n) return {c.values.begin(), c.values.begin() + n + 1};
    }
    std::unique_lock lock(c.mu);
    grow(c.values, n);
    return {c.values.begin(), c.values.begin() + n + 1};
}

Rational bernoulli_number(unsigned n) {
    auto& c = cache();
    {
        std::shared_lock lock(c.mu);
        if (c.values.size() > n) return c.values[n];
    }
    std::unique_lock lock(c.mu);
    grow(c.values, n);
    return c.values[n];
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    BigInt c(1);
    for (unsigned i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return Rational(c);
}

Rational bernoulli_polynomial(unsigned n, const Rational& x) {
    auto b = bernoulli_numbers(n);
    // sum_j C(n,j) B_j x^{n-j}, Horner from j = 0
    Rational acc(0);
    BigInt c(1);
    for (unsigned j = 0; j <= n; ++j) {
        acc = acc * x + Rational(c) * b[j];
        c = c * (n - j) / (j + 1);
    }
    return acc;
}

}  // namespace hk
