#pragma once

#include "hjps/polynomial.hpp"

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

namespace hjps::testing {

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> numerator(-9, 9);
    std::uniform_int_distribution<long> denominator(1, 4);
    long num = numerator(rng);
    if (num == 0) num = 1;
    return make_rational(num, denominator(rng));
}

// Up to max_terms random terms of total degree <= max_degree.
inline Polynomial random_polynomial(std::mt19937_64& rng, int vars, int max_degree,
                                    int max_terms) {
    std::uniform_int_distribution<int> term_count(1, max_terms);
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<int> var(0, vars - 1);
    Polynomial p(vars);
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exponents(static_cast<std::size_t>(vars), 0);
        const int d = degree(rng);
        for (int u = 0; u < d; ++u) ++exponents[static_cast<std::size_t>(var(rng))];
        p.add_term(Monomial(exponents), random_rational(rng));
    }
    return p;
}

inline Polynomial random_nonzero_polynomial(std::mt19937_64& rng, int vars, int max_degree,
                                            int max_terms) {
    for (;;) {
        Polynomial p = random_polynomial(rng, vars, max_degree, max_terms);
        if (!p.is_zero()) return p;
    }
}

// Second multiplication route for cross-checks: flat term-list convolution,
// sort, and a manual merge of equal monomials, so operator*'s incremental
// map accumulation is never exercised.
inline Polynomial naive_product(const Polynomial& a, const Polynomial& b) {
    std::vector<std::pair<Monomial, Rational>> raw;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) raw.emplace_back(ma * mb, ca * cb);
    std::sort(raw.begin(), raw.end(),
              [](const auto& lhs, const auto& rhs) { return grlex_less(lhs.first, rhs.first); });
    Polynomial out(a.vars());
    std::size_t i = 0;
    while (i < raw.size()) {
        Monomial m = raw[i].first;
        Rational sum = raw[i].second;
        ++i;
        while (i < raw.size() && raw[i].first == m) {
            sum += raw[i].second;
            ++i;
        }
        out.add_term(m, sum);
    }
    return out;
}

}  // namespace hjps::testing
