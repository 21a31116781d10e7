#include "hjps/classify.hpp"

#include "hjps/enumeration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hjps {

HBasisReport h_basis(int n, long r) {
    HBasisReport report;
    report.n = n;
    report.r = r;
    report.degree = static_cast<long>(n) * r;
    report.monomials = monomial_filter(n, r);
    report.monomial_dimension = report.monomials.size();

    std::map<Monomial, bool, GrlexDescending> seen;
    for (const Monomial& m : report.monomials) seen.emplace(m, false);
    for (const Monomial& m : report.monomials) {
        if (seen.at(m)) continue;
        std::vector<Monomial> orbit;
        Monomial current = m;
        do {
            orbit.push_back(current);
            seen.at(current) = true;  // throws if the admissible set were not sigma-closed
            current = current.rotated();
        } while (!(current == m));
        std::sort(orbit.begin(), orbit.end(),
                  [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });
        report.orbits.push_back(std::move(orbit));
    }
    report.orbit_dimension = report.orbits.size();
    return report;
}

std::vector<Polynomial> orbit_sums(const HBasisReport& basis) {
    std::vector<Polynomial> sums;
    for (const auto& orbit : basis.orbits) {
        Polynomial sum(basis.n);
        for (const Monomial& m : orbit) sum.add_term(m, 1);
        sums.push_back(std::move(sum));
    }
    return sums;
}

bool in_orbit_span(const HBasisReport& basis, const Polynomial& p) {
    if (p.vars() != basis.n) throw std::invalid_argument("polynomial in the wrong ring");
    std::map<Monomial, std::size_t, GrlexDescending> orbit_of;
    for (std::size_t k = 0; k < basis.orbits.size(); ++k)
        for (const Monomial& m : basis.orbits[k]) orbit_of.emplace(m, k);
    for (const auto& [m, c] : p.terms())
        if (!orbit_of.contains(m)) return false;
    for (const auto& orbit : basis.orbits) {
        const Rational first = p.coefficient(orbit.front());
        for (const Monomial& m : orbit)
            if (p.coefficient(m) != first) return false;
    }
    return true;
}

Polynomial ast_cubic(const Rational& gamma) {
    Polynomial p(3);
    p.add_term(Monomial({3, 0, 0}), 1);
    p.add_term(Monomial({0, 3, 0}), 1);
    p.add_term(Monomial({0, 0, 3}), 1);
    p.add_term(Monomial({1, 1, 1}), gamma);
    return p;
}

Polynomial dual_sextic(const Rational& a, const Rational& b, const Rational& c,
                       const Rational& d) {
    Polynomial p(3);
    const Rational sixth = a / 6;
    p.add_term(Monomial({6, 0, 0}), sixth);
    p.add_term(Monomial({0, 6, 0}), sixth);
    p.add_term(Monomial({0, 0, 6}), sixth);
    const Rational third = b / 3;
    p.add_term(Monomial({3, 3, 0}), third);
    p.add_term(Monomial({3, 0, 3}), third);
    p.add_term(Monomial({0, 3, 3}), third);
    p.add_term(Monomial({4, 1, 1}), c);
    p.add_term(Monomial({1, 4, 1}), c);
    p.add_term(Monomial({1, 1, 4}), c);
    p.add_term(Monomial({2, 2, 2}), d / 2);
    return p;
}

CasimirSet sklyanin_casimirs(const Rational& k) {
    const Rational half = make_rational(1, 2);
    Polynomial q1(4);
    q1.add_term(Monomial({2, 0, 0, 0}), half);
    q1.add_term(Monomial({0, 0, 2, 0}), half);
    q1.add_term(Monomial({0, 1, 0, 1}), k);
    Polynomial q2(4);
    q2.add_term(Monomial({0, 2, 0, 0}), half);
    q2.add_term(Monomial({0, 0, 0, 2}), half);
    q2.add_term(Monomial({1, 0, 1, 0}), k);
    return make_casimir_set(4, {std::move(q1), std::move(q2)});
}

CasimirSet brieskorn_pham_5(const std::array<Rational, 5>& a,
                            const std::array<Rational, 5>& b,
                            const std::array<Rational, 5>& c) {
    Polynomial p1(5);
    Polynomial p2(5);
    Polynomial p3(5);
    for (int i = 0; i < 5; ++i) {
        std::vector<int> linear(5, 0);
        linear[static_cast<std::size_t>(i)] = 1;
        std::vector<int> square(5, 0);
        square[static_cast<std::size_t>(i)] = 2;
        p1.add_term(Monomial(linear), a[static_cast<std::size_t>(i)]);
        p2.add_term(Monomial(square), b[static_cast<std::size_t>(i)]);
        p3.add_term(Monomial(square), c[static_cast<std::size_t>(i)]);
    }
    return make_casimir_set(5, {std::move(p1), std::move(p2), std::move(p3)});
}

std::vector<WeightedExample> weighted_examples(const Rational& gamma, const Rational& k) {
    Polynomial wp213(3);
    wp213.add_term(Monomial({3, 0, 0}), 1);
    wp213.add_term(Monomial({0, 3, 1}), 1);
    wp213.add_term(Monomial({0, 0, 2}), 1);
    wp213.add_term(Monomial({1, 1, 1}), gamma);

    const Rational third = make_rational(1, 3);
    Polynomial wp112(3);
    wp112.add_term(Monomial({0, 0, 2}), third);
    wp112.add_term(Monomial({2, 0, 1}), third);
    wp112.add_term(Monomial({1, 3, 0}), third);
    wp112.add_term(Monomial({1, 1, 1}), k);

    return {{std::move(wp213), WeightVector{{2, 1, 3}}},
            {std::move(wp112), WeightVector{{1, 1, 2}}}};
}

}  // namespace hjps
