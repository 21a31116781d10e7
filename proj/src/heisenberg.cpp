#include "hjps/heisenberg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hjps {

Monomial sigma(const Monomial& m) {
    return m.rotated();
}

Polynomial sigma(const Polynomial& p) {
    Polynomial out(p.vars());
    for (const auto& [m, c] : p.terms()) out.add_term(m.rotated(), c);
    return out;
}

int monomial_tau_degree(const Monomial& m) {
    const int n = m.vars();
    if (n == 0) throw std::invalid_argument("tau-degree in an empty ring");
    long total = 0;
    for (int i = 0; i < n; ++i) total += static_cast<long>(i) * m[i];
    return static_cast<int>(total % n);
}

TauDegree tau_degree(const Polynomial& p) {
    if (p.is_zero()) return TauDegree{true, 0};
    int best = 0;
    for (const auto& [m, c] : p.terms()) best = std::max(best, monomial_tau_degree(m));
    return TauDegree{false, best};
}

bool is_tau_homogeneous(const Polynomial& p) {
    if (p.is_zero()) return true;
    const int first = monomial_tau_degree(p.terms().begin()->first);
    for (const auto& [m, c] : p.terms())
        if (monomial_tau_degree(m) != first) return false;
    return true;
}

bool sigma_derivative_commutes(const Polynomial& p, int var) {
    if (var < 0 || var >= p.vars()) throw std::out_of_range("variable index out of range");
    return sigma(p.derivative(var)) == sigma(p).derivative((var + 1) % p.vars());
}

std::optional<WeightedDegree> weighted_degree(const Polynomial& p, const WeightVector& w) {
    if (static_cast<int>(w.weights.size()) != p.vars())
        throw std::invalid_argument("weight vector length mismatch");
    for (long weight : w.weights)
        if (weight < 1) throw std::invalid_argument("weights must be positive");
    if (p.is_zero()) return WeightedDegree{true, 0};
    bool first = true;
    long degree = 0;
    for (const auto& [m, c] : p.terms()) {
        long d = 0;
        for (int i = 0; i < p.vars(); ++i) d += w.weights[static_cast<std::size_t>(i)] * m[i];
        if (first) {
            degree = d;
            first = false;
        } else if (d != degree) {
            return std::nullopt;
        }
    }
    return WeightedDegree{false, degree};
}

InvarianceReport check_h_invariance(const BracketTable& t) {
    const int n = t.vars();
    InvarianceReport report;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Polynomial& entry = t.upper(i, j);
            const Polynomial shifted = t.bracket((i + 1) % n, (j + 1) % n);
            const Polynomial rotated = sigma(entry);
            if (shifted != rotated) {
                report.sigma_ok = false;
                report.failures.push_back({i, j, "sigma", shifted - rotated});
            }
            Polynomial offending(n);
            for (const auto& [m, c] : entry.terms())
                if (monomial_tau_degree(m) != (i + j) % n) offending.add_term(m, c);
            if (!offending.is_zero()) {
                report.tau_ok = false;
                report.failures.push_back({i, j, "tau", std::move(offending)});
            }
        }
    }
    report.degree_signature_ok = check_degree_signature(t);
    if (!report.degree_signature_ok) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Polynomial offending(n);
                for (const auto& [m, c] : t.upper(i, j).terms())
                    if (m.degree() % n != 2 % n) offending.add_term(m, c);
                if (!offending.is_zero())
                    report.failures.push_back({i, j, "degree", std::move(offending)});
            }
    }
    return report;
}

bool check_degree_signature(const BracketTable& t) {
    const int n = t.vars();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (const auto& [m, c] : t.upper(i, j).terms())
                if (m.degree() % n != 2 % n) return false;
    return true;
}

bool check_toric_invariance(const BracketTable& t, const WeightVector& w) {
    const int n = t.vars();
    if (static_cast<int>(w.weights.size()) != n)
        throw std::invalid_argument("weight vector length mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Polynomial& entry = t.upper(i, j);
            if (entry.is_zero()) continue;
            const auto d = weighted_degree(entry, w);
            if (!d || d->value != w.weights[static_cast<std::size_t>(i)] +
                                      w.weights[static_cast<std::size_t>(j)])
                return false;
        }
    return true;
}

}  // namespace hjps
