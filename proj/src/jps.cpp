#include "hjps/jps.hpp"

#include "hjps/polymatrix.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hjps {

CasimirSet make_casimir_set(int n, std::vector<Polynomial> casimirs) {
    if (n < 3) throw std::invalid_argument("a Jacobian structure needs at least 3 variables");
    if (static_cast<int>(casimirs.size()) != n - 2)
        throw std::invalid_argument("expected " + std::to_string(n - 2) + " Casimir polynomials");
    for (const Polynomial& q : casimirs)
        if (q.vars() != n) throw std::invalid_argument("Casimir lives in the wrong ring");
    return CasimirSet{n, std::move(casimirs)};
}

CasimirSet read_casimir_set(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("missing 'n=<int>' header line");
    std::istringstream header(line);
    std::string tag;
    std::getline(header, tag, '=');
    // Tolerate surrounding whitespace in the tag.
    std::erase_if(tag, [](unsigned char c) { return std::isspace(c); });
    int n = 0;
    if (tag != "n" || !(header >> n)) throw std::runtime_error("malformed header, expected 'n=<int>'");
    if (n < 3 || n > 8) throw std::runtime_error("variable count out of desk-scale range [3,8]");
    std::vector<Polynomial> casimirs;
    for (int i = 0; i < n - 2; ++i) {
        if (!std::getline(in, line))
            throw std::runtime_error("expected " + std::to_string(n - 2) + " Casimir lines, got " +
                                     std::to_string(i));
        try {
            casimirs.push_back(parse_polynomial(line, n));
        } catch (const ParseError& e) {
            throw std::runtime_error("Casimir line " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return make_casimir_set(n, std::move(casimirs));
}

void write_casimir_set(std::ostream& out, const CasimirSet& c) {
    out << "n=" << c.n << '\n';
    for (const Polynomial& q : c.casimirs) out << to_string(q) << '\n';
}

BracketTable::BracketTable(int n)
    : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2,
                      Polynomial(n)) {
    if (n < 2) throw std::invalid_argument("bracket table needs at least 2 variables");
}

int BracketTable::index(int i, int j) const {
    if (i < 0 || j <= i || j >= n_) throw std::out_of_range("bracket table index out of range");
    return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

const Polynomial& BracketTable::upper(int i, int j) const {
    return entries_[static_cast<std::size_t>(index(i, j))];
}

void BracketTable::set(int i, int j, Polynomial entry) {
    if (entry.vars() != n_) throw std::invalid_argument("bracket entry lives in the wrong ring");
    entries_[static_cast<std::size_t>(index(i, j))] = std::move(entry);
}

Polynomial BracketTable::bracket(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("bracket index out of range");
    if (i == j) return Polynomial(n_);
    if (i < j) return upper(i, j);
    return -upper(j, i);
}

Polynomial jacobian_bracket(const CasimirSet& c, const Polynomial& f, const Polynomial& g) {
    if (f.vars() != c.n || g.vars() != c.n)
        throw std::invalid_argument("bracket arguments live in the wrong ring");
    PolyMatrix jacobian(c.n, c.n, c.n);
    for (int j = 0; j < c.n; ++j) {
        jacobian.at(0, j) = f.derivative(j);
        jacobian.at(1, j) = g.derivative(j);
        for (int m = 0; m < c.n - 2; ++m)
            jacobian.at(m + 2, j) = c.casimirs[static_cast<std::size_t>(m)].derivative(j);
    }
    return det(jacobian);
}

BracketTable bracket_table(const CasimirSet& c) {
    BracketTable t(c.n);
    for (int i = 0; i < c.n; ++i)
        for (int j = i + 1; j < c.n; ++j)
            t.set(i, j, jacobian_bracket(c, Polynomial::variable(c.n, i),
                                         Polynomial::variable(c.n, j)));
    return t;
}

BracketTable jps3_table(const Polynomial& p) {
    if (p.vars() != 3) throw std::invalid_argument("jps3 table needs a 3-variable Casimir");
    BracketTable t(3);
    t.set(0, 1, p.derivative(2));
    t.set(1, 2, p.derivative(0));
    t.set(0, 2, -p.derivative(1));  // {x2,x0} = dP/dx1
    return t;
}

Polynomial table_bracket(const BracketTable& t, int i, const Polynomial& q) {
    if (q.vars() != t.vars()) throw std::invalid_argument("bracket argument in the wrong ring");
    Polynomial out(t.vars());
    for (int m = 0; m < t.vars(); ++m) {
        if (m == i) continue;
        out += q.derivative(m) * t.bracket(i, m);
    }
    return out;
}

JacobiReport check_jacobi(const BracketTable& t) {
    const int n = t.vars();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Polynomial sum = table_bracket(t, i, t.bracket(j, k));
                sum += table_bracket(t, j, t.bracket(k, i));
                sum += table_bracket(t, k, t.bracket(i, j));
                if (!sum.is_zero()) return JacobiReport{false, {i, j, k}, std::move(sum)};
            }
    return JacobiReport{true, {0, 0, 0}, Polynomial(n)};
}

bool check_casimir(const CasimirSet& c, const BracketTable& t) {
    if (t.vars() != c.n) throw std::invalid_argument("table and Casimir set disagree on ring");
    for (const Polynomial& q : c.casimirs) {
        for (int j = 0; j < c.n; ++j) {
            Polynomial sum(c.n);
            for (int i = 0; i < c.n; ++i) sum += q.derivative(i) * t.bracket(i, j);
            if (!sum.is_zero()) return false;
        }
    }
    return true;
}

bool product_rule_holds(const Polynomial& p, const Polynomial& q) {
    if (p.vars() != 3 || q.vars() != 3)
        throw std::invalid_argument("product rule check is a 3-variable statement");
    const BracketTable product = jps3_table(p * q);
    const BracketTable tp = jps3_table(p);
    const BracketTable tq = jps3_table(q);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (product.upper(i, j) != p * tq.upper(i, j) + q * tp.upper(i, j)) return false;
    return true;
}

}  // namespace hjps
