#pragma once

#include "hjps/polynomial.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace hjps {

// Ordered n-2 Casimir polynomials defining a Jacobian Poisson structure on
// K[x_0,...,x_{n-1}]. The order is part of the structure's identity (it
// fixes the determinant sign).
struct CasimirSet {
    int n = 0;
    std::vector<Polynomial> casimirs;
};

CasimirSet make_casimir_set(int n, std::vector<Polynomial> casimirs);

// File format: first line "n=<int>", then n-2 lines with one polynomial
// each in the grammar of parse_polynomial.
CasimirSet read_casimir_set(std::istream& in);
void write_casimir_set(std::ostream& out, const CasimirSet& c);

// Antisymmetric table of generator brackets {x_i, x_j}; only i<j is stored.
class BracketTable {
public:
    BracketTable() = default;
    explicit BracketTable(int n);

    int vars() const { return n_; }
    const Polynomial& upper(int i, int j) const;  // requires i < j
    void set(int i, int j, Polynomial entry);     // requires i < j
    // Sign-resolved lookup for arbitrary indices: zero on the diagonal,
    // -upper(j,i) below it.
    Polynomial bracket(int i, int j) const;

    bool operator==(const BracketTable&) const = default;

private:
    int index(int i, int j) const;

    int n_ = 0;
    std::vector<Polynomial> entries_;
};

// {f,g} as the determinant with rows (grad f, grad g, grad Q_1, ...,
// grad Q_{n-2}) in variable order x_0..x_{n-1}.
Polynomial jacobian_bracket(const CasimirSet& c, const Polynomial& f, const Polynomial& g);

BracketTable bracket_table(const CasimirSet& c);

// Dimension-3 shortcut: {x_i,x_j} = dP/dx_k for cyclic (i,j,k). Agrees with
// bracket_table({P}).
BracketTable jps3_table(const Polynomial& p);

// {x_i, q} extended from the generator table by the biderivation rule:
// sum_m (dq/dx_m) * {x_i, x_m}.
Polynomial table_bracket(const BracketTable& t, int i, const Polynomial& q);

struct JacobiReport {
    bool ok = true;
    std::array<int, 3> witness{};  // first failing triple (i,j,k)
    Polynomial defect;             // its nonzero cyclic sum
};

JacobiReport check_jacobi(const BracketTable& t);

// True iff every Q_m has vanishing bracket with every generator.
bool check_casimir(const CasimirSet& c, const BracketTable& t);

// Dimension-3 identity {.,.}_{PQ} = P{.,.}_Q + Q{.,.}_P, checked entrywise.
bool product_rule_holds(const Polynomial& p, const Polynomial& q);

}  // namespace hjps
