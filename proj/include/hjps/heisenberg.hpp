#pragma once

#include "hjps/jps.hpp"
#include "hjps/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hjps {

// tau-degree lives in Z/nZ; the zero polynomial gets the bottom element
// (the paper's -infinity).
struct TauDegree {
    bool bottom = false;
    int value = 0;

    bool operator==(const TauDegree&) const = default;
};

// sigma acts by rotating exponent vectors; tau scales a monomial by
// eps^{tau-degree}. Every invariance condition reduces to congruences on
// tau-degrees, so roots of unity are never materialized.
Monomial sigma(const Monomial& m);
Polynomial sigma(const Polynomial& p);

// sum_i i*alpha_i mod n, in [0, n).
int monomial_tau_degree(const Monomial& m);

// Maximum over monomials with representatives {0,...,n-1} in natural order;
// bottom for zero.
TauDegree tau_degree(const Polynomial& p);
bool is_tau_homogeneous(const Polynomial& p);

// sigma . dF/dx_i == d(sigma.F)/dx_{i+1}; a theorem, exposed as an oracle.
bool sigma_derivative_commutes(const Polynomial& p, int var);

struct WeightVector {
    std::vector<long> weights;  // all >= 1
};

struct WeightedDegree {
    bool any = false;  // zero polynomial: homogeneous of every degree
    long value = 0;

    bool operator==(const WeightedDegree&) const = default;
};

// Engaged iff all monomials share the weighted degree sum_i w_i*alpha_i.
std::optional<WeightedDegree> weighted_degree(const Polynomial& p, const WeightVector& w);

struct InvarianceFailure {
    int i = 0;
    int j = 0;
    std::string reason;  // "sigma", "tau" or "degree"
    Polynomial witness;
};

struct InvarianceReport {
    bool sigma_ok = true;
    bool tau_ok = true;
    bool degree_signature_ok = true;
    std::vector<InvarianceFailure> failures;

    bool all_ok() const { return sigma_ok && tau_ok && degree_signature_ok; }
};

// sigma_ok: t[i+1][j+1] == sigma.t[i][j] for all pairs (indices mod n);
// tau_ok: every monomial of t[i][j] has tau-degree = i+j mod n.
InvarianceReport check_h_invariance(const BracketTable& t);

// Every monomial of every entry has total degree = 2 mod n (degree 2+sn).
bool check_degree_signature(const BracketTable& t);

// Each nonzero entry t[i][j] is weighted-homogeneous of degree w_i + w_j
// (weight-zero tensor under lambda.x_i = lambda^{w_i} x_i).
bool check_toric_invariance(const BracketTable& t, const WeightVector& w);

}  // namespace hjps
