#pragma once

#include "hjps/polynomial.hpp"
#include "hjps/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace hjps {

// Linear system c_{i,-1} + sum_j c_{i,j} s_j >= 0 over nonnegative integer
// vectors, with an optional weight equation sum_j s_j = N.
struct ConstraintSystem {
    int n = 0;
    std::vector<std::vector<long>> rows;  // each row has length n+1: [const, coeffs...]
    std::optional<long> weight;
};

// n/2 for even n, 0 for odd n.
long tau_offset(int n);
// N = n(n-1)/2 * r - tau_offset(n).
long weight_target(int n, long r);

// The n cyclic difference constraints s_{n-i-1} - s_{n-i} + r >= 0 together
// with the weight equation.
ConstraintSystem constraint_system(int n, long r);

// Integer points of the triangle T_r: x+y <= 3r, 2x+y <= 4r, x+2y >= 2r,
// -x+y <= r. Sorted lexicographically.
std::vector<std::array<long, 2>> triangle_lattice_points(long r);

// Closed-form column-split counts of T_r (x in [0,r] and x in (r,2r]).
long card_s1(long r);
long card_s2(long r);

// (3/2)s^2 + (9/2)s + 4 for s >= 0; 1 for s = -1 (constants).
long dim_h3(long s);

// Power-series coefficients of (1+t^3+t^6)/(1-t^3)^3 in t, degrees
// 0..max_power.
std::vector<long> poincare_series(int max_power);
// Coefficients at t^{3r} only, r = 0..max_r.
std::vector<long> poincare_coefficients(int max_r);

// All nonnegative s-vectors of weight N satisfying the cyclic constraints,
// in lexicographic order.
std::vector<std::vector<long>> enumerate_compositions(int n, long r);

// alpha_i = s_{n-i-1} - s_{n-i} + r (indices mod n). Throws if s violates a
// constraint (negative exponent).
Monomial composition_exponents(int n, long r, const std::vector<long>& s);

// Brute-force oracle: all alpha >= 0 with sum = n*r whose n cyclic
// tau-degree rows are all = tau_offset(n) mod n. Requires n*r <= 24.
// Grlex-descending order.
std::vector<Monomial> monomial_filter(int n, long r);

// Dimension-3 parametrization of T_r: (s',s'') -> (4r-2s'-s'', -2r+s'+2s'',
// r+s'-s''). Grlex-descending order.
std::vector<Monomial> triangle_monomials(long r);

// Number of nonnegative solutions of weight N satisfying the system's
// inequality rows (the coefficient of q^N in F_C(q,...,q)).
long generating_coefficient(const ConstraintSystem& c, long weight);

enum class CountMethod { closed_form, triangle, compositions, monomial_filter };

const char* to_string(CountMethod method);
std::optional<CountMethod> parse_count_method(const std::string& name);

// All methods count the same set; the closed-form and triangle routes exist
// only for n = 3.
struct CountReport {
    int n = 0;
    long r = 0;
    CountMethod method = CountMethod::compositions;
    long count = 0;
};

CountReport count_lattice_points(int n, long r, CountMethod method);

// Rows of the eliminated-form system in the n-1 coordinates s_0..s_{n-2}
// (s_{n-1} substituted from the weight equation): the n cyclic rows plus
// s_{n-1} >= 0. Each row is [const, coeffs...].
std::vector<std::vector<Rational>> eliminated_rows(int n, long r);

struct VertexCheck {
    bool ok = false;
    std::vector<int> permutation;  // coordinate order that satisfied the system
};

// True iff, for some coordinate permutation, every point satisfies all
// eliminated-form inequalities exactly with at least n-1 of them active.
VertexCheck check_polytope_vertices(int n, long r,
                                    const std::vector<std::vector<Rational>>& vertices);

// Reference vertex lists: the triangle (0,r),(r,2r),(2r,0) for n=3 and the
// six T_4 vertices for n=4.
std::vector<std::vector<Rational>> reference_vertices(int n, long r);

}  // namespace hjps
