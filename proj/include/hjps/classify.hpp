#pragma once

#include "hjps/heisenberg.hpp"
#include "hjps/jps.hpp"
#include "hjps/polynomial.hpp"
#include "hjps/rational.hpp"

#include <array>
#include <vector>

namespace hjps {

// Admissible monomials of degree n*r together with their sigma-orbits.
// "dimension" counts monomials (the theorem's count); "invariant dimension"
// counts orbits (the sigma.P = P refinement). Both are surfaced.
struct HBasisReport {
    int n = 0;
    long r = 0;
    long degree = 0;
    std::vector<Monomial> monomials;
    std::vector<std::vector<Monomial>> orbits;
    std::size_t monomial_dimension = 0;
    std::size_t orbit_dimension = 0;
};

HBasisReport h_basis(int n, long r);

// Coefficient-1 sum over each orbit; the sigma-invariant basis.
std::vector<Polynomial> orbit_sums(const HBasisReport& basis);

// True iff p is supported on the admissible monomials with coefficients
// constant on every orbit (exact span membership).
bool in_orbit_span(const HBasisReport& basis, const Polynomial& p);

// (x0^3+x1^3+x2^3) + gamma*x0*x1*x2.
Polynomial ast_cubic(const Rational& gamma);

// (1/6)a*sum x_i^6 + (1/3)b*sum x_i^3x_j^3 + c*sum x_i^4x_jx_k
// + (1/2)d*x0^2x1^2x2^2.
Polynomial dual_sextic(const Rational& a, const Rational& b, const Rational& c,
                       const Rational& d);

// q1 = (x0^2+x2^2)/2 + k*x1*x3, q2 = (x1^2+x3^2)/2 + k*x0*x2.
CasimirSet sklyanin_casimirs(const Rational& k);

// P1 = sum a_i x_i, P2 = sum b_i x_i^2, P3 = sum c_i x_i^2 in five
// variables; H-invariance is checked downstream, never assumed.
CasimirSet brieskorn_pham_5(const std::array<Rational, 5>& a,
                            const std::array<Rational, 5>& b,
                            const std::array<Rational, 5>& c);

struct WeightedExample {
    Polynomial p;
    WeightVector weights;
};

// The two weighted-projective curves: (y0^3+y1^3y2+y2^2)+gamma*y0y1y2 with
// weights (2,1,3), and (z2^2+z0^2z2+z0z1^3)/3 + k*z0z1z2 with weights
// (1,1,2).
std::vector<WeightedExample> weighted_examples(const Rational& gamma, const Rational& k);

}  // namespace hjps
