#pragma once

#include "hjps/polynomial.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace hjps {

// Determinant of the Hessian of P (three variables) bordered by
// (0, p0, p1, p2). Result lives in the six-variable ring with x = (x0,x1,x2)
// and p = (x3,x4,x5).
Polynomial bordered_hessian(const Polynomial& p);

struct TangentSample {
    std::array<double, 3> point;  // approximate curve point, affine chart
    std::array<double, 3> line;   // unit-normalized gradient at the point
};

// Tangent lines of the cubic (x0^3+x1^3+x2^3)+gamma*x0x1x2: random x0:x1
// directions, the cubic solved for x2 by Newton started at companion-matrix
// roots, refined until |P(point)| < 1e-12. Throws std::domain_error for
// singular curves (gamma^3 = -27) and std::runtime_error when root finding
// keeps failing.
std::vector<TangentSample> sample_tangents(double gamma, int count, std::uint64_t seed);

struct SexticFit {
    std::array<double, 4> coeffs{};  // (a,b,c,d), unit Euclidean norm
    double residual = 0.0;           // max over samples, relative to row scale
};

// Least-squares null vector of the samples x 4 evaluation matrix of the four
// orbit sextics. Requires >= 8 samples; throws std::domain_error when the
// matrix has rank < 3.
SexticFit fit_dual_sextic(const std::vector<TangentSample>& samples);

// P_dual(line) for the coefficient vector (a,b,c,d) in the same
// normalization as dual_sextic.
double evaluate_sextic_family(const std::array<double, 4>& coeffs,
                              const std::array<double, 3>& line);

}  // namespace hjps
