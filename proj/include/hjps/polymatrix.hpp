#pragma once

#include "hjps/polynomial.hpp"

#include <vector>

namespace hjps {

// Row-major matrix of polynomials sharing one ambient ring.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, int vars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int vars() const { return vars_; }
    Polynomial& at(int row, int col);
    const Polynomial& at(int row, int col) const;

private:
    int rows_;
    int cols_;
    int vars_;
    std::vector<Polynomial> entries_;
};

// Exact determinant of a square matrix of size <= 8: cofactor expansion up
// to 4x4, fraction-free Bareiss elimination for 5..8 (polynomial entries
// stay in the ring; no rational-function intermediates).
Polynomial det(const PolyMatrix& m);

Polynomial det_cofactor(const PolyMatrix& m);
Polynomial det_bareiss(const PolyMatrix& m);

}  // namespace hjps
