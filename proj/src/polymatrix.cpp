#include "hjps/polymatrix.hpp"

#include <stdexcept>
#include <utility>

namespace hjps {

PolyMatrix::PolyMatrix(int rows, int cols, int vars)
    : rows_(rows), cols_(cols), vars_(vars),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
               Polynomial(vars)) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
}

Polynomial& PolyMatrix::at(int row, int col) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw std::out_of_range("matrix index out of range");
    return entries_[static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) +
                    static_cast<std::size_t>(col)];
}

const Polynomial& PolyMatrix::at(int row, int col) const {
    return const_cast<PolyMatrix*>(this)->at(row, col);
}

namespace {

void require_square(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
}

Polynomial cofactor_recurse(const PolyMatrix& m, const std::vector<int>& rows,
                            const std::vector<int>& cols) {
    const std::size_t k = rows.size();
    if (k == 1) return m.at(rows[0], cols[0]);
    Polynomial out(m.vars());
    std::vector<int> sub_cols(cols.begin() + 1, cols.end());
    for (std::size_t i = 0; i < k; ++i) {
        const Polynomial& entry = m.at(rows[i], cols[0]);
        if (entry.is_zero()) continue;
        std::vector<int> sub_rows;
        sub_rows.reserve(k - 1);
        for (std::size_t t = 0; t < k; ++t)
            if (t != i) sub_rows.push_back(rows[t]);
        Polynomial minor = cofactor_recurse(m, sub_rows, sub_cols);
        if (i % 2 == 1) minor = -minor;
        out += entry * minor;
    }
    return out;
}

}  // namespace

Polynomial det_cofactor(const PolyMatrix& m) {
    require_square(m);
    std::vector<int> index(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) index[static_cast<std::size_t>(i)] = i;
    return cofactor_recurse(m, index, index);
}

Polynomial det_bareiss(const PolyMatrix& m) {
    require_square(m);
    const int k = m.rows();
    std::vector<std::vector<Polynomial>> a(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[static_cast<std::size_t>(i)].push_back(m.at(i, j));

    int sign = 1;
    Polynomial previous_pivot = Polynomial::constant(m.vars(), 1);
    for (int p = 0; p < k - 1; ++p) {
        // Pick the sparsest nonzero pivot in the column.
        int pivot_row = -1;
        for (int i = p; i < k; ++i) {
            const Polynomial& candidate = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
            if (candidate.is_zero()) continue;
            if (pivot_row < 0 ||
                candidate.term_count() <
                    a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(p)].term_count())
                pivot_row = i;
        }
        if (pivot_row < 0) return Polynomial(m.vars());
        if (pivot_row != p) {
            std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(pivot_row)]);
            sign = -sign;
        }
        const Polynomial pivot = a[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)];
        for (int i = p + 1; i < k; ++i) {
            for (int j = p + 1; j < k; ++j) {
                Polynomial numerator =
                    pivot * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] *
                        a[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    exact_divide(std::move(numerator), previous_pivot);
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] = Polynomial(m.vars());
        }
        previous_pivot = pivot;
    }
    Polynomial result = a[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)];
    if (sign < 0) result = -result;
    return result;
}

Polynomial det(const PolyMatrix& m) {
    require_square(m);
    if (m.rows() > 8) throw std::invalid_argument("determinant size exceeds desk scale (8)");
    if (m.rows() <= 4) return det_cofactor(m);
    return det_bareiss(m);
}

}  // namespace hjps
