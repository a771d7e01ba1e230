#ifndef HOLES3D_RANK_HPP
#define HOLES3D_RANK_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "holes3d/rational.hpp"

namespace holes3d {

/// Row-major sparse rational matrix. Zero entries are never stored.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::map<int, Rat>> row_data;

    SparseMatrix() = default;
    SparseMatrix(int r, int c);

    /// Stores v at (r, c); storing zero erases any existing entry.
    void set(int r, int c, const Rat& v);
    Rat get(int r, int c) const;
    std::size_t nonzero_count() const;
};

/// Exact matrix product (used to check boundary-map compositions).
SparseMatrix sparse_multiply(const SparseMatrix& a, const SparseMatrix& b);

/**
 * Exact rank over the rationals. Rows are first scaled to integers, then
 * reduced by fraction-free (division-exact) elimination with pivots chosen
 * from the sparsest remaining row, which bounds coefficient growth without
 * ever leaving integer arithmetic.
 */
int matrix_rank(const SparseMatrix& m);

} // namespace holes3d

#endif
