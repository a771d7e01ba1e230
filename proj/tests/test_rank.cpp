#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "holes3d/rank.hpp"

using holes3d::Rat;
using holes3d::SparseMatrix;
using holes3d::matrix_rank;
using holes3d::sparse_multiply;

namespace {

/// Dense rational Gaussian elimination, written independently of the
/// implementation under test so random matrices have a second opinion.
int dense_rank(std::vector<std::vector<Rat>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(a[rank], a[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) {
                continue;
            }
            const Rat factor = a[r][col] / a[rank][col];
            for (int c = col; c < cols; ++c) {
                a[r][c] -= factor * a[rank][c];
            }
        }
        ++rank;
    }
    return rank;
}

SparseMatrix from_dense(const std::vector<std::vector<Rat>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    SparseMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            m.set(r, c, a[r][c]);
        }
    }
    return m;
}

} // namespace

TEST_CASE("identity and zero") {
    SparseMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) {
        id.set(i, i, Rat(1));
    }
    CHECK(matrix_rank(id) == 3);

    SparseMatrix zero(4, 5);
    CHECK(matrix_rank(zero) == 0);
    CHECK(zero.nonzero_count() == 0);
}

TEST_CASE("set overwrites and erases") {
    SparseMatrix m(2, 2);
    m.set(0, 0, Rat(5));
    CHECK(m.get(0, 0) == Rat(5));
    m.set(0, 0, Rat(0));
    CHECK(m.get(0, 0) == Rat(0));
    CHECK(m.nonzero_count() == 0);
}

TEST_CASE("rationally dependent rows collapse") {
    SparseMatrix m(3, 3);
    // Rows are (1/2, 1/3, 0), (3/2, 1, 0), (3, 2, 0): all parallel.
    m.set(0, 0, Rat(1, 2)); m.set(0, 1, Rat(1, 3));
    m.set(1, 0, Rat(3, 2)); m.set(1, 1, Rat(1));
    m.set(2, 0, Rat(3));    m.set(2, 1, Rat(2));
    CHECK(matrix_rank(m) == 1);
}

TEST_CASE("tetrahedron face boundary has rank 3") {
    // Columns are the four triangles of {0,1,2,3} in lexicographic order,
    // rows the six edges, with the alternating-sign face convention.
    const std::vector<std::vector<int>> tris = {{0,1,2},{0,1,3},{0,2,3},{1,2,3}};
    const std::vector<std::vector<int>> edges = {{0,1},{0,2},{0,3},{1,2},{1,3},{2,3}};
    SparseMatrix d2(6, 4);
    for (int c = 0; c < 4; ++c) {
        int sign = 1;
        for (int drop = 0; drop < 3; ++drop) {
            std::vector<int> face;
            for (int i = 0; i < 3; ++i) {
                if (i != drop) {
                    face.push_back(tris[c][i]);
                }
            }
            for (int r = 0; r < 6; ++r) {
                if (edges[r] == face) {
                    d2.set(r, c, Rat(sign));
                }
            }
            sign = -sign;
        }
    }
    CHECK(matrix_rank(d2) == 3);
}

TEST_CASE("sparse product matches hand arithmetic") {
    SparseMatrix a(2, 3), b(3, 2);
    a.set(0, 0, Rat(1)); a.set(0, 2, Rat(2));
    a.set(1, 1, Rat(1, 2));
    b.set(0, 1, Rat(3));
    b.set(1, 0, Rat(4));
    b.set(2, 1, Rat(-1));
    const SparseMatrix p = sparse_multiply(a, b);
    CHECK(p.rows == 2);
    CHECK(p.cols == 2);
    CHECK(p.get(0, 0) == Rat(0));
    CHECK(p.get(0, 1) == Rat(1)); // 1*3 + 2*(-1)
    CHECK(p.get(1, 0) == Rat(2)); // (1/2)*4
    CHECK(p.get(1, 1) == Rat(0));
}

TEST_CASE("random matrices agree with dense elimination") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 120; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 6);
        const int cols = 1 + static_cast<int>(rng() % 6);
        std::vector<std::vector<Rat>> dense(rows, std::vector<Rat>(cols, Rat(0)));
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                if (rng() % 3 == 0) {
                    continue; // keep it sparse
                }
                const long long num = static_cast<long long>(rng() % 7) - 3;
                const long long den = 1 + static_cast<long long>(rng() % 3);
                dense[r][c] = Rat(num, den);
            }
        }
        const int expected = dense_rank(dense);
        CHECK(matrix_rank(from_dense(dense)) == expected);

        // Row order must not matter.
        std::shuffle(dense.begin(), dense.end(), rng);
        CHECK(matrix_rank(from_dense(dense)) == expected);
    }
}
