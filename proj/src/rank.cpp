#include "holes3d/rank.hpp"

#include <stdexcept>
#include <string>

#include "holes3d/errors.hpp"

namespace holes3d {

SparseMatrix::SparseMatrix(int r, int c) : rows(r), cols(c), row_data(r) {
    if (r < 0 || c < 0) {
        throw InputError("SparseMatrix: negative dimension");
    }
}

void SparseMatrix::set(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) {
        throw InputError("SparseMatrix::set: index (" + std::to_string(r) + ", " +
                         std::to_string(c) + ") out of range");
    }
    if (v.is_zero()) {
        row_data[r].erase(c);
    } else {
        row_data[r][c] = v;
    }
}

Rat SparseMatrix::get(int r, int c) const {
    if (r < 0 || r >= rows || c < 0 || c >= cols) {
        throw InputError("SparseMatrix::get: index out of range");
    }
    const auto it = row_data[r].find(c);
    return it == row_data[r].end() ? Rat(0) : it->second;
}

std::size_t SparseMatrix::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& row : row_data) {
        n += row.size();
    }
    return n;
}

SparseMatrix sparse_multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) {
        throw InputError("sparse_multiply: inner dimensions disagree (" +
                         std::to_string(a.cols) + " vs " + std::to_string(b.rows) + ")");
    }
    SparseMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        std::map<int, Rat> acc;
        for (const auto& [k, av] : a.row_data[i]) {
            for (const auto& [j, bv] : b.row_data[k]) {
                acc[j] += av * bv;
            }
        }
        for (const auto& [j, v] : acc) {
            if (!v.is_zero()) {
                out.row_data[i][j] = v;
            }
        }
    }
    return out;
}

namespace {

Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return a / boost::multiprecision::gcd(a, b) * b;
}

/// Exact integer quotient; the divisions of fraction-free elimination are
/// guaranteed divisible, so a remainder signals a bug rather than data.
Int exact_div(const Int& num, const Int& den) {
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw std::logic_error("matrix_rank: fraction-free division left a remainder");
    }
    return q;
}

} // namespace

int matrix_rank(const SparseMatrix& m) {
    if (m.rows == 0 || m.cols == 0) {
        return 0;
    }
    // Scale each row to integers (by the lcm of its denominators); scaling a
    // row by a nonzero constant never changes the rank.
    std::vector<std::vector<Int>> a(m.rows, std::vector<Int>(m.cols, Int(0)));
    std::vector<int> nnz(m.rows, 0);
    for (int i = 0; i < m.rows; ++i) {
        Int scale(1);
        for (const auto& [j, v] : m.row_data[i]) {
            scale = lcm_int(scale, v.denominator());
        }
        for (const auto& [j, v] : m.row_data[i]) {
            a[i][j] = v.numerator() * (scale / v.denominator());
        }
        nnz[i] = static_cast<int>(m.row_data[i].size());
    }

    // One-step fraction-free elimination: after each stage every entry is an
    // integer (a minor of the original matrix divided by the previous pivot),
    // so coefficient growth stays polynomial. The pivot row is chosen as the
    // sparsest remaining nonzero row, and fully zero columns are skipped
    // implicitly by pivoting on that row's first nonzero column.
    std::vector<char> used(m.rows, 0);
    Int prev(1);
    int rank = 0;
    for (;;) {
        int pr = -1;
        for (int i = 0; i < m.rows; ++i) {
            if (!used[i] && nnz[i] > 0 && (pr < 0 || nnz[i] < nnz[pr])) {
                pr = i;
            }
        }
        if (pr < 0) {
            break;
        }
        int pc = -1;
        for (int j = 0; j < m.cols; ++j) {
            if (a[pr][j] != 0) {
                pc = j;
                break;
            }
        }
        used[pr] = 1;
        ++rank;
        const Int piv = a[pr][pc];
        for (int i = 0; i < m.rows; ++i) {
            if (used[i] || a[i][pc] == 0) {
                continue;
            }
            const Int factor = a[i][pc];
            int count = 0;
            for (int j = 0; j < m.cols; ++j) {
                if (j == pc) {
                    a[i][j] = 0;
                    continue;
                }
                const Int updated = exact_div(piv * a[i][j] - factor * a[pr][j], prev);
                a[i][j] = updated;
                if (updated != 0) {
                    ++count;
                }
            }
            nnz[i] = count;
        }
        // Rows that never met the pivot column still carry the old scaling;
        // multiply them up so the shared denominator stays uniform.
        for (int i = 0; i < m.rows; ++i) {
            if (used[i] || a[i][pc] != 0) {
                continue;
            }
            for (int j = 0; j < m.cols; ++j) {
                if (a[i][j] != 0) {
                    a[i][j] = exact_div(piv * a[i][j], prev);
                }
            }
        }
        prev = piv;
    }
    return rank;
}

} // namespace holes3d
