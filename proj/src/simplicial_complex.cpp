#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "holes3d/errors.hpp"
#include "holes3d/simplicial_complex.hpp"

namespace holes3d {

SimplicialComplex::SimplicialComplex(int num_vertices, int skeleton_limit)
    : n_(num_vertices), limit_(skeleton_limit) {
    if (num_vertices < 0) {
        throw InputError("SimplicialComplex: negative vertex count");
    }
    if (skeleton_limit < 0) {
        throw InputError("SimplicialComplex: negative skeleton limit");
    }
    by_dim_.resize(limit_ + 1);
    for (int v = 0; v < n_; ++v) {
        by_dim_[0].insert({v});
    }
}

void SimplicialComplex::add_simplex(std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    if (verts.empty()) {
        throw InputError("add_simplex: empty vertex list");
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= n_) {
            throw InputError("add_simplex: vertex id " + std::to_string(verts[i]) +
                             " out of range");
        }
        if (i > 0 && verts[i] == verts[i - 1]) {
            throw InputError("add_simplex: repeated vertex id " + std::to_string(verts[i]));
        }
    }
    const int dim = static_cast<int>(verts.size()) - 1;
    if (dim > limit_) {
        throw InputError("add_simplex: dimension " + std::to_string(dim) +
                         " exceeds skeleton limit " + std::to_string(limit_));
    }
    // Downward closure via all non-empty subsets; simplices stay tiny here
    // (dimension at most 3 in every caller), so 2^k enumeration is cheap.
    const int k = dim + 1;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> face;
        for (int i = 0; i < k; ++i) {
            if (mask & (1u << i)) {
                face.push_back(verts[i]);
            }
        }
        by_dim_[face.size() - 1].insert(std::move(face));
    }
}

std::vector<std::vector<int>> SimplicialComplex::simplices(int dim) const {
    if (dim < 0 || dim > limit_) {
        return {};
    }
    return {by_dim_[dim].begin(), by_dim_[dim].end()};
}

long long SimplicialComplex::simplex_count(int dim) const {
    if (dim < 0 || dim > limit_) {
        return 0;
    }
    return static_cast<long long>(by_dim_[dim].size());
}

bool SimplicialComplex::contains(const std::vector<int>& verts) const {
    const int dim = static_cast<int>(verts.size()) - 1;
    if (dim < 0 || dim > limit_) {
        return false;
    }
    return by_dim_[dim].count(verts) > 0;
}

SparseMatrix SimplicialComplex::boundary_matrix(int i) const {
    if (i < 0 || i > limit_) {
        throw InputError("boundary_matrix: dimension " + std::to_string(i) +
                         " outside the stored skeleton");
    }
    if (i == 0) {
        return SparseMatrix(0, static_cast<int>(by_dim_[0].size()));
    }
    // Row index per (i-1)-simplex in lexicographic order.
    std::map<std::vector<int>, int> row_of;
    for (const auto& s : by_dim_[i - 1]) {
        const int r = static_cast<int>(row_of.size());
        row_of.emplace(s, r);
    }
    SparseMatrix d(static_cast<int>(row_of.size()), static_cast<int>(by_dim_[i].size()));
    int col = 0;
    for (const auto& s : by_dim_[i]) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            std::vector<int> face;
            face.reserve(s.size() - 1);
            for (std::size_t t = 0; t < s.size(); ++t) {
                if (t != j) {
                    face.push_back(s[t]);
                }
            }
            const auto it = row_of.find(face);
            if (it == row_of.end()) {
                throw std::logic_error("boundary_matrix: face missing from closure");
            }
            d.set(it->second, col, Rat(j % 2 == 0 ? 1 : -1));
        }
        ++col;
    }
    return d;
}

BettiReport SimplicialComplex::betti(int i) const {
    if (i < 0) {
        throw InputError("betti: negative dimension");
    }
    if (i + 1 > limit_) {
        throw InputError("betti: needs the " + std::to_string(i + 1) +
                         "-skeleton but the complex stores dimensions up to " +
                         std::to_string(limit_));
    }
    BettiReport rep;
    rep.dimension = i;
    rep.dim_c = simplex_count(i);
    rep.rank_d = matrix_rank(boundary_matrix(i));
    rep.rank_d_next = matrix_rank(boundary_matrix(i + 1));
    rep.betti = (rep.dim_c - rep.rank_d) - rep.rank_d_next;
    return rep;
}

} // namespace holes3d
