#ifndef HOLES3D_SIMPLICIAL_COMPLEX_HPP
#define HOLES3D_SIMPLICIAL_COMPLEX_HPP

#include <set>
#include <vector>

#include "holes3d/rank.hpp"

namespace holes3d {

/// Per-dimension summary behind one Betti number: betti = (dim_c - rank_d) -
/// rank_d_next, i.e. the kernel dimension of the outgoing boundary map minus
/// the rank of the incoming one.
struct BettiReport {
    int dimension = 0;
    long long dim_c = 0;       // number of `dimension`-simplices
    long long rank_d = 0;      // rank of the boundary map out of dimension
    long long rank_d_next = 0; // rank of the boundary map into dimension
    long long betti = 0;
};

/**
 * Finite simplicial complex on vertices 0..n-1, stored per dimension as
 * sorted vertex subsets, possibly truncated at a skeleton limit. The
 * structure is kept downward closed: adding a simplex adds all of its faces,
 * and every vertex id is a 0-simplex from construction.
 */
class SimplicialComplex {
public:
    /**
     * @param num_vertices   size of the vertex set (ids 0..num_vertices-1).
     * @param skeleton_limit highest simplex dimension this complex stores.
     */
    SimplicialComplex(int num_vertices, int skeleton_limit);

    int num_vertices() const { return n_; }
    int skeleton_limit() const { return limit_; }

    /**
     * Inserts the simplex on the given vertices together with all of its
     * faces. Throws InputError on out-of-range ids, repeated vertices, or a
     * dimension above the skeleton limit.
     */
    void add_simplex(std::vector<int> verts);

    /// All simplices of one dimension, each sorted, in lexicographic order.
    std::vector<std::vector<int>> simplices(int dim) const;

    long long simplex_count(int dim) const;

    /// Membership test; verts must be sorted and duplicate-free.
    bool contains(const std::vector<int>& verts) const;

    /**
     * The boundary map from i-chains to (i-1)-chains: one column per
     * i-simplex, one row per (i-1)-simplex, entries (-1)^j for the face
     * dropping the j-th smallest vertex. Row and column order is the
     * lexicographic simplex order, so the matrix is deterministic. For i = 0
     * the map is the zero map into the trivial space (a 0-row matrix).
     */
    SparseMatrix boundary_matrix(int i) const;

    /**
     * Exact Betti number over the rationals in dimension i. Requires the
     * (i+1)-skeleton: throws InputError naming the missing dimension when
     * i + 1 exceeds the skeleton limit.
     */
    BettiReport betti(int i) const;

private:
    int n_;
    int limit_;
    std::vector<std::set<std::vector<int>>> by_dim_;
};

} // namespace holes3d

#endif
