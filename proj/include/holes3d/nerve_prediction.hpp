#ifndef HOLES3D_NERVE_PREDICTION_HPP
#define HOLES3D_NERVE_PREDICTION_HPP

#include <vector>

namespace holes3d {

/**
 * A combinatorial prediction of a family's nerve, given as the
 * inclusion-maximal vertex subsets: the predicted nerve is exactly the
 * downward closure of these families. Vertex ids follow the family order
 * (for the 3m-member families: A_i -> i-1, B_j -> m+j-1, C_k -> 2m+k-1).
 */
struct NervePrediction {
    int m = 0;
    int n = 0; // number of vertices (3m for the standard families)
    std::vector<std::vector<int>> maximal_families; // sorted, mutually incomparable
};

} // namespace holes3d

#endif
