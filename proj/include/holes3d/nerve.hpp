#ifndef HOLES3D_NERVE_HPP
#define HOLES3D_NERVE_HPP

#include <map>
#include <optional>

#include "holes3d/convex_body.hpp"
#include "holes3d/nerve_prediction.hpp"
#include "holes3d/simplicial_complex.hpp"

namespace holes3d {

/// Computed nerve skeleton plus, for every simplex of dimension >= 1, an
/// exact witness point of the corresponding common intersection.
struct NerveResult {
    SimplicialComplex complex;
    std::map<std::vector<int>, Vec3> witnesses;
};

/**
 * The nerve of the family, truncated at max_dim: a subset of translates is a
 * simplex exactly when the common intersection is nonempty (closed
 * semantics). Candidates are generated level by level, so a subset is only
 * LP-tested when all of its facets are already simplices; the per-subset
 * tests may run concurrently, with results merged in a fixed order.
 */
NerveResult nerve_skeleton(const TranslateFamily& family, int max_dim, int threads = 1);

/// Two-sided difference between a computed nerve and a prediction (sizes <= 4).
struct NerveDiff {
    bool matches = false;
    std::vector<std::vector<int>> extra;   // stored, but inside no predicted family
    std::vector<std::vector<int>> missing; // predicted, but not stored
};

/**
 * Checks that every stored simplex of size <= 4 lies inside some predicted
 * maximal family and that every size <= 4 subset of a predicted family is
 * stored. Requires the complex to carry at least the 3-skeleton.
 */
NerveDiff verify_nerve_matches(const SimplicialComplex& nerve,
                               const NervePrediction& prediction);

/// Hole count of a family's union along with everything that produced it.
struct HoleReport {
    int n = 0;                         // family size
    std::vector<long long> simplex_counts; // dimensions 0..3
    BettiReport betti2;
    long long holes = 0;               // betti2.betti + 1, unbounded component included
    long long bound = 0;               // C(n,3) + 1
    bool bound_holds = false;
    std::optional<long long> predicted_holes; // set by callers when a closed form applies
};

/**
 * Number of connected components of the complement of the union: beta_2 of
 * the nerve's 3-skeleton plus one. The count includes the unbounded
 * component, so a single body yields 1.
 */
HoleReport hole_count(const TranslateFamily& family, int threads = 1);

/// Does the report satisfy holes <= C(n,3) + 1?
bool upper_bound_holds(const HoleReport& report);

/// Exact binomial coefficient (0 when k < 0 or k > n).
Int binomial(int n, int k);

/// Closed-form expected values for the 3m-translate family at a given m.
struct FamilyFormulas {
    long long c2_count = 0;  // m^3 + m(m-1) + 2*C(2m,3) - C(m,3)
    long long c3_count = 0;  // 2*C(2m,4) - C(m,4)
    long long rank_d2 = 0;   // C(3m-1,2)
    long long rank_d3 = 0;   // 2*C(2m-1,3) - C(m-1,3)
    long long betti2 = 0;    // m^3 - m
    long long holes = 0;     // m^3 - m + 1
};

FamilyFormulas predicted_counts(int m);

} // namespace holes3d

#endif
