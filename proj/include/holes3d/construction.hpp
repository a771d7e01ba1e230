#ifndef HOLES3D_CONSTRUCTION_HPP
#define HOLES3D_CONSTRUCTION_HPP

#include <memory>
#include <string>
#include <vector>

#include "holes3d/convex_body.hpp"
#include "holes3d/nerve_prediction.hpp"

namespace holes3d {

/**
 * Parameters of the rationalized universal body and its 3m-translate family.
 * J counts the side paths (defaults to m+1), M the main-path truncation
 * (defaults to m+2). zeta2/zeta3 are the rational surrogate limits of the
 * step sums sum 1/t^2 and sum 1/t^3; they must sit inside (3/2, 7/4) and
 * (1, 5/4) respectively and strictly beyond every partial sum the truncated
 * paths reach, so the surrogate end vertices extend each path.
 */
struct ConstructionParams {
    int m = 1;
    int path_depth = 2;   // J
    int gamma_length = 3; // M
    Rat t = Rat(2);
    Rat zeta2 = Rat(33, 20);
    Rat zeta3 = Rat(6, 5);

    static ConstructionParams defaults(int m);

    /// Throws InputError naming the first violated bound.
    void validate() const;
};

/// The two generating polylines including their surrogate end vertices.
struct PathPair {
    std::vector<Vec3> gamma; // w_{0,0}..w_{0,M}, then the surrogate end
    std::vector<Vec3> eta;   // w_{0,0}..w_{J,0}, then the surrogate end
};

/**
 * Builds both paths from the step recurrences (increment (k^-2, k^-3, 0) for
 * gamma, (0, -j^-2, j^-3) for eta) and verifies the convexity invariants:
 * gamma turns consistently in the plane z = 0 and eta in the plane x = 0,
 * surrogate edges included. Throws InputError (invalid params) or
 * ConstructionError (a convexity predicate fails).
 */
PathPair build_paths(const ConstructionParams& params);

/// The translated grid w_{j,k} = w_{j,0} + w_{0,k} and the edge points v_{j,k}.
struct GridPoints {
    int J = 0;
    int M = 0;
    std::vector<Vec3> w_row;  // w_{j,0} for j = 0..J
    std::vector<Vec3> w_col;  // w_{0,k} for k = 0..M
    Vec3 step_eta;            // surrogate displacement (0, -zeta2, zeta3)
    Vec3 step_gamma;          // surrogate displacement (zeta2, zeta3, 0)

    Vec3 w(int j, int k) const;

    /// v_{j,k} = (1/(j+1)^3) w_{j,k} + (((j+1)^3-1)/(j+1)^3) w_{j,k+1};
    /// at j = 0 this degenerates to w_{0,k}. Valid for 0 <= k < M.
    Vec3 v(int j, int k) const;

    /// Side path j: w_{j,0}, v_{j,0..M-1}, w_{j,M}, then the surrogate end
    /// w_{j,0} + step_gamma, with consecutive duplicates removed (so path 0
    /// is exactly gamma including its surrogate end).
    std::vector<Vec3> side_path(int j) const;
};

GridPoints build_grid(const ConstructionParams& params);

/// Result of assembling the body, kept for reporting: the generating point
/// sets and the certified plane strictly separating them.
struct BodyBuild {
    std::shared_ptr<const ConvexBody> body;
    std::vector<Vec3> front;
    std::vector<Vec3> back;
    Plane separation;
};

/**
 * The universal body: the hull of the front point set (all side paths plus
 * the top surrogate copy of gamma) and the back point set (the vertical
 * segment u0u1 swept along the reflected gamma, surrogate end included).
 * A strict front/back separating plane is certified before hulling; failure
 * throws ConstructionError naming the missing certificate.
 */
BodyBuild build_body(const ConstructionParams& params);

/**
 * The 3m translates of the body, ordered A_1..A_m, B_1..B_m, C_1..C_m with
 * offsets a_i = (0,0,-(i/m) eps), b_j = -w_{j,0}, and
 * c_k = w_{0,k} + w_{0,k+1} - u1.
 */
TranslateFamily build_family(const ConstructionParams& params,
                             std::shared_ptr<const ConvexBody> body,
                             const Rat& eps);

/// The vertical-step budget: the two guard quantities and the validated step.
struct EpsilonBudget {
    Rat eps1;         // separating-slab margin of the grid points w_{j,k}, j,k in [m]
    Rat eps2_squared; // min pairwise squared distance among the v_{j,k} + b_j
    Rat eps;          // validated step, 0 < eps < eps1
    int halvings = 0; // halvings spent by the validation loop
};

/**
 * Certified search for the vertical step. eps1 is a positive margin lower
 * bound obtained from facet violations (normalized by the L1 norm of the
 * facet normal, so no square roots appear); eps2 is kept squared for the
 * same reason. The candidate starts at the largest power of two at most
 * min(eps1, 1/(8m)) (strictly below eps1, with candidate^2 <= eps2_squared)
 * and is halved until the computed nerve of the resulting family equals the
 * predicted nerve; 64 failed halvings raise ConstructionError.
 */
EpsilonBudget choose_epsilon(const ConstructionParams& params,
                             const std::shared_ptr<const ConvexBody>& body,
                             int threads = 1);

/// Maximal-subfamily prediction for the 3m-translate family at a given m.
NervePrediction predicted_nerve(int m);

/// Pass/fail of one witness-point claim with the failing memberships listed.
struct ClaimResult {
    bool pass = true;
    std::vector<std::string> failures;
};

/// The four witness-point claims checked by direct membership evaluation.
struct WitnessReport {
    ClaimResult claim1; // w_{0,k+1} + a_i in A_i, C_k, C_{k+1}
    ClaimResult claim2; // v_{j,k} + a_i + b_j in A_i, B_j, C_k
    ClaimResult claim3; // (0,-1,0) in every A_i and B_j
    ClaimResult claim4; // (zeta2, t, -1) in every B_j and C_k

    bool all_pass() const {
        return claim1.pass && claim2.pass && claim3.pass && claim4.pass;
    }
};

/// Failures are reported as data, never thrown.
WitnessReport verify_witnesses(const ConstructionParams& params,
                               const TranslateFamily& family);

/// Everything one run builds, bundled for reporting.
struct Construction {
    ConstructionParams params;
    PathPair paths;
    BodyBuild body_build;
    EpsilonBudget epsilon;
    TranslateFamily family;
};

Construction build_construction(const ConstructionParams& params, int threads = 1);

} // namespace holes3d

#endif
