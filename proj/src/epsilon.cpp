#include <algorithm>
#include <vector>

#include "holes3d/construction.hpp"
#include "holes3d/errors.hpp"
#include "holes3d/nerve.hpp"

namespace holes3d {

namespace {

/// Largest power of two (possibly fractional) not exceeding x > 0.
Rat pow2_at_most(const Rat& x) {
    Rat s(1);
    while (s > x) {
        s = s / Rat(2);
    }
    while (s * Rat(2) <= x) {
        s = s * Rat(2);
    }
    return s;
}

} // namespace

EpsilonBudget choose_epsilon(const ConstructionParams& params,
                             const std::shared_ptr<const ConvexBody>& body,
                             int threads) {
    params.validate();
    if (!body) {
        throw InputError("choose_epsilon: missing body");
    }
    const GridPoints grid = build_grid(params);
    const int m = params.m;

    // eps1: every interior grid point w(j,k), j,k in 1..m, must sit strictly
    // outside the body; its distance is bounded below by the largest facet
    // violation divided by the L1 norm of that facet's normal, since
    // |n . d| <= |n|_1 max_i |d_i| for any displacement d.
    EpsilonBudget budget;
    bool have_eps1 = false;
    for (int j = 1; j <= m; ++j) {
        for (int k = 1; k <= m; ++k) {
            const Vec3 p = grid.w(j, k);
            Rat best(0);
            for (const Facet& f : body->facets) {
                const Rat violation = dot(f.normal, p) - f.offset;
                if (violation.sign() > 0) {
                    best = std::max(best, violation / l1_norm(f.normal));
                }
            }
            if (best.sign() <= 0) {
                throw ConstructionError("choose_epsilon: grid point w(" + std::to_string(j) +
                                        "," + std::to_string(k) + ") lies inside the body");
            }
            if (!have_eps1 || best < budget.eps1) {
                budget.eps1 = best;
                have_eps1 = true;
            }
        }
    }

    // eps2: minimum pairwise squared distance among the points v(j,k) + b_j,
    // kept squared so no roots are needed.
    std::vector<Vec3> shifted;
    for (int j = 1; j <= m; ++j) {
        for (int k = 1; k <= m; ++k) {
            shifted.push_back(grid.v(j, k) - grid.w(j, 0));
        }
    }
    bool have_eps2 = false;
    for (std::size_t a = 0; a < shifted.size(); ++a) {
        for (std::size_t b = a + 1; b < shifted.size(); ++b) {
            const Rat d2 = squared_norm(shifted[a] - shifted[b]);
            if (d2.is_zero()) {
                throw ConstructionError("choose_epsilon: two shifted edge points coincide");
            }
            if (!have_eps2 || d2 < budget.eps2_squared) {
                budget.eps2_squared = d2;
                have_eps2 = true;
            }
        }
    }
    if (!have_eps2) {
        budget.eps2_squared = budget.eps1 * budget.eps1; // m = 1: only one point
    }

    // Dyadic seed: the largest power of two at most min(eps1, 1/(8m)),
    // tightened to stay strictly below eps1 and within the eps2 budget.
    Rat eps = pow2_at_most(std::min(budget.eps1, Rat(1, 8 * m)));
    while (eps >= budget.eps1) {
        eps = eps / Rat(2);
    }
    while (eps * eps > budget.eps2_squared) {
        eps = eps / Rat(2);
    }

    const NervePrediction prediction = predicted_nerve(m);
    for (int halvings = 0; halvings <= 64; ++halvings) {
        const TranslateFamily family = build_family(params, body, eps);
        const NerveResult nerve = nerve_skeleton(family, 3, threads);
        const NerveDiff diff = verify_nerve_matches(nerve.complex, prediction);
        if (diff.matches) {
            budget.eps = eps;
            budget.halvings = halvings;
            return budget;
        }
        eps = eps / Rat(2);
    }
    throw ConstructionError(
        "choose_epsilon: no step validated the predicted nerve within 64 halvings");
}

} // namespace holes3d
