#ifndef HOLES3D_LINEAR_SYSTEM_HPP
#define HOLES3D_LINEAR_SYSTEM_HPP

#include <optional>
#include <vector>

#include "holes3d/rational.hpp"

namespace holes3d {

/// One linear constraint over a fixed variable count: dot(coeffs, x) <= rhs
/// (or == rhs when stored among a system's equalities).
struct LinearConstraint {
    std::vector<Rat> coeffs;
    Rat rhs;
};

/// Mixed system of inequality (<=) and equality (==) constraints.
struct LinearSystem {
    int num_vars = 0;
    std::vector<LinearConstraint> inequalities;
    std::vector<LinearConstraint> equalities;

    /// Throws InputError when num_vars < 1 or a constraint width mismatches.
    void validate() const;
};

/**
 * Outcome of an exact feasibility test. Exactly one of witness / farkas is
 * engaged. A witness satisfies every constraint of the system it was computed
 * for. Farkas multipliers follow the system's constraint order (inequalities
 * first, then equalities); the inequality multipliers are nonnegative, and
 * the combination sums the constraint rows to the zero functional with a
 * strictly negative combined right-hand side, proving emptiness. Both kinds
 * of certificate are re-verified by substitution before being returned.
 */
struct FeasibilityResult {
    bool feasible = false;
    std::optional<std::vector<Rat>> witness;
    std::optional<std::vector<Rat>> farkas;
};

/// Exact feasibility of a mixed system over free variables.
FeasibilityResult lp_feasible(const LinearSystem& system);

/**
 * Phase-one simplex on the standard form question: is there z >= 0 with
 * M z = d? When feasible, `solution` holds such a z; when infeasible,
 * `certificate` holds u with uT M <= 0 componentwise and uT d > 0.
 */
struct StandardFormResult {
    bool feasible = false;
    std::vector<Rat> solution;
    std::vector<Rat> certificate;
};

StandardFormResult phase_one_standard(const std::vector<std::vector<Rat>>& M,
                                      const std::vector<Rat>& d);

} // namespace holes3d

#endif
