#include "holes3d/linear_system.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

#include "holes3d/errors.hpp"

namespace holes3d {

void LinearSystem::validate() const {
    if (num_vars < 1) {
        throw InputError("LinearSystem: num_vars must be at least 1, got " +
                         std::to_string(num_vars));
    }
    const auto check = [&](const std::vector<LinearConstraint>& cs, const char* kind) {
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (static_cast<int>(cs[i].coeffs.size()) != num_vars) {
                throw InputError(std::string("LinearSystem: ") + kind + " constraint " +
                                 std::to_string(i) + " has " +
                                 std::to_string(cs[i].coeffs.size()) + " coefficients, expected " +
                                 std::to_string(num_vars));
            }
        }
    };
    check(inequalities, "inequality");
    check(equalities, "equality");
}

namespace {

Rat dot_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

} // namespace

StandardFormResult phase_one_standard(const std::vector<std::vector<Rat>>& M,
                                      const std::vector<Rat>& d) {
    const int p = static_cast<int>(M.size());
    const int q = p > 0 ? static_cast<int>(M[0].size()) : 0;
    if (static_cast<int>(d.size()) != p) {
        throw InputError("phase_one_standard: M has " + std::to_string(p) +
                         " rows but d has " + std::to_string(d.size()) + " entries");
    }
    for (const auto& row : M) {
        if (static_cast<int>(row.size()) != q) {
            throw InputError("phase_one_standard: ragged matrix");
        }
    }

    StandardFormResult result;
    if (p == 0) {
        // No equations: z = 0 works vacuously.
        result.feasible = true;
        result.solution.assign(q, Rat(0));
        return result;
    }

    // Flip rows so the right-hand side is nonnegative; remember signs so the
    // infeasibility certificate can be mapped back to the caller's rows.
    std::vector<int> sign(p, 1);
    // Tableau columns: q originals, p artificials, then the right-hand side.
    // The artificial block starts as the identity, so at any later point it
    // holds the current basis inverse.
    const int cols = q + p + 1;
    std::vector<std::vector<Rat>> T(p, std::vector<Rat>(cols));
    for (int i = 0; i < p; ++i) {
        const bool flip = d[i].sign() < 0;
        sign[i] = flip ? -1 : 1;
        for (int j = 0; j < q; ++j) {
            T[i][j] = flip ? -M[i][j] : M[i][j];
        }
        T[i][q + i] = Rat(1);
        T[i][cols - 1] = flip ? -d[i] : d[i];
    }
    std::vector<int> basis(p);
    for (int i = 0; i < p; ++i) {
        basis[i] = q + i;
    }

    // Phase-one objective: sum of artificials. Once an artificial leaves the
    // basis it is never allowed back in, so only original columns are ever
    // entering candidates; with Bland's smallest-index rules this terminates.
    const auto reduced_cost = [&](int j) {
        // cost c_j minus sum over rows whose basic variable is artificial.
        Rat rc(j >= q ? 1 : 0);
        for (int i = 0; i < p; ++i) {
            if (basis[i] >= q) {
                rc -= T[i][j];
            }
        }
        return rc;
    };

    for (;;) {
        int enter = -1;
        for (int j = 0; j < q; ++j) {
            if (reduced_cost(j).sign() < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) {
            break; // optimal
        }
        int leave = -1;
        Rat best_ratio;
        for (int i = 0; i < p; ++i) {
            if (T[i][enter].sign() <= 0) {
                continue;
            }
            Rat ratio = T[i][cols - 1] / T[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) {
            // The phase-one objective is bounded below by zero, so an
            // unbounded ratio test cannot occur on a well-formed tableau.
            throw std::logic_error("phase_one_standard: unbounded phase-one ratio test");
        }
        // Pivot on (leave, enter).
        const Rat piv = T[leave][enter];
        for (int j = 0; j < cols; ++j) {
            T[leave][j] /= piv;
        }
        for (int i = 0; i < p; ++i) {
            if (i == leave || T[i][enter].is_zero()) {
                continue;
            }
            const Rat factor = T[i][enter];
            for (int j = 0; j < cols; ++j) {
                T[i][j] -= factor * T[leave][j];
            }
        }
        basis[leave] = enter;
    }

    Rat objective;
    for (int i = 0; i < p; ++i) {
        if (basis[i] >= q) {
            objective += T[i][cols - 1];
        }
    }

    if (objective.is_zero()) {
        std::vector<Rat> z(q, Rat(0));
        for (int i = 0; i < p; ++i) {
            if (basis[i] < q) {
                z[basis[i]] = T[i][cols - 1];
            }
        }
        // Certify: z >= 0 and M z = d on the caller's (unflipped) data.
        for (const Rat& zi : z) {
            if (zi.sign() < 0) {
                throw std::logic_error("phase_one_standard: negative basic value");
            }
        }
        for (int i = 0; i < p; ++i) {
            if (dot_vec(M[i], z) != d[i]) {
                throw std::logic_error("phase_one_standard: witness fails a row");
            }
        }
        result.feasible = true;
        result.solution = std::move(z);
        return result;
    }

    // Infeasible: read the dual values off the artificial block and flip the
    // signs back. u satisfies uT M <= 0 componentwise and uT d > 0.
    std::vector<Rat> u(p);
    for (int i = 0; i < p; ++i) {
        Rat yi;
        for (int k = 0; k < p; ++k) {
            if (basis[k] >= q) {
                yi += T[k][q + i];
            }
        }
        u[i] = sign[i] < 0 ? -yi : yi;
    }
    for (int j = 0; j < q; ++j) {
        Rat col;
        for (int i = 0; i < p; ++i) {
            col += u[i] * M[i][j];
        }
        if (col.sign() > 0) {
            throw std::logic_error("phase_one_standard: certificate fails column test");
        }
    }
    Rat ud;
    for (int i = 0; i < p; ++i) {
        ud += u[i] * d[i];
    }
    if (ud.sign() <= 0) {
        throw std::logic_error("phase_one_standard: certificate fails positivity test");
    }
    result.feasible = false;
    result.certificate = std::move(u);
    return result;
}

FeasibilityResult lp_feasible(const LinearSystem& system) {
    system.validate();
    const int n = system.num_vars;

    // Expand equalities into <= pairs so everything is one inequality list.
    struct Row {
        const LinearConstraint* c;
        bool negated;
    };
    std::vector<Row> rows;
    rows.reserve(system.inequalities.size() + 2 * system.equalities.size());
    for (const auto& c : system.inequalities) {
        rows.push_back({&c, false});
    }
    for (const auto& c : system.equalities) {
        rows.push_back({&c, false});
        rows.push_back({&c, true});
    }
    const int R = static_cast<int>(rows.size());

    FeasibilityResult result;
    if (R == 0) {
        result.feasible = true;
        result.witness = std::vector<Rat>(n, Rat(0));
        return result;
    }

    const auto row_coeff = [&](int r, int j) {
        const Rat& v = rows[r].c->coeffs[j];
        return rows[r].negated ? -v : v;
    };
    const auto row_rhs = [&](int r) {
        return rows[r].negated ? -rows[r].c->rhs : rows[r].c->rhs;
    };

    // Ax <= b with x free is infeasible exactly when some y >= 0 combines the
    // rows into 0 = AT y with bT y = -1. Solving that alternative in standard
    // form keeps the tableau at n+1 rows however many constraints there are;
    // its own infeasibility certificate scales into a primal witness.
    std::vector<std::vector<Rat>> M(n + 1, std::vector<Rat>(R));
    for (int r = 0; r < R; ++r) {
        for (int j = 0; j < n; ++j) {
            M[j][r] = row_coeff(r, j);
        }
        M[n][r] = row_rhs(r);
    }
    std::vector<Rat> d(n + 1, Rat(0));
    d[n] = Rat(-1);

    StandardFormResult alt = phase_one_standard(M, d);

    const auto verify_point = [&](const std::vector<Rat>& x) {
        for (const auto& c : system.inequalities) {
            if (dot_vec(c.coeffs, x) > c.rhs) {
                throw std::logic_error("lp_feasible: witness violates an inequality");
            }
        }
        for (const auto& c : system.equalities) {
            if (dot_vec(c.coeffs, x) != c.rhs) {
                throw std::logic_error("lp_feasible: witness violates an equality");
            }
        }
    };

    if (!alt.feasible) {
        // u = (w, t) with t < 0 (from uT d = -t > 0); each column test gives
        // dot(A_r, w) + t b_r <= 0, so x = w / (-t) satisfies A x <= b.
        const Rat t = alt.certificate[n];
        if (t.sign() >= 0) {
            throw std::logic_error("lp_feasible: certificate scaling degenerate");
        }
        std::vector<Rat> x(n);
        for (int j = 0; j < n; ++j) {
            x[j] = alt.certificate[j] / -t;
        }
        verify_point(x);
        result.feasible = true;
        result.witness = std::move(x);
        return result;
    }

    // The alternative system is solvable: y proves the original empty.
    // Collapse the equality pairs into free-signed multipliers and verify.
    const std::vector<Rat>& y = alt.solution;
    std::vector<Rat> farkas;
    farkas.reserve(system.inequalities.size() + system.equalities.size());
    std::size_t pos = 0;
    for (std::size_t i = 0; i < system.inequalities.size(); ++i) {
        farkas.push_back(y[pos++]);
    }
    for (std::size_t e = 0; e < system.equalities.size(); ++e) {
        const Rat plus = y[pos++];
        const Rat minus = y[pos++];
        farkas.push_back(plus - minus);
    }
    std::vector<Rat> combo(n, Rat(0));
    Rat rhs_combo;
    std::size_t idx = 0;
    for (const auto& c : system.inequalities) {
        if (farkas[idx].sign() < 0) {
            throw std::logic_error("lp_feasible: negative inequality multiplier");
        }
        for (int j = 0; j < n; ++j) {
            combo[j] += farkas[idx] * c.coeffs[j];
        }
        rhs_combo += farkas[idx] * c.rhs;
        ++idx;
    }
    for (const auto& c : system.equalities) {
        for (int j = 0; j < n; ++j) {
            combo[j] += farkas[idx] * c.coeffs[j];
        }
        rhs_combo += farkas[idx] * c.rhs;
        ++idx;
    }
    for (const Rat& v : combo) {
        if (!v.is_zero()) {
            throw std::logic_error("lp_feasible: multipliers do not cancel");
        }
    }
    if (rhs_combo.sign() >= 0) {
        throw std::logic_error("lp_feasible: combined right-hand side not negative");
    }
    result.feasible = false;
    result.farkas = std::move(farkas);
    return result;
}

} // namespace holes3d
