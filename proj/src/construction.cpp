#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "holes3d/construction.hpp"
#include "holes3d/errors.hpp"
#include "holes3d/nerve.hpp"

namespace holes3d {

namespace {

/// Partial sum of 1/t^power for t = 1..n.
Rat partial_sum(int n, int power) {
    Rat s(0);
    for (int t = 1; t <= n; ++t) {
        Int p(t);
        if (power == 3) {
            p = p * t * t;
        } else {
            p = p * t;
        }
        s += Rat(Int(1), p);
    }
    return s;
}

std::string rat_str(const Rat& r) {
    return r.str();
}

Rat cross2(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) {
    return ax * by - ay * bx;
}

} // namespace

ConstructionParams ConstructionParams::defaults(int m) {
    ConstructionParams p;
    p.m = m;
    p.path_depth = m + 1;
    p.gamma_length = m + 2;
    return p;
}

void ConstructionParams::validate() const {
    if (m < 1) {
        throw InputError("ConstructionParams: m must be at least 1, got " + std::to_string(m));
    }
    if (path_depth < m + 1) {
        throw InputError("ConstructionParams: path_depth must be at least m+1 = " +
                         std::to_string(m + 1) + ", got " + std::to_string(path_depth));
    }
    if (gamma_length < m + 2) {
        throw InputError("ConstructionParams: gamma_length must be at least m+2 = " +
                         std::to_string(m + 2) + ", got " + std::to_string(gamma_length));
    }
    if (t.sign() <= 0) {
        throw InputError("ConstructionParams: t must be positive, got " + rat_str(t));
    }
    if (!(Rat(3, 2) < zeta2 && zeta2 < Rat(7, 4))) {
        throw InputError("ConstructionParams: zeta2 must lie strictly between 3/2 and 7/4, got " +
                         rat_str(zeta2));
    }
    if (!(Rat(1) < zeta3 && zeta3 < Rat(5, 4))) {
        throw InputError("ConstructionParams: zeta3 must lie strictly between 1 and 5/4, got " +
                         rat_str(zeta3));
    }
    // Both paths consume both step sums (gamma in x and y, eta in y and z),
    // so each surrogate must clear the partial sums at both truncation depths
    // for the surrogate ends to extend the paths.
    const int deep = std::max(path_depth, gamma_length);
    if (!(zeta2 > partial_sum(deep, 2))) {
        throw InputError("ConstructionParams: zeta2 = " + rat_str(zeta2) +
                         " does not exceed the partial sum " + rat_str(partial_sum(deep, 2)) +
                         " of 1/t^2 up to " + std::to_string(deep));
    }
    if (!(zeta3 > partial_sum(deep, 3))) {
        throw InputError("ConstructionParams: zeta3 = " + rat_str(zeta3) +
                         " does not exceed the partial sum " + rat_str(partial_sum(deep, 3)) +
                         " of 1/t^3 up to " + std::to_string(deep));
    }
}

PathPair build_paths(const ConstructionParams& params) {
    params.validate();
    const GridPoints grid = build_grid(params);
    PathPair paths;
    paths.gamma = grid.w_col;
    paths.gamma.push_back(grid.w_col[0] + grid.step_gamma);
    paths.eta = grid.w_row;
    paths.eta.push_back(grid.w_row[0] + grid.step_eta);

    // gamma: planar in z = 0, advancing in x, turning consistently clockwise
    // in (x, y) so the path is convex towards -y.
    for (std::size_t i = 0; i < paths.gamma.size(); ++i) {
        if (!paths.gamma[i].z.is_zero()) {
            throw ConstructionError("build_paths: gamma left the plane z = 0 at vertex " +
                                    std::to_string(i));
        }
        if (i > 0 && (paths.gamma[i].x - paths.gamma[i - 1].x).sign() <= 0) {
            throw ConstructionError("build_paths: gamma does not advance in x at edge " +
                                    std::to_string(i));
        }
        if (i >= 2) {
            const Vec3 e1 = paths.gamma[i - 1] - paths.gamma[i - 2];
            const Vec3 e2 = paths.gamma[i] - paths.gamma[i - 1];
            if (cross2(e1.x, e1.y, e2.x, e2.y).sign() > 0) {
                throw ConstructionError("build_paths: gamma turn at vertex " +
                                        std::to_string(i - 1) + " breaks convexity");
            }
        }
    }
    // eta: planar in x = 0, descending in y, rising in z, turning
    // consistently counter-clockwise in (y, z).
    for (std::size_t i = 0; i < paths.eta.size(); ++i) {
        if (!paths.eta[i].x.is_zero()) {
            throw ConstructionError("build_paths: eta left the plane x = 0 at vertex " +
                                    std::to_string(i));
        }
        if (i > 0 && (paths.eta[i].y - paths.eta[i - 1].y).sign() >= 0) {
            throw ConstructionError("build_paths: eta does not descend in y at edge " +
                                    std::to_string(i));
        }
        if (i > 0 && (paths.eta[i].z - paths.eta[i - 1].z).sign() <= 0) {
            throw ConstructionError("build_paths: eta does not rise in z at edge " +
                                    std::to_string(i));
        }
        if (i >= 2) {
            const Vec3 e1 = paths.eta[i - 1] - paths.eta[i - 2];
            const Vec3 e2 = paths.eta[i] - paths.eta[i - 1];
            if (cross2(e1.y, e1.z, e2.y, e2.z).sign() < 0) {
                throw ConstructionError("build_paths: eta turn at vertex " +
                                        std::to_string(i - 1) + " breaks convexity");
            }
        }
    }
    return paths;
}

Vec3 GridPoints::w(int j, int k) const {
    if (j < 0 || j > J || k < 0 || k > M) {
        throw InputError("GridPoints::w: index (" + std::to_string(j) + "," +
                         std::to_string(k) + ") outside the grid");
    }
    return w_row[j] + w_col[k];
}

Vec3 GridPoints::v(int j, int k) const {
    if (j < 0 || j > J || k < 0 || k >= M) {
        throw InputError("GridPoints::v: index (" + std::to_string(j) + "," +
                         std::to_string(k) + ") outside the grid");
    }
    const Int cube = Int(j + 1) * Int(j + 1) * Int(j + 1);
    const Rat lo(Int(1), cube);
    const Rat hi(cube - 1, cube);
    return lo * w(j, k) + hi * w(j, k + 1);
}

std::vector<Vec3> GridPoints::side_path(int j) const {
    if (j < 0 || j > J) {
        throw InputError("GridPoints::side_path: index " + std::to_string(j) +
                         " outside the grid");
    }
    std::vector<Vec3> raw;
    raw.push_back(w(j, 0));
    for (int k = 0; k < M; ++k) {
        raw.push_back(v(j, k));
    }
    raw.push_back(w(j, M));
    raw.push_back(w(j, 0) + step_gamma);
    std::vector<Vec3> path;
    for (const Vec3& p : raw) {
        if (path.empty() || !(path.back() == p)) {
            path.push_back(p);
        }
    }
    return path;
}

GridPoints build_grid(const ConstructionParams& params) {
    params.validate();
    GridPoints grid;
    grid.J = params.path_depth;
    grid.M = params.gamma_length;
    grid.step_gamma = Vec3(params.zeta2, params.zeta3, Rat(0));
    grid.step_eta = Vec3(Rat(0), -params.zeta2, params.zeta3);
    grid.w_col.push_back(Vec3(Rat(0), Rat(0), Rat(0)));
    for (int k = 1; k <= grid.M; ++k) {
        const Int k2 = Int(k) * k;
        const Int k3 = k2 * k;
        grid.w_col.push_back(grid.w_col.back() +
                             Vec3(Rat(Int(1), k2), Rat(Int(1), k3), Rat(0)));
    }
    grid.w_row.push_back(Vec3(Rat(0), Rat(0), Rat(0)));
    for (int j = 1; j <= grid.J; ++j) {
        const Int j2 = Int(j) * j;
        const Int j3 = j2 * j;
        grid.w_row.push_back(grid.w_row.back() +
                             Vec3(Rat(0), -Rat(Int(1), j2), Rat(Int(1), j3)));
    }
    return grid;
}

BodyBuild build_body(const ConstructionParams& params) {
    build_paths(params); // runs validation and the convexity predicates
    const GridPoints grid = build_grid(params);

    BodyBuild out;
    const std::vector<Vec3> gamma_path = grid.side_path(0);
    for (int j = 0; j <= grid.J; ++j) {
        const std::vector<Vec3> path = grid.side_path(j);
        out.front.insert(out.front.end(), path.begin(), path.end());
    }
    // The limiting side path: a copy of gamma displaced by the eta surrogate.
    for (const Vec3& p : gamma_path) {
        out.front.push_back(p + grid.step_eta);
    }

    const Vec3 u0(params.zeta2, -params.t, Rat(0));
    const Vec3 u1(params.zeta2, -params.t, params.zeta3);
    // Rectangles (segment u0 u1) - E_k, the surrogate end included, have
    // vertex set {u0, u1} minus the gamma vertices.
    for (const Vec3& p : gamma_path) {
        out.back.push_back(u0 - p);
        out.back.push_back(u1 - p);
    }

    const ConvexBody front_hull = convex_hull(out.front, "Front");
    const ConvexBody back_hull = convex_hull(out.back, "Back");
    const std::optional<Plane> sep = separate(front_hull, back_hull);
    if (!sep) {
        throw ConstructionError(
            "build_body: no strict separating plane between the front and back point sets");
    }
    out.separation = *sep;

    std::vector<Vec3> all = out.front;
    all.insert(all.end(), out.back.begin(), out.back.end());
    ConvexBody body = convex_hull(all, "K");
    if (body.affine_dim != 3) {
        throw ConstructionError("build_body: the body is not full-dimensional");
    }
    out.body = std::make_shared<const ConvexBody>(std::move(body));
    return out;
}

TranslateFamily build_family(const ConstructionParams& params,
                             std::shared_ptr<const ConvexBody> body,
                             const Rat& eps) {
    params.validate();
    if (!body) {
        throw InputError("build_family: missing body");
    }
    if (eps.sign() <= 0) {
        throw InputError("build_family: eps must be positive, got " + rat_str(eps));
    }
    const GridPoints grid = build_grid(params);
    const int m = params.m;
    const Vec3 u1(params.zeta2, -params.t, params.zeta3);

    TranslateFamily family;
    family.bodies = {body};
    for (int i = 1; i <= m; ++i) {
        const Vec3 a(Rat(0), Rat(0), -Rat(i, m) * eps);
        family.translates.push_back(Translate{body, a, 'A', i});
    }
    for (int j = 1; j <= m; ++j) {
        family.translates.push_back(Translate{body, -grid.w(j, 0), 'B', j});
    }
    for (int k = 1; k <= m; ++k) {
        const Vec3 c = grid.w(0, k) + grid.w(0, k + 1) - u1;
        family.translates.push_back(Translate{body, c, 'C', k});
    }
    return family;
}

NervePrediction predicted_nerve(int m) {
    if (m < 1) {
        throw InputError("predicted_nerve: m must be at least 1");
    }
    // Translate ids in family order: A_i -> i-1, B_j -> m+j-1, C_k -> 2m+k-1.
    const auto A = [m](int i) { return i - 1 + 0 * m; };
    const auto B = [m](int j) { return m + j - 1; };
    const auto C = [m](int k) { return 2 * m + k - 1; };

    std::set<std::vector<int>> families;
    std::vector<int> delta1, delta2;
    for (int i = 1; i <= m; ++i) {
        delta1.push_back(A(i));
        delta2.push_back(B(i));
    }
    for (int j = 1; j <= m; ++j) {
        delta1.push_back(B(j));
        delta2.push_back(C(j));
    }
    families.insert(delta1);
    families.insert(delta2);
    for (int i = 1; i <= m; ++i) {
        for (int k = 1; k + 1 <= m; ++k) {
            families.insert({A(i), C(k), C(k + 1)});
        }
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            for (int k = 1; k <= m; ++k) {
                std::vector<int> f = {A(i), B(j), C(k)};
                std::sort(f.begin(), f.end());
                families.insert(f);
            }
        }
    }
    NervePrediction pred;
    pred.m = m;
    pred.n = 3 * m;
    for (const auto& f : families) {
        bool maximal = true;
        for (const auto& g : families) {
            if (f.size() < g.size() &&
                std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            pred.maximal_families.push_back(f);
        }
    }
    return pred;
}

WitnessReport verify_witnesses(const ConstructionParams& params,
                               const TranslateFamily& family) {
    params.validate();
    const int m = params.m;
    if (family.size() != 3 * m) {
        throw InputError("verify_witnesses: family has " + std::to_string(family.size()) +
                         " translates, expected " + std::to_string(3 * m));
    }
    const GridPoints grid = build_grid(params);
    const auto translate_at = [&](char role, int idx) -> const Translate& {
        const int base = role == 'A' ? 0 : role == 'B' ? m : 2 * m;
        return family.translates[base + idx - 1];
    };
    const auto check = [&](ClaimResult& claim, char role, int idx, const Vec3& p,
                           const std::string& desc) {
        const Translate& t = translate_at(role, idx);
        if (!point_in_body(*t.body, t.offset, p)) {
            claim.pass = false;
            claim.failures.push_back(t.label() + " misses " + desc);
        }
    };

    WitnessReport rep;
    for (int i = 1; i <= m; ++i) {
        const Vec3 a = translate_at('A', i).offset;
        for (int k = 1; k + 1 <= m; ++k) {
            const Vec3 p = grid.w(0, k + 1) + a;
            const std::string desc =
                "w(0," + std::to_string(k + 1) + ") + a" + std::to_string(i);
            check(rep.claim1, 'A', i, p, desc);
            check(rep.claim1, 'C', k, p, desc);
            check(rep.claim1, 'C', k + 1, p, desc);
        }
    }
    for (int i = 1; i <= m; ++i) {
        const Vec3 a = translate_at('A', i).offset;
        for (int j = 1; j <= m; ++j) {
            const Vec3 b = translate_at('B', j).offset;
            for (int k = 1; k <= m; ++k) {
                const Vec3 p = grid.v(j, k) + a + b;
                const std::string desc = "v(" + std::to_string(j) + "," + std::to_string(k) +
                                         ") + a" + std::to_string(i) + " + b" +
                                         std::to_string(j);
                check(rep.claim2, 'A', i, p, desc);
                check(rep.claim2, 'B', j, p, desc);
                check(rep.claim2, 'C', k, p, desc);
            }
        }
    }
    const Vec3 bottom(Rat(0), Rat(-1), Rat(0));
    for (int i = 1; i <= m; ++i) {
        check(rep.claim3, 'A', i, bottom, "(0,-1,0)");
        check(rep.claim3, 'B', i, bottom, "(0,-1,0)");
    }
    const Vec3 side(params.zeta2, params.t, Rat(-1));
    const std::string side_desc = "(zeta2," + rat_str(params.t) + ",-1)";
    for (int i = 1; i <= m; ++i) {
        check(rep.claim4, 'B', i, side, side_desc);
        check(rep.claim4, 'C', i, side, side_desc);
    }
    return rep;
}

Construction build_construction(const ConstructionParams& params, int threads) {
    Construction c;
    c.params = params;
    c.paths = build_paths(params);
    c.body_build = build_body(params);
    c.epsilon = choose_epsilon(params, c.body_build.body, threads);
    c.family = build_family(params, c.body_build.body, c.epsilon.eps);
    return c;
}

} // namespace holes3d
