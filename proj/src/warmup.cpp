#include <memory>
#include <optional>
#include <vector>

#include "holes3d/errors.hpp"
#include "holes3d/warmup.hpp"

namespace holes3d {

namespace {

/// cx * x + cz * z <= rhs in the plane y = 0.
struct PlanarConstraint {
    Rat cx, cz, rhs;
};

/// Exact maximum of z over the polygon cut out by the constraints, found by
/// enumerating all pairwise line intersections and keeping feasible ones.
/// Returns nothing when the polygon is empty.
std::optional<Rat> max_z_of_planar_cell(const std::vector<PlanarConstraint>& cons) {
    std::optional<Rat> best;
    const int n = static_cast<int>(cons.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Rat det = cons[i].cx * cons[j].cz - cons[j].cx * cons[i].cz;
            if (det.is_zero()) {
                continue;
            }
            const Rat x = (cons[i].rhs * cons[j].cz - cons[j].rhs * cons[i].cz) / det;
            const Rat z = (cons[i].cx * cons[j].rhs - cons[j].cx * cons[i].rhs) / det;
            bool feasible = true;
            for (int k = 0; k < n && feasible; ++k) {
                feasible = (cons[k].cx * x + cons[k].cz * z - cons[k].rhs).sign() <= 0;
            }
            if (feasible && (!best || z > *best)) {
                best = z;
            }
        }
    }
    return best;
}

/// Offset that moves vertex e of the body onto the edge ab at x = (2j-1)/(2m).
Vec3 cone_offset(const WarmupSpec& spec, int j) {
    const Rat x(2 * j - 1, 2 * spec.m);
    return Vec3(x, Rat(0), Rat(0)) - spec.e;
}

} // namespace

ConvexBody build_warmup_body() {
    const std::vector<Vec3> pts = {
        Vec3(Rat(0), Rat(0), Rat(0)),           // a
        Vec3(Rat(1), Rat(0), Rat(0)),           // b
        Vec3(Rat(0), Rat(0), Rat(-1)),          // c
        Vec3(Rat(1), Rat(0), Rat(-1)),          // d
        Vec3(Rat(1, 2), Rat(1, 2), Rat(1, 2)),  // e
        Vec3(Rat(0), Rat(1), Rat(0)),           // f
        Vec3(Rat(1), Rat(1), Rat(0)),           // g
    };
    return convex_hull(pts, "K");
}

WarmupFamily build_warmup_family(int m) {
    if (m < 2) {
        throw InputError("build_warmup_family: m must be at least 2");
    }
    WarmupFamily out;
    WarmupSpec& spec = out.spec;
    spec.a = Vec3(Rat(0), Rat(0), Rat(0));
    spec.b = Vec3(Rat(1), Rat(0), Rat(0));
    spec.c = Vec3(Rat(0), Rat(0), Rat(-1));
    spec.d = Vec3(Rat(1), Rat(0), Rat(-1));
    spec.e = Vec3(Rat(1, 2), Rat(1, 2), Rat(1, 2));
    spec.f = Vec3(Rat(0), Rat(1), Rat(0));
    spec.g = Vec3(Rat(1), Rat(1), Rat(0));
    spec.m = m;

    auto body = std::make_shared<const ConvexBody>(build_warmup_body());

    // Depth of the notch between two consecutive cones, measured on the
    // plane of the facet {a, b, c, d}: the highest point of the planar cell
    // (cone 1) cap (cone 2) cap {y = 0} sits at z = -ell.
    std::vector<PlanarConstraint> cons;
    for (int j : {1, 2}) {
        const Vec3 off = cone_offset(spec, j);
        for (const Facet& f : body->facets) {
            cons.push_back(PlanarConstraint{f.normal.x, f.normal.z,
                                            f.offset + dot(f.normal, off)});
        }
    }
    const std::optional<Rat> top = max_z_of_planar_cell(cons);
    if (!top || top->sign() >= 0) {
        throw ConstructionError(
            "build_warmup_family: consecutive cones leave no notch below the facet");
    }
    spec.ell = -*top;
    spec.c_prime = Vec3(Rat(0), Rat(0), -spec.ell);

    out.family.bodies = {body};
    for (int i = 1; i <= m; ++i) {
        // Move vertex f onto the segment from a towards c_prime, at depth
        // (2i-1) ell / (2m); consecutive positions are ell/m apart.
        const Vec3 target(Rat(0), Rat(0), Rat(-(2 * i - 1)) * spec.ell / Rat(2 * m));
        out.family.translates.push_back(Translate{body, target - spec.f, 'A', i});
    }
    for (int j = 1; j <= m; ++j) {
        out.family.translates.push_back(Translate{body, cone_offset(spec, j), 'B', j});
    }
    out.family.translates.push_back(
        Translate{body, Vec3(Rat(0), Rat(0), Rat(0)), 'C', 1});
    return out;
}

} // namespace holes3d
