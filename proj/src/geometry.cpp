#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "holes3d/convex_body.hpp"
#include "holes3d/errors.hpp"
#include "holes3d/linear_system.hpp"

namespace holes3d {

std::string Translate::label() const {
    return std::string(1, role) + std::to_string(index);
}

bool point_in_body(const ConvexBody& body, const Vec3& offset, const Vec3& p) {
    for (const Facet& f : body.facets) {
        if ((dot(f.normal, p) - (f.offset + dot(f.normal, offset))).sign() > 0) {
            return false;
        }
    }
    return true;
}

bool is_extreme_point(const ConvexBody& body, const Vec3& p) {
    // p is extreme iff it is not a convex combination of the other vertices.
    // Every copy of p is excluded so duplicated input cannot mask itself.
    std::vector<const Vec3*> others;
    for (const Vec3& v : body.vertices) {
        if (v != p) {
            others.push_back(&v);
        }
    }
    if (others.empty()) {
        return point_in_body(body, Vec3(Rat(0), Rat(0), Rat(0)), p);
    }
    const int q = static_cast<int>(others.size());
    std::vector<std::vector<Rat>> M(4, std::vector<Rat>(q));
    for (int j = 0; j < q; ++j) {
        M[0][j] = others[j]->x;
        M[1][j] = others[j]->y;
        M[2][j] = others[j]->z;
        M[3][j] = Rat(1);
    }
    const std::vector<Rat> d = {p.x, p.y, p.z, Rat(1)};
    const StandardFormResult res = phase_one_standard(M, d);
    return !res.feasible;
}

std::optional<Plane> separate(const ConvexBody& a, const ConvexBody& b) {
    // Variables (h, c): dot(p, h) <= c - 1 on a, dot(q, h) >= c + 1 on b.
    // Any feasible point scales to a strict separator, so feasibility is
    // exactly strict separability of the two compact bodies.
    LinearSystem sys;
    sys.num_vars = 4;
    for (const Vec3& p : a.vertices) {
        sys.inequalities.push_back(LinearConstraint{{p.x, p.y, p.z, Rat(-1)}, Rat(-1)});
    }
    for (const Vec3& q : b.vertices) {
        sys.inequalities.push_back(LinearConstraint{{-q.x, -q.y, -q.z, Rat(1)}, Rat(-1)});
    }
    const FeasibilityResult res = lp_feasible(sys);
    if (!res.feasible) {
        return std::nullopt;
    }
    const std::vector<Rat>& w = *res.witness;
    const Vec3 h(w[0], w[1], w[2]);
    // Re-derive the midpoint threshold from the actual supports.
    Rat alpha = dot(h, a.vertices[0]);
    for (const Vec3& p : a.vertices) {
        alpha = std::max(alpha, dot(h, p));
    }
    Rat beta = dot(h, b.vertices[0]);
    for (const Vec3& q : b.vertices) {
        beta = std::min(beta, dot(h, q));
    }
    if (alpha >= beta) {
        throw std::logic_error("separate: witness does not separate");
    }
    return Plane{h, (alpha + beta) / Rat(2)};
}

FeasibilityResult bodies_intersect(const std::vector<Translate>& translates) {
    if (translates.empty()) {
        throw InputError("bodies_intersect: empty translate list");
    }
    // Translates of one body share facet normals; only the tightest shifted
    // offset per facet can bind, which keeps the system small.
    std::map<const ConvexBody*, std::vector<const Translate*>> groups;
    for (const Translate& t : translates) {
        if (!t.body) {
            throw InputError("bodies_intersect: translate without a body");
        }
        groups[t.body.get()].push_back(&t);
    }
    LinearSystem sys;
    sys.num_vars = 3;
    for (const auto& [body, members] : groups) {
        for (const Facet& f : body->facets) {
            Rat off = f.offset + dot(f.normal, members[0]->offset);
            for (std::size_t i = 1; i < members.size(); ++i) {
                off = std::min(off, f.offset + dot(f.normal, members[i]->offset));
            }
            sys.inequalities.push_back(
                LinearConstraint{{f.normal.x, f.normal.y, f.normal.z}, off});
        }
    }
    return lp_feasible(sys);
}

FeasibilityResult bodies_intersect(const TranslateFamily& family,
                                   const std::vector<int>& subset) {
    if (subset.empty()) {
        throw InputError("bodies_intersect: empty index subset");
    }
    std::vector<Translate> sel;
    sel.reserve(subset.size());
    for (int i : subset) {
        if (i < 0 || i >= static_cast<int>(family.translates.size())) {
            throw InputError("bodies_intersect: translate index " + std::to_string(i) +
                             " out of range");
        }
        sel.push_back(family.translates[i]);
    }
    return bodies_intersect(sel);
}

} // namespace holes3d
