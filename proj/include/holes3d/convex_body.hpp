#ifndef HOLES3D_CONVEX_BODY_HPP
#define HOLES3D_CONVEX_BODY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holes3d/linear_system.hpp"
#include "holes3d/vec3.hpp"

namespace holes3d {

/// The plane dot(normal, x) = offset.
struct Plane {
    Vec3 normal;
    Rat offset;
};

/**
 * One facet inequality dot(normal, x) <= offset of a polytope. For a
 * full-dimensional body, `vertices` lists the indices of the vertices lying
 * on the facet plane, in counter-clockwise order as seen from outside, and
 * the normal is scaled to a primitive integer vector.
 */
struct Facet {
    Vec3 normal;
    Rat offset;
    std::vector<int> vertices;
};

/**
 * Compact convex polytope carrying both descriptions: the extreme points
 * (V-description) and the facet inequalities (H-description). Lower
 * dimensional point sets are representable: affine_dim records the actual
 * dimension (0..3) and the facet system always pins the set exactly, so
 * membership tests stay meaningful for degenerate bodies.
 */
struct ConvexBody {
    int affine_dim = -1;
    std::vector<Vec3> vertices;
    std::vector<Facet> facets;
    std::string label;
};

/**
 * Exact convex hull. Full-dimensional inputs run through incremental
 * insertion with exact orientation predicates followed by coplanar-triangle
 * merging; flat inputs produce the degenerate representation. Every returned
 * body is self-checked (facet support, edge pairing, Euler count) before it
 * leaves this function.
 *
 * @param points  at least one point; duplicates are allowed and ignored.
 * @param label   stored on the result for report/export naming.
 */
ConvexBody convex_hull(const std::vector<Vec3>& points, const std::string& label = "");

/// Closed membership test: does p - offset satisfy every facet of body?
bool point_in_body(const ConvexBody& body, const Vec3& offset, const Vec3& p);

/**
 * Is p outside the convex hull of the body's other vertices? Occurrences of
 * p itself are excluded from the hull, so the test is meaningful both for
 * actual vertices and for candidate points that were merged away.
 */
bool is_extreme_point(const ConvexBody& body, const Vec3& p);

/**
 * Strict separation of two vertex sets. Returns a plane with every vertex of
 * `a` strictly below and every vertex of `b` strictly above, or nothing when
 * the convex hulls intersect (closed semantics: touching hulls have no
 * strict separator).
 */
std::optional<Plane> separate(const ConvexBody& a, const ConvexBody& b);

/// A translated copy body + {offset} with a family role label.
struct Translate {
    std::shared_ptr<const ConvexBody> body;
    Vec3 offset;
    char role = 'G'; // 'A', 'B', 'C', or 'G' for generic
    int index = 1;

    /// "A1", "B3", "G7", ...
    std::string label() const;
};

/// An ordered family of translates over one or more shared base bodies.
struct TranslateFamily {
    std::vector<std::shared_ptr<const ConvexBody>> bodies;
    std::vector<Translate> translates;

    int size() const { return static_cast<int>(translates.size()); }
};

/**
 * Nonempty-intersection test over the listed translates by one 3-variable
 * feasibility LP on the stacked shifted facet systems. Translates sharing a
 * base body are collapsed to one inequality per facet (the minimum shifted
 * offset), which keeps the constraint count at the facet count rather than
 * multiplying it by the subset size. Throws InputError on an empty list.
 */
FeasibilityResult bodies_intersect(const std::vector<Translate>& translates);

/// Same test on the subset of family members selected by index.
FeasibilityResult bodies_intersect(const TranslateFamily& family,
                                   const std::vector<int>& subset);

} // namespace holes3d

#endif
