#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "holes3d/convex_body.hpp"
#include "holes3d/errors.hpp"
#include "holes3d/warmup.hpp"

using holes3d::ConvexBody;
using holes3d::convex_hull;
using holes3d::Facet;
using holes3d::InputError;
using holes3d::Rat;
using holes3d::Vec3;
using holes3d::dot;
using holes3d::point_in_body;
using holes3d::is_extreme_point;

namespace {

const Vec3 ZERO(Rat(0), Rat(0), Rat(0));

std::vector<Vec3> cube_corners() {
    std::vector<Vec3> pts;
    for (int x = 0; x <= 1; ++x) {
        for (int y = 0; y <= 1; ++y) {
            for (int z = 0; z <= 1; ++z) {
                pts.push_back(Vec3(Rat(x), Rat(y), Rat(z)));
            }
        }
    }
    return pts;
}

std::set<Vec3> vertex_set(const ConvexBody& b) {
    return std::set<Vec3>(b.vertices.begin(), b.vertices.end());
}

/// Every vertex satisfies every facet, and the facet's vertex ring lists
/// exactly the vertices attaining equality.
void check_facet_support(const ConvexBody& b) {
    for (const Facet& f : b.facets) {
        std::set<int> on_plane;
        for (int i = 0; i < static_cast<int>(b.vertices.size()); ++i) {
            const Rat d = dot(f.normal, b.vertices[i]);
            CHECK(d <= f.offset);
            if (d == f.offset) {
                on_plane.insert(i);
            }
        }
        if (b.affine_dim == 3) {
            CHECK(std::set<int>(f.vertices.begin(), f.vertices.end()) == on_plane);
        }
    }
}

long long edge_count(const ConvexBody& b) {
    std::set<std::pair<int, int>> edges;
    for (const Facet& f : b.facets) {
        const int k = static_cast<int>(f.vertices.size());
        for (int i = 0; i < k; ++i) {
            int u = f.vertices[i], v = f.vertices[(i + 1) % k];
            if (u > v) {
                std::swap(u, v);
            }
            edges.insert({u, v});
        }
    }
    return static_cast<long long>(edges.size());
}

} // namespace

TEST_CASE("cube with interior and duplicate points") {
    std::vector<Vec3> pts = cube_corners();
    pts.push_back(Vec3(Rat(1, 2), Rat(1, 2), Rat(1, 2)));
    pts.push_back(pts[0]);
    const ConvexBody b = convex_hull(pts, "box");
    CHECK(b.affine_dim == 3);
    CHECK(b.vertices.size() == 8);
    CHECK(b.facets.size() == 6);
    CHECK(b.label == "box");
    for (const Facet& f : b.facets) {
        CHECK(f.vertices.size() == 4);
    }
    check_facet_support(b);
    const std::vector<Vec3> corners = cube_corners();
    CHECK(vertex_set(b) == std::set<Vec3>(corners.begin(), corners.end()));
    CHECK(8 - edge_count(b) + 6 == 2);
}

TEST_CASE("tetrahedron") {
    const std::vector<Vec3> pts = {
        Vec3(Rat(0), Rat(0), Rat(0)), Vec3(Rat(2), Rat(0), Rat(0)),
        Vec3(Rat(0), Rat(2), Rat(0)), Vec3(Rat(0), Rat(0), Rat(2))};
    const ConvexBody b = convex_hull(pts);
    CHECK(b.affine_dim == 3);
    CHECK(b.vertices.size() == 4);
    CHECK(b.facets.size() == 4);
    for (const Facet& f : b.facets) {
        CHECK(f.vertices.size() == 3);
    }
    check_facet_support(b);
}

TEST_CASE("seven point body supports its base plane on exactly four vertices") {
    const ConvexBody b = holes3d::build_warmup_body();
    CHECK(b.affine_dim == 3);
    CHECK(b.vertices.size() == 7);
    CHECK(b.facets.size() == 8);
    check_facet_support(b);

    // The plane y = 0 must appear as the facet {a, b, c, d}.
    bool found = false;
    for (const Facet& f : b.facets) {
        if (f.normal == Vec3(Rat(0), Rat(-1), Rat(0))) {
            found = true;
            CHECK(f.offset == Rat(0));
            std::set<Vec3> ring;
            for (int id : f.vertices) {
                ring.insert(b.vertices[id]);
            }
            const std::set<Vec3> expected = {
                Vec3(Rat(0), Rat(0), Rat(0)), Vec3(Rat(1), Rat(0), Rat(0)),
                Vec3(Rat(0), Rat(0), Rat(-1)), Vec3(Rat(1), Rat(0), Rat(-1))};
            CHECK(ring == expected);
        }
    }
    CHECK(found);
    for (const Vec3& v : b.vertices) {
        CHECK(is_extreme_point(b, v));
    }
}

TEST_CASE("flat inputs keep exact membership") {
    SUBCASE("square") {
        const std::vector<Vec3> pts = {
            Vec3(Rat(0), Rat(0), Rat(1)), Vec3(Rat(2), Rat(0), Rat(1)),
            Vec3(Rat(2), Rat(2), Rat(1)), Vec3(Rat(0), Rat(2), Rat(1)),
            Vec3(Rat(1), Rat(1), Rat(1))};
        const ConvexBody b = convex_hull(pts);
        CHECK(b.affine_dim == 2);
        CHECK(b.vertices.size() == 4);
        CHECK(point_in_body(b, ZERO, Vec3(Rat(1), Rat(1), Rat(1))));
        CHECK(point_in_body(b, ZERO, Vec3(Rat(2), Rat(2), Rat(1))));
        CHECK(!point_in_body(b, ZERO, Vec3(Rat(1), Rat(1), Rat(3, 2))));
        CHECK(!point_in_body(b, ZERO, Vec3(Rat(3), Rat(1), Rat(1))));
    }
    SUBCASE("segment") {
        const std::vector<Vec3> pts = {
            Vec3(Rat(0), Rat(0), Rat(0)), Vec3(Rat(2), Rat(2), Rat(2)),
            Vec3(Rat(1), Rat(1), Rat(1))};
        const ConvexBody b = convex_hull(pts);
        CHECK(b.affine_dim == 1);
        CHECK(b.vertices.size() == 2);
        CHECK(point_in_body(b, ZERO, Vec3(Rat(1, 2), Rat(1, 2), Rat(1, 2))));
        CHECK(!point_in_body(b, ZERO, Vec3(Rat(1, 2), Rat(1, 2), Rat(1))));
        CHECK(!point_in_body(b, ZERO, Vec3(Rat(3), Rat(3), Rat(3))));
    }
    SUBCASE("point") {
        const ConvexBody b = convex_hull({Vec3(Rat(1, 3), Rat(0), Rat(-2)),
                                          Vec3(Rat(1, 3), Rat(0), Rat(-2))});
        CHECK(b.affine_dim == 0);
        CHECK(b.vertices.size() == 1);
        CHECK(point_in_body(b, ZERO, Vec3(Rat(1, 3), Rat(0), Rat(-2))));
        CHECK(!point_in_body(b, ZERO, ZERO));
    }
}

TEST_CASE("empty input is rejected") {
    CHECK_THROWS_AS(convex_hull({}), InputError);
}

TEST_CASE("small inputs match a brute force facet enumeration") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Vec3> pts;
        for (int i = 0; i < 6; ++i) {
            pts.push_back(Vec3(Rat(static_cast<long long>(rng() % 9)),
                               Rat(static_cast<long long>(rng() % 9)),
                               Rat(static_cast<long long>(rng() % 9))));
        }
        const ConvexBody b = convex_hull(pts);
        if (b.affine_dim < 3) {
            continue;
        }
        check_facet_support(b);

        // Brute force: every plane through three input points that bounds all
        // of them must be a facet plane of the hull, and vice versa.
        std::set<std::pair<std::vector<Rat>, Rat>> brute;
        const int n = static_cast<int>(pts.size());
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    Vec3 nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
                    if (nrm == ZERO) {
                        continue;
                    }
                    Rat off = dot(nrm, pts[i]);
                    bool below = true, above = true;
                    for (const Vec3& p : pts) {
                        const Rat d = dot(nrm, p);
                        below = below && d <= off;
                        above = above && d >= off;
                    }
                    if (!below && !above) {
                        continue;
                    }
                    if (above) {
                        nrm = -nrm;
                        off = -off;
                    }
                    // Scale to a canonical direction so duplicates merge.
                    Rat scale = l1_norm(nrm);
                    brute.insert({{nrm.x / scale, nrm.y / scale, nrm.z / scale},
                                  off / scale});
                }
            }
        }
        std::set<std::pair<std::vector<Rat>, Rat>> produced;
        for (const Facet& f : b.facets) {
            const Rat scale = l1_norm(f.normal);
            produced.insert({{f.normal.x / scale, f.normal.y / scale, f.normal.z / scale},
                             f.offset / scale});
        }
        CHECK(produced == brute);
    }
}

TEST_CASE("hull of hull vertices is the identity") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Vec3> pts;
        const int n = 4 + static_cast<int>(rng() % 9);
        for (int i = 0; i < n; ++i) {
            pts.push_back(Vec3(Rat(static_cast<long long>(rng() % 33), 4),
                               Rat(static_cast<long long>(rng() % 33), 4),
                               Rat(static_cast<long long>(rng() % 33), 4)));
        }
        const ConvexBody b = convex_hull(pts);
        for (const Vec3& p : pts) {
            CHECK(point_in_body(b, ZERO, p));
        }
        for (const Vec3& v : b.vertices) {
            CHECK(is_extreme_point(b, v));
        }
        const ConvexBody again = convex_hull(b.vertices);
        CHECK(again.affine_dim == b.affine_dim);
        CHECK(vertex_set(again) == vertex_set(b));
        CHECK(again.facets.size() == b.facets.size());
        if (b.affine_dim == 3) {
            const long long v = static_cast<long long>(b.vertices.size());
            const long long f = static_cast<long long>(b.facets.size());
            CHECK(v - edge_count(b) + f == 2);
        }
    }
}
