#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <random>
#include <vector>

#include "holes3d/convex_body.hpp"
#include "holes3d/errors.hpp"

using holes3d::ConvexBody;
using holes3d::convex_hull;
using holes3d::FeasibilityResult;
using holes3d::InputError;
using holes3d::Plane;
using holes3d::Rat;
using holes3d::Translate;
using holes3d::TranslateFamily;
using holes3d::Vec3;
using holes3d::bodies_intersect;
using holes3d::dot;
using holes3d::is_extreme_point;
using holes3d::point_in_body;
using holes3d::separate;

namespace {

const Vec3 ZERO(Rat(0), Rat(0), Rat(0));

ConvexBody unit_cube() {
    std::vector<Vec3> pts;
    for (int x = 0; x <= 1; ++x) {
        for (int y = 0; y <= 1; ++y) {
            for (int z = 0; z <= 1; ++z) {
                pts.push_back(Vec3(Rat(x), Rat(y), Rat(z)));
            }
        }
    }
    return convex_hull(pts, "cube");
}

Translate at(const std::shared_ptr<const ConvexBody>& b, Rat x, Rat y, Rat z) {
    return Translate{b, Vec3(std::move(x), std::move(y), std::move(z)), 'G', 1};
}

} // namespace

TEST_CASE("membership is closed and respects offsets") {
    const ConvexBody cube = unit_cube();
    CHECK(point_in_body(cube, ZERO, Vec3(Rat(1, 2), Rat(1, 2), Rat(1, 2))));
    CHECK(point_in_body(cube, ZERO, Vec3(Rat(0), Rat(0), Rat(0))));
    CHECK(point_in_body(cube, ZERO, Vec3(Rat(1), Rat(1, 2), Rat(0))));
    CHECK(!point_in_body(cube, ZERO, Vec3(Rat(1) + Rat(1, 1000000), Rat(1, 2), Rat(0))));
    CHECK(!point_in_body(cube, ZERO, Vec3(Rat(-1, 1000000), Rat(0), Rat(0))));

    const Vec3 off(Rat(10), Rat(0), Rat(0));
    CHECK(point_in_body(cube, off, Vec3(Rat(21, 2), Rat(1, 2), Rat(1, 2))));
    CHECK(!point_in_body(cube, off, Vec3(Rat(1, 2), Rat(1, 2), Rat(1, 2))));
}

TEST_CASE("extreme point test distinguishes corners from the rest") {
    const ConvexBody cube = unit_cube();
    CHECK(is_extreme_point(cube, Vec3(Rat(0), Rat(0), Rat(0))));
    CHECK(is_extreme_point(cube, Vec3(Rat(1), Rat(1), Rat(1))));
    CHECK(!is_extreme_point(cube, Vec3(Rat(1, 2), Rat(1, 2), Rat(1, 2))));
    CHECK(!is_extreme_point(cube, Vec3(Rat(1, 2), Rat(1, 2), Rat(0))));
    CHECK(!is_extreme_point(cube, Vec3(Rat(1, 2), Rat(0), Rat(0))));
}

TEST_CASE("strict separation of vertex sets") {
    const ConvexBody a = unit_cube();

    SUBCASE("disjoint") {
        std::vector<Vec3> far;
        for (const Vec3& v : a.vertices) {
            far.push_back(v + Vec3(Rat(3), Rat(0), Rat(0)));
        }
        const ConvexBody b = convex_hull(far);
        const auto plane = separate(a, b);
        REQUIRE(plane.has_value());
        for (const Vec3& v : a.vertices) {
            CHECK(dot(plane->normal, v) < plane->offset);
        }
        for (const Vec3& v : b.vertices) {
            CHECK(dot(plane->normal, v) > plane->offset);
        }
    }
    SUBCASE("touching along a face has no strict separator") {
        std::vector<Vec3> shifted;
        for (const Vec3& v : a.vertices) {
            shifted.push_back(v + Vec3(Rat(1), Rat(0), Rat(0)));
        }
        CHECK(!separate(a, convex_hull(shifted)).has_value());
    }
    SUBCASE("overlapping") {
        std::vector<Vec3> shifted;
        for (const Vec3& v : a.vertices) {
            shifted.push_back(v + Vec3(Rat(1, 2), Rat(1, 2), Rat(0)));
        }
        CHECK(!separate(a, convex_hull(shifted)).has_value());
    }
}

TEST_CASE("translate intersection by feasibility") {
    auto cube = std::make_shared<const ConvexBody>(unit_cube());

    SUBCASE("overlap with witness") {
        const FeasibilityResult res =
            bodies_intersect({at(cube, Rat(0), Rat(0), Rat(0)),
                              at(cube, Rat(1, 2), Rat(1, 2), Rat(1, 2))});
        REQUIRE(res.feasible);
        REQUIRE(res.witness.has_value());
        const Vec3 w((*res.witness)[0], (*res.witness)[1], (*res.witness)[2]);
        CHECK(point_in_body(*cube, ZERO, w));
        CHECK(point_in_body(*cube, Vec3(Rat(1, 2), Rat(1, 2), Rat(1, 2)), w));
    }
    SUBCASE("touching counts as intersecting") {
        CHECK(bodies_intersect({at(cube, Rat(0), Rat(0), Rat(0)),
                                at(cube, Rat(1), Rat(0), Rat(0))})
                  .feasible);
    }
    SUBCASE("disjoint yields a certificate") {
        const FeasibilityResult res =
            bodies_intersect({at(cube, Rat(0), Rat(0), Rat(0)),
                              at(cube, Rat(5, 2), Rat(0), Rat(0))});
        CHECK(!res.feasible);
        CHECK(res.farkas.has_value());
    }
    SUBCASE("empty list is rejected") {
        CHECK_THROWS_AS(bodies_intersect(std::vector<Translate>{}), InputError);
    }
    SUBCASE("subset selection checks its indices") {
        TranslateFamily fam;
        fam.bodies.push_back(cube);
        fam.translates.push_back(at(cube, Rat(0), Rat(0), Rat(0)));
        CHECK(bodies_intersect(fam, {0}).feasible);
        CHECK_THROWS_AS(bodies_intersect(fam, {0, 1}), InputError);
        CHECK_THROWS_AS(bodies_intersect(fam, {-1}), InputError);
    }
}

TEST_CASE("intersection and separation partition random pairs") {
    std::mt19937_64 rng(555);
    int hits = 0, misses = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Vec3> p1, p2;
        for (int i = 0; i < 6; ++i) {
            p1.push_back(Vec3(Rat(static_cast<long long>(rng() % 33), 4),
                              Rat(static_cast<long long>(rng() % 33), 4),
                              Rat(static_cast<long long>(rng() % 33), 4)));
            p2.push_back(Vec3(Rat(static_cast<long long>(rng() % 33), 4),
                              Rat(static_cast<long long>(rng() % 33), 4),
                              Rat(static_cast<long long>(rng() % 33), 4)));
        }
        auto a = std::make_shared<const ConvexBody>(convex_hull(p1));
        auto b = std::make_shared<const ConvexBody>(convex_hull(p2));
        const FeasibilityResult res =
            bodies_intersect({Translate{a, ZERO, 'G', 1}, Translate{b, ZERO, 'G', 2}});
        const auto plane = separate(*a, *b);
        CHECK(res.feasible == !plane.has_value());
        if (res.feasible) {
            ++hits;
            const Vec3 w((*res.witness)[0], (*res.witness)[1], (*res.witness)[2]);
            CHECK(point_in_body(*a, ZERO, w));
            CHECK(point_in_body(*b, ZERO, w));
        } else {
            ++misses;
            for (const Vec3& v : a->vertices) {
                CHECK(dot(plane->normal, v) < plane->offset);
            }
            for (const Vec3& v : b->vertices) {
                CHECK(dot(plane->normal, v) > plane->offset);
            }
        }
    }
    CHECK(hits > 5);
    CHECK(misses > 5);
}

TEST_CASE("subset intersections are monotone") {
    auto cube = std::make_shared<const ConvexBody>(unit_cube());
    TranslateFamily fam;
    fam.bodies.push_back(cube);
    fam.translates.push_back(at(cube, Rat(0), Rat(0), Rat(0)));
    fam.translates.push_back(at(cube, Rat(1, 2), Rat(0), Rat(0)));
    fam.translates.push_back(at(cube, Rat(0), Rat(1, 2), Rat(0)));
    REQUIRE(bodies_intersect(fam, {0, 1, 2}).feasible);
    CHECK(bodies_intersect(fam, {0, 1}).feasible);
    CHECK(bodies_intersect(fam, {0, 2}).feasible);
    CHECK(bodies_intersect(fam, {1, 2}).feasible);
}
