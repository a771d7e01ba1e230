#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "holes3d/construction.hpp"
#include "holes3d/convex_body.hpp"
#include "holes3d/errors.hpp"

using holes3d::BodyBuild;
using holes3d::build_body;
using holes3d::build_family;
using holes3d::build_grid;
using holes3d::build_paths;
using holes3d::choose_epsilon;
using holes3d::ConstructionError;
using holes3d::ConstructionParams;
using holes3d::EpsilonBudget;
using holes3d::GridPoints;
using holes3d::InputError;
using holes3d::is_extreme_point;
using holes3d::PathPair;
using holes3d::point_in_body;
using holes3d::predicted_nerve;
using holes3d::Rat;
using holes3d::TranslateFamily;
using holes3d::Vec3;
using holes3d::verify_witnesses;
using holes3d::WitnessReport;

namespace {

bool has_vertex(const std::vector<Vec3>& verts, const Vec3& p) {
    return std::find(verts.begin(), verts.end(), p) != verts.end();
}

bool throws_input_error_mentioning(const ConstructionParams& p, const std::string& word) {
    try {
        p.validate();
    } catch (const InputError& e) {
        return std::string(e.what()).find(word) != std::string::npos;
    }
    return false;
}

} // namespace

TEST_CASE("defaults derive the truncation depths from m") {
    for (int m = 1; m <= 5; ++m) {
        ConstructionParams p = ConstructionParams::defaults(m);
        CHECK(p.m == m);
        CHECK(p.path_depth == m + 1);
        CHECK(p.gamma_length == m + 2);
        CHECK(p.t == Rat(2));
        CHECK(p.zeta2 == Rat(33, 20));
        CHECK(p.zeta3 == Rat(6, 5));
        CHECK_NOTHROW(p.validate());
    }
}

TEST_CASE("validation names the violated bound") {
    ConstructionParams base = ConstructionParams::defaults(2);

    ConstructionParams p = base;
    p.m = 0;
    CHECK(throws_input_error_mentioning(p, "m must be"));

    p = base;
    p.path_depth = 2; // needs m+1 = 3
    CHECK(throws_input_error_mentioning(p, "path_depth"));

    p = base;
    p.gamma_length = 3; // needs m+2 = 4
    CHECK(throws_input_error_mentioning(p, "gamma_length"));

    p = base;
    p.t = Rat(0);
    CHECK(throws_input_error_mentioning(p, "t must be positive"));

    p = base;
    p.zeta2 = Rat(3, 2); // boundary values are excluded
    CHECK(throws_input_error_mentioning(p, "zeta2"));
    p.zeta2 = Rat(7, 4);
    CHECK(throws_input_error_mentioning(p, "zeta2"));

    p = base;
    p.zeta3 = Rat(1);
    CHECK(throws_input_error_mentioning(p, "zeta3"));
    p.zeta3 = Rat(5, 4);
    CHECK(throws_input_error_mentioning(p, "zeta3"));
}

TEST_CASE("surrogates must clear the partial sums at the truncation depth") {
    // At depth 20 the cubic partial sum exceeds 6/5 while the quadratic one
    // still sits below 33/20, so only zeta3 is reported.
    ConstructionParams p = ConstructionParams::defaults(1);
    p.path_depth = 20;
    CHECK(throws_input_error_mentioning(p, "zeta3"));
    CHECK_FALSE(throws_input_error_mentioning(p, "zeta2"));
}

TEST_CASE("grid points follow the step recurrences") {
    GridPoints grid = build_grid(ConstructionParams::defaults(2));
    CHECK(grid.J == 3);
    CHECK(grid.M == 4);

    CHECK(grid.w(0, 0) == Vec3{Rat(0), Rat(0), Rat(0)});
    CHECK(grid.w(0, 1) == Vec3{Rat(1), Rat(1), Rat(0)});
    CHECK(grid.w(0, 2) == Vec3{Rat(5, 4), Rat(9, 8), Rat(0)});
    CHECK(grid.w(1, 0) == Vec3{Rat(0), Rat(-1), Rat(1)});
    CHECK(grid.w(2, 0) == Vec3{Rat(0), Rat(-5, 4), Rat(9, 8)});
    // the grid is the sum of its row and column parts
    CHECK(grid.w(1, 1) == Vec3{Rat(1), Rat(0), Rat(1)});
    CHECK(grid.w(2, 2) == grid.w(2, 0) + grid.w(0, 2));

    // v interpolates between two consecutive column neighbours
    CHECK(grid.v(1, 0) == Vec3{Rat(7, 8), Rat(-1, 8), Rat(1)});
    for (int k = 0; k < grid.M; ++k) {
        CHECK(grid.v(0, k) == grid.w(0, k));
    }

    CHECK(grid.step_gamma == Vec3{Rat(33, 20), Rat(6, 5), Rat(0)});
    CHECK(grid.step_eta == Vec3{Rat(0), Rat(-33, 20), Rat(6, 5)});

    CHECK_THROWS_AS(grid.w(-1, 0), InputError);
    CHECK_THROWS_AS(grid.w(0, grid.M + 1), InputError);
    CHECK_THROWS_AS(grid.v(0, grid.M), InputError);
    CHECK_THROWS_AS(grid.side_path(grid.J + 1), InputError);
}

TEST_CASE("paths carry the surrogate ends and side path 0 is gamma") {
    ConstructionParams p = ConstructionParams::defaults(1);
    PathPair paths = build_paths(p);
    GridPoints grid = build_grid(p);

    REQUIRE(paths.gamma.size() == static_cast<std::size_t>(grid.M) + 2);
    CHECK(paths.gamma.front() == Vec3{Rat(0), Rat(0), Rat(0)});
    CHECK(paths.gamma.back() == Vec3{Rat(33, 20), Rat(6, 5), Rat(0)});

    REQUIRE(paths.eta.size() == static_cast<std::size_t>(grid.J) + 2);
    CHECK(paths.eta[1] == Vec3{Rat(0), Rat(-1), Rat(1)});
    CHECK(paths.eta.back() == Vec3{Rat(0), Rat(-33, 20), Rat(6, 5)});

    CHECK(grid.side_path(0) == paths.gamma);
    // deeper side paths keep all of their interpolated points
    CHECK(grid.side_path(1).size() == static_cast<std::size_t>(grid.M) + 3);

    // monotonicity along both paths, surrogate edges included
    for (std::size_t i = 1; i < paths.gamma.size(); ++i) {
        CHECK(paths.gamma[i].x > paths.gamma[i - 1].x);
        CHECK(paths.gamma[i].y > paths.gamma[i - 1].y);
        CHECK(paths.gamma[i].z == Rat(0));
    }
    for (std::size_t i = 1; i < paths.eta.size(); ++i) {
        CHECK(paths.eta[i].y < paths.eta[i - 1].y);
        CHECK(paths.eta[i].z > paths.eta[i - 1].z);
        CHECK(paths.eta[i].x == Rat(0));
    }
}

TEST_CASE("body keeps the back segment endpoints as vertices") {
    BodyBuild bb = build_body(ConstructionParams::defaults(1));
    REQUIRE(bb.body != nullptr);
    CHECK(bb.body->affine_dim == 3);
    CHECK(has_vertex(bb.body->vertices, Vec3{Rat(33, 20), Rat(-2), Rat(0)}));
    CHECK(has_vertex(bb.body->vertices, Vec3{Rat(33, 20), Rat(-2), Rat(6, 5)}));

    // the certified plane separates the generating sets strictly
    for (const Vec3& p : bb.front) {
        CHECK(dot(bb.separation.normal, p) < bb.separation.offset);
    }
    for (const Vec3& p : bb.back) {
        CHECK(dot(bb.separation.normal, p) > bb.separation.offset);
    }
}

TEST_CASE("interpolated grid points are vertices of the body") {
    ConstructionParams p = ConstructionParams::defaults(2);
    BodyBuild bb = build_body(p);
    GridPoints grid = build_grid(p);
    for (int j = 1; j <= 2; ++j) {
        for (int k = 1; k <= 2; ++k) {
            CAPTURE(j);
            CAPTURE(k);
            CHECK(is_extreme_point(*bb.body, grid.v(j, k)));
        }
    }
}

TEST_CASE("family offsets are the documented exact values at m = 2") {
    ConstructionParams p = ConstructionParams::defaults(2);
    BodyBuild bb = build_body(p);
    const Rat eps(1, 64);
    TranslateFamily fam = build_family(p, bb.body, eps);

    REQUIRE(fam.size() == 6);
    CHECK(fam.translates[0].label() == "A1");
    CHECK(fam.translates[2].label() == "B1");
    CHECK(fam.translates[4].label() == "C1");

    CHECK(fam.translates[0].offset == Vec3{Rat(0), Rat(0), Rat(-1, 128)});
    CHECK(fam.translates[1].offset == Vec3{Rat(0), Rat(0), Rat(-1, 64)});
    CHECK(fam.translates[2].offset == Vec3{Rat(0), Rat(1), Rat(-1)});
    CHECK(fam.translates[3].offset == Vec3{Rat(0), Rat(5, 4), Rat(-9, 8)});
    CHECK(fam.translates[4].offset == Vec3{Rat(3, 5), Rat(33, 8), Rat(-6, 5)});
    CHECK(fam.translates[5].offset == Vec3{Rat(173, 180), Rat(463, 108), Rat(-6, 5)});
}

TEST_CASE("family construction rejects bad inputs") {
    ConstructionParams p = ConstructionParams::defaults(1);
    BodyBuild bb = build_body(p);
    CHECK_THROWS_AS(build_family(p, nullptr, Rat(1, 64)), InputError);
    CHECK_THROWS_AS(build_family(p, bb.body, Rat(0)), InputError);
    CHECK_THROWS_AS(build_family(p, bb.body, Rat(-1, 4)), InputError);
    CHECK_THROWS_AS(predicted_nerve(0), InputError);
}

TEST_CASE("step validation lands on the recorded budget at m = 2") {
    ConstructionParams p = ConstructionParams::defaults(2);
    BodyBuild bb = build_body(p);
    EpsilonBudget budget = choose_epsilon(p, bb.body, 2);

    CHECK(budget.eps1 == Rat(1, 2357));
    CHECK(budget.eps2_squared == Rat(1805, 17006112));
    CHECK(budget.eps == Rat(1, 32768));
    CHECK(budget.halvings == 3);
    CHECK(budget.eps < budget.eps1);
    CHECK(budget.eps * budget.eps <= budget.eps2_squared);

    TranslateFamily fam = build_family(p, bb.body, budget.eps);
    WitnessReport wr = verify_witnesses(p, fam);
    CHECK(wr.claim1.pass);
    CHECK(wr.claim2.pass);
    CHECK(wr.claim3.pass);
    CHECK(wr.claim4.pass);
    CHECK(wr.all_pass());

    // claim 1 by hand: the second column point dropped with A_1 lies in
    // A_1, C_1 and C_2, and pushing it up by one unit leaves both C's
    GridPoints grid = build_grid(p);
    const Vec3 witness = grid.w(0, 2) + fam.translates[0].offset;
    CHECK(point_in_body(*fam.bodies[0], fam.translates[0].offset, witness));
    CHECK(point_in_body(*fam.bodies[0], fam.translates[4].offset, witness));
    CHECK(point_in_body(*fam.bodies[0], fam.translates[5].offset, witness));
    const Vec3 lifted = witness + Vec3{Rat(0), Rat(0), Rat(1)};
    CHECK_FALSE(point_in_body(*fam.bodies[0], fam.translates[4].offset, lifted));
    CHECK_FALSE(point_in_body(*fam.bodies[0], fam.translates[5].offset, lifted));
}

TEST_CASE("witness verification reports failures as data") {
    ConstructionParams p = ConstructionParams::defaults(2);
    BodyBuild bb = build_body(p);
    // a step of 2 drops the stacked points clean out of the body (its height
    // is only 6/5), so the vertical claims break without anything throwing
    TranslateFamily fam = build_family(p, bb.body, Rat(2));
    WitnessReport wr = verify_witnesses(p, fam);
    CHECK_FALSE(wr.all_pass());
    CHECK_FALSE(wr.claim1.pass);
    CHECK_FALSE(wr.claim1.failures.empty());
    CHECK_FALSE(wr.claim2.pass);
    // the claims that do not involve the step keep passing
    CHECK(wr.claim4.pass);

    TranslateFamily small = build_family(ConstructionParams::defaults(1), bb.body, Rat(1, 64));
    CHECK_THROWS_AS(verify_witnesses(p, small), InputError);
}
