#include "doctest.h"
#include "helpers.hpp"

#include "covario/body.hpp"

#include <cmath>

using namespace covario;
using covario::testing::random_polygon;
using covario::testing::shoelace;

TEST_CASE("2d box has the expected vertices and halfspaces") {
    const ConvexBody b = make_box(vec2(-1, 0), vec2(2, 1));
    CHECK(b.vertices().size() == 4);
    CHECK(b.halfspaces().size() == 4);
    CHECK(volume(b) == doctest::Approx(3.0));
    CHECK(b.diameter() == doctest::Approx(std::sqrt(10.0)));
    CHECK(b.contains(vec2(0, 0.5)));
    CHECK(!b.contains(vec2(0, 1.5)));
    CHECK(shoelace(b) == doctest::Approx(3.0));  // stored ring is counterclockwise
}

TEST_CASE("degenerate point sets are rejected") {
    CHECK_THROWS_WITH_AS(ConvexBody::from_points(2, {vec2(0, 0), vec2(1, 1), vec2(2, 2)}),
                         "body is not full-dimensional", std::invalid_argument);
    CHECK_THROWS_AS(ConvexBody::from_points(3, {vec3(0, 0, 0), vec3(1, 0, 0), vec3(0, 1, 0),
                                                vec3(1, 1, 0)}),
                    std::invalid_argument);
}

TEST_CASE("vertex and halfspace forms agree on random polygons") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const ConvexBody a = random_polygon(rng, 4 + i % 6, 1.5);
        const ConvexBody b = ConvexBody::from_halfspaces(2, a.halfspaces());
        CHECK(hausdorff_distance(a, b) <= 1e-12 * a.diameter());
        CHECK(volume(b) == doctest::Approx(volume(a)));
    }
}

TEST_CASE("unbounded halfspace systems are rejected") {
    std::vector<Halfspace> hs = {{vec2(1, 0), 1.0}, {vec2(0, 1), 1.0}};
    CHECK_THROWS_AS(ConvexBody::from_halfspaces(2, hs), std::invalid_argument);
}

TEST_CASE("regular polygon area matches the closed form") {
    for (int k : {3, 5, 8, 64}) {
        const ConvexBody p = make_regular_polygon(k, 2.0, vec2(1, -1));
        CHECK(volume(p) == doctest::Approx(0.5 * k * 4.0 * std::sin(2.0 * M_PI / k)));
        CHECK((centroid(p) - vec2(1, -1)).norm() <= 1e-12);
    }
    const ConvexBody d = make_disk_approx(512, 1.0, vec2(0, 0));
    CHECK(d.smoothness().kind == Smoothness::StrictlyConvexApprox);
    CHECK(volume(d) == doctest::Approx(M_PI).epsilon(1e-4));
}

TEST_CASE("3d boxes and simplices build with correct volume") {
    const ConvexBody cube = make_box(vec3(0, 0, 0), vec3(1, 2, 3));
    CHECK(cube.vertices().size() == 8);
    CHECK(cube.halfspaces().size() == 6);
    CHECK(volume(cube) == doctest::Approx(6.0));
    CHECK(cube.diameter() == doctest::Approx(std::sqrt(14.0)));
    CHECK((centroid(cube) - vec3(0.5, 1, 1.5)).norm() <= 1e-12);

    const ConvexBody s = make_simplex(3, 2.0);
    CHECK(s.vertices().size() == 4);
    CHECK(volume(s) == doctest::Approx(8.0 / 6.0));

    // interior points of the sampled cloud must not survive as vertices
    std::vector<Vec> pts = cube.vertices();
    pts.push_back(vec3(0.5, 1.0, 1.5));
    pts.push_back(vec3(0.25, 0.5, 2.9));
    const ConvexBody rebuilt = ConvexBody::from_points(3, pts);
    CHECK(rebuilt.vertices().size() == 8);
    CHECK(volume(rebuilt) == doctest::Approx(6.0));
}

TEST_CASE("3d halfspace intersection rebuilds the cube") {
    const ConvexBody cube = make_box(vec3(-1, -1, -1), vec3(1, 1, 1));
    const ConvexBody b = ConvexBody::from_halfspaces(3, cube.halfspaces());
    CHECK(hausdorff_distance(cube, b) <= 1e-9);
}

TEST_CASE("truncation box margin invariant") {
    const ConvexBody k = make_box(vec2(-1, -1), vec2(1, 1));
    const TruncationBox big = make_truncation_box(2, 50.0);
    const TruncationBox small = make_truncation_box(2, 5.0);
    CHECK(big.satisfies_margin({&k}, 1.0));
    CHECK(!small.satisfies_margin({&k}, 1.0));
    CHECK(volume(big.to_body()) == doctest::Approx(100.0 * 100.0));
}
