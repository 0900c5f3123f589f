#include "doctest.h"
#include "helpers.hpp"

#include "covario/body.hpp"

#include <cmath>
#include <random>

using namespace covario;
using covario::testing::random_polygon;

namespace {

// oracle: Minkowski sum as the hull of all pairwise vertex sums
ConvexBody brute_minkowski(const ConvexBody& a, const ConvexBody& b) {
    std::vector<Vec> pts;
    for (const Vec& p : a.vertices())
        for (const Vec& q : b.vertices()) pts.push_back(p + q);
    return ConvexBody::from_points(a.dim(), pts);
}

}  // namespace

TEST_CASE("minkowski sum matches the hull-of-sums oracle") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 15; ++i) {
        const ConvexBody a = random_polygon(rng, 4 + i % 5, 1.2);
        const ConvexBody b = random_polygon(rng, 3 + i % 6, 0.8);
        const ConvexBody s = minkowski_sum(a, b);
        const ConvexBody o = brute_minkowski(a, b);
        CHECK(hausdorff_distance(s, o) <= 1e-10 * o.diameter());
        CHECK(volume(s) == doctest::Approx(volume(o)));
    }
    const ConvexBody c1 = make_box(vec3(0, 0, 0), vec3(1, 1, 1));
    const ConvexBody c2 = make_box(vec3(-2, 0, 0), vec3(-1, 2, 1));
    CHECK(volume(minkowski_sum(c1, c2)) == doctest::Approx(2.0 * 3.0 * 2.0));
}

TEST_CASE("minkowski sum commutes with translation and adds support functions") {
    std::mt19937_64 rng(25);
    const ConvexBody a = random_polygon(rng, 6, 1.0);
    const ConvexBody b = random_polygon(rng, 5, 1.0);
    const Vec x = vec2(0.7, -0.4);
    CHECK(hausdorff_distance(minkowski_sum(translate(a, x), b),
                             translate(minkowski_sum(a, b), x)) <= 1e-12);
    std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
    const ConvexBody s = minkowski_sum(a, b);
    for (int i = 0; i < 20; ++i) {
        const Vec u = vec2(std::cos(angle(rng)), std::sin(angle(rng)));
        CHECK(support_function(s, u) ==
              doctest::Approx(support_function(a, u) + support_function(b, u)));
    }
    // triangle plus its reflection is a hexagon of six times the area
    // (the difference-body extremal case among convex bodies)
    const ConvexBody tri = make_simplex(2);
    const ConvexBody hex = minkowski_sum(tri, reflect(tri));
    CHECK(hex.vertices().size() == 6);
    CHECK(volume(hex) == doctest::Approx(6.0 * volume(tri)));
}

TEST_CASE("translate, reflect, and dilate obey the volume and centroid laws") {
    std::mt19937_64 rng(22);
    const ConvexBody a = random_polygon(rng, 7, 1.5);
    const Vec shift = vec2(0.3, -1.7);

    const ConvexBody t = translate(a, shift);
    CHECK(volume(t) == doctest::Approx(volume(a)));
    CHECK((centroid(t) - centroid(a) - shift).norm() <= 1e-12);
    CHECK(hausdorff_distance(a, t) == doctest::Approx(shift.norm()));

    const ConvexBody r = reflect(a);
    CHECK(volume(r) == doctest::Approx(volume(a)));
    CHECK((centroid(r) + centroid(a)).norm() <= 1e-12);

    const ConvexBody d = dilate(a, 2.5, vec2(1, 1));
    CHECK(volume(d) == doctest::Approx(2.5 * 2.5 * volume(a)));
    CHECK((centroid(d) - (vec2(1, 1) + 2.5 * (centroid(a) - vec2(1, 1)))).norm() <= 1e-12);
}

TEST_CASE("intersection kinds: body, empty, lower-dimensional") {
    const ConvexBody a = make_box(vec2(0, 0), vec2(2, 2));
    const ConvexBody b = make_box(vec2(1, 1), vec2(3, 3));
    const Intersection full = intersect(a, b);
    REQUIRE(full.kind == SetKind::Body);
    CHECK(full.volume == doctest::Approx(1.0));

    CHECK(intersect(a, translate(b, vec2(5, 0))).kind == SetKind::Empty);
    CHECK(intersect(a, translate(b, vec2(1, 0))).kind == SetKind::LowerDimensional);

    const ConvexBody c1 = make_box(vec3(0, 0, 0), vec3(1, 1, 1));
    const ConvexBody c2 = make_box(vec3(0.5, 0.25, -1), vec3(4, 0.75, 0.5));
    const Intersection i3 = intersect(c1, c2);
    REQUIRE(i3.kind == SetKind::Body);
    CHECK(i3.volume == doctest::Approx(0.5 * 0.5 * 0.5));
    CHECK(intersect(c1, translate(c1, vec3(1, 0, 0))).kind == SetKind::LowerDimensional);
}

TEST_CASE("intersection volume never exceeds either body") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        const ConvexBody a = random_polygon(rng, 5, 1.0);
        const ConvexBody b = random_polygon(rng, 6, 1.0);
        const Intersection r = intersect(a, b);
        CHECK(r.volume <= std::min(volume(a), volume(b)) + 1e-12);
    }
}

TEST_CASE("support function and point distance") {
    const ConvexBody b = make_box(vec2(-1, -2), vec2(3, 4));
    CHECK(support_function(b, vec2(1, 0)) == doctest::Approx(3.0));
    CHECK(support_function(b, vec2(0, -1)) == doctest::Approx(2.0));
    const Vec diag = vec2(1, 1).normalized();
    CHECK(support_function(b, diag) == doctest::Approx(7.0 / std::sqrt(2.0)));

    CHECK(distance_to(b, vec2(0, 0)) == 0.0);
    CHECK(distance_to(b, vec2(5, 4)) == doctest::Approx(2.0));
    CHECK(distance_to(b, vec2(4, 5)) == doctest::Approx(std::sqrt(2.0)));

    const ConvexBody c = make_box(vec3(0, 0, 0), vec3(1, 1, 1));
    CHECK(distance_to(c, vec3(2, 2, 2)) == doctest::Approx(std::sqrt(3.0)));
    CHECK(distance_to(c, vec3(0.5, 0.5, 3)) == doctest::Approx(2.0));
}

TEST_CASE("homothety detection") {
    std::mt19937_64 rng(24);
    const ConvexBody a = random_polygon(rng, 6, 1.0);
    const ConvexBody b = translate(dilate(a, 1.7, vec2(0, 0)), vec2(2, -1));
    CHECK(is_homothetic(a, b).is_homothetic);
    CHECK(is_homothetic(b, a).is_homothetic);
    CHECK(is_homothetic(a, b).scale == doctest::Approx(1.7));

    const ConvexBody c = random_polygon(rng, 7, 1.0);
    CHECK(!is_homothetic(a, c).is_homothetic);
    // reflection is not a homothety unless the body is centrally symmetric
    const ConvexBody tri = make_simplex(2);
    CHECK(!is_homothetic(tri, reflect(tri)).is_homothetic);
    const ConvexBody sq = make_box(vec2(-1, -1), vec2(1, 1));
    CHECK(is_homothetic(sq, reflect(sq)).is_homothetic);
}

TEST_CASE("cylinder extension sweeps the body along a line") {
    const ConvexBody small = make_box(vec2(-0.5, 0), vec2(0.5, 1));
    const TruncationBox box = make_truncation_box(2, 40.0);
    const ConvexBody cyl = cylinder_extend(small, vec2(1, 0), box);
    CHECK(volume(cyl) == doctest::Approx(80.0 * 1.0));
    CHECK(cyl.contains(vec2(-39.9, 0.5)));
    CHECK(!cyl.contains(vec2(0, 1.5)));

    CHECK_THROWS_WITH_AS(cylinder_extend(small, vec2(1, 0), make_truncation_box(2, 2.0)),
                         "truncation box too small", std::invalid_argument);
}

TEST_CASE("cone extension spans the body from an apex") {
    const ConvexBody sq = make_box(vec2(1, -1), vec2(3, 1));
    const TruncationBox box = make_truncation_box(2, 40.0);
    const ConvexBody cone = cone_extend(sq, vec2(0, 0), box);
    // rays through the square from the origin fill {|y| <= x} up to the box
    CHECK(cone.contains(vec2(30, 29.9)));
    CHECK(cone.contains(vec2(0.1, 0)));
    CHECK(!cone.contains(vec2(1, 1.5)));
    CHECK(volume(cone) == doctest::Approx(40.0 * 40.0));

    // an interior apex spans everything
    const ConvexBody all = cone_extend(sq, vec2(2, 0), box);
    CHECK(volume(all) == doctest::Approx(80.0 * 80.0));
}
