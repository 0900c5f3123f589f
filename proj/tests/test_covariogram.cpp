#include "doctest.h"
#include "helpers.hpp"

#include "covario/covariogram.hpp"

#include <cmath>
#include <random>

using namespace covario;
using covario::testing::random_polygon;

TEST_CASE("unit square covariogram is the product formula") {
    const ConvexBody k = make_box(vec2(0, 0), vec2(1, 1));
    for (double x : {-0.7, -0.2, 0.0, 0.4, 0.9})
        for (double y : {-0.9, 0.0, 0.3}) {
            const double expect = std::max(0.0, 1 - std::abs(x)) * std::max(0.0, 1 - std::abs(y));
            CHECK(eval(k, k, vec2(x, y)) == doctest::Approx(expect).epsilon(1e-12));
        }
    CHECK(eval(k, k, vec2(1.0, 0.0)) == 0.0);  // touching edge has zero area
    CHECK(eval(k, k, vec2(3.0, 0.0)) == 0.0);
}

TEST_CASE("unit cube covariogram is the 3d product formula") {
    const ConvexBody k = make_box(vec3(0, 0, 0), vec3(1, 1, 1));
    for (double x : {-0.5, 0.0, 0.25})
        for (double y : {0.0, 0.6})
            for (double z : {-0.3, 0.0, 1.2}) {
                const double expect = std::max(0.0, 1 - std::abs(x)) *
                                      std::max(0.0, 1 - std::abs(y)) *
                                      std::max(0.0, 1 - std::abs(z));
                CHECK(eval(k, k, vec3(x, y, z)) == doctest::Approx(expect).epsilon(1e-12));
            }
}

TEST_CASE("covariogram symmetry g_KL(x) = g_LK(-x)") {
    std::mt19937_64 rng(31);
    const ConvexBody k = random_polygon(rng, 6, 1.5);
    const ConvexBody l = random_polygon(rng, 5, 1.0);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const Vec x = vec2(unif(rng), unif(rng));
        CHECK(eval(k, l, x) == doctest::Approx(eval(l, k, -x)).epsilon(1e-12));
    }
}

TEST_CASE("positive covariogram implies membership in the support sumset") {
    std::mt19937_64 rng(32);
    const ConvexBody k = random_polygon(rng, 7, 1.0);
    const ConvexBody l = random_polygon(rng, 5, 1.0);
    const ConvexBody sum = support_sumset(k, l);
    std::uniform_real_distribution<double> unif(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const Vec x = vec2(unif(rng), unif(rng));
        if (eval(k, l, x) > 0.0) CHECK(sum.contains(x, 1e-9));
        if (!sum.contains(x, 1e-9)) CHECK(eval(k, l, x) == 0.0);
    }
}

TEST_CASE("segment profile agrees with pointwise evaluation") {
    std::mt19937_64 rng(33);
    const ConvexBody k = random_polygon(rng, 6, 1.0);
    const ConvexBody l = random_polygon(rng, 6, 1.0);
    const SegmentProbe probe{vec2(0.1, -0.2), vec2(0.7, 0.4), 17};
    const SegmentProfile fast = eval_segment(k, l, probe, false);
    const SegmentProfile kept = eval_segment(k, l, probe, true);
    REQUIRE(fast.samples.size() == 17);
    for (int i = 0; i < 17; ++i) {
        const double direct = eval(k, l, probe.point_at(i));
        CHECK(fast.g(i) == doctest::Approx(direct).epsilon(1e-12));
        CHECK(kept.g(i) == doctest::Approx(direct).epsilon(1e-12));
        CHECK(fast.g_root(i) == doctest::Approx(std::sqrt(fast.g(i))));
        if (kept.samples[i].body) {
            CHECK(volume(*kept.samples[i].body) == doctest::Approx(kept.g(i)));
        }
    }
}

TEST_CASE("profile reversal flips the parameter") {
    const ConvexBody k = make_box(vec2(0, 0), vec2(1, 1));
    const SegmentProfile p = eval_segment(k, k, {vec2(0.2, 0), vec2(0.5, 0), 9}, false);
    const SegmentProfile q = p.reversed();
    for (int i = 0; i < 9; ++i) {
        CHECK(q.samples[i].t == doctest::Approx(-p.samples[8 - i].t));
        CHECK(q.g(i) == p.g(8 - i));
    }
    CHECK((q.probe.w + p.probe.w).norm() == 0.0);
}

TEST_CASE("probe validation rejects bad input") {
    const ConvexBody k = make_box(vec2(0, 0), vec2(1, 1));
    CHECK_THROWS_AS(eval_segment(k, k, {vec2(0, 0), vec2(0, 0), 9}), std::invalid_argument);
    CHECK_THROWS_AS(eval_segment(k, k, {vec2(0, 0), vec2(1, 0), 8}), std::invalid_argument);
    CHECK_THROWS_AS(eval_segment(k, k, {vec2(0, 0), vec2(1, 0), 3}), std::invalid_argument);
    CHECK_THROWS_AS(eval(k, make_box(vec3(0, 0, 0), vec3(1, 1, 1)), vec2(0, 0)),
                    std::invalid_argument);
}

TEST_CASE("intersections interpolate: S_t contains (1-t)S_0 + t S_1") {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    int checked = 0;
    while (checked < 10) {
        const ConvexBody k = random_polygon(rng, 6, 1.2);
        const ConvexBody l = random_polygon(rng, 6, 1.0);
        const Vec x0 = vec2(unif(rng), unif(rng));
        const Vec x1 = vec2(unif(rng), unif(rng));
        const Intersection s0 = intersect(k, translate(l, x0));
        const Intersection s1 = intersect(k, translate(l, x1));
        if (!s0.is_body() || !s1.is_body()) continue;
        ++checked;
        for (double t : {0.25, 0.5, 0.75}) {
            const Intersection st = intersect(k, translate(l, (1 - t) * x0 + t * x1));
            REQUIRE(st.is_body());
            const ConvexBody blend = minkowski_sum(dilate(*s0.body, 1 - t, vec2(0, 0)),
                                                   dilate(*s1.body, t, vec2(0, 0)));
            for (const Vec& v : blend.vertices()) CHECK(st.body->contains(v, 1e-9));
            CHECK(std::pow(st.volume, 0.5) >=
                  (1 - t) * std::pow(s0.volume, 0.5) + t * std::pow(s1.volume, 0.5) - 1e-9);
        }
    }
}

TEST_CASE("covariogram root is monotone along rays from the peak") {
    const ConvexBody k = make_box(vec2(0, 0), vec2(2, 1));
    double prev = eval(k, k, vec2(0, 0));
    for (double t = 0.1; t <= 2.4; t += 0.1) {
        const double cur = eval(k, k, vec2(t * 0.8, t * 0.3));
        CHECK(cur <= prev + 1e-12);
        prev = cur;
    }
}
