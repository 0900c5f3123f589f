#include "doctest.h"
#include "helpers.hpp"

#include "covario/concavity.hpp"
#include "covario/scenarios.hpp"

#include <cmath>

using namespace covario;

TEST_CASE("diagonal self-probe of the square is affine with slope -1/2") {
    const ConvexBody k = make_box(vec2(0, 0), vec2(1, 1));
    const SegmentProfile p = eval_segment(k, k, {vec2(0.5, 0.5), vec2(0.5, 0.5), 33}, false);
    const ConcavityReport rep = classify_segment(p);
    CHECK(rep.classification == ConcavityClass::AffineNonConstant);
    CHECK(rep.slope_beta == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("containment plateau classifies constant") {
    const ConvexBody big = make_box(vec2(-2, -2), vec2(2, 2));
    const ConvexBody small = make_box(vec2(-1, -1), vec2(1, 1));
    const SegmentProfile p = eval_segment(big, small, {vec2(0, 0), vec2(0.5, 0), 33}, false);
    CHECK(classify_segment(p).classification == ConcavityClass::Constant);
}

TEST_CASE("disk probes classify strictly concave") {
    const ConvexBody d = make_disk_approx(256, 1.0, vec2(0, 0));
    const SegmentProfile p = eval_segment(d, d, {vec2(0.8, 0), vec2(0.3, 0), 33}, false);
    const ConcavityReport rep = classify_segment(p);
    CHECK(rep.classification == ConcavityClass::StrictlyConcave);
    CHECK(rep.strictness_margin > 0.0);
}

TEST_CASE("a plateau joined to a strict arc classifies mixed") {
    // probe runs from inside the containment plateau out into the decaying
    // part of the profile, so second differences are zero then negative
    const ConvexBody big = make_box(vec2(-2, -2), vec2(2, 2));
    const ConvexBody small = make_box(vec2(-1, -1), vec2(1, 1));
    const SegmentProfile p = eval_segment(big, small, {vec2(0.5, 0), vec2(1, 0), 33}, false);
    CHECK(classify_segment(p).classification == ConcavityClass::Mixed);
}

TEST_CASE("axis self-probe of the square is strictly concave") {
    // g is affine in |t| here, but its square root is strictly concave
    const ConvexBody k = make_box(vec2(0, 0), vec2(1, 1));
    const SegmentProfile p = eval_segment(k, k, {vec2(0, 0), vec2(0.5, 0), 33}, false);
    CHECK(classify_segment(p).classification == ConcavityClass::StrictlyConcave);
}

TEST_CASE("probes outside the support") {
    const ConvexBody k = make_box(vec2(0, 0), vec2(1, 1));
    const SegmentProfile p = eval_segment(k, k, {vec2(5, 5), vec2(0.1, 0), 33}, false);
    const ConcavityReport rep = classify_segment(p);
    CHECK(rep.classification == ConcavityClass::OutsideSupport);
    CHECK(rep.in_support_samples == 0);
}

TEST_CASE("witness recovery on the cone fixture") {
    ScenarioSpec spec;
    spec.name = ScenarioName::ConePair;
    const Scenario sc = build(spec);
    const SegmentProfile p = eval_segment(sc.K, sc.L, sc.probes.front());
    const HomothetyWitness w = recover_witness(p);
    CHECK(w.lambda == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(w.v.norm() <= 1e-10);
    CHECK(w.max_residual <= 1e-9);
    CHECK(volume(w.reference) == doctest::Approx(2.0));
}

TEST_CASE("witness recovery refuses strictly concave profiles") {
    const ConvexBody d = make_disk_approx(128, 1.0, vec2(0, 0));
    const SegmentProfile p = eval_segment(d, d, {vec2(0.8, 0), vec2(0.3, 0), 33});
    CHECK_THROWS_AS(recover_witness(p), std::invalid_argument);
}

TEST_CASE("cylinder reconstruction matches along the probe") {
    ScenarioSpec spec;
    spec.name = ScenarioName::CylinderGeneric;
    const Scenario sc = build(spec);
    const SegmentProfile p = eval_segment(sc.K, sc.L, sc.probes.front());
    const HomothetyWitness w = recover_witness(p);
    CHECK(std::abs(w.lambda) <= 1e-10);
    CHECK((w.v - vec2(0.5, 0.5)).norm() <= 1e-9);
    const ReconstructionReport rec = verify_constant_case(sc.K, sc.L, sc.probes.front(), w, sc.box);
    CHECK(rec.kind == ReconstructionReport::Cylinder);
    CHECK(rec.max_symdiff <= 1e-8 * volume(w.reference));
    CHECK(rec.per_t_symdiff.size() == 33);
}

TEST_CASE("cone reconstruction matches along the probe") {
    ScenarioSpec spec;
    spec.name = ScenarioName::SquareSelf;
    const Scenario sc = build(spec);
    const SegmentProfile p = eval_segment(sc.K, sc.L, sc.probes.front()).reversed();
    const HomothetyWitness w = recover_witness(p);
    CHECK(w.lambda == doctest::Approx(1.0).epsilon(1e-10));
    CHECK((w.v - vec2(-1, -1)).norm() <= 1e-9);
    const ReconstructionReport rec = verify_affine_case(sc.K, sc.L, p.probe, w, sc.box);
    CHECK(rec.kind == ReconstructionReport::Cone);
    CHECK(rec.max_symdiff <= 1e-8 * volume(w.reference));
}

TEST_CASE("reconstruction rejects a mismatched lambda") {
    ScenarioSpec spec;
    spec.name = ScenarioName::ConePair;
    const Scenario sc = build(spec);
    const SegmentProfile p = eval_segment(sc.K, sc.L, sc.probes.front());
    HomothetyWitness w = recover_witness(p);
    CHECK_THROWS_AS(verify_constant_case(sc.K, sc.L, sc.probes.front(), w, sc.box),
                    std::invalid_argument);
    w.lambda = -0.5;
    CHECK_THROWS_AS(verify_affine_case(sc.K, sc.L, sc.probes.front(), w, sc.box),
                    std::invalid_argument);
}

TEST_CASE("boundary dichotomy") {
    const ConvexBody big = make_box(vec2(-2, -2), vec2(2, 2));
    const ConvexBody small = make_box(vec2(-1, -1), vec2(1, 1));
    CHECK(boundary_dichotomy(big, small, vec2(0, 0), 1e-9) == BoundaryRelation::KContainsL);
    CHECK(boundary_dichotomy(small, big, vec2(0, 0), 1e-9) == BoundaryRelation::LContainsK);
    CHECK(boundary_dichotomy(big, small, vec2(1.5, 0), 1e-9) ==
          BoundaryRelation::BoundariesMeet);
    CHECK_THROWS_AS(boundary_dichotomy(big, small, vec2(10, 0), 1e-9), std::invalid_argument);
}

TEST_CASE("brunn-minkowski defect") {
    const ConvexBody sq = make_box(vec2(0, 0), vec2(1, 1));
    const ConvexBody sq2 = translate(dilate(sq, 3.0, vec2(0, 0)), vec2(5, 5));
    CHECK(bm_defect(sq, sq2) == doctest::Approx(0.0).epsilon(1e-12));
    const ConvexBody tri = make_simplex(2);
    CHECK(bm_defect(sq, tri) > 1e-3);
    // closed form: |(A+B)/2| = (|A| + 2 V(A,B) + |B|)/4 with mixed area 1
    const double mid = 0.25 * (1.0 + 2.0 + 0.5);
    CHECK(bm_defect(sq, tri) ==
          doctest::Approx(std::sqrt(mid) - 0.5 * (1.0 + std::sqrt(0.5))));
}
