#include "doctest.h"

#include "covario/concavity.hpp"
#include "covario/scenarios.hpp"

#include <string>

using namespace covario;

TEST_CASE("scenario names round-trip") {
    for (const ScenarioSpec& spec : catalog()) {
        CHECK(scenario_from_string(to_string(spec.name)) == spec.name);
    }
    CHECK_THROWS_AS(scenario_from_string("NoSuchScenario"), std::invalid_argument);
}

TEST_CASE("every catalog scenario classifies as expected") {
    for (ScenarioSpec spec : catalog()) {
        CAPTURE(to_string(spec.name));
        if (spec.name == ScenarioName::DiskPair) spec.approx_order = 512;  // keep the test fast
        const Scenario sc = build(spec);
        REQUIRE(sc.probes.size() == sc.expected.size());
        for (size_t i = 0; i < sc.probes.size(); ++i) {
            const SegmentProfile p = eval_segment(sc.K, sc.L, sc.probes[i], false);
            CHECK(classify_segment(p).classification == sc.expected[i]);
        }
    }
}

TEST_CASE("scenario parameters are validated") {
    ScenarioSpec spec;
    spec.name = ScenarioName::SquareSelf;
    spec.size = 0.0;
    CHECK_THROWS_AS(build(spec), std::invalid_argument);
    spec.size = 1.0;
    spec.approx_order = 4;
    CHECK_THROWS_AS(build(spec), std::invalid_argument);
}

TEST_CASE("scenario size scales fixtures linearly") {
    ScenarioSpec unit, twice;
    unit.name = twice.name = ScenarioName::ConePair;
    twice.size = 2.0;
    const Scenario a = build(unit);
    const Scenario b = build(twice);
    CHECK(volume(b.K) == doctest::Approx(4.0 * volume(a.K)));
    CHECK((b.probes.front().a - 2.0 * a.probes.front().a).norm() <= 1e-12);
}

TEST_CASE("reflection pair is reproducible per seed") {
    ScenarioSpec s1, s2, s3;
    s1.name = s2.name = s3.name = ScenarioName::ReflectionPair;
    s3.seed = 7;
    const Scenario a = build(s1), b = build(s2), c = build(s3);
    CHECK(hausdorff_distance(a.K, b.K) == 0.0);
    CHECK(hausdorff_distance(a.K, c.K) > 0.0);
    CHECK(hausdorff_distance(reflect(a.K), a.L) <= 1e-12);
}
