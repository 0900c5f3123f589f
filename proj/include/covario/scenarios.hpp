#pragma once

#include "covario/concavity.hpp"

#include <cstdint>

namespace covario {

enum class ScenarioName {
    Containment,
    CylinderV0,
    CylinderVW,
    CylinderGeneric,
    ConePair,
    SquareSelf,
    DiskPair,
    SymmetricMRS,
    ReflectionPair,
};

const char* to_string(ScenarioName n);
ScenarioName scenario_from_string(const std::string& s);

struct ScenarioSpec {
    ScenarioName name = ScenarioName::SquareSelf;
    double size = 1.0;          // global scale factor
    int approx_order = 1024;    // k for smooth-approximation fixtures
    std::uint64_t seed = 42;
    double box_half_width = 0.0;  // 0 selects the per-fixture default
};

struct Scenario {
    ConvexBody K;
    ConvexBody L;
    std::vector<SegmentProbe> probes;
    std::vector<ConcavityClass> expected;  // one entry per probe
    TruncationBox box;
};

// Deterministic fixture; the expected classifications are part of the
// fixture contract and reproduced by classify_segment at default tolerances.
Scenario build(const ScenarioSpec& spec);

// The nine named fixtures with canonical parameters.
std::vector<ScenarioSpec> catalog();

}  // namespace covario
