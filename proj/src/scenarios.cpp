#include "covario/scenarios.hpp"

#include <cmath>
#include <random>

namespace covario {

const char* to_string(ScenarioName n) {
    switch (n) {
        case ScenarioName::Containment: return "Containment";
        case ScenarioName::CylinderV0: return "CylinderV0";
        case ScenarioName::CylinderVW: return "CylinderVW";
        case ScenarioName::CylinderGeneric: return "CylinderGeneric";
        case ScenarioName::ConePair: return "ConePair";
        case ScenarioName::SquareSelf: return "SquareSelf";
        case ScenarioName::DiskPair: return "DiskPair";
        case ScenarioName::SymmetricMRS: return "SymmetricMRS";
        case ScenarioName::ReflectionPair: return "ReflectionPair";
    }
    return "?";
}

ScenarioName scenario_from_string(const std::string& s) {
    for (ScenarioName n :
         {ScenarioName::Containment, ScenarioName::CylinderV0, ScenarioName::CylinderVW,
          ScenarioName::CylinderGeneric, ScenarioName::ConePair, ScenarioName::SquareSelf,
          ScenarioName::DiskPair, ScenarioName::SymmetricMRS, ScenarioName::ReflectionPair})
        if (s == to_string(n)) return n;
    throw std::invalid_argument("unknown scenario: " + s);
}

namespace {

double default_box_half_width(ScenarioName n) {
    switch (n) {
        case ScenarioName::CylinderV0:
        case ScenarioName::CylinderVW: return 60.0;
        case ScenarioName::CylinderGeneric: return 120.0;
        case ScenarioName::ConePair: return 150.0;
        default: return 20.0;
    }
}

ConvexBody strip(double lo_n, double hi_n, const Vec& normal, double trunc,
                 const Vec& axis) {
    // {lo_n <= <normal, x> <= hi_n} truncated to |<axis, x>| <= trunc
    std::vector<Halfspace> hs = {
        {normal, hi_n},
        {-normal, -lo_n},
        {axis, trunc},
        {-axis, trunc},
    };
    return ConvexBody::from_halfspaces(2, hs);
}

}  // namespace

Scenario build(const ScenarioSpec& spec) {
    if (!(spec.size > 0.0)) throw std::invalid_argument("scenario size must be positive");
    if (spec.approx_order < 8) throw std::invalid_argument("approximation order must be >= 8");

    const double s = spec.size;
    Scenario sc;
    const double bw =
        (spec.box_half_width > 0.0 ? spec.box_half_width : default_box_half_width(spec.name)) * s;
    sc.box = make_truncation_box(2, bw);

    switch (spec.name) {
        case ScenarioName::Containment:
            sc.K = make_box(vec2(-2 * s, -2 * s), vec2(2 * s, 2 * s));
            sc.L = make_box(vec2(-s, -s), vec2(s, s));
            sc.probes = {{vec2(0, 0), vec2(0.5 * s, 0), 33}};
            sc.expected = {ConcavityClass::Constant};
            break;

        case ScenarioName::CylinderV0:
            // small body K slides nowhere: K ∩ (L + tw) = K, so v = 0
            sc.K = make_box(vec2(0, 0.25 * s), vec2(0.5 * s, 0.75 * s));
            sc.L = make_box(vec2(-5 * s, 0), vec2(5 * s, s));
            sc.probes = {{vec2(0, 0), vec2(s, 0), 33}};
            sc.expected = {ConcavityClass::Constant};
            break;

        case ScenarioName::CylinderVW:
            // the intersection is the small square riding along, so v = w
            sc.K = make_box(vec2(-5 * s, 0), vec2(5 * s, s));
            sc.L = make_box(vec2(0, 0), vec2(0.5 * s, 0.5 * s));
            sc.probes = {{vec2(0, 0.25 * s), vec2(s, 0), 33}};
            sc.expected = {ConcavityClass::Constant};
            break;

        case ScenarioName::CylinderGeneric: {
            // two transversal strips; v = (1/2, 1/2) is neither 0 nor w
            const Vec diag = vec2(1, 1).normalized();
            const Vec anti = vec2(1, -1).normalized();
            sc.K = strip(-s / std::sqrt(2.0), s / std::sqrt(2.0), anti, 12 * s, diag);
            sc.L = strip(-s / std::sqrt(2.0), s / std::sqrt(2.0), diag, 12 * s, anti);
            sc.probes = {{vec2(0, 0), vec2(s, 0), 33}};
            sc.expected = {ConcavityClass::Constant};
            break;
        }

        case ScenarioName::ConePair: {
            // opposing quadrant cones; the overlap is a diamond scaling
            // linearly along the vertex line
            std::vector<Vec> kpts = {vec2(0, 0), vec2(8 * s, 8 * s), vec2(8 * s, -8 * s)};
            std::vector<Vec> lpts = {vec2(0, 0), vec2(-8 * s, 8 * s), vec2(-8 * s, -8 * s)};
            sc.K = ConvexBody::from_points(2, kpts);
            sc.L = ConvexBody::from_points(2, lpts);
            sc.probes = {{vec2(2 * s, 0), vec2(s, 0), 33}};
            sc.expected = {ConcavityClass::AffineNonConstant};
            break;
        }

        case ScenarioName::SquareSelf:
            sc.K = make_box(vec2(0, 0), vec2(s, s));
            sc.L = sc.K;
            sc.probes = {{vec2(0.5 * s, 0.5 * s), vec2(0.5 * s, 0.5 * s), 33}};
            sc.expected = {ConcavityClass::AffineNonConstant};
            break;

        case ScenarioName::DiskPair:
            // distinct radii; probes stay clear of the containment plateau
            // |x| <= 0.3 where the small disk fits inside the large one
            sc.K = make_disk_approx(spec.approx_order, s, vec2(0, 0));
            sc.L = make_disk_approx(spec.approx_order, 1.3 * s, vec2(0, 0));
            sc.probes = {{vec2(1.2 * s, 0), vec2(0.2 * s, 0), 33},
                         {vec2(0, -s), vec2(0, 0.15 * s), 33},
                         {vec2(0.8 * s, 0.8 * s), vec2(0.1 * s, -0.1 * s), 33}};
            sc.expected = {ConcavityClass::StrictlyConcave, ConcavityClass::StrictlyConcave,
                           ConcavityClass::StrictlyConcave};
            break;

        case ScenarioName::SymmetricMRS: {
            // origin-symmetric hexagon against itself: not strictly convex,
            // yet the level sets of g are strictly convex
            std::vector<Vec> pts = {vec2(s, 0),         vec2(0.5 * s, 0.9 * s),
                                    vec2(-0.5 * s, 0.9 * s), vec2(-s, 0),
                                    vec2(-0.5 * s, -0.9 * s), vec2(0.5 * s, -0.9 * s)};
            sc.K = ConvexBody::from_points(2, pts);
            sc.L = sc.K;
            sc.probes = {{vec2(0, 0), vec2(0.3 * s, 0.1 * s), 33}};
            sc.expected = {ConcavityClass::StrictlyConcave};
            break;
        }

        case ScenarioName::ReflectionPair: {
            std::mt19937_64 rng(spec.seed);
            std::uniform_real_distribution<double> unif(-1.0, 1.0);
            std::vector<Vec> pts;
            for (int attempt = 0; attempt < 100; ++attempt) {
                pts = {vec2(s * unif(rng), s * unif(rng)), vec2(s * unif(rng), s * unif(rng)),
                       vec2(s * unif(rng), s * unif(rng))};
                const Vec e1 = pts[1] - pts[0], e2 = pts[2] - pts[0];
                const double area = 0.5 * std::abs(e1[0] * e2[1] - e1[1] * e2[0]);
                if (area > 0.2 * s * s) break;
            }
            sc.K = ConvexBody::from_points(2, pts);
            sc.L = reflect(sc.K);
            const Vec peak = 2.0 * centroid(sc.K);
            sc.probes = {{peak, vec2(0.1 * s, 0), 33}};
            sc.expected = {ConcavityClass::StrictlyConcave};
            break;
        }
    }
    return sc;
}

std::vector<ScenarioSpec> catalog() {
    std::vector<ScenarioSpec> out;
    for (ScenarioName n :
         {ScenarioName::Containment, ScenarioName::CylinderV0, ScenarioName::CylinderVW,
          ScenarioName::CylinderGeneric, ScenarioName::ConePair, ScenarioName::SquareSelf,
          ScenarioName::DiskPair, ScenarioName::SymmetricMRS, ScenarioName::ReflectionPair}) {
        ScenarioSpec spec;
        spec.name = n;
        if (n == ScenarioName::DiskPair) spec.approx_order = 2048;
        out.push_back(spec);
    }
    return out;
}

}  // namespace covario
