#pragma once

#include "covario/covariogram.hpp"

#include <cstdint>

namespace covario {

enum class MaxCertificate { UniqueByStrictConcavity, PlateauSuspected, NumericOnly };

const char* to_string(MaxCertificate c);

struct MaxResult {
    Vec argmax;
    double value = 0.0;
    MaxCertificate certificate = MaxCertificate::NumericOnly;
    int restarts_agreed = 0;
    double spread = 0.0;  // max pairwise distance among restart argmaxes
};

// Maximizes g_{K,L} over translations with restarted cyclic line searches on
// g^{1/n} (concave, hence unimodal along every line of its support).
// pos_tol <= 0 selects 1e-7 * diam(K + (-L)).
MaxResult maximize(const ConvexBody& K, const ConvexBody& L, int restarts = 8,
                   double pos_tol = -1.0, std::uint64_t seed = 42);

struct LevelSetReport {
    double h = 0.0;
    int chords = 0;
    double max_value = 0.0;
    Vec argmax;
    double min_midpoint_excess = 0.0;  // min over chords of g(midpoint) - h
    bool plateau_detected = false;
};

// Probes strict convexity of the level set {g >= h} with random chords
// through bisected boundary points.
LevelSetReport level_set_probe(const ConvexBody& K, const ConvexBody& L, double h,
                               int chords, std::uint64_t seed = 42);

}  // namespace covario
