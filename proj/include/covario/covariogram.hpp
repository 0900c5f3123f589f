#pragma once

#include "covario/body.hpp"

namespace covario {

// Probe segment a + t w, t in [-1, 1], sampled at m points (m odd so t = 0
// is included).
struct SegmentProbe {
    Vec a;
    Vec w;
    int samples = 33;

    void validate(int dim) const;
    double t_at(int i) const { return -1.0 + 2.0 * i / (samples - 1); }
    Vec point_at(int i) const { return a + t_at(i) * w; }
    SegmentProbe reversed() const { return {a, -w, samples}; }
};

struct SegmentSample {
    double t = 0.0;
    SetKind kind = SetKind::Empty;
    double g = 0.0;       // |K ∩ (L + a + t w)|
    double g_root = 0.0;  // g^{1/n}
    Vec centroid;         // of the intersection, when full-dimensional
    std::optional<ConvexBody> body;
};

struct SegmentProfile {
    int dim = 0;
    SegmentProbe probe;
    std::vector<SegmentSample> samples;

    double g(int i) const { return samples[i].g; }
    double g_root(int i) const { return samples[i].g_root; }
    SegmentProfile reversed() const;
};

// g_{K,L}(x) = |K ∩ (L + x)|; 0 for empty or lower-dimensional overlap.
double eval(const ConvexBody& K, const ConvexBody& L, const Vec& x);

// Total vertex budget across retained intersection bodies; beyond it only
// volumes and centroids are kept.
inline constexpr int kProfileVertexBudget = 4096;

SegmentProfile eval_segment(const ConvexBody& K, const ConvexBody& L,
                            const SegmentProbe& probe, bool keep_bodies = true);

// Support of g, the sumset K + (-L).
ConvexBody support_sumset(const ConvexBody& K, const ConvexBody& L);

}  // namespace covario
