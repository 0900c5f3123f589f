#include "covario/covariogram.hpp"

#include "detail.hpp"

#include <cmath>

namespace covario {

void SegmentProbe::validate(int dim) const {
    if (a.size() != dim || w.size() != dim) throw std::invalid_argument("dimension mismatch");
    if (w.norm() <= 0.0) throw std::invalid_argument("probe direction must be non-zero");
    if (samples < 5 || samples % 2 == 0)
        throw std::invalid_argument("probe sample count must be odd and at least 5");
}

SegmentProfile SegmentProfile::reversed() const {
    SegmentProfile out;
    out.dim = dim;
    out.probe = probe.reversed();
    out.samples.assign(samples.rbegin(), samples.rend());
    for (SegmentSample& s : out.samples) s.t = -s.t;
    return out;
}

double eval(const ConvexBody& K, const ConvexBody& L, const Vec& x) {
    if (K.dim() != L.dim()) throw std::invalid_argument("dimension mismatch");
    if (x.size() != K.dim()) throw std::invalid_argument("dimension mismatch");
    const double scale = std::max(K.diameter(), L.diameter());
    if (K.dim() == 2) {
        std::vector<Vec> loop = K.vertices();
        for (const Halfspace& h : L.halfspaces()) {
            loop = detail::clip_loop(loop, h.normal, h.offset + h.normal.dot(x));
            if (loop.empty()) return 0.0;
        }
        const double area = std::abs(detail::loop_area(loop));
        return area <= 1e-12 * scale * scale ? 0.0 : area;
    }
    detail::FaceLoops loops = detail::faces_to_loops(K.vertices(), K.faces());
    for (const Halfspace& h : L.halfspaces()) {
        loops = detail::clip_loops(loops, h.normal, h.offset + h.normal.dot(x), scale);
        if (loops.empty()) return 0.0;
    }
    const double vol = std::abs(detail::loops_volume(loops));
    return vol <= 1e-12 * scale * scale * scale ? 0.0 : vol;
}

SegmentProfile eval_segment(const ConvexBody& K, const ConvexBody& L,
                            const SegmentProbe& probe, bool keep_bodies) {
    if (K.dim() != L.dim()) throw std::invalid_argument("dimension mismatch");
    probe.validate(K.dim());

    SegmentProfile profile;
    profile.dim = K.dim();
    profile.probe = probe;
    profile.samples.resize(probe.samples);

    int vertex_budget = kProfileVertexBudget;
    for (int i = 0; i < probe.samples; ++i) {
        SegmentSample& s = profile.samples[i];
        s.t = probe.t_at(i);
        const Vec x = probe.point_at(i);
        if (!keep_bodies) {
            s.g = eval(K, L, x);
            s.kind = s.g > 0.0 ? SetKind::Body : SetKind::Empty;
        } else {
            Intersection res = intersect(K, translate(L, x));
            s.kind = res.kind;
            if (res.is_body()) {
                s.g = res.volume;
                s.centroid = centroid(*res.body);
                const int nv = static_cast<int>(res.body->vertices().size());
                if (nv <= vertex_budget) {
                    vertex_budget -= nv;
                    s.body = std::move(res.body);
                }
            }
        }
        s.g_root = std::pow(s.g, 1.0 / K.dim());
    }
    return profile;
}

ConvexBody support_sumset(const ConvexBody& K, const ConvexBody& L) {
    return minkowski_sum(K, reflect(L));
}

}  // namespace covario
