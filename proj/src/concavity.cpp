#include "covario/concavity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace covario {

const char* to_string(ConcavityClass c) {
    switch (c) {
        case ConcavityClass::StrictlyConcave: return "StrictlyConcave";
        case ConcavityClass::Constant: return "Constant";
        case ConcavityClass::AffineNonConstant: return "AffineNonConstant";
        case ConcavityClass::Mixed: return "Mixed";
        case ConcavityClass::OutsideSupport: return "OutsideSupport";
    }
    return "?";
}

namespace {

// first and last strictly positive samples; -1 if none
std::pair<int, int> support_range(const SegmentProfile& p) {
    int lo = -1, hi = -1;
    for (int i = 0; i < static_cast<int>(p.samples.size()); ++i) {
        if (p.g(i) > 0.0) {
            if (lo < 0) lo = i;
            hi = i;
        }
    }
    return {lo, hi};
}

}  // namespace

ConcavityReport classify_segment(const SegmentProfile& profile, double tol) {
    const int m = static_cast<int>(profile.samples.size());
    if (m < 9) throw std::invalid_argument("classification needs at least 9 samples");

    ConcavityReport rep;
    auto [lo, hi] = support_range(profile);
    if (lo < 0) {
        rep.classification = ConcavityClass::OutsideSupport;
        return rep;
    }
    int in_support = 0;
    bool contiguous = true;
    for (int i = lo; i <= hi; ++i) {
        if (profile.g(i) > 0.0)
            ++in_support;
        else
            contiguous = false;
    }
    rep.in_support_samples = in_support;
    if (in_support < 3) throw std::invalid_argument("fewer than 3 in-support samples");

    int mid = (m - 1) / 2;  // prefer the t = 0 sample for the tolerance scale
    if (profile.g(mid) <= 0.0) mid = std::clamp((lo + hi) / 2, lo, hi);
    rep.tol = tol >= 0.0 ? tol : 1e-7 * profile.g_root(mid);

    double d2min = std::numeric_limits<double>::infinity();
    double d2max = -std::numeric_limits<double>::infinity();
    for (int i = lo + 1; i <= hi - 1; ++i) {
        const double d2 = profile.g_root(i + 1) - 2.0 * profile.g_root(i) + profile.g_root(i - 1);
        d2min = std::min(d2min, d2);
        d2max = std::max(d2max, d2);
    }
    rep.min_second_difference = d2min;
    rep.max_second_difference = d2max;
    rep.strictness_margin = -d2max;

    // least-squares affine fit of g^{1/n} over the in-support range
    double st = 0.0, sy = 0.0;
    for (int i = lo; i <= hi; ++i) {
        st += profile.samples[i].t;
        sy += profile.g_root(i);
    }
    const int n = hi - lo + 1;
    const double tbar = st / n, ybar = sy / n;
    double num = 0.0, den = 0.0;
    for (int i = lo; i <= hi; ++i) {
        const double dt = profile.samples[i].t - tbar;
        num += dt * (profile.g_root(i) - ybar);
        den += dt * dt;
    }
    rep.slope_beta = den > 0.0 ? num / den : 0.0;

    if (!contiguous) {
        rep.classification = ConcavityClass::Mixed;  // numerically disconnected support
    } else if (d2max <= rep.tol && d2min >= -rep.tol) {
        rep.classification = std::abs(rep.slope_beta) <= rep.tol
                                 ? ConcavityClass::Constant
                                 : ConcavityClass::AffineNonConstant;
    } else if (d2max < -rep.tol) {
        rep.classification = ConcavityClass::StrictlyConcave;
    } else {
        rep.classification = ConcavityClass::Mixed;
    }
    return rep;
}

HomothetyWitness recover_witness(const SegmentProfile& profile, double tol) {
    const ConcavityReport rep = classify_segment(profile);
    if (rep.classification != ConcavityClass::Constant &&
        rep.classification != ConcavityClass::AffineNonConstant)
        throw std::invalid_argument("witness recovery requires an affine segment");

    const int m = static_cast<int>(profile.samples.size());
    const int mid = (m - 1) / 2;
    if (!profile.samples[mid].body) throw std::invalid_argument("reference body at t = 0 missing");

    // largest |t| whose bodies are retained on both sides
    int ip = -1;
    for (int k = mid + 1; k < m; ++k) {
        const int jn = 2 * mid - k;
        if (profile.samples[k].body && jn >= 0 && profile.samples[jn].body) ip = k;
    }
    if (ip < 0) throw std::invalid_argument("no retained endpoint intersections");

    HomothetyWitness w;
    w.reference = *profile.samples[mid].body;
    w.t_plus = profile.samples[ip].t;
    const double gr0 = profile.g_root(mid);
    w.lambda = (profile.g_root(ip) - gr0) / (w.t_plus * gr0);
    if (std::abs(w.lambda) > 1.0 + 1e-6) throw WitnessValidationError(std::abs(w.lambda) - 1.0);
    w.lambda = std::clamp(w.lambda, -1.0, 1.0);
    w.v = (profile.samples[ip].centroid - (1.0 + w.t_plus * w.lambda) * centroid(w.reference)) /
          w.t_plus;

    const Vec origin = Vec::Zero(profile.dim);
    double worst = 0.0;
    for (const SegmentSample& s : profile.samples) {
        if (!s.body) continue;
        const double scale = 1.0 + s.t * w.lambda;
        if (scale <= 1e-9) continue;
        const ConvexBody model = translate(dilate(w.reference, scale, origin), s.t * w.v);
        worst = std::max(worst, hausdorff_distance(model, *s.body) / s.body->diameter());
    }
    w.max_residual = worst;
    if (worst > tol) throw WitnessValidationError(worst);
    return w;
}

namespace {

double intersection_volume_of(const Intersection& r) { return r.volume; }

double symdiff_volume(const Intersection& a, const Intersection& b) {
    const double va = intersection_volume_of(a);
    const double vb = intersection_volume_of(b);
    double vab = 0.0;
    if (a.is_body() && b.is_body()) vab = intersect(*a.body, *b.body).volume;
    return va + vb - 2.0 * vab;
}

}  // namespace

ReconstructionReport verify_constant_case(const ConvexBody& K, const ConvexBody& L,
                                          const SegmentProbe& probe,
                                          const HomothetyWitness& witness,
                                          const TruncationBox& box) {
    probe.validate(K.dim());
    if (std::abs(witness.lambda) > 1e-6)
        throw std::invalid_argument("constant-case reconstruction requires lambda = 0");

    const double len_tol = 1e-9 * std::max(K.diameter(), L.diameter());
    const ConvexBody La = translate(L, probe.a);
    const Vec vw = witness.v - probe.w;

    ReconstructionReport rep;
    rep.kind = ReconstructionReport::Cylinder;
    rep.K_ext = witness.v.norm() <= len_tol ? K : cylinder_extend(K, witness.v, box);
    rep.L_ext = vw.norm() <= len_tol ? La : cylinder_extend(La, vw, box);

    for (int i = 0; i < probe.samples; ++i) {
        const double t = probe.t_at(i);
        const Intersection lhs = intersect(K, translate(L, probe.point_at(i)));
        const Intersection rhs = intersect(rep.K_ext, translate(rep.L_ext, t * probe.w));
        const double sd = symdiff_volume(lhs, rhs);
        rep.per_t_symdiff.emplace_back(t, sd);
        rep.max_symdiff = std::max(rep.max_symdiff, sd);
    }
    return rep;
}

ReconstructionReport verify_affine_case(const ConvexBody& K, const ConvexBody& L,
                                        const SegmentProbe& probe,
                                        const HomothetyWitness& witness,
                                        const TruncationBox& box) {
    probe.validate(K.dim());
    if (!(witness.lambda > 0.0))
        throw std::invalid_argument("affine-case reconstruction requires lambda in (0, 1]");

    const ConvexBody La = translate(L, probe.a);
    const Vec apex_k = -witness.v / witness.lambda;
    const Vec apex_l = -(witness.v - probe.w) / witness.lambda;

    ReconstructionReport rep;
    rep.kind = ReconstructionReport::Cone;
    rep.K_ext = cone_extend(K, apex_k, box);
    rep.L_ext = cone_extend(La, apex_l, box);

    const Intersection core = intersect(rep.K_ext, rep.L_ext);
    const Vec origin = Vec::Zero(K.dim());

    for (int i = 0; i < probe.samples; ++i) {
        const double t = probe.t_at(i);
        const Intersection lhs = intersect(K, translate(L, probe.point_at(i)));
        const Intersection rhs = intersect(rep.K_ext, translate(rep.L_ext, t * probe.w));
        double sd = symdiff_volume(lhs, rhs);

        // dilation form of the same identity
        const double scale = 1.0 + t * witness.lambda;
        if (core.is_body() && scale > 1e-9) {
            Intersection scaled;
            scaled.kind = SetKind::Body;
            scaled.body = translate(dilate(*core.body, scale, origin), t * witness.v);
            scaled.volume = volume(*scaled.body);
            sd = std::max(sd, symdiff_volume(lhs, scaled));
        }
        rep.per_t_symdiff.emplace_back(t, sd);
        rep.max_symdiff = std::max(rep.max_symdiff, sd);
    }
    return rep;
}

BoundaryRelation boundary_dichotomy(const ConvexBody& K, const ConvexBody& L,
                                    const Vec& x, double tol) {
    const ConvexBody M = translate(L, x);
    if (intersect(K, M).kind == SetKind::Empty)
        throw std::invalid_argument("empty intersection");

    auto depth = [](const ConvexBody& outer, const ConvexBody& inner) {
        double worst = std::numeric_limits<double>::infinity();
        for (const Vec& q : inner.vertices())
            for (const Halfspace& h : outer.halfspaces())
                worst = std::min(worst, h.offset - h.normal.dot(q));
        return worst;  // > 0 means inner strictly inside outer
    };
    if (depth(K, M) > tol) return BoundaryRelation::KContainsL;
    if (depth(M, K) > tol) return BoundaryRelation::LContainsK;
    return BoundaryRelation::BoundariesMeet;
}

double bm_defect(const ConvexBody& A, const ConvexBody& B) {
    const int n = A.dim();
    const ConvexBody mid = dilate(minkowski_sum(A, B), 0.5, Vec::Zero(n));
    return std::pow(volume(mid), 1.0 / n) -
           0.5 * (std::pow(volume(A), 1.0 / n) + std::pow(volume(B), 1.0 / n));
}

}  // namespace covario
