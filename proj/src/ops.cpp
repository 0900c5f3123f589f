#include "covario/body.hpp"

#include "detail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace covario {

namespace {

void check_same_dim(const ConvexBody& a, const ConvexBody& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

double point_segment_distance(const Vec& p, const Vec& a, const Vec& b) {
    const Vec d = b - a;
    const double len2 = d.squaredNorm();
    if (len2 <= 0.0) return (p - a).norm();
    const double t = std::clamp((p - a).dot(d) / len2, 0.0, 1.0);
    return (p - (a + t * d)).norm();
}

double point_triangle_distance(const Vec& p, const Vec& a, const Vec& b, const Vec& c) {
    const Eigen::Vector3d pa = (p - a).head<3>();
    const Eigen::Vector3d ab = (b - a).head<3>();
    const Eigen::Vector3d ac = (c - a).head<3>();
    const Eigen::Vector3d n = ab.cross(ac);
    const double n2 = n.squaredNorm();
    if (n2 > 0.0) {
        const double dist_plane = pa.dot(n) / std::sqrt(n2);
        const Eigen::Vector3d q = pa - dist_plane * n / std::sqrt(n2);
        // barycentric inside test of the projection q (relative to a)
        const double d00 = ab.dot(ab), d01 = ab.dot(ac), d11 = ac.dot(ac);
        const double d20 = q.dot(ab), d21 = q.dot(ac);
        const double denom = d00 * d11 - d01 * d01;
        if (denom > 0.0) {
            const double v = (d11 * d20 - d01 * d21) / denom;
            const double w = (d00 * d21 - d01 * d20) / denom;
            if (v >= 0.0 && w >= 0.0 && v + w <= 1.0) return std::abs(dist_plane);
        }
    }
    return std::min({point_segment_distance(p, a, b), point_segment_distance(p, b, c),
                     point_segment_distance(p, a, c)});
}

// rotate a CCW loop so it starts at the lexicographically smallest vertex
std::vector<Vec> canonical_start(const std::vector<Vec>& loop) {
    size_t best = 0;
    for (size_t i = 1; i < loop.size(); ++i)
        if (loop[i][1] < loop[best][1] ||
            (loop[i][1] == loop[best][1] && loop[i][0] < loop[best][0]))
            best = i;
    std::vector<Vec> out(loop.begin() + best, loop.end());
    out.insert(out.end(), loop.begin(), loop.begin() + best);
    return out;
}

Smoothness combine_smoothness(const ConvexBody& a, const ConvexBody& b) {
    if (a.smoothness().kind == Smoothness::StrictlyConvexApprox ||
        b.smoothness().kind == Smoothness::StrictlyConvexApprox)
        return Smoothness::strictly_convex(
            std::max(a.smoothness().approx_order, b.smoothness().approx_order));
    return Smoothness::polytope();
}

}  // namespace

ConvexBody translate(const ConvexBody& body, const Vec& x) {
    if (x.size() != body.dim()) throw std::invalid_argument("dimension mismatch");
    if (!x.allFinite()) throw std::invalid_argument("translation must be finite");
    ConvexBody out = body;
    for (Vec& v : out.vertices_) v += x;
    for (Halfspace& h : out.halfspaces_) h.offset += h.normal.dot(x);
    return out;
}

ConvexBody reflect(const ConvexBody& body) {
    std::vector<Vec> pts;
    pts.reserve(body.vertices().size());
    for (const Vec& v : body.vertices()) pts.push_back(-v);
    return ConvexBody::from_points(body.dim(), pts, body.smoothness());
}

ConvexBody dilate(const ConvexBody& body, double t, const Vec& center) {
    if (!(t > 0.0)) throw std::invalid_argument("dilation factor must be positive");
    if (center.size() != body.dim()) throw std::invalid_argument("dimension mismatch");
    ConvexBody out = body;
    for (Vec& v : out.vertices_) v = center + t * (v - center);
    for (Halfspace& h : out.halfspaces_)
        h.offset = t * h.offset + (1.0 - t) * h.normal.dot(center);
    out.diameter_ *= t;
    return out;
}

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
    check_same_dim(a, b);
    std::vector<Vec> pts;
    if (a.dim() == 2) {
        // edge merge by polar angle; the hull pass below normalizes the loop
        const std::vector<Vec> la = canonical_start(a.vertices());
        const std::vector<Vec> lb = canonical_start(b.vertices());
        const size_t n = la.size(), m = lb.size();
        size_t i = 0, j = 0;
        Vec cur = la[0] + lb[0];
        pts.push_back(cur);
        while (i < n || j < m) {
            if (i < n && j < m) {
                const Vec ea = la[(i + 1) % n] - la[i];
                const Vec eb = lb[(j + 1) % m] - lb[j];
                const double c = detail::cross2(ea, eb);
                if (c > 0.0) {
                    cur += ea;
                    ++i;
                } else if (c < 0.0) {
                    cur += eb;
                    ++j;
                } else {
                    cur += ea + eb;
                    ++i;
                    ++j;
                }
            } else if (i < n) {
                cur += la[(i + 1) % n] - la[i];
                ++i;
            } else {
                cur += lb[(j + 1) % m] - lb[j];
                ++j;
            }
            pts.push_back(cur);
        }
    } else {
        pts.reserve(a.vertices().size() * b.vertices().size());
        for (const Vec& p : a.vertices())
            for (const Vec& q : b.vertices()) pts.push_back(p + q);
    }
    return ConvexBody::from_points(a.dim(), pts, combine_smoothness(a, b));
}

double volume(const ConvexBody& body) {
    if (body.dim() == 2) return detail::loop_area(body.vertices());
    return detail::loops_volume(detail::faces_to_loops(body.vertices(), body.faces()));
}

Vec centroid(const ConvexBody& body) {
    if (body.dim() == 2) return detail::loop_centroid(body.vertices());
    return detail::loops_centroid(detail::faces_to_loops(body.vertices(), body.faces()));
}

double support_function(const ConvexBody& body, const Vec& u) {
    if (u.size() != body.dim()) throw std::invalid_argument("dimension mismatch");
    if (u.norm() <= 0.0) throw std::invalid_argument("zero direction");
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec& v : body.vertices()) best = std::max(best, u.dot(v));
    return best;
}

double distance_to(const ConvexBody& body, const Vec& p) {
    if (body.contains(p, 1e-14 * body.diameter())) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    if (body.dim() == 2) {
        const auto& loop = body.vertices();
        for (size_t i = 0; i < loop.size(); ++i)
            best = std::min(best, point_segment_distance(p, loop[i], loop[(i + 1) % loop.size()]));
    } else {
        for (const auto& f : body.faces())
            best = std::min(best, point_triangle_distance(p, body.vertices()[f[0]],
                                                          body.vertices()[f[1]],
                                                          body.vertices()[f[2]]));
    }
    return best;
}

double hausdorff_distance(const ConvexBody& a, const ConvexBody& b) {
    check_same_dim(a, b);
    double d = 0.0;
    for (const Vec& v : a.vertices()) d = std::max(d, distance_to(b, v));
    for (const Vec& v : b.vertices()) d = std::max(d, distance_to(a, v));
    return d;
}

HomothetyCheckResult is_homothetic(const ConvexBody& a, const ConvexBody& b, double tol) {
    check_same_dim(a, b);
    HomothetyCheckResult res;
    const double va = volume(a), vb = volume(b);
    if (va <= 0.0 || vb <= 0.0) throw std::invalid_argument("degenerate body");
    res.scale = std::pow(vb / va, 1.0 / a.dim());
    res.shift = centroid(b) - res.scale * centroid(a);
    const ConvexBody candidate = translate(dilate(a, res.scale, Vec::Zero(a.dim())), res.shift);
    res.hausdorff_residual = hausdorff_distance(candidate, b) / b.diameter();
    res.is_homothetic = res.hausdorff_residual <= tol;
    return res;
}

Intersection intersect(const ConvexBody& a, const ConvexBody& b) {
    check_same_dim(a, b);
    const double scale = std::max(a.diameter(), b.diameter());
    Intersection res;
    if (a.dim() == 2) {
        std::vector<Vec> loop = a.vertices();
        for (const Halfspace& h : b.halfspaces()) {
            loop = detail::clip_loop(loop, h.normal, h.offset);
            if (loop.empty()) break;
        }
        if (loop.empty()) return res;  // Empty
        const double area = std::abs(detail::loop_area(loop));
        if (area <= 1e-12 * scale * scale) {
            res.kind = SetKind::LowerDimensional;
            return res;
        }
        res.kind = SetKind::Body;
        res.volume = area;
        res.body = ConvexBody::from_points(2, loop);
    } else {
        detail::FaceLoops loops = detail::faces_to_loops(a.vertices(), a.faces());
        for (const Halfspace& h : b.halfspaces()) {
            loops = detail::clip_loops(loops, h.normal, h.offset, scale);
            if (loops.empty()) break;
        }
        if (loops.empty()) return res;
        const double vol = std::abs(detail::loops_volume(loops));
        if (vol <= 1e-12 * scale * scale * scale) {
            res.kind = SetKind::LowerDimensional;
            return res;
        }
        res.kind = SetKind::Body;
        res.volume = vol;
        res.body = ConvexBody::from_points(3, detail::loops_points(loops, 1e-12 * scale));
    }
    return res;
}

ConvexBody cylinder_extend(const ConvexBody& body, const Vec& v, const TruncationBox& box) {
    if (v.size() != body.dim()) throw std::invalid_argument("dimension mismatch");
    const double vn = v.norm();
    if (vn <= 0.0) throw std::invalid_argument("zero direction");
    if (!box.satisfies_margin({&body}, vn))
        throw std::invalid_argument("truncation box too small");
    const double reach = 2.0 * (2.0 * box.half_widths.norm()) / vn;
    std::vector<Vec> pts;
    pts.reserve(2 * body.vertices().size());
    for (const Vec& p : body.vertices()) {
        pts.push_back(p + reach * v);
        pts.push_back(p - reach * v);
    }
    ConvexBody slab = ConvexBody::from_points(body.dim(), pts);
    Intersection res = intersect(slab, box.to_body());
    if (!res.is_body()) throw std::runtime_error("cylinder truncation failed");
    return *res.body;
}

ConvexBody cone_extend(const ConvexBody& body, const Vec& apex, const TruncationBox& box) {
    if (apex.size() != body.dim()) throw std::invalid_argument("dimension mismatch");
    if (!box.satisfies_margin({&body}, (apex - centroid(body)).norm()))
        throw std::invalid_argument("truncation box too small");
    const double tol = 1e-9 * body.diameter();
    if (body.contains(apex, -tol)) return box.to_body();  // apex interior: cone is everything

    // smallest positive clearance of the apex against the supporting planes
    // bounds the exit distance of every ray from the apex through the body
    double r_planes = std::numeric_limits<double>::infinity();
    for (const Halfspace& h : body.halfspaces()) {
        const double c = h.offset - h.normal.dot(apex);
        if (c > tol) r_planes = std::min(r_planes, c);
    }
    const double r = std::max(distance_to(body, apex),
                              std::isfinite(r_planes) ? r_planes : 0.0);
    if (r <= 0.0) throw std::runtime_error("cone extension is degenerate");

    const ConvexBody box_body = box.to_body();
    double boxreach = 0.0;
    for (const Vec& corner : box_body.vertices())
        boxreach = std::max(boxreach, (corner - apex).norm());
    const double blowup = 4.0 * boxreach / r;

    std::vector<Vec> pts;
    pts.push_back(apex);
    for (const Vec& p : body.vertices()) pts.push_back(apex + blowup * (p - apex));
    ConvexBody wedge = ConvexBody::from_points(body.dim(), pts);
    Intersection res = intersect(wedge, box.to_body());
    if (!res.is_body()) throw std::runtime_error("cone truncation failed");
    return *res.body;
}

}  // namespace covario
