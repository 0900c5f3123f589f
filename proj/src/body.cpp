#include "covario/body.hpp"

#include "detail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace covario {

namespace {

void check_dim(int dim) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("ambient dimension must be 2 or 3");
}

void check_points(int dim, const std::vector<Vec>& points) {
    for (const Vec& p : points) {
        if (p.size() != dim) throw std::invalid_argument("point dimension mismatch");
        if (!p.allFinite()) throw std::invalid_argument("point coordinates must be finite");
    }
}

double exact_diameter(const std::vector<Vec>& pts) {
    // O(n^2) is fine at the vertex counts we build; fall back to the
    // bounding-box diagonal for very large hulls.
    if (pts.size() > 2500) return detail::points_scale(pts);
    double best = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            best = std::max(best, (pts[i] - pts[j]).squaredNorm());
    return std::sqrt(best);
}

std::vector<Halfspace> halfspaces_from_loop(const std::vector<Vec>& loop) {
    std::vector<Halfspace> hs;
    const size_t n = loop.size();
    hs.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const Vec& a = loop[i];
        const Vec& b = loop[(i + 1) % n];
        Vec d = b - a;
        const double len = d.norm();
        if (len <= 0.0) continue;
        Vec normal = vec2(d[1] / len, -d[0] / len);
        hs.push_back({normal, normal.dot(a)});
    }
    return hs;
}

// dedupe planes that describe the same supporting hyperplane
int find_plane(const std::vector<Halfspace>& planes, const Vec& n, double off, double scale) {
    for (size_t i = 0; i < planes.size(); ++i)
        if ((planes[i].normal - n).norm() <= 1e-9 &&
            std::abs(planes[i].offset - off) <= 1e-9 * scale)
            return static_cast<int>(i);
    return -1;
}

}  // namespace

ConvexBody ConvexBody::from_points(int dim, const std::vector<Vec>& points,
                                   Smoothness smoothness) {
    check_dim(dim);
    check_points(dim, points);
    const double scale = detail::points_scale(points);

    ConvexBody body;
    body.dim_ = dim;
    body.smoothness_ = smoothness;

    if (dim == 2) {
        body.vertices_ = detail::hull_2d(points, scale);
        body.halfspaces_ = halfspaces_from_loop(body.vertices_);
    } else {
        // first hull pass identifies the supporting planes; vertices lying in
        // the relative interior of a facet or edge meet fewer than 3 of them
        auto tris = detail::hull_3d(points, scale);
        std::vector<Halfspace> planes;
        std::vector<std::vector<int>> vertex_planes(points.size());
        for (const auto& t : tris) {
            Eigen::Vector3d u = (points[t[1]] - points[t[0]]).head<3>();
            Eigen::Vector3d w = (points[t[2]] - points[t[0]]).head<3>();
            Eigen::Vector3d n3 = u.cross(w);
            if (n3.norm() <= 1e-20 * scale * scale) continue;
            n3.normalize();
            Vec n = vec3(n3[0], n3[1], n3[2]);
            const double off = n.dot(points[t[0]]);
            int id = find_plane(planes, n, off, scale);
            if (id < 0) {
                id = static_cast<int>(planes.size());
                planes.push_back({n, off});
            }
            for (int vi : t) {
                auto& vp = vertex_planes[vi];
                if (std::find(vp.begin(), vp.end(), id) == vp.end()) vp.push_back(id);
            }
        }
        std::vector<Vec> extreme;
        for (size_t i = 0; i < points.size(); ++i)
            if (vertex_planes[i].size() >= 3) extreme.push_back(points[i]);
        if (extreme.size() < 4) throw std::invalid_argument("body is not full-dimensional");

        body.vertices_ = std::move(extreme);
        body.faces_ = detail::hull_3d(body.vertices_, scale);
        body.halfspaces_.clear();
        for (const auto& t : body.faces_) {
            Eigen::Vector3d u = (body.vertices_[t[1]] - body.vertices_[t[0]]).head<3>();
            Eigen::Vector3d w = (body.vertices_[t[2]] - body.vertices_[t[0]]).head<3>();
            Eigen::Vector3d n3 = u.cross(w);
            if (n3.norm() <= 1e-20 * scale * scale) continue;
            n3.normalize();
            Vec n = vec3(n3[0], n3[1], n3[2]);
            const double off = n.dot(body.vertices_[t[0]]);
            if (find_plane(body.halfspaces_, n, off, scale) < 0)
                body.halfspaces_.push_back({n, off});
        }
    }
    body.diameter_ = exact_diameter(body.vertices_);
    return body;
}

ConvexBody ConvexBody::from_halfspaces(int dim, const std::vector<Halfspace>& halfspaces,
                                       Smoothness smoothness) {
    check_dim(dim);
    if (halfspaces.size() < static_cast<size_t>(dim) + 1)
        throw std::invalid_argument("too few halfspaces for a bounded body");
    std::vector<Halfspace> hs;
    double max_off = 0.0;
    for (const Halfspace& h : halfspaces) {
        if (h.normal.size() != dim) throw std::invalid_argument("halfspace dimension mismatch");
        const double len = h.normal.norm();
        if (len <= 0.0) throw std::invalid_argument("zero halfspace normal");
        hs.push_back({h.normal / len, h.offset / len});
        max_off = std::max(max_off, std::abs(h.offset / len));
    }

    // clip a box that is grown until the intersection no longer touches it
    double R = 10.0 * (1.0 + max_off);
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<Vec> pts;
        if (dim == 2) {
            std::vector<Vec> loop = {vec2(-R, -R), vec2(R, -R), vec2(R, R), vec2(-R, R)};
            for (const Halfspace& h : hs) {
                loop = detail::clip_loop(loop, h.normal, h.offset);
                if (loop.empty()) break;
            }
            pts = loop;
        } else {
            TruncationBox box = make_truncation_box(3, R);
            ConvexBody cube = box.to_body();
            detail::FaceLoops loops = detail::faces_to_loops(cube.vertices(), cube.faces());
            for (const Halfspace& h : hs) {
                loops = detail::clip_loops(loops, h.normal, h.offset, R);
                if (loops.empty()) break;
            }
            pts = detail::loops_points(loops, 1e-12 * R);
        }
        if (pts.empty()) throw std::invalid_argument("halfspace intersection is empty");
        bool touches = false;
        for (const Vec& p : pts)
            if (p.cwiseAbs().maxCoeff() >= 0.99 * R) { touches = true; break; }
        if (!touches) return from_points(dim, pts, smoothness);
        R *= 8.0;
    }
    throw std::invalid_argument("halfspace intersection appears unbounded");
}

bool ConvexBody::contains(const Vec& p, double tol) const {
    if (p.size() != dim_) throw std::invalid_argument("dimension mismatch");
    for (const Halfspace& h : halfspaces_)
        if (h.normal.dot(p) > h.offset + tol) return false;
    return true;
}

ConvexBody TruncationBox::to_body() const {
    return make_box(center - half_widths, center + half_widths);
}

bool TruncationBox::satisfies_margin(const std::vector<const ConvexBody*>& bodies,
                                     double probe_length) const {
    double diam_sum = probe_length;
    double clearance = std::numeric_limits<double>::infinity();
    for (const ConvexBody* b : bodies) {
        diam_sum += b->diameter();
        for (const Vec& v : b->vertices())
            for (int d = 0; d < center.size(); ++d) {
                clearance = std::min(clearance, center[d] + half_widths[d] - v[d]);
                clearance = std::min(clearance, v[d] - (center[d] - half_widths[d]));
            }
    }
    return clearance >= 2.0 * diam_sum;
}

ConvexBody make_box(const Vec& lo, const Vec& hi) {
    const int dim = static_cast<int>(lo.size());
    check_dim(dim);
    if (hi.size() != dim) throw std::invalid_argument("dimension mismatch");
    if (((hi - lo).array() <= 0.0).any()) throw std::invalid_argument("box must have positive extent");
    std::vector<Vec> pts;
    for (int mask = 0; mask < (1 << dim); ++mask) {
        Vec p(dim);
        for (int d = 0; d < dim; ++d) p[d] = (mask >> d & 1) ? hi[d] : lo[d];
        pts.push_back(p);
    }
    return ConvexBody::from_points(dim, pts);
}

ConvexBody make_regular_polygon(int k, double radius, const Vec& center) {
    if (k < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    if (radius <= 0.0) throw std::invalid_argument("radius must be positive");
    if (center.size() != 2) throw std::invalid_argument("regular polygon is planar");
    std::vector<Vec> pts;
    pts.reserve(k);
    for (int i = 0; i < k; ++i) {
        const double th = 2.0 * M_PI * i / k;
        pts.push_back(center + vec2(radius * std::cos(th), radius * std::sin(th)));
    }
    return ConvexBody::from_points(2, pts);
}

ConvexBody make_disk_approx(int k, double radius, const Vec& center) {
    ConvexBody poly = make_regular_polygon(k, radius, center);
    return ConvexBody::from_points(2, poly.vertices(), Smoothness::strictly_convex(k));
}

ConvexBody make_simplex(int dim, double scale) {
    check_dim(dim);
    if (scale <= 0.0) throw std::invalid_argument("scale must be positive");
    std::vector<Vec> pts;
    pts.push_back(Vec::Zero(dim));
    for (int d = 0; d < dim; ++d) {
        Vec p = Vec::Zero(dim);
        p[d] = scale;
        pts.push_back(p);
    }
    return ConvexBody::from_points(dim, pts);
}

}  // namespace covario
