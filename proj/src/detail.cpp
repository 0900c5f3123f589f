#include "detail.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace covario::detail {

double loop_area(const std::vector<Vec>& loop) {
    double s = 0.0;
    const size_t n = loop.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec& a = loop[i];
        const Vec& b = loop[(i + 1) % n];
        s += a[0] * b[1] - b[0] * a[1];
    }
    return 0.5 * s;
}

Vec loop_centroid(const std::vector<Vec>& loop) {
    const size_t n = loop.size();
    double a6 = 0.0, cx = 0.0, cy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const Vec& p = loop[i];
        const Vec& q = loop[(i + 1) % n];
        const double w = p[0] * q[1] - q[0] * p[1];
        a6 += w;
        cx += (p[0] + q[0]) * w;
        cy += (p[1] + q[1]) * w;
    }
    if (std::abs(a6) < 1e-300) throw std::runtime_error("degenerate loop centroid");
    return vec2(cx / (3.0 * a6), cy / (3.0 * a6));
}

std::vector<Vec> clip_loop(const std::vector<Vec>& loop, const Vec& n, double off) {
    std::vector<Vec> out;
    const size_t m = loop.size();
    if (m == 0) return out;
    out.reserve(m + 2);
    double dprev = n.dot(loop[m - 1]) - off;
    for (size_t i = 0; i < m; ++i) {
        const Vec& cur = loop[i];
        const Vec& prev = loop[(i + m - 1) % m];
        const double d = n.dot(cur) - off;
        if (dprev <= 0.0) {
            out.push_back(prev);
            if (d > 0.0) out.push_back(prev + (dprev / (dprev - d)) * (cur - prev));
        } else if (d <= 0.0) {
            out.push_back(prev + (dprev / (dprev - d)) * (cur - prev));
        }
        dprev = d;
    }
    return out;
}

double points_scale(const std::vector<Vec>& points) {
    if (points.empty()) return 1.0;
    Vec lo = points.front(), hi = points.front();
    for (const Vec& p : points) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    const double d = (hi - lo).norm();
    return d > 0.0 ? d : 1.0;
}

std::vector<Vec> hull_2d(std::vector<Vec> points, double scale) {
    const double eps = 1e-12 * scale * scale;
    std::sort(points.begin(), points.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [&](const Vec& a, const Vec& b) {
                                 return (a - b).norm() <= 1e-12 * scale;
                             }),
                 points.end());
    if (points.size() < 3) throw std::invalid_argument("body is not full-dimensional");

    auto build = [&](auto begin, auto end) {
        std::vector<Vec> h;
        for (auto it = begin; it != end; ++it) {
            while (h.size() >= 2 && cross2(h[h.size() - 1] - h[h.size() - 2], *it - h[h.size() - 2]) <= eps)
                h.pop_back();
            h.push_back(*it);
        }
        return h;
    };
    std::vector<Vec> lower = build(points.begin(), points.end());
    std::vector<Vec> upper = build(points.rbegin(), points.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3 || loop_area(lower) <= eps)
        throw std::invalid_argument("body is not full-dimensional");
    return lower;
}

namespace {

struct Tri {
    std::array<int, 3> v;
    Vec n;       // outward, not normalized
    double off;  // n . x = off on the plane
    bool alive = true;
};

Tri make_tri(const std::vector<Vec>& pts, int a, int b, int c) {
    Tri t;
    t.v = {a, b, c};
    Eigen::Vector3d u = (pts[b] - pts[a]).head<3>();
    Eigen::Vector3d w = (pts[c] - pts[a]).head<3>();
    Eigen::Vector3d n3 = u.cross(w);
    t.n = Vec(3);
    t.n << n3[0], n3[1], n3[2];
    t.off = t.n.dot(pts[a]);
    return t;
}

}  // namespace

std::vector<std::array<int, 3>> hull_3d(const std::vector<Vec>& points, double scale) {
    const int n = static_cast<int>(points.size());
    if (n < 4) throw std::invalid_argument("body is not full-dimensional");
    const double eps = 1e-10 * scale;

    // initial simplex: spread points
    int i0 = 0, i1 = -1;
    double best = -1.0;
    for (int i = 1; i < n; ++i) {
        const double d = (points[i] - points[i0]).norm();
        if (d > best) { best = d; i1 = i; }
    }
    if (best <= eps) throw std::invalid_argument("body is not full-dimensional");
    int i2 = -1;
    best = -1.0;
    Eigen::Vector3d e1 = (points[i1] - points[i0]).head<3>();
    for (int i = 0; i < n; ++i) {
        const double d = e1.cross((points[i] - points[i0]).head<3>().eval()).norm();
        if (d > best) { best = d; i2 = i; }
    }
    if (best <= eps * e1.norm()) throw std::invalid_argument("body is not full-dimensional");
    Tri base = make_tri(points, i0, i1, i2);
    int i3 = -1;
    best = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = base.n.dot(points[i]) - base.off;
        if (std::abs(d) > std::abs(best)) { best = d; i3 = i; }
    }
    if (std::abs(best) <= eps * base.n.norm())
        throw std::invalid_argument("body is not full-dimensional");

    std::vector<Tri> tris;
    if (best > 0.0) {
        // flip base so i3 is below
        tris.push_back(make_tri(points, i0, i2, i1));
    } else {
        tris.push_back(make_tri(points, i0, i1, i2));
    }
    const std::array<int, 3> b0 = tris[0].v;  // copy: push_back below reallocates
    tris.push_back(make_tri(points, b0[0], b0[2], i3));
    tris.push_back(make_tri(points, b0[2], b0[1], i3));
    tris.push_back(make_tri(points, b0[1], b0[0], i3));

    for (int p = 0; p < n; ++p) {
        std::vector<int> visible;
        for (int f = 0; f < static_cast<int>(tris.size()); ++f) {
            if (!tris[f].alive) continue;
            if (tris[f].n.dot(points[p]) - tris[f].off > eps * tris[f].n.norm())
                visible.push_back(f);
        }
        if (visible.empty()) continue;

        // horizon = directed edges of visible faces whose reverse is not visible
        std::map<std::pair<int, int>, int> edge_count;
        for (int f : visible) {
            const auto& v = tris[f].v;
            for (int e = 0; e < 3; ++e) {
                const int a = v[e], b = v[(e + 1) % 3];
                edge_count[{std::min(a, b), std::max(a, b)}]++;
            }
        }
        std::vector<std::pair<int, int>> horizon;
        for (int f : visible) {
            const auto& v = tris[f].v;
            for (int e = 0; e < 3; ++e) {
                const int a = v[e], b = v[(e + 1) % 3];
                if (edge_count[{std::min(a, b), std::max(a, b)}] == 1)
                    horizon.emplace_back(a, b);
            }
        }
        for (int f : visible) tris[f].alive = false;
        // degenerate slivers are kept; dropping them would open the hull
        for (const auto& [a, b] : horizon) tris.push_back(make_tri(points, a, b, p));
    }

    std::vector<std::array<int, 3>> out;
    for (const Tri& t : tris)
        if (t.alive) out.push_back(t.v);
    if (out.size() < 4) throw std::invalid_argument("body is not full-dimensional");
    return out;
}

FaceLoops faces_to_loops(const std::vector<Vec>& vertices,
                         const std::vector<std::array<int, 3>>& faces) {
    FaceLoops loops;
    loops.reserve(faces.size());
    for (const auto& f : faces)
        loops.push_back({vertices[f[0]], vertices[f[1]], vertices[f[2]]});
    return loops;
}

FaceLoops clip_loops(const FaceLoops& faces, const Vec& n, double off, double scale) {
    FaceLoops out;
    std::vector<Vec> cap;
    const double tol = 1e-9 * scale;
    for (const auto& face : faces) {
        // a supporting plane must not spawn a cap that duplicates the face
        bool cut = false;
        for (const Vec& p : face) cut = cut || n.dot(p) - off > tol;
        std::vector<Vec> kept = clip_loop(face, n, off);
        if (kept.size() < 3) continue;
        if (cut)
            for (const Vec& p : kept)
                if (std::abs(n.dot(p) - off) <= tol) cap.push_back(p);
        out.push_back(std::move(kept));
    }
    // dedupe and order the cap loop counterclockwise around n
    if (cap.size() >= 3) {
        std::vector<Vec> uniq;
        for (const Vec& p : cap) {
            bool dup = false;
            for (const Vec& q : uniq)
                if ((p - q).norm() <= 1e-9 * scale) { dup = true; break; }
            if (!dup) uniq.push_back(p);
        }
        if (uniq.size() >= 3) {
            Vec c = Vec::Zero(3);
            for (const Vec& p : uniq) c += p;
            c /= static_cast<double>(uniq.size());
            Eigen::Vector3d nz = n.head<3>().normalized();
            Eigen::Vector3d ax = nz.unitOrthogonal();
            Eigen::Vector3d ay = nz.cross(ax);
            std::sort(uniq.begin(), uniq.end(), [&](const Vec& p, const Vec& q) {
                Eigen::Vector3d dp = (p - c).head<3>(), dq = (q - c).head<3>();
                return std::atan2(dp.dot(ay), dp.dot(ax)) < std::atan2(dq.dot(ay), dq.dot(ax));
            });
            out.push_back(std::move(uniq));
        }
    }
    return out;
}

double loops_volume(const FaceLoops& faces) {
    double v6 = 0.0;
    for (const auto& face : faces) {
        const Eigen::Vector3d p0 = face[0].head<3>();
        for (size_t i = 1; i + 1 < face.size(); ++i) {
            const Eigen::Vector3d p1 = face[i].head<3>();
            const Eigen::Vector3d p2 = face[i + 1].head<3>();
            v6 += p0.dot(p1.cross(p2));
        }
    }
    return v6 / 6.0;
}

Vec loops_centroid(const FaceLoops& faces) {
    double v6 = 0.0;
    Eigen::Vector3d m = Eigen::Vector3d::Zero();
    for (const auto& face : faces) {
        const Eigen::Vector3d p0 = face[0].head<3>();
        for (size_t i = 1; i + 1 < face.size(); ++i) {
            const Eigen::Vector3d p1 = face[i].head<3>();
            const Eigen::Vector3d p2 = face[i + 1].head<3>();
            const double w = p0.dot(p1.cross(p2));
            v6 += w;
            m += w * (p0 + p1 + p2) / 4.0;
        }
    }
    if (std::abs(v6) < 1e-300) throw std::runtime_error("degenerate polyhedron centroid");
    Eigen::Vector3d c = m / v6;
    return vec3(c[0], c[1], c[2]);
}

std::vector<Vec> loops_points(const FaceLoops& faces, double merge_tol) {
    std::vector<Vec> out;
    for (const auto& face : faces) {
        for (const Vec& p : face) {
            bool dup = false;
            for (const Vec& q : out)
                if ((p - q).norm() <= merge_tol) { dup = true; break; }
            if (!dup) out.push_back(p);
        }
    }
    return out;
}

}  // namespace covario::detail
