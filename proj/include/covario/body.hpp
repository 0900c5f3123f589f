#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace covario {

// Column vector in R^2 or R^3. Dimension is fixed at runtime, storage stays
// on the stack (max size 3).
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 3, 1>;

inline Vec vec2(double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
}

inline Vec vec3(double x, double y, double z) {
    Vec v(3);
    v << x, y, z;
    return v;
}

// Halfspace {x : <normal, x> <= offset} with unit normal.
struct Halfspace {
    Vec normal;
    double offset = 0.0;
};

struct Smoothness {
    enum Kind { Polytope, StrictlyConvexApprox };
    Kind kind = Polytope;
    int approx_order = 0;  // vertex count of the smooth approximation

    static Smoothness polytope() { return {Polytope, 0}; }
    static Smoothness strictly_convex(int k) { return {StrictlyConvexApprox, k}; }
    bool operator==(const Smoothness&) const = default;
};

// Full-dimensional compact convex polytope in R^2 or R^3, kept in both
// vertex and halfspace form. 2D vertices are in counterclockwise order;
// 3D bodies additionally carry a triangulated boundary.
class ConvexBody {
public:
    // Empty placeholder; only bodies produced by the factories satisfy the
    // class invariants.
    ConvexBody() = default;

    // Builds the body as the convex hull of `points`. Throws if the hull is
    // not full-dimensional.
    static ConvexBody from_points(int dim, const std::vector<Vec>& points,
                                  Smoothness smoothness = Smoothness::polytope());

    // Builds the body from a bounded intersection of halfspaces.
    static ConvexBody from_halfspaces(int dim, const std::vector<Halfspace>& halfspaces,
                                      Smoothness smoothness = Smoothness::polytope());

    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
    const std::vector<std::array<int, 3>>& faces() const { return faces_; }  // 3D only
    const Smoothness& smoothness() const { return smoothness_; }

    double diameter() const { return diameter_; }
    bool contains(const Vec& p, double tol = 0.0) const;

private:
    friend ConvexBody translate(const ConvexBody&, const Vec&);
    friend ConvexBody dilate(const ConvexBody&, double, const Vec&);

    int dim_ = 0;
    std::vector<Vec> vertices_;
    std::vector<Halfspace> halfspaces_;
    std::vector<std::array<int, 3>> faces_;
    Smoothness smoothness_;
    double diameter_ = 0.0;
};

// Axis-aligned box used to truncate the unbounded cylinder/cone extensions.
struct TruncationBox {
    Vec center;
    Vec half_widths;

    ConvexBody to_body() const;
    // Margin invariant: the box must contain `bodies` with clearance at
    // least 2 * (sum of body diameters + probe_length).
    bool satisfies_margin(const std::vector<const ConvexBody*>& bodies,
                          double probe_length) const;
};

inline TruncationBox make_truncation_box(int dim, double half_width) {
    TruncationBox box;
    box.center = Vec::Zero(dim);
    box.half_widths = Vec::Constant(dim, half_width);
    return box;
}

enum class SetKind { Body, Empty, LowerDimensional };

// Result of intersecting two bodies: a full-dimensional body, the empty
// set, or a non-empty set of zero volume.
struct Intersection {
    SetKind kind = SetKind::Empty;
    std::optional<ConvexBody> body;
    double volume = 0.0;

    bool is_body() const { return kind == SetKind::Body; }
};

struct HomothetyCheckResult {
    bool is_homothetic = false;
    double scale = 0.0;
    Vec shift;
    double hausdorff_residual = 0.0;
};

// ---- geometry-core operations ----

ConvexBody translate(const ConvexBody& body, const Vec& x);
ConvexBody reflect(const ConvexBody& body);
ConvexBody dilate(const ConvexBody& body, double t, const Vec& center);
ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);
Intersection intersect(const ConvexBody& a, const ConvexBody& b);
double volume(const ConvexBody& body);
Vec centroid(const ConvexBody& body);
double support_function(const ConvexBody& body, const Vec& u);

// Hausdorff distance between two convex bodies (exact for polytopes).
double hausdorff_distance(const ConvexBody& a, const ConvexBody& b);

// Distance from a point to the body (0 inside).
double distance_to(const ConvexBody& body, const Vec& p);

// Tests whether b = scale * a + shift with the candidate forced by volumes
// and centroids; tol bounds the Hausdorff residual relative to diam(b).
HomothetyCheckResult is_homothetic(const ConvexBody& a, const ConvexBody& b,
                                   double tol = 1e-7);

// Truncated cylinder {x + t v : x in body, t real} ∩ box.
ConvexBody cylinder_extend(const ConvexBody& body, const Vec& v, const TruncationBox& box);

// Truncated cone {apex + t (x - apex) : x in body, t >= 0} ∩ box.
ConvexBody cone_extend(const ConvexBody& body, const Vec& apex, const TruncationBox& box);

// ---- generators ----

ConvexBody make_box(const Vec& lo, const Vec& hi);
ConvexBody make_regular_polygon(int k, double radius, const Vec& center);
ConvexBody make_disk_approx(int k, double radius, const Vec& center);
ConvexBody make_simplex(int dim, double scale = 1.0);

}  // namespace covario
