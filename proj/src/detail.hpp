#pragma once

// Internal geometry kernels shared by the library sources. Not installed.

#include "covario/body.hpp"

#include <array>
#include <vector>

namespace covario::detail {

inline double cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

// Signed area of a 2D loop (positive when counterclockwise).
double loop_area(const std::vector<Vec>& loop);
Vec loop_centroid(const std::vector<Vec>& loop);

// Sutherland-Hodgman step: keep the part of `loop` with <n, x> <= off.
std::vector<Vec> clip_loop(const std::vector<Vec>& loop, const Vec& n, double off);

// Counterclockwise convex hull with strictly convex turns (collinear points
// removed). Throws if the hull is degenerate.
std::vector<Vec> hull_2d(std::vector<Vec> points, double scale);

// Incremental 3D convex hull; returns outward-oriented triangles as indices
// into `points`. Throws if the points are not full-dimensional.
std::vector<std::array<int, 3>> hull_3d(const std::vector<Vec>& points, double scale);

// A convex polyhedron held as outward-oriented face loops.
using FaceLoops = std::vector<std::vector<Vec>>;

FaceLoops faces_to_loops(const std::vector<Vec>& vertices,
                         const std::vector<std::array<int, 3>>& faces);

// Clips every face by {<n, x> <= off} and closes the cut with a cap face.
FaceLoops clip_loops(const FaceLoops& faces, const Vec& n, double off, double scale);

double loops_volume(const FaceLoops& faces);
Vec loops_centroid(const FaceLoops& faces);

std::vector<Vec> loops_points(const FaceLoops& faces, double merge_tol);

double points_scale(const std::vector<Vec>& points);

}  // namespace covario::detail
