#pragma once

#include "covario/body.hpp"

#include <random>

namespace covario::testing {

inline ConvexBody random_polygon(std::mt19937_64& rng, int points, double radius) {
    std::uniform_real_distribution<double> unif(-radius, radius);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Vec> pts;
        for (int i = 0; i < points; ++i) pts.push_back(vec2(unif(rng), unif(rng)));
        try {
            return ConvexBody::from_points(2, pts);
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::runtime_error("random polygon generation failed");
}

// independent area oracle (shoelace over the stored CCW ring)
inline double shoelace(const ConvexBody& body) {
    const auto& v = body.vertices();
    double s = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
        const Vec& a = v[i];
        const Vec& b = v[(i + 1) % v.size()];
        s += a[0] * b[1] - b[0] * a[1];
    }
    return 0.5 * s;
}

}  // namespace covario::testing
