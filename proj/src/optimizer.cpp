#include "covario/optimizer.hpp"

#include "covario/concavity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace covario {

const char* to_string(MaxCertificate c) {
    switch (c) {
        case MaxCertificate::UniqueByStrictConcavity: return "UniqueByStrictConcavity";
        case MaxCertificate::PlateauSuspected: return "PlateauSuspected";
        case MaxCertificate::NumericOnly: return "NumericOnly";
    }
    return "?";
}

namespace {

struct Bounds {
    Vec lo, hi;
};

Bounds bounding_box(const ConvexBody& body) {
    Bounds b{body.vertices().front(), body.vertices().front()};
    for (const Vec& v : body.vertices()) {
        b.lo = b.lo.cwiseMin(v);
        b.hi = b.hi.cwiseMax(v);
    }
    return b;
}

// golden-section maximization of f over [lo, hi]
template <typename F>
double golden_max(F&& f, double lo, double hi, double xtol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

Vec random_unit(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec u(dim);
    do {
        for (int d = 0; d < dim; ++d) u[d] = gauss(rng);
    } while (u.norm() < 1e-6);
    return u / u.norm();
}

Vec local_maximize(const ConvexBody& K, const ConvexBody& L, Vec x, const Bounds& box,
                   double pos_tol, std::mt19937_64& rng) {
    const int dim = static_cast<int>(x.size());
    auto g = [&](const Vec& p) { return eval(K, L, p); };

    for (int sweep = 0; sweep < 200; ++sweep) {
        const Vec before = x;
        std::vector<Vec> dirs;
        for (int d = 0; d < dim; ++d) {
            Vec e = Vec::Zero(dim);
            e[d] = 1.0;
            dirs.push_back(e);
        }
        dirs.push_back(random_unit(rng, dim));  // breaks coordinate-aligned ridges
        for (const Vec& u : dirs) {
            // segment of the line x + s u inside the bounding box
            double s_lo = -std::numeric_limits<double>::infinity();
            double s_hi = std::numeric_limits<double>::infinity();
            for (int d = 0; d < dim; ++d) {
                if (std::abs(u[d]) < 1e-14) continue;
                const double a = (box.lo[d] - x[d]) / u[d];
                const double b = (box.hi[d] - x[d]) / u[d];
                s_lo = std::max(s_lo, std::min(a, b));
                s_hi = std::min(s_hi, std::max(a, b));
            }
            if (!(s_hi > s_lo)) continue;
            const double s =
                golden_max([&](double t) { return g(x + t * u); }, s_lo, s_hi, 0.25 * pos_tol);
            x += s * u;
        }
        if ((x - before).norm() < pos_tol) break;
    }
    return x;
}

}  // namespace

MaxResult maximize(const ConvexBody& K, const ConvexBody& L, int restarts, double pos_tol,
                   std::uint64_t seed) {
    if (K.dim() != L.dim()) throw std::invalid_argument("dimension mismatch");
    if (restarts < 1) throw std::invalid_argument("restarts must be positive");

    const ConvexBody sumset = support_sumset(K, L);
    const Bounds box = bounding_box(sumset);
    const double diam = sumset.diameter();
    if (pos_tol <= 0.0) pos_tol = 1e-7 * diam;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const Vec center = centroid(sumset);

    std::vector<Vec> argmaxes;
    std::vector<double> values;
    for (int r = 0; r < restarts; ++r) {
        Vec x0 = center;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            Vec cand(K.dim());
            for (int d = 0; d < K.dim(); ++d)
                cand[d] = box.lo[d] + unif(rng) * (box.hi[d] - box.lo[d]);
            if (eval(K, L, cand) > 0.0) {
                x0 = cand;
                break;
            }
        }
        const Vec xr = local_maximize(K, L, x0, box, pos_tol, rng);
        argmaxes.push_back(xr);
        values.push_back(eval(K, L, xr));
    }

    MaxResult res;
    int best = 0;
    for (int r = 1; r < restarts; ++r)
        if (values[r] > values[best]) best = r;
    res.argmax = argmaxes[best];
    res.value = values[best];
    for (size_t i = 0; i < argmaxes.size(); ++i)
        for (size_t j = i + 1; j < argmaxes.size(); ++j)
            res.spread = std::max(res.spread, (argmaxes[i] - argmaxes[j]).norm());
    for (const Vec& x : argmaxes)
        if ((x - res.argmax).norm() <= pos_tol) ++res.restarts_agreed;

    // plateau probe: a concave function with a flat piece through its maximum
    // shows up as a Constant segment classification
    bool plateau = false;
    const double h = 0.02 * diam;
    for (int k = 0; k < 6 && !plateau; ++k) {
        SegmentProbe probe{res.argmax, h * random_unit(rng, K.dim()), 9};
        try {
            const SegmentProfile prof = eval_segment(K, L, probe, /*keep_bodies=*/false);
            if (classify_segment(prof).classification == ConcavityClass::Constant) plateau = true;
        } catch (const std::invalid_argument&) {
            // probe left the support; no plateau evidence
        }
    }

    const double vtol = 1e-6 * std::max(res.value, 1e-300);
    const bool values_agree =
        *std::min_element(values.begin(), values.end()) >= res.value - vtol;
    if (plateau || (res.spread > pos_tol && values_agree))
        res.certificate = MaxCertificate::PlateauSuspected;
    else if (res.spread <= pos_tol)
        res.certificate = MaxCertificate::UniqueByStrictConcavity;
    else
        res.certificate = MaxCertificate::NumericOnly;
    return res;
}

LevelSetReport level_set_probe(const ConvexBody& K, const ConvexBody& L, double h, int chords,
                               std::uint64_t seed) {
    if (chords < 1) throw std::invalid_argument("chords must be positive");
    const MaxResult top = maximize(K, L, 8, -1.0, seed);
    if (!(h > 0.0) || h > top.value) throw std::invalid_argument("h out of range");

    const double diam = support_sumset(K, L).diameter();
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);

    auto boundary_point = [&](const Vec& u) {
        // g decreases along rays from the argmax; bracket then bisect g = h
        double s_lo = 0.0, s_hi = 2.0 * diam;
        for (int i = 0; i < 100; ++i) {
            const double mid = 0.5 * (s_lo + s_hi);
            if (eval(K, L, top.argmax + mid * u) >= h)
                s_lo = mid;
            else
                s_hi = mid;
        }
        return (top.argmax + s_lo * u).eval();
    };

    LevelSetReport rep;
    rep.h = h;
    rep.chords = chords;
    rep.max_value = top.value;
    rep.argmax = top.argmax;
    rep.min_midpoint_excess = std::numeric_limits<double>::infinity();

    for (int c = 0; c < chords; ++c) {
        Vec u1 = random_unit(rng, K.dim());
        Vec u2 = random_unit(rng, K.dim());
        while (std::abs(u1.dot(u2)) > std::cos(0.2)) u2 = random_unit(rng, K.dim());
        const Vec p1 = boundary_point(u1);
        const Vec p2 = boundary_point(u2);
        const double excess = eval(K, L, 0.5 * (p1 + p2)) - h;
        rep.min_midpoint_excess = std::min(rep.min_midpoint_excess, excess);
    }
    rep.plateau_detected = rep.min_midpoint_excess <= 1e-9 * std::max(top.value, 1.0);
    return rep;
}

}  // namespace covario
