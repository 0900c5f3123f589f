#pragma once

#include "covario/covariogram.hpp"

namespace covario {

enum class ConcavityClass {
    StrictlyConcave,
    Constant,
    AffineNonConstant,
    Mixed,
    OutsideSupport,
};

const char* to_string(ConcavityClass c);

struct ConcavityReport {
    ConcavityClass classification = ConcavityClass::OutsideSupport;
    double slope_beta = 0.0;  // least-squares slope of g^{1/n} per unit t
    double max_second_difference = 0.0;
    double min_second_difference = 0.0;
    double strictness_margin = 0.0;  // min over interior samples of -d2
    double tol = 0.0;                // threshold actually applied
    int in_support_samples = 0;
};

// Central second differences of g^{1/n} at the in-support samples decide the
// class. tol < 0 selects the default 1e-7 * g_root at the segment midpoint.
ConcavityReport classify_segment(const SegmentProfile& profile, double tol = -1.0);

// (lambda, v) with K ∩ (L + a + t w) = (1 + t lambda) S_0 + t v along the
// probe; reference is S_0 = K ∩ (L + a).
struct HomothetyWitness {
    double lambda = 0.0;
    Vec v;
    ConvexBody reference;
    double t_plus = 0.0;        // sample parameter used for the endpoints
    double max_residual = 0.0;  // worst relative Hausdorff residual over retained t
};

struct WitnessValidationError : std::runtime_error {
    double max_residual;
    explicit WitnessValidationError(double r)
        : std::runtime_error("homothety witness validation failed, max residual " +
                             std::to_string(r)),
          max_residual(r) {}
};

HomothetyWitness recover_witness(const SegmentProfile& profile, double tol = 1e-6);

struct ReconstructionReport {
    enum Kind { Cylinder, Cone };
    Kind kind = Cylinder;
    std::vector<std::pair<double, double>> per_t_symdiff;
    double max_symdiff = 0.0;
    ConvexBody K_ext;
    ConvexBody L_ext;
};

// Theorem-2 style check: rebuild K', L' as truncated cylinders and compare
// K ∩ (L + a + t w) with K' ∩ (L' + t w) at every probe sample.
ReconstructionReport verify_constant_case(const ConvexBody& K, const ConvexBody& L,
                                          const SegmentProbe& probe,
                                          const HomothetyWitness& witness,
                                          const TruncationBox& box);

// Theorem-3 style check with truncated cones K'', L''. Also checks the
// dilation form (1 + t lambda)(K'' ∩ L'') + t v.
ReconstructionReport verify_affine_case(const ConvexBody& K, const ConvexBody& L,
                                        const SegmentProbe& probe,
                                        const HomothetyWitness& witness,
                                        const TruncationBox& box);

enum class BoundaryRelation { BoundariesMeet, KContainsL, LContainsK };

BoundaryRelation boundary_dichotomy(const ConvexBody& K, const ConvexBody& L,
                                    const Vec& x, double tol);

// |(A + B)/2|^{1/n} - (|A|^{1/n} + |B|^{1/n}) / 2, nonnegative by
// Brunn-Minkowski and zero exactly for homothetic bodies.
double bm_defect(const ConvexBody& A, const ConvexBody& B);

}  // namespace covario
