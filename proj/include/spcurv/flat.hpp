#pragma once

#include <optional>

#include "spcurv/metric.hpp"
#include "spcurv/orbit.hpp"
#include "spcurv/submersion.hpp"

namespace spcurv {

// A certified zero-curvature plane at the point named by `point`:
// X lies in K, orthogonal to U; Y lies in P; the two commute; and the
// P-parts of their Ad_{p^{-1}} images are linearly dependent. Residuals
// quantify each condition; `lift_numerator` is the curvature numerator of
// the unit-normalized horizontal lift of span{X, Y}.
struct WitnessResiduals {
    double structural{0.0};        // max deviation from the X/Y block forms
    double condition_b_norm{0.0};  // |[X, Y]|_0
    double condition_c_gram{0.0};  // Gram determinant of the projected images
    double lift_numerator{0.0};
};

struct FlatWitness {
    FundamentalPoint point;
    AlgVec X, Y;
    WitnessResiduals residuals;
    bool valid{false};

    static constexpr double kStructuralTol = 1e-12;
    static constexpr double kConditionBTol = 1e-10;
    static constexpr double kConditionCTol = 1e-10;
    static constexpr double kLiftTol = 1e-9;
};

// Assemble a witness from a candidate pair, computing all residuals and the
// validity verdict for the given metric.
FlatWitness make_flat_witness(const SpaceConfig& cfg, const FundamentalPoint& pt,
                              const AlgVec& x, const AlgVec& y,
                              const MetricOperator& op);

// Non-negative score that vanishes exactly on certified pairs:
// |[X,Y]|_0^2 + GramDet((Ad_{p^{-1}}X)_P, (Ad_{p^{-1}}Y)_P).
// Requires X in K orthogonal to U, Y in P, both unit length.
double condition_objective(const SpaceConfig& cfg, const FundamentalPoint& pt,
                           const AlgVec& x, const AlgVec& y);

// ---- The n = 2 flat locus -------------------------------------------------

// True when the point carries a zero-curvature plane: either the interior
// relation tan^2(alpha) (cos^2 t - sin^2 t) = sin^2 t holds (with
// cos^2 t > sin^2 t), or the point lies on one of the boundary flat sets
// alpha = pi/2, theta = pi/2, or theta = alpha = 0.
bool m2_flat_locus(const FundamentalPoint& pt);

// Closed-form witness on the n = 2 locus. On the interior branch b is the
// explicit multiple of c = i forced by the dependency equation; on the
// boundary branches the projected image of X vanishes identically, so any
// unit imaginary b works. Throws off the locus.
FlatWitness m2_witness(const SpaceConfig& cfg, const FundamentalPoint& pt,
                       const MetricOperator& op);

// Distance from the point to the n = 2 flat set (interior curve plus
// boundary flat sets) in the (theta, alpha) plane, and the closest point.
double m2_locus_distance(const FundamentalPoint& pt);
FundamentalPoint m2_locus_projection(const FundamentalPoint& pt);

// Alpha on the interior locus curve at the given theta (empty unless
// 0 < theta < pi/4).
std::optional<double> m2_curve_alpha(double theta);

// ---- The n >= 3 family ----------------------------------------------------

struct MuEta {
    double mu{0.0};
    double eta{0.0};
    bool defined{false};
};

// mu = sqrt(tan^2 t csc^2 a - 1); eta mu = sin t (2 cos^2 t - 1) /
// (cos a sin^2 a cos^3 t). Defined on the open region where mu > 0 and the
// denominator is nonzero.
MuEta mu_eta(const FundamentalPoint& pt);

bool in_region_z(const FundamentalPoint& pt);

// The explicit family of flat planes at points of region Z for n >= 3,
// parameterized by a unit imaginary quaternion b. X and Y occupy the
// bottom-right 4x4 block. Throws outside Z or for invalid b.
FlatWitness family_n_witness(const SpaceConfig& cfg, const FundamentalPoint& pt,
                             const Quaternion& b, const MetricOperator& op);

// ---- Numerical search -----------------------------------------------------

struct SearchResult {
    // Set exactly when best_objective reached the gate.
    std::optional<FlatWitness> witness;
    // Residual record of the best pair found, whether or not it certifies.
    std::optional<FlatWitness> best_candidate;
    double best_objective{0.0};
};

// Seeded multi-start projected-gradient minimization of condition_objective
// over unit X in K n U^perp and unit Y in P. Returns a witness when the
// best objective reaches `objective_gate`; the best value found is always
// reported.
SearchResult find_flat_plane(const SpaceConfig& cfg, const FundamentalPoint& pt,
                             const MetricOperator& op, std::uint64_t seed,
                             int restarts, double objective_gate = 1e-10);

// Minimum of |[X, Y]|_0^2 over inner0-orthonormal pairs in the complement
// of sp(n-1) inside sp(n). Positive values certify that the induced metric
// on the corresponding sphere has no flat planes at the origin.
double sphere_min_bracket(int n, std::uint64_t seed, int restarts);

}  // namespace spcurv
