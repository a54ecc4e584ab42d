#pragma once

#include <optional>

#include "spcurv/lie_algebra.hpp"

namespace spcurv {

// Left-invariant metric <X, Y>_1 = <phi(X), Y>_0 obtained by shrinking the
// bi-invariant metric along K, with phi(X) = X_p + t/(t+1) X_k. The
// bi-invariant metric itself (phi = id) is available as a separate mode and
// serves as the curvature oracle.
class MetricOperator {
public:
    static MetricOperator cheeger(const SpaceConfig& cfg, double t);
    static MetricOperator bi_invariant(const SpaceConfig& cfg);

    const SpaceConfig& config() const { return *cfg_; }
    bool is_bi_invariant() const { return bi_invariant_; }
    double t() const { return t_; }

    // Eigenvalue of phi on the K block (1 on P).
    double kappa() const { return bi_invariant_ ? 1.0 : t_ / (t_ + 1.0); }

    AlgVec phi(const AlgVec& x) const;
    AlgVec phi_inv(const AlgVec& x) const;

    double inner1(const AlgVec& x, const AlgVec& y) const;

private:
    MetricOperator(const SpaceConfig& cfg, double t, bool bi)
        : cfg_{&cfg}, t_{t}, bi_invariant_{bi} {}

    const SpaceConfig* cfg_;
    double t_;
    bool bi_invariant_;
};

// Levi-Civita connection of the left-invariant metric, evaluated on
// left-invariant fields: nabla_X Y = [X,Y]/2 + U(X,Y), where U solves
// 2<U(X,Y), Z>_1 = <[Z,X], Y>_1 + <X, [Z,Y]>_1 against the orthonormal
// basis of the algebra (the <.,.>_1 Gram matrix is diagonal there).
AlgVec connection(const AlgVec& x, const AlgVec& y, const MetricOperator& op);

struct PlaneCurvature {
    double numerator{0.0};  // <R(X,Y)Y, X>_1
    double gram{0.0};       // |X|^2 |Y|^2 - <X,Y>^2 in <.,.>_1
    std::optional<double> sec;  // numerator/gram when gram > kGramTol

    static constexpr double kGramTol = 1e-12;
};

PlaneCurvature plane_curvature(const AlgVec& x, const AlgVec& y,
                               const MetricOperator& op);

// Tangent vector to G x G at a point, left-translated to the identity.
struct TangentPair {
    AlgVec first, second;
};

// Curvature of a plane in the product metric <.,.>_1 + <.,.>_1 on G x G:
// the numerator splits as the sum of the factor numerators.
PlaneCurvature lift_plane_curvature(const TangentPair& a, const TangentPair& b,
                                    const MetricOperator& op);

}  // namespace spcurv
