#include "spcurv/metric.hpp"

#include <stdexcept>

namespace spcurv {

MetricOperator MetricOperator::cheeger(const SpaceConfig& cfg, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("MetricOperator: t must be positive");
    return MetricOperator(cfg, t, false);
}

MetricOperator MetricOperator::bi_invariant(const SpaceConfig& cfg) {
    return MetricOperator(cfg, 0.0, true);
}

AlgVec MetricOperator::phi(const AlgVec& x) const {
    if (bi_invariant_) return x;
    return project(x, Part::P, *cfg_) + kappa() * project(x, Part::K, *cfg_);
}

AlgVec MetricOperator::phi_inv(const AlgVec& x) const {
    if (bi_invariant_) return x;
    return project(x, Part::P, *cfg_) + (1.0 / kappa()) * project(x, Part::K, *cfg_);
}

double MetricOperator::inner1(const AlgVec& x, const AlgVec& y) const {
    if (bi_invariant_) return inner0(x, y);
    return inner0(phi(x), y);
}

AlgVec connection(const AlgVec& x, const AlgVec& y, const MetricOperator& op) {
    AlgVec nabla = 0.5 * bracket(x, y);
    if (op.is_bi_invariant()) return nabla;

    const SpaceConfig& cfg = op.config();
    AlgVec u = AlgVec::zero(cfg.m());
    const double kappa = op.kappa();
    // The basis below is inner0-orthonormal and adapted to the K/P split,
    // so <e, e>_1 is kappa on K vectors and 1 on P vectors.
    for (const AlgVec& e : cfg.basis(Part::K)) {
        const double rhs =
            0.5 * (op.inner1(bracket(e, x), y) + op.inner1(x, bracket(e, y)));
        u += (rhs / kappa) * e;
    }
    for (const AlgVec& e : cfg.basis(Part::P)) {
        const double rhs =
            0.5 * (op.inner1(bracket(e, x), y) + op.inner1(x, bracket(e, y)));
        u += rhs * e;
    }
    return nabla + u;
}

PlaneCurvature plane_curvature(const AlgVec& x, const AlgVec& y,
                               const MetricOperator& op) {
    // R(X,Y)Y = nabla_X nabla_Y Y - nabla_Y nabla_X Y - nabla_[X,Y] Y.
    const AlgVec r = connection(x, connection(y, y, op), op) -
                     connection(y, connection(x, y, op), op) -
                     connection(bracket(x, y), y, op);
    PlaneCurvature pc;
    pc.numerator = op.inner1(r, x);
    const double xx = op.inner1(x, x);
    const double yy = op.inner1(y, y);
    const double xy = op.inner1(x, y);
    pc.gram = xx * yy - xy * xy;
    if (pc.gram > PlaneCurvature::kGramTol) pc.sec = pc.numerator / pc.gram;
    return pc;
}

PlaneCurvature lift_plane_curvature(const TangentPair& a, const TangentPair& b,
                                    const MetricOperator& op) {
    PlaneCurvature pc;
    pc.numerator = plane_curvature(a.first, b.first, op).numerator +
                   plane_curvature(a.second, b.second, op).numerator;
    const double aa = op.inner1(a.first, a.first) + op.inner1(a.second, a.second);
    const double bb = op.inner1(b.first, b.first) + op.inner1(b.second, b.second);
    const double ab = op.inner1(a.first, b.first) + op.inner1(a.second, b.second);
    pc.gram = aa * bb - ab * ab;
    if (pc.gram > PlaneCurvature::kGramTol) pc.sec = pc.numerator / pc.gram;
    return pc;
}

}  // namespace spcurv
