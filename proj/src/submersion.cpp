#include "spcurv/submersion.hpp"

#include <Eigen/SVD>
#include <stdexcept>

namespace spcurv {

namespace {

void check_in_u(const SpaceConfig& cfg, const AlgVec& u1, const AlgVec& u2) {
    const double scale1 = std::max(1.0, u1.norm());
    const double scale2 = std::max(1.0, u2.norm());
    if (u1.norm() > 1e-12 * scale1)
        throw std::invalid_argument("rho: first component must vanish for this family");
    if ((u2 - project(u2, Part::U, cfg)).norm() > 1e-12 * scale2)
        throw std::invalid_argument("rho: second component is not in u");
}

}  // namespace

AlgVec rho(const SpaceConfig& cfg, const GroupElem& g1, const AlgVec& u1,
           const AlgVec& u2) {
    check_in_u(cfg, u1, u2);
    return adjoint_action(g1, u1) - u2;
}

Eigen::MatrixXd rho_matrix(const SpaceConfig& cfg, const GroupElem& g1) {
    const auto& u_basis = cfg.basis(Part::U);
    Eigen::MatrixXd mat(cfg.dim_g(), static_cast<int>(u_basis.size()));
    for (int c = 0; c < static_cast<int>(u_basis.size()); ++c) {
        const AlgVec image = rho(cfg, g1, AlgVec::zero(cfg.m()), u_basis[c]);
        mat.col(c) = basis_coords(cfg.basis_g(), image);
    }
    return mat;
}

std::vector<TangentPair> vertical_basis(const SpaceConfig& cfg, const GroupElem& g1) {
    std::vector<TangentPair> out;
    out.reserve(static_cast<size_t>(cfg.dim_g() + cfg.dim_u()));
    const GroupElem g1_inv = g1.inverse();
    for (const AlgVec& x : cfg.basis_g())
        out.push_back({adjoint_action(g1_inv, x), x});
    for (const AlgVec& u : cfg.basis(Part::U))
        out.push_back({AlgVec::zero(cfg.m()), -u});
    return out;
}

std::vector<TangentPair> horizontal_basis(const SpaceConfig& cfg,
                                          const GroupElem& g1, double t) {
    const MetricOperator op = MetricOperator::cheeger(cfg, t);

    // Orthonormal basis of rho(u)^perp inside g, from the full SVD of the
    // rho matrix written in the orthonormal algebra basis.
    const Eigen::MatrixXd rm = rho_matrix(cfg, g1);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(rm, Eigen::ComputeFullU);
    const double top = svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
    const double tol = 1e-10 * std::max(1.0, top);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > tol) ++rank;

    const GroupElem g1_inv = g1.inverse();
    std::vector<TangentPair> out;
    out.reserve(static_cast<size_t>(cfg.dim_g() - rank));
    for (int c = rank; c < svd.matrixU().cols(); ++c) {
        const AlgVec x = from_basis_coords(cfg.basis_g(), svd.matrixU().col(c));
        out.push_back({op.phi_inv(-adjoint_action(g1_inv, x)), op.phi_inv(x)});
    }
    return out;
}

}  // namespace spcurv
