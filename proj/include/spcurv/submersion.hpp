#pragma once

#include "spcurv/metric.hpp"

namespace spcurv {

// The acting group embeds its Lie algebra into g + g as {0} + u: the first
// factor is acted on by K through the quotient construction and the second
// carries U. rho_{g1}(U1, U2) = Ad_{g1} U1 - U2 measures the failure of a
// pair to be vertical-trivial; for this family U1 = 0 always.
AlgVec rho(const SpaceConfig& cfg, const GroupElem& g1, const AlgVec& u1,
           const AlgVec& u2);

// Matrix of rho_{g1} over the orthonormal basis of u (columns are real
// coordinates of the images). Its smallest singular value being positive is
// what makes the horizontal space complementary.
Eigen::MatrixXd rho_matrix(const SpaceConfig& cfg, const GroupElem& g1);

// Linearly independent spanning list of the vertical space of the quotient
// submersion at (g1, e), left-translated to the identity:
// (Ad_{g1^{-1}} X - U1, X - U2) over X in g and (U1, U2) in {0} + u.
std::vector<TangentPair> vertical_basis(const SpaceConfig& cfg, const GroupElem& g1);

// Basis of the horizontal space at (g1, e) for the Cheeger metric with
// parameter t: (phi^{-1}(-Ad_{g1^{-1}} X), phi^{-1}(X)) over X orthogonal
// to rho_{g1}(u). Length is dim g - dim u.
std::vector<TangentPair> horizontal_basis(const SpaceConfig& cfg,
                                          const GroupElem& g1, double t);

}  // namespace spcurv
