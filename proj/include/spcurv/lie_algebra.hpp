#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spcurv/qmatrix.hpp"

namespace spcurv {

// Element of sp(m): an m x m anti-Hermitian quaternionic matrix.
class AlgVec {
public:
    explicit AlgVec(QMatrix mat);

    static AlgVec zero(int side) { return AlgVec(QMatrix::zero(side)); }

    int side() const { return mat_.side(); }
    const QMatrix& mat() const { return mat_; }

    double norm() const { return mat_.frobenius_norm(); }

    AlgVec& operator+=(const AlgVec& o);
    AlgVec& operator-=(const AlgVec& o);
    AlgVec& operator*=(double s);
    AlgVec operator-() const;

private:
    QMatrix mat_;
};

AlgVec operator+(AlgVec a, const AlgVec& b);
AlgVec operator-(AlgVec a, const AlgVec& b);
AlgVec operator*(AlgVec a, double s);
AlgVec operator*(double s, AlgVec a);

// Lie bracket [X, Y] = XY - YX.
AlgVec bracket(const AlgVec& x, const AlgVec& y);

// Bi-invariant inner product <X, Y> = -Re Tr(XY). For anti-Hermitian
// matrices this equals the Euclidean dot product of the real components.
double inner0(const AlgVec& x, const AlgVec& y);

// Ad_g X = g X g^{-1}.
AlgVec adjoint_action(const GroupElem& g, const AlgVec& x);

// Flatten to the 4*m^2 real components (row-major, w/x/y/z per entry).
// inner0 becomes the standard dot product under this embedding.
Eigen::VectorXd real_coords(const AlgVec& x);
AlgVec alg_from_real_coords(int side, const Eigen::VectorXd& v);

// Coordinates against an inner0-orthonormal basis, and the inverse.
Eigen::VectorXd basis_coords(const std::vector<AlgVec>& basis, const AlgVec& x);
AlgVec from_basis_coords(const std::vector<AlgVec>& basis, const Eigen::VectorXd& v);

// Distinguished subspaces of sp(n+1) for the family at parameter n:
//   K       block-diagonal sp(n) + sp(1)
//   P       orthogonal complement of K (off-diagonal last row/column)
//   U       diag(B, 0, c) with B in sp(n-1), c imaginary
//   KPerpU  orthogonal complement of U inside K
//   NSub    diag(B, c1, c2): the normalizer pattern used for orbit tests
enum class Part { K, P, U, KPerpU, NSub };

class SpaceConfig {
public:
    explicit SpaceConfig(int n);

    int n() const { return n_; }
    int m() const { return n_ + 1; }

    int dim_g() const { return dim_sp(m()); }
    int dim_k() const { return dim_sp(n_) + 3; }
    int dim_p() const { return 4 * n_; }
    int dim_u() const { return dim_sp(n_ - 1) + 3; }

    static int dim_sp(int m) { return m * (2 * m + 1); }

    // Orthonormal bases with respect to inner0.
    const std::vector<AlgVec>& basis_g() const { return basis_g_; }
    const std::vector<AlgVec>& basis(Part part) const;

    bool in_pattern(Part part, int i, int j) const;

private:
    int n_;
    std::vector<AlgVec> basis_g_, basis_k_, basis_p_, basis_u_, basis_ku_;
};

// Orthogonal projection of X onto the given subspace; these subspaces are
// entry-supported, so the projection is a pattern mask.
AlgVec project(const AlgVec& x, Part part, const SpaceConfig& cfg);

// Orthonormal basis of sp(m) itself: for each diagonal slot the three
// imaginary units, for each off-diagonal slot (l, r) the four matrices with
// q at (l, r) and -conj(q) at (r, l), scaled to unit inner0-length.
std::vector<AlgVec> sp_basis(int m);

// Orthonormal basis of the inner0-orthogonal complement of sp(m-1) inside
// sp(m) (sp(m-1) embedded as the top-left block).
std::vector<AlgVec> sphere_complement_basis(int m);

}  // namespace spcurv
