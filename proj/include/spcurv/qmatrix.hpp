#pragma once

#include <vector>

#include "spcurv/quaternion.hpp"

namespace spcurv {

// Dense square matrix over the quaternions, row-major storage.
class QMatrix {
public:
    explicit QMatrix(int side);

    static QMatrix identity(int side);
    static QMatrix zero(int side) { return QMatrix(side); }

    int side() const { return side_; }

    Quaternion& at(int i, int j) { return e_[static_cast<size_t>(i) * side_ + j]; }
    const Quaternion& at(int i, int j) const {
        return e_[static_cast<size_t>(i) * side_ + j];
    }

    // Conjugate transpose.
    QMatrix dagger() const;

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    QMatrix& operator*=(double s);

    double re_trace() const;
    // Frobenius norm over all real components.
    double frobenius_norm() const;

    // Max |entry - (-conj(entry^T))|, i.e. distance from being anti-Hermitian.
    double anti_hermitian_defect() const;
    // Frobenius norm of dagger(M)*M - I.
    double unitarity_defect() const;

private:
    int side_;
    std::vector<Quaternion> e_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(QMatrix a, double s);
QMatrix operator*(double s, QMatrix a);

// Entrywise real-component dot product; equals -Re Tr(A B) when both
// arguments are anti-Hermitian.
double entry_dot(const QMatrix& a, const QMatrix& b);

// Element of the compact symplectic group Sp(side): unitary over H.
// The validating constructor rejects matrices whose unitarity defect
// exceeds kUnitaryTol (scaled by the matrix size is not needed at the
// sizes used here).
class GroupElem {
public:
    static constexpr double kUnitaryTol = 1e-12;

    explicit GroupElem(QMatrix mat);

    static GroupElem identity(int side) { return GroupElem(QMatrix::identity(side)); }

    int side() const { return mat_.side(); }
    const QMatrix& mat() const { return mat_; }

    // For unitary matrices the inverse is the conjugate transpose.
    GroupElem inverse() const { return GroupElem(mat_.dagger()); }

private:
    QMatrix mat_;
};

// Matrix exponential of an anti-Hermitian matrix by scaling-and-squaring on
// the power series; the series is truncated once the term norm drops below
// tol. Throws if the input is not anti-Hermitian.
GroupElem expm(const QMatrix& x, double tol = 1e-16);

}  // namespace spcurv
