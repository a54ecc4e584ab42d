#include "spcurv/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spcurv {

QMatrix::QMatrix(int side) : side_{side} {
    if (side <= 0) throw std::invalid_argument("QMatrix: side must be positive");
    e_.assign(static_cast<size_t>(side) * side, Quaternion{});
}

QMatrix QMatrix::identity(int side) {
    QMatrix m(side);
    for (int i = 0; i < side; ++i) m.at(i, i) = Quaternion::real(1.0);
    return m;
}

QMatrix QMatrix::dagger() const {
    QMatrix d(side_);
    for (int i = 0; i < side_; ++i)
        for (int j = 0; j < side_; ++j) d.at(j, i) = at(i, j).conj();
    return d;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    if (o.side_ != side_) throw std::invalid_argument("QMatrix: dimension mismatch");
    for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    if (o.side_ != side_) throw std::invalid_argument("QMatrix: dimension mismatch");
    for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

QMatrix& QMatrix::operator*=(double s) {
    for (auto& q : e_) q *= s;
    return *this;
}

double QMatrix::re_trace() const {
    double t = 0.0;
    for (int i = 0; i < side_; ++i) t += at(i, i).w;
    return t;
}

double QMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& q : e_) s += q.norm_sq();
    return std::sqrt(s);
}

double QMatrix::anti_hermitian_defect() const {
    double worst = 0.0;
    for (int i = 0; i < side_; ++i)
        for (int j = i; j < side_; ++j) {
            const Quaternion d = at(i, j) + at(j, i).conj();
            worst = std::max(worst, d.norm());
        }
    return worst;
}

double QMatrix::unitarity_defect() const {
    return (dagger() * *this - identity(side_)).frobenius_norm();
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.side() != b.side()) throw std::invalid_argument("QMatrix: dimension mismatch");
    const int m = a.side();
    QMatrix c(m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            const Quaternion& aik = a.at(i, k);
            if (aik == Quaternion{}) continue;
            for (int j = 0; j < m; ++j) c.at(i, j) += qmul(aik, b.at(k, j));
        }
    return c;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator*(QMatrix a, double s) { return a *= s; }
QMatrix operator*(double s, QMatrix a) { return a *= s; }

double entry_dot(const QMatrix& a, const QMatrix& b) {
    if (a.side() != b.side()) throw std::invalid_argument("QMatrix: dimension mismatch");
    double s = 0.0;
    const int m = a.side();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) s += qdot(a.at(i, j), b.at(i, j));
    return s;
}

GroupElem::GroupElem(QMatrix mat) : mat_{std::move(mat)} {
    if (mat_.unitarity_defect() > kUnitaryTol)
        throw std::invalid_argument("GroupElem: matrix is not unitary within tolerance");
}

GroupElem expm(const QMatrix& x, double tol) {
    const double defect = x.anti_hermitian_defect();
    if (defect > 1e-12 * std::max(1.0, x.frobenius_norm()))
        throw std::invalid_argument("expm: input is not anti-Hermitian");

    // Scale down so the series converges fast, then square back up.
    const double nrm = x.frobenius_norm();
    int squarings = 4;
    if (nrm > 1.0) squarings += static_cast<int>(std::ceil(std::log2(nrm)));
    QMatrix y = x * std::ldexp(1.0, -squarings);

    const int m = x.side();
    QMatrix sum = QMatrix::identity(m);
    QMatrix term = QMatrix::identity(m);
    for (int k = 1; k <= 64; ++k) {
        term = term * y;
        term *= 1.0 / k;
        sum += term;
        if (term.frobenius_norm() < tol) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return GroupElem(std::move(sum));
}

}  // namespace spcurv
