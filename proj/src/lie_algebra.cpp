#include "spcurv/lie_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace spcurv {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;

const Quaternion kUnits[3] = {Quaternion::unit_i(), Quaternion::unit_j(),
                              Quaternion::unit_k()};
const Quaternion kUnitsWithOne[4] = {Quaternion::real(1.0), Quaternion::unit_i(),
                                     Quaternion::unit_j(), Quaternion::unit_k()};
}  // namespace

AlgVec::AlgVec(QMatrix mat) : mat_{std::move(mat)} {
    const double scale = std::max(1.0, mat_.frobenius_norm());
    if (mat_.anti_hermitian_defect() > 1e-12 * scale)
        throw std::invalid_argument("AlgVec: matrix is not anti-Hermitian");
}

AlgVec& AlgVec::operator+=(const AlgVec& o) {
    mat_ += o.mat_;
    return *this;
}
AlgVec& AlgVec::operator-=(const AlgVec& o) {
    mat_ -= o.mat_;
    return *this;
}
AlgVec& AlgVec::operator*=(double s) {
    mat_ *= s;
    return *this;
}
AlgVec AlgVec::operator-() const { return AlgVec(mat_ * -1.0); }

AlgVec operator+(AlgVec a, const AlgVec& b) { return a += b; }
AlgVec operator-(AlgVec a, const AlgVec& b) { return a -= b; }
AlgVec operator*(AlgVec a, double s) { return a *= s; }
AlgVec operator*(double s, AlgVec a) { return a *= s; }

namespace {

// Orthogonal projection onto the anti-Hermitian part; removes the rounding
// noise of operations whose exact value lies in the algebra.
QMatrix anti_hermitian_part(const QMatrix& m) {
    const int s = m.side();
    QMatrix out(s);
    for (int i = 0; i < s; ++i) {
        out.at(i, i) = m.at(i, i).im();
        for (int j = i + 1; j < s; ++j) {
            const Quaternion half = (m.at(i, j) - m.at(j, i).conj()) * 0.5;
            out.at(i, j) = half;
            out.at(j, i) = -half.conj();
        }
    }
    return out;
}

}  // namespace

AlgVec bracket(const AlgVec& x, const AlgVec& y) {
    return AlgVec(anti_hermitian_part(x.mat() * y.mat() - y.mat() * x.mat()));
}

double inner0(const AlgVec& x, const AlgVec& y) { return entry_dot(x.mat(), y.mat()); }

AlgVec adjoint_action(const GroupElem& g, const AlgVec& x) {
    if (g.side() != x.side()) throw std::invalid_argument("adjoint_action: dimension mismatch");
    return AlgVec(anti_hermitian_part(g.mat() * x.mat() * g.mat().dagger()));
}

Eigen::VectorXd real_coords(const AlgVec& x) {
    const int m = x.side();
    Eigen::VectorXd v(4 * m * m);
    int k = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Quaternion& q = x.mat().at(i, j);
            v[k++] = q.w;
            v[k++] = q.x;
            v[k++] = q.y;
            v[k++] = q.z;
        }
    return v;
}

AlgVec alg_from_real_coords(int side, const Eigen::VectorXd& v) {
    if (v.size() != 4 * side * side)
        throw std::invalid_argument("alg_from_real_coords: size mismatch");
    QMatrix m(side);
    int k = 0;
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            m.at(i, j) = Quaternion{v[k], v[k + 1], v[k + 2], v[k + 3]};
            k += 4;
        }
    return AlgVec(std::move(m));
}

Eigen::VectorXd basis_coords(const std::vector<AlgVec>& basis, const AlgVec& x) {
    Eigen::VectorXd v(static_cast<int>(basis.size()));
    for (int i = 0; i < v.size(); ++i) v[i] = inner0(x, basis[static_cast<size_t>(i)]);
    return v;
}

AlgVec from_basis_coords(const std::vector<AlgVec>& basis, const Eigen::VectorXd& v) {
    if (basis.empty() || v.size() != static_cast<int>(basis.size()))
        throw std::invalid_argument("from_basis_coords: size mismatch");
    AlgVec out = AlgVec::zero(basis.front().side());
    for (int i = 0; i < v.size(); ++i) out += v[i] * basis[static_cast<size_t>(i)];
    return out;
}

std::vector<AlgVec> sp_basis(int m) {
    std::vector<AlgVec> basis;
    basis.reserve(static_cast<size_t>(SpaceConfig::dim_sp(m)));
    for (int l = 0; l < m; ++l)
        for (const auto& q : kUnits) {
            QMatrix e(m);
            e.at(l, l) = q;
            basis.emplace_back(std::move(e));
        }
    for (int l = 0; l < m; ++l)
        for (int r = l + 1; r < m; ++r)
            for (const auto& q : kUnitsWithOne) {
                QMatrix e(m);
                e.at(l, r) = q * kInvSqrt2;
                e.at(r, l) = -(q.conj() * kInvSqrt2);
                basis.emplace_back(std::move(e));
            }
    return basis;
}

std::vector<AlgVec> sphere_complement_basis(int m) {
    std::vector<AlgVec> basis;
    const int l = m - 1;
    for (const auto& q : kUnits) {
        QMatrix e(m);
        e.at(l, l) = q;
        basis.emplace_back(std::move(e));
    }
    for (int r = 0; r < l; ++r)
        for (const auto& q : kUnitsWithOne) {
            QMatrix e(m);
            e.at(r, l) = q * kInvSqrt2;
            e.at(l, r) = -(q.conj() * kInvSqrt2);
            basis.emplace_back(std::move(e));
        }
    return basis;
}

SpaceConfig::SpaceConfig(int n) : n_{n} {
    if (n < 2) throw std::invalid_argument("SpaceConfig: family index must be >= 2");
    basis_g_ = sp_basis(m());
    for (const auto& e : basis_g_) {
        bool in_k = true, in_p = true, in_u = true, in_ku = true;
        for (int i = 0; i < m(); ++i)
            for (int j = 0; j < m(); ++j) {
                if (e.mat().at(i, j) == Quaternion{}) continue;
                if (!in_pattern(Part::K, i, j)) in_k = false;
                if (!in_pattern(Part::P, i, j)) in_p = false;
                if (!in_pattern(Part::U, i, j)) in_u = false;
                if (!in_pattern(Part::KPerpU, i, j)) in_ku = false;
            }
        if (in_k) basis_k_.push_back(e);
        if (in_p) basis_p_.push_back(e);
        if (in_u) basis_u_.push_back(e);
        if (in_ku) basis_ku_.push_back(e);
    }
}

const std::vector<AlgVec>& SpaceConfig::basis(Part part) const {
    switch (part) {
        case Part::K: return basis_k_;
        case Part::P: return basis_p_;
        case Part::U: return basis_u_;
        case Part::KPerpU: return basis_ku_;
        default: throw std::invalid_argument("SpaceConfig::basis: no basis for pattern");
    }
}

bool SpaceConfig::in_pattern(Part part, int i, int j) const {
    const int n = n_;
    switch (part) {
        case Part::K:
            return (i < n && j < n) || (i == n && j == n);
        case Part::P:
            return (i < n && j == n) || (i == n && j < n);
        case Part::U:
            return (i < n - 1 && j < n - 1) || (i == n && j == n);
        case Part::KPerpU:
            // Inside K but orthogonal to U: row/column n-1 of the sp(n) block.
            return (i < n && j < n) && (i == n - 1 || j == n - 1);
        case Part::NSub:
            return (i < n - 1 && j < n - 1) || (i == n - 1 && j == n - 1) ||
                   (i == n && j == n);
    }
    return false;
}

AlgVec project(const AlgVec& x, Part part, const SpaceConfig& cfg) {
    const int m = cfg.m();
    if (x.side() != m) throw std::invalid_argument("project: dimension mismatch");
    QMatrix out(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (cfg.in_pattern(part, i, j)) out.at(i, j) = x.mat().at(i, j);
    return AlgVec(std::move(out));
}

}  // namespace spcurv
