#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "spcurv/qmatrix.hpp"
#include "spcurv/rng.hpp"

using namespace spcurv;

namespace {

// Independent oracle: left-multiplication by q as a real 4x4 matrix.
Eigen::Matrix4d left_rep(const Quaternion& q) {
    Eigen::Matrix4d m;
    m << q.w, -q.x, -q.y, -q.z,
         q.x,  q.w, -q.z,  q.y,
         q.y,  q.z,  q.w, -q.x,
         q.z, -q.y,  q.x,  q.w;
    return m;
}

Eigen::Vector4d vec4(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

Quaternion random_quat(Rng& rng) {
    return {rng.next_symmetric(), rng.next_symmetric(), rng.next_symmetric(),
            rng.next_symmetric()};
}

QMatrix random_anti_hermitian(Rng& rng, int m, double scale = 1.0) {
    QMatrix x(m);
    for (int i = 0; i < m; ++i) {
        x.at(i, i) = Quaternion{0.0, rng.next_symmetric(), rng.next_symmetric(),
                                rng.next_symmetric()} *
                     scale;
        for (int j = i + 1; j < m; ++j) {
            const Quaternion q = random_quat(rng) * scale;
            x.at(i, j) = q;
            x.at(j, i) = -q.conj();
        }
    }
    return x;
}

}  // namespace

TEST_CASE("defining relations") {
    CHECK(Quaternion::unit_i() * Quaternion::unit_j() == Quaternion::unit_k());
    const Quaternion one_plus_i{1, 1, 0, 0}, one_minus_i{1, -1, 0, 0};
    CHECK(one_plus_i * one_minus_i == Quaternion::real(2.0));
    // (2+3i)(1+j) = 2 + 3i + 2j + 3k
    CHECK(Quaternion{2, 3, 0, 0} * Quaternion{1, 0, 1, 0} == Quaternion{2, 3, 2, 3});
}

TEST_CASE("conjugation and norm identities") {
    Rng rng(11);
    for (int it = 0; it < 1000; ++it) {
        const Quaternion p = random_quat(rng), q = random_quat(rng);
        const Quaternion pc = p.conj();
        CHECK(pc.conj() == p);
        // |q|^2 = q conj(q), purely real
        const Quaternion nn = q * q.conj();
        CHECK(std::abs(nn.w - q.norm_sq()) < 1e-14);
        CHECK(std::abs(nn.x) + std::abs(nn.y) + std::abs(nn.z) < 1e-14);
        // Re(pq) = Re(qp)
        CHECK((p * q).re() == doctest::Approx((q * p).re()).epsilon(1e-13));
        // conj(pq) = conj(q) conj(p)
        const Quaternion lhs = (p * q).conj();
        const Quaternion rhs = q.conj() * p.conj();
        CHECK((lhs - rhs).norm() < 1e-14);
    }
}

TEST_CASE("multiplicativity of the norm and the 4x4 representation oracle") {
    Rng rng(7);
    double worst_norm = 0.0, worst_rep = 0.0, worst_vec = 0.0;
    for (int it = 0; it < 10000; ++it) {
        const Quaternion p = random_quat(rng), q = random_quat(rng);
        const Quaternion pq = p * q;
        worst_norm = std::max(worst_norm, std::abs(pq.norm() - p.norm() * q.norm()));
        worst_rep = std::max(worst_rep,
                             (left_rep(p) * left_rep(q) - left_rep(pq)).norm());
        worst_vec = std::max(worst_vec, (left_rep(p) * vec4(q) - vec4(pq)).norm());
    }
    CHECK(worst_norm < 1e-12);
    CHECK(worst_rep < 1e-13);
    CHECK(worst_vec < 1e-13);
}

TEST_CASE("matrix algebra basics") {
    Rng rng(3);
    const int m = 3;
    QMatrix a(m), b(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            a.at(i, j) = random_quat(rng);
            b.at(i, j) = random_quat(rng);
        }

    // A * I = A
    const QMatrix ai = a * QMatrix::identity(m);
    CHECK((ai - a).frobenius_norm() < 1e-15);

    // dagger(AB) = dagger(B) dagger(A)
    const QMatrix lhs = (a * b).dagger();
    const QMatrix rhs = b.dagger() * a.dagger();
    CHECK((lhs - rhs).frobenius_norm() < 1e-13);

    // Re Tr(AB) = Re Tr(BA)
    CHECK((a * b).re_trace() == doctest::Approx((b * a).re_trace()).epsilon(1e-12));

    // Real-entry matrices multiply like real matrices.
    QMatrix ra(2), rb(2);
    ra.at(0, 0) = Quaternion::real(1);
    ra.at(0, 1) = Quaternion::real(2);
    ra.at(1, 0) = Quaternion::real(3);
    ra.at(1, 1) = Quaternion::real(4);
    rb.at(0, 0) = Quaternion::real(5);
    rb.at(0, 1) = Quaternion::real(6);
    rb.at(1, 0) = Quaternion::real(7);
    rb.at(1, 1) = Quaternion::real(8);
    const QMatrix rc = ra * rb;
    CHECK(rc.at(0, 0) == Quaternion::real(19));
    CHECK(rc.at(0, 1) == Quaternion::real(22));
    CHECK(rc.at(1, 0) == Quaternion::real(43));
    CHECK(rc.at(1, 1) == Quaternion::real(50));

    CHECK_THROWS(a * QMatrix::identity(2));
}

TEST_CASE("expm basics") {
    // expm(0) = I
    const GroupElem e0 = expm(QMatrix::zero(3));
    CHECK((e0.mat() - QMatrix::identity(3)).frobenius_norm() < 1e-15);

    // expm(diag(pi i, 0, 0)) = diag(-1, 1, 1)
    QMatrix x(3);
    x.at(0, 0) = Quaternion{0.0, 3.14159265358979323846, 0.0, 0.0};
    const GroupElem g = expm(x);
    QMatrix want = QMatrix::identity(3);
    want.at(0, 0) = Quaternion::real(-1.0);
    CHECK((g.mat() - want).frobenius_norm() < 1e-13);

    // Non-anti-Hermitian input is rejected.
    QMatrix bad(2);
    bad.at(0, 1) = Quaternion::real(1.0);
    CHECK_THROWS(expm(bad));
}

TEST_CASE("expm produces unitary matrices and inverts cleanly") {
    Rng rng(19);
    double worst_unit = 0.0, worst_inv = 0.0;
    for (int it = 0; it < 50; ++it) {
        QMatrix x = random_anti_hermitian(rng, 3, 1.0);
        // Scale to Frobenius norm <= 5.
        const double target = 0.2 + 4.8 * rng.next_unit();
        x *= target / x.frobenius_norm();
        const GroupElem g = expm(x);
        worst_unit = std::max(worst_unit, g.mat().unitarity_defect());
        QMatrix neg = x;
        neg *= -1.0;
        const GroupElem gi = expm(neg);
        worst_inv = std::max(
            worst_inv,
            (g.mat() * gi.mat() - QMatrix::identity(3)).frobenius_norm());
    }
    CHECK(worst_unit < 1e-12);
    CHECK(worst_inv < 1e-11);
}

TEST_CASE("series truncation against a direct small-angle sum") {
    Rng rng(23);
    QMatrix x = random_anti_hermitian(rng, 3, 0.05);
    const GroupElem g = expm(x);
    // Direct Horner-free series, no scaling: valid for small norms.
    QMatrix sum = QMatrix::identity(3);
    QMatrix term = QMatrix::identity(3);
    for (int k = 1; k <= 30; ++k) {
        term = term * x;
        term *= 1.0 / k;
        sum += term;
    }
    CHECK((g.mat() - sum).frobenius_norm() < 1e-13);
}

TEST_CASE("group element validation") {
    CHECK_THROWS(GroupElem(QMatrix::zero(2)));
    const GroupElem id = GroupElem::identity(4);
    CHECK(id.inverse().mat().frobenius_norm() == doctest::Approx(2.0));
}
