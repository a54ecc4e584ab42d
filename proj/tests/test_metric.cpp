#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spcurv/metric.hpp"
#include "spcurv/orbit.hpp"

using namespace spcurv;

namespace {

AlgVec commuting_k(const SpaceConfig& cfg, Rng& rng) {
    QMatrix x(cfg.m());
    x.at(cfg.n() - 1, cfg.n() - 1) = Quaternion{
        0, rng.next_symmetric(), rng.next_symmetric(), rng.next_symmetric()};
    return AlgVec(std::move(x));
}

AlgVec commuting_p(const SpaceConfig& cfg, Rng& rng) {
    QMatrix y(cfg.m());
    const Quaternion c{rng.next_symmetric(), rng.next_symmetric(),
                       rng.next_symmetric(), rng.next_symmetric()};
    y.at(0, cfg.n()) = c;
    y.at(cfg.n(), 0) = -c.conj();
    return AlgVec(std::move(y));
}

}  // namespace

TEST_CASE("phi eigenvalues and inverse") {
    const SpaceConfig cfg(2);
    const MetricOperator op = MetricOperator::cheeger(cfg, 1.0);
    Rng rng(3);

    const AlgVec xp = random_alg_vec_in(rng, cfg, Part::P);
    CHECK((op.phi(xp) - xp).norm() < 1e-15);

    const AlgVec xk = random_alg_vec_in(rng, cfg, Part::K);
    CHECK((op.phi(xk) - 0.5 * xk).norm() < 1e-15);

    for (int it = 0; it < 20; ++it) {
        const AlgVec x = random_alg_vec(rng, 3);
        CHECK((op.phi_inv(op.phi(x)) - x).norm() < 1e-14 * x.norm());
        // Self-adjointness with respect to inner0.
        const AlgVec y = random_alg_vec(rng, 3);
        CHECK(inner0(op.phi(x), y) == doctest::Approx(inner0(x, op.phi(y))).epsilon(1e-12));
    }

    CHECK_THROWS(MetricOperator::cheeger(cfg, 0.0));
    CHECK_THROWS(MetricOperator::cheeger(cfg, -2.0));
}

TEST_CASE("inner1 reference values") {
    const SpaceConfig cfg(2);
    const MetricOperator op = MetricOperator::cheeger(cfg, 1.0);
    Rng rng(5);

    AlgVec xk = random_alg_vec_in(rng, cfg, Part::K);
    xk *= 1.0 / xk.norm();
    CHECK(op.inner1(xk, xk) == doctest::Approx(0.5).epsilon(1e-13));

    const AlgVec yp = random_alg_vec_in(rng, cfg, Part::P);
    CHECK(std::abs(op.inner1(xk, yp)) < 1e-13);

    // Large t approaches the bi-invariant metric.
    const MetricOperator big = MetricOperator::cheeger(cfg, 1e6);
    for (const AlgVec& e : cfg.basis_g())
        for (const AlgVec& f : cfg.basis_g())
            CHECK(std::abs(big.inner1(e, f) - inner0(e, f)) < 2e-6);
}

TEST_CASE("connection properties") {
    const SpaceConfig cfg(2);
    const MetricOperator bi = MetricOperator::bi_invariant(cfg);
    const MetricOperator op = MetricOperator::cheeger(cfg, 1.3);
    Rng rng(7);

    for (int it = 0; it < 30; ++it) {
        const AlgVec x = random_alg_vec(rng, 3), y = random_alg_vec(rng, 3);
        // Bi-invariant mode: half the bracket.
        CHECK((connection(x, y, bi) - 0.5 * bracket(x, y)).norm() < 1e-13);
        // Torsion-free in either mode.
        const AlgVec torsion = connection(x, y, op) - connection(y, x, op) - bracket(x, y);
        CHECK(torsion.norm() < 1e-11);
    }

    // Independent oracle: the Koszul formula for left-invariant fields,
    // 2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.
    for (int it = 0; it < 20; ++it) {
        const AlgVec x = random_alg_vec(rng, 3), y = random_alg_vec(rng, 3),
                     z = random_alg_vec(rng, 3);
        const double lhs = 2.0 * op.inner1(connection(x, y, op), z);
        const double rhs = op.inner1(bracket(x, y), z) -
                           op.inner1(bracket(y, z), x) +
                           op.inner1(bracket(z, x), y);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10).scale(1));
        // Metric compatibility in the left-invariant frame.
        CHECK(op.inner1(connection(x, y, op), z) + op.inner1(y, connection(x, z, op)) ==
              doctest::Approx(0.0).scale(1).epsilon(1e-10));
    }
}

TEST_CASE("bi-invariant curvature oracle") {
    const SpaceConfig cfg(2);
    const MetricOperator bi = MetricOperator::bi_invariant(cfg);

    QMatrix xi(3), yj(3);
    xi.at(0, 0) = Quaternion::unit_i();
    yj.at(0, 0) = Quaternion::unit_j();
    const PlaneCurvature pc = plane_curvature(AlgVec(std::move(xi)), AlgVec(std::move(yj)), bi);
    CHECK(pc.numerator == doctest::Approx(1.0).epsilon(1e-12));

    Rng rng(11);
    double worst = 0.0;
    for (int it = 0; it < 500; ++it) {
        const AlgVec x = random_alg_vec(rng, 3), y = random_alg_vec(rng, 3);
        const double got = plane_curvature(x, y, bi).numerator;
        const double want = 0.25 * inner0(bracket(x, y), bracket(x, y));
        worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("degenerate planes have no sectional value") {
    const SpaceConfig cfg(2);
    const MetricOperator op = MetricOperator::cheeger(cfg, 1.0);
    Rng rng(13);
    const AlgVec x = random_alg_vec(rng, 3);
    const PlaneCurvature pc = plane_curvature(x, 2.0 * x, op);
    CHECK(std::abs(pc.gram) < 1e-10);
    CHECK_FALSE(pc.sec.has_value());
}

TEST_CASE("curvature tensor symmetries and first Bianchi") {
    const SpaceConfig cfg(2);
    Rng rng(17);
    for (const double t : {0.5, 1.0}) {
        const MetricOperator op = MetricOperator::cheeger(cfg, t);
        const auto r = [&](const AlgVec& x, const AlgVec& y, const AlgVec& z) {
            return connection(x, connection(y, z, op), op) -
                   connection(y, connection(x, z, op), op) -
                   connection(bracket(x, y), z, op);
        };
        for (int it = 0; it < 15; ++it) {
            const AlgVec x = random_alg_vec(rng, 3), y = random_alg_vec(rng, 3),
                         z = random_alg_vec(rng, 3), w = random_alg_vec(rng, 3);
            const double rxyzw = op.inner1(r(x, y, z), w);
            CHECK(std::abs(rxyzw + op.inner1(r(y, x, z), w)) < 1e-9);
            CHECK(std::abs(rxyzw + op.inner1(r(x, y, w), z)) < 1e-9);
            CHECK(std::abs(rxyzw - op.inner1(r(z, w, x), y)) < 1e-9);
            CHECK((r(x, y, z) + r(y, z, x) + r(z, x, y)).norm() < 1e-9);
        }
    }
}

TEST_CASE("zero-plane characterization for the deformed metric") {
    const SpaceConfig cfg(2);
    const MetricOperator op = MetricOperator::cheeger(cfg, 1.0);
    Rng rng(19);

    // Commuting K x P pairs (with mixing) give flat planes for phi-inverse
    // images; breaking exactly the commutation gives visible curvature.
    for (int it = 0; it < 50; ++it) {
        AlgVec xk = commuting_k(cfg, rng);
        AlgVec yp = commuting_p(cfg, rng);
        xk *= 1.0 / xk.norm();
        yp *= 1.0 / yp.norm();
        REQUIRE(bracket(xk, yp).norm() < 1e-13);
        const AlgVec xm = xk + rng.next_symmetric() * yp;
        const PlaneCurvature flat =
            plane_curvature(op.phi_inv(xm), op.phi_inv(yp), op);
        CHECK(std::abs(flat.numerator) < 1e-11);
    }

    for (int it = 0; it < 50; ++it) {
        // Non-commuting K x P pair: K- and P-parts still commute trivially,
        // only the plain bracket is violated.
        AlgVec xk = random_alg_vec_in(rng, cfg, Part::K);
        AlgVec yp = random_alg_vec_in(rng, cfg, Part::P);
        xk *= 1.0 / xk.norm();
        yp *= 1.0 / yp.norm();
        if (bracket(xk, yp).norm() < 1e-2) continue;
        AlgVec a = op.phi_inv(xk), b = op.phi_inv(yp);
        // Normalize the plane so the numerator scale is meaningful.
        a *= 1.0 / std::sqrt(op.inner1(a, a));
        b *= 1.0 / std::sqrt(op.inner1(b, b));
        const PlaneCurvature pc = plane_curvature(a, b, op);
        CHECK(pc.numerator > 1e-6);
    }
}

TEST_CASE("random planes are never negatively curved") {
    const SpaceConfig cfg(2);
    Rng rng(23);
    for (const double t : {0.1, 1.0, 10.0}) {
        const MetricOperator op = MetricOperator::cheeger(cfg, t);
        double least = 1e9;
        for (int it = 0; it < 2000; ++it) {
            const AlgVec x = random_alg_vec(rng, 3), y = random_alg_vec(rng, 3);
            const PlaneCurvature pc = plane_curvature(x, y, op);
            if (pc.sec) least = std::min(least, *pc.sec);
        }
        CHECK(least > -1e-9);
    }
}

TEST_CASE("lift curvature splits over the factors") {
    const SpaceConfig cfg(2);
    const MetricOperator op = MetricOperator::cheeger(cfg, 1.0);
    Rng rng(29);
    const AlgVec x = random_alg_vec(rng, 3), y = random_alg_vec(rng, 3);
    const AlgVec zero = AlgVec::zero(3);

    const PlaneCurvature single = plane_curvature(x, y, op);
    const PlaneCurvature lifted =
        lift_plane_curvature({x, zero}, {y, zero}, op);
    CHECK(lifted.numerator == doctest::Approx(single.numerator).epsilon(1e-12));
    CHECK(lifted.gram == doctest::Approx(single.gram).epsilon(1e-12));

    const AlgVec a2 = random_alg_vec(rng, 3), b2 = random_alg_vec(rng, 3);
    const PlaneCurvature both = lift_plane_curvature({x, a2}, {y, b2}, op);
    CHECK(both.numerator ==
          doctest::Approx(single.numerator + plane_curvature(a2, b2, op).numerator)
              .epsilon(1e-11));
}
