#include "spcurv/orbit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spcurv {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace

GroupElem f_matrix(const SpaceConfig& cfg, const FundamentalPoint& pt) {
    if (!(pt.theta >= 0.0 && pt.theta <= kHalfPi && pt.alpha >= 0.0 &&
          pt.alpha <= kHalfPi))
        throw std::invalid_argument("f_matrix: angles must lie in [0, pi/2]");

    const double ct = std::cos(pt.theta), st = std::sin(pt.theta);
    const double ca = std::cos(pt.alpha), sa = std::sin(pt.alpha);
    const int m = cfg.m();
    QMatrix g(m);
    for (int i = 0; i < m - 3; ++i) g.at(i, i) = Quaternion::real(1.0);
    const int b = m - 3;
    const double a[3][3] = {{ct, 0.0, st},
                            {-ca * st, sa, ca * ct},
                            {-sa * st, -ca, sa * ct}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g.at(b + i, b + j) = Quaternion::real(a[i][j]);
    return GroupElem(std::move(g));
}

OrbitInvariants v_segments(const SpaceConfig& cfg, const GroupElem& g) {
    if (g.side() != cfg.m()) throw std::invalid_argument("v_segments: dimension mismatch");
    const int last = cfg.m() - 1;
    OrbitInvariants inv;
    double s0 = 0.0;
    for (int i = 0; i < cfg.n() - 1; ++i) s0 += g.mat().at(i, last).norm_sq();
    inv.r0 = std::sqrt(s0);
    inv.rn = g.mat().at(cfg.n() - 1, last).norm();
    inv.rn1 = g.mat().at(cfg.n(), last).norm();
    return inv;
}

ReducedPoint reduce_to_f(const SpaceConfig& cfg, const GroupElem& g1,
                         const GroupElem& g2) {
    const GroupElem g(g2.mat().dagger() * g1.mat());
    const OrbitInvariants inv = v_segments(cfg, g);

    ReducedPoint out;
    out.point.theta = std::asin(clamp01(inv.r0));
    if (inv.rn <= 1e-14 && inv.rn1 <= 1e-14) {
        // cos(theta) = 0: any alpha names the same orbit.
        out.point.alpha = 0.0;
        out.boundary_degenerate = true;
    } else {
        out.point.alpha = std::atan2(inv.rn1, inv.rn);
    }
    return out;
}

AlgVec random_alg_vec(Rng& rng, int side) {
    QMatrix x(side);
    for (int i = 0; i < side; ++i) {
        x.at(i, i) = Quaternion{0.0, rng.next_symmetric(), rng.next_symmetric(),
                                rng.next_symmetric()};
        for (int j = i + 1; j < side; ++j) {
            const Quaternion q{rng.next_symmetric(), rng.next_symmetric(),
                               rng.next_symmetric(), rng.next_symmetric()};
            x.at(i, j) = q;
            x.at(j, i) = -q.conj();
        }
    }
    return AlgVec(std::move(x));
}

AlgVec random_alg_vec_in(Rng& rng, const SpaceConfig& cfg, Part part) {
    return project(random_alg_vec(rng, cfg.m()), part, cfg);
}

GroupElem random_group_element(std::uint64_t seed, int side) {
    Rng rng(seed);
    return expm((0.5 * random_alg_vec(rng, side)).mat());
}

GroupElem random_k_element(const SpaceConfig& cfg, std::uint64_t seed) {
    Rng rng(seed);
    return expm((0.5 * random_alg_vec_in(rng, cfg, Part::K)).mat());
}

GroupElem random_n_element(const SpaceConfig& cfg, std::uint64_t seed) {
    Rng rng(seed);
    return expm((0.5 * random_alg_vec_in(rng, cfg, Part::NSub)).mat());
}

}  // namespace spcurv
