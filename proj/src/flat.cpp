#include "spcurv/flat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace spcurv {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kBoundaryTol = 1e-12;

// |V|^2 |W|^2 - <V,W>^2, evaluated as |V|^2 |W - proj_V W|^2 so that nearly
// dependent pairs resolve far below the cancellation floor of the naive
// product form.
double stable_gram(double vv, double ww, double vw,
                   const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
    if (vv == 0.0 || ww == 0.0) return 0.0;
    if (vv >= ww) return vv * (w - (vw / vv) * v).squaredNorm();
    return ww * (v - (vw / ww) * w).squaredNorm();
}

double gram_det(const AlgVec& v, const AlgVec& w) {
    const Eigen::VectorXd vc = real_coords(v);
    const Eigen::VectorXd wc = real_coords(w);
    return stable_gram(vc.squaredNorm(), wc.squaredNorm(), vc.dot(wc), vc, wc);
}

}  // namespace

FlatWitness make_flat_witness(const SpaceConfig& cfg, const FundamentalPoint& pt,
                              const AlgVec& x, const AlgVec& y,
                              const MetricOperator& op) {
    FlatWitness w{pt, x, y, {}, false};

    double structural = (x - project(x, Part::K, cfg)).norm();
    structural = std::max(structural, (y - project(y, Part::P, cfg)).norm());
    for (const AlgVec& u : cfg.basis(Part::U))
        structural = std::max(structural, std::abs(inner0(x, u)));
    w.residuals.structural = structural;

    w.residuals.condition_b_norm = bracket(x, y).norm();

    const GroupElem p = f_matrix(cfg, pt);
    const GroupElem p_inv = p.inverse();
    const AlgVec ad_x = adjoint_action(p_inv, x);
    const AlgVec ad_y = adjoint_action(p_inv, y);
    w.residuals.condition_c_gram =
        gram_det(project(ad_x, Part::P, cfg), project(ad_y, Part::P, cfg));

    // Curvature of the horizontal lift, evaluated on unit vectors so the
    // numerator is comparable across witnesses of any scale.
    TangentPair ha{op.phi_inv(-ad_x), op.phi_inv(x)};
    TangentPair hb{op.phi_inv(-ad_y), op.phi_inv(y)};
    const double na = std::sqrt(op.inner1(ha.first, ha.first) +
                                op.inner1(ha.second, ha.second));
    const double nb = std::sqrt(op.inner1(hb.first, hb.first) +
                                op.inner1(hb.second, hb.second));
    if (na > 0.0) {
        ha.first *= 1.0 / na;
        ha.second *= 1.0 / na;
    }
    if (nb > 0.0) {
        hb.first *= 1.0 / nb;
        hb.second *= 1.0 / nb;
    }
    w.residuals.lift_numerator = lift_plane_curvature(ha, hb, op).numerator;

    w.valid = w.residuals.structural <= FlatWitness::kStructuralTol &&
              w.residuals.condition_b_norm <= FlatWitness::kConditionBTol &&
              w.residuals.condition_c_gram <= FlatWitness::kConditionCTol &&
              w.residuals.lift_numerator <= FlatWitness::kLiftTol;
    return w;
}

double condition_objective(const SpaceConfig& cfg, const FundamentalPoint& pt,
                           const AlgVec& x, const AlgVec& y) {
    if ((x - project(x, Part::K, cfg)).norm() > 1e-9 ||
        (y - project(y, Part::P, cfg)).norm() > 1e-9)
        throw std::invalid_argument("condition_objective: X must lie in K and Y in P");
    for (const AlgVec& u : cfg.basis(Part::U))
        if (std::abs(inner0(x, u)) > 1e-9)
            throw std::invalid_argument("condition_objective: X must be orthogonal to u");
    if (std::abs(x.norm() - 1.0) > 1e-9 || std::abs(y.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("condition_objective: inputs must be unit length");

    const GroupElem p_inv = f_matrix(cfg, pt).inverse();
    const AlgVec ad_x = adjoint_action(p_inv, x);
    const AlgVec ad_y = adjoint_action(p_inv, y);
    const double b2 = inner0(bracket(x, y), bracket(x, y));
    return b2 + gram_det(project(ad_x, Part::P, cfg), project(ad_y, Part::P, cfg));
}

// ---- n = 2 locus ------------------------------------------------------------

bool m2_flat_locus(const FundamentalPoint& pt) {
    if (std::abs(pt.alpha - kHalfPi) <= kBoundaryTol) return true;
    if (std::abs(pt.theta - kHalfPi) <= kBoundaryTol) return true;
    if (std::abs(pt.theta) <= kBoundaryTol && std::abs(pt.alpha) <= kBoundaryTol)
        return true;

    const double cos2t = std::cos(2.0 * pt.theta);
    if (!(cos2t > 0.0)) return false;
    const double st = std::sin(pt.theta);
    const double ta = std::tan(pt.alpha);
    return std::abs(ta * ta * cos2t - st * st) <= 1e-12;
}

std::optional<double> m2_curve_alpha(double theta) {
    if (!(theta > 0.0) || !(theta < std::numbers::pi / 4.0)) return std::nullopt;
    const double cos2t = std::cos(2.0 * theta);
    return std::atan2(std::sin(theta), std::sqrt(cos2t));
}

FlatWitness m2_witness(const SpaceConfig& cfg, const FundamentalPoint& pt,
                       const MetricOperator& op) {
    if (cfg.n() != 2) throw std::invalid_argument("m2_witness: requires n = 2");
    if (!m2_flat_locus(pt))
        throw std::domain_error("m2_witness: point is not on the flat locus");

    const bool boundary = std::abs(pt.alpha - kHalfPi) <= kBoundaryTol ||
                          std::abs(pt.theta - kHalfPi) <= kBoundaryTol ||
                          (std::abs(pt.theta) <= kBoundaryTol &&
                           std::abs(pt.alpha) <= kBoundaryTol);

    Quaternion b;
    if (boundary) {
        // The projected image of X vanishes identically here, so the
        // dependency condition holds for any imaginary b.
        b = Quaternion::unit_i();
    } else {
        const double st = std::sin(pt.theta), ct = std::cos(pt.theta);
        const double sa = std::sin(pt.alpha), ca = std::cos(pt.alpha);
        const double scale = sa * (ct * ct - st * st) / (-(ca * ca) * ct * st);
        b = Quaternion::unit_i() * scale;
    }

    QMatrix xm(3);
    xm.at(1, 1) = b;
    QMatrix ym(3);
    const Quaternion c = Quaternion::unit_i();
    ym.at(0, 2) = c;
    ym.at(2, 0) = -c.conj();
    return make_flat_witness(cfg, pt, AlgVec(std::move(xm)), AlgVec(std::move(ym)), op);
}

namespace {

double curve_distance_sq(const FundamentalPoint& pt, double theta) {
    const auto alpha = m2_curve_alpha(theta);
    if (!alpha) return std::numeric_limits<double>::infinity();
    const double dt = pt.theta - theta;
    const double da = pt.alpha - *alpha;
    return dt * dt + da * da;
}

// Min distance to the interior curve by coarse sampling plus golden-section
// refinement; the curve runs from (0,0) up to (pi/4, pi/2).
double curve_min_theta(const FundamentalPoint& pt) {
    const double lo = 1e-9, hi = std::numbers::pi / 4.0 - 1e-9;
    const int samples = 2048;
    double best_theta = lo, best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= samples; ++i) {
        const double th = lo + (hi - lo) * i / samples;
        const double d = curve_distance_sq(pt, th);
        if (d < best) {
            best = d;
            best_theta = th;
        }
    }
    double a = std::max(lo, best_theta - (hi - lo) / samples);
    double b = std::min(hi, best_theta + (hi - lo) / samples);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = curve_distance_sq(pt, x1), f2 = curve_distance_sq(pt, x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = curve_distance_sq(pt, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = curve_distance_sq(pt, x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

}  // namespace

double m2_locus_distance(const FundamentalPoint& pt) {
    const double d_alpha_line = std::abs(kHalfPi - pt.alpha);
    const double d_theta_line = std::abs(kHalfPi - pt.theta);
    const double d_corner = std::hypot(pt.theta, pt.alpha);
    const double th = curve_min_theta(pt);
    const double d_curve = std::sqrt(curve_distance_sq(pt, th));
    return std::min(std::min(d_alpha_line, d_theta_line),
                    std::min(d_corner, d_curve));
}

FundamentalPoint m2_locus_projection(const FundamentalPoint& pt) {
    const double th = curve_min_theta(pt);
    FundamentalPoint best{th, *m2_curve_alpha(th)};
    double best_d = std::sqrt(curve_distance_sq(pt, th));

    const auto consider = [&](const FundamentalPoint& cand, double d) {
        if (d < best_d) {
            best_d = d;
            best = cand;
        }
    };
    consider({pt.theta, kHalfPi}, std::abs(kHalfPi - pt.alpha));
    consider({kHalfPi, pt.alpha}, std::abs(kHalfPi - pt.theta));
    consider({0.0, 0.0}, std::hypot(pt.theta, pt.alpha));
    return best;
}

// ---- n >= 3 family ----------------------------------------------------------

MuEta mu_eta(const FundamentalPoint& pt) {
    MuEta out;
    const double st = std::sin(pt.theta), ct = std::cos(pt.theta);
    const double sa = std::sin(pt.alpha), ca = std::cos(pt.alpha);
    if (!(sa != 0.0 && ca != 0.0 && ct != 0.0)) return out;
    const double tan_t = st / ct;
    const double csc_a = 1.0 / sa;
    const double musq = tan_t * tan_t * csc_a * csc_a - 1.0;
    if (!(musq > 0.0)) return out;
    out.mu = std::sqrt(musq);
    const double eta_mu =
        st * (2.0 * ct * ct - 1.0) / (ca * sa * sa * ct * ct * ct);
    out.eta = eta_mu / out.mu;
    out.defined = true;
    return out;
}

bool in_region_z(const FundamentalPoint& pt) { return mu_eta(pt).defined; }

FlatWitness family_n_witness(const SpaceConfig& cfg, const FundamentalPoint& pt,
                             const Quaternion& b, const MetricOperator& op) {
    if (cfg.n() < 3) throw std::invalid_argument("family_n_witness: requires n >= 3");
    if (std::abs(b.re()) > 1e-12 || std::abs(b.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("family_n_witness: b must be unit imaginary");
    const MuEta me = mu_eta(pt);
    if (!me.defined)
        throw std::domain_error("family_n_witness: point is outside region Z");

    const int m = cfg.m();
    const int o = m - 4;  // origin of the bottom-right 4x4 block

    QMatrix xm(m);
    xm.at(o + 0, o + 2) = Quaternion::real(1.0);
    xm.at(o + 2, o + 0) = Quaternion::real(-1.0);
    xm.at(o + 1, o + 2) = me.mu * b;
    xm.at(o + 2, o + 1) = me.mu * b;
    xm.at(o + 2, o + 2) = me.eta * b;

    QMatrix ym(m);
    ym.at(o + 0, o + 3) = Quaternion::real(1.0);
    ym.at(o + 3, o + 0) = Quaternion::real(-1.0);
    ym.at(o + 1, o + 3) = (-1.0 / me.mu) * b;
    ym.at(o + 3, o + 1) = (-1.0 / me.mu) * b;

    return make_flat_witness(cfg, pt, AlgVec(std::move(xm)), AlgVec(std::move(ym)), op);
}

// ---- numerical search -------------------------------------------------------

namespace {

// Bilinear data for the objective at a fixed base point: bracket tensor over
// the K n U^perp and P bases (flattened for single-GEMV contractions), and
// the linear maps giving the P-parts of the Ad_{p^{-1}} images.
struct PlaneSearchContext {
    int dk{0}, dp{0}, dg{0};
    Eigen::MatrixXd cx;  // (dg*dk) x dp; row a*dg+r holds coords([K_a, P_b])_r
    Eigen::MatrixXd cy;  // (dg*dp) x dk; row b*dg+r, column a, same entries
    Eigen::MatrixXd A;   // dp x dk
    Eigen::MatrixXd B;   // dp x dp
    Eigen::MatrixXd ata; // A'A
    Eigen::MatrixXd btb; // B'B
};

PlaneSearchContext build_plane_context(const SpaceConfig& cfg,
                                       const FundamentalPoint& pt) {
    PlaneSearchContext ctx;
    const auto& ku = cfg.basis(Part::KPerpU);
    const auto& pb = cfg.basis(Part::P);
    const auto& gb = cfg.basis_g();
    ctx.dk = static_cast<int>(ku.size());
    ctx.dp = static_cast<int>(pb.size());
    ctx.dg = static_cast<int>(gb.size());

    ctx.cx.resize(ctx.dg * ctx.dk, ctx.dp);
    ctx.cy.resize(ctx.dg * ctx.dp, ctx.dk);
    for (int a = 0; a < ctx.dk; ++a)
        for (int b = 0; b < ctx.dp; ++b) {
            const Eigen::VectorXd coords = basis_coords(
                gb, bracket(ku[static_cast<size_t>(a)], pb[static_cast<size_t>(b)]));
            ctx.cx.block(a * ctx.dg, b, ctx.dg, 1) = coords;
            ctx.cy.block(b * ctx.dg, a, ctx.dg, 1) = coords;
        }

    const GroupElem p_inv = f_matrix(cfg, pt).inverse();
    ctx.A.resize(ctx.dp, ctx.dk);
    for (int a = 0; a < ctx.dk; ++a)
        ctx.A.col(a) = basis_coords(
            pb, project(adjoint_action(p_inv, ku[static_cast<size_t>(a)]), Part::P, cfg));
    ctx.B.resize(ctx.dp, ctx.dp);
    for (int b = 0; b < ctx.dp; ++b)
        ctx.B.col(b) = basis_coords(
            pb, project(adjoint_action(p_inv, pb[static_cast<size_t>(b)]), Part::P, cfg));
    ctx.ata = ctx.A.transpose() * ctx.A;
    ctx.btb = ctx.B.transpose() * ctx.B;
    return ctx;
}

// Scratch buffers reused across iterations and restarts.
struct PlaneWork {
    Eigen::VectorXd dflat, eflat, m, v, w;

    explicit PlaneWork(const PlaneSearchContext& ctx)
        : dflat(ctx.dg * ctx.dk),
          eflat(ctx.dg * ctx.dp),
          m(ctx.dg),
          v(ctx.dp),
          w(ctx.dp) {}
};

double plane_objective(const PlaneSearchContext& ctx, PlaneWork& wk,
                       const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    wk.dflat.noalias() = ctx.cx * y;
    const Eigen::Map<const Eigen::MatrixXd> dmat(wk.dflat.data(), ctx.dg, ctx.dk);
    wk.m.noalias() = dmat * x;
    wk.v.noalias() = ctx.A * x;
    wk.w.noalias() = ctx.B * y;
    const double vv = wk.v.squaredNorm(), ww = wk.w.squaredNorm(), vw = wk.v.dot(wk.w);
    return wk.m.squaredNorm() + stable_gram(vv, ww, vw, wk.v, wk.w);
}

struct SphereOpt {
    Eigen::VectorXd x, y;
    double f{0.0};
};

// Residual system whose zero set is exactly the certificate set:
//   r(x, y) = ( M(x, y), (V.V) W - (V.W) V )  with V = A x, W = B y.
// The first block is the bracket in algebra coordinates; the second
// vanishes iff the projected images are linearly dependent (including the
// degenerate branches V = 0 and W = 0).
void residual_vector(const PlaneSearchContext& ctx, PlaneWork& wk,
                     const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                     Eigen::VectorXd& r) {
    wk.dflat.noalias() = ctx.cx * y;
    const Eigen::Map<const Eigen::MatrixXd> dmat(wk.dflat.data(), ctx.dg, ctx.dk);
    wk.m.noalias() = dmat * x;
    wk.v.noalias() = ctx.A * x;
    wk.w.noalias() = ctx.B * y;
    r.resize(ctx.dg + ctx.dp);
    r.head(ctx.dg) = wk.m;
    r.tail(ctx.dp) = wk.v.squaredNorm() * wk.w - wk.v.dot(wk.w) * wk.v;
}

// For either argument held fixed, the score is a quadratic form in the
// other: f(x, y) = x' Q(y) x = y' R(x) y. An alternating smallest-
// eigenvector phase finds the basin; a Levenberg-Marquardt polish on the
// residual system then contracts to the zero set at machine precision.
// (A fixed-step projected gradient stalls near 1e-10 here: the variety of
// certified pairs has quartic transversal directions.)
SphereOpt minimize_on_spheres(const PlaneSearchContext& ctx, PlaneWork& wk,
                              Rng& rng, int max_iter) {
    SphereOpt cur;
    cur.x.resize(ctx.dk);
    cur.y.resize(ctx.dp);
    for (int i = 0; i < ctx.dk; ++i) cur.x[i] = rng.next_symmetric();
    for (int i = 0; i < ctx.dp; ++i) cur.y[i] = rng.next_symmetric();
    cur.x.normalize();
    cur.y.normalize();

    Eigen::MatrixXd qy(ctx.dk, ctx.dk), rx(ctx.dp, ctx.dp);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;

    const int alt_iters = std::min(max_iter, 12);
    double f = plane_objective(ctx, wk, cur.x, cur.y);
    int stalled = 0;
    for (int iter = 0; iter < alt_iters; ++iter) {
        // y-step: smallest eigenvector of R(x).
        wk.eflat.noalias() = ctx.cy * cur.x;
        const Eigen::Map<const Eigen::MatrixXd> emat(wk.eflat.data(), ctx.dg, ctx.dp);
        wk.v.noalias() = ctx.A * cur.x;
        rx.noalias() = emat.transpose() * emat;
        rx.noalias() += wk.v.squaredNorm() * ctx.btb;
        const Eigen::VectorXd btv = ctx.B.transpose() * wk.v;
        rx.noalias() -= btv * btv.transpose();
        es.compute(rx);
        cur.y = es.eigenvectors().col(0);

        // x-step: smallest eigenvector of Q(y).
        wk.dflat.noalias() = ctx.cx * cur.y;
        const Eigen::Map<const Eigen::MatrixXd> dmat(wk.dflat.data(), ctx.dg, ctx.dk);
        wk.w.noalias() = ctx.B * cur.y;
        qy.noalias() = dmat.transpose() * dmat;
        qy.noalias() += wk.w.squaredNorm() * ctx.ata;
        const Eigen::VectorXd atw = ctx.A.transpose() * wk.w;
        qy.noalias() -= atw * atw.transpose();
        es.compute(qy);
        cur.x = es.eigenvectors().col(0);

        const double fn = plane_objective(ctx, wk, cur.x, cur.y);
        const bool no_progress = f - fn <= 1e-6 * f;
        f = std::min(f, fn);
        if (no_progress && ++stalled >= 1) break;
        if (!no_progress) stalled = 0;
    }

    // Levenberg-Marquardt polish, renormalizing after every step.
    const int nr = ctx.dg + ctx.dp;
    const int nz = ctx.dk + ctx.dp;
    Eigen::VectorXd r(nr), rn(nr), step(nz);
    Eigen::MatrixXd jac(nr, nz), jtj(nz, nz);
    residual_vector(ctx, wk, cur.x, cur.y, r);
    double rr = r.squaredNorm();
    double lambda = 1e-6;
    cur.f = plane_objective(ctx, wk, cur.x, cur.y);
    for (int iter = 0; iter < 60 && cur.f > 1e-28; ++iter) {
        // Jacobian blocks at the current point.
        wk.dflat.noalias() = ctx.cx * cur.y;
        wk.eflat.noalias() = ctx.cy * cur.x;
        const Eigen::Map<const Eigen::MatrixXd> dmat(wk.dflat.data(), ctx.dg, ctx.dk);
        const Eigen::Map<const Eigen::MatrixXd> emat(wk.eflat.data(), ctx.dg, ctx.dp);
        wk.v.noalias() = ctx.A * cur.x;
        wk.w.noalias() = ctx.B * cur.y;
        const double vv = wk.v.squaredNorm(), vw = wk.v.dot(wk.w);
        jac.topLeftCorner(ctx.dg, ctx.dk) = dmat;
        jac.topRightCorner(ctx.dg, ctx.dp) = emat;
        jac.bottomLeftCorner(ctx.dp, ctx.dk) =
            2.0 * wk.w * (wk.v.transpose() * ctx.A) -
            wk.v * (wk.w.transpose() * ctx.A) - vw * ctx.A;
        jac.bottomRightCorner(ctx.dp, ctx.dp) =
            vv * ctx.B - wk.v * (wk.v.transpose() * ctx.B);

        jtj.noalias() = jac.transpose() * jac;
        const Eigen::VectorXd jtr = jac.transpose() * r;
        bool accepted = false;
        for (int tries = 0; tries < 24; ++tries) {
            Eigen::MatrixXd damped = jtj;
            damped.diagonal().array() += lambda;
            step = damped.ldlt().solve(-jtr);
            Eigen::VectorXd xn = (cur.x + step.head(ctx.dk)).normalized();
            Eigen::VectorXd yn = (cur.y + step.tail(ctx.dp)).normalized();
            residual_vector(ctx, wk, xn, yn, rn);
            const double rrn = rn.squaredNorm();
            if (rrn < rr) {
                cur.x = xn;
                cur.y = yn;
                r = rn;
                const double drop = rr - rrn;
                rr = rrn;
                lambda = std::max(lambda * 0.25, 1e-14);
                accepted = true;
                if (drop <= 1e-6 * rr) iter = 60;  // converged plateau
                break;
            }
            lambda *= 10.0;
            if (lambda > 1e12) break;
        }
        if (!accepted) break;
    }
    cur.f = plane_objective(ctx, wk, cur.x, cur.y);
    return cur;
}

}  // namespace

SearchResult find_flat_plane(const SpaceConfig& cfg, const FundamentalPoint& pt,
                             const MetricOperator& op, std::uint64_t seed,
                             int restarts, double objective_gate) {
    if (restarts < 1) throw std::invalid_argument("find_flat_plane: restarts must be >= 1");
    const PlaneSearchContext ctx = build_plane_context(cfg, pt);
    PlaneWork wk(ctx);

    SphereOpt best;
    best.f = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(r)));
        SphereOpt res = minimize_on_spheres(ctx, wk, rng, 5000);
        if (res.f < best.f) best = std::move(res);
    }

    SearchResult out;
    out.best_objective = best.f;
    const AlgVec x = from_basis_coords(cfg.basis(Part::KPerpU), best.x);
    const AlgVec y = from_basis_coords(cfg.basis(Part::P), best.y);
    out.best_candidate = make_flat_witness(cfg, pt, x, y, op);
    if (best.f <= objective_gate) out.witness = out.best_candidate;
    return out;
}

double sphere_min_bracket(int n, std::uint64_t seed, int restarts) {
    if (n < 2) throw std::invalid_argument("sphere_min_bracket: n must be >= 2");
    if (restarts < 1) throw std::invalid_argument("sphere_min_bracket: restarts must be >= 1");

    const std::vector<AlgVec> q = sphere_complement_basis(n);
    const std::vector<AlgVec> gb = sp_basis(n);
    const int d = static_cast<int>(q.size());
    const int dg = static_cast<int>(gb.size());

    std::vector<Eigen::MatrixXd> c(static_cast<size_t>(d));
    for (int a = 0; a < d; ++a) {
        c[static_cast<size_t>(a)].resize(dg, d);
        for (int b = 0; b < d; ++b)
            c[static_cast<size_t>(a)].col(b) = basis_coords(
                gb, bracket(q[static_cast<size_t>(a)], q[static_cast<size_t>(b)]));
    }

    const auto objective = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
        Eigen::VectorXd m = Eigen::VectorXd::Zero(dg);
        for (int a = 0; a < d; ++a) m.noalias() += x[a] * (c[static_cast<size_t>(a)] * y);
        return m.squaredNorm();
    };
    const auto gradient = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                              Eigen::VectorXd& gx, Eigen::VectorXd& gy) {
        Eigen::MatrixXd dmat(dg, d);
        for (int a = 0; a < d; ++a)
            dmat.col(a).noalias() = c[static_cast<size_t>(a)] * y;
        const Eigen::VectorXd m = dmat * x;
        gx.noalias() = 2.0 * (dmat.transpose() * m);
        gy = Eigen::VectorXd::Zero(d);
        for (int a = 0; a < d; ++a)
            gy.noalias() += (2.0 * x[a]) * (c[static_cast<size_t>(a)].transpose() * m);
    };
    const auto retract = [](Eigen::VectorXd& x, Eigen::VectorXd& y) {
        x.normalize();
        y -= y.dot(x) * x;
        y.normalize();
    };

    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(r)));
        Eigen::VectorXd x(d), y(d);
        for (int i = 0; i < d; ++i) x[i] = rng.next_symmetric();
        for (int i = 0; i < d; ++i) y[i] = rng.next_symmetric();
        retract(x, y);

        Eigen::VectorXd gx, gy, prev_x, prev_y, prev_tx, prev_ty;
        bool have_prev = false;
        double f = objective(x, y);
        double window_f = f;
        for (int iter = 0; iter < 5000; ++iter) {
            gradient(x, y, gx, gy);
            // Tangential part for the orthonormal 2-frame constraint.
            const double xtgx = x.dot(gx), ytgy = y.dot(gy);
            const double xtgy = x.dot(gy), ytgx = y.dot(gx);
            const double mixed = 0.5 * (xtgy + ytgx);
            Eigen::VectorXd txg = gx - xtgx * x - mixed * y;
            Eigen::VectorXd tyg = gy - ytgy * y - mixed * x;
            const double gnorm = std::sqrt(txg.squaredNorm() + tyg.squaredNorm());
            if (gnorm <= 1e-12) break;

            double step = 0.1;
            if (have_prev) {
                const double num =
                    (x - prev_x).squaredNorm() + (y - prev_y).squaredNorm();
                const double den = (x - prev_x).dot(txg - prev_tx) +
                                   (y - prev_y).dot(tyg - prev_ty);
                if (den > 0.0 && num > 0.0) step = std::clamp(num / den, 1e-8, 1e3);
            }
            prev_x = x;
            prev_y = y;
            prev_tx = txg;
            prev_ty = tyg;
            have_prev = true;

            bool improved = false;
            Eigen::VectorXd xn, yn;
            double fn = f;
            while (step >= 1e-20) {
                xn = x - step * txg;
                yn = y - step * tyg;
                retract(xn, yn);
                fn = objective(xn, yn);
                if (fn < f) {
                    improved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!improved) break;
            x = xn;
            y = yn;
            f = fn;
            if ((iter + 1) % 100 == 0) {
                if (window_f - f <= 1e-6 * window_f) break;
                window_f = f;
            }
        }
        best = std::min(best, f);
    }
    return best;
}

}  // namespace spcurv
