#include "spcurv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "spcurv/scan.hpp"
#include "spcurv/topology.hpp"

namespace spcurv {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

Quaternion random_quat(Rng& rng) {
    return {rng.next_symmetric(), rng.next_symmetric(), rng.next_symmetric(),
            rng.next_symmetric()};
}

// Orthonormalize a plane in the deformed metric so the numerator reads as a
// sectional value.
double normalized_numerator(const AlgVec& a0, const AlgVec& b0,
                            const MetricOperator& op) {
    AlgVec a = a0;
    a *= 1.0 / std::sqrt(op.inner1(a, a));
    AlgVec b = b0 - op.inner1(b0, a) * a;
    b *= 1.0 / std::sqrt(op.inner1(b, b));
    return plane_curvature(a, b, op).numerator;
}

}  // namespace

// --- 1. flat locus reproduction on the fundamental domain, n = 2 ------------

namespace {

struct LocusScanStats {
    int found_violations{0};
    int found_count{0};
    double min_far_objective{1e300};
    int far_count{0};
    int basin_count{0};
    int basin_violations{0};
};

// The flat set degenerates quartically at the two corners of the domain:
// (0,0) lies on it, and the two boundary flat lines cross at (pi/2, pi/2),
// so both projected images shrink together there. Inside a fixed corner
// neighborhood the positivity margin is therefore held against an
// empirical quartic floor rather than the flat 1e-6 used elsewhere.
constexpr double kCornerBasinRadius = 0.08;
constexpr double kQuarticFloor = 0.01;

LocusScanStats locus_scan_stats(const std::vector<ScanRow>& rows, double cell) {
    LocusScanStats st;
    const double near_cell = std::sqrt(2.0) * cell;
    const double far_cell = 2.0 * std::sqrt(2.0) * cell;
    for (const ScanRow& r : rows) {
        const double dist = m2_locus_distance({r.theta, r.alpha});
        if (r.flat_found || r.best_objective <= 1e-10) {
            ++st.found_count;
            if (dist > near_cell) ++st.found_violations;
        }
        if (dist > far_cell) {
            const double corner =
                std::min(std::hypot(r.theta, r.alpha),
                         std::hypot(kHalfPi - r.theta, kHalfPi - r.alpha));
            if (corner > kCornerBasinRadius) {
                ++st.far_count;
                st.min_far_objective = std::min(st.min_far_objective, r.best_objective);
            } else {
                ++st.basin_count;
                if (r.best_objective <= kQuarticFloor * dist * dist * dist * dist)
                    ++st.basin_violations;
            }
        }
    }
    return st;
}

}  // namespace

CriterionResult criterion1_flat_locus(const VerifyOptions& opts, std::ostream* timing) {
    const int res = opts.locus_resolution;
    ScanConfig sc;
    sc.n = 2;
    sc.t = opts.t;
    sc.resolution = res;
    sc.seed = opts.seed;
    sc.restarts = opts.restarts;
    sc.threads = opts.threads;

    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<ScanRow> rows = grid_scan(sc);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (timing) *timing << "flat-locus scan " << res << "x" << res << ": " << wall
                        << " s\n";
    const bool time_ok = wall < 1800.0;

    const double cell = (kHalfPi - 2 * sc.margin) / (res - 1);
    const LocusScanStats st = locus_scan_stats(rows, cell);

    // Every grid point within 1e-3 of the flat set must yield a certified
    // witness, built at the projection of the point onto the set.
    const SpaceConfig space(2);
    const MetricOperator op = MetricOperator::cheeger(space, opts.t);
    int band_count = 0, band_failures = 0;
    for (const ScanRow& r : rows) {
        const FundamentalPoint pt{r.theta, r.alpha};
        if (m2_locus_distance(pt) > 1.0000001e-3) continue;
        ++band_count;
        const FlatWitness w = m2_witness(space, m2_locus_projection(pt), op);
        if (!w.valid) ++band_failures;
    }

    // Refining the grid keeps the found-flat/locus agreement.
    int refine_violations = 0;
    for (const int sub_res : {res / 4, res / 2}) {
        if (sub_res < 2) continue;
        ScanConfig sub = sc;
        sub.resolution = sub_res;
        const auto sub_rows = grid_scan(sub);
        const double sub_cell = (kHalfPi - 2 * sc.margin) / (sub_res - 1);
        refine_violations += locus_scan_stats(sub_rows, sub_cell).found_violations;
    }

    const bool far_ok = (st.far_count == 0 || st.min_far_objective > 1e-6) &&
                        st.basin_violations == 0;
    CriterionResult out;
    out.name = "1-flat-locus-n2";
    out.pass = time_ok && st.found_violations == 0 && band_failures == 0 && far_ok &&
               refine_violations == 0;
    out.detail = "under-30min " + std::string(time_ok ? "yes" : "NO") + "; grid " +
                 std::to_string(res) + "x" + std::to_string(res) + "; found-flat " +
                 std::to_string(st.found_count) + " rows, " +
                 std::to_string(st.found_violations) + " off-curve; band " +
                 std::to_string(band_count) + " rows, " +
                 std::to_string(band_failures) + " without witness; min far objective " +
                 num(st.min_far_objective) + " (> 1e-06, " + std::to_string(st.far_count) +
                 " rows); corner basins " + std::to_string(st.basin_count) + " rows, " +
                 std::to_string(st.basin_violations) +
                 " under the quartic floor; refinement violations " +
                 std::to_string(refine_violations);
    return out;
}

// --- 2. the open flat region for n = 3 --------------------------------------

CriterionResult criterion2_open_flat_set(const VerifyOptions& opts) {
    const SpaceConfig cfg(3);
    const MetricOperator op = MetricOperator::cheeger(cfg, opts.t);
    Rng rng(Rng::derive(opts.seed, 0xC2));

    const double s2 = std::sqrt(0.5), s3 = 1.0 / std::sqrt(3.0);
    const Quaternion bs[5] = {Quaternion::unit_i(), Quaternion::unit_j(),
                              Quaternion::unit_k(), Quaternion{0, s2, s2, 0},
                              Quaternion{0, s3, s3, s3}};

    int successes = 0, total = 0;
    double max_b = 0.0, max_c = 0.0, max_lift = 0.0;
    int found_points = 0;
    while (found_points < 100) {
        const FundamentalPoint pt{rng.next_unit() * kHalfPi, rng.next_unit() * kHalfPi};
        if (!in_region_z(pt)) continue;
        ++found_points;
        for (const Quaternion& b : bs) {
            ++total;
            const FlatWitness w = family_n_witness(cfg, pt, b, op);
            max_b = std::max(max_b, w.residuals.condition_b_norm);
            max_c = std::max(max_c, w.residuals.condition_c_gram);
            max_lift = std::max(max_lift, w.residuals.lift_numerator);
            if (w.residuals.condition_b_norm <= 1e-12 &&
                w.residuals.condition_c_gram <= 1e-11 &&
                w.residuals.lift_numerator <= 1e-10)
                ++successes;
        }
    }

    CriterionResult out;
    out.name = "2-open-flat-set-n3";
    out.pass = successes == total && total == 500;
    out.detail = std::to_string(successes) + "/" + std::to_string(total) +
                 " witnesses; max commutator " + num(max_b) + ", max gram " +
                 num(max_c) + ", max lift numerator " + num(max_lift);
    return out;
}

// --- 3. the closed-form solution of the dependency system -------------------

CriterionResult criterion3_mu_eta_system(const VerifyOptions& opts) {
    Rng rng(Rng::derive(opts.seed, 0xC3));
    int checked = 0;
    double max_resid = 0.0, max_det_err = 0.0;
    while (checked < 100) {
        const FundamentalPoint pt{rng.next_unit() * kHalfPi, rng.next_unit() * kHalfPi};
        const MuEta me = mu_eta(pt);
        if (!me.defined) continue;
        ++checked;
        const double st = std::sin(pt.theta), ct = std::cos(pt.theta);
        const double sa = std::sin(pt.alpha), ca = std::cos(pt.alpha);
        const double musq = me.mu * me.mu, etamu = me.eta * me.mu;
        const double t1a = musq * ca * (ct * ct - st * st);
        const double t1b = etamu * ca * ca * ct * st;
        const double rhs1 = ca * (st * st - ct * ct);
        const double t2a = musq * sa * st;
        const double t2b = etamu * ca * sa * ct;
        const double rhs2 = ca * ca * st / sa;
        // Residuals relative to the size of the cancelling terms.
        max_resid = std::max(max_resid, std::abs(t1a - t1b - rhs1) /
                                            std::max({1.0, std::abs(t1a), std::abs(t1b)}));
        max_resid = std::max(max_resid, std::abs(t2a + t2b - rhs2) /
                                            std::max({1.0, std::abs(t2a), std::abs(t2b)}));
        const double det =
            ca * (ct * ct - st * st) * (ca * sa * ct) + sa * st * (ca * ca * ct * st);
        max_det_err = std::max(
            max_det_err, std::abs(det - ca * ca * sa * ct * ct * ct) /
                             std::max(1.0, std::abs(det)));
    }
    CriterionResult out;
    out.name = "3-mu-eta-system";
    out.pass = max_resid <= 1e-12 && max_det_err <= 1e-14;
    out.detail = "100 region points; max system residual " + num(max_resid) +
                 " (<= 1e-12); max determinant error " + num(max_det_err);
    return out;
}

// --- 4. the curvature engine against its oracle ------------------------------

CriterionResult criterion4_curvature_oracle(const VerifyOptions& opts) {
    const SpaceConfig cfg(2);
    const MetricOperator bi = MetricOperator::bi_invariant(cfg);
    const MetricOperator op = MetricOperator::cheeger(cfg, opts.t);
    Rng rng(Rng::derive(opts.seed, 0xC4));

    double max_rel = 0.0;
    for (int it = 0; it < 10000; ++it) {
        const AlgVec x = random_alg_vec(rng, 3), y = random_alg_vec(rng, 3);
        const double got = plane_curvature(x, y, bi).numerator;
        const double want = 0.25 * inner0(bracket(x, y), bracket(x, y));
        max_rel = std::max(max_rel, std::abs(got - want) / std::max(std::abs(want), 1e-30));
    }

    // Zero side: commuting K x P pairs with mixing.
    double max_zero = 0.0;
    for (int it = 0; it < 1000; ++it) {
        QMatrix xk(3);
        xk.at(1, 1) = random_quat(rng).im();
        QMatrix yp(3);
        const Quaternion c = random_quat(rng);
        yp.at(0, 2) = c;
        yp.at(2, 0) = -c.conj();
        AlgVec x(std::move(xk));
        AlgVec y(std::move(yp));
        x *= 1.0 / x.norm();
        y *= 1.0 / y.norm();
        const AlgVec xm = x + rng.next_symmetric() * y;
        const double numer = std::abs(
            plane_curvature(op.phi_inv(xm), op.phi_inv(y), op).numerator);
        // Scale-normalize: the inputs have bounded norms, compare per unit.
        const double g = op.inner1(op.phi_inv(xm), op.phi_inv(xm)) *
                         op.inner1(op.phi_inv(y), op.phi_inv(y));
        max_zero = std::max(max_zero, numer / std::max(1.0, g));
    }

    // Nonzero side, two families: a K x P pair with a visible commutator,
    // and a commuting pair whose K parts fail to commute.
    double min_pos = 1e300;
    int done = 0;
    while (done < 500) {
        const AlgVec x = random_alg_vec_in(rng, cfg, Part::K);
        const AlgVec y = random_alg_vec_in(rng, cfg, Part::P);
        if (bracket(x, y).norm() < 1e-2 * x.norm() * y.norm()) continue;
        ++done;
        min_pos = std::min(min_pos,
                           normalized_numerator(op.phi_inv(x), op.phi_inv(y), op));
    }
    done = 0;
    while (done < 500) {
        AlgVec x = random_alg_vec(rng, 3);
        x *= 1.0 / x.norm();
        AlgVec y(x.mat() * x.mat() * x.mat());
        y *= 1.0 / y.norm();
        if (bracket(project(x, Part::K, cfg), project(y, Part::K, cfg)).norm() < 5e-2)
            continue;
        const double gram = inner0(x, x) * inner0(y, y) - inner0(x, y) * inner0(x, y);
        if (gram < 1e-2) continue;  // nearly dependent pair, no plane
        ++done;
        min_pos = std::min(min_pos,
                           normalized_numerator(op.phi_inv(x), op.phi_inv(y), op));
    }

    // Tensor symmetries and the cyclic identity.
    double max_sym = 0.0;
    const auto r = [&](const AlgVec& a, const AlgVec& b, const AlgVec& c) {
        return connection(a, connection(b, c, op), op) -
               connection(b, connection(a, c, op), op) -
               connection(bracket(a, b), c, op);
    };
    for (int it = 0; it < 100; ++it) {
        const AlgVec a = random_alg_vec(rng, 3), b = random_alg_vec(rng, 3),
                     c = random_alg_vec(rng, 3), d = random_alg_vec(rng, 3);
        const double rabcd = op.inner1(r(a, b, c), d);
        max_sym = std::max(max_sym, std::abs(rabcd + op.inner1(r(b, a, c), d)));
        max_sym = std::max(max_sym, std::abs(rabcd + op.inner1(r(a, b, d), c)));
        max_sym = std::max(max_sym, std::abs(rabcd - op.inner1(r(c, d, a), b)));
        max_sym = std::max(max_sym, (r(a, b, c) + r(b, c, a) + r(c, a, b)).norm());
    }

    CriterionResult out;
    out.name = "4-curvature-oracle";
    out.pass = max_rel <= 1e-10 && max_zero <= 1e-11 && min_pos >= 1e-6 &&
               max_sym <= 1e-10;
    out.detail = "bi-invariant rel err " + num(max_rel) +
                 " (1e4 pairs); zero side " + num(max_zero) + " (<= 1e-11); nonzero side " +
                 num(min_pos) + " (>= 1e-06); symmetry/cyclic " + num(max_sym);
    return out;
}

// --- 5. the submersion splitting ---------------------------------------------

CriterionResult criterion5_submersion_geometry(const VerifyOptions& opts) {
    bool dims_ok = true, rho_ok = true;
    double max_pair = 0.0, min_sigma = 1e300;
    for (const int n : {2, 3}) {
        const SpaceConfig cfg(n);
        const MetricOperator op = MetricOperator::cheeger(cfg, opts.t);
        Rng rng(Rng::derive(opts.seed, 0xC500 + static_cast<std::uint64_t>(n)));
        for (int it = 0; it < 100; ++it) {
            const GroupElem g = random_group_element(rng.next_u64(), cfg.m());
            const auto horiz = horizontal_basis(cfg, g, opts.t);
            const auto vert = vertical_basis(cfg, g);
            if (static_cast<int>(horiz.size()) != cfg.dim_g() - cfg.dim_u())
                dims_ok = false;
            if (static_cast<int>(vert.size()) != cfg.dim_g() + cfg.dim_u())
                dims_ok = false;
            for (const TangentPair& h : horiz)
                for (const TangentPair& v : vert)
                    max_pair = std::max(max_pair,
                                        std::abs(op.inner1(h.first, v.first) +
                                                 op.inner1(h.second, v.second)));
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(rho_matrix(cfg, g));
            const double sigma = svd.singularValues()[svd.singularValues().size() - 1];
            min_sigma = std::min(min_sigma, sigma);
            if (sigma <= 1e-8) rho_ok = false;
        }
        // Closed-form dimensions for this n.
        const int want_h = cfg.dim_g() - cfg.dim_u();
        const int want_v = cfg.dim_g() + cfg.dim_u();
        if (n == 2 && (want_h != 15 || want_v != 27)) dims_ok = false;
        if (n == 3 && (want_h != 23 || want_v != 49)) dims_ok = false;
    }
    CriterionResult out;
    out.name = "5-submersion-geometry";
    out.pass = dims_ok && rho_ok && max_pair <= 1e-10;
    out.detail = std::string("dimensions 15/27 (n=2), 23/49 (n=3) ") +
                 (dims_ok ? "ok" : "WRONG") + "; max horizontal-vertical pairing " +
                 num(max_pair) + " (<= 1e-10); min rho singular value " + num(min_sigma) +
                 " (> 1e-08)";
    return out;
}

// --- 6. orbit invariants and the fundamental-domain reduction ----------------

CriterionResult criterion6_orbit_reduction(const VerifyOptions& opts) {
    const SpaceConfig cfg(2);
    Rng rng(Rng::derive(opts.seed, 0xC6));
    double max_inv = 0.0;
    for (int it = 0; it < 1000; ++it) {
        const GroupElem g1 = random_group_element(rng.next_u64(), 3);
        const GroupElem g2 = random_group_element(rng.next_u64(), 3);
        const GroupElem g = random_group_element(rng.next_u64(), 3);
        const GroupElem k = random_k_element(cfg, rng.next_u64());
        const GroupElem nn = random_n_element(cfg, rng.next_u64());
        const GroupElem m1(g.mat() * g1.mat() * k.mat().dagger());
        const GroupElem m2(g.mat() * g2.mat() * nn.mat().dagger());
        const OrbitInvariants a = v_segments(cfg, GroupElem(g2.mat().dagger() * g1.mat()));
        const OrbitInvariants b = v_segments(cfg, GroupElem(m2.mat().dagger() * m1.mat()));
        max_inv = std::max({max_inv, std::abs(a.r0 - b.r0), std::abs(a.rn - b.rn),
                            std::abs(a.rn1 - b.rn1)});
    }

    const GroupElem e = GroupElem::identity(3);
    double max_round = 0.0;
    for (int i = 0; i < 40; ++i)
        for (int j = 0; j < 40; ++j) {
            const FundamentalPoint pt{1e-3 + (kHalfPi - 2e-3) * i / 39.0,
                                      1e-3 + (kHalfPi - 2e-3) * j / 39.0};
            const ReducedPoint rp = reduce_to_f(cfg, f_matrix(cfg, pt), e);
            max_round = std::max({max_round, std::abs(rp.point.theta - pt.theta),
                                  std::abs(rp.point.alpha - pt.alpha)});
        }

    CriterionResult out;
    out.name = "6-orbit-reduction";
    out.pass = max_inv <= 1e-12 && max_round <= 1e-10;
    out.detail = "invariant drift " + num(max_inv) +
                 " over 1000 actions (<= 1e-12); round-trip error " + num(max_round) +
                 " on 40x40 grid (<= 1e-10)";
    return out;
}

// --- 7. positivity of the sphere metric --------------------------------------

CriterionResult criterion7_sphere_positivity(const VerifyOptions& opts) {
    const double best = sphere_min_bracket(2, Rng::derive(opts.seed, 0xC7), 50);
    CriterionResult out;
    out.name = "7-sphere-positivity";
    out.pass = best > 1e-3;
    out.detail = "min squared commutator over orthonormal pairs: " + num(best) +
                 " (> 1e-03, 50 restarts)";
    return out;
}

// --- 8. the exact cohomology computations ------------------------------------

CriterionResult criterion8_topology(const VerifyOptions&) {
    const TopologyReport rep = topology_report();
    CriterionResult out;
    out.name = "8-topology";
    out.pass = rep.sigma_check && rep.prop54 && rep.p1_q2 == "4*u^2" &&
               rep.p1_r2 == "12*u^2";
    const auto factors = [](const QuotientGroup& g) {
        std::string s;
        for (size_t i = 0; i < g.torsion.size(); ++i) {
            if (i) s += "+";
            s += "Z" + std::to_string(g.torsion[i]);
        }
        return s.empty() ? std::string("0") : s;
    };
    out.detail = "root-square sum 8*sigma1 " +
                 std::string(rep.sigma_check ? "ok" : "WRONG") +
                 "; presentation involution " + (rep.prop54 ? "ok" : "WRONG") +
                 "; p1 " + rep.p1_q2 + " / " + rep.p1_r2 + "; quotients computed " +
                 factors(rep.quotient_q2.computed) + " / " +
                 factors(rep.quotient_r2.computed) +
                 (rep.quotient_q2.matches && rep.quotient_r2.matches
                      ? " (match the published groups)"
                      : " (differ from the published groups; reported as an open "
                        "question, not a failure)");
    return out;
}

// --- supporting suites --------------------------------------------------------

std::vector<CriterionResult> algebra_suite(const VerifyOptions& opts) {
    std::vector<CriterionResult> out;
    Rng rng(Rng::derive(opts.seed, 0xA1));

    {
        double worst = 0.0, worst_norm = 0.0;
        for (int it = 0; it < 10000; ++it) {
            const Quaternion p = random_quat(rng), q = random_quat(rng);
            const Quaternion pq = p * q;
            // Left-multiplication representation acting on the components.
            const Quaternion cols[4] = {Quaternion::real(1), Quaternion::unit_i(),
                                        Quaternion::unit_j(), Quaternion::unit_k()};
            Quaternion via{0, 0, 0, 0};
            const double comps[4] = {q.w, q.x, q.y, q.z};
            for (int c = 0; c < 4; ++c) via += comps[c] * (p * cols[c]);
            worst = std::max(worst, (via - pq).norm());
            worst_norm = std::max(worst_norm, std::abs(pq.norm() - p.norm() * q.norm()));
        }
        out.push_back({"algebra-quaternion-oracle", worst < 1e-13 && worst_norm < 1e-12,
                       "representation deviation " + num(worst) +
                           "; norm multiplicativity " + num(worst_norm) +
                           " over 1e4 pairs"});
    }

    {
        double worst_unit = 0.0, worst_inv = 0.0;
        for (int it = 0; it < 50; ++it) {
            AlgVec x = random_alg_vec(rng, 3);
            x *= (0.2 + 4.8 * rng.next_unit()) / x.norm();
            const GroupElem g = expm(x.mat());
            worst_unit = std::max(worst_unit, g.mat().unitarity_defect());
            const GroupElem gi = expm((-x).mat());
            worst_inv = std::max(worst_inv, (g.mat() * gi.mat() -
                                             QMatrix::identity(3)).frobenius_norm());
        }
        out.push_back({"algebra-exponential", worst_unit < 1e-12 && worst_inv < 1e-11,
                       "unitarity defect " + num(worst_unit) + "; inverse defect " +
                           num(worst_inv)});
    }

    {
        double worst = 0.0;
        for (int it = 0; it < 1000; ++it) {
            const AlgVec x = random_alg_vec(rng, 3), y = random_alg_vec(rng, 3),
                         z = random_alg_vec(rng, 3);
            worst = std::max(worst, (bracket(x, bracket(y, z)) +
                                     bracket(y, bracket(z, x)) +
                                     bracket(z, bracket(x, y))).norm());
        }
        out.push_back({"algebra-jacobi", worst < 1e-11,
                       "max cyclic bracket sum " + num(worst) + " over 1e3 triples"});
    }

    {
        bool ok = true;
        double worst = 0.0;
        for (const int n : {2, 3, 4}) {
            const SpaceConfig cfg(n);
            ok = ok && cfg.dim_g() == (n + 1) * (2 * n + 3) &&
                 cfg.dim_k() == n * (2 * n + 1) + 3 &&
                 cfg.dim_u() == (n - 1) * (2 * n - 1) + 3 && cfg.dim_p() == 4 * n;
            Rng prng(Rng::derive(opts.seed, 0xA4 + static_cast<std::uint64_t>(n)));
            for (int it = 0; it < 100; ++it) {
                const AlgVec a = random_alg_vec_in(prng, cfg, Part::P);
                const AlgVec b = random_alg_vec_in(prng, cfg, Part::P);
                worst = std::max(worst, project(bracket(a, b), Part::P, cfg).norm());
            }
        }
        out.push_back({"algebra-structure", ok && worst < 1e-12,
                       std::string("dimension ledger ") + (ok ? "ok" : "WRONG") +
                           "; symmetric-pair defect " + num(worst)});
    }
    return out;
}

CriterionResult curvature_floor(const VerifyOptions& opts) {
    const SpaceConfig cfg(2);
    Rng rng(Rng::derive(opts.seed, 0xCF));
    double least = 1e300;
    for (const double t : {0.1, 1.0, 10.0}) {
        const MetricOperator op = MetricOperator::cheeger(cfg, t);
        for (int it = 0; it < 100000; ++it) {
            const AlgVec x = random_alg_vec(rng, 3), y = random_alg_vec(rng, 3);
            const PlaneCurvature pc = plane_curvature(x, y, op);
            if (pc.sec) least = std::min(least, *pc.sec);
        }
    }
    return {"curvature-floor", least >= -1e-9,
            "least sectional value over 1e5 planes per t in {0.1, 1, 10}: " + num(least)};
}

std::vector<CriterionResult> run_suite(const std::string& suite,
                                       const VerifyOptions& opts,
                                       std::ostream* timing) {
    std::vector<CriterionResult> out;
    const auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (want("algebra")) {
        const auto a = algebra_suite(opts);
        out.insert(out.end(), a.begin(), a.end());
    }
    if (want("curvature")) {
        out.push_back(criterion4_curvature_oracle(opts));
        out.push_back(curvature_floor(opts));
        out.push_back(criterion7_sphere_positivity(opts));
    }
    if (want("flatness")) {
        out.push_back(criterion1_flat_locus(opts, timing));
        out.push_back(criterion2_open_flat_set(opts));
        out.push_back(criterion3_mu_eta_system(opts));
    }
    if (want("orbits")) {
        out.push_back(criterion5_submersion_geometry(opts));
        out.push_back(criterion6_orbit_reduction(opts));
    }
    if (want("topology")) {
        out.push_back(criterion8_topology(opts));
    }
    if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

int report_results(const std::vector<CriterionResult>& results, std::ostream& os) {
    bool all = true;
    for (const CriterionResult& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " | " << r.detail << "\n";
        all = all && r.pass;
    }
    os << (all ? "verification passed" : "verification FAILED") << "\n";
    return all ? 0 : 1;
}

}  // namespace spcurv
