#include "spcurv/topology.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace spcurv {

namespace {

GradedIntPoly var(const PolyRingPtr& r, const std::string& n) {
    return GradedIntPoly::variable(r, n);
}

// Elimination of y2^2 from a polynomial of Z[y1,y2,u] using the degree-4
// relation of the presentation, landing in Z[y1,u].
GradedIntPoly eliminate_y2(CircleQuotient space, const GradedIntPoly& p) {
    const PolyRingPtr r3 = ring_yu3();
    const PolyRingPtr r2 = ring_yu2();
    const GradedIntPoly y1 = var(r3, "y1");
    const GradedIntPoly u = var(r3, "u");
    // y2^2 = 3u^2 - y1^2 for R2; y2^2 = -y1^2 - u^2 for Q2.
    const GradedIntPoly repl = space == CircleQuotient::R2
                                   ? 3 * u.pow(2) - y1.pow(2)
                                   : -(y1.pow(2) + u.pow(2));
    const GradedIntPoly substituted = substitute_square(p, "y2", repl);
    for (const auto& [m, c] : substituted.terms())
        if (m[static_cast<size_t>(r3->index_of("y2"))] != 0)
            throw std::logic_error("eliminate_y2: y2 survived the substitution");
    const RingMap drop(r3, r2,
                       {var(r2, "y1"), GradedIntPoly::zero(r2), var(r2, "u")});
    return drop.apply(substituted);
}

std::string factor_string(const QuotientGroup& g) {
    std::string out;
    for (size_t i = 0; i < g.torsion.size(); ++i) {
        if (i) out += " + ";
        out += "Z" + std::to_string(g.torsion[i]);
    }
    for (int i = 0; i < g.free_rank; ++i) {
        if (!out.empty()) out += " + ";
        out += "Z";
    }
    return out.empty() ? "0" : out;
}

std::string factor_string(const std::vector<long long>& torsion) {
    QuotientGroup g;
    g.torsion = torsion;
    return factor_string(g);
}

}  // namespace

PolyRingPtr ring_x3() {
    static const PolyRingPtr r =
        make_ring({{"x1", 2}, {"x2", 2}, {"x3", 2}});
    return r;
}

PolyRingPtr ring_yu3() {
    static const PolyRingPtr r =
        make_ring({{"y1", 2}, {"y2", 2}, {"u", 2}});
    return r;
}

PolyRingPtr ring_yu2() {
    static const PolyRingPtr r = make_ring({{"y1", 2}, {"u", 2}});
    return r;
}

GradedIntPoly sum_root_squares() {
    const PolyRingPtr r = ring_x3();
    const GradedIntPoly x[3] = {var(r, "x1"), var(r, "x2"), var(r, "x3")};
    GradedIntPoly total = GradedIntPoly::zero(r);
    for (const auto& xi : x) total += (2 * xi).pow(2);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            total += (x[i] + x[j]).pow(2);
            total += (x[i] - x[j]).pow(2);
        }
    return total;
}

bool sigma_root_identity() {
    const GradedIntPoly sigma1 =
        elementary_symmetric_squares(1, ring_x3(), {"x1", "x2", "x3"});
    return sum_root_squares() == 8 * sigma1;
}

std::vector<GradedIntPoly> presentation_ideal(CircleQuotient space) {
    const PolyRingPtr rx = ring_x3();
    const PolyRingPtr ry = ring_yu3();
    const GradedIntPoly y1 = var(ry, "y1"), y2 = var(ry, "y2"), u = var(ry, "u");
    const GradedIntPoly zero = GradedIntPoly::zero(ry);

    // Torus restrictions of the second (K) and first (H) factor embeddings.
    const RingMap k_map =
        space == CircleQuotient::Q2
            ? RingMap(rx, ry, {y1, u, y2})   // diag(q1, z, q2)
            : RingMap(rx, ry, {y1, zero, y2});  // diag(q1, 1, q2)
    const RingMap h_map =
        space == CircleQuotient::Q2
            ? RingMap(rx, ry, {zero, zero, zero})  // trivial H
            : RingMap(rx, ry, {u, u, u});          // diagonal circle

    std::vector<GradedIntPoly> gens;
    for (int k = 1; k <= 3; ++k) {
        const GradedIntPoly sigma =
            elementary_symmetric_squares(k, rx, {"x1", "x2", "x3"});
        GradedIntPoly rel = k_map.apply(sigma) - h_map.apply(sigma);
        if (!rel.is_zero() && rel.terms().rbegin()->second < 0) rel = -rel;
        gens.push_back(std::move(rel));
    }
    return gens;
}

std::vector<GradedIntPoly> reduced_ideal(CircleQuotient space) {
    const PolyRingPtr r2 = ring_yu2();
    const GradedIntPoly y1 = var(r2, "y1"), u = var(r2, "u");
    if (space == CircleQuotient::R2)
        return {3 * u.pow(4) - 3 * y1.pow(2) * u.pow(2) + y1.pow(4), u.pow(6)};
    return {y1.pow(4) + y1.pow(2) * u.pow(2) + u.pow(4), u.pow(6)};
}

GradedIntPoly presentation_involution(const GradedIntPoly& p) {
    const PolyRingPtr r2 = ring_yu2();
    const GradedIntPoly repl = var(r2, "u").pow(2) - var(r2, "y1").pow(2);
    return substitute_square(p, "y1", repl);
}

bool check_presentation_isomorphism() {
    const PolyRingPtr r2 = ring_yu2();
    const GradedIntPoly y1 = var(r2, "y1"), u = var(r2, "u");
    const auto i2 = reduced_ideal(CircleQuotient::R2);
    const auto j2 = reduced_ideal(CircleQuotient::Q2);

    // Involution on the square of the generator and on u.
    if (presentation_involution(presentation_involution(y1.pow(2))) != y1.pow(2))
        return false;
    if (presentation_involution(u) != u) return false;

    // The two displayed images, exactly.
    if (presentation_involution(i2[0]) !=
        y1.pow(4) + y1.pow(2) * u.pow(2) + u.pow(4))
        return false;
    if (presentation_involution(j2[0]) !=
        y1.pow(4) - 3 * y1.pow(2) * u.pow(2) + 3 * u.pow(4))
        return false;

    // Membership of every image in the opposite ideal.
    for (const auto& g : i2)
        if (!ideal_member(presentation_involution(g), j2, 12)) return false;
    for (const auto& g : j2)
        if (!ideal_member(presentation_involution(g), i2, 12)) return false;
    return true;
}

GradedIntPoly pontryagin_p1(CircleQuotient space) {
    const PolyRingPtr rx = ring_x3();
    const PolyRingPtr ry = ring_yu3();
    const GradedIntPoly y1 = var(ry, "y1"), y2 = var(ry, "y2"), u = var(ry, "u");
    const GradedIntPoly zero = GradedIntPoly::zero(ry);

    if (!sigma_root_identity())
        throw std::logic_error("pontryagin_p1: root-square identity failed");

    const RingMap k_map = space == CircleQuotient::Q2
                              ? RingMap(rx, ry, {y1, u, y2})
                              : RingMap(rx, ry, {y1, zero, y2});
    // Total square sum restricted along K, minus the squares of the roots
    // 2*y1 and 2*y2 of the Sp(1)^2 factor; the circle contributes none.
    GradedIntPoly p1 = k_map.apply(sum_root_squares());
    p1 -= (2 * y1).pow(2) + (2 * y2).pow(2);
    return eliminate_y2(space, p1);
}

QuotientReport quotient_mod_p1(CircleQuotient space) {
    const GradedIntPoly p1 = pontryagin_p1(space);
    const PolyRingPtr r2 = ring_yu2();

    // Coordinates of p1 in the degree-4 basis (y1^2, u^2).
    long long c_y1sq = 0, c_usq = 0;
    for (const auto& [m, c] : p1.terms()) {
        const int ey = m[static_cast<size_t>(r2->index_of("y1"))];
        const int eu = m[static_cast<size_t>(r2->index_of("u"))];
        if (ey == 2 && eu == 0)
            c_y1sq = c;
        else if (ey == 0 && eu == 2)
            c_usq = c;
        else
            throw std::logic_error("quotient_mod_p1: p1 is not of degree 4");
    }

    AbelianPresentation pres;
    pres.rank = 2;
    pres.relations = {{c_y1sq, c_usq}};
    pres.modulus = 24;

    QuotientReport rep;
    rep.computed = quotient_group(pres);
    rep.claimed = space == CircleQuotient::Q2 ? std::vector<long long>{6, 24}
                                              : std::vector<long long>{2, 24};
    rep.matches =
        rep.computed.free_rank == 0 && rep.computed.torsion == rep.claimed;
    return rep;
}

TopologyReport topology_report() {
    TopologyReport rep;
    rep.sigma_check = sigma_root_identity();
    rep.prop54 = check_presentation_isomorphism();
    rep.p1_q2 = pontryagin_p1(CircleQuotient::Q2).str();
    rep.p1_r2 = pontryagin_p1(CircleQuotient::R2).str();
    rep.quotient_q2 = quotient_mod_p1(CircleQuotient::Q2);
    rep.quotient_r2 = quotient_mod_p1(CircleQuotient::R2);
    return rep;
}

std::string topology_report_json(const TopologyReport& report) {
    nlohmann::json j;
    j["sigma_check"] = report.sigma_check;
    j["prop54"] = report.prop54;
    j["p1_q2"] = report.p1_q2;
    j["p1_r2"] = report.p1_r2;
    const auto quot = [](const QuotientReport& q) {
        nlohmann::json o;
        o["computed"] = factor_string(q.computed);
        o["claimed"] = factor_string(q.claimed);
        o["matches"] = q.matches;
        return o;
    };
    j["quotient_q2"] = quot(report.quotient_q2);
    j["quotient_r2"] = quot(report.quotient_r2);
    return j.dump(2) + "\n";
}

}  // namespace spcurv
