#include "spcurv/scan.hpp"

#include <atomic>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace spcurv {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_config(const ScanConfig& cfg) {
    if (cfg.n < 2) throw std::invalid_argument("scan: n must be >= 2");
    if (cfg.resolution < 2) throw std::invalid_argument("scan: resolution must be >= 2");
    if (!(cfg.t > 0.0)) throw std::invalid_argument("scan: t must be positive");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("scan: tol must be positive");
    if (cfg.restarts < 1) throw std::invalid_argument("scan: restarts must be >= 1");
    if (!(cfg.margin > 0.0) || !(cfg.margin < kHalfPi / 2.0))
        throw std::invalid_argument("scan: margin out of range");
}

bool valid_with_lift_tol(const FlatWitness& w, double lift_tol) {
    return w.residuals.structural <= FlatWitness::kStructuralTol &&
           w.residuals.condition_b_norm <= FlatWitness::kConditionBTol &&
           w.residuals.condition_c_gram <= FlatWitness::kConditionCTol &&
           w.residuals.lift_numerator <= lift_tol;
}

ScanRow classify_with_seed(const FundamentalPoint& pt, const ScanConfig& cfg,
                           const SpaceConfig& space, const MetricOperator& op,
                           std::uint64_t seed) {
    ScanRow row;
    row.theta = pt.theta;
    row.alpha = pt.alpha;
    row.flat_predicted = cfg.n == 2 ? m2_flat_locus(pt) : in_region_z(pt);

    if (cfg.n >= 3 && in_region_z(pt)) {
        const FlatWitness w = family_n_witness(space, pt, Quaternion::unit_i(), op);
        if (valid_with_lift_tol(w, cfg.tol)) {
            const AlgVec xu = w.X * (1.0 / w.X.norm());
            const AlgVec yu = w.Y * (1.0 / w.Y.norm());
            row.best_objective = condition_objective(space, pt, xu, yu);
            row.flat_found = row.best_objective <= 1e-10;
            row.lift_numerator = w.residuals.lift_numerator;
            if (row.flat_found) return row;
        }
    }

    const SearchResult res = find_flat_plane(space, pt, op, seed, cfg.restarts);
    row.best_objective = res.best_objective;
    row.flat_found =
        res.witness.has_value() && valid_with_lift_tol(*res.witness, cfg.tol);
    row.lift_numerator = res.best_candidate->residuals.lift_numerator;
    return row;
}

}  // namespace

ScanRow classify_point(const FundamentalPoint& pt, const ScanConfig& cfg) {
    check_config(cfg);
    const SpaceConfig space(cfg.n);
    const MetricOperator op = MetricOperator::cheeger(space, cfg.t);
    return classify_with_seed(pt, cfg, space, op, cfg.seed);
}

std::vector<double> scan_axis(const ScanConfig& cfg) {
    std::vector<double> axis(static_cast<size_t>(cfg.resolution));
    const double lo = cfg.margin, hi = kHalfPi - cfg.margin;
    for (int i = 0; i < cfg.resolution; ++i)
        axis[static_cast<size_t>(i)] = lo + (hi - lo) * i / (cfg.resolution - 1);
    return axis;
}

std::vector<ScanRow> grid_scan(const ScanConfig& cfg) {
    check_config(cfg);
    const SpaceConfig space(cfg.n);
    const MetricOperator op = MetricOperator::cheeger(space, cfg.t);
    const std::vector<double> axis = scan_axis(cfg);

    std::vector<FundamentalPoint> points;
    points.reserve(static_cast<size_t>(cfg.resolution) * cfg.resolution);
    for (int it = 0; it < cfg.resolution; ++it)
        for (int ia = 0; ia < cfg.resolution; ++ia)
            points.push_back({axis[static_cast<size_t>(it)], axis[static_cast<size_t>(ia)]});
    if (cfg.include_boundary) {
        for (int it = 0; it < cfg.resolution; ++it)
            points.push_back({axis[static_cast<size_t>(it)], kHalfPi});
        for (int ia = 0; ia < cfg.resolution; ++ia)
            points.push_back({kHalfPi, axis[static_cast<size_t>(ia)]});
        points.push_back({0.0, 0.0});
    }

    std::vector<ScanRow> rows(points.size());
    std::atomic<size_t> cursor{0};
    const auto worker = [&]() {
        for (;;) {
            const size_t i = cursor.fetch_add(1);
            if (i >= points.size()) return;
            const std::uint64_t cell_seed = cfg.seed ^ static_cast<std::uint64_t>(i);
            rows[i] = classify_with_seed(points[i], cfg, space, op, cell_seed);
        }
    };

    unsigned nthreads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
    if (nthreads == 0) nthreads = 1;
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(points.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return rows;
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "theta,alpha,best_objective,flat_predicted,flat_found,lift_numerator\n";
    for (const ScanRow& r : rows) {
        out += fmt17(r.theta);
        out += ',';
        out += fmt17(r.alpha);
        out += ',';
        out += fmt17(r.best_objective);
        out += ',';
        out += r.flat_predicted ? '1' : '0';
        out += ',';
        out += r.flat_found ? '1' : '0';
        out += ',';
        out += fmt17(r.lift_numerator);
        out += '\n';
    }
    return out;
}

std::string scan_json(const ScanConfig& cfg, const std::vector<ScanRow>& rows) {
    nlohmann::json j;
    j["config"] = {{"n", cfg.n},
                   {"t", cfg.t},
                   {"resolution", cfg.resolution},
                   {"tol", cfg.tol},
                   {"seed", cfg.seed},
                   {"restarts", cfg.restarts},
                   {"margin", cfg.margin},
                   {"include_boundary", cfg.include_boundary},
                   {"threads", cfg.threads}};
    nlohmann::json jr = nlohmann::json::array();
    for (const ScanRow& r : rows)
        jr.push_back({{"theta", r.theta},
                      {"alpha", r.alpha},
                      {"best_objective", r.best_objective},
                      {"flat_predicted", r.flat_predicted},
                      {"flat_found", r.flat_found},
                      {"lift_numerator", r.lift_numerator}});
    j["rows"] = std::move(jr);
    return j.dump(2) + "\n";
}

}  // namespace spcurv
