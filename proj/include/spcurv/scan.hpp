#pragma once

#include <string>
#include <vector>

#include "spcurv/flat.hpp"

namespace spcurv {

struct ScanConfig {
    int n{2};
    double t{1.0};
    int resolution{200};
    double tol{1e-9};  // lift-curvature threshold a witness must meet
    std::uint64_t seed{42};
    int restarts{20};
    double margin{1e-3};  // inset keeping the grid inside the open square
    bool include_boundary{false};
    unsigned threads{0};  // 0: use all hardware threads
};

struct ScanRow {
    double theta{0.0};
    double alpha{0.0};
    double best_objective{0.0};
    bool flat_predicted{false};
    bool flat_found{false};
    double lift_numerator{0.0};
};

// One row of the scan at an arbitrary point, using the config's seed
// directly. Prediction is the closed-form locus test for n = 2 and region-Z
// membership for n >= 3; for n >= 3 inside Z the closed-form family witness
// is used before falling back to the numerical search.
ScanRow classify_point(const FundamentalPoint& pt, const ScanConfig& cfg);

// Full grid over [margin, pi/2 - margin]^2, resolution points per axis,
// rows ordered lexicographically by (theta index, alpha index). Each cell
// derives its sub-seed as seed XOR cell-index and cells are evaluated
// independently (possibly concurrently); output order never depends on
// completion order. With include_boundary set, rows for the boundary flat
// sets are appended: (theta_i, pi/2) for each grid theta, then
// (pi/2, alpha_j) for each grid alpha, then the corner (0, 0).
std::vector<ScanRow> grid_scan(const ScanConfig& cfg);

// Grid coordinate values used by grid_scan.
std::vector<double> scan_axis(const ScanConfig& cfg);

// CSV with header theta,alpha,best_objective,flat_predicted,flat_found,
// lift_numerator; floats at 17 significant digits, booleans 0/1, LF line
// endings, no trailing whitespace.
std::string scan_csv(const std::vector<ScanRow>& rows);

// JSON object with the full config and the rows under the same field names.
std::string scan_json(const ScanConfig& cfg, const std::vector<ScanRow>& rows);

}  // namespace spcurv
