#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace spcurv {

struct CriterionResult {
    std::string name;
    bool pass{false};
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed{42};
    int restarts{20};
    double t{1.0};
    int locus_resolution{200};
    unsigned threads{0};
};

// The numbered checks; each is deterministic for fixed options and prints
// no timing information (wall-clock data goes to the timing sink when one
// is provided).
CriterionResult criterion1_flat_locus(const VerifyOptions& opts,
                                      std::ostream* timing = nullptr);
CriterionResult criterion2_open_flat_set(const VerifyOptions& opts);
CriterionResult criterion3_mu_eta_system(const VerifyOptions& opts);
CriterionResult criterion4_curvature_oracle(const VerifyOptions& opts);
CriterionResult criterion5_submersion_geometry(const VerifyOptions& opts);
CriterionResult criterion6_orbit_reduction(const VerifyOptions& opts);
CriterionResult criterion7_sphere_positivity(const VerifyOptions& opts);
CriterionResult criterion8_topology(const VerifyOptions& opts);

// Supporting suites beyond the numbered checks.
std::vector<CriterionResult> algebra_suite(const VerifyOptions& opts);
CriterionResult curvature_floor(const VerifyOptions& opts);

// suite is one of: all, algebra, curvature, flatness, orbits, topology.
std::vector<CriterionResult> run_suite(const std::string& suite,
                                       const VerifyOptions& opts,
                                       std::ostream* timing = nullptr);

// Prints one PASS/FAIL line per result; returns 0 when everything passed,
// 1 otherwise.
int report_results(const std::vector<CriterionResult>& results, std::ostream& os);

}  // namespace spcurv
