// Acceptance suite: runs every verification criterion at its stated scale
// and prints one PASS/FAIL line per criterion. The determinism criterion
// shells out to the command-line tool, whose path arrives via --cli.

#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "spcurv/verify.hpp"

namespace {

std::string run_capture(const std::string& command, int* exit_code) {
    std::string out;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return out;
    }
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    *exit_code = pclose(pipe);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

spcurv::CriterionResult criterion9_determinism(const std::string& cli,
                                               const std::string& verify_args) {
    spcurv::CriterionResult out;
    out.name = "9-determinism";
    if (cli.empty()) {
        out.pass = false;
        out.detail = "no CLI path supplied (--cli)";
        return out;
    }

    int rc1 = 0, rc2 = 0;
    const std::string verify_cmd = cli + " verify " + verify_args;
    const std::string v1 = run_capture(verify_cmd, &rc1);
    const std::string v2 = run_capture(verify_cmd, &rc2);
    const bool verify_same = !v1.empty() && v1 == v2 && rc1 == rc2;

    const std::string scan_base =
        cli + " scan --n 2 --t 1 --res 50 --seed 42 --restarts 20";
    int rs1 = 0, rs2 = 0;
    run_capture(scan_base + " --out acceptance_scan_a.csv", &rs1);
    run_capture(scan_base + " --out acceptance_scan_b.csv", &rs2);
    const std::string s1 = read_file("acceptance_scan_a.csv");
    const std::string s2 = read_file("acceptance_scan_b.csv");
    const bool scan_same = !s1.empty() && s1 == s2 && rs1 == 0 && rs2 == 0;
    std::remove("acceptance_scan_a.csv");
    std::remove("acceptance_scan_b.csv");

    out.pass = verify_same && scan_same;
    out.detail = std::string("verify output ") +
                 (verify_same ? "byte-identical" : "DIFFERS") + " across two runs (" +
                 std::to_string(v1.size()) + " bytes); res-50 scan " +
                 (scan_same ? "byte-identical" : "DIFFERS") + " (" +
                 std::to_string(s1.size()) + " bytes)";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    spcurv::VerifyOptions opts;
    std::string verify_suite_args = "--suite all";
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        const auto next = [&]() -> std::string {
            return i + 1 < argc ? argv[++i] : std::string{};
        };
        if (arg == "--cli") cli = next();
        else if (arg == "--res") opts.locus_resolution = std::stoi(next());
        else if (arg == "--seed") opts.seed = std::stoull(next());
        else if (arg == "--restarts") opts.restarts = std::stoi(next());
        else if (arg == "--threads") opts.threads = static_cast<unsigned>(std::stoul(next()));
        else {
            std::cerr << "unknown argument: " << arg << "\n";
            return 2;
        }
    }

    std::vector<spcurv::CriterionResult> results;
    results.push_back(spcurv::criterion1_flat_locus(opts, &std::cerr));
    results.push_back(spcurv::criterion2_open_flat_set(opts));
    results.push_back(spcurv::criterion3_mu_eta_system(opts));
    results.push_back(spcurv::criterion4_curvature_oracle(opts));
    results.push_back(spcurv::criterion5_submersion_geometry(opts));
    results.push_back(spcurv::criterion6_orbit_reduction(opts));
    results.push_back(spcurv::criterion7_sphere_positivity(opts));
    results.push_back(spcurv::criterion8_topology(opts));
    results.push_back(criterion9_determinism(
        cli, "--suite all --seed " + std::to_string(opts.seed) + " --res " +
                 std::to_string(opts.locus_resolution)));

    return spcurv::report_results(results, std::cout);
}
