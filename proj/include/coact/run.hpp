#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coact/backend.hpp"
#include "coact/rational.hpp"
#include "coact/serialize.hpp"

namespace coact {

/// Bad or inconsistent configuration; maps to exit code 2 in the CLI.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct Tolerances {
    double duality = 1e-12;
    double retract = 1e-10;
    double tables = 1e-9;
    double cme = 1e-9;
};

struct RunConfig {
    std::string geometry;  // interval | circle | square
    std::vector<Rational> nodes;                      // interval only
    int n = 0;                                        // circle only
    BasisKind basis = BasisKind::lagrange;
    BreakConvention convention = BreakConvention::require_continuous;
    int window = -1;      // K (interval/circle) or D (square)
    std::vector<std::string> suites{"all"};
    std::string out_dir = "out";
    Tolerances tol;

    bool suite_selected(const std::string& name) const {
        for (const auto& s : suites)
            if (s == "all" || s == name) return true;
        return false;
    }
};

RunConfig parse_config_json(const Json& j);
RunConfig load_config_file(const std::string& path);
Json config_to_json(const RunConfig& c);

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    double magnitude = 0.0;  // size of the worst deviation (0 when exact)
    std::string witness;     // the offending input, when failing
};

struct RunReport {
    std::string geometry;
    Json config;
    std::vector<CheckResult> checks;
    std::string sign_convention;
    long long cme_closed = 0, cme_dropped = 0;
    double cme_max_residual = 0.0;
    bool cme_exact_zero = false;
    long long degenerate_regions = 0;
    std::map<std::string, std::string> artifacts;  // label -> file path
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    Json to_json() const;
    std::string to_text() const;
};

enum class Stage { build, verify, transfer, cme, all };

/// Parses, builds, runs the selected stages and writes artifacts under
/// config.out_dir. `golden_dir` points at the shipped closed-form tables;
/// empty disables the diff. `write_golden` regenerates them instead.
RunReport run_pipeline(const RunConfig& config, Stage stage,
                       const std::string& golden_dir = "",
                       bool write_golden = false);

}  // namespace coact
