// coact: build the retract backends, verify their algebraic identities,
// export the homotopy-transfer tensors and check the classical master
// equation, from one JSON config. Exit codes: 0 ok, 1 a check failed,
// 2 bad configuration.

#include <CLI11.hpp>
#include <iostream>

#include "coact/run.hpp"

namespace {

struct CliOptions {
    std::string config_path;
    std::string out_dir;
    std::string suite;
    std::string golden_dir = "data/golden";
    double tol = 0.0;
    bool json_output = false;
    bool write_golden = false;
};

void add_common(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--config", opt.config_path, "JSON config file")->required();
    cmd->add_option("--out", opt.out_dir, "output directory (default from config)");
    cmd->add_option("--tol", opt.tol, "override every float-mode tolerance");
    cmd->add_option("--suite", opt.suite, "run a single named suite");
    cmd->add_option("--golden", opt.golden_dir,
                    "directory with the golden closed-form tables");
    cmd->add_flag("--json", opt.json_output, "print the report as JSON");
}

int run_stage(coact::Stage stage, const CliOptions& opt, bool diff_golden) {
    coact::RunConfig config = coact::load_config_file(opt.config_path);
    if (!opt.out_dir.empty()) config.out_dir = opt.out_dir;
    if (!opt.suite.empty()) config.suites = {opt.suite};
    if (opt.tol > 0.0) {
        config.tol.duality = config.tol.retract = opt.tol;
        config.tol.tables = config.tol.cme = opt.tol;
    }
    coact::RunReport report = coact::run_pipeline(
        config, stage, diff_golden ? opt.golden_dir : "", opt.write_golden);
    if (opt.json_output)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text();
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homotopy-transfer tensors and master-equation checks "
                 "for cochain complexes on the interval, circle and square"};
    app.require_subcommand(1);

    CliOptions opt;
    coact::Stage stage = coact::Stage::all;
    bool diff_golden = false;

    auto* build = app.add_subcommand("build", "build the backend and export its basis");
    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    auto* transfer = app.add_subcommand("transfer", "compute and export the tensors");
    auto* cme = app.add_subcommand("cme", "assemble the action and check the CME");
    auto* report = app.add_subcommand("report", "run everything and write the report");
    auto* all = app.add_subcommand("all", "alias for report");
    for (auto* cmd : {build, verify, transfer, cme, report, all}) add_common(cmd, opt);
    verify->add_flag("--write-golden", opt.write_golden,
                     "regenerate the golden tables instead of diffing them");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (build->parsed()) stage = coact::Stage::build;
    if (verify->parsed()) {
        stage = coact::Stage::verify;
        diff_golden = true;
    }
    if (transfer->parsed()) stage = coact::Stage::transfer;
    if (cme->parsed()) stage = coact::Stage::cme;
    if (report->parsed() || all->parsed()) {
        stage = coact::Stage::all;
        diff_golden = true;
    }

    try {
        return run_stage(stage, opt, diff_golden);
    } catch (const coact::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
