// Batch front end for the barrier laboratory and solver.
//
//   trudinger verify   --config cfg.json --out out/
//   trudinger solve    --config cfg.json --out out/
//   trudinger converge --config cfg.json --out out/
//   trudinger suite    --out out/
//
// Exit codes: 0 all checks pass, 1 check failure, 2 invalid input,
// 3 runtime divergence.

#include <CLI11.hpp>

#include "trudinger/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Barrier laboratory and finite-difference solver for Trudinger's equation"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out";
    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        if (needs_config)
            cmd->add_option("--config", config_path, "JSON run configuration")->required();
        cmd->add_option("--out", out_dir, "output directory (default: out)");
    };
    CLI::App* verify = app.add_subcommand("verify", "construct and certify barriers");
    CLI::App* solve = app.add_subcommand("solve", "time-step the log-transformed equation");
    CLI::App* converge = app.add_subcommand("converge", "grid-refinement study");
    CLI::App* suite = app.add_subcommand("suite", "run the full acceptance matrix");
    add_common(verify, true);
    add_common(solve, true);
    add_common(converge, true);
    add_common(suite, false);

    CLI11_PARSE(app, argc, argv);

    const std::string cmd = app.get_subcommands().front()->get_name();
    return trudinger::run_command(cmd, config_path, out_dir);
}
