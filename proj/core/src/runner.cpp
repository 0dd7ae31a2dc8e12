#include "trudinger/runner.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "trudinger/acceptance.hpp"
#include "trudinger/verifier.hpp"

namespace trudinger {

namespace {

namespace fs = std::filesystem;

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    return buf;
}

nlohmann::json report_skeleton(const std::string& command, const RunConfig* cfg) {
    nlohmann::json rep;
    rep["command"] = command;
    rep["config_hash"] = cfg ? config_hash(cfg->raw) : "";
    rep["seed"] = cfg ? cfg->seed : 0;
    rep["results"] = nlohmann::json::array();
    rep["failures"] = nlohmann::json::array();
    rep["timestamp"] = timestamp_utc();
    return rep;
}

void write_json(const fs::path& path, const nlohmann::json& j) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

void add_result(nlohmann::json& rep, const std::string& name, bool pass,
                nlohmann::json metrics) {
    rep["results"].push_back(
        {{"name", name}, {"pass", pass}, {"metrics", std::move(metrics)}});
    if (!pass) rep["failures"].push_back(name);
}

Barrier build_barrier(const CylinderProblem& prob, const BarrierRequest& r) {
    if (r.family == "initial-sub") return make_initial_sub(prob, r.y, r.eps);
    if (r.family == "initial-super") return make_initial_super(prob, r.y, r.eps);
    if (r.family == "side-sub") return make_side_sub(prob, r.y, r.s, r.eps);
    if (r.family == "side-super") return make_side_super(prob, r.y, r.s, r.eps);
    throw InvalidInput("unknown barrier family '" + r.family + "'");
}

void write_snapshots_csv(const fs::path& path, const Trajectory& traj) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path.string());
    const int n = traj.snapshots.front().grid->dim();
    out << "t";
    for (int k = 1; k <= n; ++k) out << ",x" << k;
    out << ",eta,u\n";
    out.precision(17);
    for (const auto& snap : traj.snapshots) {
        const Grid& g = *snap.grid;
        for (long id = 0; id < g.node_count(); ++id) {
            if (g.node_class(id) == NodeClass::exterior) continue;
            const Vec x = g.node_pos(id);
            out << snap.time;
            for (double xi : x) out << "," << xi;
            out << "," << snap.eta[static_cast<std::size_t>(id)] << "," << snap.u(id) << "\n";
        }
    }
}

} // namespace

RunOutcome run_verify(const RunConfig& cfg, const std::string& out_dir) {
    RunOutcome oc;
    oc.report = report_skeleton("verify", &cfg);
    CylinderProblem prob = build_problem(cfg);
    if (cfg.barriers.empty()) throw InvalidInput("verify: no barrier requests in config");
    nlohmann::json barriers_json = nlohmann::json::array();
    bool all_pass = true;
    for (const auto& req : cfg.barriers) {
        if (!(req.eps < 0.5 * prob.m()))
            throw InvalidInput("verify: eps must satisfy eps < m/2");
        Barrier b = build_barrier(prob, req);
        VerificationReport rep = sweep(b, prob, cfg.sweep_config);
        barriers_json.push_back(b.to_json());
        add_result(oc.report, b.id(), rep.pass, rep.to_json());
        all_pass = all_pass && rep.pass;
    }
    write_json(fs::path(out_dir) / "barriers.json", barriers_json);
    write_json(fs::path(out_dir) / "report.json", oc.report);
    oc.exit_code = all_pass ? 0 : 1;
    return oc;
}

RunOutcome run_solve(const RunConfig& cfg, const std::string& out_dir) {
    RunOutcome oc;
    oc.report = report_skeleton("solve", &cfg);
    CylinderProblem prob = build_problem(cfg);
    auto grid = Grid::make(prob.domain(), cfg.target_h, cfg.grid_options);
    SolveConfig scfg = cfg.solver;
    if (!(scfg.end_time > 0.0)) scfg.end_time = prob.horizon();
    Trajectory traj = solve(prob, grid, scfg);

    MaxPrincipleReport mp =
        max_principle_report(traj, prob, 1e-6 + 10.0 * grid->min_spacing());
    add_result(oc.report, "max-principle", mp.pass, mp.to_json());

    nlohmann::json manifest;
    manifest["grid"] = {{"shape", grid->shape()},
                        {"spacing", grid->spacing()},
                        {"interior_nodes", static_cast<long>(grid->interior_nodes().size())},
                        {"boundary_nodes", static_cast<long>(grid->boundary_nodes().size())}};
    manifest["steps"] = traj.steps;
    manifest["dt_min"] = traj.dt_min;
    manifest["gradient_cap_used"] = traj.gradient_cap_used;
    manifest["config_hash"] = config_hash(cfg.raw);
    write_json(fs::path(out_dir) / "manifest.json", manifest);
    write_snapshots_csv(fs::path(out_dir) / "snapshots.csv", traj);
    write_json(fs::path(out_dir) / "report.json", oc.report);
    oc.exit_code = mp.pass ? 0 : 1;
    return oc;
}

RunOutcome run_converge(const RunConfig& cfg, const std::string& out_dir) {
    RunOutcome oc;
    oc.report = report_skeleton("converge", &cfg);
    if (!cfg.converge) throw InvalidInput("converge: missing 'converge' section");
    const ConvergeSpec& spec = *cfg.converge;

    ExactSolution exact = spec.exact == "plane-wave"
                              ? ExactSolution::plane_wave(spec.a, cfg.p)
                              : ExactSolution::heat_sine();
    if (spec.exact == "heat-sine" && cfg.p != 2.0)
        throw InvalidInput("converge: heat-sine benchmark requires p = 2");

    SpatialDomain dom = parse_domain(cfg.domain_json, cfg.n);
    CylinderProblem prob(std::move(dom), cfg.horizon, Exponents(cfg.p, cfg.n), exact.datum());
    SolveConfig scfg = cfg.solver;
    auto rows = convergence_study(prob, exact, spec.hs, scfg, cfg.grid_options);

    fs::create_directories(out_dir);
    std::ofstream csv(fs::path(out_dir) / "orders.csv");
    csv << "h,error,order\n";
    csv.precision(17);
    bool decreasing = true;
    nlohmann::json jrows = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        csv << rows[i].h << "," << rows[i].error << "," << rows[i].order << "\n";
        jrows.push_back({{"h", rows[i].h}, {"error", rows[i].error}, {"order", rows[i].order}});
        if (i > 0) decreasing = decreasing && rows[i].error < rows[i - 1].error;
    }
    add_result(oc.report, "errors-decreasing", decreasing, {{"rows", jrows}});
    write_json(fs::path(out_dir) / "report.json", oc.report);
    oc.exit_code = decreasing ? 0 : 1;
    return oc;
}

RunOutcome run_suite(const std::string& out_dir, bool progress) {
    RunOutcome oc;
    oc.report = report_skeleton("suite", nullptr);
    auto results = run_acceptance(progress ? &std::cout : nullptr);
    bool all = true;
    for (const auto& r : results) {
        nlohmann::json metrics = r.metrics;
        metrics["seconds"] = r.seconds;
        add_result(oc.report, std::to_string(r.index) + ". " + r.name, r.pass,
                   std::move(metrics));
        all = all && r.pass;
    }
    write_json(fs::path(out_dir) / "report.json", oc.report);
    oc.exit_code = all ? 0 : 1;
    return oc;
}

int run_command(const std::string& command, const std::string& config_path,
                const std::string& out_dir) {
    try {
        if (command == "suite") return run_suite(out_dir).exit_code;
        RunConfig cfg = load_run_config(config_path);
        if (command == "verify") return run_verify(cfg, out_dir).exit_code;
        if (command == "solve") return run_solve(cfg, out_dir).exit_code;
        if (command == "converge") return run_converge(cfg, out_dir).exit_code;
        throw InvalidInput("unknown command '" + command + "'");
    } catch (const std::exception& e) {
        const int code = exit_code_for(e);
        nlohmann::json err = {{"error", e.what()}, {"exit_code", code}};
        try {
            write_json(std::filesystem::path(out_dir) / "error.json", err);
        } catch (...) {
        }
        std::cerr << "error: " << e.what() << std::endl;
        return code;
    }
}

} // namespace trudinger
