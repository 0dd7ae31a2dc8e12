#include "trudinger/config.hpp"

#include <fstream>

namespace trudinger {

namespace {

Vec get_vec(const nlohmann::json& j, const std::string& key, int n) {
    if (!j.contains(key)) throw InvalidInput("config: missing '" + key + "'");
    Vec v = j.at(key).get<Vec>();
    if (static_cast<int>(v.size()) != n)
        throw InvalidInput("config: '" + key + "' must have length n");
    return v;
}

} // namespace

SpatialDomain parse_domain(const nlohmann::json& j, int n) {
    const std::string kind = j.value("kind", "");
    std::optional<double> rho0;
    if (j.contains("outer_ball_radius")) rho0 = j.at("outer_ball_radius").get<double>();
    if (kind == "box") return SpatialDomain::make_box(get_vec(j, "lo", n), get_vec(j, "hi", n), rho0);
    if (kind == "ball")
        return SpatialDomain::make_ball(get_vec(j, "center", n), j.at("radius").get<double>(),
                                        rho0);
    if (kind == "annulus")
        return SpatialDomain::make_annulus(get_vec(j, "center", n),
                                           j.at("r_inner").get<double>(),
                                           j.at("r_outer").get<double>(), rho0);
    if (kind == "rounded-box" || kind == "ball-union-box")
        return SpatialDomain::make_rounded_box(get_vec(j, "lo", n), get_vec(j, "hi", n),
                                               j.at("round_radius").get<double>(), rho0);
    throw InvalidInput("config: unknown domain kind '" + kind + "'");
}

RunConfig parse_run_config(const nlohmann::json& j) {
    RunConfig cfg;
    cfg.raw = j;
    cfg.seed = j.value("seed", std::uint64_t{0});

    if (!j.contains("problem")) throw InvalidInput("config: missing 'problem'");
    const auto& pj = j.at("problem");
    cfg.p = pj.value("p", 2.0);
    cfg.n = pj.value("n", 2);
    cfg.horizon = pj.value("T", 1.0);
    if (!(cfg.p >= 2.0)) throw InvalidInput("config: p must be >= 2");
    if (!(cfg.horizon > 0.0)) throw InvalidInput("config: T must be > 0");
    if (!pj.contains("domain")) throw InvalidInput("config: missing 'problem.domain'");
    cfg.domain_json = pj.at("domain");
    cfg.domain_kind = cfg.domain_json.value("kind", "");
    cfg.f_text = pj.value("f", "");
    cfg.g_text = pj.value("g", cfg.f_text);
    if (cfg.f_text.empty()) throw InvalidInput("config: missing 'problem.f'");

    for (const auto& bj : j.value("barriers", nlohmann::json::array())) {
        BarrierRequest r;
        r.family = bj.value("family", "");
        r.y = get_vec(bj, "y", cfg.n);
        r.s = bj.value("s", 0.0);
        r.eps = bj.value("eps", 0.0);
        if (!(r.eps > 0.0)) throw InvalidInput("config: barrier eps must be > 0");
        cfg.barriers.push_back(std::move(r));
    }

    if (j.contains("solver")) {
        const auto& sj = j.at("solver");
        cfg.target_h = sj.value("target_h", 0.1);
        cfg.solver.cfl_safety = sj.value("cfl_safety", 0.5);
        cfg.solver.gradient_cap = sj.value("gradient_cap", 1.0);
        cfg.solver.end_time = sj.value("end_time", cfg.horizon);
        cfg.solver.snapshot_dt = sj.value("snapshot_dt", 0.0);
        cfg.grid_options.align_box = sj.value("align_box", true);
        cfg.grid_options.lattice_offset = sj.value("lattice_offset", 0.5);
        if (!(cfg.target_h > 0.0)) throw InvalidInput("config: target_h must be > 0");
    } else {
        cfg.solver.end_time = cfg.horizon;
    }

    if (j.contains("sweep")) {
        const auto& sj = j.at("sweep");
        cfg.sweep_config.samples_per_piece = sj.value("samples_per_piece", 10000L);
        cfg.sweep_config.boundary_samples = sj.value("boundary_samples", 10000L);
        cfg.sweep_config.global_samples = sj.value("global_samples", 10000L);
    }

    if (j.contains("converge")) {
        const auto& cj = j.at("converge");
        ConvergeSpec spec;
        spec.exact = cj.value("exact", "heat-sine");
        if (cj.contains("a")) spec.a = cj.at("a").get<Vec>();
        spec.hs = cj.value("hs", std::vector<double>{});
        if (spec.hs.empty()) throw InvalidInput("config: converge.hs must be non-empty");
        cfg.converge = std::move(spec);
    }
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("config: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("config: JSON parse error: ") + e.what());
    }
    return parse_run_config(j);
}

CylinderProblem build_problem(const RunConfig& cfg) {
    SpatialDomain dom = parse_domain(cfg.domain_json, cfg.n);
    BoundaryDatum datum = BoundaryDatum::from_expressions(cfg.f_text, cfg.g_text, cfg.n);
    return CylinderProblem(std::move(dom), cfg.horizon, Exponents(cfg.p, cfg.n),
                           std::move(datum));
}

std::string config_hash(const nlohmann::json& j) {
    const std::string s = j.dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace trudinger
