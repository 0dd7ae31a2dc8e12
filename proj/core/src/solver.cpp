#include "trudinger/solver.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

namespace trudinger {

double discrete_kp(const GridField& field, long node, const Exponents& e) {
    const Grid& g = *field.grid;
    if (g.node_class(node) != NodeClass::interior)
        throw DomainViolation("discrete_kp: node is not interior");
    const int n = g.dim();
    const auto& h = g.spacing();
    const auto& eta = field.eta;

    Vec q(static_cast<std::size_t>(n));
    Matrix X(n);
    const double center = eta[static_cast<std::size_t>(node)];
    for (int k = 0; k < n; ++k) {
        const double vp = eta[static_cast<std::size_t>(g.neighbor(node, k, +1))];
        const double vm = eta[static_cast<std::size_t>(g.neighbor(node, k, -1))];
        const double hk = h[static_cast<std::size_t>(k)];
        q[static_cast<std::size_t>(k)] = (vp - vm) / (2.0 * hk);
        X(k, k) = (vp - 2.0 * center + vm) / (hk * hk);
    }
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            const double hk = h[static_cast<std::size_t>(k)];
            const double hl = h[static_cast<std::size_t>(l)];
            const double vpp = eta[static_cast<std::size_t>(g.diagonal_neighbor(node, k, +1, l, +1))];
            const double vpm = eta[static_cast<std::size_t>(g.diagonal_neighbor(node, k, +1, l, -1))];
            const double vmp = eta[static_cast<std::size_t>(g.diagonal_neighbor(node, k, -1, l, +1))];
            const double vmm = eta[static_cast<std::size_t>(g.diagonal_neighbor(node, k, -1, l, -1))];
            X(k, l) = X(l, k) = (vpp - vpm - vmp + vmm) / (4.0 * hk * hl);
        }
    return lp_form(q, X, e) + (e.p - 1.0) * std::pow(norm(q), e.p);
}

double cfl_dt(const GridField& field, const Exponents& e, const SolveConfig& cfg) {
    if (!(cfg.gradient_cap > 0.0)) throw InvalidInput("cfl_dt: gradient cap must be > 0");
    if (!(cfg.cfl_safety > 0.0 && cfg.cfl_safety <= 1.0))
        throw InvalidInput("cfl_dt: safety factor must be in (0, 1]");
    const double h = field.grid->min_spacing();
    const double G = std::max(cfg.gradient_cap, 1.0);
    const double parabolic = h * h / (2.0 * e.n * std::pow(G, e.p - 2.0));
    const double advective = h / (e.p * std::pow(G, e.p - 1.0));
    return cfg.cfl_safety * std::min(parabolic, advective);
}

GridField step(const GridField& field, double dt,
               const std::function<double(const Vec&, double)>& bc_log, const Exponents& e,
               const SolveConfig& cfg, double* max_gradient) {
    if (dt > cfl_dt(field, e, cfg) * (1.0 + 1e-9))
        throw RejectedStep("step: dt exceeds the stability bound");
    const Grid& g = *field.grid;
    GridField next;
    next.grid = field.grid;
    next.time = field.time + dt;
    next.eta = field.eta;

    double grad_max = 0.0;
    const double inv = 1.0 / (e.p - 1.0);
    for (long id : g.interior_nodes()) {
        const double rhs = discrete_kp(field, id, e);
        next.eta[static_cast<std::size_t>(id)] =
            field.eta[static_cast<std::size_t>(id)] + dt * rhs * inv;
        // Track |q_h| for the gradient cap update.
        double q2 = 0.0;
        for (int k = 0; k < g.dim(); ++k) {
            const double d =
                (field.eta[static_cast<std::size_t>(g.neighbor(id, k, +1))] -
                 field.eta[static_cast<std::size_t>(g.neighbor(id, k, -1))]) /
                (2.0 * g.spacing()[static_cast<std::size_t>(k)]);
            q2 += d * d;
        }
        grad_max = std::max(grad_max, std::sqrt(q2));
    }
    for (const auto& b : g.boundary_nodes())
        next.eta[static_cast<std::size_t>(b.node)] = bc_log(b.projection, next.time);
    if (max_gradient) *max_gradient = grad_max;
    return next;
}

Trajectory solve(const CylinderProblem& prob, std::shared_ptr<const Grid> grid,
                 const SolveConfig& cfg) {
    const Exponents& e = prob.exponents();
    if (!(cfg.end_time > 0.0)) throw InvalidInput("solve: end_time must be > 0");
    if (cfg.end_time > prob.horizon() + 1e-12)
        throw InvalidInput("solve: end_time exceeds the problem horizon");
    {
        const auto extent = grid->interior_extent();
        for (int k = 0; k < grid->dim(); ++k)
            if (extent[static_cast<std::size_t>(k)] < 8)
                throw InvalidInput("solve: grid does not resolve the domain (needs >= 8 "
                                   "interior nodes per axis)");
    }

    auto bc_log = [&prob](const Vec& x, double t) {
        const double v = prob.h_side(x, t);
        if (!(v > 0.0)) throw PositivityViolation("solve: boundary datum must be positive");
        return std::log(v);
    };

    GridField f;
    f.grid = grid;
    f.time = 0.0;
    f.eta.assign(static_cast<std::size_t>(grid->node_count()),
                 std::numeric_limits<double>::quiet_NaN());
    for (long id : grid->interior_nodes()) {
        const double v = prob.h_initial(grid->node_pos(id));
        if (!(v > 0.0)) throw PositivityViolation("solve: initial datum must be positive");
        f.eta[static_cast<std::size_t>(id)] = std::log(v);
    }
    for (const auto& b : grid->boundary_nodes())
        f.eta[static_cast<std::size_t>(b.node)] = bc_log(b.projection, 0.0);

    // Snapshot schedule.
    std::set<double> times;
    times.insert(cfg.end_time);
    if (cfg.snapshot_dt > 0.0)
        for (double t = cfg.snapshot_dt; t < cfg.end_time; t += cfg.snapshot_dt) times.insert(t);
    for (double t : cfg.extra_snapshot_times)
        if (t > 0.0 && t < cfg.end_time) times.insert(t);

    SolveConfig run = cfg;
    {
        // Initialize the gradient cap from the initial field.
        double g0 = 0.0;
        for (long id : grid->interior_nodes()) {
            double q2 = 0.0;
            for (int k = 0; k < grid->dim(); ++k) {
                const double d = (f.eta[static_cast<std::size_t>(grid->neighbor(id, k, +1))] -
                                  f.eta[static_cast<std::size_t>(grid->neighbor(id, k, -1))]) /
                                 (2.0 * grid->spacing()[static_cast<std::size_t>(k)]);
                q2 += d * d;
            }
            g0 = std::max(g0, std::sqrt(q2));
        }
        run.gradient_cap = std::max(cfg.gradient_cap, 1.1 * g0);
    }

    Trajectory traj;
    traj.snapshots.push_back(f);
    traj.dt_min = std::numeric_limits<double>::infinity();

    for (double target : times) {
        // Uniform ladder within each segment; recomputed if the cap grows.
        while (f.time < target - 1e-13 * cfg.end_time) {
            const double seg = target - f.time;
            const double dt_raw = cfl_dt(f, e, run);
            const long nsteps = std::max(1L, static_cast<long>(std::ceil(seg / dt_raw - 1e-9)));
            const double dt = seg / static_cast<double>(nsteps);
            bool recompute = false;
            for (long i = 0; i < nsteps; ++i) {
                double gmax = 0.0;
                f = step(f, dt, bc_log, e, run, &gmax);
                ++traj.steps;
                traj.dt_min = std::min(traj.dt_min, dt);
                if (traj.steps > cfg.max_steps)
                    throw Divergence("solve: step budget exhausted", traj.steps);
                for (long id : grid->interior_nodes())
                    if (!std::isfinite(f.eta[static_cast<std::size_t>(id)]))
                        throw Divergence("solve: field is not finite (blow-up)", traj.steps);
                if (1.1 * gmax > run.gradient_cap) {
                    run.gradient_cap = 1.1 * gmax;
                    recompute = true;
                    break;
                }
            }
            if (!recompute && std::abs(f.time - target) <= 1e-9 * cfg.end_time) break;
        }
        f.time = target;
        traj.snapshots.push_back(f);
    }
    traj.gradient_cap_used = run.gradient_cap;
    return traj;
}

MaxPrincipleReport max_principle_report(const Trajectory& traj, const CylinderProblem& prob,
                                        double tol) {
    MaxPrincipleReport rep;
    rep.sup_h = prob.M();
    rep.inf_h = prob.m();
    double over = -std::numeric_limits<double>::infinity();
    double under = -std::numeric_limits<double>::infinity();
    for (const auto& snap : traj.snapshots) {
        for (long id : snap.grid->interior_nodes()) {
            const double u = snap.u(id);
            over = std::max(over, u - rep.sup_h);
            under = std::max(under, rep.inf_h - u);
        }
    }
    rep.worst_overshoot = over;
    rep.worst_undershoot = under;
    rep.pass = over <= tol && under <= tol;
    return rep;
}

ComparisonReport comparison_report(const Trajectory& traj_u, const Trajectory& traj_v,
                                   double tol) {
    if (traj_u.snapshots.size() != traj_v.snapshots.size())
        throw InvalidInput("comparison_report: trajectories have different snapshot ladders");
    ComparisonReport rep;
    double min_margin = std::numeric_limits<double>::infinity();
    double sup_int = -std::numeric_limits<double>::infinity();
    double sup_bdy = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < traj_u.snapshots.size(); ++s) {
        const GridField& fu = traj_u.snapshots[s];
        const GridField& fv = traj_v.snapshots[s];
        if (fu.grid != fv.grid)
            throw InvalidInput("comparison_report: trajectories live on different grids");
        if (std::abs(fu.time - fv.time) > 1e-12 * std::max(1.0, fu.time))
            throw InvalidInput("comparison_report: snapshot times differ");
        for (long id : fu.grid->interior_nodes()) {
            const double u = fu.u(id);
            const double v = fv.u(id);
            min_margin = std::min(min_margin, v - u);
            const double ratio = u / v;
            if (s == 0)
                sup_bdy = std::max(sup_bdy, ratio); // initial slice belongs to P_T
            else
                sup_int = std::max(sup_int, ratio);
        }
        for (const auto& b : fu.grid->boundary_nodes()) {
            const double ratio = fu.u(b.node) / fv.u(b.node);
            sup_bdy = std::max(sup_bdy, ratio);
            min_margin = std::min(min_margin, fv.u(b.node) - fu.u(b.node));
        }
    }
    rep.min_ordering_margin = min_margin;
    rep.quotient_sup_interior = sup_int;
    rep.quotient_sup_boundary = sup_bdy;
    rep.ordering_pass = min_margin >= -tol;
    rep.quotient_pass = sup_int <= sup_bdy + tol;
    return rep;
}

SandwichReport barrier_sandwich_report(const Trajectory& traj, const Barrier& sub,
                                       const VerificationReport& sub_report,
                                       const Barrier& super,
                                       const VerificationReport& super_report,
                                       double tol_disc) {
    if (!sub_report.pass || !super_report.pass)
        throw InvalidInput("barrier_sandwich_report: barriers must be verified (pass) first");
    if (sub.kind() != BarrierKind::sub || super.kind() != BarrierKind::super)
        throw InvalidInput("barrier_sandwich_report: barrier kinds are swapped");

    SandwichReport rep;
    double sub_margin = std::numeric_limits<double>::infinity();
    double super_margin = std::numeric_limits<double>::infinity();

    const SpaceTimePoint anchor = sub.anchor();
    double best_node_dist = std::numeric_limits<double>::infinity();
    double best_time_dist = std::numeric_limits<double>::infinity();
    long best_node = -1;
    const GridField* best_snap = nullptr;

    for (const auto& snap : traj.snapshots) {
        const double tdist = std::abs(snap.time - anchor.t);
        for (long id : snap.grid->interior_nodes()) {
            const Vec x = snap.grid->node_pos(id);
            const SpaceTimePoint pt{x, snap.time};
            const double u_num = snap.u(id);
            bool in_region = false;
            if (sub.classify(pt) != Piece::exterior) {
                sub_margin = std::min(sub_margin, u_num - sub.value_u(pt));
                in_region = true;
            }
            if (super.classify(pt) != Piece::exterior) {
                super_margin = std::min(super_margin, super.value_u(pt) - u_num);
                in_region = true;
            }
            if (in_region) ++rep.region_nodes;
            const double xdist = dist(x, anchor.x);
            if (tdist < best_time_dist - 1e-15 ||
                (tdist <= best_time_dist + 1e-15 && xdist < best_node_dist)) {
                best_time_dist = tdist;
                best_node_dist = xdist;
                best_node = id;
                best_snap = &snap;
            }
        }
    }

    rep.worst_sub_margin = sub_margin;
    rep.worst_super_margin = super_margin;
    rep.anchor_datum = sub.family() == BarrierFamily::initial
                           ? std::get<InitialBarrierParams>(sub.params()).h_anchor
                           : (sub.family() == BarrierFamily::side_highp
                                  ? std::get<SideBarrierHighP>(sub.params()).h_anchor
                                  : std::get<SideBarrierLowP>(sub.params()).h_anchor);
    double eps = 0.0;
    if (auto* p = std::get_if<SideBarrierHighP>(&sub.params())) eps = p->eps;
    else if (auto* p = std::get_if<SideBarrierLowP>(&sub.params())) eps = p->eps;
    else eps = std::get<InitialBarrierParams>(sub.params()).eps;

    bool anchor_ok = true;
    if (best_snap) {
        const SpaceTimePoint pt{best_snap->grid->node_pos(best_node), best_snap->time};
        rep.anchor_value = best_snap->u(best_node);
        const double lo_cap = rep.anchor_datum - 2 * eps;
        const double hi_cap = rep.anchor_datum + 2 * eps;
        const double slack_lo = std::max(0.0, lo_cap - sub.value_u(pt));
        const double slack_hi = std::max(0.0, super.value_u(pt) - hi_cap);
        rep.anchor_slack = std::max(slack_lo, slack_hi);
        anchor_ok = rep.anchor_value >= lo_cap - rep.anchor_slack - tol_disc &&
                    rep.anchor_value <= hi_cap + rep.anchor_slack + tol_disc;
    }
    rep.pass = sub_margin >= -tol_disc && super_margin >= -tol_disc && anchor_ok;
    return rep;
}

ExactSolution ExactSolution::heat_sine() {
    ExactSolution s;
    s.kind_ = Kind::heat_sine;
    s.p_ = 2.0;
    return s;
}

ExactSolution ExactSolution::plane_wave(Vec a, double p) {
    if (!(p >= 2.0)) throw InvalidInput("plane_wave: p must be >= 2");
    ExactSolution s;
    s.kind_ = Kind::plane_wave;
    s.a_ = std::move(a);
    s.p_ = p;
    return s;
}

double ExactSolution::u(const Vec& x, double t) const {
    if (kind_ == Kind::heat_sine) return 2.0 + std::sin(x[0]) * std::exp(-t);
    return std::exp(dot(a_, x) + std::pow(norm(a_), p_) * t);
}

BoundaryDatum ExactSolution::datum() const {
    if (kind_ == Kind::heat_sine) {
        return BoundaryDatum::from_functions(
            [](const Vec& x) { return 2.0 + std::sin(x[0]); },
            [](const Vec& x, double t) { return 2.0 + std::sin(x[0]) * std::exp(-t); });
    }
    const Vec a = a_;
    const double speed = std::pow(norm(a_), p_);
    return BoundaryDatum::from_functions(
        [a](const Vec& x) { return std::exp(dot(a, x)); },
        [a, speed](const Vec& x, double t) { return std::exp(dot(a, x) + speed * t); });
}

std::vector<ConvergenceRow> convergence_study(const CylinderProblem& prob,
                                              const ExactSolution& exact,
                                              const std::vector<double>& hs,
                                              const SolveConfig& cfg, const GridOptions& gopts) {
    std::vector<ConvergenceRow> rows;
    for (double h : hs) {
        auto grid = Grid::make(prob.domain(), h, gopts);
        Trajectory traj = solve(prob, grid, cfg);
        const GridField& last = traj.snapshots.back();
        double err = 0.0;
        for (long id : grid->interior_nodes()) {
            const double ue = exact.u(grid->node_pos(id), last.time);
            err = std::max(err, std::abs(last.u(id) - ue));
        }
        ConvergenceRow row{h, err, 0.0};
        if (!rows.empty() && err > 0.0) row.order = std::log2(rows.back().error / err);
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json MaxPrincipleReport::to_json() const {
    return {{"sup_h", sup_h},
            {"inf_h", inf_h},
            {"worst_overshoot", worst_overshoot},
            {"worst_undershoot", worst_undershoot},
            {"pass", pass}};
}

nlohmann::json ComparisonReport::to_json() const {
    return {{"min_ordering_margin", min_ordering_margin},
            {"quotient_sup_interior", quotient_sup_interior},
            {"quotient_sup_boundary", quotient_sup_boundary},
            {"ordering_pass", ordering_pass},
            {"quotient_pass", quotient_pass}};
}

nlohmann::json SandwichReport::to_json() const {
    return {{"worst_sub_margin", worst_sub_margin},
            {"worst_super_margin", worst_super_margin},
            {"region_nodes", region_nodes},
            {"anchor_value", anchor_value},
            {"anchor_datum", anchor_datum},
            {"anchor_slack", anchor_slack},
            {"pass", pass}};
}

} // namespace trudinger
