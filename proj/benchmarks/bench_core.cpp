// Microbenchmarks for the hot paths: jet forms, barrier evaluation, residual
// sweeps per sample, solver steps, expression evaluation.

#include <benchmark/benchmark.h>

#include "trudinger/expression.hpp"
#include "trudinger/solver.hpp"

using namespace trudinger;

static void BM_lp_form(benchmark::State& state) {
    const Exponents e(static_cast<double>(state.range(0)), 3);
    Vec q{0.3, -0.7, 0.2};
    Matrix X(3);
    X(0, 0) = 1.0; X(1, 1) = -0.5; X(2, 2) = 0.25;
    X(0, 1) = X(1, 0) = 0.1;
    for (auto _ : state) benchmark::DoNotOptimize(lp_form(q, X, e));
}
BENCHMARK(BM_lp_form)->Arg(2)->Arg(3)->Arg(4);

static void BM_barrier_eval(benchmark::State& state) {
    SpatialDomain dom = SpatialDomain::make_ball({0.0, 0.0}, 1.0, 0.5);
    CylinderProblem prob(dom, 1.0, Exponents(3.0, 2), BoundaryDatum::constant(2.0), 2000);
    // Constant datum degenerates the cusp, so perturb via explicit params.
    SideBarrierHighP prm = derive_side_highp(BarrierKind::sub, prob.exponents(), 1.0, 3.0, 2.0,
                                             0.25, {1.0, 0.0}, 0.5, 1.0, 0.4);
    Barrier b(BarrierKind::sub, BarrierFamily::side_highp, prob.exponents(), 1.0, prm);
    SpaceTimePoint pt{{0.9, 0.05}, 0.52};
    for (auto _ : state) benchmark::DoNotOptimize(b.value(pt));
}
BENCHMARK(BM_barrier_eval);

static void BM_barrier_jet_residual(benchmark::State& state) {
    const Exponents e(3.0, 2);
    SideBarrierHighP prm =
        derive_side_highp(BarrierKind::sub, e, 1.0, 3.0, 2.0, 0.25, {1.0, 0.0}, 0.5, 1.0, 0.4);
    Barrier b(BarrierKind::sub, BarrierFamily::side_highp, e, 1.0, prm);
    SpaceTimePoint pt{{1.0 - 0.3 * prm.delta, 0.0}, 0.5 + 0.3 * prm.tau};
    for (auto _ : state) benchmark::DoNotOptimize(kp_form(b.jet(pt), e));
}
BENCHMARK(BM_barrier_jet_residual);

static void BM_solver_step(benchmark::State& state) {
    SpatialDomain dom = SpatialDomain::make_box({0.0, 0.0}, {M_PI, 1.0});
    auto datum = BoundaryDatum::from_functions(
        [](const Vec& x) { return 2.0 + std::sin(x[0]); },
        [](const Vec& x, double t) { return 2.0 + std::sin(x[0]) * std::exp(-t); });
    CylinderProblem prob(dom, 1.0, Exponents(2.0, 2), datum, 2000);
    auto grid = Grid::make(dom, M_PI / static_cast<double>(state.range(0)), {true, 0.0});
    SolveConfig cfg;
    cfg.end_time = 1.0;
    GridField f;
    f.grid = grid;
    f.eta.assign(static_cast<std::size_t>(grid->node_count()), 0.0);
    for (long id = 0; id < grid->node_count(); ++id)
        f.eta[static_cast<std::size_t>(id)] = std::log(2.0 + std::sin(grid->node_pos(id)[0]));
    const double dt = cfl_dt(f, prob.exponents(), cfg);
    auto bc = [&prob](const Vec& x, double t) { return std::log(prob.h_side(x, t)); };
    for (auto _ : state) {
        GridField next = step(f, dt, bc, prob.exponents(), cfg);
        benchmark::DoNotOptimize(next.eta.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<long>(grid->interior_nodes().size()));
}
BENCHMARK(BM_solver_step)->Arg(32)->Arg(64);

static void BM_expression_eval(benchmark::State& state) {
    Expression e = parse_expression("2+0.5*sin(x1+0.7*x2)*exp(-t)", 2);
    Vec x{0.4, -0.3};
    for (auto _ : state) benchmark::DoNotOptimize(e.eval(x, 0.25));
}
BENCHMARK(BM_expression_eval);

BENCHMARK_MAIN();
