#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "trudinger/barriers.hpp"

using namespace trudinger;

namespace {

// Finite-difference jet of a barrier's value function; independent check of
// the analytic derivatives. Central differences at the given steps.
Jet fd_jet(const Barrier& b, const SpaceTimePoint& pt, double hx, double ht) {
    const int n = static_cast<int>(pt.x.size());
    auto at = [&](Vec x, double t) { return b.value({std::move(x), t}); };
    const double a = (at(pt.x, pt.t + ht) - at(pt.x, pt.t - ht)) / (2 * ht);
    Vec grad(static_cast<std::size_t>(n));
    Matrix hess(n);
    for (int i = 0; i < n; ++i) {
        Vec xp = pt.x, xm = pt.x;
        xp[static_cast<std::size_t>(i)] += hx;
        xm[static_cast<std::size_t>(i)] -= hx;
        grad[static_cast<std::size_t>(i)] = (at(xp, pt.t) - at(xm, pt.t)) / (2 * hx);
        hess(i, i) =
            (at(xp, pt.t) - 2 * at(pt.x, pt.t) + at(xm, pt.t)) / (hx * hx);
        for (int j = i + 1; j < n; ++j) {
            Vec xpp = pt.x, xpm = pt.x, xmp = pt.x, xmm = pt.x;
            xpp[static_cast<std::size_t>(i)] += hx; xpp[static_cast<std::size_t>(j)] += hx;
            xpm[static_cast<std::size_t>(i)] += hx; xpm[static_cast<std::size_t>(j)] -= hx;
            xmp[static_cast<std::size_t>(i)] -= hx; xmp[static_cast<std::size_t>(j)] += hx;
            xmm[static_cast<std::size_t>(i)] -= hx; xmm[static_cast<std::size_t>(j)] -= hx;
            hess(i, j) = hess(j, i) =
                (at(xpp, pt.t) - at(xpm, pt.t) - at(xmp, pt.t) + at(xmm, pt.t)) /
                (4 * hx * hx);
        }
    }
    return Jet(a, std::move(grad), std::move(hess));
}

// Worst relative component deviation between two jets.
double jet_diff(const Jet& a, const Jet& b) {
    double d = std::abs(a.time_slope - b.time_slope) / (1.0 + std::abs(a.time_slope));
    for (std::size_t i = 0; i < a.gradient.size(); ++i)
        d = std::max(d, std::abs(a.gradient[i] - b.gradient[i]) /
                            (1.0 + std::abs(a.gradient[i])));
    for (int i = 0; i < a.hessian.size(); ++i)
        for (int j = 0; j < a.hessian.size(); ++j)
            d = std::max(d, std::abs(a.hessian(i, j) - b.hessian(i, j)) /
                                (1.0 + std::abs(a.hessian(i, j))));
    return d;
}

CylinderProblem smooth_ball_problem(double p, int n, double T = 1.0) {
    auto f = [n](const Vec& x) {
        double phase = x[0];
        if (n >= 2) phase += 0.7 * x[1];
        return 2.0 + 0.5 * std::sin(phase);
    };
    auto dom = SpatialDomain::make_ball(Vec(static_cast<std::size_t>(n), 0.0), 1.0, 0.5);
    return CylinderProblem(dom, T, Exponents(p, n),
                           BoundaryDatum::from_functions(f, [f](const Vec& x, double) {
                               return f(x);
                           }),
                           20000);
}

} // namespace

// ---------------------------------------------------------------------------
// Frozen parameter fixtures (values computed by an independent
// high-precision evaluation of the construction formulas).
// ---------------------------------------------------------------------------

TEST_CASE("initial sub-solution rate: p=2, n=2, m=1, h=2, eps=0.25, delta=1") {
    InitialBarrierParams prm = derive_initial(BarrierKind::sub, Exponents(2.0, 2), 1.0, 3.0,
                                              2.0, 0.25, {0.0, 0.0}, 1.0, 0.0, false);
    CHECK(prm.lambda == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(prm.ell == doctest::Approx(8.0).epsilon(1e-14));
}

TEST_CASE("initial super-solution rate: p=3, n=2, M=3, h=2, eps=0.25, delta=1") {
    InitialBarrierParams prm = derive_initial(BarrierKind::super, Exponents(3.0, 2), 1.0, 3.0,
                                              2.0, 0.25, {0.0, 0.0}, 1.0, 0.0, false);
    // sigma_3 * 2^2 * ((3-2)/(2+0.5))^2 = 12 * (2/5)^2 = 48/25
    CHECK(prm.lambda == doctest::Approx(48.0 / 25.0).epsilon(1e-14));
}

TEST_CASE("cusp sub-solution fixture: p=3, n=2, m=1, h=2, eps=0.25, tau0=1") {
    SideBarrierHighP prm = derive_side_highp(BarrierKind::sub, Exponents(3.0, 2), 1.0, 3.0,
                                             2.0, 0.25, {1.0, 0.0}, 0.5, 10.0, 1.0);
    CHECK(prm.k == doctest::Approx(1.0986122886681097).epsilon(1e-14));
    CHECK(prm.gamma == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(prm.mu == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(prm.c == doctest::Approx(1.5057214348122984).epsilon(1e-13));
    CHECK(prm.delta == doctest::Approx(0.53235291856685715).epsilon(1e-13));
    CHECK(prm.Lambda == doctest::Approx(0.0));
}

TEST_CASE("cusp super-solution fixture: p=4, n=2, M=3, h=2, eps=0.25, tau0=1") {
    SideBarrierHighP prm = derive_side_highp(BarrierKind::super, Exponents(4.0, 2), 1.0, 3.0,
                                             2.0, 0.25, {1.0, 0.0}, 0.5, 10.0, 1.0);
    CHECK(prm.k == doctest::Approx(0.33647223662121293).epsilon(1e-14));
    CHECK(prm.gamma == doctest::Approx(0.39849898028866629).epsilon(1e-13));
    CHECK(prm.Lambda == doctest::Approx(0.26816768637800038).epsilon(1e-13));
    CHECK(prm.mu == doctest::Approx(8.0376668394545552).epsilon(1e-13));
    CHECK(prm.c == doctest::Approx(0.67229714696475823).epsilon(1e-13));
    CHECK(prm.delta == doctest::Approx(0.17605126123221654).epsilon(1e-13));
    // The construction identity c gamma delta^gamma = gamma k tau = Lambda/2.
    CHECK(prm.c * prm.gamma * rpow(prm.delta, prm.gamma) ==
          doctest::Approx(0.5 * prm.Lambda).epsilon(1e-12));
}

TEST_CASE("shell sub-solution fixture: p=2, n=2, m=1, h=2, eps=0.25, rho0=0.5, delta0=2") {
    SideBarrierLowP prm =
        derive_side_lowp_sub(Exponents(2.0, 2), 1.0, 3.0, 2.0, 0.25, {1.0, 0.0}, 0.5,
                             {1.0, 0.0}, 0.5, 2.0, 1.0);
    CHECK(prm.gamma == doctest::Approx(1.0));
    CHECK(prm.k == doctest::Approx(1.0986122886681097).epsilon(1e-14));
    CHECK(prm.A == doctest::Approx(0.97676229554585152).epsilon(1e-13));
    CHECK(prm.rho == doctest::Approx(0.47116409078049777).epsilon(1e-13));
    CHECK(prm.delta == doctest::Approx(0.50559820476535376).epsilon(1e-13));
    // rho + delta hits the A-cap exactly here and respects the shell bound.
    CHECK(prm.rho + prm.delta == doctest::Approx(prm.A).epsilon(1e-12));
    CHECK(prm.rho + prm.delta <= 0.5 * 2.0 + 1e-12);
}

TEST_CASE("scaled indent fixture: p=2, n=3, M=3, h=2, eps=0.25, rho0=0.5, delta0=2, tau0=1") {
    const Exponents e(2.0, 3);
    LowPSuperScaling sc = derive_lowp_super_scaling(e, 3.0, 2.0, 0.25);
    CHECK(sc.alpha == doctest::Approx(0.33647223662121293).epsilon(1e-14));
    CHECK(sc.lambda == doctest::Approx(2.6748120707896153).epsilon(1e-13));
    CHECK(sc.eps_hat == doctest::Approx(0.03125).epsilon(1e-15));
    SideBarrierLowP prm = derive_side_lowp_super(e, 1.0, 3.0, 2.0, 0.25, {1.0, 0.0, 0.0}, 0.5,
                                                 sc, 0.5, 2.0, 1.0);
    CHECK(prm.k == doctest::Approx(0.14509334345612773).epsilon(1e-12));
    CHECK(prm.theta == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(prm.gamma == doctest::Approx(3.2252964426338510).epsilon(1e-12));
    CHECK(prm.L == doctest::Approx(0.013264810515239818).epsilon(1e-11));
    CHECK(prm.c == doctest::Approx(0.020685939536803525).epsilon(1e-11));
    CHECK(prm.rho == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(prm.delta == doctest::Approx(0.26848981206597189).epsilon(1e-11));
    // The scaled-time identity lambda k tau = theta^2 Lambda / gamma.
    CHECK(prm.lambda_scale * prm.k * prm.tau ==
          doctest::Approx(prm.theta * prm.theta * prm.Lambda / prm.gamma).epsilon(1e-12));
    // Residual-sign bound: k - L / c^{p/gamma} <= 0.
    CHECK(prm.k - prm.L / std::pow(prm.c, e.p / prm.gamma) <= 1e-12);
}

// ---------------------------------------------------------------------------
// Problem-driven construction and evaluation
// ---------------------------------------------------------------------------

TEST_CASE("initial barriers: anchor values and region structure") {
    CylinderProblem prob = smooth_ball_problem(3.0, 2);
    const Vec y{0.2, -0.3};
    const double eps = 0.2;
    Barrier sub = make_initial_sub(prob, y, eps);
    Barrier super = make_initial_super(prob, y, eps);
    const double h_y0 = prob.h_initial(y);

    CHECK(sub.value({y, 0.0}) == doctest::Approx(h_y0 - 2 * eps).epsilon(1e-12));
    CHECK(super.value({y, 0.0}) == doctest::Approx(h_y0 + 2 * eps).epsilon(1e-12));

    // Far away the extension rules.
    const SpaceTimePoint far{{-0.9, 0.2}, 0.5};
    CHECK(sub.classify(far) == Piece::exterior);
    CHECK(sub.value(far) == doctest::Approx(sub.base_value(0.5)));
    CHECK(super.value(far) == doctest::Approx(super.base_value(0.5)));

    // Sub stays above its base, super below, globally.
    for (double r : {0.0, 0.1, 0.3, 0.8})
        for (double t : {0.0, 0.4, 0.9}) {
            const SpaceTimePoint pt{{y[0] + r, y[1]}, t};
            CHECK(sub.value(pt) >= sub.base_value(t) - 1e-12);
            CHECK(super.value(pt) <= super.base_value(t) + 1e-12);
        }
}

TEST_CASE("initial barrier: boundary placement uses the case-(b) rate") {
    CylinderProblem prob = smooth_ball_problem(2.5, 2);
    const Vec y = prob.domain().nearest_boundary({1.0, 0.2}).point;
    Barrier sub = make_initial_sub(prob, y, 0.2);
    const auto& prm = std::get<InitialBarrierParams>(sub.params());
    CHECK(prm.boundary_placement);
    CHECK(prm.tau > 0.0);
    const double rate = std::log((prm.h_anchor - 2 * prm.eps) / (prm.m - 2 * prm.eps)) / prm.tau;
    CHECK(prm.ell == doctest::Approx(std::max(prm.lambda / (2.5 - 1.0), rate)).epsilon(1e-12));
    // (h(y,0) - 2 eps) e^{-ell tau} <= m - 2 eps
    CHECK((prm.h_anchor - 2 * prm.eps) * std::exp(-prm.ell * prm.tau) <=
          prm.m - 2 * prm.eps + 1e-12);
}

TEST_CASE("degenerate data: extremum anchors return constant barriers") {
    auto dom = SpatialDomain::make_ball({0.0, 0.0}, 1.0, 0.5);
    CylinderProblem prob(dom, 1.0, Exponents(3.0, 2), BoundaryDatum::constant(2.0), 2000);
    Barrier sub = make_initial_sub(prob, {0.1, 0.1}, 0.2);
    CHECK(std::get<InitialBarrierParams>(sub.params()).degenerate);
    CHECK(sub.value({{0.5, 0.0}, 0.7}) == doctest::Approx(2.0));
    Barrier super = make_initial_super(prob, {0.1, 0.1}, 0.2);
    CHECK(super.value({{0.5, 0.0}, 0.7}) == doctest::Approx(2.0));

    Barrier ssub = make_side_sub_highp(prob, {1.0, 0.0}, 0.5, 0.2);
    CHECK(std::get<SideBarrierHighP>(ssub.params()).degenerate);
    CHECK(ssub.value({{0.5, 0.0}, 0.5}) == doctest::Approx(std::log(2.0 - 0.4)));
    CHECK(ssub.anchor_value() == doctest::Approx(std::log(2.0 - 0.4)));
}

TEST_CASE("cusp barriers: anchors, exterior value, and containment") {
    CylinderProblem prob = smooth_ball_problem(3.0, 2);
    const Vec y = prob.domain().nearest_boundary({std::cos(0.4), std::sin(0.4)}).point;
    const double s = 0.5, eps = 0.2;
    Barrier sub = make_side_sub_highp(prob, y, s, eps);
    Barrier super = make_side_super_highp(prob, y, s, eps);
    const double h_ys = prob.h_side(y, s);

    CHECK(sub.value({y, s}) == doctest::Approx(std::log(h_ys - 2 * eps)).epsilon(1e-12));
    CHECK(super.value({y, s}) == doctest::Approx(std::log(h_ys + 2 * eps)).epsilon(1e-12));

    const SpaceTimePoint far{{-y[0], -y[1]}, s};
    CHECK(sub.value(far) == doctest::Approx(std::log(prob.m() - 2 * eps)));
    CHECK(super.value(far) == doctest::Approx(std::log(prob.M() + 2 * eps)));

    // u-space view is the exponential.
    CHECK(sub.value_u(far) == doctest::Approx(prob.m() - 2 * eps));

    // Region containment: in space within delta, in time within tau.
    const auto& prm = std::get<SideBarrierHighP>(sub.params());
    CHECK(sub.classify({y, s + prm.tau * 1.01}) == Piece::exterior);
    Vec far_x = y;
    far_x[0] -= 1.02 * prm.delta * y[0] >= 0 ? 1.02 * prm.delta : -1.02 * prm.delta;
    CHECK(prm.delta <= 0.5 * prob.domain().diameter() + 1e-12);
}

TEST_CASE("cusp sub-solution: delta shrinks with tau along the dyadic ladder") {
    const Exponents e(3.0, 2);
    double prev_delta = 1e300;
    for (int j = 0; j < 8; ++j) {
        const double tau0 = std::pow(2.0, -j);
        SideBarrierHighP prm = derive_side_highp(BarrierKind::sub, e, 1.0, 3.0, 2.0, 0.25,
                                                 {1.0, 0.0}, 0.5, 10.0, tau0);
        CHECK(prm.delta < prev_delta);
        prev_delta = prm.delta;
    }
}

TEST_CASE("shell barriers: anchor via the outer ball and containment") {
    CylinderProblem prob = smooth_ball_problem(2.0, 2);
    const Vec y = prob.domain().nearest_boundary({std::cos(2.0), std::sin(2.0)}).point;
    const double s = 0.4, eps = 0.2;
    Barrier sub = make_side_sub_lowp(prob, y, s, eps);
    const auto& prm = std::get<SideBarrierLowP>(sub.params());
    const double h_ys = prob.h_side(y, s);

    CHECK(sub.value({y, s}) == doctest::Approx(std::log(h_ys - 2 * eps)).epsilon(1e-11));
    CHECK(dist(prm.z, y) == doctest::Approx(prm.rho).epsilon(1e-12));
    CHECK(prob.domain().signed_distance(prm.z) >= prm.rho - 1e-9);

    // Scaled super-solution: anchor in the scaled variable, margin chain in eta.
    Barrier super = make_side_super_lowp(prob, y, s, eps);
    const auto& sp = std::get<SideBarrierLowP>(super.params());
    const double scaled_anchor = super.scaled_value(y, super.scaled_time(s));
    CHECK(scaled_anchor == doctest::Approx(std::log(sp.h_hat + 2 * sp.eps_hat)).epsilon(1e-11));
    const double eta_anchor = super.value({y, s});
    CHECK(eta_anchor >= std::log(h_ys) - 1e-10);
    CHECK(eta_anchor <= std::log(h_ys + 2 * eps) + 1e-10);
}

TEST_CASE("analytic jets match central finite differences at second order") {
    CylinderProblem prob3 = smooth_ball_problem(3.0, 2);
    CylinderProblem prob2 = smooth_ball_problem(2.0, 2);
    const Vec yb = prob3.domain().nearest_boundary({std::cos(0.4), std::sin(0.4)}).point;

    struct Case {
        Barrier b;
        SpaceTimePoint pt;
        double hx; // FD steps scaled to the smooth piece
        double ht;
    };
    std::vector<Case> cases;
    {
        Barrier b = make_initial_sub(prob3, {0.2, -0.3}, 0.2);
        const auto& prm = std::get<InitialBarrierParams>(b.params());
        cases.push_back({b, {{0.2 + 0.4 * prm.delta, -0.3}, 0.3}, 0.02 * prm.delta, 1e-3});
    }
    {
        Barrier b = make_initial_super(prob3, {0.2, -0.3}, 0.2);
        const auto& prm = std::get<InitialBarrierParams>(b.params());
        cases.push_back(
            {b, {{0.2 - 0.5 * prm.delta, -0.3 + 0.1 * prm.delta}, 0.6}, 0.02 * prm.delta, 1e-4});
    }
    {
        Barrier b = make_side_sub_highp(prob3, yb, 0.5, 0.2);
        const auto& prm = std::get<SideBarrierHighP>(b.params());
        Vec x = yb;
        x[0] -= 0.4 * prm.delta;
        cases.push_back({b, {x, 0.5 + 0.35 * prm.tau}, 0.01 * prm.delta, 0.01 * prm.tau});
    }
    {
        Barrier b = make_side_super_highp(prob3, yb, 0.5, 0.2);
        const auto& prm = std::get<SideBarrierHighP>(b.params());
        Vec x = yb;
        x[0] -= 0.4 * prm.delta;
        cases.push_back({b, {x, 0.5 - 0.35 * prm.tau}, 0.01 * prm.delta, 0.01 * prm.tau});
    }
    {
        Barrier b = make_side_sub_lowp(prob2, yb, 0.4, 0.2);
        const auto& prm = std::get<SideBarrierLowP>(b.params());
        Vec u = (1.0 / dist(yb, prm.z)) * (yb - prm.z);
        Vec x = prm.z + (prm.rho + 0.2 * prm.delta) * u;
        cases.push_back(
            {b, {x, 0.4 + 0.2 * prm.tau}, 0.01 * prm.delta, 0.01 * prm.tau});
    }

    for (auto& c : cases) {
        const Jet analytic = c.b.jet(c.pt);
        // Observed order of the finite-difference error under step halving.
        const double e1 = jet_diff(analytic, fd_jet(c.b, c.pt, c.hx, c.ht));
        const double e2 = jet_diff(analytic, fd_jet(c.b, c.pt, 0.5 * c.hx, 0.5 * c.ht));
        if (e2 > 1e-9) { // below that, rounding noise dominates the ratio
            const double order = std::log2(e1 / e2);
            CHECK(order >= 1.9);
        }
        CHECK(e2 <= 1e-3);
    }
}

TEST_CASE("low-p super-solution jets: eta-jet is the scaled jet under the chain rule") {
    CylinderProblem prob = smooth_ball_problem(2.5, 3);
    Vec probe{std::cos(1.1), std::sin(1.1), 0.0};
    const Vec y = prob.domain().nearest_boundary(probe).point;
    Barrier super = make_side_super_lowp(prob, y, 0.5, 0.2);
    const auto& prm = std::get<SideBarrierLowP>(super.params());
    Vec u = (1.0 / dist(y, prm.z)) * (y - prm.z);
    Vec x = prm.z + (prm.rho + 0.3 * prm.delta) * u;
    const double t = 0.5 + 0.25 * prm.tau / std::pow(prm.lambda_scale, 0.5);

    const Jet jet_eta = super.jet({x, t});
    const Jet jet_phi = super.scaled_jet(x, super.scaled_time(t));
    const double lam = prm.lambda_scale;
    CHECK(jet_eta.time_slope ==
          doctest::Approx(std::pow(lam, prob.exponents().p - 1.0) * jet_phi.time_slope)
              .epsilon(1e-12));
    for (std::size_t i = 0; i < jet_eta.gradient.size(); ++i)
        CHECK(jet_eta.gradient[i] == doctest::Approx(lam * jet_phi.gradient[i]).epsilon(1e-12));

    // Finite differences on the eta view as an independent cross-check; steps
    // scaled to the (possibly very small) shell.
    const double tau_real = prm.tau / std::pow(prm.lambda_scale, 0.5);
    const Jet fd = fd_jet(super, {x, t}, 0.01 * prm.delta, 0.01 * tau_real);
    CHECK(jet_diff(jet_eta, fd) <= 1e-3);
}

TEST_CASE("jets refuse the guard band and the ridge") {
    CylinderProblem prob = smooth_ball_problem(3.0, 2);
    const Vec y = prob.domain().nearest_boundary({1.0, 0.0}).point;
    Barrier sub = make_side_sub_highp(prob, y, 0.5, 0.2);
    const auto& prm = std::get<SideBarrierHighP>(sub.params());
    Vec x = y;
    x[0] -= 0.4 * prm.delta;
    CHECK_THROWS_AS(sub.jet({x, 0.5}), OnRidge); // exactly on t = s
    // A point on the seam (depth ~ 0).
    const double r_seam = std::pow(prm.k * prm.tau / prm.c, 1.0 / prm.gamma);
    Vec xs = y;
    xs[0] -= r_seam;
    CHECK_THROWS_AS(sub.jet({xs, 0.5}), OnRidge);
}

TEST_CASE("continuity probes across the region seam") {
    CylinderProblem prob = smooth_ball_problem(3.0, 2);
    const Vec y = prob.domain().nearest_boundary({std::cos(5.1), std::sin(5.1)}).point;
    Barrier sub = make_side_sub_highp(prob, y, 0.5, 0.2);
    const auto& prm = std::get<SideBarrierHighP>(sub.params());
    const double t = 0.5 + 0.3 * prm.tau;
    const double avail = prm.k * prm.tau * 0.7;
    const double r_in = std::pow(avail * (1 - 1e-10) / prm.c, 1.0 / prm.gamma);
    const double r_out = std::pow(avail * (1 + 1e-10) / prm.c, 1.0 / prm.gamma);
    Vec dir{std::cos(2.2), std::sin(2.2)};
    const double diff = std::abs(sub.value({y + r_in * dir, t}) -
                                 sub.value({y + r_out * dir, t}));
    CHECK(diff <= 1e-9 * std::max(1.0, std::abs(sub.base_value(t))));
}

TEST_CASE("error paths: margins, regimes, domain support") {
    CylinderProblem prob = smooth_ball_problem(3.0, 2);
    CHECK_THROWS_AS(make_initial_sub(prob, {0.0, 0.0}, 0.9), InvalidInput); // eps >= m/2
    CHECK_THROWS_AS(make_side_sub_lowp(prob, {1.0, 0.0}, 0.5, 0.2), WrongRegime); // p > n
    CylinderProblem prob2 = smooth_ball_problem(2.0, 2);
    CHECK_THROWS_AS(make_side_sub_highp(prob2, {1.0, 0.0}, 0.5, 0.2), WrongRegime);
    CHECK_THROWS_AS(make_side_sub(prob, {1.0, 0.0}, 1.5, 0.2), DomainViolation); // s >= T
    CHECK_THROWS_AS(make_side_sub(prob, {0.2, 0.0}, 0.5, 0.2), DomainViolation); // y interior

    // Outer-ball support missing.
    auto dom = SpatialDomain::make_ball({0.0, 0.0}, 1.0); // no rho0
    CylinderProblem nop(dom, 1.0, Exponents(2.0, 2), BoundaryDatum::constant(2.0), 2000);
    CHECK_THROWS_AS(make_side_sub_lowp(nop, {1.0, 0.0}, 0.5, 0.2), UnsupportedDomain);
}

TEST_CASE("barriers serialize to a complete JSON record") {
    CylinderProblem prob = smooth_ball_problem(3.0, 2);
    const Vec y = prob.domain().nearest_boundary({1.0, 0.0}).point;
    Barrier sub = make_side_sub_highp(prob, y, 0.5, 0.2);
    auto j = sub.to_json();
    CHECK(j["family"] == "side-highp");
    CHECK(j["kind"] == "sub");
    CHECK(j["anchor"]["s"] == doctest::Approx(0.5));
    CHECK(j["params"].contains("k"));
    CHECK(j["params"].contains("gamma"));
    CHECK(j["params"].contains("c"));
    CHECK(j["params"].contains("delta"));
}
