#include "trudinger/verifier.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace trudinger {

namespace {

bool lowp_super(const Barrier& b) {
    return b.family() == BarrierFamily::side_lowp && b.kind() == BarrierKind::super;
}

bool is_degenerate(const Barrier& b) {
    if (auto* p = std::get_if<InitialBarrierParams>(&b.params())) return p->degenerate;
    if (auto* p = std::get_if<SideBarrierHighP>(&b.params())) return p->degenerate;
    return std::get<SideBarrierLowP>(b.params()).degenerate;
}

double barrier_scale(const Barrier& b) {
    const Exponents& e = b.exponents();
    if (is_degenerate(b)) return 1.0;
    if (auto* p = std::get_if<InitialBarrierParams>(&b.params())) {
        const double gap = (b.kind() == BarrierKind::sub) ? p->h_anchor - p->m
                                                          : p->M - p->h_anchor;
        return p->lambda * std::pow(p->M + 2 * p->eps, e.p - 1.0) +
               e.sigma() * std::pow(2.0, e.p - 1.0) * std::pow(gap, e.p - 1.0) /
                   std::pow(p->delta, e.p);
    }
    if (auto* p = std::get_if<SideBarrierHighP>(&b.params())) {
        const double spatial = std::pow(p->c, e.p) * std::pow(p->gamma, e.p) *
                               rpow(p->delta, e.p * (p->gamma - 1.0));
        return (e.p - 1.0) * (p->k + spatial);
    }
    auto& p = std::get<SideBarrierLowP>(b.params());
    if (b.kind() == BarrierKind::sub) {
        const double spatial =
            std::pow(p.gamma, e.p) * rpow(p.rho + p.delta, -e.p * (1.0 + p.gamma));
        return (e.p - 1.0) * (p.k + spatial);
    }
    return (e.p - 1.0) * (p.k + p.L / std::pow(p.c, e.p / p.gamma));
}

// Item-(iii) cap in u-space: the value the barrier attains at the anchor,
// extended in time the way each construction does.
double region_cap_u(const Barrier& b, double t) {
    if (auto* p = std::get_if<InitialBarrierParams>(&b.params())) {
        const double v0 = (b.kind() == BarrierKind::sub) ? p->h_anchor - 2 * p->eps
                                                         : p->h_anchor + 2 * p->eps;
        const double sgn = (b.kind() == BarrierKind::sub) ? -1.0 : 1.0;
        return v0 * std::exp(sgn * p->ell * t);
    }
    if (auto* p = std::get_if<SideBarrierHighP>(&b.params()))
        return (b.kind() == BarrierKind::sub) ? p->h_anchor - 2 * p->eps
                                              : p->h_anchor + 2 * p->eps;
    auto& p = std::get<SideBarrierLowP>(b.params());
    if (b.kind() == BarrierKind::sub) return p.h_anchor - 2 * p.eps;
    if (p.degenerate) return p.M + 2 * p.eps;
    return std::pow(p.h_hat + 2 * p.eps_hat, p.lambda_scale);
}

struct SideShape {
    double k = 0.0, tau = 0.0;
    double s_governing = 0.0; // anchor time in the governing time variable
    bool degenerate = true;
};

SideShape side_shape(const Barrier& b) {
    SideShape sh;
    if (auto* p = std::get_if<SideBarrierHighP>(&b.params())) {
        sh = {p->k, p->tau, p->s, p->degenerate};
    } else if (auto* p = std::get_if<SideBarrierLowP>(&b.params())) {
        sh = {p->k, p->tau, lowp_super(b) ? b.scaled_time(p->s) : p->s, p->degenerate};
    }
    return sh;
}

// Spatial point at prescribed depth-gap from the seam, in direction dir.
// Returns false when the radius equation has no root (outside the shell).
bool point_at_depth_gap(const Barrier& b, const Vec& dir, double depth_gap, Vec& x) {
    if (auto* p = std::get_if<SideBarrierHighP>(&b.params())) {
        const double r = std::pow(std::max(depth_gap, 0.0) / p->c, 1.0 / p->gamma);
        x = p->y + r * dir;
        return true;
    }
    auto& p = std::get<SideBarrierLowP>(b.params());
    const double cc = (b.kind() == BarrierKind::sub) ? 1.0 : p.c;
    const double rg = rpow(p.rho, -p.gamma) - depth_gap / cc;
    if (!(rg > 0.0)) return false;
    x = p.z + std::pow(rg, -1.0 / p.gamma) * dir;
    return true;
}

struct PtSample {
    Vec x;
    double t; // governing time (scaled for the low-p super-solution)
};

std::vector<PtSample> sample_piece(const Barrier& b, const CylinderProblem& prob, Piece piece,
                                   long target, std::uint64_t salt) {
    std::vector<PtSample> out;
    const auto& dom = prob.domain();
    const int n = dom.dim();
    const double T = b.horizon();
    const bool scaled = lowp_super(b);
    HaltonSeq seq(5, salt);
    const long attempts_cap = 80 * target + 1000;

    if (auto* p = std::get_if<InitialBarrierParams>(&b.params())) {
        if (p->degenerate) return out;
        for (long a = 0; a < attempts_cap && static_cast<long>(out.size()) < target; ++a) {
            Vec u = seq.next();
            Vec dir = sphere_direction(n, u[0], u[1]);
            double r;
            if (piece == Piece::plus_region)
                r = p->delta * (1.0 - 1e-5) * std::pow(u[2], 1.0 / n);
            else
                r = p->delta * (1.0 + 1e-5) + 0.5 * dom.diameter() * u[2];
            Vec x = p->y + r * dir;
            if (!(dom.signed_distance(x) < 0.0)) continue;
            out.push_back({std::move(x), u[3] * T * (1.0 - 1e-9)});
        }
        return out;
    }

    const SideShape sh = side_shape(b);
    if (sh.degenerate) return out;

    for (long a = 0; a < attempts_cap && static_cast<long>(out.size()) < target; ++a) {
        Vec u = seq.next();
        if (piece == Piece::exterior) {
            HaltonSeq inner(n, 7919 * static_cast<std::uint64_t>(a) + salt);
            Vec x;
            try {
                x = dom.sample_interior(inner);
            } catch (const InvalidInput&) {
                break;
            }
            const double t = u[0] * T * (1.0 - 1e-9);
            const double tg = scaled ? b.scaled_time(t) : t;
            // Keep a clear margin below the seam so jets are well defined.
            if (scaled) {
                if (b.scaled_classify(x, tg) != Piece::exterior) continue;
            } else if (b.classify({x, t}) != Piece::exterior) {
                continue;
            }
            out.push_back({std::move(x), tg});
            continue;
        }
        const double sgn_t = (piece == Piece::plus_region) ? 1.0 : -1.0;
        const double ut = 1e-4 + u[2] * (1.0 - 1e-2); // time fraction of tau
        const double ud = 0.01 + 0.98 * u[3];         // fraction of available depth
        const double avail = sh.k * sh.tau * (1.0 - ut);
        const double t = sh.s_governing + sgn_t * ut * sh.tau;
        Vec dir = sphere_direction(n, u[0], u[1]);
        Vec x;
        if (!point_at_depth_gap(b, dir, avail * (1.0 - ud), x)) continue;
        if (!(dom.signed_distance(x) < 0.0)) continue;
        if (avail * ud <= 3e-6 * sh.k * sh.tau) continue;     // seam guard
        if (ut * sh.tau <= 3e-6 * sh.tau) continue;           // ridge guard
        out.push_back({std::move(x), t});
    }
    return out;
}

struct BoundarySample {
    Vec x;
    double t;
    bool initial_slice;
};

std::vector<BoundarySample> sample_parabolic_boundary(const CylinderProblem& prob, long count) {
    std::vector<BoundarySample> out;
    const auto& dom = prob.domain();
    const double T = prob.horizon();
    const long n_init = count / 3;
    HaltonSeq seq(dom.dim());
    for (long i = 0; i < n_init; ++i) out.push_back({dom.sample_interior(seq), 0.0, true});
    const long per_time = 8;
    const long n_space = std::max<long>(1, (count - n_init) / per_time);
    for (long i = 0; i < n_space; ++i) {
        Vec x = dom.sample_boundary(static_cast<std::uint64_t>(i));
        for (long j = 0; j < per_time; ++j) {
            const double t =
                T * (1.0 - 1e-9) * halton(static_cast<std::uint64_t>(i * per_time + j), 5);
            out.push_back({x, t, false});
        }
    }
    return out;
}

// Lateral-boundary samples concentrated near the side anchor so that the
// region-ordering item is actually exercised.
std::vector<BoundarySample> sample_near_anchor(const Barrier& b, const CylinderProblem& prob,
                                               int count) {
    std::vector<BoundarySample> out;
    if (b.family() == BarrierFamily::initial) return out;
    const SideShape sh = side_shape(b);
    if (sh.degenerate) return out;
    const SpaceTimePoint a = b.anchor();
    const auto& dom = prob.domain();
    double reach = 0.0;
    if (auto* p = std::get_if<SideBarrierHighP>(&b.params())) reach = p->delta;
    else reach = std::get<SideBarrierLowP>(b.params()).delta + 1e-3;
    const double tau_real = lowp_super(b)
        ? sh.tau / std::pow(std::get<SideBarrierLowP>(b.params()).lambda_scale,
                            b.exponents().p - 2.0)
        : sh.tau;
    for (int i = 0; i < count; ++i) {
        Vec dir = sphere_direction(dom.dim(), halton(static_cast<std::uint64_t>(i), 2),
                                   halton(static_cast<std::uint64_t>(i), 3));
        const double r = reach * halton(static_cast<std::uint64_t>(i), 5);
        Vec x = dom.nearest_boundary(a.x + r * dir).point;
        const double dt = (2.0 * halton(static_cast<std::uint64_t>(i), 7) - 1.0) * tau_real;
        const double t = std::clamp(a.t + dt, 0.0, b.horizon() * (1.0 - 1e-9));
        out.push_back({std::move(x), t, false});
    }
    return out;
}

void update(CheckOutcome& c, double margin, double tol) {
    ++c.samples;
    if (c.samples == 1 || margin < c.worst) c.worst = margin;
    if (margin < -tol) c.pass = false;
}

} // namespace

ResidualSample residual_at(const Barrier& b, const SpaceTimePoint& pt) {
    ResidualSample rs;
    rs.pt = pt;
    rs.orientation = b.kind();
    const Exponents& e = b.exponents();
    if (lowp_super(b)) {
        auto& p = std::get<SideBarrierLowP>(b.params());
        const double omega = b.scaled_time(pt.t);
        rs.piece = b.scaled_classify(pt.x, omega);
        rs.residual =
            p.degenerate ? 0.0 : kp_lambda_form(b.scaled_jet(pt.x, omega), p.lambda_scale, e);
        return rs;
    }
    rs.piece = b.classify(pt);
    const Jet j = b.jet(pt);
    rs.residual = (b.family() == BarrierFamily::initial) ? tp_form(b.value(pt), j, e)
                                                         : kp_form(j, e);
    return rs;
}

bool ridge_check(const Barrier& b, const SpaceTimePoint& pt, double* residual) {
    const Exponents& e = b.exponents();
    if (b.family() == BarrierFamily::initial) {
        // Seam analogue: the jet argument at r = delta forces q = 0 and the
        // slope of the exponential extension.
        auto& p = std::get<InitialBarrierParams>(b.params());
        if (p.degenerate) return true;
        const double r = dist(pt.x, p.y);
        if (std::abs(r - p.delta) > 1e-6 * p.delta)
            throw DomainViolation("ridge_check: point is not on the region seam");
        const double base = b.base_value(pt.t);
        const double a = (b.kind() == BarrierKind::sub ? -1.0 : 1.0) * p.ell * base;
        const double res = tp_form(base, Jet(a, Vec(e.n, 0.0), Matrix(e.n)), e);
        if (residual) *residual = res;
        return b.kind() == BarrierKind::sub ? res >= 0.0 : res <= 0.0;
    }

    const SideShape sh = side_shape(b);
    if (sh.degenerate) return true;
    const bool scaled = lowp_super(b);
    const double t_gov = scaled ? b.scaled_time(pt.t) : pt.t;
    if (std::abs(t_gov - sh.s_governing) > 1e-9 * sh.tau)
        throw DomainViolation("ridge_check: point is not on the t = s slice");

    // Spatial jets are time-independent within each piece: take them from a
    // nudged interior point of R+ and substitute the binding slope.
    const double nudge = 1e-4 * sh.tau;
    Jet j = scaled ? b.scaled_jet(pt.x, sh.s_governing + nudge)
                   : b.jet({pt.x, pt.t + nudge});
    if (norm(j.gradient) == 0.0)
        throw DomainViolation("ridge_check: point is outside the cusp base");
    const double binding = (b.kind() == BarrierKind::sub) ? sh.k : -sh.k;
    Jet worst(binding, j.gradient, j.hessian);
    double res;
    if (scaled) {
        auto& p = std::get<SideBarrierLowP>(b.params());
        res = kp_lambda_form(worst, p.lambda_scale, e);
    } else {
        res = kp_form(worst, e);
    }
    if (residual) *residual = res;
    const double tol = 1e-9 * barrier_scale(b);
    return b.kind() == BarrierKind::sub ? res >= -tol : res <= tol;
}

VerificationReport sweep(const Barrier& b, const CylinderProblem& prob, const SweepConfig& cfg) {
    VerificationReport rep;
    rep.barrier = b.id();
    rep.scale = barrier_scale(b);
    rep.tolerance = 1e-9 * rep.scale;
    const Exponents& e = b.exponents();
    const bool sub = b.kind() == BarrierKind::sub;
    const bool scaled = lowp_super(b);
    const bool degenerate = is_degenerate(b);

    // --- piece residuals ------------------------------------------------------
    const std::vector<Piece> piece_list =
        (b.family() == BarrierFamily::initial)
            ? std::vector<Piece>{Piece::plus_region, Piece::exterior}
            : std::vector<Piece>{Piece::plus_region, Piece::minus_region, Piece::exterior};
    std::uint64_t salt = 1;
    for (Piece piece : piece_list) {
        PieceStats st;
        st.piece = to_string(piece);
        const long target =
            (piece == Piece::exterior) ? cfg.samples_per_piece / 4 : cfg.samples_per_piece;
        for (const PtSample& ps : sample_piece(b, prob, piece, target, salt++ * 1000003)) {
            double res;
            try {
                if (scaled) {
                    auto& p = std::get<SideBarrierLowP>(b.params());
                    res = kp_lambda_form(b.scaled_jet(ps.x, ps.t), p.lambda_scale, e);
                } else {
                    const SpaceTimePoint pt{ps.x, ps.t};
                    const Jet j = b.jet(pt);
                    res = (b.family() == BarrierFamily::initial) ? tp_form(b.value(pt), j, e)
                                                                 : kp_form(j, e);
                }
            } catch (const OnRidge&) {
                continue;
            }
            ++st.samples;
            st.min_residual = std::min(st.min_residual, res);
            st.max_residual = std::max(st.max_residual, res);
            update(rep.residual_sign, sub ? res : -res, rep.tolerance);
        }
        rep.total_samples += st.samples;
        rep.pieces.push_back(st);
    }

    // --- ridge ----------------------------------------------------------------
    if (!degenerate) {
        if (b.family() == BarrierFamily::initial) {
            auto& p = std::get<InitialBarrierParams>(b.params());
            for (int i = 0; i < cfg.ridge_samples; ++i) {
                Vec dir = sphere_direction(e.n, halton(static_cast<std::uint64_t>(i), 2),
                                           halton(static_cast<std::uint64_t>(i), 3));
                Vec x = p.y + p.delta * dir;
                const double t =
                    b.horizon() * (1.0 - 1e-9) * halton(static_cast<std::uint64_t>(i), 5);
                double res;
                const bool ok = ridge_check(b, {x, t}, &res);
                update(rep.ridge, ok ? std::abs(res) : -std::abs(res), rep.tolerance);
            }
        } else {
            const SideShape sh = side_shape(b);
            const SpaceTimePoint a = b.anchor();
            for (int i = 0; i < cfg.ridge_samples; ++i) {
                const double ud = 0.02 + 0.96 * halton(static_cast<std::uint64_t>(i), 5);
                Vec dir = sphere_direction(e.n, halton(static_cast<std::uint64_t>(i), 2),
                                           halton(static_cast<std::uint64_t>(i), 3));
                Vec x;
                if (!point_at_depth_gap(b, dir, sh.k * sh.tau * (1.0 - ud), x)) continue;
                if (!(prob.domain().signed_distance(x) < 0.0)) continue;
                double res;
                const bool ok = ridge_check(b, {x, a.t}, &res);
                update(rep.ridge, ok ? std::abs(res) : -std::abs(res), rep.tolerance);
            }
        }
    }

    // --- continuity across the seam ---------------------------------------------
    if (!degenerate) {
        const double vscale = std::max(1.0, std::abs(b.base_value(0.0)));
        for (int i = 0; i < cfg.continuity_pairs; ++i) {
            Vec dir = sphere_direction(e.n, halton(static_cast<std::uint64_t>(i), 2),
                                       halton(static_cast<std::uint64_t>(i), 3));
            double t_real;
            Vec x_in, x_out;
            if (auto* p = std::get_if<InitialBarrierParams>(&b.params())) {
                t_real = b.horizon() * 0.999 * halton(static_cast<std::uint64_t>(i), 5);
                x_in = p->y + (p->delta * (1.0 - 1e-10)) * dir;
                x_out = p->y + (p->delta * (1.0 + 1e-10)) * dir;
            } else {
                const SideShape sh = side_shape(b);
                const double ut = 0.9 * halton(static_cast<std::uint64_t>(i), 5);
                const double t_gov = sh.s_governing + ut * sh.tau;
                const double avail = sh.k * sh.tau * (1.0 - ut);
                if (!point_at_depth_gap(b, dir, avail * (1.0 - 1e-10), x_in)) continue;
                if (!point_at_depth_gap(b, dir, avail * (1.0 + 1e-10), x_out)) continue;
                t_real = scaled ? t_gov / std::pow(std::get<SideBarrierLowP>(b.params())
                                                       .lambda_scale,
                                                   e.p - 2.0)
                                : t_gov;
            }
            const double diff = std::abs(b.value({x_in, t_real}) - b.value({x_out, t_real}));
            update(rep.continuity, 1e-9 * vscale - diff, 0.0);
        }
    }

    // --- extension hypotheses: w = base outside, one-sided bound globally --------
    {
        HaltonSeq seq(e.n, 12345);
        for (long i = 0; i < cfg.global_samples; ++i) {
            Vec x = prob.domain().sample_interior(seq);
            const double t =
                b.horizon() * (1.0 - 1e-9) * halton(static_cast<std::uint64_t>(i), 7);
            const SpaceTimePoint pt{x, t};
            const double v = b.value(pt);
            const double base = b.base_value(t);
            update(rep.extension, sub ? v - base : base - v, rep.tolerance);
            if (b.classify(pt) == Piece::exterior) {
                const double vscale = std::max(1.0, std::abs(base));
                update(rep.extension, 1e-12 * vscale - std::abs(v - base), 0.0);
            }
        }
    }

    // --- ordering items (i), (iii), (iv) -----------------------------------------
    {
        const SpaceTimePoint a = b.anchor();
        const double got = scaled ? b.scaled_value(a.x, b.scaled_time(a.t)) : b.value(a);
        const double want = b.anchor_value();
        update(rep.anchor, 1e-12 * std::max(1.0, std::abs(want)) - std::abs(got - want), 0.0);
    }
    {
        auto samples = sample_parabolic_boundary(prob, cfg.boundary_samples);
        auto near = sample_near_anchor(b, prob, 512);
        samples.insert(samples.end(), near.begin(), near.end());
        for (const auto& s : samples) {
            const double h = s.initial_slice ? prob.h_initial(s.x) : prob.h_side(s.x, s.t);
            const SpaceTimePoint pt{s.x, s.t};
            const double vu = b.value_u(pt);
            const double tol_ord = 1e-9 * std::max(1.0, h);
            update(rep.boundary_ordering, sub ? h - vu : vu - h, tol_ord);
            if (b.classify(pt) != Piece::exterior) {
                const double cap = region_cap_u(b, s.t);
                update(rep.region_ordering, sub ? cap - vu : vu - cap, tol_ord);
                update(rep.region_ordering, sub ? h - cap : cap - h, tol_ord);
            }
        }
    }

    rep.pass = rep.residual_sign.pass && rep.ridge.pass && rep.continuity.pass &&
               rep.extension.pass && rep.anchor.pass && rep.region_ordering.pass &&
               rep.boundary_ordering.pass;
    return rep;
}

double log_equiv_residual(double u, const Jet& jet_u, const Jet& jet_eta, const Exponents& e) {
    if (!(u > 0.0)) throw PositivityViolation("log_equiv_residual: u must be positive");
    return std::abs(tp_form(u, jet_u, e) - std::pow(u, e.p - 1.0) * kp_form(jet_eta, e));
}

double scaling_residual(const Jet& jet_eta, double alpha, const Exponents& e) {
    if (!(alpha > 0.0)) throw InvalidInput("scaling_residual: alpha must be > 0");
    const double ap = std::pow(alpha, e.p);
    Vec grad = (1.0 / alpha) * jet_eta.gradient;
    Matrix hess = jet_eta.hessian;
    hess *= 1.0 / (alpha * alpha);
    Jet jet_phi(jet_eta.time_slope / ap, std::move(grad), std::move(hess));
    return std::abs(kp_form(jet_eta, e) - ap * kp_form(jet_phi, e));
}

double separation_tp(double phi, const Vec& grad_phi, const Matrix& hess_phi, double ell,
                     double t, const Exponents& e) {
    if (!(phi > 0.0)) throw PositivityViolation("separation_tp: phi must be positive");
    const double f = std::exp(ell * t);
    Vec grad = f * grad_phi;
    Matrix hess = hess_phi;
    hess *= f;
    Jet j(ell * phi * f, std::move(grad), std::move(hess));
    return tp_form(phi * f, j, e);
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["barrier"] = barrier;
    j["scale"] = scale;
    j["tolerance"] = tolerance;
    j["total_samples"] = total_samples;
    j["pass"] = pass;
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : pieces)
        ps.push_back({{"piece", p.piece},
                      {"samples", p.samples},
                      {"min_residual", p.samples ? p.min_residual : 0.0},
                      {"max_residual", p.samples ? p.max_residual : 0.0}});
    j["pieces"] = std::move(ps);
    auto enc = [](const CheckOutcome& c) {
        return nlohmann::json{{"pass", c.pass}, {"worst", c.worst}, {"samples", c.samples}};
    };
    j["checks"] = {{"residual_sign", enc(residual_sign)},
                   {"ridge", enc(ridge)},
                   {"continuity", enc(continuity)},
                   {"extension", enc(extension)},
                   {"anchor", enc(anchor)},
                   {"region_ordering", enc(region_ordering)},
                   {"boundary_ordering", enc(boundary_ordering)}};
    return j;
}

} // namespace trudinger
