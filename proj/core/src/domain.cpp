#include "trudinger/domain.hpp"

#include <algorithm>
#include <cmath>

namespace trudinger {

namespace {

void check_dim(const Vec& a, const Vec& b) {
    if (a.size() != b.size() || a.empty())
        throw InvalidInput("SpatialDomain: inconsistent coordinate dimensions");
}

} // namespace

SpatialDomain SpatialDomain::make_box(Vec lo, Vec hi, std::optional<double> rho0) {
    check_dim(lo, hi);
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (!(lo[i] < hi[i])) throw InvalidInput("box: lo must be < hi on every axis");
    SpatialDomain d;
    d.kind_ = DomainKind::box;
    d.dim_ = static_cast<int>(lo.size());
    d.lo_ = std::move(lo);
    d.hi_ = std::move(hi);
    d.rho0_ = rho0;
    return d;
}

SpatialDomain SpatialDomain::make_ball(Vec center, double radius, std::optional<double> rho0) {
    if (!(radius > 0.0)) throw InvalidInput("ball: radius must be > 0");
    SpatialDomain d;
    d.kind_ = DomainKind::ball;
    d.dim_ = static_cast<int>(center.size());
    d.center_ = std::move(center);
    d.r_ = radius;
    d.rho0_ = rho0;
    return d;
}

SpatialDomain SpatialDomain::make_annulus(Vec center, double r_inner, double r_outer,
                                          std::optional<double> rho0) {
    if (!(0.0 < r_inner && r_inner < r_outer))
        throw InvalidInput("annulus: need 0 < r_inner < r_outer");
    if (rho0 && *rho0 > r_inner)
        throw InvalidInput("annulus: outer_ball_radius cannot exceed the inner radius");
    SpatialDomain d;
    d.kind_ = DomainKind::annulus;
    d.dim_ = static_cast<int>(center.size());
    d.center_ = std::move(center);
    d.r_ = r_outer;
    d.r_in_ = r_inner;
    d.rho0_ = rho0;
    return d;
}

SpatialDomain SpatialDomain::make_rounded_box(Vec lo, Vec hi, double round_radius,
                                              std::optional<double> rho0) {
    check_dim(lo, hi);
    if (!(round_radius > 0.0)) throw InvalidInput("rounded_box: round_radius must be > 0");
    SpatialDomain d;
    d.kind_ = DomainKind::rounded_box;
    d.dim_ = static_cast<int>(lo.size());
    d.lo_ = std::move(lo);
    d.hi_ = std::move(hi);
    d.r_ = round_radius;
    d.rho0_ = rho0;
    return d;
}

double SpatialDomain::box_sdf(const Vec& x, const Vec& lo, const Vec& hi) const {
    // Exact Euclidean signed distance of an axis-aligned box.
    double out2 = 0.0;      // squared distance when outside
    double inside = -1e300; // max of per-axis signed margins when inside
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double c = 0.5 * (lo[i] + hi[i]);
        const double half = 0.5 * (hi[i] - lo[i]);
        const double q = std::abs(x[i] - c) - half;
        if (q > 0.0) out2 += q * q;
        inside = std::max(inside, q);
    }
    if (out2 > 0.0) return std::sqrt(out2);
    return inside; // <= 0
}

double SpatialDomain::signed_distance(const Vec& x) const {
    switch (kind_) {
        case DomainKind::box: return box_sdf(x, lo_, hi_);
        case DomainKind::ball: return dist(x, center_) - r_;
        case DomainKind::annulus: {
            const double r = dist(x, center_);
            return std::max(r - r_, r_in_ - r);
        }
        case DomainKind::rounded_box: return box_sdf(x, lo_, hi_) - r_;
    }
    throw InvalidInput("signed_distance: bad kind");
}

BoundaryPoint SpatialDomain::box_nearest(const Vec& x, const Vec& lo, const Vec& hi) const {
    const std::size_t n = x.size();
    Vec clamped(n);
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
        clamped[i] = std::clamp(x[i], lo[i], hi[i]);
        if (clamped[i] != x[i]) inside = false;
    }
    if (!inside) {
        Vec nrm = x - clamped;
        const double d = norm(nrm);
        nrm = (d > 0.0 ? 1.0 / d : 1.0) * nrm;
        return {clamped, nrm};
    }
    // Inside: push out through the closest face.
    std::size_t axis = 0;
    double best = 1e300;
    double side = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] - lo[i] < best) { best = x[i] - lo[i]; axis = i; side = -1.0; }
        if (hi[i] - x[i] < best) { best = hi[i] - x[i]; axis = i; side = 1.0; }
    }
    Vec pt = x;
    pt[axis] = (side > 0.0) ? hi[axis] : lo[axis];
    Vec nrm(n, 0.0);
    nrm[axis] = side;
    return {pt, nrm};
}

BoundaryPoint SpatialDomain::nearest_boundary(const Vec& x) const {
    switch (kind_) {
        case DomainKind::box: return box_nearest(x, lo_, hi_);
        case DomainKind::ball: {
            Vec d = x - center_;
            double r = norm(d);
            if (r == 0.0) { d.assign(x.size(), 0.0); d[0] = 1.0; r = 1.0; }
            Vec u = (1.0 / r) * d;
            return {center_ + r_ * u, u};
        }
        case DomainKind::annulus: {
            Vec d = x - center_;
            double r = norm(d);
            if (r == 0.0) { d.assign(x.size(), 0.0); d[0] = 1.0; r = 1.0; }
            Vec u = (1.0 / r) * d;
            // Closer sphere wins; the inner sphere's outward normal points
            // toward the center (out of the domain is into the hole).
            if (r - r_in_ < r_ - r && r_in_ > 0.0)
                return {center_ + r_in_ * u, -1.0 * u};
            return {center_ + r_ * u, u};
        }
        case DomainKind::rounded_box: {
            BoundaryPoint core = box_nearest(x, lo_, hi_);
            const double core_sdf = box_sdf(x, lo_, hi_);
            if (core_sdf > 0.0) {
                // Outside the core: walk from the core surface outward.
                Vec u = (1.0 / core_sdf) * (x - core.point);
                return {core.point + r_ * u, u};
            }
            return {core.point + r_ * core.normal, core.normal};
        }
    }
    throw InvalidInput("nearest_boundary: bad kind");
}

Vec SpatialDomain::outward_normal(const Vec& y) const {
    if (kind_ == DomainKind::box) {
        // Supporting normal: combine all active face constraints (diagonal at
        // corners), which is what exterior tangent balls need.
        const double tol = 1e-9 * diameter();
        Vec nrm(y.size(), 0.0);
        bool any = false;
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (std::abs(y[i] - lo_[i]) <= tol) { nrm[i] = -1.0; any = true; }
            else if (std::abs(y[i] - hi_[i]) <= tol) { nrm[i] = 1.0; any = true; }
        }
        if (!any) throw DomainViolation("outward_normal: point not on the box boundary");
        return (1.0 / norm(nrm)) * nrm;
    }
    return nearest_boundary(y).normal;
}

void SpatialDomain::bounding_box(Vec& lo, Vec& hi) const {
    switch (kind_) {
        case DomainKind::box:
            lo = lo_; hi = hi_;
            return;
        case DomainKind::ball:
        case DomainKind::annulus:
            lo = center_; hi = center_;
            for (std::size_t i = 0; i < lo.size(); ++i) { lo[i] -= r_; hi[i] += r_; }
            return;
        case DomainKind::rounded_box:
            lo = lo_; hi = hi_;
            for (std::size_t i = 0; i < lo.size(); ++i) { lo[i] -= r_; hi[i] += r_; }
            return;
    }
}

double SpatialDomain::diameter() const {
    Vec lo, hi;
    bounding_box(lo, hi);
    return dist(lo, hi);
}

Vec SpatialDomain::outer_ball(const Vec& y, double rho) const {
    if (!rho0_)
        throw UnsupportedDomain("outer_ball: domain has no outer_ball_radius configured");
    if (!(rho > 0.0) || rho > *rho0_ + 1e-12)
        throw InvalidInput("outer_ball: need 0 < rho <= rho0");
    const double tol = 1e-9 * std::max(1.0, diameter());
    if (!on_boundary(y, tol)) throw DomainViolation("outer_ball: y is not a boundary point");
    Vec nu = outward_normal(y);
    return y + rho * nu;
}

Vec SpatialDomain::sample_interior(HaltonSeq& seq) const {
    Vec lo, hi;
    bounding_box(lo, hi);
    for (int tries = 0; tries < 20000; ++tries) {
        Vec u = seq.next();
        Vec x(lo.size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = lo[i] + (hi[i] - lo[i]) * u[i];
        if (contains(x)) return x;
    }
    throw InvalidInput("sample_interior: rejection sampling failed");
}

Vec SpatialDomain::sample_boundary(std::uint64_t i) const {
    const double u1 = halton(i, 2);
    const double u2 = halton(i, 3);
    switch (kind_) {
        case DomainKind::ball: {
            Vec dir = sphere_direction(dim_, u1, u2);
            return center_ + r_ * dir;
        }
        case DomainKind::annulus: {
            // Split samples by surface measure of the two spheres.
            const double w_out = std::pow(r_, dim_ - 1);
            const double w_in = std::pow(r_in_, dim_ - 1);
            const double pick = halton(i, 5);
            const double radius = (pick * (w_out + w_in) < w_out) ? r_ : r_in_;
            Vec dir = sphere_direction(dim_, u1, u2);
            return center_ + radius * dir;
        }
        case DomainKind::box: {
            // Faces weighted by area; u1 picks the face, (u2, u3) spread on it.
            const std::size_t n = lo_.size();
            std::vector<double> area(2 * n);
            double total = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                double a = 1.0;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != k) a *= hi_[j] - lo_[j];
                area[2 * k] = area[2 * k + 1] = a;
                total += 2 * a;
            }
            double target = u1 * total;
            std::size_t face = 0;
            while (face + 1 < 2 * n && target > area[face]) { target -= area[face]; ++face; }
            const std::size_t axis = face / 2;
            Vec x(n);
            int coord = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == axis) {
                    x[j] = (face % 2 == 0) ? lo_[j] : hi_[j];
                } else {
                    const double u = (coord == 0) ? u2 : halton(i, coord == 1 ? 5 : 7);
                    x[j] = lo_[j] + (hi_[j] - lo_[j]) * u;
                    ++coord;
                }
            }
            return x;
        }
        case DomainKind::rounded_box: {
            // Projection of a quasi-uniform shell sample; not exactly uniform
            // but adequate for oscillation scans.
            Vec lo, hi;
            bounding_box(lo, hi);
            Vec x(lo.size());
            for (std::size_t j = 0; j < x.size(); ++j) {
                const double u = halton(i, j == 0 ? 2 : (j == 1 ? 3 : 5));
                x[j] = lo[j] + (hi[j] - lo[j]) * u;
            }
            return nearest_boundary(x).point;
        }
    }
    throw InvalidInput("sample_boundary: bad kind");
}

std::vector<Vec> SpatialDomain::corner_points() const {
    std::vector<Vec> pts;
    switch (kind_) {
        case DomainKind::box: {
            const std::size_t n = lo_.size();
            const std::size_t count = std::size_t{1} << n;
            for (std::size_t mask = 0; mask < count; ++mask) {
                Vec x(n);
                for (std::size_t j = 0; j < n; ++j) x[j] = (mask >> j & 1) ? hi_[j] : lo_[j];
                pts.push_back(std::move(x));
            }
            break;
        }
        case DomainKind::ball:
        case DomainKind::annulus: {
            for (int j = 0; j < dim_; ++j) {
                for (double s : {-1.0, 1.0}) {
                    Vec x = center_;
                    x[static_cast<std::size_t>(j)] += s * r_;
                    pts.push_back(std::move(x));
                    if (kind_ == DomainKind::annulus) {
                        Vec xi = center_;
                        xi[static_cast<std::size_t>(j)] += s * r_in_;
                        pts.push_back(std::move(xi));
                    }
                }
            }
            break;
        }
        case DomainKind::rounded_box: {
            for (int j = 0; j < dim_; ++j) {
                for (double s : {-1.0, 1.0}) {
                    Vec x(lo_.size());
                    for (std::size_t m = 0; m < x.size(); ++m) x[m] = 0.5 * (lo_[m] + hi_[m]);
                    x[static_cast<std::size_t>(j)] = (s > 0 ? hi_[static_cast<std::size_t>(j)] + r_
                                                            : lo_[static_cast<std::size_t>(j)] - r_);
                    pts.push_back(std::move(x));
                }
            }
            break;
        }
    }
    return pts;
}

} // namespace trudinger
