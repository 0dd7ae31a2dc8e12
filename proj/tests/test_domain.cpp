#include <doctest.h>

#include <cmath>

#include "trudinger/domain.hpp"

using namespace trudinger;

namespace {

std::vector<SpatialDomain> outer_ball_domains() {
    return {
        SpatialDomain::make_ball({0.0, 0.0}, 1.0, 0.75),
        SpatialDomain::make_annulus({0.0, 0.0}, 1.0, 2.0, 1.0),
        SpatialDomain::make_box({-1.0, -0.5}, {1.0, 0.5}, 0.5),
        SpatialDomain::make_rounded_box({-1.0, -0.5}, {1.0, 0.5}, 0.3, 0.5),
        SpatialDomain::make_ball({0.0, 0.0, 0.0}, 1.0, 0.75),
    };
}

} // namespace

TEST_CASE("signed distance signs and magnitudes") {
    auto ball = SpatialDomain::make_ball({0.0, 0.0}, 1.0);
    CHECK(ball.signed_distance({0.0, 0.0}) == doctest::Approx(-1.0));
    CHECK(ball.signed_distance({2.0, 0.0}) == doctest::Approx(1.0));
    CHECK(ball.contains({0.5, 0.5}));
    CHECK(!ball.contains({1.0, 0.0}));

    auto annulus = SpatialDomain::make_annulus({0.0, 0.0}, 1.0, 2.0);
    CHECK(annulus.signed_distance({1.5, 0.0}) == doctest::Approx(-0.5));
    CHECK(annulus.signed_distance({0.5, 0.0}) == doctest::Approx(0.5));
    CHECK(annulus.signed_distance({3.0, 0.0}) == doctest::Approx(1.0));

    auto box = SpatialDomain::make_box({0.0, 0.0}, {2.0, 1.0});
    CHECK(box.signed_distance({1.0, 0.5}) == doctest::Approx(-0.5));
    CHECK(box.signed_distance({3.0, 0.5}) == doctest::Approx(1.0));
    CHECK(box.signed_distance({3.0, 2.0}) == doctest::Approx(std::sqrt(2.0)));

    auto rbox = SpatialDomain::make_rounded_box({0.0, 0.0}, {2.0, 1.0}, 0.25);
    CHECK(rbox.signed_distance({1.0, 0.5}) == doctest::Approx(-0.75));
    CHECK(rbox.signed_distance({2.25, 0.5}) == doctest::Approx(0.0));
    CHECK(rbox.signed_distance({2.0 + 0.25 / std::sqrt(2.0), 1.0 + 0.25 / std::sqrt(2.0)}) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("nearest boundary point agrees with the signed distance") {
    HaltonSeq seq(3);
    for (const auto& dom : outer_ball_domains()) {
        const int n = dom.dim();
        Vec lo, hi;
        dom.bounding_box(lo, hi);
        for (int i = 0; i < 300; ++i) {
            Vec u = seq.next();
            Vec x(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) {
                const std::size_t ks = static_cast<std::size_t>(k);
                x[ks] = lo[ks] - 0.3 + (hi[ks] - lo[ks] + 0.6) * u[ks];
            }
            BoundaryPoint bp = dom.nearest_boundary(x);
            CHECK(std::abs(dom.signed_distance(bp.point)) <= 1e-9);
            CHECK(dist(x, bp.point) == doctest::Approx(std::abs(dom.signed_distance(x)))
                                           .epsilon(1e-9)
                                           .scale(1.0));
            CHECK(norm(bp.normal) == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("outer ball examples") {
    auto ball = SpatialDomain::make_ball({0.0, 0.0}, 1.0, 0.75);
    Vec z = ball.outer_ball({1.0, 0.0}, 0.3);
    CHECK(z[0] == doctest::Approx(1.3));
    CHECK(z[1] == doctest::Approx(0.0));

    // Inner boundary of an annulus: the tangent ball sits inside the hole.
    auto annulus = SpatialDomain::make_annulus({0.0, 0.0}, 1.0, 2.0, 1.0);
    Vec zi = annulus.outer_ball({1.0, 0.0}, 0.5);
    CHECK(zi[0] == doctest::Approx(0.5));
    CHECK(zi[1] == doctest::Approx(0.0));

    CHECK_THROWS_AS(ball.outer_ball({1.0, 0.0}, 1.5), InvalidInput); // rho > rho0
    CHECK_THROWS_AS(ball.outer_ball({0.5, 0.0}, 0.3), DomainViolation); // not on boundary
    auto no_rho = SpatialDomain::make_ball({0.0, 0.0}, 1.0);
    CHECK_THROWS_AS(no_rho.outer_ball({1.0, 0.0}, 0.3), UnsupportedDomain);
    // Construction-time cap: annulus outer-ball radius is limited by the hole.
    CHECK_THROWS_AS(SpatialDomain::make_annulus({0.0, 0.0}, 1.0, 2.0, 1.5), InvalidInput);
}

TEST_CASE("outer ball property: tangent and exterior on all supported kinds") {
    for (const auto& dom : outer_ball_domains()) {
        const double rho0 = *dom.outer_ball_radius();
        for (std::uint64_t i = 0; i < 200; ++i) {
            Vec y = dom.sample_boundary(i);
            for (double frac : {0.25, 1.0}) {
                const double rho = frac * rho0;
                Vec z = dom.outer_ball(y, rho);
                CHECK(dist(z, y) == doctest::Approx(rho).epsilon(1e-12));
                // dist(z, Omega) >= rho - 1e-12: the ball does not cut in.
                CHECK(dom.signed_distance(z) >= rho - 1e-9);
            }
        }
    }
    // Box corner: the diagonal supporting normal still yields an exterior ball.
    auto box = SpatialDomain::make_box({-1.0, -0.5}, {1.0, 0.5}, 0.5);
    Vec z = box.outer_ball({1.0, 0.5}, 0.5);
    CHECK(box.signed_distance(z) >= 0.5 - 1e-9);
    CHECK(dist(z, {1.0, 0.5}) == doctest::Approx(0.5));
}

TEST_CASE("boundary samples lie on the boundary") {
    for (const auto& dom : outer_ball_domains()) {
        for (std::uint64_t i = 0; i < 200; ++i) {
            Vec x = dom.sample_boundary(i);
            CHECK(std::abs(dom.signed_distance(x)) <= 1e-9);
        }
    }
}

TEST_CASE("interior samples are inside and fill the bounding box") {
    auto annulus = SpatialDomain::make_annulus({0.0, 0.0}, 1.0, 2.0);
    HaltonSeq seq(2);
    double max_r = 0.0, min_r = 10.0;
    for (int i = 0; i < 500; ++i) {
        Vec x = annulus.sample_interior(seq);
        CHECK(annulus.contains(x));
        const double r = norm(x);
        max_r = std::max(max_r, r);
        min_r = std::min(min_r, r);
    }
    CHECK(min_r < 1.15);
    CHECK(max_r > 1.85);
}
