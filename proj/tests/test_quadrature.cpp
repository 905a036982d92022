#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bkit/geometry.hpp"
#include "bkit/quadrature.hpp"
#include "support/oracles.hpp"

using namespace bkit;
using geom::PlanarDomain;

TEST_CASE("trapezoid rule reproduces circle lengths") {
    const auto disk = PlanarDomain::disk({0, 0}, 1.0);
    const auto rules = quad::domain_rules(disk, 256);
    CHECK(rules[0].length() == doctest::Approx(2.0 * kPi).epsilon(1e-12));

    const auto ann = PlanarDomain::annulus({0, 0}, 0.5, 1.0);
    for (const auto& rule : quad::domain_rules(ann, 256)) {
        const double r = std::abs(rule.nodes()[0].z);
        CHECK(rule.length() == doctest::Approx(2.0 * kPi * r).epsilon(1e-12));
    }
}

TEST_CASE("disk moments: trivial values") {
    const auto disk = PlanarDomain::disk({0, 0}, 1.0);
    CHECK(quad::area_moment(disk, 0, 0).real() == doctest::Approx(kPi).epsilon(1e-13));
    CHECK(quad::area_moment(disk, 1, 1).real() ==
          doctest::Approx(kPi / 2.0).epsilon(1e-13));
    CHECK(std::abs(quad::area_moment(disk, 1, 0)) < 1e-13);
}

TEST_CASE("moments match the polar-coordinate oracle") {
    const auto disk = PlanarDomain::disk({0, 0}, 1.0);
    const auto ann = PlanarDomain::annulus({0, 0}, 0.5, 1.0);
    for (int j = 0; j <= 6; ++j) {
        for (int k = 0; k <= 6; ++k) {
            CHECK(std::abs(quad::area_moment(disk, j, k) -
                           oracles::polar_moment(0.0, 1.0, j, k)) < 1e-10);
            CHECK(std::abs(quad::area_moment(ann, j, k) -
                           oracles::polar_moment(0.5, 1.0, j, k)) < 1e-10);
        }
    }
}

TEST_CASE("hermitian symmetry of moments") {
    const auto dom = PlanarDomain::disk({0.3, 0.2}, 1.0);
    for (int j = 0; j <= 8; ++j) {
        for (int k = 0; k <= 8; ++k) {
            CHECK(std::abs(quad::area_moment(dom, j, k) -
                           std::conj(quad::area_moment(dom, k, j))) < 1e-12);
        }
    }
}

TEST_CASE("self convergence under node doubling") {
    const auto disk = PlanarDomain::disk({0.1, -0.2}, 1.3);
    for (int j = 0; j <= 4; ++j) {
        const Complex coarse =
            quad::boundary_integral_dz(disk,
                                       [&](Complex z) {
                                           const Complex w = z - disk.reference_point();
                                           return ipow(w, j) * std::conj(w);
                                       },
                                       256) /
            (2.0 * kI);
        const Complex fine =
            quad::boundary_integral_dz(disk,
                                       [&](Complex z) {
                                           const Complex w = z - disk.reference_point();
                                           return ipow(w, j) * std::conj(w);
                                       },
                                       512) /
            (2.0 * kI);
        CHECK(std::abs(coarse - fine) < 1e-12);
    }
}

TEST_CASE("laurent norms: closed forms and radial oracle") {
    const auto ann = PlanarDomain::annulus({0, 0}, 0.5, 1.0);
    CHECK(quad::laurent_norm(ann, 0) == doctest::Approx(0.75 * kPi).epsilon(1e-14));
    CHECK(quad::laurent_norm(ann, -1) ==
          doctest::Approx(2.0 * kPi * std::log(2.0)).epsilon(1e-14));
    CHECK(quad::laurent_norm(ann, 1) ==
          doctest::Approx(kPi * (1.0 - 0.0625) / 2.0).epsilon(1e-14));
    // radial-integral oracle for a range of exponents
    for (int k = -5; k <= 5; ++k) {
        CHECK(quad::laurent_norm(ann, k) ==
              doctest::Approx(oracles::polar_moment(0.5, 1.0, k, k).real()).epsilon(1e-11));
    }
}

TEST_CASE("negative moments need a hole around the origin") {
    const auto disk = PlanarDomain::disk({0, 0}, 1.0);
    CHECK_THROWS_AS(quad::area_moment(disk, -1, 0), std::invalid_argument);
    const auto ann = PlanarDomain::annulus({0, 0}, 0.5, 1.0);
    // Laurent Gram is diagonal: cross moments vanish, diagonal matches norms
    CHECK(std::abs(quad::area_moment(ann, -1, 2)) < 1e-12);
    CHECK(quad::area_moment(ann, -1, -1).real() ==
          doctest::Approx(quad::laurent_norm(ann, -1)).epsilon(1e-12));
    CHECK(quad::area_moment(ann, -3, -3).real() ==
          doctest::Approx(quad::laurent_norm(ann, -3)).epsilon(1e-12));
}

TEST_CASE("radial profile integrals against the closed-form antiderivative") {
    const double ts = (std::sqrt(5.0) - 1.0) / 2.0;
    const double i00 = ts - ts * ts / 2.0 - ts * ts * ts / 3.0;
    CHECK(quad::reinhardt_radial_integral(0, 0) == doctest::Approx(i00).epsilon(1e-13));
    CHECK(i00 == doctest::Approx(0.3483617).epsilon(1e-6));

    const double i10 = ts * ts / 2.0 - std::pow(ts, 3) / 3.0 - std::pow(ts, 4) / 4.0;
    CHECK(quad::reinhardt_radial_integral(1, 0) == doctest::Approx(i10).epsilon(1e-13));

    for (int p = 0; p <= 6; ++p) {
        CHECK(quad::reinhardt_radial_integral(p, 0) ==
              doctest::Approx(quad::reinhardt_radial_integral_closed(p)).epsilon(1e-12));
    }
}

TEST_CASE("radial integrals decay monotonically in q") {
    double prev = quad::reinhardt_radial_integral(0, 0);
    for (int q = 1; q <= 6; ++q) {
        const double cur = quad::reinhardt_radial_integral(0, q);
        CHECK(cur > 0.0);
        CHECK(cur < prev);
        prev = cur;
    }
}
