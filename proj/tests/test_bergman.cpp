#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bkit/bergman.hpp"
#include "bkit/quadrature.hpp"
#include "support/oracles.hpp"

using namespace bkit;
using bergman::BasisDictionary;
using bergman::OrthonormalBasis;
using geom::PlanarDomain;

namespace {
OrthonormalBasis unit_disk_basis(int degree = 30) {
    static const auto disk = PlanarDomain::disk({0, 0}, 1.0);
    return OrthonormalBasis::build(disk, BasisDictionary::monomials(disk, degree));
}
}  // namespace

TEST_CASE("disk monomials orthonormalize to sqrt((j+1)/pi) z^j") {
    const auto disk = PlanarDomain::disk({0, 0}, 1.0);
    const auto basis = OrthonormalBasis::build(disk, BasisDictionary::monomials(disk, 3));
    const Complex z{0.37, -0.21};
    for (int j = 0; j <= 3; ++j) {
        const Complex expected = std::sqrt((j + 1) / kPi) * ipow(z, j);
        CHECK(std::abs(basis.phi(j, z) - expected) < 1e-12);
    }
    CHECK(basis.orthonormality_defect() < 1e-12);
    // constant function first
    CHECK(std::abs(basis.phi(0, {0.9, 0.0}) - 1.0 / std::sqrt(kPi)) < 1e-13);
}

TEST_CASE("annulus laurent dictionary is already orthogonal") {
    const auto ann = PlanarDomain::annulus({0, 0}, 0.5, 1.0);
    const auto basis = OrthonormalBasis::build(ann, BasisDictionary::laurent(ann, 1));
    const Complex z{0.6, 0.3};
    for (std::size_t t = 0; t < basis.dictionary().terms.size(); ++t) {
        const int k = basis.dictionary().terms[t].exponent;
        const Complex expected = ipow(z, k) / std::sqrt(quad::laurent_norm(ann, k));
        CHECK(std::abs(basis.phi(static_cast<int>(t), z) - expected) < 1e-12);
    }
    CHECK(basis.gram_condition() < 1.0 + 1e-10);
}

TEST_CASE("punctured disk shares the unpunctured coefficients") {
    const auto pd = PlanarDomain::punctured_disk({0, 0}, 1.0, {{0.3, 0.0}});
    const auto basis_p = OrthonormalBasis::build(pd, BasisDictionary::standard(pd, 12));
    const auto basis_d = unit_disk_basis(12);
    for (const Complex z : {Complex{0.4, 0.1}, Complex{-0.2, -0.5}}) {
        for (const Complex w : {Complex{0.0, 0.0}, Complex{0.3, 0.3}}) {
            CHECK(std::abs(basis_p.kernel(z, w) - basis_d.kernel(z, w)) < 1e-14);
        }
    }
}

TEST_CASE("disk kernel values") {
    const auto basis = unit_disk_basis();
    CHECK(basis.kernel({0, 0}, {0, 0}).real() == doctest::Approx(1.0 / kPi).epsilon(1e-12));
    CHECK(basis.kernel({0.5, 0}, {0.5, 0}).real() ==
          doctest::Approx(1.0 / (kPi * 0.5625)).epsilon(1e-10));
    // the kernel row at w = 0 is constant
    for (const Complex z : {Complex{0.2, 0.0}, Complex{0.0, 0.5}, Complex{-0.4, 0.0}}) {
        CHECK(std::abs(basis.kernel(z, {0, 0}) - 1.0 / kPi) < 1e-13);
    }
}

TEST_CASE("disk kernel matches the closed form on the oracle band") {
    const auto basis = unit_disk_basis();
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const Complex z = 0.7 * (0.2 + 0.8 * i / 4.0) * std::exp(Complex(0, 1.3 * i));
            const Complex w = 0.7 * (0.15 + 0.85 * j / 4.0) * std::exp(Complex(0, -0.9 * j));
            CHECK(std::abs(basis.kernel(z, w) -
                           oracles::disk_bergman_kernel({0, 0}, 1.0, z, w)) < 1e-6);
        }
    }
}

TEST_CASE("annulus kernel matches the series oracle") {
    const auto ann = PlanarDomain::annulus({0, 0}, 0.5, 1.0);
    const auto basis = OrthonormalBasis::build(ann, BasisDictionary::laurent(ann, 30));
    // the Laurent tail decays like (rho^2/|z|^2)^k below and (|z|^2)^k above,
    // so the truncation floor moves with the sample radius
    for (const Complex z : {Complex{0.7, 0.1}, Complex{-0.6, 0.3}, Complex{0.0, 0.72}}) {
        CHECK(std::abs(basis.kernel(z, z) -
                       oracles::annulus_bergman_kernel(0.5, 1.0, z, z)) < 5e-6);
    }
    const auto rich = OrthonormalBasis::build(ann, BasisDictionary::laurent(ann, 60));
    for (const Complex z : {Complex{0.7, 0.1}, Complex{-0.6, 0.3}, Complex{0.0, 0.72}}) {
        CHECK(std::abs(rich.kernel(z, z) -
                       oracles::annulus_bergman_kernel(0.5, 1.0, z, z)) < 1e-11);
    }
}

TEST_CASE("hermitian symmetry and positivity at random pairs") {
    const auto basis = unit_disk_basis();
    unsigned long long state = 777;
    auto unit = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<double>(state % 1000000007ull) / 1000000007.0;
    };
    for (int i = 0; i < 25; ++i) {
        const Complex z =
            0.85 * std::sqrt(unit()) * std::exp(Complex(0, 2.0 * kPi * unit()));
        const Complex w =
            0.85 * std::sqrt(unit()) * std::exp(Complex(0, 2.0 * kPi * unit()));
        CHECK(std::abs(basis.kernel(z, w) - std::conj(basis.kernel(w, z))) < 1e-12);
        CHECK(basis.kernel(z, z).real() >= 0.0);
        CHECK(std::abs(basis.kernel(z, z).imag()) < 1e-13);
    }
}

TEST_CASE("reproducing property from moments") {
    const auto disk = PlanarDomain::disk({0, 0}, 1.0);
    const auto basis = OrthonormalBasis::build(disk, BasisDictionary::monomials(disk, 10));
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(11);

    SUBCASE("f = z^2 inside the span") {
        f(2) = 1.0;
        CHECK(bergman::reproduce_residual(basis, f, {0.3, 0.0}) < 1e-10);
    }
    SUBCASE("constant function, the mean value identity") {
        f(0) = 1.0;
        CHECK(bergman::reproduce_residual(basis, f, {0.4, 0.2}) < 1e-12);
    }
}

TEST_CASE("laurent reproduction of 1/z on the annulus") {
    const auto ann = PlanarDomain::annulus({0, 0}, 0.5, 1.0);
    const auto basis = OrthonormalBasis::build(ann, BasisDictionary::laurent(ann, 8));
    Eigen::VectorXcd f =
        Eigen::VectorXcd::Zero(static_cast<int>(basis.dictionary().terms.size()));
    for (std::size_t t = 0; t < basis.dictionary().terms.size(); ++t) {
        if (basis.dictionary().terms[t].exponent == -1) f(static_cast<int>(t)) = 1.0;
    }
    CHECK(bergman::reproduce_residual(basis, f, {0.7, 0.0}) < 1e-8);
}

TEST_CASE("minimality margins") {
    const auto basis = unit_disk_basis();
    CHECK(std::abs(basis.minimality_margin({0, 0})) < 1e-12);
    CHECK(basis.minimality_margin({0.5, 0}) ==
          doctest::Approx(1.0 / 0.5625 - 1.0).epsilon(1e-9));

    const auto ann = PlanarDomain::annulus({0, 0}, 0.5, 1.0);
    const auto ann_basis = OrthonormalBasis::build(ann, BasisDictionary::laurent(ann, 30));
    const Complex z{std::sqrt(0.5), 0.0};
    CHECK(ann_basis.minimality_margin(z) > 1e-3);
    CHECK_THROWS_AS(ann_basis.minimality_margin({0, 0}), std::invalid_argument);
}

TEST_CASE("transformation law under linear maps") {
    CHECK(bergman::transformation_residual({1.0, 0.0}) < 1e-12);
    CHECK(bergman::transformation_residual({2.0, 0.0}) < 1e-8);
    CHECK(bergman::transformation_residual(std::exp(Complex(0, kPi / 4.0))) < 1e-8);
}

TEST_CASE("ill-conditioned dictionaries truncate loudly") {
    // duplicated monomials make the Gram matrix singular past the first block
    const auto disk = PlanarDomain::disk({0, 0}, 1.0);
    BasisDictionary dict;
    dict.max_degree = 2;
    dict.terms = {{Complex{0, 0}, 0}, {Complex{0, 0}, 1}, {Complex{0, 0}, 1},
                  {Complex{0, 0}, 2}};
    const auto basis = OrthonormalBasis::build(disk, dict);
    REQUIRE(basis.truncation_warning().has_value());
    CHECK(basis.truncation_warning()->used < basis.truncation_warning()->requested);
    CHECK(basis.size() == basis.truncation_warning()->used);
    CHECK(basis.orthonormality_defect() < 1e-10);
}

TEST_CASE("guard band flags near-boundary evaluation") {
    const auto basis = unit_disk_basis();
    CHECK(basis.kernel_value({0.95, 0.0}, {0.0, 0.0}).in_guard_band);
    CHECK_FALSE(basis.kernel_value({0.5, 0.0}, {0.0, 0.0}).in_guard_band);
    CHECK(basis.kernel_value({0.5, 0.0}, {0.5, 0.0}).truncation_estimate <
          basis.kernel_value({0.85, 0.0}, {0.85, 0.0}).truncation_estimate);
}
