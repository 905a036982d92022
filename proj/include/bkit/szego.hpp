#pragma once

#include <functional>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "bkit/bergman.hpp"
#include "bkit/dirichlet.hpp"
#include "bkit/geometry.hpp"
#include "bkit/types.hpp"

namespace bkit::szego {

/// Boundary values of the Cauchy density C_a(z) = conj((1/2pi i) T(z)/(z-a)).
struct CauchyDensity {
    Complex a;
    std::vector<Complex> values;
};

/**
 * @brief Kerzman-Stein Nystrom system for one domain.
 *
 * The Kerzman-Stein kernel A(z,w) = (1/2pi i)[T(w)/(w-z) + conj(T(z)/(z-w))]
 * is smooth on smooth boundaries (the Cauchy singularities cancel, and the
 * diagonal limit vanishes), so the plain periodic trapezoid discretization of
 * (I + A)S(.,a) = C_a converges spectrally. The matrix is factored once and
 * shared across base points.
 */
class KerzmanSteinSystem {
public:
    KerzmanSteinSystem(const geom::PlanarDomain& domain, int nodes_per_curve = 512);

    const geom::PlanarDomain& domain() const { return *domain_; }
    int nodes_per_curve() const { return nodes_; }
    CauchyDensity cauchy_density(Complex a) const;
    Eigen::VectorXcd solve(const CauchyDensity& rhs) const;

    const std::vector<Complex>& node_positions() const { return node_z_; }
    const std::vector<Complex>& node_velocities() const { return node_dz_; }
    int curve_count() const { return ncurves_; }

private:
    const geom::PlanarDomain* domain_;
    int nodes_;
    int ncurves_;
    std::vector<Complex> node_z_;
    std::vector<Complex> node_dz_;
    std::shared_ptr<Eigen::PartialPivLU<Eigen::MatrixXcd>> lu_;
};

/**
 * @brief Szego kernel S(., a): boundary density plus an interior evaluator.
 *
 * Interior values come from the Cauchy integral of the boundary values; the
 * density is trigonometrically upsampled per component so that evaluation
 * stays accurate close to the boundary (winding contours).
 */
class SzegoSolution {
public:
    Complex base() const { return a_; }
    const std::vector<Complex>& boundary_values() const { return boundary_; }
    /// Interior evaluation via the Cauchy representation.
    Complex value(Complex z) const;
    /// S(a,a); positive for any interior base point.
    double at_base() const;

private:
    friend SzegoSolution szego_kernel(const KerzmanSteinSystem&, Complex);
    Complex a_;
    int refined_count_ = 0;
    std::vector<Complex> boundary_;
    std::vector<Complex> ref_z_, ref_dz_, ref_s_;
};

SzegoSolution szego_kernel(const KerzmanSteinSystem& system, Complex a);
SzegoSolution szego_kernel(const geom::PlanarDomain& domain, Complex a,
                           int nodes_per_curve = 512);

/// Zeros of S(., a) inside the domain, by the argument principle along
/// contours placed at 0.95 of the spine-to-boundary distance. Near-contour
/// zeros trigger an automatic 2 percent contour perturbation and a recount.
int szego_zero_count(const geom::PlanarDomain& domain, Complex a,
                     int nodes_per_curve = 512, int contour_samples = 2048);
int szego_zero_count(const KerzmanSteinSystem& system, Complex a,
                     int contour_samples = 2048);

/**
 * @brief Harmonic measure of one boundary component and its holomorphic
 *        derivative field F = 2 d(omega)/dz.
 *
 * The annulus uses the closed form ln(|z-c|/R)/ln(rho/R); general multiply
 * connected domains go through the double layer Dirichlet solve, with F
 * obtained by differentiating the layer representation analytically.
 */
class HarmonicMeasureField {
public:
    int hole_index() const { return hole_; }
    double omega(Complex z) const { return omega_(z); }
    Complex f_field(Complex z) const { return f_(z); }

private:
    friend HarmonicMeasureField harmonic_measure(const geom::PlanarDomain&, int, int);
    int hole_ = 0;
    std::function<double(Complex)> omega_;
    std::function<Complex(Complex)> f_;
};

HarmonicMeasureField harmonic_measure(const geom::PlanarDomain& domain, int hole,
                                      int nodes_per_curve = 0);

/// (1/v) integral of F_j over the domain, reduced to the boundary integral
/// of d(conj w) over the component; vanishes because the component is closed.
Complex f_field_mean(const geom::PlanarDomain& domain, int hole);

struct MatchCoefficients {
    Complex a;
    std::vector<Complex> lambdas;
    double fit_residual = 0.0;      // max residual at the fit points
    double holdout_residual = 0.0;  // max residual on the held-out set
};

/// Least squares fit of the correction coefficients in
/// K(z,a) = 4 pi S(z,a)^2 + sum_j lambda_j F_j(z), with a held-out residual.
MatchCoefficients bergman_szego_fit(const geom::PlanarDomain& domain, Complex a,
                                    const bergman::OrthonormalBasis& basis,
                                    int nodes_per_curve = 512);
MatchCoefficients bergman_szego_fit(const KerzmanSteinSystem& system, Complex a,
                                    const bergman::OrthonormalBasis& basis);

}  // namespace bkit::szego
