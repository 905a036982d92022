#pragma once

#include <functional>
#include <span>
#include <vector>

#include "bkit/geometry.hpp"
#include "bkit/types.hpp"

namespace bkit::quad {

struct QuadratureNode {
    double t;
    Complex z;
    Complex dz;  // velocity z'(t)
};

/**
 * @brief Periodic trapezoid rule on one boundary curve.
 *
 * Equispaced nodes with uniform weight 1/M; spectrally accurate for smooth
 * periodic integrands.
 */
class QuadratureRule {
public:
    QuadratureRule(const geom::BoundaryCurve& curve, int nodes);

    std::span<const QuadratureNode> nodes() const { return nodes_; }
    double weight() const { return weight_; }

    /// integral of f(z) dz along the oriented curve
    Complex integrate_dz(const std::function<Complex(Complex)>& f) const;
    /// integral of f(z) ds (arc length)
    double integrate_ds(const std::function<double(Complex)>& f) const;
    double length() const;

private:
    std::vector<QuadratureNode> nodes_;
    double weight_;
};

/// Rules for every boundary component of a domain at the stated node count.
std::vector<QuadratureRule> domain_rules(const geom::PlanarDomain& domain,
                                         int nodes_per_curve);

/// (1/2i) contour integral of conj(z) dz over the full oriented boundary.
double stokes_area(const std::vector<geom::BoundaryCurve>& curves, int nodes_per_curve);

/// Contour integral of f(z) dz over the full oriented boundary.
Complex boundary_integral_dz(const geom::PlanarDomain& domain,
                             const std::function<Complex(Complex)>& f,
                             int nodes_per_curve = 0);

/**
 * @brief Area moment  integral over the domain of w^j conj(w)^k dv,
 *        w = z - origin.
 *
 * Reduced to a boundary integral: for k != -1 the antiderivative
 * conj(w)^{k+1}/(k+1) is used; k = -1 goes through the single-valued
 * logarithm ln|w|^2. Negative exponents require the origin to sit in a hole
 * (annulus centered at the origin), otherwise the monomial is not
 * integrable and the request is rejected.
 */
Complex area_moment(const geom::PlanarDomain& domain, int j, int k);
Complex area_moment(const geom::PlanarDomain& domain, int j, int k, Complex origin);

/// Squared L2 norm of (z-c)^k on an annulus centered at c (closed form).
double laurent_norm(const geom::PlanarDomain& annulus, int k);

/**
 * @brief I(p,q) = integral over t in [0, t*] of t^p (1 - t - t^2)^{q+1} dt,
 *        t* the positive root of t^2 + t = 1.
 *
 * Adaptive composite Gauss quadrature, halving panels until successive
 * estimates differ by less than 1e-13. For q = 0 the value is cross-checked
 * against the closed-form antiderivative.
 */
double reinhardt_radial_integral(int p, int q);

/// Closed-form antiderivative route for q = 0.
double reinhardt_radial_integral_closed(int p);

}  // namespace bkit::quad
