#pragma once

#include <array>
#include <vector>

#include "bkit/geometry.hpp"
#include "bkit/types.hpp"

namespace bkit::reinhardt {

/// Squared norms of the monomials z1^p z2^q on the domain
/// { |z1|^4 + |z1|^2 + |z2|^2 < 1 }, from the 1-D radial integrals:
/// norm2(p,q) = (pi^2/(q+1)) I(p,q).
class MonomialNormTable {
public:
    explicit MonomialNormTable(int max_degree = 8);
    int max_degree() const { return n_; }
    double norm2(int p, int q) const;

private:
    int n_;
    std::vector<double> table_;
};

/// Domain volume via the radial quadrature route, cross-checked against the
/// closed form internally.
double volume();
/// Closed-form antiderivative route, pi^2 (t* - t*^2/2 - t*^3/3).
double volume_closed_form();
/// Volume of the unit ball profile p(t) = t, for scaling sanity checks.
double ball_volume();

double monomial_norm(int p, int q);

/// K(0,0) by summing the monomial series at the origin; only the constant
/// term contributes, so this equals 1/norm2(0,0).
double kernel_origin();

/// Defining function rho(x) = (x1^2+x2^2)^2 + (x1^2+x2^2) + x3^2 + x4^2 - 1.
double defining_function(const std::array<double, 4>& x);

/// Minimum eigenvalue of the real Hessian of rho at a boundary point
/// (|rho| < 1e-10 required). The z2 block is 2I, so the global minimum is 2.
double hessian_min_eig(const std::array<double, 4>& x);

/// Deterministic boundary sample for Hessian scans.
std::array<double, 4> boundary_sample(int index);

struct CircleConstraint {
    double residual;     // value at the given theta
    double average;      // mean over the theta grid
    double oscillation;  // max - min over the theta grid
};

/// Boundary constraint for the candidate linear map evaluated on the circle
/// family (1/sqrt2, e^{i theta}/sqrt2): |a1|^4/4 + |a1|^2/2 + |a3|^2/2
/// + Re(a3 e^{-i theta}) + 1/2 - 1. Nonzero oscillation across theta
/// certifies that a3 must vanish.
CircleConstraint circle_constraint_residual(Complex a1, Complex a3, double theta,
                                            int theta_grid = 36);

struct ObstructionRoots {
    double sphere_image_root;  // positive root of x^2 + 2x - 2 = 0
    double axis_image_root;    // positive root of x^2 + x - 1 = 0
    double difference;
};

/// The two incompatible constraints on |a1|^2; their unique positive roots
/// differ, so no linear map can satisfy both.
ObstructionRoots obstruction_roots();

struct Summary {
    double volume_quadrature;
    double volume_closed;
    double kernel_at_origin;
    double kernel_volume_product;
    double min_hessian_eigenvalue;  // over the sample count below
    int hessian_samples;
    ObstructionRoots roots;
    double oscillation_with_a3;     // |a3| = 0.1 case
    double oscillation_without_a3;  // a3 = 0 case
    const char* verdict;
};

Summary summary(int hessian_samples = 10000);

}  // namespace bkit::reinhardt
