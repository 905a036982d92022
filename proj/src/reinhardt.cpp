#include "bkit/reinhardt.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "bkit/quadrature.hpp"

namespace bkit::reinhardt {

MonomialNormTable::MonomialNormTable(int max_degree) : n_(max_degree) {
    table_.resize((n_ + 1) * (n_ + 1));
    for (int p = 0; p <= n_; ++p) {
        for (int q = 0; q <= n_; ++q) {
            table_[p * (n_ + 1) + q] =
                kPi * kPi / (q + 1) * quad::reinhardt_radial_integral(p, q);
        }
    }
}

double MonomialNormTable::norm2(int p, int q) const {
    if (p < 0 || q < 0 || p > n_ || q > n_)
        throw std::out_of_range("monomial norm index out of range");
    return table_[p * (n_ + 1) + q];
}

double volume() {
    const double v = kPi * kPi * quad::reinhardt_radial_integral(0, 0);
    const double closed = volume_closed_form();
    if (std::abs(v - closed) > 1e-12 * closed)
        throw std::logic_error("volume quadrature disagrees with the closed form");
    return v;
}

double volume_closed_form() {
    return kPi * kPi * quad::reinhardt_radial_integral_closed(0);
}

double ball_volume() {
    // profile p(t) = t: I(0,0) = integral of (1-t) over [0,1] = 1/2
    return kPi * kPi * 0.5;
}

double monomial_norm(int p, int q) {
    return kPi * kPi / (q + 1) * quad::reinhardt_radial_integral(p, q);
}

double kernel_origin() {
    static const MonomialNormTable table(8);
    double acc = 0.0;
    for (int p = 0; p <= table.max_degree(); ++p) {
        for (int q = 0; q <= table.max_degree(); ++q) {
            const double monomial_at_zero = (p == 0 && q == 0) ? 1.0 : 0.0;
            acc += monomial_at_zero * monomial_at_zero / table.norm2(p, q);
        }
    }
    return acc;
}

double defining_function(const std::array<double, 4>& x) {
    const double u = x[0] * x[0] + x[1] * x[1];
    return u * u + u + x[2] * x[2] + x[3] * x[3] - 1.0;
}

double hessian_min_eig(const std::array<double, 4>& x) {
    if (std::abs(defining_function(x)) > 1e-10)
        throw std::invalid_argument("hessian_min_eig: point is off the boundary");
    const double u = x[0] * x[0] + x[1] * x[1];
    Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
    h(0, 0) = 2.0 * (2.0 * u + 1.0) + 8.0 * x[0] * x[0];
    h(1, 1) = 2.0 * (2.0 * u + 1.0) + 8.0 * x[1] * x[1];
    h(0, 1) = h(1, 0) = 8.0 * x[0] * x[1];
    h(2, 2) = h(3, 3) = 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(h);
    return eig.eigenvalues().minCoeff();
}

std::array<double, 4> boundary_sample(int index) {
    static const geom::ReinhardtProfile2 profile;
    // deterministic xorshift stream
    unsigned long long state = 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull * (index + 1);
    auto next_unit = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<double>(state % 1000000007ull) / 1000000007.0;
    };
    const double u = profile.t_star() * next_unit();
    const double phi1 = 2.0 * kPi * next_unit();
    const double phi2 = 2.0 * kPi * next_unit();
    const double s = 1.0 - u - u * u;  // remaining |z2|^2 on the boundary
    return {std::sqrt(u) * std::cos(phi1), std::sqrt(u) * std::sin(phi1),
            std::sqrt(s) * std::cos(phi2), std::sqrt(s) * std::sin(phi2)};
}

CircleConstraint circle_constraint_residual(Complex a1, Complex a3, double theta,
                                            int theta_grid) {
    const double base = std::pow(std::abs(a1), 4) / 4.0 + std::norm(a1) / 2.0 +
                        std::norm(a3) / 2.0 + 0.5 - 1.0;
    auto at = [&](double th) { return base + (a3 * std::exp(Complex(0, -th))).real(); };
    CircleConstraint out;
    out.residual = at(theta);
    double sum = 0.0, lo = 1e300, hi = -1e300;
    for (int i = 0; i < theta_grid; ++i) {
        const double v = at(2.0 * kPi * i / theta_grid);
        sum += v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    out.average = sum / theta_grid;
    out.oscillation = hi - lo;
    return out;
}

ObstructionRoots obstruction_roots() {
    ObstructionRoots r;
    r.sphere_image_root = -1.0 + std::sqrt(3.0);          // x^2 + 2x - 2 = 0
    r.axis_image_root = 0.5 * (std::sqrt(5.0) - 1.0);     // x^2 + x - 1 = 0
    r.difference = std::abs(r.sphere_image_root - r.axis_image_root);
    return r;
}

Summary summary(int hessian_samples) {
    Summary s{};
    s.volume_quadrature = volume();
    s.volume_closed = volume_closed_form();
    s.kernel_at_origin = kernel_origin();
    s.kernel_volume_product = s.kernel_at_origin * s.volume_quadrature;
    s.hessian_samples = hessian_samples;
    double min_eig = 1e300;
    for (int i = 0; i < hessian_samples; ++i) {
        min_eig = std::min(min_eig, hessian_min_eig(boundary_sample(i)));
    }
    s.min_hessian_eigenvalue = min_eig;
    s.roots = obstruction_roots();
    s.oscillation_with_a3 =
        circle_constraint_residual(Complex(std::sqrt(std::sqrt(3.0) - 1.0), 0), Complex(0.1, 0), 0.0)
            .oscillation;
    s.oscillation_without_a3 =
        circle_constraint_residual(Complex(std::sqrt(std::sqrt(3.0) - 1.0), 0), Complex(0, 0), 0.0)
            .oscillation;
    s.verdict = "not biholomorphic to the unit ball";
    return s;
}

}  // namespace bkit::reinhardt
