#include "bkit/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace bkit::quad {

QuadratureRule::QuadratureRule(const geom::BoundaryCurve& curve, int nodes)
    : weight_(1.0 / nodes) {
    if (nodes < 8) throw std::invalid_argument("quadrature rule needs at least 8 nodes");
    nodes_.reserve(nodes);
    for (int i = 0; i < nodes; ++i) {
        const double t = static_cast<double>(i) / nodes;
        nodes_.push_back({t, curve.position(t), curve.velocity(t)});
    }
}

Complex QuadratureRule::integrate_dz(const std::function<Complex(Complex)>& f) const {
    Complex acc{0, 0};
    for (const auto& n : nodes_) acc += f(n.z) * n.dz;
    return acc * weight_;
}

double QuadratureRule::integrate_ds(const std::function<double(Complex)>& f) const {
    double acc = 0.0;
    for (const auto& n : nodes_) acc += f(n.z) * std::abs(n.dz);
    return acc * weight_;
}

double QuadratureRule::length() const {
    double acc = 0.0;
    for (const auto& n : nodes_) acc += std::abs(n.dz);
    return acc * weight_;
}

std::vector<QuadratureRule> domain_rules(const geom::PlanarDomain& domain,
                                         int nodes_per_curve) {
    const int m = nodes_per_curve > 0 ? nodes_per_curve : domain.boundary_nodes();
    std::vector<QuadratureRule> rules;
    rules.reserve(domain.boundary().size());
    for (const auto& c : domain.boundary()) rules.emplace_back(c, m);
    return rules;
}

double stokes_area(const std::vector<geom::BoundaryCurve>& curves, int nodes_per_curve) {
    Complex acc{0, 0};
    for (const auto& c : curves) {
        QuadratureRule rule(c, nodes_per_curve);
        acc += rule.integrate_dz([](Complex z) { return std::conj(z); });
    }
    return (acc / (2.0 * kI)).real();
}

Complex boundary_integral_dz(const geom::PlanarDomain& domain,
                             const std::function<Complex(Complex)>& f,
                             int nodes_per_curve) {
    Complex acc{0, 0};
    for (const auto& rule : domain_rules(domain, nodes_per_curve)) {
        acc += rule.integrate_dz(f);
    }
    return acc;
}

Complex area_moment(const geom::PlanarDomain& domain, int j, int k) {
    return area_moment(domain, j, k, domain.reference_point());
}

Complex area_moment(const geom::PlanarDomain& domain, int j, int k, Complex origin) {
    if (j < 0 || k < 0) {
        const auto* a = domain.as_annulus();
        const bool origin_in_hole = a && std::abs(origin - a->center) < a->inner;
        if (!origin_in_hole) {
            throw std::invalid_argument(
                "area_moment: negative powers are integrable only when the origin "
                "sits inside a hole (annulus)");
        }
    }
    if (k == -1) {
        // antiderivative in conj(z): ln|w|^2, single-valued
        return boundary_integral_dz(domain,
                                    [&](Complex z) {
                                        const Complex w = z - origin;
                                        return ipow(w, j) * std::log(std::norm(w));
                                    }) /
               (2.0 * kI);
    }
    const double denom = 2.0 * (k + 1);
    return boundary_integral_dz(domain,
                                [&](Complex z) {
                                    const Complex w = z - origin;
                                    return ipow(w, j) * ipow(std::conj(w), k + 1);
                                }) /
           (denom * kI);
}

double laurent_norm(const geom::PlanarDomain& annulus, int k) {
    const auto* a = annulus.as_annulus();
    if (!a) throw std::invalid_argument("laurent_norm requires an annulus");
    const double R = a->outer, rho = a->inner;
    if (k == -1) return 2.0 * kPi * std::log(R / rho);
    return kPi * (std::pow(R, 2 * k + 2) - std::pow(rho, 2 * k + 2)) / (k + 1);
}

namespace {

// 8-point Gauss-Legendre on [-1,1]
constexpr std::array<double, 8> kGaussX = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGaussW = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < kGaussX.size(); ++i) {
        acc += kGaussW[i] * f(mid + half * kGaussX[i]);
    }
    return acc * half;
}

double adaptive_integral(const std::function<double(double)>& f, double a, double b) {
    int panels = 4;
    double prev = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double x0 = a + (b - a) * p / panels;
        const double x1 = a + (b - a) * (p + 1) / panels;
        prev += gauss_panel(f, x0, x1);
    }
    for (int iter = 0; iter < 12; ++iter) {
        panels *= 2;
        double next = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double x0 = a + (b - a) * p / panels;
            const double x1 = a + (b - a) * (p + 1) / panels;
            next += gauss_panel(f, x0, x1);
        }
        if (std::abs(next - prev) < 1e-13 * std::max(1.0, std::abs(next))) return next;
        prev = next;
    }
    return prev;
}

}  // namespace

double reinhardt_radial_integral(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("nonnegative p, q required");
    static const geom::ReinhardtProfile2 profile;
    const double ts = profile.t_star();
    const double value = adaptive_integral(
        [&](double t) {
            return std::pow(t, p) * std::pow(1.0 - t - t * t, q + 1);
        },
        0.0, ts);
    if (q == 0) {
        const double closed = reinhardt_radial_integral_closed(p);
        if (std::abs(value - closed) > 1e-12 * std::max(1.0, std::abs(closed)))
            throw std::logic_error("radial integral disagrees with closed form");
    }
    return value;
}

double reinhardt_radial_integral_closed(int p) {
    static const geom::ReinhardtProfile2 profile;
    const double ts = profile.t_star();
    // integral of t^p (1 - t - t^2): t^{p+1}/(p+1) - t^{p+2}/(p+2) - t^{p+3}/(p+3)
    return std::pow(ts, p + 1) / (p + 1) - std::pow(ts, p + 2) / (p + 2) -
           std::pow(ts, p + 3) / (p + 3);
}

}  // namespace bkit::quad
