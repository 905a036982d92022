#include "bkit/dirichlet.hpp"

#include <cmath>
#include <stdexcept>

namespace bkit::dirichlet {

DoubleLayerSolver::DoubleLayerSolver(const geom::PlanarDomain& domain, int nodes_per_curve)
    : domain_(&domain) {
    if (domain.kind() == geom::PlanarDomain::Kind::PuncturedDisk)
        throw std::invalid_argument("Dirichlet solver: punctures are not boundary components");
    nodes_ = nodes_per_curve > 0 ? nodes_per_curve : domain.boundary_nodes();
    rules_ = quad::domain_rules(domain, nodes_);

    const int ncurves = static_cast<int>(rules_.size());
    const int n = ncurves * nodes_;
    node_z_.reserve(n);
    node_dz_.reserve(n);
    node_w_.reserve(n);
    node_comp_.reserve(n);
    for (int c = 0; c < ncurves; ++c) {
        for (const auto& nd : rules_[c].nodes()) {
            node_z_.push_back(nd.z);
            node_dz_.push_back(nd.dz);
            node_w_.push_back(std::abs(nd.dz) / nodes_);
            node_comp_.push_back(c);
        }
    }

    // jump equation: mu/2 + D[mu] + sum_j (integral of mu over hole j) ln|x - p_j| = f
    system_ = Eigen::MatrixXd::Zero(n, n);
    const auto& curves = domain.boundary();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                // diagonal limit of the double layer kernel: Im(z''/(2z'))
                const double t = rules_[node_comp_[i]].nodes()[i % nodes_].t;
                const auto& curve = curves[node_comp_[i]];
                const Complex zpp = curve.acceleration(t);
                system_(i, i) = 0.5 + std::imag(zpp / (2.0 * node_dz_[i])) / (2.0 * kPi * nodes_);
            } else {
                system_(i, j) =
                    std::imag(node_dz_[j] / (node_z_[j] - node_z_[i])) / (2.0 * kPi * nodes_);
            }
        }
    }
    const auto& holes = domain.hole_points();
    for (std::size_t h = 0; h < holes.size(); ++h) {
        for (int i = 0; i < n; ++i) {
            const double lg = std::log(std::abs(node_z_[i] - holes[h]));
            for (int j = 0; j < nodes_; ++j) {
                const int col = static_cast<int>(h) * nodes_ + j;
                system_(i, col) += lg * node_w_[col];
            }
        }
    }
    lu_ = std::make_shared<Eigen::PartialPivLU<Eigen::MatrixXd>>(system_);
}

DoubleLayerSolver::Solution DoubleLayerSolver::solve(
    const std::function<double(Complex, int)>& data) const {
    const int n = static_cast<int>(node_z_.size());
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) rhs(i) = data(node_z_[i], node_comp_[i]);

    Solution sol;
    sol.solver_ = this;
    sol.density_ = lu_->solve(rhs);
    sol.boundary_residual_ = (system_ * sol.density_ - rhs).cwiseAbs().maxCoeff();

    const auto& holes = domain_->hole_points();
    sol.log_coeff_.resize(holes.size(), 0.0);
    for (std::size_t h = 0; h < holes.size(); ++h) {
        double acc = 0.0;
        for (int j = 0; j < nodes_; ++j) {
            const int idx = static_cast<int>(h) * nodes_ + j;
            acc += sol.density_(idx) * node_w_[idx];
        }
        sol.log_coeff_[h] = acc;
    }
    return sol;
}

double DoubleLayerSolver::Solution::value(Complex z) const {
    const auto& s = *solver_;
    const int n = static_cast<int>(s.node_z_.size());
    double u = 0.0;
    for (int i = 0; i < n; ++i) {
        u += density_(i) * std::imag(s.node_dz_[i] / (s.node_z_[i] - z));
    }
    u /= 2.0 * kPi * s.nodes_;
    const auto& holes = s.domain_->hole_points();
    for (std::size_t h = 0; h < holes.size(); ++h) {
        u += log_coeff_[h] * std::log(std::abs(z - holes[h]));
    }
    return u;
}

Complex DoubleLayerSolver::Solution::derivative_field(Complex z) const {
    // 2 d/dz of (1/2pi) mu Im(dz/(zeta - z)) is (1/(2 pi i)) mu dz/(zeta - z)^2;
    // 2 d/dz of A ln|z-p| is A/(z-p). Analytic, no finite differences.
    const auto& s = *solver_;
    const int n = static_cast<int>(s.node_z_.size());
    Complex acc{0, 0};
    for (int i = 0; i < n; ++i) {
        const Complex d = s.node_z_[i] - z;
        acc += density_(i) * s.node_dz_[i] / (d * d);
    }
    acc /= 2.0 * kPi * kI * static_cast<double>(s.nodes_);
    const auto& holes = s.domain_->hole_points();
    for (std::size_t h = 0; h < holes.size(); ++h) {
        acc += log_coeff_[h] / (z - holes[h]);
    }
    return acc;
}

}  // namespace bkit::dirichlet
