#pragma once

#include <functional>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "bkit/geometry.hpp"
#include "bkit/quadrature.hpp"
#include "bkit/types.hpp"

namespace bkit::dirichlet {

/**
 * @brief Interior Dirichlet solver on multiply connected domains.
 *
 * Double layer potential with a logarithmic completion: the density mu lives
 * on all boundary components and the representation
 *
 *   u(z) = (1/2pi) sum over nodes of mu Im(dz/(z_node - z))
 *          + sum over holes of A_j ln|z - p_j|,        A_j = integral of mu ds
 *                                                            over hole j
 *
 * makes the jump equation u = mu/2 + PV(...) + log terms uniquely solvable.
 * Smooth kernels all around, so the plain trapezoid Nystrom discretization
 * converges spectrally. The matrix is factored once per (domain, node count)
 * and reused across boundary data.
 */
class DoubleLayerSolver {
public:
    DoubleLayerSolver(const geom::PlanarDomain& domain, int nodes_per_curve = 0);

    class Solution {
    public:
        double value(Complex z) const;
        /// Holomorphic derivative field 2 du/dz of the harmonic extension.
        Complex derivative_field(Complex z) const;
        double log_coefficient(int hole) const { return log_coeff_[hole]; }
        /// Max residual of the boundary jump equation at the nodes.
        double boundary_residual() const { return boundary_residual_; }

    private:
        friend class DoubleLayerSolver;
        const DoubleLayerSolver* solver_ = nullptr;
        Eigen::VectorXd density_;
        std::vector<double> log_coeff_;
        double boundary_residual_ = 0.0;
    };

    /// data(node position, component index) gives the boundary values.
    Solution solve(const std::function<double(Complex, int)>& data) const;

    const geom::PlanarDomain& domain() const { return *domain_; }
    int nodes_per_curve() const { return nodes_; }

private:
    const geom::PlanarDomain* domain_;
    int nodes_;
    std::vector<quad::QuadratureRule> rules_;
    std::vector<Complex> node_z_;
    std::vector<Complex> node_dz_;
    std::vector<double> node_w_;  // ds weights
    std::vector<int> node_comp_;
    Eigen::MatrixXd system_;
    std::shared_ptr<Eigen::PartialPivLU<Eigen::MatrixXd>> lu_;
};

}  // namespace bkit::dirichlet
