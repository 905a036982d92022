#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bkit/bergman.hpp"
#include "bkit/dirichlet.hpp"
#include "bkit/geometry.hpp"
#include "bkit/types.hpp"

namespace bkit::potential {

/**
 * @brief Green's function evaluator g(z,w) with its regular part h,
 *        g = ln|z-w| + h(z,w).
 *
 * Disks use the closed form g = ln(r|z-w|) - ln|r^2 - (z-c)conj(w-c)|.
 * Annuli use a truncated prime-function product, truncated once the modulus
 * ratio drops below 1e-14. General smooth domains solve the Dirichlet
 * problem for h with boundary data -ln|zeta - w| through the double layer
 * machinery. Punctures are polar and do not affect g.
 */
class GreensEvaluator {
public:
    static GreensEvaluator build(const geom::PlanarDomain& domain);

    double green(Complex z, Complex w) const;
    double regular_part(Complex z, Complex w) const;
    /// Robin constant, the regular part on the diagonal. Analytic route.
    double robin(Complex z0) const;
    const geom::PlanarDomain& domain() const { return *domain_; }

private:
    const geom::PlanarDomain* domain_ = nullptr;
    // annulus product data
    double q_ = 0.0;
    int product_terms_ = 0;
    // smooth-domain Dirichlet machinery
    std::shared_ptr<dirichlet::DoubleLayerSolver> solver_;

    double annulus_log_prime(Complex x) const;  // ln|P(x)|
};

double green(const geom::PlanarDomain& domain, Complex z, Complex w);

struct RobinValue {
    Complex z0;
    double lambda;
    double spread = 0.0;  // disagreement across extrapolation angles
    bool flagged = false;
};

RobinValue robin(const geom::PlanarDomain& domain, Complex z0);

/// Independent route: four-angle Richardson extrapolation of
/// g(z0 + eps e^{i theta}, z0) - ln(eps) with eps in {1e-3, 5e-4}.
RobinValue robin_extrapolated(const geom::PlanarDomain& domain, Complex z0);
RobinValue robin_extrapolated(const GreensEvaluator& greens, Complex z0);

/// pi K(z,z) - e^{2 lambda(z)}; nonnegative, zero exactly on disks.
double suita_margin(const geom::PlanarDomain& domain,
                    const bergman::OrthonormalBasis& basis, Complex z);

struct SublevelRow {
    double tau;
    double volume;
    double ratio;  // e^{2 tau} / volume
    bool dropped = false;
};

struct SublevelProfile {
    Complex z0;
    std::vector<SublevelRow> rows;
};

/**
 * @brief Volumes of the sublevel sets { g(., z0) < tau } by polar ray
 *        bisection: 720 rays from z0, each crossing radius found by
 *        bisection, area = integral of r(theta)^2/2.
 *
 * Requires tau < 0. A ray whose crossing is not unique marks the whole tau
 * row as dropped.
 */
SublevelProfile sublevel_profile(const geom::PlanarDomain& domain, Complex z0,
                                 std::span<const double> taus, int rays = 720);

}  // namespace bkit::potential
