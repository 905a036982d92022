#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bkit/geometry.hpp"
#include "bkit/types.hpp"

namespace bkit::bergman {

/// One dictionary function (z - base)^exponent. Nonnegative exponents are
/// monomials about the domain reference point; negative exponents are poles
/// anchored inside holes (Laurent modes on an annulus, declared hole points
/// on general multiply connected domains).
struct DictTerm {
    Complex base;
    int exponent;
    Complex eval(Complex z) const { return ipow(z - base, exponent); }
};

struct BasisDictionary {
    std::vector<DictTerm> terms;  // constant term first
    int max_degree = 0;

    static BasisDictionary monomials(const geom::PlanarDomain& domain, int degree);
    /// k = 0, 1, -1, 2, -2, ..., N, -N about the annulus center.
    static BasisDictionary laurent(const geom::PlanarDomain& domain, int degree);
    /// Monomials plus (z - p)^{-m}, m = 1..pole_order, at every hole point.
    static BasisDictionary with_poles(const geom::PlanarDomain& domain, int degree,
                                      int pole_order);
    /// Kind-appropriate default.
    static BasisDictionary standard(const geom::PlanarDomain& domain, int degree);
};

struct TruncationWarning {
    int requested;
    int used;
    double condition;
};

struct KernelValue {
    Complex z, w;
    Complex value;
    int degree;
    bool in_guard_band = false;
    /// Magnitude of the trailing terms of the evaluated series (the last few
    /// exponents of every monomial/pole ladder), inflated by a safety factor.
    /// Kernel-sized units; grows toward the boundary and near holes whose
    /// shape is poorly resolved by the pole ladder.
    double truncation_estimate = 0.0;
};

/**
 * @brief Orthonormal basis of the square-integrable holomorphic functions
 *        spanned by a dictionary, built from the moment Gram matrix.
 *
 * The Gram matrix is assembled from boundary-reduced area moments, diagonally
 * normalized, and Cholesky factored. The constant function is always the
 * first basis element. If the normalized Gram matrix is ill conditioned
 * (condition number above 1e12) the dictionary is truncated at the largest
 * well conditioned leading block and a warning is attached; truncation is
 * never silent.
 */
class OrthonormalBasis {
public:
    static OrthonormalBasis build(const geom::PlanarDomain& domain,
                                  BasisDictionary dictionary);

    int size() const { return static_cast<int>(coeff_.rows()); }
    const geom::PlanarDomain& domain() const { return *domain_; }
    const BasisDictionary& dictionary() const { return dict_; }
    double gram_condition() const { return condition_; }
    const std::optional<TruncationWarning>& truncation_warning() const { return warning_; }

    /// Evaluate orthonormal element j.
    Complex phi(int j, Complex z) const;
    /// Truncated kernel sum over phi_j(z) conj(phi_j(w)).
    Complex kernel(Complex z, Complex w) const;
    KernelValue kernel_value(Complex z, Complex w) const;

    /// K(z,z) * area - 1; nonnegative up to roundoff for every domain.
    double minimality_margin(Complex z) const;

    /// Exact-from-moments integral of K(w, z0) dv(w).
    Complex kernel_mean(Complex z0) const;

    /// <f, phi_j> for f given by coefficients over the dictionary.
    Eigen::VectorXcd project(const Eigen::VectorXcd& dict_coeffs) const;

    /// Recomputed orthonormality defect max |<phi_i, phi_j> - delta_ij|.
    double orthonormality_defect() const;

    double guard_band() const { return guard_band_; }
    void set_guard_band(double fraction);

private:
    const geom::PlanarDomain* domain_ = nullptr;
    BasisDictionary dict_;
    Eigen::MatrixXcd gram_;   // original dictionary Gram (all requested terms)
    Eigen::MatrixXcd coeff_;  // rows: orthonormal functions over dictionary terms
    double condition_ = 1.0;
    double guard_band_ = 0.0;
    std::vector<int> tail_indices_;  // trailing exponents of every term ladder
    std::optional<TruncationWarning> warning_;

    Eigen::VectorXcd term_values(Complex z) const;
};

OrthonormalBasis orthonormalize(const geom::PlanarDomain& domain,
                                const BasisDictionary& dictionary);

/// |f(z) - integral of f(w) K(z,w) dv(w)| with the integral taken exactly
/// from moments; f is given by dictionary coefficients.
double reproduce_residual(const OrthonormalBasis& basis,
                          const Eigen::VectorXcd& dict_coeffs, Complex z);

double minimality_margin(const OrthonormalBasis& basis, Complex z);

/// Max over a 5x5 interior grid of |K_1(z,w) - c K_2(cz, cw) conj(c)| for the
/// linear map z -> cz between D(0,1) and D(0,|c|), both kernels numerical.
double transformation_residual(Complex c, int degree = 20);

}  // namespace bkit::bergman
