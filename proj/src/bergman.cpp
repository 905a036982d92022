#include "bkit/bergman.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "bkit/quadrature.hpp"

namespace bkit::bergman {

namespace {
constexpr double kConditionLimit = 1e12;

// Single-valued function with d/d(conj z) equal to conj((z-b)^e).
Complex conj_antiderivative(const DictTerm& term, Complex z) {
    const Complex w = z - term.base;
    if (term.exponent == -1) return Complex(std::log(std::norm(w)), 0.0);
    return ipow(std::conj(w), term.exponent + 1) / static_cast<double>(term.exponent + 1);
}

Eigen::MatrixXcd build_gram(const geom::PlanarDomain& domain,
                            const std::vector<DictTerm>& terms) {
    const auto rules = quad::domain_rules(domain, 0);
    const int n = static_cast<int>(terms.size());
    Eigen::MatrixXcd g(n, n);
    for (int d = 0; d < n; ++d) {
        for (int e = d; e < n; ++e) {
            Complex acc{0, 0};
            for (const auto& rule : rules) {
                for (const auto& node : rule.nodes()) {
                    acc += terms[d].eval(node.z) * conj_antiderivative(terms[e], node.z) *
                           node.dz * rule.weight();
                }
            }
            const Complex value = acc / (2.0 * kI);
            g(d, e) = value;
            g(e, d) = std::conj(value);
        }
    }
    return g;
}

}  // namespace

BasisDictionary BasisDictionary::monomials(const geom::PlanarDomain& domain, int degree) {
    BasisDictionary dict;
    dict.max_degree = degree;
    const Complex c = domain.reference_point();
    for (int j = 0; j <= degree; ++j) dict.terms.push_back({c, j});
    return dict;
}

BasisDictionary BasisDictionary::laurent(const geom::PlanarDomain& domain, int degree) {
    const auto* a = domain.as_annulus();
    if (!a) throw std::invalid_argument("laurent dictionary requires an annulus");
    BasisDictionary dict;
    dict.max_degree = degree;
    dict.terms.push_back({a->center, 0});
    for (int k = 1; k <= degree; ++k) {
        dict.terms.push_back({a->center, k});
        dict.terms.push_back({a->center, -k});
    }
    return dict;
}

BasisDictionary BasisDictionary::with_poles(const geom::PlanarDomain& domain, int degree,
                                            int pole_order) {
    BasisDictionary dict = monomials(domain, degree);
    for (const Complex& p : domain.hole_points()) {
        for (int m = 1; m <= pole_order; ++m) dict.terms.push_back({p, -m});
    }
    return dict;
}

BasisDictionary BasisDictionary::standard(const geom::PlanarDomain& domain, int degree) {
    switch (domain.kind()) {
        case geom::PlanarDomain::Kind::Annulus:
            return laurent(domain, degree);
        case geom::PlanarDomain::Kind::SmoothMultiplyConnected:
            return domain.hole_points().empty() ? monomials(domain, degree)
                                                : with_poles(domain, degree, 16);
        default:
            return monomials(domain, degree);
    }
}

OrthonormalBasis OrthonormalBasis::build(const geom::PlanarDomain& domain,
                                         BasisDictionary dictionary) {
    if (dictionary.terms.empty() || dictionary.terms.front().exponent != 0)
        throw std::invalid_argument("dictionary must start with the constant term");

    OrthonormalBasis basis;
    basis.domain_ = &domain;
    basis.dict_ = std::move(dictionary);
    basis.gram_ = build_gram(domain, basis.dict_.terms);
    basis.guard_band_ = 0.1 * domain.inradius();

    const int n = static_cast<int>(basis.dict_.terms.size());
    Eigen::VectorXd scale(n);
    for (int d = 0; d < n; ++d) {
        const double s = basis.gram_(d, d).real();
        if (!(s > 0.0)) throw std::runtime_error("dictionary term with nonpositive norm");
        scale(d) = std::sqrt(s);
    }
    Eigen::MatrixXcd ghat = basis.gram_;
    for (int d = 0; d < n; ++d)
        for (int e = 0; e < n; ++e) ghat(d, e) /= scale(d) * scale(e);
    ghat = 0.5 * (ghat + ghat.adjoint()).eval();

    // leading-block truncation until the normalized Gram is well conditioned
    int used = n;
    double cond = 0.0;
    while (used >= 1) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(ghat.topLeftCorner(used, used));
        const double lo = eig.eigenvalues().minCoeff();
        const double hi = eig.eigenvalues().maxCoeff();
        cond = (lo > 0.0) ? hi / lo : std::numeric_limits<double>::infinity();
        if (cond <= kConditionLimit) break;
        --used;
    }
    if (used < 1) throw std::runtime_error("dictionary Gram matrix is singular");
    basis.condition_ = cond;
    if (used < n) {
        basis.warning_ = TruncationWarning{n, used, cond};
    }

    Eigen::LLT<Eigen::MatrixXcd> llt(ghat.topLeftCorner(used, used));
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("Cholesky factorization of the Gram matrix failed");
    Eigen::MatrixXcd linv = Eigen::MatrixXcd::Identity(used, used);
    llt.matrixL().solveInPlace(linv);  // linv = L^{-1}, lower triangular

    // coefficients against the unscaled dictionary
    basis.coeff_ = Eigen::MatrixXcd::Zero(used, n);
    for (int j = 0; j < used; ++j)
        for (int d = 0; d <= j; ++d) basis.coeff_(j, d) = linv(j, d) / scale(d);

    // trailing exponents of each ladder, used for the series tail estimate
    std::vector<std::pair<Complex, int>> ladder_max;
    for (int j = 0; j < used; ++j) {
        const auto& t = basis.dict_.terms[j];
        bool found = false;
        for (auto& [b, m] : ladder_max) {
            if (std::abs(b - t.base) < 1e-12) {
                m = std::max(m, std::abs(t.exponent));
                found = true;
                break;
            }
        }
        if (!found) ladder_max.emplace_back(t.base, std::abs(t.exponent));
    }
    for (int j = 0; j < used; ++j) {
        const auto& t = basis.dict_.terms[j];
        for (const auto& [b, m] : ladder_max) {
            if (std::abs(b - t.base) < 1e-12 && std::abs(t.exponent) >= m - 2 &&
                std::abs(t.exponent) > 0) {
                basis.tail_indices_.push_back(j);
                break;
            }
        }
    }
    return basis;
}

OrthonormalBasis orthonormalize(const geom::PlanarDomain& domain,
                                const BasisDictionary& dictionary) {
    return OrthonormalBasis::build(domain, dictionary);
}

void OrthonormalBasis::set_guard_band(double fraction) {
    guard_band_ = fraction * domain_->inradius();
}

Eigen::VectorXcd OrthonormalBasis::term_values(Complex z) const {
    const int n = static_cast<int>(dict_.terms.size());
    Eigen::VectorXcd t(n);
    for (int d = 0; d < n; ++d) t(d) = dict_.terms[d].eval(z);
    return t;
}

Complex OrthonormalBasis::phi(int j, Complex z) const {
    if (j < 0 || j >= size()) throw std::out_of_range("basis index");
    return (coeff_.row(j) * term_values(z))(0);
}

Complex OrthonormalBasis::kernel(Complex z, Complex w) const {
    const Eigen::VectorXcd yz = coeff_ * term_values(z);
    const Eigen::VectorXcd yw = coeff_ * term_values(w);
    return yw.dot(yz);  // sum over j of yz_j * conj(yw_j)
}

KernelValue OrthonormalBasis::kernel_value(Complex z, Complex w) const {
    KernelValue kv;
    kv.z = z;
    kv.w = w;
    kv.degree = dict_.max_degree;
    const Eigen::VectorXcd yz = coeff_ * term_values(z);
    const Eigen::VectorXcd yw = coeff_ * term_values(w);
    kv.value = yw.dot(yz);
    const double dz = domain_->distance_to_boundary(z);
    const double dw = domain_->distance_to_boundary(w);
    kv.in_guard_band = dz < guard_band_ || dw < guard_band_;
    double tail = 0.0;
    for (const int j : tail_indices_) tail += std::abs(yz(j)) * std::abs(yw(j));
    kv.truncation_estimate = 4.0 * tail;
    return kv;
}

double OrthonormalBasis::minimality_margin(Complex z) const {
    if (domain_->contains(z) != geom::Containment::Inside)
        throw std::invalid_argument("minimality_margin: point not interior");
    const Complex k = kernel(z, z);
    return k.real() * domain_->area() - 1.0;
}

Complex OrthonormalBasis::kernel_mean(Complex z0) const {
    // integral of K(w, z0) dv(w) = sum_j conj(phi_j(z0)) <phi_j, 1>
    const Eigen::VectorXcd ip = coeff_ * gram_.col(0);  // <phi_j, constant term>
    const Eigen::VectorXcd y0 = coeff_ * term_values(z0);
    Complex acc{0, 0};
    for (int j = 0; j < size(); ++j) acc += std::conj(y0(j)) * ip(j);
    return acc;
}

Eigen::VectorXcd OrthonormalBasis::project(const Eigen::VectorXcd& dict_coeffs) const {
    if (dict_coeffs.size() != gram_.rows())
        throw std::invalid_argument("coefficient vector does not match the dictionary");
    // <f, phi_j> = sum_{d,e} f_d conj(C_{je}) G_{de}
    return coeff_.conjugate() * (gram_.transpose() * dict_coeffs);
}

double OrthonormalBasis::orthonormality_defect() const {
    const Eigen::MatrixXcd inner =
        coeff_ * gram_ * coeff_.adjoint() - Eigen::MatrixXcd::Identity(size(), size());
    return inner.cwiseAbs().maxCoeff();
}

double reproduce_residual(const OrthonormalBasis& basis,
                          const Eigen::VectorXcd& dict_coeffs, Complex z) {
    // integral of f(w) K(z,w) dv(w) = sum_j phi_j(z) <f, phi_j>
    Eigen::VectorXcd fz = dict_coeffs;
    Complex f_at_z{0, 0};
    const auto& terms = basis.dictionary().terms;
    for (int d = 0; d < fz.size(); ++d) f_at_z += fz(d) * terms[d].eval(z);

    const Eigen::VectorXcd proj = basis.project(dict_coeffs);
    Complex reproduced{0, 0};
    for (int j = 0; j < basis.size(); ++j) reproduced += basis.phi(j, z) * proj(j);
    return std::abs(f_at_z - reproduced);
}

double minimality_margin(const OrthonormalBasis& basis, Complex z) {
    return basis.minimality_margin(z);
}

double transformation_residual(Complex c, int degree) {
    if (std::abs(c) == 0.0) throw std::invalid_argument("c must be nonzero");
    const auto d1 = geom::PlanarDomain::disk({0, 0}, 1.0);
    const auto d2 = geom::PlanarDomain::disk({0, 0}, std::abs(c));
    const auto b1 = OrthonormalBasis::build(d1, BasisDictionary::monomials(d1, degree));
    const auto b2 = OrthonormalBasis::build(d2, BasisDictionary::monomials(d2, degree));

    double worst = 0.0;
    for (int ix = 0; ix < 5; ++ix) {
        for (int iy = 0; iy < 5; ++iy) {
            const Complex z(-0.5 + 0.25 * ix, -0.5 + 0.25 * iy);
            const Complex w(0.35 - 0.17 * iy, -0.3 + 0.15 * ix);
            const Complex lhs = b1.kernel(z, w);
            const Complex rhs = c * b2.kernel(c * z, c * w) * std::conj(c);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

}  // namespace bkit::bergman
