#include "bkit/szego.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bkit/quadrature.hpp"

namespace bkit::szego {

namespace {
constexpr int kRefineFactor = 8;

// Trigonometric upsampling of one periodic sample block.
std::vector<Complex> trig_refine(const std::vector<Complex>& values, int factor) {
    const int m = static_cast<int>(values.size());
    const int half = m / 2;
    std::vector<Complex> coeff(m);
    for (int k = -half + 1; k < half; ++k) {
        Complex acc{0, 0};
        for (int i = 0; i < m; ++i) {
            acc += values[i] * std::exp(Complex(0, -2.0 * kPi * k * i / m));
        }
        coeff[(k + m) % m] = acc / static_cast<double>(m);
    }
    const int mf = m * factor;
    std::vector<Complex> out(mf);
    for (int i = 0; i < mf; ++i) {
        const double t = static_cast<double>(i) / mf;
        Complex acc{0, 0};
        for (int k = -half + 1; k < half; ++k) {
            acc += coeff[(k + m) % m] * std::exp(Complex(0, 2.0 * kPi * k * t));
        }
        out[i] = acc;
    }
    return out;
}

void require_smooth_kind(const geom::PlanarDomain& domain) {
    if (domain.kind() == geom::PlanarDomain::Kind::PuncturedDisk)
        throw std::invalid_argument("Szego machinery needs smooth boundary, no punctures");
}

}  // namespace

KerzmanSteinSystem::KerzmanSteinSystem(const geom::PlanarDomain& domain, int nodes_per_curve)
    : domain_(&domain), nodes_(nodes_per_curve) {
    require_smooth_kind(domain);
    const auto rules = quad::domain_rules(domain, nodes_);
    ncurves_ = static_cast<int>(rules.size());
    const int n = ncurves_ * nodes_;
    node_z_.reserve(n);
    node_dz_.reserve(n);
    for (const auto& rule : rules) {
        for (const auto& nd : rule.nodes()) {
            node_z_.push_back(nd.z);
            node_dz_.push_back(nd.dz);
        }
    }
    Eigen::MatrixXcd sys = Eigen::MatrixXcd::Identity(n, n);
    for (int i = 0; i < n; ++i) {
        const Complex Ti = node_dz_[i] / std::abs(node_dz_[i]);
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;  // Kerzman-Stein kernel vanishes on the diagonal
            const Complex diff = node_z_[j] - node_z_[i];
            const Complex term1 = node_dz_[j] / diff;                       // T ds = dz
            const Complex term2 = std::conj(Ti / (-diff)) * std::abs(node_dz_[j]);
            sys(i, j) += (term1 + term2) / (2.0 * kPi * kI * static_cast<double>(nodes_));
        }
    }
    lu_ = std::make_shared<Eigen::PartialPivLU<Eigen::MatrixXcd>>(sys);
}

CauchyDensity KerzmanSteinSystem::cauchy_density(Complex a) const {
    if (domain_->contains(a) != geom::Containment::Inside)
        throw std::invalid_argument("base point must be interior");
    CauchyDensity d;
    d.a = a;
    d.values.reserve(node_z_.size());
    for (std::size_t i = 0; i < node_z_.size(); ++i) {
        const Complex T = node_dz_[i] / std::abs(node_dz_[i]);
        d.values.push_back(std::conj(T / (node_z_[i] - a) / (2.0 * kPi * kI)));
    }
    return d;
}

Eigen::VectorXcd KerzmanSteinSystem::solve(const CauchyDensity& rhs) const {
    Eigen::VectorXcd b(rhs.values.size());
    for (std::size_t i = 0; i < rhs.values.size(); ++i) b(i) = rhs.values[i];
    Eigen::VectorXcd x = lu_->solve(b);
    if (!x.allFinite())
        throw std::runtime_error("Kerzman-Stein solve failed at " +
                                 std::to_string(nodes_) + " nodes per curve");
    return x;
}

SzegoSolution szego_kernel(const KerzmanSteinSystem& system, Complex a) {
    const Eigen::VectorXcd s = system.solve(system.cauchy_density(a));

    SzegoSolution sol;
    sol.a_ = a;
    const int m = system.nodes_per_curve();
    const int nc = system.curve_count();
    sol.boundary_.assign(s.data(), s.data() + s.size());

    // refine density per component; curve geometry is evaluated exactly
    const auto rules = quad::domain_rules(system.domain(), m * kRefineFactor);
    sol.refined_count_ = m * kRefineFactor;
    for (int c = 0; c < nc; ++c) {
        std::vector<Complex> block(sol.boundary_.begin() + c * m,
                                   sol.boundary_.begin() + (c + 1) * m);
        const auto fine = trig_refine(block, kRefineFactor);
        for (int i = 0; i < sol.refined_count_; ++i) {
            sol.ref_z_.push_back(rules[c].nodes()[i].z);
            sol.ref_dz_.push_back(rules[c].nodes()[i].dz);
            sol.ref_s_.push_back(fine[i]);
        }
    }
    return sol;
}

SzegoSolution szego_kernel(const geom::PlanarDomain& domain, Complex a,
                           int nodes_per_curve) {
    KerzmanSteinSystem system(domain, nodes_per_curve);
    return szego_kernel(system, a);
}

Complex SzegoSolution::value(Complex z) const {
    Complex acc{0, 0};
    for (std::size_t i = 0; i < ref_z_.size(); ++i) {
        acc += ref_s_[i] * ref_dz_[i] / (ref_z_[i] - z);
    }
    return acc / (2.0 * kPi * kI * static_cast<double>(refined_count_));
}

double SzegoSolution::at_base() const {
    const Complex v = value(a_);
    return v.real();
}

namespace {

struct Contour {
    std::function<Complex(double)> pos;  // t in [0,1), oriented like the boundary
};

std::vector<Contour> counting_contours(const geom::PlanarDomain& domain, double shrink) {
    std::vector<Contour> cs;
    if (const auto* d = domain.as_disk()) {
        const Complex c = d->center;
        const double r = shrink * d->radius;
        cs.push_back({[=](double t) { return c + r * std::exp(Complex(0, 2 * kPi * t)); }});
        return cs;
    }
    if (const auto* a = domain.as_annulus()) {
        const Complex c = a->center;
        const double spine = 0.5 * (a->inner + a->outer);
        const double r_in = spine - shrink * (spine - a->inner);
        const double r_out = spine + shrink * (a->outer - spine);
        cs.push_back({[=](double t) { return c + r_in * std::exp(Complex(0, -2 * kPi * t)); }});
        cs.push_back({[=](double t) { return c + r_out * std::exp(Complex(0, 2 * kPi * t)); }});
        return cs;
    }
    // general case: offset every component inward along i*T by a fraction of
    // the spine distance (half the minimal gap between components)
    const double spine_dist = domain.inradius();
    for (const auto& curve : domain.boundary()) {
        const double off = (1.0 - shrink) * spine_dist;
        cs.push_back({[&curve, off](double t) {
            const Complex v = curve.velocity(t);
            return curve.position(t) + off * kI * v / std::abs(v);
        }});
    }
    return cs;
}

}  // namespace

int szego_zero_count(const geom::PlanarDomain& domain, Complex a, int nodes_per_curve,
                     int contour_samples) {
    KerzmanSteinSystem system(domain, nodes_per_curve);
    return szego_zero_count(system, a, contour_samples);
}

int szego_zero_count(const KerzmanSteinSystem& system, Complex a, int contour_samples) {
    const geom::PlanarDomain& domain = system.domain();
    const SzegoSolution sol = szego_kernel(system, a);

    double shrink = 0.95;
    for (int attempt = 0; attempt < 4; ++attempt) {
        const auto contours = counting_contours(domain, shrink);
        double total = 0.0;
        bool ok = true;
        for (const auto& contour : contours) {
            Complex prev = sol.value(contour.pos(0.0));
            double acc = 0.0;
            double min_mod = std::abs(prev), mean_mod = 0.0;
            for (int i = 1; i <= contour_samples; ++i) {
                const double t = static_cast<double>(i % contour_samples) / contour_samples;
                const Complex cur = sol.value(contour.pos(t));
                min_mod = std::min(min_mod, std::abs(cur));
                mean_mod += std::abs(cur);
                const double step = std::arg(cur / prev);
                if (std::abs(step) > 2.0) ok = false;  // undersampled or near a zero
                acc += step;
                prev = cur;
            }
            mean_mod /= contour_samples;
            if (min_mod < 1e-6 * mean_mod) ok = false;  // zero too close to the contour
            total += acc / (2.0 * kPi);
        }
        const long count = std::lround(total);
        if (ok && std::abs(total - count) < 0.05 && count >= 0) return static_cast<int>(count);
        shrink *= 0.98;  // perturb and recount
    }
    throw std::runtime_error("zero count did not stabilize near the boundary contour (" +
                             std::to_string(system.nodes_per_curve()) + " nodes per curve)");
}

HarmonicMeasureField harmonic_measure(const geom::PlanarDomain& domain, int hole,
                                      int nodes_per_curve) {
    require_smooth_kind(domain);
    const int n = domain.connectivity();
    if (n < 2) throw std::invalid_argument("harmonic measure needs at least one hole");
    if (hole < 0 || hole >= n - 1) throw std::invalid_argument("invalid hole index");

    HarmonicMeasureField field;
    field.hole_ = hole;
    if (const auto* a = domain.as_annulus()) {
        const Complex c = a->center;
        const double R = a->outer;
        const double lr = std::log(a->inner / R);
        field.omega_ = [=](Complex z) { return std::log(std::abs(z - c) / R) / lr; };
        field.f_ = [=](Complex z) { return 1.0 / ((z - c) * lr); };
        return field;
    }
    auto solver = std::make_shared<dirichlet::DoubleLayerSolver>(domain, nodes_per_curve);
    auto solution = std::make_shared<dirichlet::DoubleLayerSolver::Solution>(
        solver->solve([hole](Complex, int comp) { return comp == hole ? 1.0 : 0.0; }));
    field.omega_ = [solver, solution](Complex z) { return solution->value(z); };
    field.f_ = [solver, solution](Complex z) { return solution->derivative_field(z); };
    return field;
}

Complex f_field_mean(const geom::PlanarDomain& domain, int hole) {
    const int n = domain.connectivity();
    if (hole < 0 || hole >= n - 1) throw std::invalid_argument("invalid hole index");
    // integral of F_j dv = -(1/i) contour integral over the hole component of
    // d(conj w); the component is closed, so the mean must vanish
    const auto rules = quad::domain_rules(domain, 0);
    Complex acc{0, 0};
    for (const auto& nd : rules[hole].nodes()) acc += std::conj(nd.dz);
    acc *= rules[hole].weight();
    return -(acc / kI) / domain.area();
}

MatchCoefficients bergman_szego_fit(const geom::PlanarDomain& domain, Complex a,
                                    const bergman::OrthonormalBasis& basis,
                                    int nodes_per_curve) {
    KerzmanSteinSystem system(domain, nodes_per_curve);
    return bergman_szego_fit(system, a, basis);
}

MatchCoefficients bergman_szego_fit(const KerzmanSteinSystem& system, Complex a,
                                    const bergman::OrthonormalBasis& basis) {
    const geom::PlanarDomain& domain = system.domain();
    const int nodes_per_curve = system.nodes_per_curve();
    const int n = domain.connectivity();
    const SzegoSolution sol = szego_kernel(system, a);

    std::vector<HarmonicMeasureField> fields;
    for (int j = 0; j + 1 < n; ++j) fields.push_back(harmonic_measure(domain, j, nodes_per_curve));

    // deterministic interior candidates, clear of the evaluation guard band,
    // ranked by the kernel series tail so the fit samples where the truncated
    // kernel has converged best
    const double band = std::max(basis.guard_band(), 0.05 * domain.inradius());
    const int want_fit = std::max(12, 12 * std::max(1, n - 1));
    const int want_hold = 10;
    unsigned long long state = 88172645463325252ull;
    auto next_unit = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<double>(state % 1000000007ull) / 1000000007.0;
    };
    // bounding box from the outer component
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    const auto bbox_rules = quad::domain_rules(domain, 128);
    for (const auto& nd : bbox_rules.back().nodes()) {
        xmin = std::min(xmin, nd.z.real());
        xmax = std::max(xmax, nd.z.real());
        ymin = std::min(ymin, nd.z.imag());
        ymax = std::max(ymax, nd.z.imag());
    }
    std::vector<std::pair<double, Complex>> candidates;
    int attempts = 0;
    while (static_cast<int>(candidates.size()) < 4 * (want_fit + want_hold) &&
           attempts++ < 200000) {
        const Complex z(xmin + (xmax - xmin) * next_unit(), ymin + (ymax - ymin) * next_unit());
        if (domain.contains(z) != geom::Containment::Inside) continue;
        if (domain.distance_to_boundary(z) < band) continue;
        if (std::abs(z - a) < 0.02) continue;
        candidates.emplace_back(basis.kernel_value(z, a).truncation_estimate, z);
    }
    if (static_cast<int>(candidates.size()) < want_fit + want_hold)
        throw std::runtime_error("could not sample enough interior points for the fit");
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<Complex> fit_pts, holdout_pts;
    for (int i = 0; i < want_fit + want_hold; ++i) {
        if (i < want_fit)
            fit_pts.push_back(candidates[i].second);
        else
            holdout_pts.push_back(candidates[i].second);
    }

    auto defect = [&](Complex z) {
        const Complex s = sol.value(z);
        return basis.kernel(z, a) - 4.0 * kPi * s * s;
    };

    MatchCoefficients out;
    out.a = a;
    if (n >= 2) {
        Eigen::MatrixXcd design(fit_pts.size(), n - 1);
        Eigen::VectorXcd rhs(fit_pts.size());
        for (std::size_t i = 0; i < fit_pts.size(); ++i) {
            for (int j = 0; j + 1 < n; ++j) design(i, j) = fields[j].f_field(fit_pts[i]);
            rhs(i) = defect(fit_pts[i]);
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(design);
        if (qr.rank() < n - 1)
            throw std::runtime_error("derivative fields are numerically rank deficient");
        const Eigen::VectorXcd lam = qr.solve(rhs);
        out.lambdas.assign(lam.data(), lam.data() + lam.size());
        for (std::size_t i = 0; i < fit_pts.size(); ++i) {
            Complex r = rhs(i);
            for (int j = 0; j + 1 < n; ++j) r -= lam(j) * design(i, j);
            out.fit_residual = std::max(out.fit_residual, std::abs(r));
        }
    } else {
        for (const Complex& z : fit_pts)
            out.fit_residual = std::max(out.fit_residual, std::abs(defect(z)));
    }
    for (const Complex& z : holdout_pts) {
        Complex r = defect(z);
        for (int j = 0; j + 1 < n; ++j) r -= out.lambdas[j] * fields[j].f_field(z);
        out.holdout_residual = std::max(out.holdout_residual, std::abs(r));
    }
    return out;
}

}  // namespace bkit::szego
