#include "bkit/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bkit::potential {

namespace {
constexpr double kPoleTol = 1e-10;

void require_interior(const geom::PlanarDomain& d, Complex z, const char* what) {
    if (d.contains(z) != geom::Containment::Inside)
        throw std::invalid_argument(std::string(what) + ": point not interior");
}
}  // namespace

GreensEvaluator GreensEvaluator::build(const geom::PlanarDomain& domain) {
    GreensEvaluator g;
    g.domain_ = &domain;
    if (const auto* a = domain.as_annulus()) {
        g.q_ = a->inner / a->outer;
        g.product_terms_ =
            static_cast<int>(std::ceil(std::log(1e-14) / (2.0 * std::log(g.q_)))) + 1;
    } else if (domain.kind() == geom::PlanarDomain::Kind::SmoothMultiplyConnected) {
        g.solver_ = std::make_shared<dirichlet::DoubleLayerSolver>(domain, 0);
    }
    return g;
}

double GreensEvaluator::annulus_log_prime(Complex x) const {
    // P(x) = (1-x) prod_k (1 - q^{2k} x)(1 - q^{2k}/x)
    double acc = std::log(std::abs(1.0 - x));
    double q2k = 1.0;
    for (int k = 1; k <= product_terms_; ++k) {
        q2k *= q_ * q_;
        acc += std::log(std::abs(1.0 - q2k * x)) + std::log(std::abs(1.0 - q2k / x));
    }
    return acc;
}

double GreensEvaluator::green(Complex z, Complex w) const {
    require_interior(*domain_, z, "green");
    require_interior(*domain_, w, "green");
    if (std::abs(z - w) < kPoleTol)
        throw std::invalid_argument("green: z too close to the pole, use robin instead");
    return std::log(std::abs(z - w)) + regular_part(z, w);
}

double GreensEvaluator::regular_part(Complex z, Complex w) const {
    const auto kind = domain_->kind();
    if (kind == geom::PlanarDomain::Kind::Disk ||
        kind == geom::PlanarDomain::Kind::PuncturedDisk) {
        const auto* d = domain_->as_disk();
        const auto* pd = domain_->as_punctured();
        const Complex c = d ? d->center : pd->disk.center;
        const double r = d ? d->radius : pd->disk.radius;
        return std::log(r) - std::log(std::abs(r * r - (z - c) * std::conj(w - c)));
    }
    if (const auto* a = domain_->as_annulus()) {
        const Complex zeta = (z - a->center) / a->outer;
        const Complex alpha = (w - a->center) / a->outer;
        const double la = std::log(std::abs(alpha));
        const double g = annulus_log_prime(zeta / alpha) -
                         annulus_log_prime(zeta * std::conj(alpha)) + la -
                         la / std::log(q_) * std::log(std::abs(zeta));
        return g - std::log(std::abs(z - w));
    }
    // smooth multiply connected: h(., w) solves the Dirichlet problem with
    // boundary data -ln|zeta - w|
    const auto sol = solver_->solve(
        [w](Complex zeta, int) { return -std::log(std::abs(zeta - w)); });
    return sol.value(z);
}

double GreensEvaluator::robin(Complex z0) const {
    require_interior(*domain_, z0, "robin");
    const auto kind = domain_->kind();
    if (kind == geom::PlanarDomain::Kind::Disk ||
        kind == geom::PlanarDomain::Kind::PuncturedDisk) {
        const auto* d = domain_->as_disk();
        const auto* pd = domain_->as_punctured();
        const Complex c = d ? d->center : pd->disk.center;
        const double r = d ? d->radius : pd->disk.radius;
        return std::log(r) - std::log(r * r - std::norm(z0 - c));
    }
    if (const auto* a = domain_->as_annulus()) {
        const Complex alpha = (z0 - a->center) / a->outer;
        const double la = std::log(std::abs(alpha));
        double log_prod_one = 0.0;  // ln prod (1-q^{2k})^2
        double q2k = 1.0;
        for (int k = 1; k <= product_terms_; ++k) {
            q2k *= q_ * q_;
            log_prod_one += 2.0 * std::log(1.0 - q2k);
        }
        return log_prod_one - annulus_log_prime(Complex(std::norm(alpha), 0.0)) -
               la * la / std::log(q_) - std::log(a->outer);
    }
    const auto sol = solver_->solve(
        [z0](Complex zeta, int) { return -std::log(std::abs(zeta - z0)); });
    return sol.value(z0);
}

double green(const geom::PlanarDomain& domain, Complex z, Complex w) {
    return GreensEvaluator::build(domain).green(z, w);
}

RobinValue robin(const geom::PlanarDomain& domain, Complex z0) {
    return {z0, GreensEvaluator::build(domain).robin(z0), 0.0, false};
}

RobinValue robin_extrapolated(const geom::PlanarDomain& domain, Complex z0) {
    return robin_extrapolated(GreensEvaluator::build(domain), z0);
}

RobinValue robin_extrapolated(const GreensEvaluator& greens, Complex z0) {
    const double eps = 1e-3, eps2 = 5e-4;
    const double angles[4] = {0.0, 0.5 * kPi, kPi, 1.5 * kPi};
    double phi1[4], phi2[4];
    for (int i = 0; i < 4; ++i) {
        const Complex dir = std::exp(Complex(0, angles[i]));
        phi1[i] = greens.green(z0 + eps * dir, z0) - std::log(eps);
        phi2[i] = greens.green(z0 + eps2 * dir, z0) - std::log(eps2);
    }
    // per-angle first-order Richardson, used only to gauge disagreement
    double per_angle[4];
    double mean = 0.0;
    for (int i = 0; i < 4; ++i) {
        per_angle[i] = 2.0 * phi2[i] - phi1[i];
        mean += 0.25 * per_angle[i];
    }
    double spread = 0.0;
    for (double v : per_angle) spread = std::max(spread, std::abs(v - mean));
    // four-angle averages leave only eps^4; one Richardson step removes it
    const double avg1 = 0.25 * (phi1[0] + phi1[1] + phi1[2] + phi1[3]);
    const double avg2 = 0.25 * (phi2[0] + phi2[1] + phi2[2] + phi2[3]);
    const double lambda = (16.0 * avg2 - avg1) / 15.0;
    return {z0, lambda, spread, spread > 1e-6};
}

double suita_margin(const geom::PlanarDomain& domain,
                    const bergman::OrthonormalBasis& basis, Complex z) {
    require_interior(domain, z, "suita_margin");
    const double k = basis.kernel(z, z).real();
    const double lambda = GreensEvaluator::build(domain).robin(z);
    return kPi * k - std::exp(2.0 * lambda);
}

namespace {

// distance from z0 along direction e^{i theta} to the first boundary hit
double ray_exit(const geom::PlanarDomain& domain, Complex z0, double theta) {
    const Complex dir = std::exp(Complex(0, theta));
    auto circle_hit_outer = [&](Complex c, double R) {
        const Complex d = z0 - c;
        const double b = (std::conj(d) * dir).real();
        return -b + std::sqrt(b * b + R * R - std::norm(d));
    };
    if (const auto* d = domain.as_disk()) return circle_hit_outer(d->center, d->radius);
    if (const auto* pd = domain.as_punctured())
        return circle_hit_outer(pd->disk.center, pd->disk.radius);
    if (const auto* a = domain.as_annulus()) {
        double hit = circle_hit_outer(a->center, a->outer);
        const Complex d = z0 - a->center;
        const double b = (std::conj(d) * dir).real();
        const double disc = b * b - (std::norm(d) - a->inner * a->inner);
        if (disc >= 0.0 && b < 0.0) {
            hit = std::min(hit, -b - std::sqrt(disc));
        }
        return hit;
    }
    // smooth domains: march until the ray exits, then bisect the crossing
    const double step = 0.25 * domain.inradius();
    double lo = 0.0, hi = step;
    while (domain.contains(z0 + hi * dir) == geom::Containment::Inside) {
        lo = hi;
        hi += step;
        if (hi > 1e6) throw std::runtime_error("ray did not exit the domain");
    }
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (domain.contains(z0 + mid * dir) == geom::Containment::Inside)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

SublevelProfile sublevel_profile(const geom::PlanarDomain& domain, Complex z0,
                                 std::span<const double> taus, int rays) {
    require_interior(domain, z0, "sublevel_profile");
    for (double tau : taus)
        if (!(tau < 0.0)) throw std::invalid_argument("sublevel levels must be negative");

    const GreensEvaluator greens = GreensEvaluator::build(domain);
    SublevelProfile profile;
    profile.z0 = z0;

    std::vector<double> exits(rays);
    for (int i = 0; i < rays; ++i) {
        exits[i] = ray_exit(domain, z0, 2.0 * kPi * i / rays);
    }

    for (double tau : taus) {
        double area = 0.0;
        bool dropped = false;
        for (int i = 0; i < rays && !dropped; ++i) {
            const double theta = 2.0 * kPi * i / rays;
            const Complex dir = std::exp(Complex(0, theta));
            // back off the endpoint until it is genuinely interior; grazing
            // rays leave only a quadratically small clearance at the exit
            double hi_limit = exits[i] * (1.0 - 1e-9);
            for (int back = 0;
                 back < 60 &&
                 domain.contains(z0 + hi_limit * dir) != geom::Containment::Inside;
                 ++back) {
                hi_limit -= exits[i] * 1e-4;
            }
            double lo = 1e-12 * domain.inradius(), hi = hi_limit;
            auto gval = [&](double r) { return greens.green(z0 + r * dir, z0); };
            if (gval(hi) < tau) {
                // level set reaches the boundary along this ray
                dropped = true;
                break;
            }
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (gval(mid) < tau)
                    lo = mid;
                else
                    hi = mid;
            }
            const double cross = 0.5 * (lo + hi);
            // crossing must be unique: g stays above tau beyond it
            for (int s = 1; s <= 8; ++s) {
                const double r = cross + (hi_limit - cross) * s / 9.0;
                if (gval(r) < tau - 1e-12) {
                    dropped = true;
                    break;
                }
            }
            area += 0.5 * cross * cross * (2.0 * kPi / rays);
        }
        SublevelRow row;
        row.tau = tau;
        row.dropped = dropped;
        row.volume = dropped ? 0.0 : area;
        row.ratio = dropped ? 0.0 : std::exp(2.0 * tau) / area;
        profile.rows.push_back(row);
    }
    return profile;
}

}  // namespace bkit::potential
