#include "bkit/rigidity.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bkit/quadrature.hpp"

namespace bkit::rigidity {

namespace {
constexpr double kThreshold = 1e-4;
constexpr double kTieTol = 1e-12;

struct BBox {
    double xmin, xmax, ymin, ymax;
};

BBox bounding_box(const geom::PlanarDomain& domain) {
    BBox b{1e300, -1e300, 1e300, -1e300};
    const auto rules = quad::domain_rules(domain, 256);
    for (const auto& nd : rules.back().nodes()) {
        b.xmin = std::min(b.xmin, nd.z.real());
        b.xmax = std::max(b.xmax, nd.z.real());
        b.ymin = std::min(b.ymin, nd.z.imag());
        b.ymax = std::max(b.ymax, nd.z.imag());
    }
    return b;
}

}  // namespace

std::string ClassificationVerdict::describe() const {
    std::ostringstream os;
    os.precision(10);
    if (const auto* d = std::get_if<DiskMinusPolar>(&verdict)) {
        os << "DiskMinusPolar center=(" << d->center.real() << "," << d->center.imag()
           << ") radius=" << d->radius
           << "  (disk minus a possibly empty closed polar set)";
    } else if (const auto* nm = std::get_if<NotMinimal>(&verdict)) {
        os << "NotMinimal min_margin=" << nm->min_margin << " argmin=(" << nm->argmin.real()
           << "," << nm->argmin.imag() << ")";
    } else if (const auto* iv = std::get_if<InfiniteVolumeCase>(&verdict)) {
        os << "InfiniteVolumeCase " << iv->label;
    } else if (const auto* ie = std::get_if<InconsistentEvidence>(&verdict)) {
        os << "InconsistentEvidence margin=" << ie->min_margin
           << " constancy=" << ie->constancy << " (numerical trouble)";
    }
    return os.str();
}

std::pair<double, Complex> minimal_scan(const bergman::OrthonormalBasis& basis, int grid) {
    const auto& domain = basis.domain();
    const BBox box = bounding_box(domain);
    const Complex centroid = domain.reference_point();
    const double band = basis.guard_band();

    double best = std::numeric_limits<double>::max();
    Complex arg{};
    bool any = false;
    for (int iy = 0; iy < grid; ++iy) {
        for (int ix = 0; ix < grid; ++ix) {
            const Complex z(box.xmin + (box.xmax - box.xmin) * ix / (grid - 1),
                            box.ymin + (box.ymax - box.ymin) * iy / (grid - 1));
            if (domain.contains(z) != geom::Containment::Inside) continue;
            if (domain.distance_to_boundary(z) < band) continue;
            any = true;
            const double margin = basis.minimality_margin(z);
            if (margin < best - kTieTol) {
                best = margin;
                arg = z;
            } else if (margin < best + kTieTol) {
                best = std::min(best, margin);
                // tie: prefer the point nearest the reference, then smallest (re, im)
                const double da = std::abs(z - centroid), db = std::abs(arg - centroid);
                if (da < db - kTieTol ||
                    (std::abs(da - db) <= kTieTol &&
                     (z.real() < arg.real() - kTieTol ||
                      (std::abs(z.real() - arg.real()) <= kTieTol && z.imag() < arg.imag())))) {
                    arg = z;
                }
            }
        }
    }
    if (!any) throw std::invalid_argument("minimal_scan: no admissible grid points");
    return {best, arg};
}

double kernel_row_constancy(const bergman::OrthonormalBasis& basis, Complex z0,
                            std::span<const Complex> samples) {
    const double target = 1.0 / basis.domain().area();
    double worst = 0.0;
    for (const Complex& z : samples) {
        worst = std::max(worst, std::abs(basis.kernel(z, z0) - target));
    }
    return worst;
}

double mean_one_check(const bergman::OrthonormalBasis& basis, Complex z0) {
    return std::abs(basis.kernel_mean(z0) - 1.0);
}

std::vector<Complex> interior_samples(const geom::PlanarDomain& domain, int count,
                                      double clearance) {
    const BBox box = bounding_box(domain);
    std::vector<Complex> pts;
    unsigned long long state = 2463534242462946025ull;
    auto next_unit = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<double>(state % 1000000007ull) / 1000000007.0;
    };
    int guard = 0;
    while (static_cast<int>(pts.size()) < count && guard++ < 100000) {
        const Complex z(box.xmin + (box.xmax - box.xmin) * next_unit(),
                        box.ymin + (box.ymax - box.ymin) * next_unit());
        if (domain.contains(z) != geom::Containment::Inside) continue;
        if (domain.distance_to_boundary(z) < clearance) continue;
        pts.push_back(z);
    }
    if (static_cast<int>(pts.size()) < count)
        throw std::runtime_error("could not draw enough interior samples");
    return pts;
}

ClassificationVerdict classify(const geom::PlanarDomain& domain, int degree, int grid) {
    const auto basis =
        bergman::OrthonormalBasis::build(domain, bergman::BasisDictionary::standard(domain, degree));
    auto [margin, argmin] = minimal_scan(basis, grid);

    ClassificationVerdict out;
    out.evidence.grid = grid;
    out.evidence.min_margin = margin;
    out.evidence.argmin = argmin;
    out.evidence.threshold = kThreshold;

    // local refinement of the argmin: coordinate descent with step halving
    const BBox box = bounding_box(domain);
    double step = (box.xmax - box.xmin) / (grid - 1);
    Complex z = argmin;
    double value = margin;
    while (step > 1e-8) {
        bool improved = false;
        const Complex moves[4] = {{step, 0}, {-step, 0}, {0, step}, {0, -step}};
        for (const Complex& mv : moves) {
            const Complex cand = z + mv;
            if (domain.contains(cand) != geom::Containment::Inside) continue;
            if (domain.distance_to_boundary(cand) < basis.guard_band()) continue;
            const double m = basis.minimality_margin(cand);
            if (m < value) {
                value = m;
                z = cand;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    out.evidence.min_margin = value;
    out.evidence.argmin = z;

    const auto samples = interior_samples(domain, 64, basis.guard_band());
    out.evidence.constancy = kernel_row_constancy(basis, z, samples);

    if (value <= kThreshold) {
        if (out.evidence.constancy < kThreshold) {
            out.verdict =
                DiskMinusPolar{z, std::sqrt(domain.area() / kPi)};
        } else {
            out.verdict = InconsistentEvidence{value, out.evidence.constancy, z};
        }
    } else {
        out.verdict = NotMinimal{value, z};
    }
    return out;
}

ClassificationVerdict classify_unbounded(const std::string& label) {
    ClassificationVerdict out;
    out.verdict = InfiniteVolumeCase{
        label.empty() ? "plane minus a possibly empty closed polar set "
                        "(declared unbounded; no quadrature attempted)"
                      : label};
    return out;
}

}  // namespace bkit::rigidity
