#include "bkit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bkit/quadrature.hpp"

namespace bkit::geom {

namespace {
constexpr double kClosureTol = 1e-12;
constexpr double kRegularTol = 1e-13;
constexpr double kBoundaryBand = 1e-10;
}  // namespace

BoundaryCurve::BoundaryCurve(Map position, Map velocity, Orientation orientation,
                             Map acceleration)
    : position_(std::move(position)),
      velocity_(std::move(velocity)),
      acceleration_(std::move(acceleration)),
      orientation_(orientation) {
    if (!position_ || !velocity_) {
        throw std::invalid_argument("BoundaryCurve: position and velocity maps required");
    }
}

BoundaryCurve BoundaryCurve::circle(Complex center, double radius, Orientation o) {
    if (radius <= 0.0) throw std::invalid_argument("circle radius must be positive");
    const double sign = (o == Orientation::Outer) ? 1.0 : -1.0;
    const double w = 2.0 * kPi * sign;
    return BoundaryCurve(
        [=](double t) { return center + radius * std::exp(Complex(0, w * t)); },
        [=](double t) { return Complex(0, w) * radius * std::exp(Complex(0, w * t)); },
        o,
        [=](double t) { return -w * w * radius * std::exp(Complex(0, w * t)); });
}

BoundaryCurve BoundaryCurve::ellipse(Complex center, double semi_x, double semi_y,
                                     Orientation o) {
    if (semi_x <= 0.0 || semi_y <= 0.0)
        throw std::invalid_argument("ellipse semi-axes must be positive");
    const double sign = (o == Orientation::Outer) ? 1.0 : -1.0;
    const double w = 2.0 * kPi * sign;
    return BoundaryCurve(
        [=](double t) {
            return center + Complex(semi_x * std::cos(w * t), semi_y * std::sin(w * t));
        },
        [=](double t) {
            return Complex(-w * semi_x * std::sin(w * t), w * semi_y * std::cos(w * t));
        },
        o,
        [=](double t) {
            return Complex(-w * w * semi_x * std::cos(w * t),
                           -w * w * semi_y * std::sin(w * t));
        });
}

Complex BoundaryCurve::acceleration(double t) const {
    if (acceleration_) return acceleration_(t);
    const double h = 1e-5;
    return (velocity_(t + h) - velocity_(t - h)) / (2.0 * h);
}

void BoundaryCurve::validate(int samples) const {
    if (std::abs(position_(0.0) - position_(1.0)) > kClosureTol) {
        throw std::invalid_argument("boundary curve is not closed");
    }
    for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        if (std::abs(velocity_(t)) < kRegularTol) {
            throw std::invalid_argument("boundary curve degenerate: |z'(t)| ~ 0 at t=" +
                                        std::to_string(t));
        }
    }
}

// ---------------------------------------------------------------------------

PlanarDomain PlanarDomain::disk(Complex center, double radius) {
    if (radius <= 0.0) throw std::invalid_argument("disk radius must be positive");
    PlanarDomain d;
    d.kind_ = Kind::Disk;
    d.data_ = DiskData{center, radius};
    d.curves_.push_back(BoundaryCurve::circle(center, radius, Orientation::Outer));
    d.reference_ = center;
    d.inradius_ = radius;
    d.finalize();
    return d;
}

PlanarDomain PlanarDomain::annulus(Complex center, double inner, double outer) {
    if (!(0.0 < inner && inner < outer))
        throw std::invalid_argument("annulus requires 0 < inner < outer");
    PlanarDomain d;
    d.kind_ = Kind::Annulus;
    d.data_ = AnnulusData{center, inner, outer};
    d.curves_.push_back(BoundaryCurve::circle(center, inner, Orientation::Hole));
    d.curves_.push_back(BoundaryCurve::circle(center, outer, Orientation::Outer));
    d.hole_points_.push_back(center);
    d.reference_ = center;
    d.inradius_ = 0.5 * (outer - inner);
    d.finalize();
    return d;
}

PlanarDomain PlanarDomain::punctured_disk(Complex center, double radius,
                                          std::vector<Complex> punctures) {
    if (radius <= 0.0) throw std::invalid_argument("disk radius must be positive");
    for (std::size_t i = 0; i < punctures.size(); ++i) {
        if (std::abs(punctures[i] - center) >= radius)
            throw std::invalid_argument("puncture outside the disk");
        for (std::size_t j = i + 1; j < punctures.size(); ++j) {
            if (std::abs(punctures[i] - punctures[j]) < 1e-12)
                throw std::invalid_argument("punctures must be pairwise distinct");
        }
    }
    PlanarDomain d;
    d.kind_ = Kind::PuncturedDisk;
    d.data_ = PuncturedDiskData{DiskData{center, radius}, punctures};
    d.curves_.push_back(BoundaryCurve::circle(center, radius, Orientation::Outer));
    d.punctures_ = std::move(punctures);
    d.reference_ = center;
    d.inradius_ = radius;
    d.finalize();
    return d;
}

PlanarDomain PlanarDomain::smooth(std::vector<BoundaryCurve> curves,
                                  std::vector<Complex> hole_points) {
    if (curves.empty()) throw std::invalid_argument("smooth domain needs boundary curves");
    if (curves.back().orientation() != Orientation::Outer)
        throw std::invalid_argument("outermost curve must come last with outer orientation");
    const std::size_t holes = curves.size() - 1;
    for (std::size_t i = 0; i < holes; ++i) {
        if (curves[i].orientation() != Orientation::Hole)
            throw std::invalid_argument("hole curves must precede the outer curve");
    }
    if (hole_points.size() != holes)
        throw std::invalid_argument("need exactly one marked point per hole");
    PlanarDomain d;
    d.kind_ = Kind::SmoothMultiplyConnected;
    d.data_ = SmoothData{hole_points};
    d.curves_ = std::move(curves);
    d.hole_points_ = std::move(hole_points);
    d.finalize();
    // reference point: centroid of the outer curve samples
    const auto& outer = d.curves_.back();
    Complex c{0, 0};
    const int m = 128;
    for (int i = 0; i < m; ++i) c += outer.position(static_cast<double>(i) / m);
    d.reference_ = c / static_cast<double>(m);
    // inradius proxy: half the minimal gap between distinct components
    double gap = std::numeric_limits<double>::max();
    const int ms = 256;
    for (std::size_t a = 0; a < d.curves_.size(); ++a) {
        for (std::size_t b = a + 1; b < d.curves_.size(); ++b) {
            for (int i = 0; i < ms; ++i) {
                const Complex za = d.curves_[a].position(static_cast<double>(i) / ms);
                for (int j = 0; j < ms; ++j) {
                    const Complex zb = d.curves_[b].position(static_cast<double>(j) / ms);
                    gap = std::min(gap, std::abs(za - zb));
                }
            }
        }
    }
    d.inradius_ = (d.curves_.size() > 1) ? 0.5 * gap : 1.0;
    return d;
}

void PlanarDomain::finalize() {
    for (const auto& c : curves_) c.validate();
    // distinct components must not intersect
    const int ms = 256;
    for (std::size_t a = 0; a < curves_.size(); ++a) {
        for (std::size_t b = a + 1; b < curves_.size(); ++b) {
            double dmin = std::numeric_limits<double>::max();
            for (int i = 0; i < ms; ++i) {
                const Complex za = curves_[a].position(static_cast<double>(i) / ms);
                for (int j = 0; j < ms; ++j) {
                    dmin = std::min(dmin,
                                    std::abs(za - curves_[b].position(static_cast<double>(j) / ms)));
                }
            }
            if (dmin <= 0.0)
                throw std::invalid_argument("boundary components intersect");
        }
    }
    // sample count: double until the Stokes area settles
    int m = 256;
    double prev = quad::stokes_area(curves_, m);
    while (m < 4096) {
        const double next = quad::stokes_area(curves_, 2 * m);
        if (std::abs(next - prev) < 1e-12) {
            prev = next;
            m *= 2;
            break;
        }
        prev = next;
        m *= 2;
    }
    nodes_ = m;
    area_ = prev;
    if (!(area_ > 0.0)) throw std::invalid_argument("domain area must be positive");
}

Containment PlanarDomain::contains(Complex z) const {
    for (const Complex& p : punctures_) {
        if (std::abs(z - p) < 1e-12) return Containment::Outside;
    }
    if (const auto* d = as_disk()) {
        const double r = std::abs(z - d->center);
        if (std::abs(r - d->radius) < kBoundaryBand) return Containment::Boundary;
        return r < d->radius ? Containment::Inside : Containment::Outside;
    }
    if (const auto* pd = as_punctured()) {
        const double r = std::abs(z - pd->disk.center);
        if (std::abs(r - pd->disk.radius) < kBoundaryBand) return Containment::Boundary;
        return r < pd->disk.radius ? Containment::Inside : Containment::Outside;
    }
    if (const auto* a = as_annulus()) {
        const double r = std::abs(z - a->center);
        if (std::abs(r - a->inner) < kBoundaryBand || std::abs(r - a->outer) < kBoundaryBand)
            return Containment::Boundary;
        return (a->inner < r && r < a->outer) ? Containment::Inside : Containment::Outside;
    }
    // winding number over all components, sampled boundary
    if (distance_to_boundary(z) < kBoundaryBand) return Containment::Boundary;
    double winding = 0.0;
    const int m = nodes_;
    for (const auto& c : curves_) {
        Complex prev = c.position(0.0) - z;
        double acc = 0.0;
        for (int i = 1; i <= m; ++i) {
            const Complex cur = c.position(static_cast<double>(i % m) / m) - z;
            acc += std::arg(cur / prev);
            prev = cur;
        }
        winding += acc / (2.0 * kPi);
    }
    return (std::lround(winding) == 1) ? Containment::Inside : Containment::Outside;
}

double PlanarDomain::distance_to_boundary(Complex z) const {
    if (const auto* d = as_disk()) return std::abs(d->radius - std::abs(z - d->center));
    if (const auto* pd = as_punctured())
        return std::abs(pd->disk.radius - std::abs(z - pd->disk.center));
    if (const auto* a = as_annulus()) {
        const double r = std::abs(z - a->center);
        return std::min(std::abs(r - a->inner), std::abs(a->outer - r));
    }
    double dmin = std::numeric_limits<double>::max();
    const int m = std::max(nodes_, 512);
    for (const auto& c : curves_) {
        for (int i = 0; i < m; ++i) {
            dmin = std::min(dmin, std::abs(z - c.position(static_cast<double>(i) / m)));
        }
    }
    return dmin;
}

std::string PlanarDomain::describe() const {
    std::ostringstream os;
    os.precision(12);
    switch (kind_) {
        case Kind::Disk: {
            const auto* d = as_disk();
            os << "disk(center=" << d->center << ", r=" << d->radius << ")";
            break;
        }
        case Kind::Annulus: {
            const auto* a = as_annulus();
            os << "annulus(center=" << a->center << ", " << a->inner << ".." << a->outer << ")";
            break;
        }
        case Kind::PuncturedDisk: {
            const auto* p = as_punctured();
            os << "punctured_disk(r=" << p->disk.radius << ", " << p->punctures.size()
               << " punctures)";
            break;
        }
        case Kind::SmoothMultiplyConnected:
            os << "smooth(" << curves_.size() << " components)";
            break;
    }
    return os.str();
}

Complex unit_tangent(const PlanarDomain& domain, int component, double t) {
    const auto& curves = domain.boundary();
    if (component < 0 || component >= static_cast<int>(curves.size()))
        throw std::invalid_argument("unit_tangent: invalid component index");
    const Complex v = curves[component].velocity(t);
    const double speed = std::abs(v);
    if (speed < kRegularTol)
        throw std::invalid_argument("unit_tangent: degenerate curve point");
    return v / speed;
}

double domain_area(const PlanarDomain& domain) { return domain.area(); }

Containment contains(const PlanarDomain& domain, Complex z) { return domain.contains(z); }

// ---------------------------------------------------------------------------

ReinhardtProfile2::ReinhardtProfile2() : t_star_((std::sqrt(5.0) - 1.0) / 2.0) {
    const double residual = std::abs(profile(t_star_) - 1.0);
    if (residual > 1e-12) throw std::logic_error("radial cutoff failed its defining equation");
}

bool ReinhardtProfile2::contains(Complex z1, Complex z2) const {
    return profile(std::norm(z1)) + std::norm(z2) < 1.0;
}

}  // namespace bkit::geom
