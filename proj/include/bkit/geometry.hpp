#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bkit/types.hpp"

namespace bkit::geom {

/// Orientation of a boundary component: outer curves run counterclockwise,
/// hole curves clockwise, so the domain always lies to the left of the
/// direction of travel and boundary integrals carry a single sign.
enum class Orientation { Outer, Hole };

/**
 * @brief Smooth closed curve parametrized over t in [0,1).
 *
 * Stores callable position/velocity maps plus cached equispaced samples.
 * The sample count is chosen by the owning domain (self-convergence of the
 * Stokes area).
 */
class BoundaryCurve {
public:
    using Map = std::function<Complex(double)>;

    BoundaryCurve(Map position, Map velocity, Orientation orientation,
                  Map acceleration = nullptr);

    static BoundaryCurve circle(Complex center, double radius, Orientation o);
    static BoundaryCurve ellipse(Complex center, double semi_x, double semi_y,
                                 Orientation o);

    Complex position(double t) const { return position_(t); }
    Complex velocity(double t) const { return velocity_(t); }
    /// Second derivative; analytic where the family provides one, otherwise a
    /// centered difference of the velocity.
    Complex acceleration(double t) const;
    Orientation orientation() const { return orientation_; }

    /// Checks closure and regularity on a sample grid; throws on failure.
    void validate(int samples = 512) const;

private:
    Map position_;
    Map velocity_;
    Map acceleration_;
    Orientation orientation_;
};

/// Tri-state membership result; points within 1e-10 of the boundary are
/// reported as ambiguous rather than forced to either side.
enum class Containment { Inside, Outside, Boundary };

struct DiskData {
    Complex center;
    double radius;
};
struct AnnulusData {
    Complex center;
    double inner;
    double outer;
};
struct PuncturedDiskData {
    DiskData disk;
    std::vector<Complex> punctures;
};
struct SmoothData {
    // hole points: one marked interior point per hole, used for basis poles
    // and the logarithmic completion of layer potentials
    std::vector<Complex> hole_points;
};

/**
 * @brief Bounded planar domain with smooth boundary components.
 *
 * Immutable after construction. The boundary is stored as an ordered list of
 * curves with the outermost component last; holes come first. Quadrature
 * sample counts and the Stokes area are fixed at construction time.
 */
class PlanarDomain {
public:
    enum class Kind { Disk, Annulus, PuncturedDisk, SmoothMultiplyConnected };

    static PlanarDomain disk(Complex center, double radius);
    static PlanarDomain annulus(Complex center, double inner, double outer);
    static PlanarDomain punctured_disk(Complex center, double radius,
                                       std::vector<Complex> punctures);
    static PlanarDomain smooth(std::vector<BoundaryCurve> curves,
                               std::vector<Complex> hole_points);

    Kind kind() const { return kind_; }
    int connectivity() const { return static_cast<int>(curves_.size()); }
    const std::vector<BoundaryCurve>& boundary() const { return curves_; }
    const std::vector<Complex>& punctures() const { return punctures_; }
    /// One marked point strictly inside each hole (empty for disks).
    const std::vector<Complex>& hole_points() const { return hole_points_; }

    /// Natural centering point for monomial dictionaries.
    Complex reference_point() const { return reference_; }
    double inradius() const { return inradius_; }
    /// Boundary nodes per curve selected by the area self-convergence control.
    int boundary_nodes() const { return nodes_; }
    /// Stokes area v = (1/2i) contour integral of conj(z) dz.
    double area() const { return area_; }

    Containment contains(Complex z) const;
    double distance_to_boundary(Complex z) const;

    const DiskData* as_disk() const { return std::get_if<DiskData>(&data_); }
    const AnnulusData* as_annulus() const { return std::get_if<AnnulusData>(&data_); }
    const PuncturedDiskData* as_punctured() const {
        return std::get_if<PuncturedDiskData>(&data_);
    }

    std::string describe() const;

private:
    PlanarDomain() = default;
    void finalize();  // picks nodes_, caches area_, validates invariants

    Kind kind_{};
    std::variant<DiskData, AnnulusData, PuncturedDiskData, SmoothData> data_;
    std::vector<BoundaryCurve> curves_;  // outermost last
    std::vector<Complex> punctures_;
    std::vector<Complex> hole_points_;
    Complex reference_{};
    double inradius_ = 0.0;
    int nodes_ = 256;
    double area_ = 0.0;
};

/// Unit tangent z'(t)/|z'(t)| of one boundary component.
Complex unit_tangent(const PlanarDomain& domain, int component, double t);

/// Domain area; punctures are measure zero and ignored.
double domain_area(const PlanarDomain& domain);

Containment contains(const PlanarDomain& domain, Complex z);

/**
 * @brief The two-complex-dimensional model domain
 *        { (z1,z2) : |z1|^4 + |z1|^2 + |z2|^2 < 1 }.
 *
 * The radial profile p(t) = t^2 + t in t = |z1|^2 cuts off at the positive
 * root t* of p(t) = 1.
 */
class ReinhardtProfile2 {
public:
    ReinhardtProfile2();
    double profile(double t) const { return t * t + t; }
    double t_star() const { return t_star_; }
    bool contains(Complex z1, Complex z2) const;

private:
    double t_star_;
};

}  // namespace bkit::geom
