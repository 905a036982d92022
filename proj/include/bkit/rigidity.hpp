#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bkit/bergman.hpp"
#include "bkit/geometry.hpp"
#include "bkit/types.hpp"

namespace bkit::rigidity {

struct DiskMinusPolar {
    Complex center;
    double radius;
};
struct NotMinimal {
    double min_margin;
    Complex argmin;
};
struct InfiniteVolumeCase {
    std::string label;
};
/// A small minimality margin together with a failed constant-row check is
/// impossible in exact arithmetic; reported as a diagnostic, never masked.
struct InconsistentEvidence {
    double min_margin;
    double constancy;
    Complex argmin;
};

struct Evidence {
    int grid = 0;
    double min_margin = 0.0;
    Complex argmin{};
    double constancy = 0.0;
    double threshold = 1e-4;
};

struct ClassificationVerdict {
    std::variant<DiskMinusPolar, NotMinimal, InfiniteVolumeCase, InconsistentEvidence>
        verdict;
    Evidence evidence;
    std::string describe() const;
};

/// Min of K(z,z) v - 1 over an interior grid (guard band excluded) and its
/// argmin; ties resolved by distance to the reference point, then
/// lexicographically.
std::pair<double, Complex> minimal_scan(const bergman::OrthonormalBasis& basis, int grid);

/// Max over samples of |K(z, z0) - 1/v|.
double kernel_row_constancy(const bergman::OrthonormalBasis& basis, Complex z0,
                            std::span<const Complex> samples);

/// |integral of K(w, z0) dv(w) - 1|, exact from moments; this identity is
/// unconditional, any failure signals a bug.
double mean_one_check(const bergman::OrthonormalBasis& basis, Complex z0);

/// Deterministic interior sample points for constancy checks.
std::vector<Complex> interior_samples(const geom::PlanarDomain& domain, int count,
                                      double clearance);

ClassificationVerdict classify(const geom::PlanarDomain& domain, int degree = 30,
                               int grid = 51);
ClassificationVerdict classify_unbounded(const std::string& label);

}  // namespace bkit::rigidity
