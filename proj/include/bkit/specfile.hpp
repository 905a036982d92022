#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bkit/geometry.hpp"
#include "bkit/types.hpp"

namespace bkit::spec {

struct SpecError : std::runtime_error {
    SpecError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
    int line;
};

struct SolverOverrides {
    int degree = 30;        // basis truncation degree
    int nodes = 512;        // boundary nodes per curve for integral equations
    int grid = 51;          // scan resolution
    double guard = 0.1;     // guard band as a fraction of the inradius
    double tol_scale = 1.0; // multiplies every row tolerance
};

/**
 * @brief Parsed domain description.
 *
 * Line-oriented `key = value` format with `#` comments. Complex scalars are
 * written `re+imi` (for example `0.5-0.25i`); puncture lists are `re,im`
 * pairs separated by `;`. Smooth domains list one `curve = <family> <params>`
 * line per component, outermost last: `circle cx cy r` or
 * `ellipse cx cy semi_x semi_y`. Unknown keys are rejected.
 */
struct DomainSpecFile {
    enum class Kind { Disk, Annulus, PuncturedDisk, Smooth, Reinhardt2, Unbounded };

    Kind kind{};
    Complex center{0, 0};
    double radius = 0.0;
    double inner = 0.0;
    double outer = 0.0;
    std::vector<Complex> punctures;
    struct CurveSpec {
        std::string family;
        std::vector<double> params;
    };
    std::vector<CurveSpec> curves;
    std::string label;
    SolverOverrides solver;

    /// Builds the planar domain; throws for reinhardt2 and unbounded kinds.
    geom::PlanarDomain build_domain() const;
    std::string kind_name() const;
};

Complex parse_complex(const std::string& text);

DomainSpecFile parse_spec_text(const std::string& text);
DomainSpecFile parse_spec_file(const std::string& path);

}  // namespace bkit::spec
