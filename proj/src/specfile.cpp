#include "bkit/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace bkit::spec {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_real(const std::string& text, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw SpecError(line, "expected a number, got '" + text + "'");
    }
}

}  // namespace

Complex parse_complex(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty()) throw std::invalid_argument("empty complex literal");
    if (text.back() == 'i' || text.back() == 'I') {
        std::string body = text.substr(0, text.size() - 1);
        // split at the sign that separates real and imaginary parts
        for (std::size_t i = body.size(); i-- > 1;) {
            const char c = body[i];
            if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                const std::string re = trim(body.substr(0, i));
                std::string im = trim(body.substr(i));
                if (im == "+" || im == "-") im += "1";
                return {std::stod(re), std::stod(im)};
            }
        }
        std::string im = trim(body);
        if (im.empty() || im == "+") im = "1";
        if (im == "-") im = "-1";
        return {0.0, std::stod(im)};
    }
    return {std::stod(text), 0.0};
}

DomainSpecFile parse_spec_text(const std::string& text) {
    DomainSpecFile out;
    bool have_kind = false;
    std::set<std::string> seen;

    static const std::set<std::string> known = {
        "kind",   "center", "radius", "inner",     "outer", "punctures",
        "curve",  "label",  "degree", "nodes",     "grid",  "guard",
        "tol_scale"};

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw SpecError(lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!known.count(key)) throw SpecError(lineno, "unknown key '" + key + "'");
        if (key != "curve" && seen.count(key))
            throw SpecError(lineno, "duplicate key '" + key + "'");
        seen.insert(key);

        if (key == "kind") {
            if (value == "disk") out.kind = DomainSpecFile::Kind::Disk;
            else if (value == "annulus") out.kind = DomainSpecFile::Kind::Annulus;
            else if (value == "punctured_disk") out.kind = DomainSpecFile::Kind::PuncturedDisk;
            else if (value == "smooth") out.kind = DomainSpecFile::Kind::Smooth;
            else if (value == "reinhardt2") out.kind = DomainSpecFile::Kind::Reinhardt2;
            else if (value == "unbounded") out.kind = DomainSpecFile::Kind::Unbounded;
            else throw SpecError(lineno, "unknown kind '" + value + "'");
            have_kind = true;
        } else if (key == "center") {
            try {
                out.center = parse_complex(value);
            } catch (const std::exception&) {
                throw SpecError(lineno, "bad complex value '" + value + "'");
            }
        } else if (key == "radius") {
            out.radius = parse_real(value, lineno);
        } else if (key == "inner") {
            out.inner = parse_real(value, lineno);
        } else if (key == "outer") {
            out.outer = parse_real(value, lineno);
        } else if (key == "punctures") {
            std::istringstream ps(value);
            std::string item;
            while (std::getline(ps, item, ';')) {
                item = trim(item);
                if (item.empty()) continue;
                const auto comma = item.find(',');
                if (comma == std::string::npos)
                    throw SpecError(lineno, "puncture entries are 're,im' pairs");
                out.punctures.emplace_back(parse_real(trim(item.substr(0, comma)), lineno),
                                           parse_real(trim(item.substr(comma + 1)), lineno));
            }
        } else if (key == "curve") {
            std::istringstream cs(value);
            DomainSpecFile::CurveSpec spec;
            cs >> spec.family;
            double p;
            while (cs >> p) spec.params.push_back(p);
            if (spec.family != "circle" && spec.family != "ellipse")
                throw SpecError(lineno, "unknown curve family '" + spec.family + "'");
            const std::size_t want = spec.family == "circle" ? 3 : 4;
            if (spec.params.size() != want)
                throw SpecError(lineno, spec.family + " needs " + std::to_string(want) +
                                            " parameters");
            out.curves.push_back(std::move(spec));
        } else if (key == "label") {
            out.label = value;
        } else if (key == "degree") {
            out.solver.degree = static_cast<int>(parse_real(value, lineno));
        } else if (key == "nodes") {
            out.solver.nodes = static_cast<int>(parse_real(value, lineno));
        } else if (key == "grid") {
            out.solver.grid = static_cast<int>(parse_real(value, lineno));
        } else if (key == "guard") {
            out.solver.guard = parse_real(value, lineno);
        } else if (key == "tol_scale") {
            out.solver.tol_scale = parse_real(value, lineno);
            if (!(out.solver.tol_scale > 0.0))
                throw SpecError(lineno, "tol_scale must be positive");
        }
    }
    if (!have_kind) throw SpecError(0, "missing 'kind'");

    // schema checks per kind
    auto need = [&](bool ok, const char* message) {
        if (!ok) throw SpecError(0, message);
    };
    switch (out.kind) {
        case DomainSpecFile::Kind::Disk:
            need(out.radius > 0, "disk needs radius > 0");
            break;
        case DomainSpecFile::Kind::Annulus:
            need(out.inner > 0 && out.outer > out.inner, "annulus needs 0 < inner < outer");
            break;
        case DomainSpecFile::Kind::PuncturedDisk:
            need(out.radius > 0, "punctured_disk needs radius > 0");
            need(!out.punctures.empty(), "punctured_disk needs punctures");
            break;
        case DomainSpecFile::Kind::Smooth:
            need(out.curves.size() >= 1, "smooth needs at least one curve");
            break;
        case DomainSpecFile::Kind::Reinhardt2:
        case DomainSpecFile::Kind::Unbounded:
            break;
    }
    return out;
}

DomainSpecFile parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError(0, "cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str());
}

geom::PlanarDomain DomainSpecFile::build_domain() const {
    switch (kind) {
        case Kind::Disk:
            return geom::PlanarDomain::disk(center, radius);
        case Kind::Annulus:
            return geom::PlanarDomain::annulus(center, inner, outer);
        case Kind::PuncturedDisk:
            return geom::PlanarDomain::punctured_disk(center, radius, punctures);
        case Kind::Smooth: {
            std::vector<geom::BoundaryCurve> bc;
            std::vector<Complex> holes;
            for (std::size_t i = 0; i < curves.size(); ++i) {
                const bool outermost = (i + 1 == curves.size());
                const auto o = outermost ? geom::Orientation::Outer : geom::Orientation::Hole;
                const auto& c = curves[i];
                const Complex ctr(c.params[0], c.params[1]);
                if (c.family == "circle") {
                    bc.push_back(geom::BoundaryCurve::circle(ctr, c.params[2], o));
                } else {
                    bc.push_back(geom::BoundaryCurve::ellipse(ctr, c.params[2], c.params[3], o));
                }
                if (!outermost) holes.push_back(ctr);
            }
            return geom::PlanarDomain::smooth(std::move(bc), std::move(holes));
        }
        default:
            throw std::logic_error("this spec kind does not describe a planar domain");
    }
}

std::string DomainSpecFile::kind_name() const {
    switch (kind) {
        case Kind::Disk: return "disk";
        case Kind::Annulus: return "annulus";
        case Kind::PuncturedDisk: return "punctured_disk";
        case Kind::Smooth: return "smooth";
        case Kind::Reinhardt2: return "reinhardt2";
        case Kind::Unbounded: return "unbounded";
    }
    return "?";
}

}  // namespace bkit::spec
