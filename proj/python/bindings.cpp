#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bkit/bergman.hpp"
#include "bkit/geometry.hpp"
#include "bkit/potential.hpp"
#include "bkit/quadrature.hpp"
#include "bkit/reinhardt.hpp"
#include "bkit/rigidity.hpp"
#include "bkit/szego.hpp"

namespace py = pybind11;
using namespace bkit;

namespace {

std::string containment_name(geom::Containment c) {
    switch (c) {
        case geom::Containment::Inside: return "inside";
        case geom::Containment::Outside: return "outside";
        case geom::Containment::Boundary: return "boundary";
    }
    return "?";
}

py::dict verdict_dict(const rigidity::ClassificationVerdict& v) {
    py::dict d;
    d["description"] = v.describe();
    d["min_margin"] = v.evidence.min_margin;
    d["constancy"] = v.evidence.constancy;
    if (const auto* dm = std::get_if<rigidity::DiskMinusPolar>(&v.verdict)) {
        d["kind"] = "disk_minus_polar";
        d["center"] = dm->center;
        d["radius"] = dm->radius;
    } else if (const auto* nm = std::get_if<rigidity::NotMinimal>(&v.verdict)) {
        d["kind"] = "not_minimal";
        d["argmin"] = nm->argmin;
    } else if (std::get_if<rigidity::InfiniteVolumeCase>(&v.verdict)) {
        d["kind"] = "infinite_volume";
    } else {
        d["kind"] = "inconsistent_evidence";
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bergman and Szego kernels, Green's functions and minimal-domain "
              "classification on planar domains";

    py::class_<geom::PlanarDomain>(m, "PlanarDomain")
        .def_static("disk", &geom::PlanarDomain::disk, py::arg("center"), py::arg("radius"))
        .def_static("annulus", &geom::PlanarDomain::annulus, py::arg("center"),
                    py::arg("inner"), py::arg("outer"))
        .def_static("punctured_disk", &geom::PlanarDomain::punctured_disk,
                    py::arg("center"), py::arg("radius"), py::arg("punctures"))
        .def_property_readonly("area", &geom::PlanarDomain::area)
        .def_property_readonly("connectivity", &geom::PlanarDomain::connectivity)
        .def_property_readonly("inradius", &geom::PlanarDomain::inradius)
        .def("contains",
             [](const geom::PlanarDomain& d, Complex z) {
                 return containment_name(d.contains(z));
             })
        .def("distance_to_boundary", &geom::PlanarDomain::distance_to_boundary)
        .def("unit_tangent",
             [](const geom::PlanarDomain& d, int component, double t) {
                 return geom::unit_tangent(d, component, t);
             })
        .def("__repr__", [](const geom::PlanarDomain& d) {
            return "<PlanarDomain " + d.describe() + ">";
        });

    py::class_<bergman::OrthonormalBasis>(m, "OrthonormalBasis")
        .def_property_readonly("size", &bergman::OrthonormalBasis::size)
        .def_property_readonly("gram_condition", &bergman::OrthonormalBasis::gram_condition)
        .def_property_readonly("orthonormality_defect",
                               &bergman::OrthonormalBasis::orthonormality_defect)
        .def("kernel", &bergman::OrthonormalBasis::kernel, py::arg("z"), py::arg("w"))
        .def("minimality_margin", &bergman::OrthonormalBasis::minimality_margin)
        .def("kernel_mean", &bergman::OrthonormalBasis::kernel_mean);

    m.def(
        "build_basis",
        [](const geom::PlanarDomain& domain, int degree) {
            return bergman::OrthonormalBasis::build(
                domain, bergman::BasisDictionary::standard(domain, degree));
        },
        py::arg("domain"), py::arg("degree") = 30);
    m.def("transformation_residual", &bergman::transformation_residual, py::arg("c"),
          py::arg("degree") = 20);

    py::class_<szego::SzegoSolution>(m, "SzegoSolution")
        .def_property_readonly("base", &szego::SzegoSolution::base)
        .def("value", &szego::SzegoSolution::value)
        .def("at_base", &szego::SzegoSolution::at_base);

    m.def(
        "szego_kernel",
        [](const geom::PlanarDomain& domain, Complex a, int nodes) {
            return szego::szego_kernel(domain, a, nodes);
        },
        py::arg("domain"), py::arg("a"), py::arg("nodes") = 512);
    m.def(
        "szego_zero_count",
        [](const geom::PlanarDomain& domain, Complex a, int nodes, int contour_samples) {
            return szego::szego_zero_count(domain, a, nodes, contour_samples);
        },
        py::arg("domain"), py::arg("a"), py::arg("nodes") = 512,
        py::arg("contour_samples") = 2048);
    m.def("f_field_mean", &szego::f_field_mean, py::arg("domain"), py::arg("hole"));
    m.def(
        "bergman_szego_fit",
        [](const geom::PlanarDomain& domain, Complex a,
           const bergman::OrthonormalBasis& basis, int nodes) {
            const auto fit = szego::bergman_szego_fit(domain, a, basis, nodes);
            py::dict d;
            d["lambdas"] = fit.lambdas;
            d["fit_residual"] = fit.fit_residual;
            d["holdout_residual"] = fit.holdout_residual;
            return d;
        },
        py::arg("domain"), py::arg("a"), py::arg("basis"), py::arg("nodes") = 512);

    m.def("green", &potential::green, py::arg("domain"), py::arg("z"), py::arg("w"));
    m.def(
        "robin", [](const geom::PlanarDomain& d, Complex z0) { return potential::robin(d, z0).lambda; },
        py::arg("domain"), py::arg("z0"));
    m.def(
        "robin_extrapolated",
        [](const geom::PlanarDomain& d, Complex z0) {
            return potential::robin_extrapolated(d, z0).lambda;
        },
        py::arg("domain"), py::arg("z0"));
    m.def("suita_margin", &potential::suita_margin, py::arg("domain"), py::arg("basis"),
          py::arg("z"));
    m.def(
        "sublevel_profile",
        [](const geom::PlanarDomain& domain, Complex z0, const std::vector<double>& taus,
           int rays) {
            const auto profile = potential::sublevel_profile(domain, z0, taus, rays);
            py::list out;
            for (const auto& row : profile.rows) {
                py::dict d;
                d["tau"] = row.tau;
                d["volume"] = row.volume;
                d["ratio"] = row.ratio;
                d["dropped"] = row.dropped;
                out.append(d);
            }
            return out;
        },
        py::arg("domain"), py::arg("z0"), py::arg("taus"), py::arg("rays") = 720);

    m.def(
        "classify",
        [](const geom::PlanarDomain& domain, int degree, int grid) {
            return verdict_dict(rigidity::classify(domain, degree, grid));
        },
        py::arg("domain"), py::arg("degree") = 30, py::arg("grid") = 51);

    auto rh = m.def_submodule("reinhardt", "the model domain |z1|^4+|z1|^2+|z2|^2 < 1");
    rh.def("volume", &reinhardt::volume);
    rh.def("volume_closed_form", &reinhardt::volume_closed_form);
    rh.def("monomial_norm", &reinhardt::monomial_norm, py::arg("p"), py::arg("q"));
    rh.def("kernel_origin", &reinhardt::kernel_origin);
    rh.def("hessian_min_eig", &reinhardt::hessian_min_eig, py::arg("x"));
    rh.def("obstruction_roots", []() {
        const auto r = reinhardt::obstruction_roots();
        return py::make_tuple(r.sphere_image_root, r.axis_image_root, r.difference);
    });
    rh.def(
        "circle_constraint",
        [](Complex a1, Complex a3, double theta) {
            const auto c = reinhardt::circle_constraint_residual(a1, a3, theta);
            return py::make_tuple(c.residual, c.average, c.oscillation);
        },
        py::arg("a1"), py::arg("a3"), py::arg("theta") = 0.0);

    m.def("area_moment",
          [](const geom::PlanarDomain& d, int j, int k) { return quad::area_moment(d, j, k); });
    m.def("laurent_norm", &quad::laurent_norm, py::arg("annulus"), py::arg("k"));
    m.def("reinhardt_radial_integral", &quad::reinhardt_radial_integral, py::arg("p"),
          py::arg("q"));
}
