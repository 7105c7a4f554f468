// Python bindings for the main operations: expression jets, surface patches,
// pointwise invariants/classification, grid evaluation and the verification
// suites.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wintgen/expr.hpp"
#include "wintgen/invariants.hpp"
#include "wintgen/report.hpp"
#include "wintgen/semiparallel.hpp"
#include "wintgen/verify.hpp"
#include "wintgen/vranceanu.hpp"

namespace py = pybind11;
using namespace wintgen;

namespace {

py::dict report_to_dict(const PointReport& r) {
    py::dict d;
    d["u"] = r.u;
    d["v"] = r.v;
    d["K"] = r.K;
    d["KN"] = r.KN;
    d["KN_signed"] = r.KN_signed ? py::object(py::float_(*r.KN_signed)) : py::object(py::none());
    d["H2"] = r.H2;
    d["defect"] = r.defect;
    d["circular_residual"] = r.circular_residual;
    d["semiparallel_norm"] = r.semiparallel_norm;
    d["kind"] = kind_name(r.cls.kind);
    d["flags"] = active_flag_names(r.cls.flags);
    return d;
}

py::dict suite_to_dict(const SuiteResult& s) {
    py::dict d;
    d["suite"] = s.suite;
    d["seed"] = s.seed;
    d["pass"] = s.pass;
    py::list checks;
    for (const CheckResult& c : s.checks) {
        py::dict cd;
        cd["name"] = c.name;
        cd["count"] = c.count;
        cd["worst"] = c.worst;
        cd["tol"] = c.tol;
        cd["pass"] = c.pass;
        checks.append(cd);
    }
    d["checks"] = checks;
    return d;
}

SurfacePatch family_patch(const std::string& name, double c1, double c2) {
    const ProfileFamily fam = make_family(name, c1, c2);
    SurfacePatch p = vranceanu_patch(fam.r, Domain{0.0, 2.0 * M_PI, fam.v_min, fam.v_max});
    p.label = name;
    return p;
}

}  // namespace

PYBIND11_MODULE(wintgenpy, m) {
    m.doc() = "curvature invariants, Wintgen ideality and semiparallelity for "
              "parametric surfaces in Euclidean n-space";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

    py::class_<ScalarJet2>(m, "ScalarJet2")
        .def_readonly("value", &ScalarJet2::v)
        .def_readonly("du", &ScalarJet2::du)
        .def_readonly("dv", &ScalarJet2::dv)
        .def_readonly("duu", &ScalarJet2::duu)
        .def_readonly("duv", &ScalarJet2::duv)
        .def_readonly("dvv", &ScalarJet2::dvv)
        .def("__repr__", [](const ScalarJet2& j) {
            return "ScalarJet2(value=" + format_g17(j.v) + ", du=" + format_g17(j.du) +
                   ", dv=" + format_g17(j.dv) + ")";
        });

    py::class_<Expression>(m, "Expression")
        .def("eval", &Expression::eval, py::arg("u"), py::arg("v"))
        .def("eval_jet", &Expression::eval_jet, py::arg("u"), py::arg("v"))
        .def("__str__", &Expression::to_string);

    m.def("parse", &parse_expression, py::arg("text"),
          "Parse a scalar expression of u and v.");

    py::class_<SurfacePatch>(m, "SurfacePatch")
        .def_readonly("label", &SurfacePatch::label)
        .def_readonly("ambient_dim", &SurfacePatch::ambient_dim)
        .def_property_readonly("domain",
                               [](const SurfacePatch& p) {
                                   return py::make_tuple(p.domain.u0, p.domain.u1, p.domain.v0,
                                                         p.domain.v1);
                               })
        .def("to_json", &patch_to_json);

    m.def("load_patch", &load_patch_file, py::arg("path"));
    m.def("patch_from_json", &load_patch_json, py::arg("text"));
    m.def("family_patch", &family_patch, py::arg("name"), py::arg("c1"), py::arg("c2"),
          "Rotation-surface patch for first-kind / second-kind / exponential families.");
    m.def("unit_sphere", &make_unit_sphere_patch, py::arg("ambient_dim") = 3);
    m.def("plane", &make_plane_patch, py::arg("ambient_dim") = 3);
    m.def(
        "vranceanu_patch",
        [](const std::string& r, double u0, double u1, double v0, double v1) {
            return vranceanu_patch(parse_expression(r), Domain{u0, u1, v0, v1});
        },
        py::arg("r"), py::arg("u0"), py::arg("u1"), py::arg("v0"), py::arg("v1"));

    m.def(
        "evaluate_point",
        [](const SurfacePatch& patch, double u, double v, double tol) {
            return report_to_dict(evaluate_point(patch, u, v, tol));
        },
        py::arg("patch"), py::arg("u"), py::arg("v"), py::arg("tol") = kDefaultTol,
        "All pointwise invariants and classification flags at (u, v).");

    m.def(
        "evaluate_grid",
        [](const SurfacePatch& patch, int nu, int nv, double tol, int workers) {
            RunConfig cfg;
            cfg.family = "inline";
            cfg.nu = nu;
            cfg.nv = nv;
            cfg.tol = tol;
            cfg.workers = workers;
            py::list out;
            for (const PointReport& r : evaluate_grid(patch, cfg)) out.append(report_to_dict(r));
            return out;
        },
        py::arg("patch"), py::arg("nu"), py::arg("nv"), py::arg("tol") = kDefaultTol,
        py::arg("workers") = 1);

    m.def(
        "profile_functions",
        [](const std::string& r, double v) {
            const ProfilePoint p = profile_functions(VranceanuProfile{parse_expression(r)}, v);
            py::dict d;
            d["r"] = p.r;
            d["r1"] = p.r1;
            d["r2"] = p.r2;
            d["A"] = p.A;
            d["B"] = p.B;
            d["C"] = p.C;
            d["k"] = p.k;
            d["a"] = p.a;
            d["b"] = p.b;
            return d;
        },
        py::arg("r"), py::arg("v"));

    m.def(
        "closed_form_invariants",
        [](const std::string& r, double v) {
            const ClosedFormInvariants inv =
                closed_form_invariants(VranceanuProfile{parse_expression(r)}, v);
            py::dict d;
            d["K"] = inv.K;
            d["KN_signed"] = inv.KN_signed;
            d["H2"] = inv.H2;
            return d;
        },
        py::arg("r"), py::arg("v"));

    m.def(
        "ode_residual_first",
        [](const std::string& r, double v) {
            return ode_residual_first(VranceanuProfile{parse_expression(r)}, v);
        },
        py::arg("r"), py::arg("v"));
    m.def(
        "ode_residual_second",
        [](const std::string& r, double v) {
            return ode_residual_second(VranceanuProfile{parse_expression(r)}, v);
        },
        py::arg("r"), py::arg("v"));

    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed, long count) {
            py::list out;
            for (const SuiteResult& s : run_suites(name, seed, count))
                out.append(suite_to_dict(s));
            return out;
        },
        py::arg("name"), py::arg("seed") = 0, py::arg("count") = 0,
        "Run a verification suite: lemma41, ddvv-fuzz, vranceanu, gauss-eq, canonical, "
        "witness or all.");
}
