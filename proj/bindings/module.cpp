#include "p3b/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace p3b;

namespace {

py::object rat_to_fraction(const Rat& r)
{
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(r.numerator()), py::int_(r.denominator()));
}

py::object interval_to_py(const IntInterval& iv)
{
    if (iv.exact())
        return py::int_(iv.lo);
    return py::make_tuple(iv.lo, iv.hi);
}

py::dict report_to_dict(const ModuliReport& m)
{
    py::dict d;
    d["dim_Y"] = m.dim_Y;
    d["ed"] = m.ed;
    d["h1_end"] = interval_to_py(m.h1_end);
    d["h2_end"] = interval_to_py(m.h2_end);
    d["dim_M"] = interval_to_py(m.dim_M);
    d["smooth_at_E"] = to_string(m.smooth_at_E);
    if (m.codim_bound)
        d["codim_bound"] = *m.codim_bound;
    d["delta_assumption"] = m.delta_assumption;
    if (m.dim_equals_Y)
        d["dim_M_equals_dim_Y"] = *m.dim_equals_Y;
    d["notes"] = m.notes;
    return d;
}

py::dict verdict_to_dict(const StabilityVerdict& v)
{
    py::dict d;
    d["status"] = std::string(to_string(v.status));
    d["code"] = v.code;
    d["reason"] = v.reason;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "exact cohomology, stability and moduli-dimension calculator for bundle "
              "constructions on surfaces in projective 3-space";

    py::register_exception<arithmetic_fault>(m, "ArithmeticFault");

    py::class_<SurfaceClass>(m, "SurfaceClass")
        .def(py::init<Int>(), py::arg("k"))
        .def_readonly("k", &SurfaceClass::k)
        .def("__repr__", [](const SurfaceClass& s) {
            return "SurfaceClass(k=" + std::to_string(s.k) + ")";
        });

    py::class_<DivisorClass>(m, "DivisorClass")
        .def(py::init<Int, Int>(), py::arg("x_l"), py::arg("x_c"))
        .def_static("from_twisted", &DivisorClass::from_twisted, py::arg("a"), py::arg("b"),
                    py::arg("j"))
        .def_readonly("x_l", &DivisorClass::x_l)
        .def_readonly("x_c", &DivisorClass::x_c)
        .def("twisted", &DivisorClass::twisted)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const DivisorClass& d) {
            return "DivisorClass(" + std::to_string(d.x_l) + ", " + std::to_string(d.x_c) + ")";
        });

    py::class_<ChernData>(m, "ChernData")
        .def(py::init<Int, Int, Int, Int>(), py::arg("rank"), py::arg("c1"), py::arg("c2"),
             py::arg("c3") = 0)
        .def_readonly("rank", &ChernData::rank)
        .def_readonly("c1", &ChernData::c1)
        .def_readonly("c2", &ChernData::c2)
        .def_readonly("c3", &ChernData::c3)
        .def(py::self == py::self)
        .def("__repr__", [](const ChernData& c) {
            return "ChernData(rank=" + std::to_string(c.rank) + ", c1=" + std::to_string(c.c1) +
                   ", c2=" + std::to_string(c.c2) + ", c3=" + std::to_string(c.c3) + ")";
        });

    py::class_<CohomologyDims>(m, "CohomologyDims")
        .def_readonly("h0", &CohomologyDims::h0)
        .def_readonly("h1", &CohomologyDims::h1)
        .def_readonly("h2", &CohomologyDims::h2)
        .def_readonly("chi", &CohomologyDims::chi)
        .def("__repr__", [](const CohomologyDims& c) {
            return "CohomologyDims(h0=" + std::to_string(c.h0) + ", h1=" + std::to_string(c.h1) +
                   ", h2=" + std::to_string(c.h2) + ", chi=" + std::to_string(c.chi) + ")";
        });

    py::class_<BundleSpec>(m, "BundleSpec")
        .def_readonly("nu", &BundleSpec::nu)
        .def_readonly("c1", &BundleSpec::c1)
        .def_readonly("a", &BundleSpec::a)
        .def_readonly("b", &BundleSpec::b)
        .def_readonly("l", &BundleSpec::l)
        .def_property_readonly("k", &BundleSpec::k)
        .def_property_readonly("rank", &BundleSpec::rank);

    m.def("rank2_spec", &BundleSpec::rank2, py::arg("nu"), py::arg("c1"), py::arg("a"),
          py::arg("b"));
    m.def("rank3_line", &BundleSpec::rank3_line, py::arg("nu"), py::arg("c1"), py::arg("a"),
          py::arg("b"));
    m.def("rank3_hyperplane_spec", &BundleSpec::rank3_hyperplane, py::arg("nu"), py::arg("c1"),
          py::arg("l"));

    // Lattice and Riemann-Roch.
    m.def("pair", &pair, py::arg("d1"), py::arg("d2"), py::arg("s"));
    m.def("degree", &degree, py::arg("d"), py::arg("s"));
    m.def("canonical_class", &canonical_class, py::arg("s"));
    m.def("genus", [](const DivisorClass& d, const SurfaceClass& s) {
        return rat_to_fraction(genus(d, s));
    });
    m.def("chi_structure", &chi_structure, py::arg("s"));
    m.def("chi_divisor", &chi_divisor, py::arg("d"), py::arg("s"));
    m.def("riemann_roch_p3", [](const ChernData& c) { return rat_to_fraction(riemann_roch_p3(c)); });
    m.def("twist_chern", &twist_chern, py::arg("c"), py::arg("t"));
    m.def("count_binom", &count_binom, py::arg("n"), py::arg("r"));
    m.def("poly_binom", &poly_binom, py::arg("n"), py::arg("r"));

    // Cohomology engine.
    m.def("h0_surface_twist", &h0_surface_twist, py::arg("j"), py::arg("s"));
    m.def("h0_curve_twist", &h0_curve_twist, py::arg("j"), py::arg("s"));
    m.def("h0_master", &h0_master, py::arg("a"), py::arg("b"), py::arg("s"));
    m.def("cohomology", &cohomology, py::arg("d"), py::arg("s"));
    m.def("vanish_h0_neg_aL", &vanish_h0_neg_aL, py::arg("a"), py::arg("j"), py::arg("s"));
    m.def("vanish_h0_neg_bC", &vanish_h0_neg_bC, py::arg("b"), py::arg("j"), py::arg("s"));
    m.def("vanish_h1_neg_aL", &vanish_h1_neg_aL, py::arg("a"), py::arg("j"), py::arg("s"));
    m.def("vanish_h1_neg_bC", &vanish_h1_neg_bC, py::arg("b"), py::arg("j"), py::arg("s"));
    m.def("h0_bC_twist", &h0_bC_twist, py::arg("b"), py::arg("j"), py::arg("s"));
    m.def("direct_image_degrees", &direct_image_degrees, py::arg("a"), py::arg("b"), py::arg("s"));

    // Bundle constructions.
    m.def("classify_rank2", [](const BundleSpec& s) { return verdict_to_dict(classify_rank2(s)); });
    m.def("rank2_semistable", &rank2_semistable);
    m.def("rank2_chern", &rank2_chern);
    m.def("rank2_chern_grr", &rank2_chern_grr);
    m.def("check_rank2_c3", &check_rank2_c3);
    m.def("rank2_thresholds", [](const BundleSpec& s) {
        Rank2Thresholds t = rank2_thresholds(s);
        py::dict d;
        d["h3_zero_from"] = t.h3_zero_from;
        d["h2_zero_above"] = t.h2_zero_above;
        d["h1_zero_above"] = t.h1_zero_above;
        d["globally_generated_from"] = t.globally_generated_from;
        d["jump_size"] = t.jump_size;
        return d;
    });
    m.def("classify_rank3", [](const BundleSpec& s) { return verdict_to_dict(classify_rank3(s)); });
    m.def("rank3_chern", &rank3_chern);
    m.def("rank3_chern_grr", &rank3_chern_grr);
    m.def("rank3_hyperplane", [](const BundleSpec& s) {
        auto [v, c] = rank3_hyperplane(s);
        return py::make_tuple(verdict_to_dict(v), c);
    });
    m.def("rank3_thresholds", [](const BundleSpec& s) {
        Rank3Thresholds t = rank3_thresholds(s);
        py::dict d;
        d["h3_zero_from"] = t.h3_zero_from;
        d["h2_validity_floor"] = t.h2_validity_floor;
        d["h2_zero_above"] = t.h2_zero_above;
        py::list cases;
        for (const auto& c : t.h1_cases) {
            py::dict e;
            e["clause"] = c.clause;
            e["ambiguous"] = c.ambiguous;
            cases.append(e);
        }
        d["h1_cases"] = cases;
        d["globally_generated_from"] = t.globally_generated_from;
        return d;
    });
    m.def("degeneracy_curve", [](const BundleSpec& s) {
        DegeneracyCurve y = degeneracy_curve(s);
        py::dict d;
        d["degree"] = y.degree;
        d["self_intersection"] = y.self_intersection;
        d["genus"] = rat_to_fraction(y.genus);
        return d;
    });

    // Moduli dimensions.
    m.def("rank2_dimY", &rank2_dimY, py::arg("k"), py::arg("b"));
    m.def("rank2_ed", &rank2_ed, py::arg("c1"), py::arg("c2"));
    m.def("rank2_exact_dim", [](Int k, Int b) { return report_to_dict(rank2_exact_dim(k, b)); });
    m.def("rank2_dim_bounds", [](Int k, Int b) { return report_to_dict(rank2_dim_bounds(k, b)); });
    m.def("rank3I_report", [](Int k, Int nu, Int c1, Int l) {
        return report_to_dict(rank3I_report(k, nu, c1, l));
    });
    m.def("rank3_ed", &rank3_ed, py::arg("c1"), py::arg("c2"));
    m.def("rank3II_dimY", &rank3II_dimY, py::arg("k"), py::arg("a"), py::arg("b"));
    m.def("rank3II_h1_klarge", [](Int k, Int nu, Int c1, Int a, Int b) {
        return report_to_dict(rank3II_h1_klarge(k, nu, c1, a, b));
    });
    m.def("rank3II_report_k2", [](Int a, Int b) { return report_to_dict(rank3II_report_k2(a, b)); });
    m.def("rank3II_report_k3", [](Int a, Int b) { return report_to_dict(rank3II_report_k3(a, b)); });

    // Verification suites.
    m.def("verify_suite_names", &verify_suite_names);
    m.def(
        "run_verify",
        [](const std::vector<std::string>& only) {
            VerifyReport r = run_verify(only);
            py::object loads = py::module_::import("json").attr("loads");
            return loads(verify_report_to_json(r).dump());
        },
        py::arg("only") = std::vector<std::string>{});

    m.attr("__version__") = "0.1.0";
}
