#include "shufalg/expr.hpp"
#include "shufalg/rtt.hpp"
#include "shufalg/specmaps.hpp"
#include "shufalg/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace shufalg;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_py(const py::object& o) {
    if (py::isinstance<py::str>(o))
        return nlohmann::json::parse(o.cast<std::string>());
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Flavor flavor_of(const std::string& f) {
    if (f == "trig")
        return Flavor::Trig;
    if (f == "rational")
        return Flavor::Rational;
    throw py::value_error("flavor must be 'trig' or 'rational'");
}

ShuffleContext make_context(const std::string& type, int n, const std::string& flavor) {
    return {RootSystem::parse(type, n), flavor_of(flavor)};
}

py::tuple verdict(const Verdict& v) { return py::make_tuple(v.ok, v.detail); }

}  // namespace

PYBIND11_MODULE(_shufalg, m) {
    m.doc() = "exact shuffle algebra computations";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<ShuffleContext>(m, "Context")
        .def(py::init(&make_context), py::arg("type") = "G2", py::arg("n") = 0, py::arg("flavor") = "trig")
        .def_property_readonly("type", [](const ShuffleContext& c) { return c.rs().name(); })
        .def_property_readonly("rank", &ShuffleContext::rank)
        .def_property_readonly("flavor", [](const ShuffleContext& c) { return c.rational() ? "rational" : "trig"; })
        .def("__repr__", [](const ShuffleContext& c) {
            return "Context(" + c.rs().name() + ", " + (c.rational() ? "rational" : "trig") + ")";
        });

    py::class_<FreeElement>(m, "FreeElement")
        .def("psi", [](const FreeElement& e) { return psi(e); })
        .def("to_json", [](const FreeElement& e) { return to_py(e.to_json()); })
        .def_static("from_json", [](const py::object& o) { return FreeElement::from_json(from_py(o)); })
        .def("is_zero", &FreeElement::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &FreeElement::str)
        .def("__repr__", [](const FreeElement& e) { return "FreeElement(" + e.str() + ")"; });

    py::class_<ShuffleElement>(m, "ShuffleElement")
        .def_property_readonly("grading", &ShuffleElement::grading)
        .def_property_readonly("numerator",
                               [](const ShuffleElement& F) { return F.numerator().str(F.ctx().coef_var()); })
        .def("to_json", [](const ShuffleElement& F) { return to_py(F.to_json()); })
        .def_static("from_json", [](const py::object& o) { return ShuffleElement::from_json(from_py(o)); })
        .def("is_zero", &ShuffleElement::is_zero)
        .def("__mul__", [](const ShuffleElement& a, const ShuffleElement& b) { return shuffle_product(a, b); })
        .def("__pow__", [](const ShuffleElement& a, int k) { return shuffle_power(a, k); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self == py::self)
        .def("__str__", &ShuffleElement::str)
        .def("__repr__", [](const ShuffleElement& F) { return "ShuffleElement(" + F.str() + ")"; });

    m.def("parse", &parse_expression, py::arg("ctx"), py::arg("expr"),
          "parse e[i,r], x[i,r], comm(a,b;u), +, -, *, /, ^, v, hbar into the free algebra");

    m.def("roots", [](const std::string& type, int n) {
        RootSystem rs = RootSystem::parse(type, n);
        std::vector<std::string> out;
        for (int i = 0; i < rs.num_roots(); ++i)
            out.push_back(rs.root_name(i));
        return out;
    }, py::arg("type"), py::arg("n") = 0);

    m.def("kostant_partitions", [](const std::string& type, const Grading& k, int n) {
        RootSystem rs = RootSystem::parse(type, n);
        if (int(k.size()) != rs.rank())
            throw py::value_error("grading has wrong length");
        py::list out;
        for (auto& d : kostant_partitions(rs, k))
            out.append(to_py(nlohmann::json::parse(kp_str(rs, d))));
        return out;
    }, py::arg("type"), py::arg("grading"), py::arg("n") = 0);

    m.def("specialize", [](const py::object& partition, const ShuffleElement& F) {
        const ShuffleContext& ctx = F.ctx();
        KostantPartition d = parse_kp(ctx.rs(), from_py(partition).dump());
        return to_py(phi(d, F).to_json(ctx));
    }, py::arg("partition"), py::arg("element"));

    m.def("in_bold_S", [](const ShuffleElement& F) { return verdict(in_bold_S(F)); });
    m.def("in_cal_S", [](const ShuffleElement& F) { return verdict(in_cal_S(F)); });
    m.def("is_good", [](const ShuffleElement& F) { return verdict(is_good(F)); });
    m.def("is_integral_rational", [](const ShuffleElement& F) { return verdict(is_integral_rational(F)); });

    m.def("suite_names", &suite_names);

    m.def("verify", [](const std::string& suite, const std::string& type, int n, const std::string& flavor, int lo,
                       int hi, uint64_t seed, int samples, int max_vars) {
        SuiteConfig cfg;
        cfg.rs = RootSystem::parse(type, n);
        cfg.flavor = flavor_of(flavor);
        cfg.lo = lo;
        cfg.hi = hi;
        cfg.seed = seed;
        cfg.samples = samples;
        cfg.max_vars = max_vars;
        nlohmann::json j;
        {
            py::gil_scoped_release release;
            j = suite == "all" ? aggregate_json(run_all(cfg)) : run_suite(suite, cfg).to_json();
        }
        return to_py(j);
    }, py::arg("suite"), py::arg("type") = "G2", py::arg("n") = 0, py::arg("flavor") = "trig", py::arg("lo") = 0,
       py::arg("hi") = 1, py::arg("seed") = 42, py::arg("samples") = 0, py::arg("max_vars") = 5);

    m.def("check_ybe", [](int n, int trials, uint64_t seed) {
        nlohmann::json j;
        {
            py::gil_scoped_release release;
            j = check_ybe(RMatrixContext(n), trials, seed).to_json();
        }
        return to_py(j);
    }, py::arg("n") = 2, py::arg("trials") = 5, py::arg("seed") = 42);
}
