#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcfuzz/fixtures.hpp"
#include "lcfuzz/fuzzymap.hpp"
#include "lcfuzz/json_io.hpp"
#include "lcfuzz/topology.hpp"

namespace py = pybind11;
using namespace lcfuzz;

namespace {

// Reports cross the boundary as JSON strings; the package parses them into
// plain dicts so Python callers never see the C++ report types.
std::string report_str(const CheckReport& r, const CompactDomain* dom = nullptr) {
    return to_json(r, dom).dump();
}

}  // namespace

PYBIND11_MODULE(_lcfuzz, m) {
    m.doc() = "level-continuous fuzzy analysis core";

    py::register_exception<domain_error>(m, "DomainError");
    py::register_exception<schema_error>(m, "SchemaError");

    py::class_<PLJFunction>(m, "PLJFunction")
        .def_static("constant", &PLJFunction::constant)
        .def_static("line", &PLJFunction::line)
        .def_static("from_json",
                    [](const std::string& s) { return plj_from_json(json::parse(s)); })
        .def("eval", &PLJFunction::eval)
        .def("right_limit", &PLJFunction::right_limit)
        .def("is_constant", &PLJFunction::is_constant)
        .def("to_json", [](const PLJFunction& f) { return to_json(f).dump(); })
        .def("__eq__", [](const PLJFunction& a, const PLJFunction& b) { return a == b; });
    m.def("sup_distance", [](const PLJFunction& a, const PLJFunction& b) {
        return sup_distance(a, b);
    });

    py::class_<FuzzyNumber>(m, "FuzzyNumber")
        .def_static("crisp", &FuzzyNumber::crisp)
        .def_static("triangular", &FuzzyNumber::triangular)
        .def_static("trapezoidal", &FuzzyNumber::trapezoidal)
        .def_static("from_json",
                    [](const std::string& s) { return fuzzy_from_json(json::parse(s)); })
        .def("level_set",
             [](const FuzzyNumber& u, double lam) {
                 const Interval iv = u.level_set(lam);
                 return std::make_pair(iv.lo, iv.hi);
             })
        .def("membership", &FuzzyNumber::membership)
        .def("is_continuous", &FuzzyNumber::is_continuous)
        .def("to_json", [](const FuzzyNumber& u) { return to_json(u).dump(); })
        .def("__eq__", [](const FuzzyNumber& a, const FuzzyNumber& b) { return a == b; });
    m.def("d_infinity", [](const FuzzyNumber& u, const FuzzyNumber& v) {
        return d_infinity(u, v);
    });
    m.def("d_hausdorff_at", &d_hausdorff_at);
    m.def("add", [](const FuzzyNumber& u, const FuzzyNumber& v) { return add(u, v); });
    m.def("scale", [](double c, const FuzzyNumber& u) { return scale(c, u); });

    py::class_<CompactDomain>(m, "CompactDomain")
        .def_static("uniform_grid", &CompactDomain::uniform_grid)
        .def_static("reciprocal_sequence", &CompactDomain::reciprocal_sequence)
        .def("size", &CompactDomain::size)
        .def("coordinate", &CompactDomain::coordinate)
        .def("label", &CompactDomain::label)
        .def("index_of_label", &CompactDomain::index_of_label)
        .def("__eq__",
             [](const CompactDomain& a, const CompactDomain& b) { return a == b; });

    py::class_<FuzzyMap>(m, "FuzzyMap")
        .def(py::init<const CompactDomain&, std::vector<FuzzyNumber>>())
        .def_static("constant", &FuzzyMap::constant)
        .def_static("from_json",
                    [](const std::string& s) { return fuzzymap_from_json(json::parse(s)); })
        .def("domain", &FuzzyMap::domain)
        .def("value", &FuzzyMap::value)
        .def("points", &FuzzyMap::points)
        .def("to_json", [](const FuzzyMap& f) { return to_json(f).dump(); });
    m.def("metric_D", &metric_D);
    m.def("isometry_residual", &isometry_residual);
    m.def("cone_combine", &cone_combine);

    m.def("classify_continuity_json",
          [](const FuzzyMap& f, std::size_t i, const std::string& mode, double tol) {
              ClassifyOptions opt;
              opt.tol = tol;
              const CheckReport r = classify_continuity(
                  f, i, mode == "dinf" ? ContinuityMode::DInf : ContinuityMode::Level, opt);
              return report_str(r, &f.domain());
          },
          py::arg("map"), py::arg("point"), py::arg("mode") = "level",
          py::arg("tol") = 1e-6);

    m.def("compare_convergence_json",
          [](const std::vector<FuzzyNumber>& seq, const FuzzyNumber& target, double tol) {
              ConvergenceOptions opt;
              opt.tol = tol;
              const ComparedConvergence c =
                  compare_convergence(seq, target, LambdaSet::uniform(101), opt);
              json j{{"level", to_json(c.level)}, {"dinf", to_json(c.dinf)}};
              return j.dump();
          },
          py::arg("seq"), py::arg("target"), py::arg("tol") = 1e-6);

    auto fx = m.def_submodule("fixtures");
    fx.def("jump_fuzzy_number", &fixtures::jump_fuzzy_number);
    fx.def("example_level_not_dinf", [](std::size_t n) {
        return fixtures::example_level_not_dinf(CompactDomain::reciprocal_sequence(n));
    });
    fx.def("example_constant_noncontinuous", [](std::size_t n) {
        return fixtures::example_constant_noncontinuous(
            CompactDomain::reciprocal_sequence(n));
    });
}
