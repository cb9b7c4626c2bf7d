#include "umac/harness.hpp"
#include "umac/mass_tables.hpp"
#include "umac/measure.hpp"
#include "umac/polynomials.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace umac;

namespace {

UnitarySpec make_spec(const std::string& type, int rank, const std::string& pair, const std::string& g_short,
                      const std::string& g_long, int c, bool allow_degenerate) {
  RunConfig cfg;
  cfg.type = type;
  cfg.rank = rank;
  cfg.pair = parse_dual_flag(pair);
  cfg.g_short = parse_rational(g_short);
  cfg.g_long = parse_rational(g_long.empty() ? g_short : g_long);
  cfg.c = c;
  cfg.allow_degenerate = allow_degenerate;
  return cfg.spec();
}

py::dict basis_dict(const MacdonaldBasis& b) {
  py::dict d;
  d["primal"] = b.primal.weights();
  d["hat"] = b.hat.weights();
  d["coefficients"] = b.coefficients;
  d["values"] = b.values;
  d["condition"] = b.condition;
  d["min_gap"] = b.min_gap;
  return d;
}

}  // namespace

PYBIND11_MODULE(_umac, m) {
  m.doc() = "Unitary Macdonald polynomials on truncated cones";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<RootSystem>(m, "RootSystem")
      .def(py::init([](const std::string& label) { return RootSystem::build(label); }))
      .def_property_readonly("label", &RootSystem::label)
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("num_positive_roots", &RootSystem::num_positive_roots)
      .def_property_readonly("coxeter_number", &RootSystem::coxeter_number)
      .def_property_readonly("exponents", &RootSystem::exponents)
      .def_property_readonly("index", &RootSystem::index)
      .def_property_readonly("weyl_order", &RootSystem::weyl_order)
      .def("weyl_orbit", [](const RootSystem& R, const Labels& lam) { return *R.weyl_orbit(lam); })
      .def("small_weights", &RootSystem::small_weights)
      .def("classify", [](const RootSystem& R, const Labels& w) { return std::string(to_string(R.classify(w))); })
      .def("dual", &RootSystem::dual);

  py::class_<UnitarySpec>(m, "Spec")
      .def(py::init(&make_spec), py::arg("type"), py::arg("rank"), py::arg("pair") = "self",
           py::arg("g_short") = "7/10", py::arg("g_long") = "", py::arg("c") = 2,
           py::arg("allow_degenerate") = false)
      .def_property_readonly("c", &UnitarySpec::c)
      .def_property_readonly("h_g", [](const UnitarySpec& s) { return to_string(s.h_g()); })
      .def_property_readonly("period", [](const UnitarySpec& s) { return to_string(s.period()); })
      .def_property_readonly("kappa", &UnitarySpec::kappa)
      .def_property_readonly("regular", &UnitarySpec::is_regular)
      .def_property_readonly("truncation_defect", &UnitarySpec::truncation_defect)
      .def("swapped", &UnitarySpec::swapped)
      .def("cone", [](const UnitarySpec& s, bool hat) {
        return TruncatedCone::build(s, hat ? Side::hat : Side::primal).weights();
      }, py::arg("hat") = false)
      .def("delta", [](const UnitarySpec& s, const Labels& lam) { return delta_weight<double>(s, lam); })
      .def("table_nc", [](const UnitarySpec& s) { return table_Nc<double>(s); })
      .def("principal_specialization",
           [](const UnitarySpec& s, const Labels& lam) { return principal_specialization<double>(s, lam); });

  m.def("construct", [](const UnitarySpec& s) { return basis_dict(construct_macdonald(s)); },
        "grid-eigenproblem construction");
  m.def("gram_schmidt", [](const UnitarySpec& s) { return basis_dict(gram_schmidt_macdonald(s)); },
        "projection-formula construction");
  m.def("run_json", [](const std::string& config) {
    return run_verification(RunConfig::from_json(nlohmann::json::parse(config))).dump();
  });
}
