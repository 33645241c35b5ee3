#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "augcheck/io.hpp"
#include "augcheck/linalg.hpp"
#include "augcheck/zoo.hpp"

namespace py = pybind11;
using namespace augcheck;

namespace {

py::object json_to_py(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

Limits limits_with(size_t max_elements) {
  Limits limits;
  if (max_elements > 0) limits.max_elements = max_elements;
  return limits;
}

MonoidData monoid_from(size_t degree, const std::vector<std::vector<uint32_t>>& generators,
                       size_t max_elements) {
  std::vector<Transformation> gens;
  gens.reserve(generators.size());
  for (const auto& img : generators) gens.push_back(Transformation(img));
  return closure(degree, std::move(gens), limits_with(max_elements));
}

py::dict construct(const py::object& structure, size_t max_elements) {
  std::string text =
      py::isinstance<py::str>(structure)
          ? structure.cast<std::string>()
          : py::module_::import("json").attr("dumps")(structure).cast<std::string>();
  ConstructResult built = construct_from_structure(text, limits_with(max_elements));
  MonoidFile file = MonoidFile::from_monoid(built.monoid, built.partial_with_sink);
  py::dict out;
  out["kind"] = built.kind;
  out["degree"] = file.degree;
  out["generators"] = file.generators;
  out["partial_with_sink"] = file.partial_with_sink;
  return out;
}

py::object check(size_t degree, const std::vector<std::vector<uint32_t>>& generators,
                 const std::string& field_spec, bool oracle, size_t max_elements) {
  FieldTag field = FieldTag::parse(field_spec);
  MonoidData m = monoid_from(degree, generators, max_elements);
  GreenData g = green(m);
  CheckReport rep = decide(m, g, field);
  if (oracle && field.computable()) {
    rep.oracle = oracle_simple(m, field);
    rep.agreement = rep.oracle->verdict == rep.final;
  }
  return json_to_py(report_to_json(m, rep));
}

py::object green_summary(size_t degree, const std::vector<std::vector<uint32_t>>& generators,
                         size_t max_elements) {
  MonoidData m = monoid_from(degree, generators, max_elements);
  GreenData g = green(m);
  return json_to_py(green_report_json(m, g));
}

size_t matrix_rank(const std::vector<std::vector<long>>& rows, const std::string& field_spec) {
  FieldTag field = FieldTag::parse(field_spec).delegate_for_rank();
  return rank(Matrix::from_int_rows(field, rows));
}

}  // namespace

PYBIND11_MODULE(_augcheck, m) {
  m.doc() = "simplicity checker for augmentation modules of transformation monoids";

  py::register_exception<Error>(m, "AugcheckError");

  m.def("construct", &construct, py::arg("structure"), py::arg("max_elements") = 0,
        "Build a monoid from a structure description (dict or JSON string); returns the "
        "degree and the full element list as generator image arrays.");
  m.def("check", &check, py::arg("degree"), py::arg("generators"), py::arg("field") = "q",
        py::arg("oracle") = false, py::arg("max_elements") = 0,
        "Decide simplicity of the augmentation module; returns the report as a dict.");
  m.def("green_summary", &green_summary, py::arg("degree"), py::arg("generators"),
        py::arg("max_elements") = 0, "Green's relation summary of the generated monoid.");
  m.def("matrix_rank", &matrix_rank, py::arg("rows"), py::arg("field") = "q",
        "Exact rank of an integer matrix over gf:p or q (r and c delegate to q).");

#ifdef VERSION_INFO
#define AUGCHECK_STR(x) #x
#define AUGCHECK_XSTR(x) AUGCHECK_STR(x)
  m.attr("__version__") = AUGCHECK_XSTR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
