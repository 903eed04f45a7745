// Thin bindings: documents cross the boundary as JSON text, which the Python
// package decodes into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricseq/classify.hpp"
#include "toricseq/cohomology.hpp"
#include "toricseq/error.hpp"
#include "toricseq/reproduce.hpp"
#include "toricseq/serialize.hpp"

namespace py = pybind11;
using namespace toricseq;

namespace {

using Dims = std::tuple<Int, Int, Int>;

Dims as_tuple(const CohomologyDims& d) { return {d.h0, d.h1, d.h2}; }

io::Json parse(const std::string& text) {
  try {
    return io::Json::parse(text);
  } catch (const io::Json::parse_error& e) {
    fail(ErrorCode::InvalidInput, e.what());
  }
}

std::string surface_info(const std::vector<Int>& selfints) {
  const auto x = ToricSurface::from_selfints(selfints);
  io::Json rays = io::Json::array();
  for (const auto& v : x.rays()) rays.push_back({v.x, v.y});
  io::Json out{{"selfints", x.selfints()}, {"rays", rays}, {"pic_rank", x.pic_rank()}};
  try {
    out["good_basis"] = io::to_json(good_basis(x));
  } catch (const Error&) {
    out["good_basis"] = nullptr;
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_toricseq, m) {
  m.doc() = "Exceptional sequences of line bundles on smooth projective toric surfaces";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&] { return py::object(py::exception<Error>(m, "Error")); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error_type.get_stored();
      py::object instance = type(e.what());
      instance.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(type.ptr(), instance.ptr());
    }
  });

  m.def("surface_info", &surface_info, py::arg("selfints"));
  m.def(
      "cohomology",
      [](const std::vector<Int>& selfints, const std::vector<Int>& coeffs) {
        return as_tuple(cohomology_dims(ToricSurface::from_selfints(selfints).make_class(coeffs)));
      },
      py::arg("selfints"), py::arg("coeffs"));
  m.def(
      "oracle_cohomology",
      [](const std::vector<Int>& selfints, const std::vector<Int>& coeffs) {
        return as_tuple(oracle_cohomology_dims(ToricSurface::from_selfints(selfints).make_class(coeffs)));
      },
      py::arg("selfints"), py::arg("coeffs"));
  m.def(
      "check_system", [](const std::string& doc) { return io::to_json(io::system_from_json(parse(doc))).dump(); },
      py::arg("document"));
  m.def(
      "is_exceptional", [](const std::string& doc) { return is_exceptional(io::system_from_json(parse(doc))); },
      py::arg("document"));
  m.def(
      "constructibility_witness",
      [](const std::string& doc) -> std::string {
        const auto w = is_constructible(io::system_from_json(parse(doc)));
        return w ? io::to_json(*w).dump() : "null";
      },
      py::arg("document"));
  m.def(
      "certify_full",
      [](const std::string& doc, std::size_t max_depth) {
        return io::to_json(certify_full(io::sequence_from_json(parse(doc)), max_depth)).dump();
      },
      py::arg("document"), py::arg("max_depth") = kDefaultTwistDepth);
  m.def(
      "sequence_of_system",
      [](const std::string& doc) { return io::to_json(to_sequence(io::system_from_json(parse(doc)))).dump(); },
      py::arg("document"));
  m.def(
      "orbit_report",
      [](const std::vector<Int>& selfints, unsigned threads) {
        py::gil_scoped_release release;
        return io::to_json(orbit_report(ToricSurface::from_selfints(selfints), threads)).dump();
      },
      py::arg("selfints"), py::arg("threads") = 0);
  m.def(
      "reproduce_paper",
      [](unsigned threads) {
        py::gil_scoped_release release;
        return to_json(reproduce_example(threads)).dump();
      },
      py::arg("threads") = 0);
}
