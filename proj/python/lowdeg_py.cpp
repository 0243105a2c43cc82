#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lowdeg/cli.hpp"
#include "lowdeg/construct.hpp"
#include "lowdeg/expr.hpp"
#include "lowdeg/report.hpp"

namespace py = pybind11;
using namespace lowdeg;

namespace {

py::object json_to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

MotionPolynomial motion_from_text(const std::string& text) { return validate(parse_motion(text)); }

ProjectivePoint3 point_from(const std::vector<std::string>& coords) {
  if (coords.size() != 4) throw PreconditionError("point needs four coordinates");
  return {parse_rational(coords[0]), parse_rational(coords[1]), parse_rational(coords[2]), parse_rational(coords[3])};
}

py::object py_analyze(const std::string& text, int oracle, std::uint64_t seed, bool with_inverse) {
  DualQuatPoly input = parse_motion(text);
  std::optional<OracleOptions> opts;
  if (oracle > 0) opts = OracleOptions{oracle, seed};
  DegreeReport report = predicted_degree(validate(input), opts);
  nlohmann::json j = to_json(report);
  j["input"] = format_motion(input);
  if (with_inverse) j["inverse"] = to_json(predicted_degree(inverse(report.motion), opts));
  return json_to_python(j);
}

std::string py_generate(const std::string& family, const std::vector<std::string>& params,
                     const std::optional<std::string>& R, const std::optional<std::string>& E,
                     const std::optional<std::string>& H, const std::optional<std::string>& Q,
                     const std::optional<std::string>& D, const std::optional<std::string>& F,
                     const std::optional<std::string>& planar_H) {
  cli::GenerateOptions o;
  o.family = family;
  o.params = params;
  if (R) o.r = *R;
  if (E) o.e = *E;
  if (H) o.h = *H;
  if (Q) o.q = *Q;
  if (D) o.d = *D;
  if (F) o.f = *F;
  if (planar_H) o.planar_h = *planar_H;
  return format_motion(cli::generate(o).poly());
}

py::list py_trajectory(const std::string& text, const std::vector<std::string>& point, const std::string& from,
                    const std::string& to, int samples) {
  MotionPolynomial c = reduce(motion_from_text(text));
  std::vector<std::string> warnings;
  auto rows = sample_trajectory(c, point_from(point), parse_rational(from), parse_rational(to), samples, &warnings);
  if (!warnings.empty()) {
    auto warn = py::module_::import("warnings").attr("warn");
    for (const auto& w : warnings) warn(w);
  }
  py::list out;
  for (const auto& r : rows) out.append(py::make_tuple(to_string(r.t), r.x, r.y, r.z));
  return out;
}

}  // namespace

PYBIND11_MODULE(_lowdeg, m) {
  m.doc() = "Exact trajectory degree analysis of rational motions";

  // The module attributes keep these alive; the translator only borrows them.
  static py::handle base = py::exception<Error>(m, "LowdegError", PyExc_ValueError);
  static py::handle parse_error = py::exception<ParseError>(m, "ParseError", base.ptr());
  static py::handle validation = py::exception<StudyViolation>(m, "ValidationError", base.ptr());
  static py::handle inconsistency = py::exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const StudyViolation& e) {
      py::set_error(validation, (std::string(e.what()) + "; defect: " + format_quat_poly(e.defect())).c_str());
    } catch (const NullNorm& e) {
      py::set_error(validation, e.what());
    } catch (const InconsistencyError& e) {
      py::set_error(inconsistency, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("parse_motion", [](const std::string& text) { return format_motion(parse_motion(text)); }, py::arg("text"),
        "Canonical expanded form of an expression.");
  m.def("validate", [](const std::string& text) { return format_motion(motion_from_text(text).poly()); },
        py::arg("text"), "Canonical form; raises ValidationError when the Study condition fails.");
  m.def("normal_form", [](const std::string& text) { return format_motion(normal_form(motion_from_text(text)).poly()); },
        py::arg("text"), "Reduced monic form.");
  m.def("inverse", [](const std::string& text) { return format_motion(inverse(motion_from_text(text)).poly()); },
        py::arg("text"));
  m.def("analyze", &py_analyze, py::arg("text"), py::arg("oracle") = 0, py::arg("seed") = 1, py::arg("inverse") = false,
        "Degree report as a dict (same schema as `lowdeg analyze --json`).");
  m.def("generate", &py_generate, py::arg("family"), py::arg("params") = std::vector<std::string>{},
        py::arg("R") = py::none(), py::arg("E") = py::none(), py::arg("H") = py::none(), py::arg("Q") = py::none(),
        py::arg("D") = py::none(), py::arg("F") = py::none(), py::arg("planar_H") = py::none(),
        "Expression text of a named family.");
  m.def("trajectory", &py_trajectory, py::arg("text"), py::arg("point"), py::arg("start") = "-10",
        py::arg("stop") = "10", py::arg("samples") = 101, "Rows (t, x, y, z) with t as an exact 'p/q' string.");
  m.def(
      "trajectory_degree",
      [](const std::string& text, const std::vector<std::string>& point) {
        return trajectory_degree(motion_from_text(text), point_from(point));
      },
      py::arg("text"), py::arg("point"));
  m.def(
      "degree_oracle",
      [](const std::string& text, int trials, std::uint64_t seed) {
        return generic_degree_oracle(motion_from_text(text), trials, seed);
      },
      py::arg("text"), py::arg("trials") = 8, py::arg("seed") = 1);
}
