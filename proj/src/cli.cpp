#include "lowdeg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lowdeg/construct.hpp"
#include "lowdeg/expr.hpp"
#include "lowdeg/report.hpp"

namespace lowdeg::cli {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw PreconditionError("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

QuatPoly parse_quat_poly(const std::string& name, const std::string& text) {
  DualQuatPoly p = parse_motion(text);
  if (!p.dual.is_zero()) throw PreconditionError(name + " must not contain eps");
  return p.primal;
}

std::vector<Rational> parse_params(const std::vector<std::string>& params, std::vector<Rational> defaults,
                                   const std::string& family) {
  if (params.empty()) return defaults;
  if (params.size() != defaults.size()) {
    throw PreconditionError(family + " takes " + std::to_string(defaults.size()) + " parameters");
  }
  std::vector<Rational> out;
  for (const auto& p : params) out.push_back(parse_rational(p));
  return out;
}

void print_text_report(std::ostream& out, const DegreeReport& r, const std::string& label) {
  out << label << "motion: " << format_motion(r.motion.poly()) << "\n";
  out << label << "n = " << r.n << ", m = " << r.m << ", e = " << r.e << ", predicted trajectory degree = "
      << r.predicted << "\n";
  out << label << "c = " << r.c << "\n";
  out << label << "gcd(c, Q conj(D)) = " << r.common_gcd << "\n";
  for (const auto& cert : r.certificates) {
    out << label << "left ruling: " << cert.quadratic.poly() << (cert.quadratic.numeric ? " (numeric)" : "")
        << ", multiplicity " << cert.multiplicity << ", z = " << cert.z.real() << (cert.z.imag() < 0 ? " - " : " + ")
        << std::abs(cert.z.imag()) << "i, residual " << cert.left_ruling_residual
        << (cert.coincident ? ", coincident" : "") << "\n";
  }
  if (r.algebraic_factor) out << label << "common right factor H = " << format_quat_poly(*r.algebraic_factor) << "\n";
  if (r.oracle_degree) {
    out << label << "oracle degree = " << *r.oracle_degree << " (" << *r.oracle_trials << " points, seed "
        << *r.oracle_seed << ")\n";
  }
  for (const auto& w : r.warnings) out << label << "warning: " << w << "\n";
}

struct AnalyzeArgs {
  int oracle = 0;
  std::uint64_t seed = 1;
  bool inverse = false;
  bool json = false;
  std::string file;
};

int cmd_analyze(const AnalyzeArgs& a, std::istream& in, std::ostream& out) {
  DualQuatPoly input = parse_motion(read_input(a.file, in));
  MotionPolynomial motion = validate(input);
  std::optional<OracleOptions> oracle;
  if (a.oracle > 0) oracle = OracleOptions{a.oracle, a.seed};
  DegreeReport report = predicted_degree(motion, oracle);
  if (a.json) {
    nlohmann::json j = to_json(report);
    j["input"] = format_motion(input);
    if (a.inverse) j["inverse"] = to_json(predicted_degree(inverse(report.motion), oracle));
    out << j.dump(2) << "\n";
  } else {
    print_text_report(out, report, "");
    if (a.inverse) print_text_report(out, predicted_degree(inverse(report.motion), oracle), "inverse ");
  }
  return kOk;
}

struct TrajectoryArgs {
  std::string point;
  std::string from = "-10", to = "10";
  int samples = 101;
  std::string file;
};

int cmd_trajectory(const TrajectoryArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<Rational> coords;
  std::stringstream ss(a.point);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
  if (coords.size() != 4) throw PreconditionError("--point needs four comma-separated coordinates");
  ProjectivePoint3 pt(coords[0], coords[1], coords[2], coords[3]);
  if (!pt.is_affine()) throw PreconditionError("--point needs x0 != 0 for affine output");
  MotionPolynomial motion = reduce(validate(parse_motion(read_input(a.file, in))));
  std::vector<std::string> warnings;
  auto rows = sample_trajectory(motion, pt, parse_rational(a.from), parse_rational(a.to), a.samples, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  write_csv(out, rows);
  return kOk;
}

}  // namespace

MotionPolynomial generate(const GenerateOptions& a) {
  using namespace construct;
  const Quat kI = Quat::unit_i(), kK = Quat::unit_k();
  auto darboux_d = [&](const std::vector<Rational>& p, bool vertical) {
    QuatPoly d{kK * p[2], kK * p[1], kK * p[0]};
    if (!vertical) d += QuatPoly::constant(kI);
    return d;
  };
  std::optional<MotionPolynomial> result;
  const std::string& fam = a.family;
  if (fam == "cardan" || fam == "oldham") {
    if (!a.params.empty()) throw PreconditionError(fam + " takes no parameters");
    result = fam == "cardan" ? cardan() : oldham();
  } else if (fam == "darboux" || fam == "vertical-darboux") {
    bool vertical = fam == "vertical-darboux";
    if (!a.d.empty()) {
      result = darboux(parse_quat_poly("--Q", a.q), parse_quat_poly("--D", a.d));
    } else {
      auto p = parse_params(a.params, {Rational(1), Rational(0), Rational(2)}, fam);
      result = darboux(parse_quat_poly("--Q", a.q), darboux_d(p, vertical));
    }
  } else if (fam == "wunderlich") {
    auto p = parse_params(a.params, {Rational(1), Rational(2), Rational(-1), Rational(0)}, fam);
    QuatPoly d = a.d.empty() ? darboux_d({Rational(1), Rational(0), Rational(2)}, false) : parse_quat_poly("--D", a.d);
    MotionPolynomial base = darboux(parse_quat_poly("--Q", a.q), d);
    QuatPoly g = QuatPoly::constant(Quat(Rational(0), p[1], p[2], p[3]));
    result = wunderlich(RealPoly{p[0], Rational(1)}, g, base);
  } else if (fam == "exceptional") {
    if (!a.params.empty()) throw PreconditionError("exceptional takes --R, --E, --H");
    result = exceptional(parse_quat_poly("--R", a.r), parse_quat_poly("--E", a.e), parse_quat_poly("--H", a.h));
  } else if (fam == "planar") {
    if (!a.params.empty()) throw PreconditionError("planar takes --R, --D, --F, --planar-H");
    QuatPoly r = parse_quat_poly("--R", a.r);
    QuatPoly d = parse_quat_poly("--D", a.d.empty() ? "t*i + j" : a.d);
    QuatPoly f = parse_quat_poly("--F", a.f);
    result = a.planar_h.empty() ? planar(r, d, f) : planar(r, d, f, parse_quat_poly("--planar-H", a.planar_h));
  } else {
    throw PreconditionError("unknown family '" + fam +
                            "' (cardan, oldham, darboux, vertical-darboux, wunderlich, exceptional, planar)");
  }
  return *result;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trajectory degree analysis of rational motions given as dual-quaternion polynomials"};
  app.name(args.empty() ? "lowdeg" : args[0]);
  app.require_subcommand(1);

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "Degree report for a motion polynomial");
  analyze->add_option("--oracle", aa.oracle, "Check against N sampled trajectories");
  analyze->add_option("--seed", aa.seed, "Seed for the sampled points");
  analyze->add_flag("--inverse", aa.inverse, "Also analyze the inverse motion");
  analyze->add_flag("--json", aa.json, "Emit a JSON report");
  analyze->add_option("file", aa.file, "Expression file, or - for stdin")->required();

  GenerateOptions ga;
  auto* generate = app.add_subcommand("generate", "Print a motion with exceptional degree reduction");
  generate->add_option("family", ga.family, "cardan|oldham|darboux|vertical-darboux|wunderlich|exceptional|planar")
      ->required();
  generate->add_option("params", ga.params, "Exact rational parameters of the family");
  generate->add_option("--R", ga.r, "Seed primal part (exceptional, planar)");
  generate->add_option("--E", ga.e, "Seed dual part (exceptional)");
  generate->add_option("--H", ga.h, "Right factor (exceptional)");
  generate->add_option("--Q", ga.q, "Linear rotation part (darboux, wunderlich)");
  generate->add_option("--D", ga.d, "Dual factor (darboux, wunderlich, planar)");
  generate->add_option("--F", ga.f, "Left multiplier of the dual part (planar)");
  generate->add_option("--planar-H", ga.planar_h, "Right factor of R defining c (planar)");

  TrajectoryArgs ta;
  auto* traj = app.add_subcommand("trajectory", "Sample one trajectory as CSV");
  traj->add_option("--point", ta.point, "x0,x1,x2,x3")->required();
  traj->add_option("--from", ta.from, "First parameter value");
  traj->add_option("--to", ta.to, "Last parameter value");
  traj->add_option("--samples", ta.samples, "Number of parameter values");
  traj->add_option("file", ta.file, "Expression file, or - for stdin")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("lowdeg");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*analyze) return cmd_analyze(aa, in, out);
    if (*generate) {
      out << format_motion(lowdeg::cli::generate(ga).poly()) << "\n";
      return kOk;
    }
    return cmd_trajectory(ta, in, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const StudyViolation& e) {
    err << "validation error: " << e.what() << "\n";
    err << "defect: " << format_quat_poly(e.defect()) << "\n";
    return kValidationError;
  } catch (const NullNorm& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationError;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInconsistency;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
}

}  // namespace lowdeg::cli
