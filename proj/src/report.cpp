#include "lowdeg/report.hpp"

#include <iomanip>
#include <ostream>

#include "lowdeg/expr.hpp"

namespace lowdeg {

using nlohmann::json;

json to_json(const RealPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

json to_json(const Quat& q) { return json::array({to_string(q.w), to_string(q.x), to_string(q.y), to_string(q.z)}); }

json to_json(const QuatPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

json to_json(const RulingCertificate& cert) {
  return {
      {"quadratic", {{"p", to_string(cert.quadratic.p)}, {"q", to_string(cert.quadratic.q)}}},
      {"numeric", cert.quadratic.numeric},
      {"multiplicity", cert.multiplicity},
      {"z", {cert.z.real(), cert.z.imag()}},
      {"residual", cert.left_ruling_residual},
      {"coincident", cert.coincident},
  };
}

json to_json(const DegreeReport& report) {
  json certs = json::array();
  for (const auto& cert : report.certificates) certs.push_back(to_json(cert));

  json normalization = {{"content", to_json(report.removed_content)}, {"reparameterization", nullptr}};
  if (report.monic.reparameterization) {
    json map = json::array();
    for (const auto& v : *report.monic.reparameterization) map.push_back(to_string(v));
    normalization["reparameterization"] = map;
  }
  normalization["left_factor"] = {{"primal", to_json(report.monic.left_factor.primal)},
                                  {"dual", to_json(report.monic.left_factor.dual)}};

  json out = {
      {"motion", format_motion(report.motion.poly())},
      {"normalization", normalization},
      {"n", report.n},
      {"m", report.m},
      {"e", report.e},
      {"predicted", report.predicted},
      {"c", to_json(report.c)},
      {"common_gcd", to_json(report.common_gcd)},
      {"certificates", certs},
      {"algebraic_factor", report.algebraic_factor ? to_json(*report.algebraic_factor) : json(nullptr)},
      {"warnings", report.warnings},
  };
  if (report.oracle_degree) {
    out["oracle"] = {{"degree", *report.oracle_degree}, {"trials", *report.oracle_trials}, {"seed", *report.oracle_seed}};
  }
  return out;
}

RealPoly real_poly_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& v : j) coeffs.push_back(parse_rational(v.get<std::string>()));
  return RealPoly(std::move(coeffs));
}

std::vector<TrajectorySample> sample_trajectory(const MotionPolynomial& c, const ProjectivePoint3& pt,
                                                const Rational& from, const Rational& to, int samples,
                                                std::vector<std::string>* warnings) {
  if (samples < 1) throw PreconditionError("need at least one sample");
  Trajectory traj = trajectory(c, pt);
  std::vector<TrajectorySample> rows;
  for (int s = 0; s < samples; ++s) {
    Rational t = samples == 1 ? from : Rational(from + (to - from) * s / (samples - 1));
    auto point = traj.at(t);
    if (!point) {
      if (warnings) warnings->push_back("all coordinates vanish at t = " + t.get_str() + "; row skipped");
      continue;
    }
    if (!point->is_affine()) {
      if (warnings) warnings->push_back("point at infinity at t = " + t.get_str() + "; row skipped");
      continue;
    }
    const Rational& x0 = (*point)[0];
    rows.push_back({t, Rational((*point)[1] / x0).get_d(), Rational((*point)[2] / x0).get_d(),
                    Rational((*point)[3] / x0).get_d()});
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<TrajectorySample>& rows) {
  os << "t,x,y,z\n";
  os << std::setprecision(17);
  for (const auto& r : rows) os << r.t.get_d() << "," << r.x << "," << r.y << "," << r.z << "\n";
}

}  // namespace lowdeg
