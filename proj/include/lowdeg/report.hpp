#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "lowdeg/analysis.hpp"

namespace lowdeg {

// Polynomials serialize as coefficient arrays (constant term first) of exact
// "p/q" strings; quaternion coefficients as [w, x, y, z].
nlohmann::json to_json(const RealPoly& p);
nlohmann::json to_json(const Quat& q);
nlohmann::json to_json(const QuatPoly& p);
nlohmann::json to_json(const RulingCertificate& cert);
nlohmann::json to_json(const DegreeReport& report);

RealPoly real_poly_from_json(const nlohmann::json& j);

struct TrajectorySample {
  Rational t;
  double x = 0, y = 0, z = 0;
};

// Affine points on the trajectory at `samples` equally spaced exact
// parameters in [from, to]. Parameters where the point is at infinity or
// undefined are skipped and reported in `warnings`.
std::vector<TrajectorySample> sample_trajectory(const MotionPolynomial& c, const ProjectivePoint3& pt,
                                                const Rational& from, const Rational& to, int samples,
                                                std::vector<std::string>* warnings = nullptr);

// Header "t,x,y,z" then one row per sample, 17 significant digits.
void write_csv(std::ostream& os, const std::vector<TrajectorySample>& rows);

}  // namespace lowdeg
