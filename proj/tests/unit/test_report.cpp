#include "doctest.h"

#include <sstream>

#include "lowdeg/construct.hpp"
#include "lowdeg/report.hpp"

using namespace lowdeg;

TEST_CASE("polynomials serialize as p/q strings") {
  RealPoly p{Rational(1, 2), Rational(0), Rational(-3)};
  nlohmann::json j = to_json(p);
  CHECK(j == nlohmann::json::array({"1/2", "0/1", "-3/1"}));
  CHECK(real_poly_from_json(j) == p);
  CHECK(to_json(Quat::unit_k()) == nlohmann::json::array({"0/1", "0/1", "0/1", "1/1"}));
}

TEST_CASE("degree report json") {
  DegreeReport r = predicted_degree(construct::cardan(), OracleOptions{8, 3});
  nlohmann::json j = to_json(r);
  CHECK(j["n"] == 3);
  CHECK(j["m"] == 2);
  CHECK(j["e"] == 2);
  CHECK(j["predicted"] == 2);
  CHECK(j["c"] == nlohmann::json::array({"1/1", "0/1", "1/1"}));
  CHECK(j["oracle"]["degree"] == 2);
  CHECK(j["oracle"]["seed"] == 3);
  CHECK(j["oracle"]["trials"] == 8);
  REQUIRE(j["certificates"].size() == 1);
  CHECK(j["certificates"][0]["multiplicity"] == 1);
  CHECK(j["certificates"][0]["coincident"] == false);
  CHECK(j["algebraic_factor"].size() == 2);
  CHECK(j["normalization"]["reparameterization"].is_null());

  nlohmann::json none = to_json(predicted_degree(construct::oldham()));
  CHECK(none["algebraic_factor"].is_null());
  CHECK_FALSE(none.contains("oracle"));
}

TEST_CASE("trajectory samples") {
  ProjectivePoint3 pt(Rational(1), Rational(1), Rational(2), Rational(3));
  std::vector<std::string> warnings;
  auto rows = sample_trajectory(construct::cardan(), pt, Rational(-1), Rational(1), 5, &warnings);
  REQUIRE(rows.size() == 5);
  CHECK(rows[2].t == 0);
  CHECK(warnings.empty());

  Trajectory traj = trajectory(construct::cardan(), pt);
  for (const auto& row : rows) {
    ProjectivePoint3 exact = *traj.at(row.t);
    double x0 = exact[0].get_d();
    CHECK(std::abs(exact[1].get_d() / x0 - row.x) <= 1e-9 * std::max(1.0, std::abs(row.x)));
    CHECK(std::abs(exact[2].get_d() / x0 - row.y) <= 1e-9 * std::max(1.0, std::abs(row.y)));
    CHECK(std::abs(exact[3].get_d() / x0 - row.z) <= 1e-9 * std::max(1.0, std::abs(row.z)));
  }

  std::ostringstream os;
  write_csv(os, rows);
  CHECK(os.str().rfind("t,x,y,z\n", 0) == 0);
  CHECK_THROWS_AS(sample_trajectory(construct::cardan(), pt, Rational(0), Rational(1), 0), PreconditionError);
}

TEST_CASE("identity motion gives constant rows") {
  MotionPolynomial id = validate({QuatPoly::constant(Quat(Rational(1))), QuatPoly{}});
  ProjectivePoint3 pt(Rational(2), Rational(1), Rational(-1), Rational(4));
  for (const auto& row : sample_trajectory(id, pt, Rational(-3), Rational(3), 7)) {
    CHECK(row.x == 0.5);
    CHECK(row.y == -0.5);
    CHECK(row.z == 2.0);
  }
}
