#include "doctest.h"

#include "lowdeg/errors.hpp"
#include "lowdeg/real_poly.hpp"
#include "../support/random_motion.hpp"

using namespace lowdeg;

namespace {
const RealPoly kT2p1{Rational(1), Rational(0), Rational(1)};  // t^2 + 1
}

TEST_CASE("arithmetic and trimming") {
  RealPoly a{Rational(1), Rational(2)};
  RealPoly b{Rational(-1), Rational(-2)};
  CHECK((a + b).is_zero());
  CHECK((a + b).degree() == -1);
  CHECK((a * a) == RealPoly{Rational(1), Rational(4), Rational(4)});
  CHECK(a(Rational(3)) == 7);
  CHECK(kT2p1.derivative() == RealPoly{Rational(0), Rational(2)});
  CHECK(a.pow(3)(Rational(1)) == 27);
}

TEST_CASE("divmod") {
  RealPoly a = kT2p1 * RealPoly{Rational(-2), Rational(1)} + RealPoly{Rational(5)};
  auto [q, r] = divmod(a, kT2p1);
  CHECK(q == RealPoly{Rational(-2), Rational(1)});
  CHECK(r == RealPoly{Rational(5)});
  CHECK_THROWS_AS(divmod(a, RealPoly{}), PreconditionError);
  CHECK_THROWS_AS(exact_div(a, kT2p1), InconsistencyError);
}

TEST_CASE("real_gcd examples") {
  RealPoly t2p2{Rational(2), Rational(0), Rational(1)};
  CHECK(real_gcd(kT2p1, kT2p1 * RealPoly{Rational(-2), Rational(1)}) == kT2p1);
  CHECK(real_gcd(kT2p1, t2p2) == RealPoly{Rational(1)});
  CHECK(real_gcd(kT2p1, -kT2p1) == kT2p1);
  CHECK(real_gcd(Rational(3) * kT2p1, RealPoly{}) == kT2p1);
  CHECK_THROWS_AS(real_gcd(RealPoly{}, RealPoly{}), PreconditionError);
}

TEST_CASE("multiplicity and square-free decomposition") {
  RealPoly lin{Rational(-1), Rational(1)};
  RealPoly p = Rational(3) * kT2p1.pow(2) * lin;
  CHECK(multiplicity(kT2p1, p) == 2);
  CHECK(multiplicity(lin, p) == 1);
  auto sqf = square_free_decomposition(p);
  RealPoly back{Rational(3)};
  for (const auto& [s, k] : sqf) back = back * s.pow(static_cast<unsigned>(k));
  CHECK(back == p);
}

TEST_CASE("factor_real examples") {
  SUBCASE("(t^2+1)^2") {
    auto f = factor_real(kT2p1.pow(2));
    REQUIRE(f.quadratics.size() == 1);
    CHECK(f.quadratics[0].p == 0);
    CHECK(f.quadratics[0].q == 1);
    CHECK(f.quadratics[0].multiplicity == 2);
    CHECK(f.linear.empty());
  }
  SUBCASE("t^3 + t") {
    auto f = factor_real(RealPoly{Rational(0), Rational(1), Rational(0), Rational(1)});
    REQUIRE(f.linear.size() == 1);
    CHECK(f.linear[0].root == 0);
    CHECK(f.linear[0].multiplicity == 1);
    REQUIRE(f.quadratics.size() == 1);
    CHECK(f.quadratics[0].poly() == kT2p1);
  }
  SUBCASE("(t^2+1)(t^2+4)") {
    RealPoly p = kT2p1 * RealPoly{Rational(4), Rational(0), Rational(1)};
    auto f = factor_real(p);
    REQUIRE(f.quadratics.size() == 2);
    CHECK(f.exact());
    CHECK(f.expand() == p);
    std::vector<Rational> qs{f.quadratics[0].q, f.quadratics[1].q};
    std::sort(qs.begin(), qs.end());
    CHECK(qs == std::vector<Rational>{Rational(1), Rational(4)});
  }
  SUBCASE("irrational quadratics are numeric") {
    // t^4 + 1 = (t^2 + sqrt2 t + 1)(t^2 - sqrt2 t + 1)
    auto f = factor_real(RealPoly{Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)});
    REQUIRE(f.quadratics.size() == 2);
    CHECK(f.quadratics[0].numeric);
    CHECK_FALSE(f.exact());
    CHECK(std::abs(std::abs(f.quadratics[0].p.get_d()) - std::sqrt(2.0)) < 1e-12);
  }
  SUBCASE("leading coefficient and rational roots") {
    RealPoly p = Rational(-2) * RealPoly{Rational(-1, 3), Rational(1)}.pow(2) * RealPoly{Rational(5), Rational(1)} *
                 RealPoly{Rational(7), Rational(1), Rational(1)};
    auto f = factor_real(p);
    CHECK(f.leading == -2);
    CHECK(f.exact());
    CHECK(f.expand() == p);
  }
}

TEST_CASE("factor_real expands back on random products") {
  testing::RandomSource rs(5);
  for (int i = 0; i < 40; ++i) {
    RealPoly p = rs.real_poly(static_cast<int>(rs.integer(1, 2)));
    for (int k = 0; k < 2; ++k) {
      Rational a = rs.rational(), b = rs.nonzero_rational();
      p = p * RealPoly{Rational(a * a + b * b), Rational(-2 * a), Rational(1)};
    }
    auto f = factor_real(p);
    if (f.exact()) CHECK(f.expand() == p);
    int deg = 0;
    for (const auto& l : f.linear) deg += l.multiplicity;
    for (const auto& q : f.quadratics) deg += 2 * q.multiplicity;
    CHECK(deg == p.degree());
  }
}

TEST_CASE("quadratic_roots") {
  auto [z1, z2] = quadratic_roots(QuadraticFactor{Rational(0), Rational(1)});
  CHECK(std::abs(z1 - Complex(0, 1)) < 1e-12);
  CHECK(std::abs(z2 - Complex(0, -1)) < 1e-12);
  auto [w1, w2] = quadratic_roots(QuadraticFactor{Rational(0), Rational(4)});
  CHECK(std::abs(w1 - Complex(0, 2)) < 1e-12);
  CHECK(std::abs(w2 - Complex(0, -2)) < 1e-12);
  QuadraticFactor q{Rational(-2), Rational(2)};
  auto [u1, u2] = quadratic_roots(q);
  CHECK(std::abs(u1 - Complex(1, 1)) < 1e-12);
  CHECK(std::abs(q.poly().eval(u1)) < 1e-12);
  CHECK(std::abs(q.poly().eval(u2)) < 1e-12);
}
