#include "doctest.h"

#include "lowdeg/analysis.hpp"
#include "lowdeg/construct.hpp"
#include "../support/random_motion.hpp"

using namespace lowdeg;

namespace {
const Quat kI = Quat::unit_i(), kJ = Quat::unit_j(), kK = Quat::unit_k(), kOne{Rational(1)};
const RealPoly kT2p1{Rational(1), Rational(0), Rational(1)};
const Complex kIm{0, 1};
QuatPoly lin(const Quat& r) { return QuatPoly::linear(r); }
QuatPoly cst(const Quat& q) { return QuatPoly::constant(q); }
}  // namespace

TEST_CASE("ordinary reduction") {
  OrdinaryReduction c = ordinary_reduction(construct::cardan());
  CHECK(c.c == kT2p1);
  CHECK(c.q == lin(kK));
  CHECK(c.m == 2);
  OrdinaryReduction r = ordinary_reduction(validate({lin(kK), cst(kJ)}));
  CHECK(r.c.is_one());
  CHECK(r.m == 0);
  CHECK(ordinary_reduction(construct::wunderlich_example()).m == 3);
}

TEST_CASE("exceptional reduction") {
  ExceptionalReduction c = exceptional_reduction(construct::cardan());
  CHECK(c.e == 2);
  CHECK(c.g == kT2p1);
  CHECK(exceptional_reduction(construct::oldham()).e == 0);
  // zero dual part
  CHECK(exceptional_reduction(validate({QuatPoly(kT2p1) * lin(kK), QuatPoly{}})).e == 0);
}

TEST_CASE("predicted degree of the named motions") {
  struct Row {
    MotionPolynomial c;
    int n, m, e, predicted;
  };
  std::vector<Row> rows = {
      {construct::cardan(), 3, 2, 2, 2},
      {construct::oldham(), 3, 2, 0, 4},
      {construct::darboux_example(), 3, 2, 2, 2},
      {inverse(construct::darboux_example()), 3, 2, 0, 4},
      {construct::vertical_darboux_example(), 3, 2, 2, 2},
      {inverse(construct::vertical_darboux_example()), 3, 2, 2, 2},
      {construct::wunderlich_example(), 4, 3, 2, 3},
  };
  for (const auto& row : rows) {
    DegreeReport r = predicted_degree(row.c, OracleOptions{8, 1});
    CHECK(r.n == row.n);
    CHECK(r.m == row.m);
    CHECK(r.e == row.e);
    CHECK(r.predicted == row.predicted);
    CHECK(r.oracle_degree == row.predicted);
    CHECK(r.oracle_seed == 1u);
    CHECK(r.oracle_trials == 8);
  }
}

TEST_CASE("inverse preserves n and m") {
  testing::RandomSource rs(31);
  for (int i = 0; i < 10; ++i) {
    auto cs = testing::random_exceptional_case(static_cast<std::uint64_t>(100 + i));
    DegreeReport a = predicted_degree(cs.motion, OracleOptions{});
    DegreeReport b = predicted_degree(inverse(cs.motion), OracleOptions{});
    CHECK(a.n == b.n);
    CHECK(a.m == b.m);
  }
}

TEST_CASE("algebraic certificate") {
  auto h = algebraic_certificate(construct::cardan());
  REQUIRE(h.has_value());
  CHECK(*h == lin(kK));
  CHECK(right_divides(*h, construct::cardan().dual()));
  CHECK_FALSE(algebraic_certificate(construct::oldham()).has_value());

  // recovers a factor with the norm of the planted H
  MotionPolynomial c = construct::exceptional(lin(kK), cst(kJ), lin(kI));
  auto got = algebraic_certificate(c);
  REQUIRE(got.has_value());
  CHECK(got->norm_poly() == lin(kI).norm_poly());
}

TEST_CASE("algebraic certificate on random constructions") {
  for (std::uint64_t s = 0; s < 15; ++s) {
    auto cs = testing::random_exceptional_case(200 + s);
    auto h = algebraic_certificate(cs.motion);
    REQUIRE(h.has_value());
    OrdinaryReduction ord = ordinary_reduction(cs.motion);
    CHECK(right_divide(ord.q, *h).rem.is_zero());
    CHECK(right_divide(cs.motion.dual(), *h).rem.is_zero());
    CHECK(divides(h->norm_poly(), ord.c));
    CHECK(divides(cs.h.norm_poly().monic(), h->norm_poly()));
  }
}

TEST_CASE("geometric certificate") {
  auto certs = geometric_certificate(construct::cardan());
  REQUIRE(certs.size() == 1);
  CHECK(certs[0].quadratic.poly() == kT2p1);
  CHECK(certs[0].multiplicity == 1);
  CHECK(std::abs(certs[0].z - kIm) < 1e-12);
  CHECK(certs[0].left_ruling_residual < kRulingTolerance);
  CHECK_FALSE(certs[0].coincident);
  CHECK_FALSE(certs[0].ill_conditioned);

  auto vert = geometric_certificate(construct::vertical_darboux_example());
  REQUIRE(vert.size() == 1);
  CHECK(vert[0].coincident);

  CHECK(geometric_certificate(construct::oldham()).empty());
}

TEST_CASE("sum of 2 mu equals e, exact and numeric tests agree") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto cs = testing::random_exceptional_case(300 + s);
    DegreeReport r = predicted_degree(cs.motion);
    int sum = 0;
    for (const auto& cert : r.certificates) {
      sum += 2 * cert.multiplicity;
      CHECK(cert.left_ruling_residual < kRulingTolerance);
    }
    CHECK(sum == r.e);
    CHECK(r.e % 2 == 0);
  }
}

TEST_CASE("higher multiplicity from a repeated factor") {
  // H = (t - k)^2 gives norm (t^2+1)^2 and e = 4
  MotionPolynomial c = construct::exceptional(lin(kI), cst(kJ), lin(kK) * lin(kK));
  DegreeReport r = predicted_degree(c, OracleOptions{});
  CHECK(r.e >= 4);
  int sum = 0;
  for (const auto& cert : r.certificates) sum += 2 * cert.multiplicity;
  CHECK(sum == r.e);
  CHECK(r.oracle_degree == r.predicted);
}

TEST_CASE("analysis normalizes its input") {
  // Cardan with a leading unit quaternion on the left and a spurious real factor
  DualQuatPoly raw = construct::cardan().poly();
  RealPoly f{Rational(2), Rational(1)};
  DualQuatPoly messy{f * (kJ * raw.primal), f * (kJ * raw.dual)};
  DegreeReport r = predicted_degree(validate(messy), OracleOptions{});
  CHECK(r.removed_content == f);
  CHECK(r.predicted == 2);
  CHECK(r.oracle_degree == 2);
}

TEST_CASE("pluecker lines") {
  PlueckerLine<Rational> l = pluecker_line(kOne, kI);
  CHECK(l.primal == Quat() - kI * Rational(2));
  CHECK(l.dual.is_zero());
  CHECK(l.pluecker_defect().is_zero());
  CHECK_THROWS_AS(pluecker_line(kI, kI * Rational(3)), PreconditionError);
  CHECK_THROWS_AS(pluecker_line(Quat(), kI), PreconditionError);

  testing::RandomSource rs(41);
  for (int i = 0; i < 30; ++i) {
    Quat a = rs.nonzero_quat(), b = rs.nonzero_quat();
    if (detail::proportional(a, b)) continue;
    CHECK(pluecker_line(a, b).pluecker_defect().is_zero());
    CHECK(pluecker_line(a, b).primal.w == 0);
  }
}

TEST_CASE("left ruling conic") {
  ComplexQuat x{0.0, 1.0, kIm, 0.0};
  CHECK(on_left_ruling_conic(PlueckerLine<Complex>{x, -x}));
  ComplexQuat y{0.0, 1.0, 0.0, 0.0};
  CHECK_FALSE(on_left_ruling_conic(PlueckerLine<Complex>{y, -y}));
  CHECK_FALSE(on_left_ruling_conic(PlueckerLine<Rational>{kI, -kI}));

  // Cardan at z = i: Q(z) = i - k, D(z) = i*i + j
  ComplexQuat a = lin(kK).eval(kIm);
  ComplexQuat b = QuatPoly{kJ, kI}.eval(kIm);
  CHECK((a * b.conj()).is_zero());
  auto line = pluecker_line(a, b);
  CHECK(on_left_ruling_conic(line));
  // shape -conj(a) b + eps conj(a) b
  ComplexQuat expected = a.conj() * b;
  CHECK((line.primal + expected).is_zero());
  CHECK((line.dual - expected).is_zero());
}

TEST_CASE("ruling swap") {
  CHECK(ruling_swap_check(construct::cardan()));
  CHECK(ruling_swap_check(construct::vertical_darboux_example()));
  CHECK_FALSE(geometric_certificate(inverse(construct::vertical_darboux_example())).empty());
  CHECK_THROWS_AS(ruling_swap_check(construct::oldham()), PreconditionError);
}
