#pragma once

// Random exact data for property tests. Header-only, tests only.

#include <random>

#include "lowdeg/analysis.hpp"
#include "lowdeg/construct.hpp"
#include "lowdeg/expr.hpp"

namespace lowdeg::testing {

class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  // Small rational, zero allowed.
  Rational rational(long bound = 5, long max_den = 3) {
    Rational r{mpz_class(integer(-bound, bound)), mpz_class(integer(1, max_den))};
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(long bound = 5, long max_den = 3) {
    Rational r;
    do r = rational(bound, max_den);
    while (r == 0);
    return r;
  }

  Quat quat(long bound = 5, long max_den = 3) {
    return {rational(bound, max_den), rational(bound, max_den), rational(bound, max_den), rational(bound, max_den)};
  }

  Quat nonzero_quat(long bound = 5, long max_den = 3) {
    Quat q;
    do q = quat(bound, max_den);
    while (q.is_zero());
    return q;
  }

  Quat vector_quat(long bound = 5, long max_den = 3) {
    return {Rational(0), rational(bound, max_den), rational(bound, max_den), rational(bound, max_den)};
  }

  // Exact degree `deg`, nonzero leading coefficient.
  QuatPoly quat_poly(int deg, long bound = 5) {
    if (deg < 0) return {};
    std::vector<Quat> c;
    for (int i = 0; i < deg; ++i) c.push_back(quat(bound));
    c.push_back(nonzero_quat(bound));
    return QuatPoly(std::move(c));
  }

  RealPoly real_poly(int deg, long bound = 5) {
    if (deg < 0) return {};
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.push_back(rational(bound));
    c.push_back(nonzero_rational(bound));
    return RealPoly(std::move(c));
  }

  // t - h + eps (vec(h) x r): satisfies the Study condition since the dual
  // part is vectorial and orthogonal to h.
  DualQuatPoly linear_motion(long bound = 5) {
    Quat h = quat(bound);
    Quat r = vector_quat(bound);
    Quat d{Rational(0), Rational(h.y * r.z - h.z * r.y), Rational(h.z * r.x - h.x * r.z),
           Rational(h.x * r.y - h.y * r.x)};
    return {QuatPoly::linear(h), QuatPoly::constant(d)};
  }

  // Monic product of `deg` linear motions; deg 0 gives a random translation
  // (monic only when the translation vanishes).
  DualQuatPoly monic_motion(int deg, long bound = 5) {
    if (deg == 0) return {QuatPoly::constant(Quat(Rational(1))), QuatPoly::constant(vector_quat(bound))};
    DualQuatPoly c = linear_motion(bound);
    for (int i = 1; i < deg; ++i) c = c * linear_motion(bound);
    return c;
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

// Random motion of degree n with mrpf(P) = 1.
inline MotionPolynomial random_motion_without_reduction(RandomSource& rs, int n) {
  while (true) {
    DualQuatPoly c = rs.monic_motion(n);
    if (c.primal.degree() == n && mrpf(c.primal).is_one()) return validate(c);
  }
}

// Input of the exceptional construction for one seed: monic R + eps E of
// degree 1 or 2 (a monic seed of degree 0 is the identity) and H of degree 1 or 2.
struct ExceptionalCase {
  QuatPoly r, e, h;
  MotionPolynomial motion;
};

inline ExceptionalCase random_exceptional_case(std::uint64_t seed) {
  RandomSource rs(seed * 7919 + 17);
  int seed_deg = static_cast<int>(rs.integer(1, 2));
  int h_deg = static_cast<int>(rs.integer(1, 2));
  DualQuatPoly seed_motion = rs.monic_motion(seed_deg, 4);
  QuatPoly h = rs.quat_poly(h_deg, 3);
  MotionPolynomial m = construct::exceptional(seed_motion.primal, seed_motion.dual, h);
  return {seed_motion.primal, seed_motion.dual, h, m};
}

// Random expression tree over the motion grammar.
inline Expr random_expr(RandomSource& rs, int depth) {
  using K = Expr::Kind;
  if (depth <= 0 || rs.integer(0, 3) == 0) {
    switch (rs.integer(0, 5)) {
      case 0: {
        Rational v{mpz_class(rs.integer(0, 9)), mpz_class(rs.integer(1, 4))};
        v.canonicalize();
        return Expr::number(v);
      }
      case 1:
        return Expr::atom(K::T);
      case 2:
        return Expr::atom(K::I);
      case 3:
        return Expr::atom(K::J);
      case 4:
        return Expr::atom(K::K);
      default:
        return Expr::atom(K::Eps);
    }
  }
  switch (rs.integer(0, 4)) {
    case 0:
      return Expr::unary(K::Neg, random_expr(rs, depth - 1));
    case 1:
      return Expr::binary(K::Add, random_expr(rs, depth - 1), random_expr(rs, depth - 1));
    case 2:
      return Expr::binary(K::Sub, random_expr(rs, depth - 1), random_expr(rs, depth - 1));
    case 3:
      return Expr::binary(K::Mul, random_expr(rs, depth - 1), random_expr(rs, depth - 1));
    default:
      return Expr::power(random_expr(rs, depth - 1), static_cast<unsigned>(rs.integer(0, 3)));
  }
}

// Exact null vector of the 5x6 conic system through five points (x, y), or
// empty when the points do not determine a unique conic.
inline std::vector<Rational> conic_through(const std::vector<std::pair<Rational, Rational>>& pts) {
  std::vector<std::vector<Rational>> a;
  for (const auto& [x, y] : pts) a.push_back({x * x, x * y, y * y, x, y, Rational(1)});
  const int rows = static_cast<int>(a.size()), cols = 6;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (int k = c + 1; k < cols; ++k) a[r][k] /= a[r][c];
    a[r][c] = 1;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r != cols - 1) return {};
  int free_col = 0;
  while (free_col < cols && std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Rational> v(cols, Rational(0));
  v[free_col] = 1;
  for (int i = 0; i < r; ++i) v[pivot_col[i]] = -a[i][free_col];
  return v;
}

inline Rational conic_value(const std::vector<Rational>& v, const Rational& x, const Rational& y) {
  return v[0] * x * x + v[1] * x * y + v[2] * y * y + v[3] * x + v[4] * y + v[5];
}

// Five trajectory points fix a conic, the sixth and seventh must lie on it.
// Returns false as soon as a check point is off the conic.
inline bool seven_point_conic_check(const MotionPolynomial& c, const ProjectivePoint3& pt,
                                    const std::vector<Rational>& params) {
  Trajectory traj = trajectory(c, pt);
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& t : params) {
    auto p = traj.at(t);
    if (!p || !p->is_affine()) continue;
    pts.emplace_back((*p)[1] / (*p)[0], (*p)[2] / (*p)[0]);
  }
  if (pts.size() < 7) throw PreconditionError("conic check needs seven affine points");
  auto conic = conic_through({pts.begin(), pts.begin() + 5});
  if (conic.empty()) return false;
  for (std::size_t i = 5; i < 7; ++i) {
    if (conic_value(conic, pts[i].first, pts[i].second) != 0) return false;
  }
  return true;
}

}  // namespace lowdeg::testing
