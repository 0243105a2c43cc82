#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lowdeg/motion.hpp"

namespace lowdeg {

// Absolute tolerance for residuals and projective coincidence, applied after
// scaling each evaluated quaternion to unit max-component.
inline constexpr double kRulingTolerance = 1e-8;

// Witness that [Q(z)] and [D(z)] lie on a left ruling of the null quadric.
struct RulingCertificate {
  QuadraticFactor quadratic;  // factor (t - z)(t - conj z) of c
  int multiplicity = 1;       // mu: exceptional reduction 2*mu
  Complex z;
  double left_ruling_residual = 0.0;  // |Q(z) conj(D)(z)| after normalization
  bool coincident = false;            // [Q(z)] = [D(z)]
  // Numeric residual above tolerance although the exact test passed.
  bool ill_conditioned = false;
};

struct OrdinaryReduction {
  RealPoly c;  // mrpf(P)
  QuatPoly q;  // P / c
  int m = 0;
};

struct ExceptionalReduction {
  int e = 0;
  RealPoly g;  // gcd(c, mrpf(Q conj(D)))
};

struct DegreeReport {
  explicit DegreeReport(MotionPolynomial normal) : motion(std::move(normal)) {}

  int n = 0;
  int m = 0;
  int e = 0;
  int predicted = 0;
  RealPoly c;
  RealPoly common_gcd;
  std::vector<RulingCertificate> certificates;
  std::optional<QuatPoly> algebraic_factor;
  std::optional<int> oracle_degree;
  std::optional<std::uint64_t> oracle_seed;
  std::optional<int> oracle_trials;

  // Normal form actually analyzed and how it was reached from the input.
  MotionPolynomial motion;
  RealPoly removed_content;
  MonicRecord monic;
  std::vector<std::string> warnings;
};

struct OracleOptions {
  int trials = 8;
  std::uint64_t seed = 1;
};

// Raised when the sampling oracle disagrees with 2n - m - e.
class DegreeModelViolation : public InconsistencyError {
public:
  using InconsistencyError::InconsistencyError;
};

// All analysis entry points below expect a reduced monic motion; they
// normalize internally when given anything else.
OrdinaryReduction ordinary_reduction(const MotionPolynomial& c);
ExceptionalReduction exceptional_reduction(const MotionPolynomial& c);

// Full report: n, m, e, 2n - m - e, both certificates, and optionally the
// sampling oracle. Throws DegreeModelViolation on oracle mismatch.
DegreeReport predicted_degree(const MotionPolynomial& c, const std::optional<OracleOptions>& oracle = std::nullopt);

// Common right factor H of Q and D with norm(H) = gcd(c, content(Q conj(D))),
// or nullopt when e = 0.
std::optional<QuatPoly> algebraic_certificate(const MotionPolynomial& c);

std::vector<RulingCertificate> geometric_certificate(const MotionPolynomial& c);

// Line x + eps y with zero scalar parts, in Pluecker-quadric form.
template <typename S>
struct PlueckerLine {
  Quaternion<S> primal;
  Quaternion<S> dual;

  // x conj(y) + y conj(x).
  Quaternion<S> pluecker_defect() const { return primal * dual.conj() + dual * primal.conj(); }
};

namespace detail {

template <typename S>
bool proportional(const Quaternion<S>& a, const Quaternion<S>& b) {
  // All 2x2 minors vanish.
  double scale = a.scale() * b.scale();
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      S minor = a[i] * b[j] - a[j] * b[i];
      if (!ScalarTraits<S>::is_zero(minor, scale)) return false;
    }
  }
  return true;
}

}  // namespace detail

// a conj(b) - conj(a) b + eps (conj(a) b - b conj(a)).
template <typename S>
PlueckerLine<S> pluecker_line(const Quaternion<S>& a, const Quaternion<S>& b) {
  if (a.is_zero() || b.is_zero() || detail::proportional(a, b)) throw PreconditionError("line degenerate");
  return {a * b.conj() - a.conj() * b, a.conj() * b - b * a.conj()};
}

// True iff the line is projectively x - eps x with scalar(x) = 0 and norm(x) = 0.
// Floating-point data is compared at kRulingTolerance after scaling.
template <typename S>
bool on_left_ruling_conic(const PlueckerLine<S>& l) {
  if (l.primal.is_zero()) return false;
  const double s = l.primal.scale();
  const Quaternion<S> x = l.primal * S(1.0 / s);
  const Quaternion<S> y = l.dual * S(1.0 / s);
  auto small = [](const S& v) { return ScalarTraits<S>::magnitude(v) < kRulingTolerance; };
  for (int i = 0; i < 4; ++i) {
    if (!small(S(x[i] + y[i]))) return false;
  }
  return small(x.w) && small(x.norm());
}

template <>
bool on_left_ruling_conic<Rational>(const PlueckerLine<Rational>& l);

// For every certificate at root z, [conj(Q)(z)] and [conj(D)(z)] satisfy the
// right-ruling condition. Throws PreconditionError when there is no certificate.
bool ruling_swap_check(const MotionPolynomial& c);

}  // namespace lowdeg
