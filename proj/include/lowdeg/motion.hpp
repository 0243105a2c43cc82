#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "lowdeg/quat_poly.hpp"

namespace lowdeg {

// The polynomial Study condition fails; carries the defect P conj(D) + D conj(P).
class StudyViolation : public Error {
public:
  explicit StudyViolation(QuatPoly defect);
  const QuatPoly& defect() const noexcept { return defect_; }

private:
  QuatPoly defect_;
};

// The primal part has a vanishing norm polynomial (primal part zero).
class NullNorm : public Error {
public:
  NullNorm() : Error("norm polynomial of the primal part vanishes") {}
};

// A dual-quaternion polynomial known to satisfy the polynomial Study
// condition with nonzero primal norm. Only `validate` creates one.
class MotionPolynomial {
public:
  const DualQuatPoly& poly() const { return poly_; }
  const QuatPoly& primal() const { return poly_.primal; }
  const QuatPoly& dual() const { return poly_.dual; }
  int degree() const { return poly_.degree(); }
  bool is_reduced() const { return reduced_; }
  bool is_monic() const { return monic_; }

  friend bool operator==(const MotionPolynomial& a, const MotionPolynomial& b) { return a.poly_ == b.poly_; }

private:
  friend MotionPolynomial validate(DualQuatPoly c);
  explicit MotionPolynomial(DualQuatPoly c);

  DualQuatPoly poly_;
  bool reduced_ = false;
  bool monic_ = false;
};

// Throws StudyViolation or NullNorm.
MotionPolynomial validate(DualQuatPoly c);

// Monic gcd of the eight component polynomials.
RealPoly content(const DualQuatPoly& c);

// Divides out the real content.
MotionPolynomial reduce(const MotionPolynomial& c);

// What `make_monic` did to reach the monic form.
struct MonicRecord {
  // (alpha, beta, gamma, delta) of the parameter transformation, if one was needed.
  std::optional<std::array<Rational, 4>> reparameterization;
  // The dual quaternion multiplied from the left (inverse of the leading coefficient).
  DualQuaternion left_factor{Quat(Rational(1))};
};

// Leading coefficient 1. When the primal part has lower degree than the
// motion, first applies t -> (s t - 1) / t for the first s in 0, 1, -1, 2, -2, ...
// that makes the leading coefficient invertible, then multiplies from the left
// with the inverse of the leading coefficient.
MotionPolynomial make_monic(const MotionPolynomial& c, MonicRecord* record = nullptr);

// reduce followed by make_monic (and a final reduce).
MotionPolynomial normal_form(const MotionPolynomial& c, RealPoly* removed_content = nullptr,
                             MonicRecord* record = nullptr);

// Conjugate motion polynomial; swaps fixed and moving frame.
MotionPolynomial inverse(const MotionPolynomial& c);

// Homogeneous coordinate polynomials of the curve traced by one point.
struct Trajectory {
  std::array<RealPoly, 4> coords;
  ProjectivePoint3 source;

  // Real content of the four coordinates.
  RealPoly content() const;
  // Coordinates with the content divided out.
  std::array<RealPoly, 4> reduced() const;
  // Degree of the reduced representation.
  int degree() const;
  // Point at an exact parameter, or nullopt when all coordinates vanish there.
  std::optional<ProjectivePoint3> at(const Rational& t) const;
};

// x0 norm(P) + P x conj(P) + 2 x0 P conj(D).
Trajectory trajectory(const MotionPolynomial& c, const ProjectivePoint3& pt);

int trajectory_degree(const MotionPolynomial& c, const ProjectivePoint3& pt);

// Pseudorandom affine point with numerators and denominators drawn from
// [-97, 97] \ {0}. Depends only on (seed, trial).
ProjectivePoint3 sample_point(std::uint64_t seed, std::uint64_t trial);

// Max trajectory degree over `trials` sampled points.
int generic_degree_oracle(const MotionPolynomial& c, int trials, std::uint64_t seed);

}  // namespace lowdeg
