#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>

#include "lowdeg/errors.hpp"
#include "lowdeg/rational.hpp"

namespace lowdeg {

// Scalar semantics used by the generic quaternion: exact zero tests for
// rationals, a scale-relative tolerance for floating point.
template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static bool is_zero(const Rational& v, double /*scale*/ = 1.0) { return v == 0; }
  static double magnitude(const Rational& v) { return std::abs(v.get_d()); }
  static Rational from(const Rational& r) { return r; }
};

template <>
struct ScalarTraits<double> {
  static bool is_zero(double v, double scale = 1.0) { return std::abs(v) <= 1e-12 * scale; }
  static double magnitude(double v) { return std::abs(v); }
  static double from(const Rational& r) { return r.get_d(); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static bool is_zero(const std::complex<double>& v, double scale = 1.0) {
    return std::abs(v) <= 1e-12 * scale;
  }
  static double magnitude(const std::complex<double>& v) { return std::abs(v); }
  static std::complex<double> from(const Rational& r) { return {r.get_d(), 0.0}; }
};

// q = w + x i + y j + z k over the scalar type S, with i^2 = j^2 = k^2 = ijk = -1.
template <typename S>
struct Quaternion {
  S w{}, x{}, y{}, z{};

  Quaternion() = default;
  Quaternion(S w_, S x_, S y_, S z_) : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  // Scalar embedding.
  Quaternion(S scalar) : w(std::move(scalar)) {}  // NOLINT(google-explicit-constructor)

  static Quaternion unit_i() { return {S(0), S(1), S(0), S(0)}; }
  static Quaternion unit_j() { return {S(0), S(0), S(1), S(0)}; }
  static Quaternion unit_k() { return {S(0), S(0), S(0), S(1)}; }

  S& operator[](int idx) { return idx == 0 ? w : idx == 1 ? x : idx == 2 ? y : z; }
  const S& operator[](int idx) const { return idx == 0 ? w : idx == 1 ? x : idx == 2 ? y : z; }

  Quaternion conj() const { return {w, S(-x), S(-y), S(-z)}; }
  S norm() const { return S(w * w + x * x + y * y + z * z); }
  Quaternion scalar_part() const { return Quaternion(w); }
  Quaternion vector_part() const { return {S(0), x, y, z}; }

  // Largest component magnitude; the reference scale for tolerances.
  double scale() const {
    return std::max({ScalarTraits<S>::magnitude(w), ScalarTraits<S>::magnitude(x),
                     ScalarTraits<S>::magnitude(y), ScalarTraits<S>::magnitude(z)});
  }

  bool is_zero() const {
    return ScalarTraits<S>::is_zero(w) && ScalarTraits<S>::is_zero(x) && ScalarTraits<S>::is_zero(y) &&
           ScalarTraits<S>::is_zero(z);
  }

  Quaternion operator-() const { return {S(-w), S(-x), S(-y), S(-z)}; }
  Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  Quaternion& operator*=(const S& s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(Quaternion a, const S& s) { return a *= s; }
  friend Quaternion operator*(const S& s, Quaternion a) { return a *= s; }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {S(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z), S(a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y),
            S(a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x), S(a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w)};
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

using Quat = Quaternion<Rational>;
using ComplexQuat = Quaternion<std::complex<double>>;

template <typename S>
Quaternion<S> convert(const Quat& q) {
  return {ScalarTraits<S>::from(q.w), ScalarTraits<S>::from(q.x), ScalarTraits<S>::from(q.y),
          ScalarTraits<S>::from(q.z)};
}

template <typename S>
bool norm_vanishes(const Quaternion<S>& a) {
  double s = a.scale();
  return ScalarTraits<S>::is_zero(a.norm(), s * s);
}

// conj(a) / norm(a). Throws NotInvertible for zero divisors.
template <typename S>
Quaternion<S> qinv(const Quaternion<S>& a) {
  if (a.is_zero() || norm_vanishes(a)) throw NotInvertible("not invertible");
  S n = a.norm();
  S inv = S(1) / n;
  return a.conj() * inv;
}

// Zero divisors of complex quaternions: nonzero points of the null quadric.
template <typename S>
bool is_zero_divisor(const Quaternion<S>& a) {
  if (a.is_zero()) throw PreconditionError("is_zero_divisor: zero quaternion");
  return norm_vanishes(a);
}

// Rescales a numeric quaternion so its largest component has modulus 1.
template <typename S>
Quaternion<S> normalized_max(const Quaternion<S>& a) {
  double s = a.scale();
  if (s == 0) return a;
  return a * S(1.0 / s);
}

std::ostream& operator<<(std::ostream& os, const Quat& q);
std::ostream& operator<<(std::ostream& os, const ComplexQuat& q);

// p + eps d with eps^2 = 0.
struct DualQuaternion {
  Quat primal;
  Quat dual;

  DualQuaternion() = default;
  DualQuaternion(Quat p, Quat d = Quat()) : primal(std::move(p)), dual(std::move(d)) {}  // NOLINT

  DualQuaternion conj() const { return {primal.conj(), dual.conj()}; }
  bool is_zero() const { return primal.is_zero() && dual.is_zero(); }

  friend DualQuaternion operator+(const DualQuaternion& a, const DualQuaternion& b) {
    return {a.primal + b.primal, a.dual + b.dual};
  }
  friend DualQuaternion operator-(const DualQuaternion& a, const DualQuaternion& b) {
    return {a.primal - b.primal, a.dual - b.dual};
  }
  friend DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
    return {a.primal * b.primal, a.primal * b.dual + a.dual * b.primal};
  }
  friend bool operator==(const DualQuaternion& a, const DualQuaternion& b) {
    return a.primal == b.primal && a.dual == b.dual;
  }
};

// Dual number a + eps b; the value of the dual quaternion norm.
struct DualNumber {
  Rational real;
  Rational eps;
  friend bool operator==(const DualNumber& a, const DualNumber& b) { return a.real == b.real && a.eps == b.eps; }
};

// g * conj(g) = norm(p) + eps (p conj(d) + d conj(p)).
DualNumber dual_norm(const DualQuaternion& g);

// p conj(d) + d conj(p); zero iff g lies on the Study quadric.
Quat study_defect(const DualQuaternion& g);

// Zero primal part (points of the exceptional generator).
bool is_zero_divisor(const DualQuaternion& g);

// (p + eps d)^-1 = p^-1 - eps p^-1 d p^-1. Throws NotInvertible when p = 0.
DualQuaternion qinv(const DualQuaternion& g);

// Point of real projective 3-space, embedded as x0 + x1 i + x2 j + x3 k.
class ProjectivePoint3 {
public:
  ProjectivePoint3(Rational x0, Rational x1, Rational x2, Rational x3);
  explicit ProjectivePoint3(const Quat& q);

  const std::array<Rational, 4>& coords() const { return c_; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Quat as_quaternion() const { return {c_[0], c_[1], c_[2], c_[3]}; }
  // Representative with first nonzero coordinate 1.
  ProjectivePoint3 normalized() const;
  bool is_affine() const { return c_[0] != 0; }

  friend bool operator==(const ProjectivePoint3& a, const ProjectivePoint3& b) {
    return a.normalized().c_ == b.normalized().c_;
  }

private:
  std::array<Rational, 4> c_;
};

std::ostream& operator<<(std::ostream& os, const ProjectivePoint3& p);

// [p (x0 + x) conj(p) + 2 x0 p conj(d)]. Throws NotInvertible("singular displacement") when p = 0.
ProjectivePoint3 act_on_point(const DualQuaternion& g, const ProjectivePoint3& pt);

}  // namespace lowdeg
