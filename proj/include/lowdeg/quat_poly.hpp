#pragma once

#include <array>
#include <iosfwd>
#include <utility>
#include <vector>

#include "lowdeg/quaternion.hpp"
#include "lowdeg/real_poly.hpp"

namespace lowdeg {

// Polynomial in H[t] with the indeterminate t commuting with all
// coefficients. Coefficient k multiplies t^k; trailing zeros are trimmed.
class QuatPoly {
public:
  QuatPoly() = default;
  explicit QuatPoly(std::vector<Quat> coeffs);
  QuatPoly(std::initializer_list<Quat> coeffs);
  // Real polynomial embedded as r(t) * 1.
  explicit QuatPoly(const RealPoly& r);

  static QuatPoly constant(const Quat& q);
  static QuatPoly from_components(const std::array<RealPoly, 4>& comps);
  // t - r
  static QuatPoly linear(const Quat& r);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Quat>& coeffs() const { return coeffs_; }
  Quat coeff(int k) const;
  const Quat& leading() const;

  // Component polynomial: 0 -> scalar, 1 -> i, 2 -> j, 3 -> k.
  RealPoly component(int idx) const;
  std::array<RealPoly, 4> components() const;

  QuatPoly conj() const;
  // P * conj(P), always real.
  RealPoly norm_poly() const;
  bool is_real() const;

  Quat operator()(const Rational& t) const;
  // Evaluation at a central complex scalar.
  ComplexQuat eval(Complex t) const;

  QuatPoly operator-() const;
  QuatPoly& operator+=(const QuatPoly& o);
  QuatPoly& operator-=(const QuatPoly& o);

  friend QuatPoly operator+(QuatPoly a, const QuatPoly& b) { return a += b; }
  friend QuatPoly operator-(QuatPoly a, const QuatPoly& b) { return a -= b; }
  friend QuatPoly operator*(const QuatPoly& a, const QuatPoly& b);
  friend QuatPoly operator*(const Quat& a, const QuatPoly& b);
  friend QuatPoly operator*(const QuatPoly& a, const Quat& b);
  friend QuatPoly operator*(const RealPoly& a, const QuatPoly& b);
  friend QuatPoly operator*(const QuatPoly& a, const RealPoly& b) { return b * a; }
  friend bool operator==(const QuatPoly& a, const QuatPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
  void trim();
  std::vector<Quat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QuatPoly& p);

inline QuatPoly pmul(const QuatPoly& a, const QuatPoly& b) { return a * b; }

// sum p_l q^l with the powers of q written to the right of the coefficients.
template <typename S>
Quaternion<S> right_eval(const QuatPoly& p, const Quaternion<S>& q) {
  Quaternion<S> acc;
  Quaternion<S> power(S(1));
  for (const Quat& c : p.coeffs()) {
    acc += convert<S>(c) * power;
    power = power * q;
  }
  return acc;
}

struct QuotRem {
  QuatPoly quot;
  QuatPoly rem;
};

// A = quot * B + rem with deg rem < deg B.
QuotRem right_divide(const QuatPoly& a, const QuatPoly& b);

// True when b is a right factor of a.
bool right_divides(const QuatPoly& b, const QuatPoly& a);

// Monic greatest common right divisor.
QuatPoly gcrd(const QuatPoly& a, const QuatPoly& b);

// Left-multiplies by the inverse of the leading coefficient.
QuatPoly make_monic(const QuatPoly& p);

// Monic gcd of the four component polynomials.
RealPoly mrpf(const QuatPoly& p);

// P / r for a real polynomial r dividing every component.
QuatPoly divide_real(const QuatPoly& p, const RealPoly& r);

// Linear right factor t - r of G whose norm is the given exact quadratic.
QuatPoly extract_right_factor(const QuatPoly& g, const QuadraticFactor& q);

// Polynomial in DH[t]: primal + eps * dual.
struct DualQuatPoly {
  QuatPoly primal;
  QuatPoly dual;

  int degree() const { return std::max(primal.degree(), dual.degree()); }
  bool is_zero() const { return primal.is_zero() && dual.is_zero(); }
  DualQuatPoly conj() const { return {primal.conj(), dual.conj()}; }
  DualQuaternion coeff(int k) const { return {primal.coeff(k), dual.coeff(k)}; }
  DualQuaternion operator()(const Rational& t) const { return {primal(t), dual(t)}; }
  // The eight real component polynomials, primal first.
  std::array<RealPoly, 8> components() const;
  // Real part and eps part of the dual norm polynomial.
  std::pair<RealPoly, QuatPoly> norm_poly() const;

  friend DualQuatPoly operator+(const DualQuatPoly& a, const DualQuatPoly& b) {
    return {a.primal + b.primal, a.dual + b.dual};
  }
  friend DualQuatPoly operator-(const DualQuatPoly& a, const DualQuatPoly& b) {
    return {a.primal - b.primal, a.dual - b.dual};
  }
  friend DualQuatPoly operator*(const DualQuatPoly& a, const DualQuatPoly& b) {
    return {a.primal * b.primal, a.primal * b.dual + a.dual * b.primal};
  }
  friend bool operator==(const DualQuatPoly& a, const DualQuatPoly& b) {
    return a.primal == b.primal && a.dual == b.dual;
  }
};

// P conj(D) + D conj(P).
QuatPoly study_defect(const DualQuatPoly& c);

// Substitutes t -> (alpha t + beta) / (gamma t + delta) and clears the
// denominator with (gamma t + delta)^deg C.
DualQuatPoly reparameterize(const DualQuatPoly& c, const Rational& alpha, const Rational& beta,
                            const Rational& gamma, const Rational& delta);

// Vector of degree-n coefficients.
DualQuaternion eval_at_infinity(const DualQuatPoly& c);

}  // namespace lowdeg
