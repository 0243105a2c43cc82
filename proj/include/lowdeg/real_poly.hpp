#pragma once

#include <complex>
#include <iosfwd>
#include <utility>
#include <vector>

#include "lowdeg/rational.hpp"

namespace lowdeg {

using Complex = std::complex<double>;

// Univariate polynomial over the rationals. Coefficients are indexed by the
// power of t and trailing zeros are always trimmed, so the zero polynomial
// has an empty coefficient list and degree -1.
class RealPoly {
public:
  RealPoly() = default;
  explicit RealPoly(std::vector<Rational> coeffs);
  RealPoly(std::initializer_list<Rational> coeffs);

  static RealPoly constant(const Rational& c);
  static RealPoly monomial(const Rational& c, int degree);
  // alpha*t + beta
  static RealPoly linear(const Rational& alpha, const Rational& beta);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const;

  RealPoly monic() const;
  RealPoly derivative() const;
  RealPoly pow(unsigned e) const;

  Rational operator()(const Rational& t) const;
  Complex eval(Complex t) const;

  RealPoly operator-() const;
  RealPoly& operator+=(const RealPoly& o);
  RealPoly& operator-=(const RealPoly& o);
  RealPoly& operator*=(const Rational& s);

  friend RealPoly operator+(RealPoly a, const RealPoly& b) { return a += b; }
  friend RealPoly operator-(RealPoly a, const RealPoly& b) { return a -= b; }
  friend RealPoly operator*(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator*(RealPoly a, const Rational& s) { return a *= s; }
  friend RealPoly operator*(const Rational& s, RealPoly a) { return a *= s; }
  friend bool operator==(const RealPoly& a, const RealPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RealPoly& p);

// Euclidean division a = q*b + r, deg r < deg b. Throws PreconditionError if b = 0.
std::pair<RealPoly, RealPoly> divmod(const RealPoly& a, const RealPoly& b);

// Exact quotient; throws InconsistencyError when b does not divide a.
RealPoly exact_div(const RealPoly& a, const RealPoly& b);

bool divides(const RealPoly& d, const RealPoly& a);

// Monic gcd. gcd(a, 0) = monic(a); both zero throws PreconditionError("gcd undefined").
RealPoly real_gcd(const RealPoly& a, const RealPoly& b);

// Largest k such that d^k divides a (a nonzero, deg d >= 1).
int multiplicity(const RealPoly& d, const RealPoly& a);

// Monic square-free parts with their multiplicity, p = lc * prod s_i^i.
std::vector<std::pair<RealPoly, int>> square_free_decomposition(const RealPoly& p);

// Monic t^2 + p t + q with negative discriminant. `numeric` marks a factor
// whose rational identity could not be confirmed by exact trial division; its
// p and q then hold the exact binary values of the double approximations.
struct QuadraticFactor {
  Rational p;
  Rational q;
  int multiplicity = 1;
  bool numeric = false;

  RealPoly poly() const { return RealPoly{q, p, Rational(1)}; }
  Rational discriminant() const { return p * p - 4 * q; }
};

// t - root, with the same `numeric` convention as QuadraticFactor.
struct LinearFactor {
  Rational root;
  int multiplicity = 1;
  bool numeric = false;

  RealPoly poly() const { return RealPoly{Rational(-root), Rational(1)}; }
};

struct RealFactorization {
  Rational leading;
  std::vector<LinearFactor> linear;
  std::vector<QuadraticFactor> quadratics;

  bool exact() const;
  // leading * prod factors^multiplicity.
  RealPoly expand() const;
};

// Exact square-free decomposition, exact splitting of degree <= 2 parts,
// numeric splitting of higher-degree parts confirmed by exact trial division
// wherever the candidate rounds to rationals with denominator <= 10^6.
RealFactorization factor_real(const RealPoly& p);

// Roots of t^2 + p t + q, positive imaginary part first.
std::pair<Complex, Complex> quadratic_roots(const QuadraticFactor& q);

}  // namespace lowdeg
