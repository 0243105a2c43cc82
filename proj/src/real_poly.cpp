#include "lowdeg/real_poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "lowdeg/errors.hpp"

namespace lowdeg {

RealPoly::RealPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RealPoly::RealPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RealPoly RealPoly::constant(const Rational& c) { return RealPoly(std::vector<Rational>{c}); }

RealPoly RealPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RealPoly(std::move(v));
}

RealPoly RealPoly::linear(const Rational& alpha, const Rational& beta) {
  return RealPoly{beta, alpha};
}

void RealPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RealPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& RealPoly::leading() const {
  if (is_zero()) throw PreconditionError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

RealPoly RealPoly::monic() const {
  if (is_zero()) return {};
  RealPoly out = *this;
  Rational inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

RealPoly RealPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RealPoly(std::move(d));
}

RealPoly RealPoly::pow(unsigned e) const {
  RealPoly out = constant(1);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

Rational RealPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Complex RealPoly::eval(Complex t) const {
  Complex acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

RealPoly RealPoly::operator-() const {
  RealPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RealPoly& RealPoly::operator+=(const RealPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

RealPoly& RealPoly::operator-=(const RealPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

RealPoly& RealPoly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

RealPoly operator*(const RealPoly& a, const RealPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RealPoly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const RealPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    bool show = a != 1 || k == 0;
    if (show) os << a.get_str();
    if (k > 0) os << (show ? "*" : "") << "t" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return os;
}

std::pair<RealPoly, RealPoly> divmod(const RealPoly& a, const RealPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {RealPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1);
  Rational inv = 1 / b.leading();
  for (int k = da; k >= db; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] * inv;
    quot[static_cast<std::size_t>(k - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {RealPoly(std::move(quot)), RealPoly(std::move(rem))};
}

RealPoly exact_div(const RealPoly& a, const RealPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InconsistencyError("exact_div: nonzero remainder");
  return q;
}

bool divides(const RealPoly& d, const RealPoly& a) { return divmod(a, d).second.is_zero(); }

RealPoly real_gcd(const RealPoly& a, const RealPoly& b) {
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd undefined");
  RealPoly x = a.monic();
  RealPoly y = b.monic();
  while (!y.is_zero()) {
    RealPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

int multiplicity(const RealPoly& d, const RealPoly& a) {
  if (a.is_zero() || d.degree() < 1) throw PreconditionError("multiplicity: need a != 0, deg d >= 1");
  int k = 0;
  RealPoly cur = a;
  while (true) {
    auto [q, r] = divmod(cur, d);
    if (!r.is_zero()) return k;
    cur = std::move(q);
    ++k;
  }
}

std::vector<std::pair<RealPoly, int>> square_free_decomposition(const RealPoly& p) {
  if (p.is_zero()) throw PreconditionError("square-free decomposition of zero");
  std::vector<std::pair<RealPoly, int>> out;
  RealPoly f = p.monic();
  if (f.degree() == 0) return out;
  // Yun's algorithm.
  RealPoly fp = f.derivative();
  RealPoly a = real_gcd(f, fp);
  RealPoly b = exact_div(f, a);
  RealPoly c = exact_div(fp, a);
  RealPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RealPoly g = real_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

bool RealFactorization::exact() const {
  return std::none_of(linear.begin(), linear.end(), [](const auto& f) { return f.numeric; }) &&
         std::none_of(quadratics.begin(), quadratics.end(), [](const auto& f) { return f.numeric; });
}

RealPoly RealFactorization::expand() const {
  RealPoly out = RealPoly::constant(leading);
  for (const auto& f : linear) out = out * f.poly().pow(static_cast<unsigned>(f.multiplicity));
  for (const auto& f : quadratics) out = out * f.poly().pow(static_cast<unsigned>(f.multiplicity));
  return out;
}

namespace {

constexpr long kDenominatorBound = 1000000;

// Roots of a square-free polynomial: companion eigenvalues polished by Newton.
std::vector<Complex> numeric_roots(const RealPoly& s) {
  RealPoly m = s.monic();
  const int n = m.degree();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -m.coeff(i).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << m;
    throw FactorizationError("numeric root finder did not converge", os.str());
  }
  RealPoly dm = m.derivative();
  std::vector<Complex> roots;
  for (int i = 0; i < n; ++i) {
    std::complex<long double> z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int it = 0; it < 8; ++it) {
      std::complex<long double> f = 0, df = 0;
      for (int k = n; k >= 0; --k) f = f * z + static_cast<long double>(m.coeff(k).get_d());
      for (int k = n - 1; k >= 0; --k) df = df * z + static_cast<long double>(dm.coeff(k).get_d());
      if (std::abs(df) == 0.0L) break;
      auto step = f / df;
      z -= step;
      if (std::abs(step) <= 1e-18L * (1.0L + std::abs(z))) break;
    }
    roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  for (const auto& r : roots) {
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
      std::ostringstream os;
      os << m;
      throw FactorizationError("numeric root finder produced non-finite roots", os.str());
    }
  }
  return roots;
}

bool is_real_root(const Complex& z) { return std::abs(z.imag()) <= 1e-7 * (1.0 + std::abs(z)); }

// Exact split of a monic square-free polynomial of degree 1 or 2.
void split_small(const RealPoly& s, int mult, RealFactorization& out) {
  if (s.degree() == 1) {
    out.linear.push_back({Rational(-s.coeff(0)), mult, false});
    return;
  }
  QuadraticFactor qf{s.coeff(1), s.coeff(0), mult, false};
  Rational disc = qf.discriminant();
  if (disc < 0) {
    out.quadratics.push_back(qf);
    return;
  }
  if (is_rational_square(disc)) {
    Rational root = rational_sqrt(disc);
    out.linear.push_back({Rational((-qf.p + root) / 2), mult, false});
    out.linear.push_back({Rational((-qf.p - root) / 2), mult, false});
    return;
  }
  double sq = std::sqrt(disc.get_d());
  double p = qf.p.get_d();
  out.linear.push_back({Rational((-p + sq) / 2), mult, true});
  out.linear.push_back({Rational((-p - sq) / 2), mult, true});
}

void split_square_free(RealPoly s, int mult, RealFactorization& out) {
  if (s.degree() <= 2) {
    split_small(s, mult, out);
    return;
  }
  for (const Complex& z : numeric_roots(s)) {
    if (s.degree() <= 2) break;
    if (is_real_root(z)) {
      Rational r = best_rational(z.real(), kDenominatorBound);
      RealPoly lin{Rational(-r), Rational(1)};
      auto [quot, rem] = divmod(s, lin);
      if (rem.is_zero()) {
        out.linear.push_back({r, mult, false});
        s = quot;
      }
    } else if (z.imag() > 0) {
      Rational p = best_rational(-2 * z.real(), kDenominatorBound);
      Rational q = best_rational(std::norm(z), kDenominatorBound);
      QuadraticFactor qf{p, q, mult, false};
      if (qf.discriminant() >= 0) continue;
      auto [quot, rem] = divmod(s, qf.poly());
      if (rem.is_zero()) {
        out.quadratics.push_back(qf);
        s = quot;
      }
    }
  }
  if (s.degree() <= 0) return;
  if (s.degree() <= 2) {
    split_small(s, mult, out);
    return;
  }
  for (const Complex& z : numeric_roots(s)) {
    if (is_real_root(z)) {
      out.linear.push_back({Rational(z.real()), mult, true});
    } else if (z.imag() > 0) {
      out.quadratics.push_back({Rational(-2 * z.real()), Rational(std::norm(z)), mult, true});
    }
  }
}

}  // namespace

RealFactorization factor_real(const RealPoly& p) {
  if (p.is_zero()) throw PreconditionError("factor_real of zero polynomial");
  RealFactorization out;
  out.leading = p.leading();
  for (auto& [part, mult] : square_free_decomposition(p)) split_square_free(part, mult, out);
  return out;
}

std::pair<Complex, Complex> quadratic_roots(const QuadraticFactor& q) {
  if (q.discriminant() >= 0) throw PreconditionError("quadratic_roots: discriminant must be negative");
  double p = q.p.get_d();
  double im = std::sqrt(4 * q.q.get_d() - p * p) / 2;
  Complex z(-p / 2, im);
  return {z, std::conj(z)};
}

}  // namespace lowdeg
