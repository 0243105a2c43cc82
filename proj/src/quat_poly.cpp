#include "lowdeg/quat_poly.hpp"

#include <ostream>

namespace lowdeg {

QuatPoly::QuatPoly(std::vector<Quat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QuatPoly::QuatPoly(std::initializer_list<Quat> coeffs) : coeffs_(coeffs) { trim(); }

QuatPoly::QuatPoly(const RealPoly& r) {
  coeffs_.reserve(r.coeffs().size());
  for (const auto& c : r.coeffs()) coeffs_.emplace_back(c);
}

QuatPoly QuatPoly::constant(const Quat& q) { return QuatPoly(std::vector<Quat>{q}); }

QuatPoly QuatPoly::from_components(const std::array<RealPoly, 4>& comps) {
  int deg = -1;
  for (const auto& c : comps) deg = std::max(deg, c.degree());
  std::vector<Quat> v(static_cast<std::size_t>(deg + 1));
  for (int k = 0; k <= deg; ++k) {
    for (int idx = 0; idx < 4; ++idx) v[static_cast<std::size_t>(k)][idx] = comps[static_cast<std::size_t>(idx)].coeff(k);
  }
  return QuatPoly(std::move(v));
}

QuatPoly QuatPoly::linear(const Quat& r) { return QuatPoly{-r, Quat(Rational(1))}; }

void QuatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Quat QuatPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

const Quat& QuatPoly::leading() const {
  if (is_zero()) throw PreconditionError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

RealPoly QuatPoly::component(int idx) const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c[idx]);
  return RealPoly(std::move(v));
}

std::array<RealPoly, 4> QuatPoly::components() const {
  return {component(0), component(1), component(2), component(3)};
}

QuatPoly QuatPoly::conj() const {
  QuatPoly out = *this;
  for (auto& c : out.coeffs_) c = c.conj();
  return out;
}

RealPoly QuatPoly::norm_poly() const {
  QuatPoly n = *this * conj();
  if (!n.is_real()) throw InconsistencyError("norm polynomial has a vector part");
  return n.component(0);
}

bool QuatPoly::is_real() const {
  for (const auto& c : coeffs_) {
    if (c.x != 0 || c.y != 0 || c.z != 0) return false;
  }
  return true;
}

Quat QuatPoly::operator()(const Rational& t) const {
  Quat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

ComplexQuat QuatPoly::eval(Complex t) const {
  ComplexQuat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + convert<Complex>(*it);
  return acc;
}

QuatPoly QuatPoly::operator-() const {
  QuatPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QuatPoly& QuatPoly::operator+=(const QuatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

QuatPoly& QuatPoly::operator-=(const QuatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

QuatPoly operator*(const QuatPoly& a, const QuatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Quat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QuatPoly(std::move(out));
}

QuatPoly operator*(const Quat& a, const QuatPoly& b) {
  QuatPoly out = b;
  for (auto& c : out.coeffs_) c = a * c;
  out.trim();
  return out;
}

QuatPoly operator*(const QuatPoly& a, const Quat& b) {
  QuatPoly out = a;
  for (auto& c : out.coeffs_) c = c * b;
  out.trim();
  return out;
}

QuatPoly operator*(const RealPoly& a, const QuatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Quat> out(a.coeffs().size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Rational& s = a.coeffs()[i];
    if (s == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += b.coeffs_[j] * s;
  }
  return QuatPoly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const QuatPoly& p) {
  if (p.is_zero()) return os << "0";
  for (int k = p.degree(); k >= 0; --k) {
    os << p.coeff(k) << "*t^" << k << (k > 0 ? " + " : "");
  }
  return os;
}

QuotRem right_divide(const QuatPoly& a, const QuatPoly& b) {
  if (b.is_zero()) throw PreconditionError("right_divide: zero divisor polynomial");
  const int db = b.degree();
  Quat lead_inv = qinv(b.leading());
  std::vector<Quat> rem = a.coeffs();
  if (a.degree() < db) return {QuatPoly{}, a};
  std::vector<Quat> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    Quat q = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (q.is_zero()) continue;
    quot[static_cast<std::size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {QuatPoly(std::move(quot)), QuatPoly(std::move(rem))};
}

bool right_divides(const QuatPoly& b, const QuatPoly& a) { return right_divide(a, b).rem.is_zero(); }

QuatPoly make_monic(const QuatPoly& p) {
  if (p.is_zero()) return {};
  return qinv(p.leading()) * p;
}

QuatPoly gcrd(const QuatPoly& a, const QuatPoly& b) {
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcrd undefined for two zero polynomials");
  QuatPoly x = make_monic(a);
  QuatPoly y = make_monic(b);
  while (!y.is_zero()) {
    QuatPoly r = make_monic(right_divide(x, y).rem);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

RealPoly mrpf(const QuatPoly& p) {
  if (p.is_zero()) throw PreconditionError("mrpf of zero polynomial");
  RealPoly g;
  for (int idx = 0; idx < 4; ++idx) {
    RealPoly c = p.component(idx);
    if (!c.is_zero()) g = g.is_zero() ? c.monic() : real_gcd(g, c);
  }
  return g;
}

QuatPoly divide_real(const QuatPoly& p, const RealPoly& r) {
  std::array<RealPoly, 4> comps;
  for (int idx = 0; idx < 4; ++idx) comps[static_cast<std::size_t>(idx)] = exact_div(p.component(idx), r);
  return QuatPoly::from_components(comps);
}

QuatPoly extract_right_factor(const QuatPoly& g, const QuadraticFactor& q) {
  if (q.numeric) throw PreconditionError("extract_right_factor needs an exact quadratic");
  if (q.discriminant() >= 0) throw PreconditionError("extract_right_factor: quadratic is not irreducible");
  if (g.is_zero() || !divides(q.poly(), g.norm_poly())) {
    throw PreconditionError("extract_right_factor: quadratic does not divide the norm polynomial");
  }
  QuatPoly rem = right_divide(g, QuatPoly(q.poly())).rem;
  Quat a = rem.coeff(1);
  Quat b = rem.coeff(0);
  if (a.is_zero()) {
    throw InconsistencyError(
        "non-generic: q divides G componentwise is impossible since mrpf(G)=1; signal internal inconsistency");
  }
  Quat r = -(qinv(a) * b);
  QuatPoly factor = QuatPoly::linear(r);
  if (!right_eval(g, r).is_zero() || factor.norm_poly() != q.poly()) {
    throw InconsistencyError("extract_right_factor: recovered factor does not verify");
  }
  return factor;
}

std::array<RealPoly, 8> DualQuatPoly::components() const {
  return {primal.component(0), primal.component(1), primal.component(2), primal.component(3),
          dual.component(0),   dual.component(1),   dual.component(2),   dual.component(3)};
}

std::pair<RealPoly, QuatPoly> DualQuatPoly::norm_poly() const {
  return {primal.norm_poly(), study_defect(*this)};
}

QuatPoly study_defect(const DualQuatPoly& c) {
  return c.primal * c.dual.conj() + c.dual * c.primal.conj();
}

DualQuatPoly reparameterize(const DualQuatPoly& c, const Rational& alpha, const Rational& beta,
                            const Rational& gamma, const Rational& delta) {
  if (alpha * delta - beta * gamma == 0) throw PreconditionError("singular parameter transformation");
  const int n = c.degree();
  if (n < 0) return c;
  RealPoly num = RealPoly::linear(alpha, beta);
  RealPoly den = RealPoly::linear(gamma, delta);
  std::vector<RealPoly> num_pow{RealPoly::constant(1)}, den_pow{RealPoly::constant(1)};
  for (int k = 1; k <= n; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  auto substitute = [&](const QuatPoly& p) {
    QuatPoly out;
    for (int k = 0; k <= p.degree(); ++k) {
      RealPoly basis = num_pow[static_cast<std::size_t>(k)] * den_pow[static_cast<std::size_t>(n - k)];
      out += basis * QuatPoly::constant(p.coeff(k));
    }
    return out;
  };
  return {substitute(c.primal), substitute(c.dual)};
}

DualQuaternion eval_at_infinity(const DualQuatPoly& c) {
  if (c.is_zero()) throw PreconditionError("eval_at_infinity of zero polynomial");
  return c.coeff(c.degree());
}

}  // namespace lowdeg
