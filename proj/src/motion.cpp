#include "lowdeg/motion.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace lowdeg {

namespace {

std::string describe_defect(const QuatPoly& defect) {
  std::ostringstream os;
  os << "polynomial Study condition violated; defect components:";
  const char* names[] = {"1", "i", "j", "k"};
  for (int idx = 0; idx < 4; ++idx) {
    RealPoly comp = defect.component(idx);
    if (!comp.is_zero()) os << " [" << names[idx] << "] " << comp;
  }
  return os.str();
}

bool leading_is_one(const DualQuatPoly& c) {
  const int n = c.degree();
  return n >= 0 && c.primal.degree() == n && c.primal.leading() == Quat(Rational(1)) && c.dual.coeff(n).is_zero();
}

RealPoly gcd_of(const std::array<RealPoly, 4>& polys) {
  RealPoly g;
  for (const auto& p : polys) {
    if (!p.is_zero()) g = g.is_zero() ? p.monic() : real_gcd(g, p);
  }
  return g;
}

}  // namespace

StudyViolation::StudyViolation(QuatPoly defect) : Error(describe_defect(defect)), defect_(std::move(defect)) {}

MotionPolynomial::MotionPolynomial(DualQuatPoly c) : poly_(std::move(c)) {
  reduced_ = content(poly_).is_one();
  monic_ = leading_is_one(poly_);
}

MotionPolynomial validate(DualQuatPoly c) {
  if (c.primal.is_zero()) throw NullNorm();
  QuatPoly defect = study_defect(c);
  if (!defect.is_zero()) throw StudyViolation(std::move(defect));
  return MotionPolynomial(std::move(c));
}

RealPoly content(const DualQuatPoly& c) {
  RealPoly g;
  for (const auto& p : c.components()) {
    if (!p.is_zero()) g = g.is_zero() ? p.monic() : real_gcd(g, p);
  }
  if (g.is_zero()) throw PreconditionError("content of zero polynomial");
  return g;
}

MotionPolynomial reduce(const MotionPolynomial& c) {
  RealPoly g = content(c.poly());
  if (g.is_one()) return c;
  return validate({divide_real(c.primal(), g), divide_real(c.dual(), g)});
}

MotionPolynomial make_monic(const MotionPolynomial& c, MonicRecord* record) {
  DualQuatPoly poly = c.poly();
  const int n = poly.degree();
  if (poly.primal.degree() < n) {
    for (int step = 0;; ++step) {
      Rational s = (step % 2 == 1) ? Rational((step + 1) / 2) : Rational(-(step / 2));
      if (poly.primal(s).is_zero()) continue;
      poly = reparameterize(poly, s, Rational(-1), Rational(1), Rational(0));
      if (record) record->reparameterization = std::array<Rational, 4>{s, Rational(-1), Rational(1), Rational(0)};
      break;
    }
  }
  DualQuaternion lead_inv = qinv(poly.coeff(poly.degree()));
  DualQuatPoly left{QuatPoly::constant(lead_inv.primal), QuatPoly::constant(lead_inv.dual)};
  if (record) record->left_factor = lead_inv;
  return validate(left * poly);
}

MotionPolynomial normal_form(const MotionPolynomial& c, RealPoly* removed_content, MonicRecord* record) {
  if (removed_content) *removed_content = content(c.poly());
  return reduce(make_monic(reduce(c), record));
}

MotionPolynomial inverse(const MotionPolynomial& c) { return validate(c.poly().conj()); }

RealPoly Trajectory::content() const { return gcd_of(coords); }

std::array<RealPoly, 4> Trajectory::reduced() const {
  RealPoly g = content();
  std::array<RealPoly, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = coords[i].is_zero() ? RealPoly{} : exact_div(coords[i], g);
  return out;
}

int Trajectory::degree() const {
  int deg = 0;
  for (const auto& p : reduced()) deg = std::max(deg, p.degree());
  return deg;
}

std::optional<ProjectivePoint3> Trajectory::at(const Rational& t) const {
  std::array<Rational, 4> v;
  bool all_zero = true;
  for (std::size_t i = 0; i < 4; ++i) {
    v[i] = coords[i](t);
    all_zero = all_zero && v[i] == 0;
  }
  if (all_zero) return std::nullopt;
  return ProjectivePoint3(v[0], v[1], v[2], v[3]);
}

Trajectory trajectory(const MotionPolynomial& c, const ProjectivePoint3& pt) {
  const QuatPoly& p = c.primal();
  const Rational& x0 = pt[0];
  Quat x{Rational(0), pt[1], pt[2], pt[3]};
  QuatPoly image = QuatPoly(p.norm_poly() * x0) + p * x * p.conj() +
                   (p * c.dual().conj()) * RealPoly::constant(Rational(2 * x0));
  return Trajectory{image.components(), pt};
}

int trajectory_degree(const MotionPolynomial& c, const ProjectivePoint3& pt) { return trajectory(c, pt).degree(); }

ProjectivePoint3 sample_point(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> mag(1, 97);
  std::bernoulli_distribution sign(0.5);
  auto draw = [&] {
    long num = mag(rng) * (sign(rng) ? -1 : 1);
    long den = mag(rng) * (sign(rng) ? -1 : 1);
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
  };
  Rational x0 = draw(), x1 = draw(), x2 = draw(), x3 = draw();
  return ProjectivePoint3(x0, x1, x2, x3);
}

int generic_degree_oracle(const MotionPolynomial& c, int trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionError("generic_degree_oracle needs at least one trial");
  int best = 0;
  for (int trial = 0; trial < trials; ++trial) {
    best = std::max(best, trajectory_degree(c, sample_point(seed, static_cast<std::uint64_t>(trial))));
  }
  return best;
}

}  // namespace lowdeg
