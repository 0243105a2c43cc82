#include "lowdeg/construct.hpp"

namespace lowdeg::construct {

namespace {

const Quat kI = Quat::unit_i();
const Quat kJ = Quat::unit_j();
const Quat kK = Quat::unit_k();

// Components outside `allowed` (indices into 1, i, j, k) are all zero.
bool supported_on(const QuatPoly& p, std::initializer_list<int> allowed) {
  for (int idx = 0; idx < 4; ++idx) {
    bool ok = false;
    for (int a : allowed) ok = ok || a == idx;
    if (!ok && !p.component(idx).is_zero()) return false;
  }
  return true;
}

QuatPoly t_minus(const Quat& r) { return QuatPoly::linear(r); }

}  // namespace

MotionPolynomial exceptional(const QuatPoly& r, const QuatPoly& e, const QuatPoly& h) {
  MotionPolynomial seed = validate({r, e});
  if (!seed.is_monic()) throw PreconditionError("exceptional: seed motion must be monic");
  if (h.is_zero()) throw PreconditionError("exceptional: H must be nonzero");
  RealPoly c = h.norm_poly();
  return normal_form(validate({c * (r * h), e * h}));
}

MotionPolynomial planar(const QuatPoly& r, const QuatPoly& d, const QuatPoly& f) { return planar(r, d, f, r); }

MotionPolynomial planar(const QuatPoly& r, const QuatPoly& d, const QuatPoly& f, const QuatPoly& h) {
  if (!supported_on(r, {0, 3}) || !supported_on(f, {0, 3}) || !supported_on(d, {1, 2})) {
    throw PreconditionError("not planar form");
  }
  if (h.is_zero() || !right_divides(h, r)) throw PreconditionError("planar: H must be a right factor of R");
  RealPoly c = h.norm_poly();
  QuatPoly primal = c * r;
  QuatPoly dual = f * d;
  if (dual.degree() > primal.degree()) throw PreconditionError("planar: deg(F D) exceeds deg(c R)");
  return normal_form(validate({primal, dual}));
}

MotionPolynomial darboux(const QuatPoly& q, const QuatPoly& d) {
  if (q.degree() != 1 || d.degree() != 2) throw PreconditionError("darboux: need deg Q = 1 and deg D = 2");
  return normal_form(validate({q.norm_poly() * q, d * q}));
}

MotionPolynomial wunderlich(const RealPoly& f, const QuatPoly& g, const MotionPolynomial& c) {
  if (f.degree() != 1) throw PreconditionError("wunderlich: need deg f = 1");
  if (g.degree() > 1) throw PreconditionError("wunderlich: translation part must have degree <= 1");
  MotionPolynomial translation = validate({QuatPoly(f), g});
  return normal_form(validate(translation.poly() * c.poly()));
}

MotionPolynomial cardan() {
  RealPoly c{Rational(1), Rational(0), Rational(1)};
  QuatPoly primal = c * t_minus(kK);
  QuatPoly dual{kJ, kI};
  return normal_form(validate({primal, dual}));
}

MotionPolynomial oldham() { return normal_form(inverse(cardan())); }

MotionPolynomial darboux_example() {
  QuatPoly d{kI + kK * Rational(2), Quat(), kK};
  return darboux(t_minus(kK), d);
}

MotionPolynomial vertical_darboux_example() {
  QuatPoly d{kK * Rational(2), Quat(), kK};
  return darboux(t_minus(kK), d);
}

MotionPolynomial wunderlich_example() {
  QuatPoly g = QuatPoly::constant(kI * Rational(2) - kJ);
  return wunderlich(RealPoly{Rational(1), Rational(1)}, g, darboux_example());
}

}  // namespace lowdeg::construct
