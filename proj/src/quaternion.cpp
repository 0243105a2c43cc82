#include "lowdeg/quaternion.hpp"

#include <ostream>

namespace lowdeg {

std::ostream& operator<<(std::ostream& os, const Quat& q) {
  return os << "(" << q.w.get_str() << ", " << q.x.get_str() << ", " << q.y.get_str() << ", "
            << q.z.get_str() << ")";
}

std::ostream& operator<<(std::ostream& os, const ComplexQuat& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

DualNumber dual_norm(const DualQuaternion& g) { return {g.primal.norm(), study_defect(g).w}; }

Quat study_defect(const DualQuaternion& g) {
  return g.primal * g.dual.conj() + g.dual * g.primal.conj();
}

bool is_zero_divisor(const DualQuaternion& g) {
  if (g.is_zero()) throw PreconditionError("is_zero_divisor: zero dual quaternion");
  return g.primal.is_zero();
}

DualQuaternion qinv(const DualQuaternion& g) {
  Quat pinv = qinv(g.primal);
  return {pinv, -(pinv * g.dual * pinv)};
}

ProjectivePoint3::ProjectivePoint3(Rational x0, Rational x1, Rational x2, Rational x3)
    : c_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {
  if (c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0) {
    throw PreconditionError("projective point with all coordinates zero");
  }
}

ProjectivePoint3::ProjectivePoint3(const Quat& q) : ProjectivePoint3(q.w, q.x, q.y, q.z) {}

ProjectivePoint3 ProjectivePoint3::normalized() const {
  ProjectivePoint3 out = *this;
  for (const auto& v : c_) {
    if (v != 0) {
      Rational inv = 1 / v;
      for (auto& u : out.c_) u *= inv;
      break;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ProjectivePoint3& p) {
  return os << "[" << p[0].get_str() << ":" << p[1].get_str() << ":" << p[2].get_str() << ":"
            << p[3].get_str() << "]";
}

ProjectivePoint3 act_on_point(const DualQuaternion& g, const ProjectivePoint3& pt) {
  if (g.primal.is_zero()) throw NotInvertible("singular displacement");
  const Quat& p = g.primal;
  Quat image = p * pt.as_quaternion() * p.conj() + Rational(2 * pt[0]) * (p * g.dual.conj());
  return ProjectivePoint3(image);
}

}  // namespace lowdeg
