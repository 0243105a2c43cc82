#include "lowdeg/analysis.hpp"

#include <cmath>
#include <sstream>

namespace lowdeg {

namespace {

MotionPolynomial ensure_normal(const MotionPolynomial& c) {
  if (c.is_reduced() && c.is_monic()) return c;
  return normal_form(c);
}

// The common pieces every analysis step starts from.
struct Decomposition {
  MotionPolynomial motion;
  RealPoly c;
  QuatPoly q;
  QuatPoly d;
  QuatPoly q_conj_d;  // Q conj(D)
  RealPoly g;         // gcd(c, content(Q conj(D)))
};

Decomposition decompose(const MotionPolynomial& input) {
  MotionPolynomial motion = ensure_normal(input);
  RealPoly c = mrpf(motion.primal());
  QuatPoly q = divide_real(motion.primal(), c);
  QuatPoly d = motion.dual();
  QuatPoly qd = q * d.conj();
  RealPoly g = qd.is_zero() ? RealPoly::constant(1) : real_gcd(c, mrpf(qd));
  return {motion, c, q, d, qd, g};
}

double euclidean_norm(const ComplexQuat& a) {
  return std::sqrt(std::norm(a.w) + std::norm(a.x) + std::norm(a.y) + std::norm(a.z));
}

// [a] = [b] up to kRulingTolerance after scaling both to unit max-component.
bool projectively_equal(const ComplexQuat& a, const ComplexQuat& b) {
  ComplexQuat an = normalized_max(a);
  ComplexQuat bn = normalized_max(b);
  int k = 0;
  for (int i = 1; i < 4; ++i) {
    if (std::abs(an[i]) > std::abs(an[k])) k = i;
  }
  Complex lambda = bn[k] / an[k];
  ComplexQuat diff = bn - an * lambda;
  return diff.scale() < kRulingTolerance;
}

// Multiplicity of an exact quadratic in c and in every component of Q conj(D).
int common_multiplicity(const RealPoly& quad, const RealPoly& c, const QuatPoly& qd) {
  int mu = multiplicity(quad, c);
  for (const auto& comp : qd.components()) {
    if (!comp.is_zero()) mu = std::min(mu, multiplicity(quad, comp));
  }
  return mu;
}

RealFactorization factor_common_gcd(const RealPoly& g) {
  RealFactorization f = factor_real(g);
  if (!f.linear.empty()) {
    throw InconsistencyError("common factor of c and Q conj(D) has a real root; motion is not reduced");
  }
  return f;
}

}  // namespace

OrdinaryReduction ordinary_reduction(const MotionPolynomial& c) {
  Decomposition dec = decompose(c);
  return {dec.c, dec.q, dec.c.degree()};
}

ExceptionalReduction exceptional_reduction(const MotionPolynomial& c) {
  Decomposition dec = decompose(c);
  if (dec.d.is_zero()) return {0, RealPoly::constant(1)};
  return {dec.g.degree(), dec.g};
}

std::optional<QuatPoly> algebraic_certificate(const MotionPolynomial& c) {
  Decomposition dec = decompose(c);
  if (dec.d.is_zero() || dec.g.degree() == 0) return std::nullopt;

  QuatPoly remaining = gcrd(dec.q, dec.d);
  QuatPoly h = QuatPoly::constant(Quat(Rational(1)));
  RealPoly rest = dec.g;
  for (const auto& quad : factor_common_gcd(dec.g).quadratics) {
    if (quad.numeric) continue;
    for (int k = 0; k < quad.multiplicity; ++k) {
      QuatPoly lin = extract_right_factor(remaining, quad);
      QuotRem qr = right_divide(remaining, lin);
      if (!qr.rem.is_zero()) throw InconsistencyError("extracted factor does not right-divide gcrd(Q, D)");
      remaining = qr.quot;
      h = lin * h;
      rest = exact_div(rest, quad.poly());
    }
  }
  // Quadratic factors without rational coefficients: their product is still
  // rational, and the right factor with that norm is gcrd(remaining, rest).
  if (rest.degree() > 0) {
    QuatPoly k = gcrd(remaining, QuatPoly(rest));
    if (k.norm_poly() != rest) throw InconsistencyError("right factor for irrational quadratics has wrong norm");
    h = k * h;
  }
  if (h.norm_poly() != dec.g || !right_divides(h, dec.q) || !right_divides(h, dec.d)) {
    throw InconsistencyError("algebraic certificate failed verification");
  }
  return h;
}

std::vector<RulingCertificate> geometric_certificate(const MotionPolynomial& c) {
  Decomposition dec = decompose(c);
  std::vector<RulingCertificate> out;
  if (dec.d.is_zero() || dec.g.degree() == 0) return out;
  for (const auto& quad : factor_common_gcd(dec.g).quadratics) {
    RulingCertificate cert;
    cert.quadratic = quad;
    cert.multiplicity = quad.multiplicity;
    if (!quad.numeric) {
      int mu = common_multiplicity(quad.poly(), dec.c, dec.q_conj_d);
      if (mu != quad.multiplicity) throw InconsistencyError("multiplicity mismatch in common factor");
      cert.multiplicity = mu;
    }
    cert.z = quadratic_roots(quad).first;
    ComplexQuat qz = normalized_max(dec.q.eval(cert.z));
    ComplexQuat dz = normalized_max(dec.d.eval(cert.z));
    cert.left_ruling_residual = euclidean_norm(qz * dz.conj());
    cert.coincident = projectively_equal(qz, dz);
    cert.ill_conditioned = !(cert.left_ruling_residual < kRulingTolerance);
    out.push_back(cert);
  }
  return out;
}

template <>
bool on_left_ruling_conic<Rational>(const PlueckerLine<Rational>& l) {
  const Quat& x = l.primal;
  return !x.is_zero() && l.dual == -x && x.w == 0 && x.norm() == 0;
}

bool ruling_swap_check(const MotionPolynomial& c) {
  std::vector<RulingCertificate> certs = geometric_certificate(c);
  if (certs.empty()) throw PreconditionError("ruling_swap_check needs at least one ruling certificate");
  Decomposition dec = decompose(c);
  QuatPoly q_conj = dec.q.conj();
  QuatPoly d_conj = dec.d.conj();
  for (const auto& cert : certs) {
    ComplexQuat p = normalized_max(q_conj.eval(cert.z));
    ComplexQuat q = normalized_max(d_conj.eval(cert.z));
    if (!(euclidean_norm(p.conj() * q) < kRulingTolerance)) return false;
  }
  return true;
}

DegreeReport predicted_degree(const MotionPolynomial& c, const std::optional<OracleOptions>& oracle) {
  RealPoly removed;
  MonicRecord record;
  MotionPolynomial normal = normal_form(c, &removed, &record);
  Decomposition dec = decompose(normal);

  DegreeReport report(normal);
  report.removed_content = removed;
  report.monic = record;
  report.n = normal.degree();
  report.c = dec.c;
  report.m = dec.c.degree();
  report.common_gcd = dec.d.is_zero() ? RealPoly::constant(1) : dec.g;
  report.e = report.common_gcd.degree();
  report.predicted = 2 * report.n - report.m - report.e;
  report.certificates = geometric_certificate(normal);
  report.algebraic_factor = algebraic_certificate(normal);

  for (const auto& cert : report.certificates) {
    if (cert.ill_conditioned) {
      std::ostringstream os;
      os << "ruling residual " << cert.left_ruling_residual << " above tolerance for certified factor "
         << cert.quadratic.poly();
      report.warnings.push_back(os.str());
    }
  }

  if (oracle) {
    report.oracle_trials = oracle->trials;
    report.oracle_seed = oracle->seed;
    report.oracle_degree = generic_degree_oracle(normal, oracle->trials, oracle->seed);
    if (*report.oracle_degree != report.predicted) {
      std::ostringstream os;
      os << "degree model violated: predicted " << report.predicted << ", oracle " << *report.oracle_degree;
      throw DegreeModelViolation(os.str());
    }
  }
  return report;
}

}  // namespace lowdeg
