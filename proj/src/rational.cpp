#include "lowdeg/rational.hpp"

#include <cmath>
#include <string>

#include "lowdeg/errors.hpp"

namespace lowdeg {

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) {
    throw PreconditionError("empty rational literal");
  }
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  auto slash = s.find('/');
  auto digits_ok = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  bool ok = slash == std::string::npos ? digits_ok(start, s.size())
                                       : digits_ok(start, slash) && digits_ok(slash + 1, s.size());
  if (!ok) {
    throw PreconditionError("malformed rational literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (slash != std::string::npos) {
    mpz_class den(s.substr(s.find('/') + 1));
    if (den == 0) {
      throw PreconditionError("zero denominator in '" + std::string(text) + "'");
    }
  }
  r.set_str(s, 10);
  r.canonicalize();
  return r;
}

Rational best_rational(double x, long max_den) {
  if (!std::isfinite(x)) {
    throw PreconditionError("best_rational: non-finite input");
  }
  // Convergents h/k of the continued fraction of x.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  while (frac > 1e-15) {
    double inv = 1.0 / frac;
    long a = static_cast<long>(std::floor(inv));
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) {
      // Largest admissible semiconvergent, if it beats the last convergent.
      mpz_class a_max = (max_den - k_prev) / k;
      if (a_max > 0) {
        mpz_class hs = a_max * h + h_prev;
        mpz_class ks = a_max * k + k_prev;
        Rational semi(hs, ks), conv(h, k);
        semi.canonicalize();
        conv.canonicalize();
        if (std::abs(semi.get_d() - x) < std::abs(conv.get_d() - x)) {
          return semi;
        }
      }
      break;
    }
    mpz_class h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - static_cast<double>(a);
  }
  Rational r(h, k);
  r.canonicalize();
  return r;
}

bool is_rational_square(const Rational& r) {
  if (r < 0) return false;
  return mpz_perfect_square_p(r.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(r.get_den_mpz_t()) != 0;
}

Rational rational_sqrt(const Rational& r) {
  mpz_class num = sqrt(mpz_class(r.get_num()));
  mpz_class den = sqrt(mpz_class(r.get_den()));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace lowdeg
