#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lowdeg {

// Ground field for every exact computation.
using Rational = mpq_class;

// Lossless text form "p/q" (denominator always written).
std::string to_string(const Rational& r);

// Accepts "p", "p/q", with optional leading sign. Throws PreconditionError.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) { return r.get_d(); }

// Best rational approximation with denominator at most `max_den`
// (continued fraction convergents and semiconvergents).
Rational best_rational(double x, long max_den);

// True when r is the square of a rational.
bool is_rational_square(const Rational& r);

// Exact square root of a rational square; caller checks is_rational_square.
Rational rational_sqrt(const Rational& r);

}  // namespace lowdeg
