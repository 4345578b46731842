#pragma once

// Exact arbitrary-precision arithmetic, backed by GMP. mpq_class keeps
// every value canonical (positive denominator, reduced fraction), so the
// invariants we need hold after each operation with no extra work.

#include <gmpxx.h>

#include <string>

namespace hopfdual {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "-3", "7/2", ... Throws std::invalid_argument on garbage.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace hopfdual
