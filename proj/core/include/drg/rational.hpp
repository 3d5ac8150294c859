#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace drg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q" or a finite decimal such as "-1.25" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when integral) rendering.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Fixed-point decimal rendering with `digits` fractional digits, rounded toward
/// the nearest representable value. Diagnostic output only.
std::string to_decimal(const Rational& q, int digits);

/// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational abs_value(const Rational& q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// base^exponent for a non-negative exponent.
Rational power(const Rational& base, unsigned long exponent);
Integer power(const Integer& base, unsigned long exponent);

Integer binomial(unsigned long n, unsigned long k);

/// Largest integer r with r*r <= n (n >= 0).
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);
/// True when q is the square of a rational; the root is written to `root`.
bool rational_sqrt(const Rational& q, Rational& root);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace drg
