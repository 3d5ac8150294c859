#pragma once

#include <string>
#include <vector>

#include "drg/poly.hpp"

namespace drg {

// A real algebraic number: monic irreducible minimal polynomial plus a closed
// rational interval containing exactly one of its roots. Rational values are
// stored as degree-one polynomials with a point interval.
//
// Values are immutable; operations that need a tighter enclosure refine a
// local copy of the interval.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
  AlgebraicNumber(const Rational& q);  // NOLINT
  AlgebraicNumber(long v) : AlgebraicNumber(Rational(v)) {}  // NOLINT

  // The unique root of p (nonzero) in the closed interval [lo, hi].
  static AlgebraicNumber root_in(const Poly& p, const Rational& lo, const Rational& hi);
  // f irreducible; iv isolates one of its roots with non-root endpoints.
  static AlgebraicNumber from_irreducible(const Poly& f, const Interval& iv);
  // alpha + beta*sqrt(d) for rationals, d >= 0.
  static AlgebraicNumber quadratic(const Rational& alpha, const Rational& beta, const Rational& d);

  bool is_rational() const { return poly_.degree() == 1; }
  const Rational& rational_value() const;
  const Poly& minimal_polynomial() const { return poly_; }
  int degree() const { return poly_.degree(); }
  const Interval& interval() const { return iv_; }

  // Copy whose isolating interval has width <= width.
  AlgebraicNumber refined(const Rational& width) const;
  Rational lower() const { return iv_.lo; }
  Rational upper() const { return iv_.hi; }
  // Rational approximation within `width`.
  Rational approximate(const Rational& width) const;
  double to_double() const;
  std::string decimal(int digits) const;
  std::string str() const;

  int sign() const;
  // Sign of g evaluated at this number; exact.
  int sign_at(const Poly& g) const;
  int compare(const Rational& q) const;

  AlgebraicNumber operator-() const;
  AlgebraicNumber inverse() const;
  AlgebraicNumber sqrt() const;  // requires a nonnegative value
  AlgebraicNumber pow(unsigned n) const;
  AlgebraicNumber abs() const { return sign() < 0 ? -*this : *this; }

  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

 private:
  AlgebraicNumber(Poly minpoly, Interval iv) : poly_(std::move(minpoly)), iv_(std::move(iv)) {}
  void bisect();

  Poly poly_;
  Interval iv_;
};

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);

inline bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) == 0; }
inline bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) != 0; }
inline bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; }
inline bool operator<=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) <= 0; }
inline bool operator>(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) > 0; }
inline bool operator>=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) >= 0; }

// Distinct real roots of p in descending order.
std::vector<AlgebraicNumber> real_roots(const Poly& p);

// Rational r with r <= sqrt(q) (lower) or r >= sqrt(q) (upper), within 2^-bits.
Rational sqrt_lower(const Rational& q, unsigned bits);
Rational sqrt_upper(const Rational& q, unsigned bits);

}  // namespace drg
