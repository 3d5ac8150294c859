#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "drg/rational.hpp"

namespace drg {

// Univariate polynomial over Q, coefficients stored lowest degree first.
// The zero polynomial has no stored coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly x();
  static Poly monomial(const Rational& c, int degree);
  static Poly from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& at) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  Poly operator-() const;

  Poly derivative() const;
  Poly monic() const;
  // p(q(x))
  Poly compose(const Poly& q) const;
  // p(x + a)
  Poly shift(const Rational& a) const;
  // p(s*x)
  Poly scale_argument(const Rational& s) const;
  // x^deg * p(1/x)
  Poly reversed() const;

  bool has_integer_coefficients() const;
  // Positive rational multiple with coprime integer coefficients and positive
  // leading coefficient.
  Poly primitive() const;
  std::vector<Integer> integer_coefficients() const;  // requires integrality

  std::string str(const char* var = "x") const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const Rational& s);
Poly operator*(const Rational& s, Poly a);

struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact quotient part
Poly operator%(const Poly& a, const Poly& b);

// Monic gcd; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);
// Returns g = gcd(a,b) (monic) and s,t with s*a + t*b = g.
Poly extended_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t);

// Res(a,b) = lc(a)^deg(b) * prod b(alpha) over roots alpha of a.
Rational resultant(const Poly& a, const Poly& b);
Rational discriminant(const Poly& p);

Poly squarefree_part(const Poly& p);
// Yun's algorithm: monic factors s_i with p = lc * prod s_i^i.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// Characteristic polynomial of the n x n tridiagonal matrix with zero
// diagonal and unit off-diagonals. Roots are 2cos(i*pi/(n+1)).
Poly chebyshev_charpoly(int n);

// Interpolating polynomial through (xs[i], ys[i]); xs distinct.
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

struct Interval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
};

// Enclosure of p over [lo,hi] by interval Horner evaluation.
Interval evaluate_on(const Poly& p, const Interval& box);

// Precomputed Sturm chain of the squarefree part of p.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);
  const Poly& base() const { return chain_.front(); }
  int sign_changes(const Rational& at) const;
  int sign_changes_at_infinity(bool positive) const;
  // Distinct real roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  int count_closed(const Rational& lo, const Rational& hi) const;
  int count_real() const;

 private:
  std::vector<Poly> chain_;
};

// Distinct real roots of p in the half-open interval (lo, hi].
int sturm_count(const Poly& p, const Rational& lo, const Rational& hi);
int sturm_count_closed(const Poly& p, const Rational& lo, const Rational& hi);

// Bound B with every real root of p in (-B, B).
Rational root_bound(const Poly& p);

// Isolating intervals (ascending) for the distinct real roots of p. Each
// interval is either a point [r,r] (exact rational root) or has the root
// strictly inside with p nonzero of opposite signs at the endpoints. Adjacent
// intervals may share an endpoint (never a root). Widths are at most max_width
// when it is positive.
std::vector<Interval> isolate_real_roots(const Poly& p, const Rational& max_width = 0);
std::vector<Interval> isolate_real_roots_in(const Poly& p, const Rational& lo, const Rational& hi,
                                            const Rational& max_width = 0);

// Shrinks an isolating interval of the squarefree polynomial p (in the form
// produced by isolate_real_roots) to width <= max_width.
void refine_root(const Poly& p, Interval& iv, const Rational& max_width);
// One bisection step; returns false if the interval was already exact.
bool bisect_root(const Poly& p, Interval& iv);

std::string to_string(const Poly& p);

}  // namespace drg
