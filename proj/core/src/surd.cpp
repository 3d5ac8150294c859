#include "drg/surd.hpp"

#include <algorithm>
#include <stdexcept>

#include "drg/factor.hpp"

namespace drg {

namespace {

void check_quadratic(const Poly& q, const char* name) {
  if (q.degree() != 2 || q.leading() != 1) throw std::invalid_argument(std::string(name) + " must be a monic quadratic");
  if (discriminant(q) == 0) throw std::invalid_argument(std::string(name) + " is the square of a linear polynomial");
}

// q monic quadratic, hence convex: its minimum on [lo, hi] is at an endpoint
// or at the vertex.
bool nonnegative_on(const Poly& q, const Rational& lo, const Rational& hi) {
  if (sgn(q(lo)) < 0 || sgn(q(hi)) < 0) return false;
  const Rational vertex = -q.coeff(1) / 2;
  return !(lo < vertex && vertex < hi) || sgn(q(vertex)) >= 0;
}

}  // namespace

void SurdExpression::validate() const {
  check_quadratic(q1, "q1");
  check_quadratic(q2, "q2");
}

int SurdExpression::max_degree() const { return std::max({P1.degree(), P2.degree(), P3.degree(), P4.degree()}); }

int surd_sign(const FieldElement& X, const FieldElement& Y, const FieldElement& Q) {
  const int x = X.sign();
  const int q = Q.sign();
  if (q < 0) throw std::domain_error("square root of a negative value");
  const int y = q == 0 ? 0 : Y.sign();
  if (y == 0) return x;
  if (x == 0 || x == y) return y;
  return x * (X * X - Y * Y * Q).sign();
}

int surd_sign_at(const SurdExpression& e, const AlgebraicNumber& theta) {
  FieldPtr F = make_field(theta);
  auto at = [&](const Poly& p) { return FieldElement(F, p); };
  const FieldElement q1 = at(e.q1), q2 = at(e.q2);
  const FieldElement p1 = at(e.P1), p2 = at(e.P2), p3 = at(e.P3), p4 = at(e.P4);
  // P = X + Y sqrt(q2) with X = p1 + p2 sqrt(q1), Y = p3 + p4 sqrt(q1), and
  // X^2 - Y^2 q2 = U + V sqrt(q1).
  const int x = surd_sign(p1, p2, q1);
  const int qs = q2.sign();
  if (qs < 0) throw std::domain_error("q2 negative at the evaluation point");
  const int y = qs == 0 ? 0 : surd_sign(p3, p4, q1);
  if (y == 0) return x;
  if (x == 0 || x == y) return y;
  const FieldElement U = p1 * p1 + p2 * p2 * q1 - q2 * (p3 * p3 + p4 * p4 * q1);
  const FieldElement V = FieldElement(F, Rational(2)) * (p1 * p2 - q2 * p3 * p4);
  return x * surd_sign(U, V, q1);
}

Poly surd_resolvent(const SurdExpression& e) {
  const Poly U = e.P1 * e.P1 + e.P2 * e.P2 * e.q1 - e.q2 * (e.P3 * e.P3 + e.P4 * e.P4 * e.q1);
  const Poly V = Poly(2) * (e.P1 * e.P2 - e.q2 * e.P3 * e.P4);
  return U * U - V * V * e.q1;
}

std::optional<Poly> surd_rationalization(const SurdExpression& e) {
  if (e.q1 == e.q2) {
    // P = A + B sqrt(q) on the interval; the four-fold product can vanish
    // identically here without P doing so, so rationalize A + B sqrt(q) alone.
    const Poly A = e.P1 + e.q1 * e.P4;
    const Poly B = e.P2 + e.P3;
    if (A.is_zero() && B.is_zero()) return std::nullopt;
    return A * A - e.q1 * B * B;
  }
  Poly r = surd_resolvent(e);
  if (r.is_zero()) throw std::logic_error("resolvent vanished for distinct q1, q2");
  return r;
}

SurdRootCount surd_root_count(const SurdExpression& e, const Rational& lo, const Rational& hi) {
  e.validate();
  if (lo > hi) throw std::invalid_argument("empty interval");
  if (!nonnegative_on(e.q1, lo, hi) || !nonnegative_on(e.q2, lo, hi)) {
    throw std::invalid_argument("interval leaves the region where q1 and q2 are nonnegative");
  }
  const int C = e.max_degree();
  if (C < 0) throw std::invalid_argument("all coefficient polynomials vanish");
  SurdRootCount r;
  r.bound = 4 * (C + 2);
  auto rat = surd_rationalization(e);
  if (!rat) {
    r.degenerate = true;
    return r;
  }
  r.resolvent = *rat;
  for (const Factor& f : factor_rational_poly(r.resolvent)) {
    if (f.poly.degree() < 1) continue;
    for (const Interval& iv : isolate_real_roots_in(f.poly, lo, hi)) {
      AlgebraicNumber theta = AlgebraicNumber::from_irreducible(f.poly, iv);
      if (theta < AlgebraicNumber(lo) || theta > AlgebraicNumber(hi)) continue;
      if (surd_sign_at(e, theta) == 0) r.roots.push_back(theta);
    }
  }
  std::sort(r.roots.begin(), r.roots.end());
  r.count = static_cast<int>(r.roots.size());
  return r;
}

}  // namespace drg
