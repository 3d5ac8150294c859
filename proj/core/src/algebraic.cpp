#include "drg/algebraic.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "drg/factor.hpp"

namespace drg {

namespace {

Poly linear_poly(const Rational& q) { return Poly(std::vector<Rational>{-q, 1}); }

Interval product_enclosure(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

// Refines the operands through `step` until the enclosure holds exactly one
// root of r, then returns that root.
AlgebraicNumber locate(const Poly& r, const std::function<Interval()>& enclosure,
                       const std::function<void()>& step) {
  SturmChain sc(r);
  for (int guard = 0; guard < 100000; ++guard) {
    Interval e = enclosure();
    if (sc.count_closed(e.lo, e.hi) == 1) return AlgebraicNumber::root_in(sc.base(), e.lo, e.hi);
    step();
  }
  throw std::runtime_error("failed to isolate algebraic result");
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(const Rational& q) : poly_(linear_poly(q)), iv_{q, q} {}

AlgebraicNumber AlgebraicNumber::root_in(const Poly& p, const Rational& lo, const Rational& hi) {
  if (p.degree() < 1) throw std::invalid_argument("root_in needs a nonconstant polynomial");
  if (hi < lo) throw std::invalid_argument("root_in needs lo <= hi");
  Poly found;
  int total = 0;
  for (const auto& f : factor_squarefree(squarefree_part(p))) {
    int c = sturm_count_closed(f, lo, hi);
    if (c > 0) {
      total += c;
      found = f;
    }
  }
  if (total != 1) throw std::invalid_argument("interval does not isolate a single root");
  if (found.degree() == 1) return AlgebraicNumber(-found.coeff(0) / found.coeff(1));
  // an irreducible polynomial of degree >= 2 has no rational roots, so the
  // endpoints are not roots
  return AlgebraicNumber(found.monic(), Interval{lo, hi});
}

AlgebraicNumber AlgebraicNumber::from_irreducible(const Poly& f, const Interval& iv) {
  if (f.degree() == 1) return AlgebraicNumber(-f.coeff(0) / f.coeff(1));
  return AlgebraicNumber(f.monic(), iv);
}

AlgebraicNumber AlgebraicNumber::quadratic(const Rational& alpha, const Rational& beta, const Rational& d) {
  if (sgn(d) < 0) throw std::domain_error("square root of a negative rational");
  if (beta == 0) return AlgebraicNumber(alpha);
  Rational root;
  if (rational_sqrt(d, root)) return AlgebraicNumber(alpha + beta * root);
  // (x - alpha)^2 - beta^2 d
  Poly m = Poly({0, 1}) - Poly(alpha);
  m = m * m - Poly(beta * beta * d);
  for (unsigned bits = 8;; bits += 8) {
    Rational l = sqrt_lower(d, bits), u = sqrt_upper(d, bits);
    Interval iv = sgn(beta) > 0 ? Interval{alpha + beta * l, alpha + beta * u}
                                : Interval{alpha + beta * u, alpha + beta * l};
    if (sturm_count_closed(m, iv.lo, iv.hi) == 1) return AlgebraicNumber(m.monic(), iv);
  }
}

const Rational& AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("algebraic number is irrational");
  return iv_.lo;
}

void AlgebraicNumber::bisect() {
  if (is_rational()) return;
  Rational mid = iv_.midpoint();
  int sm = sgn(poly_(mid));
  int sl = sgn(poly_(iv_.lo));
  if (sm == sl) {
    iv_.lo = mid;
  } else {
    iv_.hi = mid;
  }
}

AlgebraicNumber AlgebraicNumber::refined(const Rational& width) const {
  AlgebraicNumber r = *this;
  while (r.iv_.width() > width) r.bisect();
  return r;
}

Rational AlgebraicNumber::approximate(const Rational& width) const { return refined(width).iv_.midpoint(); }

double AlgebraicNumber::to_double() const {
  Rational w(1, Integer(1) << 64);
  Rational m = approximate(w * std::max(Rational(1), abs_value(iv_.lo)));
  return m.get_d();
}

std::string AlgebraicNumber::decimal(int digits) const {
  if (is_rational()) return to_decimal(rational_value(), digits);
  Rational w(1, power(Integer(10), static_cast<unsigned long>(digits + 3)));
  return to_decimal(approximate(w), digits);
}

std::string AlgebraicNumber::str() const {
  if (is_rational()) return to_string(rational_value());
  return decimal(9) + " (root of " + poly_.str() + ")";
}

int AlgebraicNumber::sign_at(const Poly& g) const {
  if (is_rational()) return sgn(g(rational_value()));
  Poly r = g % poly_;
  if (r.is_zero()) return 0;
  if (r.degree() == 0) return sgn(r.leading());
  AlgebraicNumber a = *this;
  while (true) {
    Interval e = evaluate_on(r, a.iv_);
    if (sgn(e.lo) > 0) return 1;
    if (sgn(e.hi) < 0) return -1;
    a.bisect();
  }
}

int AlgebraicNumber::sign() const { return sign_at(Poly::x()); }

int AlgebraicNumber::compare(const Rational& q) const { return sign_at(linear_poly(q)); }

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) {
    int c = cmp(a.rational_value(), b.rational_value());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (a.is_rational()) return -b.compare(a.rational_value());
  if (b.is_rational()) return a.compare(b.rational_value());
  AlgebraicNumber x = a, y = b;
  if (a.poly_ != b.poly_) {
    while (true) {
      if (x.iv_.hi < y.iv_.lo) return -1;
      if (y.iv_.hi < x.iv_.lo) return 1;
      x.bisect();
      y.bisect();
    }
  }
  SturmChain sc(a.poly_);
  while (true) {
    if (x.iv_.hi < y.iv_.lo) return -1;
    if (y.iv_.hi < x.iv_.lo) return 1;
    Rational lo = std::min(x.iv_.lo, y.iv_.lo);
    Rational hi = std::max(x.iv_.hi, y.iv_.hi);
    if (sc.count_closed(lo, hi) == 1) return 0;
    x.bisect();
    y.bisect();
  }
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  if (is_rational()) return AlgebraicNumber(-rational_value());
  return AlgebraicNumber(poly_.scale_argument(-1).monic(), Interval{-iv_.hi, -iv_.lo});
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicNumber(a.rational_value() + b.rational_value());
  if (a.is_rational() || b.is_rational()) {
    const AlgebraicNumber& irr = a.is_rational() ? b : a;
    const Rational& q = a.is_rational() ? a.rational_value() : b.rational_value();
    return AlgebraicNumber(irr.poly_.shift(-q), Interval{irr.iv_.lo + q, irr.iv_.hi + q});
  }
  // Res_y(pa(y), pb(x - y)) vanishes at every alpha + beta
  const int n = a.degree() * b.degree();
  const Poly reflected = b.poly_.scale_argument(-1);
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= n; ++k) {
    xs.emplace_back(k);
    ys.push_back(resultant(a.poly_, reflected.shift(-Rational(k))));
  }
  Poly r = interpolate(xs, ys);
  AlgebraicNumber x = a, y = b;
  return locate(
      r, [&] { return Interval{x.iv_.lo + y.iv_.lo, x.iv_.hi + y.iv_.hi}; },
      [&] {
        x.bisect();
        y.bisect();
      });
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicNumber(a.rational_value() * b.rational_value());
  if (a.is_rational() || b.is_rational()) {
    const AlgebraicNumber& irr = a.is_rational() ? b : a;
    const Rational& q = a.is_rational() ? a.rational_value() : b.rational_value();
    if (q == 0) return AlgebraicNumber(0);
    Interval iv = sgn(q) > 0 ? Interval{irr.iv_.lo * q, irr.iv_.hi * q} : Interval{irr.iv_.hi * q, irr.iv_.lo * q};
    return AlgebraicNumber(irr.poly_.scale_argument(1 / q).monic(), iv);
  }
  // Res_y(pa(y), y^db pb(x/y)) vanishes at every alpha * beta (alpha != 0)
  const int db = b.degree();
  const int n = a.degree() * db;
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= n; ++k) {
    Rational x0(k);
    std::vector<Rational> c(static_cast<std::size_t>(db) + 1);
    Rational pw = 1;
    for (int j = 0; j <= db; ++j) {
      c[static_cast<std::size_t>(db - j)] = b.poly_.coeff(j) * pw;
      pw *= x0;
    }
    xs.push_back(x0);
    ys.push_back(resultant(a.poly_, Poly(std::move(c))));
  }
  Poly r = interpolate(xs, ys);
  AlgebraicNumber x = a, y = b;
  return locate(
      r, [&] { return product_enclosure(x.iv_, y.iv_); },
      [&] {
        x.bisect();
        y.bisect();
      });
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b.inverse(); }

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_rational()) {
    if (rational_value() == 0) throw std::domain_error("inverse of zero");
    return AlgebraicNumber(1 / rational_value());
  }
  AlgebraicNumber a = *this;
  while (sgn(a.iv_.lo) <= 0 && sgn(a.iv_.hi) >= 0) a.bisect();
  return AlgebraicNumber(poly_.reversed().monic(), Interval{1 / a.iv_.hi, 1 / a.iv_.lo});
}

AlgebraicNumber AlgebraicNumber::sqrt() const {
  int s = sign();
  if (s < 0) throw std::domain_error("square root of a negative number");
  if (s == 0) return AlgebraicNumber(0);
  if (is_rational()) {
    Rational root;
    if (rational_sqrt(rational_value(), root)) return AlgebraicNumber(root);
  }
  AlgebraicNumber a = *this;
  while (sgn(a.iv_.lo) <= 0) a.bisect();
  Poly r = poly_.compose(Poly({0, 0, 1}));
  unsigned bits = 16;
  return locate(
      r, [&] { return Interval{sqrt_lower(a.iv_.lo, bits), sqrt_upper(a.iv_.hi, bits)}; },
      [&] {
        a.bisect();
        bits += 4;
      });
}

AlgebraicNumber AlgebraicNumber::pow(unsigned n) const {
  AlgebraicNumber result(1);
  AlgebraicNumber base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

std::vector<AlgebraicNumber> real_roots(const Poly& p) {
  std::vector<AlgebraicNumber> out;
  if (p.degree() < 1) return out;
  for (const auto& f : factor_squarefree(squarefree_part(p))) {
    for (const auto& iv : isolate_real_roots(f)) out.push_back(AlgebraicNumber::from_irreducible(f, iv));
  }
  std::sort(out.begin(), out.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return a > b; });
  return out;
}

Rational sqrt_lower(const Rational& q, unsigned bits) {
  if (sgn(q) <= 0) return 0;
  Integer scaled = (q.get_num() << (2 * bits)) / q.get_den();
  Rational r(isqrt(scaled), Integer(1) << bits);
  r.canonicalize();
  return r;
}

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (sgn(q) <= 0) return 0;
  Integer scaled = (q.get_num() << (2 * bits)) / q.get_den();
  Rational r(isqrt(scaled) + 1, Integer(1) << bits);
  r.canonicalize();
  return r;
}

}  // namespace drg
