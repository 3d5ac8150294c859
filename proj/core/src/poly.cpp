#include "drg/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace drg {

namespace {

const Rational kZero(0);

int sign_of(const Rational& q) { return sgn(q); }

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (c == 0) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Rational>& roots) {
  Poly p(1);
  for (const auto& r : roots) p *= Poly(std::vector<Rational>{-r, 1});
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const { return c_.empty() ? kZero : c_.back(); }

Rational Poly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

Poly Poly::compose(const Poly& q) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * q;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::shift(const Rational& a) const {
  // Taylor shift by repeated synthetic division.
  std::vector<Rational> v = c_;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) v[j - 1] += a * v[j];
  }
  return Poly(std::move(v));
}

Poly Poly::scale_argument(const Rational& s) const {
  std::vector<Rational> v = c_;
  Rational f = 1;
  for (auto& c : v) {
    c *= f;
    f *= s;
  }
  return Poly(std::move(v));
}

Poly Poly::reversed() const {
  std::vector<Rational> v(c_.rbegin(), c_.rend());
  return Poly(std::move(v));
}

bool Poly::has_integer_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  Integer den = 1;
  for (const auto& q : c_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  Integer g = 0;
  for (const auto& q : c_) {
    Integer num = q.get_num() * (den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(den, g);
  scale.canonicalize();
  if (sgn(leading()) < 0) scale = -scale;
  return *this * scale;
}

std::vector<Integer> Poly::integer_coefficients() const {
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto& q : c_) {
    if (q.get_den() != 1) throw std::invalid_argument("polynomial has non-integer coefficients");
    out.push_back(q.get_num());
  }
  return out;
}

std::string Poly::str(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs_value(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (!unit || i == 0) {
      out += drg::to_string(mag);
      if (i > 0) out += "*";
    }
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string to_string(const Poly& p) { return p.str(); }

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  }
  return Poly(std::move(r));
}

Poly operator*(Poly a, const Rational& s) { return a *= s; }
Poly operator*(const Rational& s, Poly a) { return a *= s; }

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& d = b.coefficients();
  const int db = b.degree();
  const Rational inv = 1 / b.leading();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + db)] * inv;
    quo[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * d[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.primitive();
  Poly y = b.primitive();
  while (!y.is_zero()) {
    Poly r = (x % y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly extended_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b;
  Poly s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    Poly s2 = s0 - qr.quotient * s1;
    Poly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = Poly();
    t = Poly();
    return r0;
  }
  Rational inv = 1 / r0.leading();
  s = s0 * inv;
  t = t0 * inv;
  return r0 * inv;
}

Rational resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  Poly A = a, B = b;
  Rational acc = 1;
  // Res(A,B) = (-1)^(mn) lc(B)^(m-r) Res(B, A mod B)
  while (true) {
    int m = A.degree();
    int n = B.degree();
    if (n == 0) return acc * power(B.leading(), static_cast<unsigned long>(m));
    if (m == 0) return acc * power(A.leading(), static_cast<unsigned long>(n));
    Poly R = A % B;
    if (R.is_zero()) return 0;
    int r = R.degree();
    if ((m * n) % 2 != 0) acc = -acc;
    acc *= power(B.leading(), static_cast<unsigned long>(m - r));
    A = std::move(B);
    B = std::move(R);
  }
}

Rational discriminant(const Poly& p) {
  int n = p.degree();
  if (n < 2) throw std::invalid_argument("discriminant requires degree >= 2");
  Rational r = resultant(p, p.derivative()) / p.leading();
  if ((n * (n - 1) / 2) % 2 != 0) r = -r;
  return r;
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Poly(1);
  Poly g = gcd(p, p.derivative());
  return (p / g).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  Poly f = p.monic();
  Poly a = gcd(f, f.derivative());
  Poly b = f / a;
  Poly c = f.derivative() / a;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly y = gcd(b, d);
    if (y.degree() > 0) out.emplace_back(y, i);
    b = b / y;
    c = d / y;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Poly chebyshev_charpoly(int n) {
  if (n < 1) throw std::invalid_argument("chebyshev_charpoly requires n >= 1");
  // P_0 = 1, P_1 = x, P_k = x P_{k-1} - P_{k-2}
  Poly prev(1);
  Poly cur = Poly::x();
  for (int k = 2; k <= n; ++k) {
    Poly next = Poly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  Poly result;
  for (std::size_t k = n; k-- > 0;) {
    result = result * Poly(std::vector<Rational>{-xs[k], 1}) + Poly(dd[k]);
  }
  return result;
}

Interval evaluate_on(const Poly& p, const Interval& box) {
  Rational lo = 0, hi = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    // [lo,hi] * [box.lo, box.hi]
    Rational a = lo * box.lo, b = lo * box.hi, d = hi * box.lo, e = hi * box.hi;
    Rational mn = std::min({a, b, d, e});
    Rational mx = std::max({a, b, d, e});
    lo = mn + *it;
    hi = mx + *it;
  }
  return {lo, hi};
}

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  Poly f = squarefree_part(p).primitive();
  chain_.push_back(f);
  if (f.degree() <= 0) return;
  chain_.push_back(f.derivative().primitive());
  while (true) {
    Poly r = chain_[chain_.size() - 2] % chain_.back();
    if (r.is_zero()) break;
    // negate, then rescale by a positive factor (signs are all that matter)
    Poly prim = r.primitive();
    if (sgn(r.leading()) > 0) prim = -prim;
    chain_.push_back(std::move(prim));
  }
}

int SturmChain::sign_changes(const Rational& at) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = sign_of(q(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::sign_changes_at_infinity(bool positive) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = sign_of(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
  if (hi <= lo) return 0;
  return sign_changes(lo) - sign_changes(hi);
}

int SturmChain::count_closed(const Rational& lo, const Rational& hi) const {
  if (hi < lo) return 0;
  int n = count(lo, hi);
  if (chain_.front()(lo) == 0) ++n;
  return n;
}

int SturmChain::count_real() const {
  return sign_changes_at_infinity(false) - sign_changes_at_infinity(true);
}

int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
  return SturmChain(p).count(lo, hi);
}

int sturm_count_closed(const Poly& p, const Rational& lo, const Rational& hi) {
  return SturmChain(p).count_closed(lo, hi);
}

Rational root_bound(const Poly& p) {
  if (p.degree() <= 0) return 1;
  // Cauchy: 1 + max |a_i / a_n|
  Rational m = 0;
  const Rational& lc = p.leading();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs_value(p.coeff(i) / lc));
  // round up to a power of two so bisection midpoints stay dyadic
  Rational b = 1;
  while (b <= m + 1) b *= 2;
  return b;
}

namespace {

void isolate_rec(const SturmChain& sc, const Rational& lo, const Rational& hi, int n,
                 std::vector<Interval>& out) {
  // invariant: exactly n roots in (lo, hi]
  if (n == 0) return;
  if (n == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  int left = sc.count(lo, mid);
  isolate_rec(sc, lo, mid, left, out);
  isolate_rec(sc, mid, hi, n - left, out);
}

// Converts (lo,hi] with exactly one root of f into the canonical form: a
// point, or an interval whose endpoints are not roots.
Interval normalize(const SturmChain& sc, Interval iv) {
  const Poly& f = sc.base();
  if (f(iv.hi) == 0) return {iv.hi, iv.hi};
  while (f(iv.lo) == 0) {
    Rational mid = iv.midpoint();
    if (f(mid) == 0) return {mid, mid};
    if (sc.count(mid, iv.hi) == 1) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

}  // namespace

bool bisect_root(const Poly& p, Interval& iv) {
  if (iv.lo == iv.hi) return false;
  Rational mid = iv.midpoint();
  int sm = sign_of(p(mid));
  if (sm == 0) {
    iv = {mid, mid};
    return true;
  }
  int sl = sign_of(p(iv.lo));
  if (sl == sm) {
    iv.lo = mid;
  } else {
    iv.hi = mid;
  }
  return true;
}

void refine_root(const Poly& p, Interval& iv, const Rational& max_width) {
  while (iv.width() > max_width) {
    if (!bisect_root(p, iv)) break;
  }
}

std::vector<Interval> isolate_real_roots_in(const Poly& p, const Rational& lo, const Rational& hi,
                                            const Rational& max_width) {
  SturmChain sc(p);
  const Poly& f = sc.base();
  std::vector<Interval> raw;
  if (f.degree() <= 0 || hi < lo) return raw;
  // roots in [lo, hi]: an exact root at lo is handled separately
  bool root_at_lo = f(lo) == 0;
  std::vector<Interval> out;
  if (root_at_lo) out.push_back({lo, lo});
  isolate_rec(sc, lo, hi, sc.count(lo, hi), raw);
  for (auto& iv : raw) {
    Interval n = normalize(sc, iv);
    if (n.lo != n.hi && max_width > 0) refine_root(f, n, max_width);
    out.push_back(n);
  }
  return out;
}

std::vector<Interval> isolate_real_roots(const Poly& p, const Rational& max_width) {
  Rational b = root_bound(p);
  return isolate_real_roots_in(p, -b, b, max_width);
}

}  // namespace drg
