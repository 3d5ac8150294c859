#include "drg/upsilon.hpp"

#include <algorithm>
#include <stdexcept>

#include "drg/factor.hpp"

namespace drg {

namespace {

Integer falling(int j, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= j - i;
  return r;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

// Coefficients a[0..n] (a[n] = 1) are fixed above index k. Every derivative
// of a polynomial with simple real roots in [-kappa, kappa] has the same
// property, so p^(k) is checked as soon as a_k is chosen. The admissible
// values of a_k form an interval, bounded by the values of p^(k) at the
// roots of p^(k+1) and at the endpoints; those bounds are widened by interval
// evaluation and each candidate is then checked exactly.
void search(int n, int k, std::vector<Integer>& a, const Rational& kappa, std::vector<Poly>& out) {
  const int m = n - k;
  std::vector<Rational> g(static_cast<std::size_t>(m + 1));
  for (int j = k + 1; j <= n; ++j) g[static_cast<std::size_t>(j - k)] = Rational(a[j] * falling(j, k));
  const Poly G(g);
  const Rational kf(falling(k, k));

  Rational lower = -G(kappa);
  Rational upper;
  bool has_upper = false;
  auto cap = [&](const Rational& v) {
    if (!has_upper || v < upper) upper = v;
    has_upper = true;
  };
  const Rational at_minus = -G(-kappa);
  if (m % 2 == 0) {
    lower = std::max(lower, at_minus);
  } else {
    cap(at_minus);
  }
  if (m >= 2) {
    auto crit = isolate_real_roots(G.derivative(), Rational(1, 1 << 16));
    std::reverse(crit.begin(), crit.end());
    for (std::size_t i = 0; i < crit.size(); ++i) {
      Interval v = evaluate_on(G, crit[i]);
      if (i % 2 == 0) {
        cap(-v.lo);  // local minimum of p^(k) must be <= 0
      } else {
        lower = std::max(lower, Rational(-v.hi));  // local maximum must be >= 0
      }
    }
  }
  if (!has_upper || upper < lower) return;
  const Integer from = ceil_of(lower / kf);
  const Integer to = floor_of(upper / kf);
  for (Integer c = from; c <= to; ++c) {
    a[k] = c;
    Poly h = G + Poly(Rational(c) * kf);
    if (gcd(h, h.derivative()).degree() > 0) continue;
    if (sturm_count_closed(h, -kappa, kappa) != m) continue;
    if (k == 0) {
      if (is_irreducible(h)) out.push_back(h);
    } else {
      search(n, k - 1, a, kappa, out);
    }
  }
  a[k] = 0;
}

int moebius(int n) {
  int r = 1;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    n /= q;
    if (n % q == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

int totient(int n) {
  int r = n;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    r -= r / q;
  }
  return n > 1 ? r - r / n : r;
}

Poly cyclotomic(int m) {
  Poly num(1), den(1);
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    const int mu = moebius(m / d);
    const Poly f = Poly::monomial(1, d) - Poly(1);
    if (mu > 0) num *= f;
    if (mu < 0) den *= f;
  }
  return num / den;
}

// Minimal polynomial of 2cos(2 pi/m), m >= 3: the palindromic cyclotomic
// polynomial rewritten in x = z + 1/z, using z^k + z^-k = D_k(x) with
// D_0 = 2, D_1 = x, D_k = x D_{k-1} - D_{k-2}.
Poly real_cyclotomic(int m) {
  const Poly phi = cyclotomic(m);
  const int d = phi.degree() / 2;
  std::vector<Poly> D{Poly(2), Poly::x()};
  for (int k = 2; k <= d; ++k) D.push_back(Poly::x() * D[k - 1] - D[k - 2]);
  Poly out(phi.coeff(d));
  for (int k = 1; k <= d; ++k) out += D[static_cast<std::size_t>(k)] * phi.coeff(d + k);
  return out;
}

struct Window {
  Rational lo, hi;
  int count;
};

std::vector<Window> anchored_windows(const Poly& p, const Rational& kappa, const Rational& zeta) {
  if (zeta <= 0 || zeta > 2 * kappa) throw std::invalid_argument("window length must lie in (0, 2 kappa]");
  auto roots = real_roots(p);
  std::reverse(roots.begin(), roots.end());
  std::vector<Window> out;
  const Rational top = kappa - zeta;
  bool top_done = false;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const AlgebraicNumber& r = roots[i];
    if (r.compare(top) > 0) {
      if (!top_done) out.push_back({top, kappa, sturm_count_closed(p, top, kappa)});
      top_done = true;
      continue;
    }
    Interval shifted{r.lower() + zeta, r.upper() + zeta};
    AlgebraicNumber end = r.is_rational() ? AlgebraicNumber(r.rational_value() + zeta)
                                          : AlgebraicNumber::from_irreducible(p.shift(-zeta), shifted);
    int count = 0;
    for (std::size_t j = i; j < roots.size() && roots[j] <= end; ++j) ++count;
    // a rational window with the same roots, starting just below r
    AlgebraicNumber tight = r;
    Rational lo = r.lower();
    while (lo < -kappa || sturm_count_closed(p, lo, lo + zeta) != count) {
      tight = tight.refined(tight.interval().width() / 4);
      lo = tight.lower();
    }
    out.push_back({lo, lo + zeta, count});
  }
  return out;
}

}  // namespace

std::vector<Poly> enumerate_Pkappa(const Rational& kappa, int max_degree) {
  if (kappa != 2) return search_Pkappa(kappa, max_degree);
  if (max_degree < 1 || max_degree > 12) throw std::invalid_argument("max_degree must lie in 1..12");
  // phi(m) >= sqrt(m / 2), so every m with phi(m) <= 2 max_degree is below
  // 8 max_degree^2 + 1
  std::vector<Poly> out{Poly({-2, 1}), Poly({2, 1})};
  for (int m = 3; m <= 8 * max_degree * max_degree + 1; ++m) {
    if (totient(m) <= 2 * max_degree) out.push_back(real_cyclotomic(m));
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<Poly> search_Pkappa(const Rational& kappa, int max_degree) {
  if (kappa < 2) throw std::invalid_argument("kappa must be at least 2");
  if (max_degree < 1 || max_degree > 12) throw std::invalid_argument("max_degree must lie in 1..12");
  std::vector<Poly> out;
  for (int n = 1; n <= max_degree; ++n) {
    std::vector<Integer> a(static_cast<std::size_t>(n + 1));
    a[n] = 1;
    search(n, n - 1, a, kappa, out);
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

bool in_Pkappa(const Poly& p, const Rational& kappa) {
  if (p.degree() < 1 || p.leading() != 1 || !p.has_integer_coefficients()) return false;
  if (!is_irreducible(p)) return false;
  return sturm_count_closed(p, -kappa, kappa) == p.degree();
}

Rational upsilon(const Poly& p, const Rational& lo, const Rational& hi) {
  if (p.degree() < 1 || p.leading() != 1 || !p.has_integer_coefficients() || !is_irreducible(p) ||
      SturmChain(p).count_real() != p.degree()) {
    throw std::invalid_argument("polynomial is not a monic irreducible integer polynomial with real roots");
  }
  return ratio(sturm_count_closed(p, lo, hi) - 1, p.degree());
}

UpsilonRecord best_window(const Poly& p, const Rational& kappa, const Rational& zeta) {
  if (!in_Pkappa(p, kappa)) throw std::invalid_argument("polynomial outside P_kappa");
  UpsilonRecord best;
  best.poly = p;
  bool have = false;
  for (const Window& w : anchored_windows(p, kappa, zeta)) {
    if (!have || w.count > best.roots_inside) {
      best.lo = w.lo;
      best.hi = w.hi;
      best.roots_inside = w.count;
      have = true;
    }
  }
  best.upsilon = ratio(best.roots_inside - 1, p.degree());
  return best;
}

UpsilonSup upsilon_sup(const Rational& kappa, const Rational& zeta, int max_degree) {
  UpsilonSup s;
  auto family = enumerate_Pkappa(kappa, max_degree);
  s.polynomials = static_cast<int>(family.size());
  bool have = false;
  for (const Poly& p : family) {
    UpsilonRecord r = best_window(p, kappa, zeta);
    if (!have || r.upsilon > s.value) {
      s.value = r.upsilon;
      s.witness = r;
      have = true;
    }
  }
  return s;
}

bool tau_bound_holds(const Rational& kappa, const Rational& zeta, int t, int n) {
  if (!(zeta > 0 && zeta < 1)) throw std::invalid_argument("zeta must lie in (0, 1)");
  if (t < 2 || n < t) throw std::invalid_argument("need 2 <= t <= n");
  const unsigned long tt = static_cast<unsigned long>(t) * static_cast<unsigned long>(t);
  const unsigned long nn = 2UL * static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
  return power(1 / zeta, tt) <= power(2 * kappa, nn);
}

TauSweep tau_bound_sweep(const Rational& kappa, const Rational& zeta, int max_degree) {
  TauSweep s;
  for (const Poly& p : enumerate_Pkappa(kappa, max_degree)) {
    for (const Window& w : anchored_windows(p, kappa, zeta)) {
      if (w.count < 2) continue;
      ++s.windows_checked;
      if (!tau_bound_holds(kappa, zeta, w.count, p.degree())) ++s.failures;
    }
  }
  return s;
}

}  // namespace drg
