#include "drg/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace drg {

namespace {

// ---------------------------------------------------------------------------
// Dense polynomials over Z/p, lowest degree first, always trimmed.

using ModPoly = std::vector<std::int64_t>;

struct Zp {
  std::int64_t p;

  std::int64_t reduce(std::int64_t v) const {
    v %= p;
    return v < 0 ? v + p : v;
  }
  std::int64_t reduce(const Integer& v) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
    return static_cast<std::int64_t>(r.get_si());
  }
  std::int64_t inverse(std::int64_t a) const {
    std::int64_t t = 0, nt = 1, r = p, nr = reduce(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw std::domain_error("non-invertible residue");
    return reduce(t);
  }

  static void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

  ModPoly add(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = reduce(r[i] + b[i]);
    trim(r);
    return r;
  }
  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = reduce(r[i] - b[i]);
    trim(r);
    return r;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  ModPoly scale(const ModPoly& a, std::int64_t s) const {
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * reduce(s) % p;
    trim(r);
    return r;
  }
  void divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) const {
    if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
    r = a;
    if (deg(a) < deg(b)) {
      q.clear();
      return;
    }
    const int db = deg(b);
    const std::int64_t inv = inverse(b.back());
    q.assign(static_cast<std::size_t>(deg(a) - db) + 1, 0);
    for (int k = deg(a) - db; k >= 0; --k) {
      std::int64_t c = r[static_cast<std::size_t>(k + db)] * inv % p;
      q[static_cast<std::size_t>(k)] = c;
      if (c == 0) continue;
      for (int j = 0; j <= db; ++j) {
        auto idx = static_cast<std::size_t>(k + j);
        r[idx] = reduce(r[idx] - c * b[static_cast<std::size_t>(j)]);
      }
    }
    r.resize(static_cast<std::size_t>(db));
    trim(r);
    trim(q);
  }
  ModPoly rem(const ModPoly& a, const ModPoly& b) const {
    ModPoly q, r;
    divmod(a, b, q, r);
    return r;
  }
  ModPoly quo(const ModPoly& a, const ModPoly& b) const {
    ModPoly q, r;
    divmod(a, b, q, r);
    return q;
  }
  ModPoly monic(const ModPoly& a) const {
    if (a.empty()) return a;
    return scale(a, inverse(a.back()));
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = 1 for coprime a, b
  void bezout(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      ModPoly q, r;
      divmod(r0, r1, q, r);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (deg(r0) != 0) throw std::logic_error("bezout on non-coprime polynomials");
    std::int64_t inv = inverse(r0[0]);
    s = scale(s0, inv);
    t = scale(t0, inv);
  }
  ModPoly derivative(const ModPoly& a) const {
    if (a.size() <= 1) return {};
    ModPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<std::int64_t>(i % p) % p;
    trim(d);
    return d;
  }
  ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) const {
    ModPoly result{1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
    }
    return result;
  }
};

ModPoly to_mod(const std::vector<Integer>& f, const Zp& z) {
  ModPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = z.reduce(f[i]);
  Zp::trim(r);
  return r;
}

// Distinct-degree factorization of a monic squarefree polynomial mod p.
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f, const Zp& z) {
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly rest = f;
  const ModPoly x{0, 1};
  ModPoly h = x;
  for (int d = 1; 2 * d <= Zp::deg(rest); ++d) {
    h = z.powmod(h, Integer(z.p), rest);
    ModPoly g = z.gcd(rest, z.sub(h, x));
    if (Zp::deg(g) > 0) {
      out.emplace_back(g, d);
      rest = z.quo(rest, g);
      h = z.rem(h, rest);
    }
  }
  if (Zp::deg(rest) > 0) out.emplace_back(rest, Zp::deg(rest));
  return out;
}

void equal_degree(const ModPoly& g, int d, const Zp& z, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const int n = Zp::deg(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer e = (power(Integer(z.p), static_cast<unsigned long>(d)) - 1) / 2;
  std::uniform_int_distribution<std::int64_t> coin(0, z.p - 1);
  while (true) {
    ModPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coin(rng);
    Zp::trim(a);
    if (Zp::deg(a) < 1) continue;
    ModPoly b = z.sub(z.powmod(a, e, g), ModPoly{1});
    ModPoly h = z.gcd(g, b);
    if (Zp::deg(h) > 0 && Zp::deg(h) < n) {
      equal_degree(h, d, z, rng, out);
      equal_degree(z.quo(g, h), d, z, rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Integer polynomials (coefficient vectors, lowest degree first).

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<long>(a[i]));
  return r;
}

void reduce_mod(ZPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
}

void symmetric_mod(ZPoly& a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
}

// Lifts monic F = g*h mod p to F = G*H mod modulus (a power of p).
void hensel_two(const ZPoly& F, const ModPoly& g, const ModPoly& h, const Zp& z, const Integer& modulus,
                ZPoly& G, ZPoly& H) {
  ModPoly s, t;
  z.bezout(g, h, s, t);
  G = from_mod(g);
  H = from_mod(h);
  Integer q = z.p;
  while (q < modulus) {
    ZPoly diff = F;
    ZPoly gh = zmul(G, H);
    diff.resize(std::max(diff.size(), gh.size()), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    ztrim(diff);
    for (auto& c : diff) {
      if (!mpz_divisible_p(c.get_mpz_t(), q.get_mpz_t())) throw std::logic_error("Hensel lifting invariant broken");
      c /= q;
    }
    ModPoly e = to_mod(diff, z);
    ModPoly dg = z.rem(z.mul(t, e), g);
    ModPoly dh = z.quo(z.sub(e, z.mul(h, dg)), g);
    ZPoly DG = from_mod(dg), DH = from_mod(dh);
    G.resize(std::max(G.size(), DG.size()), Integer(0));
    H.resize(std::max(H.size(), DH.size()), Integer(0));
    for (std::size_t i = 0; i < DG.size(); ++i) G[i] += q * DG[i];
    for (std::size_t i = 0; i < DH.size(); ++i) H[i] += q * DH[i];
    q *= z.p;
    reduce_mod(G, q);
    reduce_mod(H, q);
  }
}

void hensel_multi(const ZPoly& F, const std::vector<ModPoly>& factors, const Zp& z, const Integer& modulus,
                  std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    ZPoly f = F;
    reduce_mod(f, modulus);
    out.push_back(f);
    return;
  }
  ModPoly rest{1};
  for (std::size_t i = 1; i < factors.size(); ++i) rest = z.mul(rest, factors[i]);
  ZPoly G, H;
  hensel_two(F, factors[0], rest, z, modulus, G, H);
  out.push_back(G);
  std::vector<ModPoly> tail(factors.begin() + 1, factors.end());
  hensel_multi(H, tail, z, modulus, out);
}

Poly to_poly(const ZPoly& a) {
  std::vector<Rational> c(a.begin(), a.end());
  return Poly(std::move(c));
}

bool divides_exactly(const Poly& f, const Poly& g, Poly& quotient) {
  DivMod qr = divmod(f, g);
  if (!qr.remainder.is_zero()) return false;
  if (!qr.quotient.has_integer_coefficients()) return false;
  quotient = std::move(qr.quotient);
  return true;
}

const int kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                       71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
                       151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229};

// Zassenhaus on a monic squarefree integer polynomial of degree >= 2.
std::vector<Poly> zassenhaus_monic(const Poly& F) {
  const int n = F.degree();
  ZPoly Fz = F.integer_coefficients();

  // prime with fewest modular factors among the first few good primes
  int best_p = 0;
  std::size_t best_count = 0;
  std::vector<std::pair<ModPoly, int>> best_ddf;
  int good = 0;
  for (int p : kPrimes) {
    Zp z{p};
    ModPoly fm = to_mod(Fz, z);
    if (Zp::deg(fm) != n) continue;
    if (Zp::deg(z.gcd(fm, z.derivative(fm))) != 0) continue;
    auto ddf = distinct_degree(fm, z);
    std::size_t count = 0;
    for (const auto& [g, d] : ddf) count += static_cast<std::size_t>(Zp::deg(g) / d);
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
      best_ddf = ddf;
    }
    if (count == 1) return {F};
    if (++good >= 6) break;
  }
  if (best_p == 0) throw std::runtime_error("no suitable prime for factorization");

  Zp z{best_p};
  std::mt19937_64 rng(0x5eed);
  std::vector<ModPoly> modular;
  for (const auto& [g, d] : best_ddf) equal_degree(z.monic(g), d, z, rng, modular);
  std::sort(modular.begin(), modular.end(), [](const ModPoly& a, const ModPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  // coefficient bound for monic factors: 2^n * ||F||_2
  Integer norm2 = 0;
  for (const auto& c : Fz) norm2 += c * c;
  Integer bound = power(Integer(2), static_cast<unsigned long>(n)) * (isqrt(norm2) + 1);
  Integer modulus = z.p;
  while (modulus <= 2 * bound) modulus *= z.p;

  std::vector<ZPoly> lifted;
  hensel_multi(Fz, modular, z, modulus, lifted);

  std::vector<Poly> found;
  Poly rest = F;
  std::vector<ZPoly> pool = lifted;
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    bool progress = false;
    const std::size_t r = pool.size();
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ZPoly prod{Integer(1)};
      for (std::size_t i : idx) {
        prod = zmul(prod, pool[i]);
        reduce_mod(prod, modulus);
      }
      symmetric_mod(prod, modulus);
      Poly cand = to_poly(prod);
      Poly quotient;
      bool constant_ok = true;
      if (rest.coeff(0) != 0 && cand.coeff(0) != 0) {
        constant_ok = mpz_divisible_p(rest.coeff(0).get_num_mpz_t(), cand.coeff(0).get_num_mpz_t()) != 0;
      }
      if (constant_ok && cand.degree() > 0 && divides_exactly(rest, cand, quotient)) {
        found.push_back(cand);
        rest = quotient;
        std::vector<ZPoly> next;
        for (std::size_t i = 0; i < r; ++i) {
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
        }
        pool = std::move(next);
        progress = true;
        break;
      }
      // next combination
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == r - size + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progress) ++size;
  }
  if (rest.degree() > 0) found.push_back(rest);
  return found;
}

std::vector<Integer> divisors_of(Integer v, std::size_t limit) {
  v = abs(v);
  std::vector<std::pair<Integer, int>> primes;
  Integer d = 2;
  while (d * d <= v) {
    if (v % d == 0) {
      int e = 0;
      while (v % d == 0) {
        v /= d;
        ++e;
      }
      primes.emplace_back(d, e);
    }
    d += 1;
  }
  if (v > 1) primes.emplace_back(v, 1);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [q, e] : primes) {
    std::size_t sz = divs.size();
    Integer f = 1;
    for (int k = 1; k <= e; ++k) {
      f *= q;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * f);
    }
    if (divs.size() > limit) return {};
  }
  return divs;
}

// Peels rational roots off a squarefree primitive polynomial when the
// candidate set is small; anything left over goes to Zassenhaus.
void strip_rational_roots(Poly& f, std::vector<Poly>& linear) {
  if (f.coeff(0) == 0) {
    linear.push_back(Poly::x());
    f = f / Poly::x();
  }
  if (f.degree() < 1) return;
  const Integer a0 = f.coeff(0).get_num();
  const Integer an = f.leading().get_num();
  const Integer cap("1000000000000");
  if (abs(a0) > cap || abs(an) > cap) return;
  auto num = divisors_of(a0, 2000);
  auto den = divisors_of(an, 2000);
  if (num.empty() || den.empty() || num.size() * den.size() > 40000) return;
  std::vector<Rational> cands;
  for (const auto& a : num) {
    for (const auto& b : den) {
      Rational q(a, b);
      q.canonicalize();
      cands.push_back(q);
      cands.push_back(-q);
    }
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const auto& q : cands) {
    if (f.degree() < 1) break;
    if (f(q) == 0) {
      Poly lin = Poly(std::vector<Rational>{-q, 1}).primitive();
      linear.push_back(lin);
      f = (f / lin).primitive();
    }
  }
}

bool factor_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coefficients() < b.coefficients();
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& p) {
  Poly f = p.primitive();
  std::vector<Poly> out;
  if (f.degree() < 1) return out;
  strip_rational_roots(f, out);
  if (f.degree() == 1) {
    out.push_back(f);
  } else if (f.degree() >= 2) {
    const Integer a = f.leading().get_num();
    const int n = f.degree();
    // monic transform F(x) = a^(n-1) f(x/a)
    Poly F = f;
    if (a != 1) {
      // coefficient i of a^(n-1) f(x/a) is f_i a^(n-1-i); the leading one is 1
      std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
      c[static_cast<std::size_t>(n)] = 1;
      for (int i = 0; i < n; ++i) {
        c[static_cast<std::size_t>(i)] = f.coeff(i) * power(Rational(a), static_cast<unsigned long>(n - 1 - i));
      }
      F = Poly(std::move(c));
    }
    for (const auto& G : zassenhaus_monic(F)) {
      out.push_back(a == 1 ? G.primitive() : G.scale_argument(Rational(a)).primitive());
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

std::vector<Factor> factor_integer_poly(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  if (!p.has_integer_coefficients()) throw std::invalid_argument("factor_integer_poly expects integer coefficients");
  return factor_rational_poly(p);
}

std::vector<Factor> factor_rational_poly(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  std::vector<Factor> out;
  for (const auto& [s, mult] : squarefree_decomposition(p)) {
    for (auto& f : factor_squarefree(s)) out.push_back({std::move(f), mult});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly != b.poly) return factor_less(a.poly, b.poly);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

bool is_irreducible(const Poly& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  if (squarefree_part(p).degree() != p.degree()) return false;
  return factor_squarefree(p).size() == 1;
}

}  // namespace drg
