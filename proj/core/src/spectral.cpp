#include "drg/spectral.hpp"

#include <algorithm>
#include <stdexcept>

#include "drg/factor.hpp"

namespace drg {

L1Matrix l1_matrix(const TridiagonalSequence& t) {
  L1Matrix m;
  const int D = t.diameter();
  for (int i = 0; i <= D; ++i) m.diag.push_back(t.row(i).alpha);
  for (int i = 0; i < D; ++i) m.super.push_back(t.row(i).beta);
  for (int i = 1; i <= D; ++i) m.sub.push_back(t.row(i).gamma);
  return m;
}

Poly tridiagonal_charpoly(const std::vector<long>& diag, const std::vector<long>& offdiag_products) {
  Poly prev(1);
  if (diag.empty()) return prev;
  Poly cur = Poly::x() - Poly(diag[0]);
  for (std::size_t k = 1; k < diag.size(); ++k) {
    Poly next = (Poly::x() - Poly(diag[k])) * cur - Poly(offdiag_products.at(k - 1)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly principal_minor_charpoly(const L1Matrix& m, int r) {
  const int n = m.order();
  if (r < 0 || r >= n) throw std::out_of_range("row index outside the matrix");
  auto block = [&](int from, int to) {  // rows from..to inclusive
    std::vector<long> d, off;
    for (int i = from; i <= to; ++i) d.push_back(m.diag[static_cast<std::size_t>(i)]);
    for (int i = from; i < to; ++i) {
      off.push_back(m.super[static_cast<std::size_t>(i)] * m.sub[static_cast<std::size_t>(i)]);
    }
    return tridiagonal_charpoly(d, off);
  };
  return block(0, r - 1) * block(r + 1, n - 1);
}

CompanionPolynomials companion_polys(const TridiagonalSequence& t) {
  const int D = t.diameter();
  const Poly x = Poly::x();
  CompanionPolynomials cp;
  cp.v = {Poly(1), x};
  for (int i = 1; i <= D - 1; ++i) {
    Poly next = (x - Poly(t.row(i).alpha)) * cp.v[i] - Poly(t.row(i - 1).beta) * cp.v[i - 1];
    next *= Rational(1, t.row(i + 1).gamma);
    cp.v.push_back(std::move(next));
  }
  cp.v.push_back((x - Poly(t.row(D).alpha)) * cp.v[D] - Poly(t.row(D - 1).beta) * cp.v[D - 1]);

  const long k = t.kappa();
  cp.F = {Poly(1), Poly({1, 1})};
  for (int i = 2; i <= D; ++i) {
    const Triple& prev = t.row(i - 1);
    Poly lin = x - Poly(k - prev.beta - t.row(i).gamma);
    cp.F.push_back(lin * cp.F[i - 1] - Poly(prev.beta * prev.gamma) * cp.F[i - 2]);
  }

  for (int i = 0; i <= D; ++i) {
    Rational ki = cp.v[i](Rational(k));
    cp.u.push_back(cp.v[i] * (1 / ki));
  }
  return cp;
}

Poly characteristic_poly(const TridiagonalSequence& t) {
  return (Poly::x() - Poly(t.kappa())) * companion_polys(t).F.back();
}

Spectrum spectrum(const TridiagonalSequence& t, const Rational& width) {
  Spectrum s;
  s.charpoly = characteristic_poly(t);
  struct Entry {
    AlgebraicNumber value;
    int factor;
  };
  std::vector<Entry> all;
  for (const Factor& f : factor_integer_poly(s.charpoly)) {
    if (f.multiplicity != 1) throw std::logic_error("characteristic polynomial has a repeated root");
    SpectrumFactor sf{f.poly, {}};
    for (const Interval& iv : isolate_real_roots(f.poly)) {
      sf.roots.push_back(AlgebraicNumber::from_irreducible(f.poly, iv).refined(width));
    }
    if (static_cast<int>(sf.roots.size()) != f.poly.degree()) {
      throw std::logic_error("characteristic polynomial has non-real roots");
    }
    std::reverse(sf.roots.begin(), sf.roots.end());
    for (const auto& r : sf.roots) all.push_back({r, static_cast<int>(s.factors.size())});
    s.factors.push_back(std::move(sf));
  }
  std::sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) { return a.value > b.value; });
  for (auto& e : all) {
    s.eigenvalues.push_back(e.value);
    s.factor_of.push_back(e.factor);
  }
  if (static_cast<int>(s.eigenvalues.size()) != t.diameter() + 1 || s.eigenvalues.front() != AlgebraicNumber(t.kappa())) {
    throw std::logic_error("unexpected spectrum shape");
  }
  return s;
}

std::vector<FieldElement> standard_vector(const TridiagonalSequence& t, const FieldElement& theta) {
  const FieldPtr& F = theta.field();
  const int D = t.diameter();
  std::vector<FieldElement> u{FieldElement(F, Rational(1)), theta * FieldElement(F, Rational(1, t.kappa()))};
  for (int i = 1; i <= D - 1; ++i) {
    const Triple& r = t.row(i);
    FieldElement next = (theta - FieldElement(F, Rational(r.alpha))) * u[i] - FieldElement(F, Rational(r.gamma)) * u[i - 1];
    u.push_back(next * FieldElement(F, Rational(1, r.beta)));
  }
  return u;
}

std::vector<FieldElement> standard_vector(const TridiagonalSequence& t, const AlgebraicNumber& theta) {
  return standard_vector(t, FieldElement::generator(make_field(theta)));
}

std::vector<FieldElement> apply_l1(const TridiagonalSequence& t, const std::vector<FieldElement>& w) {
  const int D = t.diameter();
  if (static_cast<int>(w.size()) != D + 1) throw std::invalid_argument("vector length must be D + 1");
  const FieldPtr& F = w.front().field();
  std::vector<FieldElement> out;
  for (int m = 0; m <= D; ++m) {
    const Triple& r = t.row(m);
    FieldElement acc = FieldElement(F, Rational(r.alpha)) * w[m];
    if (m > 0) acc = acc + FieldElement(F, Rational(r.gamma)) * w[m - 1];
    if (m < D) acc = acc + FieldElement(F, Rational(r.beta)) * w[m + 1];
    out.push_back(acc);
  }
  return out;
}

InterlacingResult check_interlacing(const TridiagonalSequence& t, int row) {
  InterlacingResult res;
  Spectrum s = spectrum(t);
  res.full.assign(s.eigenvalues.rbegin(), s.eigenvalues.rend());
  Poly minor = principal_minor_charpoly(l1_matrix(t), row);
  if (minor.degree() > 0) {
    for (const Factor& f : factor_integer_poly(minor)) {
      for (const Interval& iv : isolate_real_roots(f.poly)) {
        AlgebraicNumber r = AlgebraicNumber::from_irreducible(f.poly, iv);
        for (int k = 0; k < f.multiplicity; ++k) res.minor.push_back(r);
      }
    }
  }
  std::sort(res.minor.begin(), res.minor.end());
  res.holds = res.minor.size() + 1 == res.full.size();
  for (std::size_t k = 0; res.holds && k < res.minor.size(); ++k) {
    res.holds = res.full[k] <= res.minor[k] && res.minor[k] <= res.full[k + 1];
  }
  return res;
}

std::vector<AlgebraicNumber> localization_points(const Triple& tr, int ell) {
  if (ell < 1) throw std::invalid_argument("run length must be positive");
  // Roots of chebyshev_charpoly(ell) are 2cos(j pi/(ell+1)); scaling them by
  // sqrt(m) keeps the coefficients rational because the polynomial has
  // parity ell.
  const Poly U = chebyshev_charpoly(ell);
  const Rational m(tr.beta * tr.gamma);
  std::vector<Rational> c(static_cast<std::size_t>(ell + 1));
  for (int k = 0; k <= ell; ++k) {
    if ((ell - k) % 2 != 0) continue;
    c[static_cast<std::size_t>(k)] = U.coeff(k) * power(m, static_cast<unsigned long>((ell - k) / 2));
  }
  Poly W = Poly(c).shift(Rational(-tr.alpha));
  auto pts = real_roots(W);
  if (static_cast<int>(pts.size()) != ell) throw std::logic_error("localization polynomial lost roots");
  return pts;
}

std::vector<LocalizationInstance> check_localization(const TridiagonalSequence& t, const Spectrum& s) {
  const int D = t.diameter();
  for (int m = 1; m <= D; ++m) {
    if (t.row(m - 1).beta < t.row(m).beta || t.row(m - 1).gamma > t.row(m).gamma) {
      throw std::invalid_argument("localization needs nonincreasing b and nondecreasing c");
    }
  }
  const AlgebraicNumber kappa(t.kappa());
  std::vector<LocalizationInstance> out;
  for (int i = 1; i <= t.g(); ++i) {
    const int ell = t.ell(i);
    if (ell < 2) continue;
    auto pts = localization_points(t.base().at(i), ell);
    LocalizationInstance first;
    first.index = i;
    first.j = 2;
    first.lower = pts[1];
    first.upper = kappa;
    first.upper_open = true;
    for (const auto& th : s.eigenvalues) {
      if (th < kappa && th >= first.lower) {
        first.witness = th;
        break;
      }
    }
    out.push_back(first);
    for (int j = 3; j <= ell; ++j) {
      LocalizationInstance inst;
      inst.index = i;
      inst.j = j;
      inst.lower = pts[static_cast<std::size_t>(j - 1)];
      inst.upper = pts[static_cast<std::size_t>(j - 3)];
      for (const auto& th : s.eigenvalues) {
        if (th >= inst.lower && th <= inst.upper) {
          inst.witness = th;
          break;
        }
      }
      out.push_back(inst);
    }
  }
  return out;
}

std::vector<LocalizationInstance> check_localization(const TridiagonalSequence& t) {
  return check_localization(t, spectrum(t));
}

int eigencount_in_interval(const TridiagonalSequence& t, const Rational& lo, const Rational& hi) {
  if (lo > hi) return 0;
  return SturmChain(characteristic_poly(t)).count_closed(lo, hi);
}

}  // namespace drg
