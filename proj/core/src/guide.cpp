#include "drg/guide.hpp"

#include <algorithm>
#include <cmath>

#include "drg/surd.hpp"

namespace drg {

namespace {

Poly linear(long root) { return Poly({-root, 1}); }

// (x - alpha)^2 - 4 beta gamma
Poly guide_quadratic(const Triple& t) {
  const Poly s = linear(t.alpha);
  return s * s - Poly(4 * t.beta * t.gamma);
}

bool inside(const GuidePoint& p, const Rational& lo, const Rational& hi) {
  return p.left.compare(lo) < 0 && p.right.compare(hi) > 0;
}

bool meets(const GuidePoint& p, const Rational& lo, const Rational& hi) {
  return p.right.compare(lo) > 0 && p.left.compare(hi) < 0;
}

void refine_below(AlgebraicNumber& x, const Rational& width) {
  if (x.interval().width() > width) x = x.refined(width);
}

// [(top + 2M)/3, (2top + M)/3] with each endpoint moved inward by at most
// 1/1000 of the length to reach rationals.
Classification thirds(const GuideData& guide, AlgebraicNumber m, AlgebraicNumber top) {
  Rational width(1);
  refine_below(top, width);
  refine_below(m, width);
  while (!(top.lower() > m.upper())) {
    width /= 16;
    refine_below(top, width);
    refine_below(m, width);
  }
  const Rational eps = (top.lower() - m.upper()) / 3000;
  refine_below(top, eps);
  refine_below(m, eps);
  return classify_interval(guide, (top.upper() + 2 * m.upper()) / 3, (2 * top.lower() + m.lower()) / 3);
}

}  // namespace

GuideData guide_points(const GraphicalSequence& g) {
  if (g.g() < 1) throw std::invalid_argument("graphical sequence has no interior triple");
  GuideData out;
  for (int i = 1; i <= g.g(); ++i) {
    const Triple& t = g.at(i);
    const Rational m(t.beta * t.gamma);
    out.points.push_back({i, AlgebraicNumber::quadratic(t.alpha, -2, m), AlgebraicNumber::quadratic(t.alpha, 2, m)});
  }
  UnimodalityReport& r = out.report;
  const Triple first{1, g.lambda, g.kappa - g.lambda - 1};
  const Triple reflected{g.kappa - g.lambda - 1, g.lambda, 1};
  const AlgebraicNumber& r1 = out.points.front().right;
  out.right_max = r1;
  r.peak = 1;
  bool descending = false;
  for (int i = 1; i <= g.g(); ++i) {
    const AlgebraicNumber& ri = out.at(i).right;
    const int c = compare(ri, r1);
    if (c < 0) r.right_at_least_first = false;
    const bool special = g.at(i) == first || g.at(i) == reflected;
    if ((c == 0) != special) r.equality_characterized = false;
    if (ri > out.right_max) {
      out.right_max = ri;
      r.peak = i;
    }
    if (i > 1) {
      const int step = compare(ri, out.at(i - 1).right);
      if (step < 0) descending = true;
      if (step > 0 && descending) r.unimodal = false;
    }
  }
  return out;
}

Classification classify_interval(const GraphicalSequence& g, const Rational& lo, const Rational& hi) {
  return classify_interval(guide_points(g), lo, hi);
}

Classification classify_interval(const GuideData& guide, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("interval needs lo < hi");
  const int g = guide.g();
  Classification out;
  WellPlacedInterval w;
  w.lo = lo;
  w.hi = hi;
  for (int i = 2; i <= g; ++i) {
    if (guide.at(i).right.compare(hi) > 0) {
      if (w.a == 0) w.a = i;
      w.b = i;
    }
  }
  w.c = g + 1;
  for (int i = 2; i <= g; ++i) {
    if (guide.at(i).left.compare(hi) > 0) {
      w.c = std::min(w.c, i);
      w.d = std::max(w.d, i);
    }
  }
  w.d = std::max(w.d, w.c);

  if (!(guide.at(1).right.compare(lo) < 0 && guide.right_max.compare(hi) > 0)) out.violations.push_back("W1");
  for (int j = 1; j <= g; ++j) {
    const GuidePoint& p = guide.at(j);
    const bool in = inside(p, lo, hi);
    if (in) w.contained_in.push_back(j);
    if (!in && meets(p, lo, hi)) out.violations.push_back("W2:" + std::to_string(j));
  }
  if (w.a == 0) {
    out.violations.push_back("W3");
  } else if (!inside(guide.at(w.a), lo, hi)) {
    out.violations.push_back("W3:" + std::to_string(w.a));
  }
  if (out.violations.empty()) out.interval = std::move(w);
  return out;
}

std::vector<WellPlacedInterval> well_placed_cells(const GuideData& guide) {
  std::vector<double> cuts;
  for (const GuidePoint& p : guide.points) cuts.insert(cuts.end(), {p.left.to_double(), p.right.to_double()});
  std::sort(cuts.begin(), cuts.end());
  auto near = [](double x) { return ratio(std::lround(x * 1e6), 1000000); };
  std::vector<WellPlacedInterval> out;
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    const double width = cuts[k] - cuts[k - 1];
    if (width < 1e-3) continue;
    const Classification c = classify_interval(guide, near(cuts[k - 1] + width / 3), near(cuts[k] - width / 3));
    if (c.well_placed()) out.push_back(*c.interval);
  }
  return out;
}

std::array<bool, 6> partition_clauses(const GuideData& guide, const WellPlacedInterval& w) {
  const int g = guide.g();
  std::array<bool, 6> ok{};
  ok[0] = 2 <= w.a && w.a <= w.b && w.b <= g;
  ok[1] = w.c <= w.d;
  ok[2] = w.c > g || (2 <= w.a && w.a < w.c && w.c <= w.d && w.d <= w.b && w.b <= g);
  ok[3] = true;
  for (int i = 1; i <= g; ++i) {
    if ((i < w.a || w.b < i) && !(guide.at(i).right.compare(w.lo) < 0)) ok[3] = false;
  }
  ok[4] = true;
  ok[5] = true;
  if (w.c <= g) {
    for (int i = 1; i <= g; ++i) {
      if (((w.a <= i && i < w.c) || (w.d < i && i <= w.b)) && !inside(guide.at(i), w.lo, w.hi)) ok[4] = false;
    }
  } else {
    for (int i = 1; i <= g; ++i) {
      if ((w.a <= i && i <= w.b) != inside(guide.at(i), w.lo, w.hi)) ok[5] = false;
    }
  }
  return ok;
}

LenGap len_gap(const std::vector<int>& ell, const WellPlacedInterval& w) {
  const int g = static_cast<int>(ell.size()) - 1;
  auto at = [&](int i) { return static_cast<long>(ell.at(static_cast<std::size_t>(i - 1))); };
  LenGap r;
  for (int i = 1; i <= g; ++i) {
    const bool counted = w.c <= g ? ((w.a <= i && i < w.c) || (w.d < i && i <= w.b)) : (w.a <= i && i <= w.b);
    if (counted) r.len += at(i);
  }
  if (w.c <= g) {
    for (int j = w.c; j <= w.d; ++j) r.gap += at(j);
  }
  return r;
}

WellPlacedInterval find_well_placed(const GraphicalSequence& g, int target) {
  const GuideData guide = guide_points(g);
  if (target < 1 || target > guide.g()) throw std::invalid_argument("target is not an interior triple");
  return find_well_placed(g, target, guide.at(1).right, guide.at(target).right);
}

WellPlacedInterval find_well_placed(const GraphicalSequence& g, int target, const AlgebraicNumber& lo,
                                    const AlgebraicNumber& hi) {
  const GuideData guide = guide_points(g);
  if (target < 1 || target > guide.g()) throw std::invalid_argument("target is not an interior triple");
  const AlgebraicNumber& r1 = guide.at(1).right;
  const AlgebraicNumber& rt = guide.at(target).right;
  if (rt <= r1) throw NoInterval("guide point of the target does not exceed R_1");
  if (!(lo < hi) || lo < r1 || hi > rt) throw NoInterval("range is empty or leaves [R_1, R_target]");

  // Cells of [lo, hi] cut by guide points; the thirds construction uses the
  // top cell [M, hi]. Every closed subinterval of a cell classifies alike, so
  // lower cells are tried when the top one is not well-placed.
  std::vector<AlgebraicNumber> cuts{lo, hi};
  for (const GuidePoint& p : guide.points) {
    for (const AlgebraicNumber* y : {&p.left, &p.right}) {
      if (*y > lo && *y < hi) cuts.push_back(*y);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::string first_reason;
  for (std::size_t k = cuts.size() - 1; k > 0; --k) {
    Classification c = thirds(guide, cuts[k - 1], cuts[k]);
    if (c.well_placed()) return *c.interval;
    if (first_reason.empty()) first_reason = c.reason();
  }
  throw NoInterval("no well-placed interval in the range (thirds interval fails " + first_reason + ")");
}

std::vector<int> delta_offsets(const Quadruple& q) {
  const int g = q.g.g();
  std::vector<int> js;
  for (auto it = q.delta.rbegin(); it != q.delta.rend(); ++it) js.push_back(g - *it);
  return js;
}

FGPolynomials fg_polynomials(const Quadruple& q, int position) {
  const std::vector<int> js = delta_offsets(q);
  if (position < 0 || position >= static_cast<int>(js.size())) throw std::invalid_argument("Delta position out of range");
  const int g = q.g.g();
  const int prev = position == 0 ? -1 : js[static_cast<std::size_t>(position - 1)];
  const int n = js[static_cast<std::size_t>(position)] - prev - 1;
  FGPolynomials out;
  out.position = position;
  out.anchor_row = q.tridiagonal().s(g - prev);
  if (n == 0) {
    out.f1 = Poly();
    out.g1 = Poly(1);
    out.f2 = Poly(1);
    out.g2 = Poly();
    return out;
  }
  out.adjacent = false;
  // v_{j+1} = ((x - alpha~_j) v_j - beta~_j v_{j-1}) / gamma~_j
  Poly f_prev, f_cur(1), g_prev(1), g_cur;
  for (int s = 1; s <= n; ++s) {
    const int t = g - prev - s;
    const Triple& z = q.g.at(t);
    for (int k = 0; k < q.L_at(t); ++k) {
      const Poly lead = linear(z.alpha);
      const Rational inv(1, z.gamma);
      Poly f_next = (lead * f_cur - Poly(z.beta) * f_prev) * inv;
      Poly g_next = (lead * g_cur - Poly(z.beta) * g_prev) * inv;
      f_prev = std::move(f_cur);
      f_cur = std::move(f_next);
      g_prev = std::move(g_cur);
      g_cur = std::move(g_next);
      ++out.N;
    }
  }
  out.f1 = f_prev;
  out.g1 = g_prev;
  out.f2 = f_cur;
  out.g2 = g_cur;
  return out;
}

bool BadRootSet::contains(const AlgebraicNumber& x) const {
  return std::binary_search(roots.begin(), roots.end(), x);
}

BadRootSet bad_set(const Quadruple& q) {
  const GuideData guide = guide_points(q.g);
  const std::vector<int> js = delta_offsets(q);
  const int g = q.g.g();
  const Triple& last = q.g.at(g + 1);
  BadRootSet out;
  for (int i = 0; i < static_cast<int>(js.size()); ++i) {
    const int t = g - js[static_cast<std::size_t>(i)];
    const Triple& d = q.g.at(t);
    if (d.beta > d.gamma) continue;
    const FGPolynomials fg = fg_polynomials(q, i);
    SurdExpression e;
    e.q1 = guide_quadratic(d);
    const Poly s1 = linear(d.alpha);
    if (i == 0) {
      // xi = (x - alpha + sqrt(q1)) / (2 gamma); P = A xi - B
      const Poly A = linear(last.alpha) * fg.f1 + Poly(last.gamma) * fg.g1;
      const Poly B = linear(last.alpha) * fg.f2 + Poly(last.gamma) * fg.g2;
      const Rational h(1, 2 * d.gamma);
      e.P1 = A * s1 * h - B;
      e.P2 = A * h;
      e.q2 = e.q1;
    } else {
      // chi from the previous Delta triple; P = f1 xi chi - f2 chi + g1 xi - g2
      const Triple& d2 = q.g.at(g - js[static_cast<std::size_t>(i - 1)]);
      e.q2 = guide_quadratic(d2);
      const Poly s2 = linear(d2.alpha);
      const Rational h1(1, 2 * d.gamma), h2(1, 2 * d2.gamma), h12(1, 4 * d.gamma * d2.gamma);
      e.P1 = fg.f1 * s1 * s2 * h12 - fg.f2 * s2 * h2 + fg.g1 * s1 * h1 - fg.g2;
      e.P2 = fg.f1 * s2 * h12 + fg.g1 * h1;
      e.P3 = fg.f1 * s1 * h12 - fg.f2 * h2;
      e.P4 = fg.f1 * h12;
    }
    auto rat = surd_rationalization(e);
    if (!rat) throw std::logic_error("bad-root factor vanished identically at position " + std::to_string(i));
    BadRootBranch br;
    br.position = i;
    br.triple = t;
    br.polynomial = *rat;
    br.lo = guide.at(t).right;
    br.hi = guide.right_max;
    br.bound = (i == 0 ? 8 : 16) * (4 + fg.f1.degree());
    for (const AlgebraicNumber& r : real_roots(br.polynomial)) {
      if (r >= br.lo && r <= br.hi) br.roots.push_back(r);
    }
    std::reverse(br.roots.begin(), br.roots.end());
    out.roots.insert(out.roots.end(), br.roots.begin(), br.roots.end());
    out.branches.push_back(std::move(br));
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
  long free_mass = 0;
  for (int i = 1; i <= g + 1; ++i) {
    if (!q.in_delta(i)) free_mass += q.L_at(i);
  }
  out.bound = 16L * (g + 1) * (3 + free_mass);
  return out;
}

WellPlacedInterval avoid_bad_roots(const GuideData& guide, const WellPlacedInterval& w, const BadRootSet& bad) {
  std::vector<AlgebraicNumber> hits;
  for (const AlgebraicNumber& r : bad.roots) {
    if (r.compare(w.lo) >= 0 && r.compare(w.hi) <= 0) hits.push_back(r);
  }
  if (hits.empty()) return w;
  const Rational eps = (w.hi - w.lo) / (4 * static_cast<long>(hits.size() + 1));
  Rational best_lo, best_hi, best_len = -1;
  Rational start = w.lo;
  auto consider = [&](const Rational& a, const Rational& b) {
    if (b - a > best_len) {
      best_len = b - a;
      best_lo = a;
      best_hi = b;
    }
  };
  for (AlgebraicNumber r : hits) {
    refine_below(r, eps);
    consider(start, r.lower());
    start = r.upper();
  }
  consider(start, w.hi);
  const Rational third = best_len / 3;
  Classification c = classify_interval(guide, best_lo + third, best_hi - third);
  if (!c.well_placed()) throw std::logic_error("sub-interval of a well-placed interval rejected: " + c.reason());
  return *c.interval;
}

WellPlacedInterval find_avoiding(const Quadruple& q, int target) {
  return avoid_bad_roots(guide_points(q.g), find_well_placed(q.g, target), bad_set(q));
}

WellPlacedInterval find_avoiding(const Quadruple& q, int target, const AlgebraicNumber& lo, const AlgebraicNumber& hi) {
  return avoid_bad_roots(guide_points(q.g), find_well_placed(q.g, target, lo, hi), bad_set(q));
}

std::vector<GapStep> gap_chain(const GraphicalSequence& g, const std::vector<int>& ell, const WellPlacedInterval& w) {
  const GuideData guide = guide_points(g);
  const int G = guide.g();
  std::vector<GapStep> steps{{w, len_gap(ell, w), 0}};
  while (steps.back().measure.gap != 0) {
    if (static_cast<int>(steps.size()) > G) throw std::logic_error("gap chain did not terminate within g steps");
    const GapStep& cur = steps.back();
    std::vector<int> candidates;
    for (int j = cur.interval.c; j <= std::min(cur.interval.d, G); ++j) {
      const long lj = ell.at(static_cast<std::size_t>(j - 1));
      if (lj * G > cur.measure.gap && guide.at(j).right.compare(cur.interval.hi) > 0) candidates.push_back(j);
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](int x, int y) {
      return ell.at(static_cast<std::size_t>(x - 1)) > ell.at(static_cast<std::size_t>(y - 1));
    });
    std::optional<GapStep> next;
    for (int j : candidates) {
      try {
        WellPlacedInterval J = find_well_placed(g, j, AlgebraicNumber(cur.interval.hi), guide.at(j).right);
        const LenGap m = len_gap(ell, J);
        next = GapStep{std::move(J), m, j};
        break;
      } catch (const NoInterval&) {
      }
    }
    if (!next) throw NoInterval("no well-placed interval above a positive gap");
    steps.push_back(std::move(*next));
  }
  return steps;
}

}  // namespace drg
