#include <gtest/gtest.h>

#include <cmath>

#include "drg/guide.hpp"
#include "random_sequences.hpp"

using drg::AlgebraicNumber;
using drg::GraphicalSequence;
using drg::Poly;
using drg::Quadruple;
using drg::Rational;

namespace {

GraphicalSequence synthetic20() { return {{{1, 0, 19}, {2, 10, 8}, {3, 15, 2}, {6, 14, 0}}, 20, 0}; }

// Same shape with a triple whose guide point reaches kappa (beta == gamma).
GraphicalSequence balanced20() { return {{{1, 0, 19}, {2, 10, 8}, {4, 12, 4}, {6, 14, 0}}, 20, 0}; }

Quadruple synthetic_quadruple() { return {synthetic20(), {1, 3}, {5, 4, 3, 1}, {5, 4, 3, 1}}; }

double right_of(const drg::Triple& t) { return t.alpha + 2 * std::sqrt(double(t.beta * t.gamma)); }
double left_of(const drg::Triple& t) { return t.alpha - 2 * std::sqrt(double(t.beta * t.gamma)); }

Rational rat(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// a, b, c, d and the W1-W3 verdict in floating point; nullopt when some guide
// point is within 1e-9 of an endpoint.
struct FloatClass {
  int a = 0, b = 0, c = 0, d = 0;
  bool w1 = false, w2 = true, w3 = false;
};

std::optional<FloatClass> float_classify(const GraphicalSequence& g, double lo, double hi) {
  const int n = g.g();
  for (int i = 1; i <= n; ++i) {
    for (double y : {left_of(g.at(i)), right_of(g.at(i))}) {
      if (std::abs(y - lo) < 1e-9 || std::abs(y - hi) < 1e-9) return std::nullopt;
    }
  }
  FloatClass f;
  double rmax = right_of(g.at(1));
  for (int i = 1; i <= n; ++i) rmax = std::max(rmax, right_of(g.at(i)));
  f.w1 = right_of(g.at(1)) < lo && hi < rmax;
  for (int i = 2; i <= n; ++i) {
    if (hi < right_of(g.at(i))) {
      if (f.a == 0) f.a = i;
      f.b = i;
    }
  }
  f.c = n + 1;
  for (int i = n; i >= 2; --i) {
    if (hi < left_of(g.at(i))) f.c = i;
  }
  f.d = f.c;
  for (int i = 2; i <= n; ++i) {
    if (hi < left_of(g.at(i))) f.d = std::max(f.d, i);
  }
  for (int j = 1; j <= n; ++j) {
    const bool in = left_of(g.at(j)) < lo && hi < right_of(g.at(j));
    const bool meet = lo < right_of(g.at(j)) && left_of(g.at(j)) < hi;
    if (meet && !in) f.w2 = false;
  }
  f.w3 = f.a != 0 && left_of(g.at(f.a)) < lo && hi < right_of(g.at(f.a));
  return f;
}

// Standard sequence at a rational point from the rows of the tridiagonal
// sequence: c_m u_{m-1} + a_m u_m + b_m u_{m+1} = theta u_m.
std::vector<Rational> standard_at(const drg::TridiagonalSequence& t, const Rational& theta) {
  std::vector<Rational> u{Rational(1), theta / t.kappa()};
  for (int m = 1; m < t.diameter(); ++m) {
    const auto& r = t.row(m);
    u.push_back(((theta - r.alpha) * u[m] - Rational(r.gamma) * u[m - 1]) / Rational(r.beta));
  }
  return u;
}

// The bad-root polynomial rebuilt from symmetric functions of the roots of
// gamma X^2 + (alpha - x) X + beta, without surds.
Poly symmetric_bad_poly(const Quadruple& q, int i) {
  const auto js = drg::delta_offsets(q);
  const int g = q.g.g();
  const auto& d = q.g.at(g - js[i]);
  const auto fg = drg::fg_polynomials(q, i);
  const Poly x = Poly::x();
  const Poly e1 = x - Poly(d.alpha);  // gamma (xi1 + xi2)
  if (i == 0) {
    const auto& last = q.g.at(g + 1);
    const Poly A = (x - Poly(last.alpha)) * fg.f1 + Poly(last.gamma) * fg.g1;
    const Poly B = (x - Poly(last.alpha)) * fg.f2 + Poly(last.gamma) * fg.g2;
    // gamma * (A xi1 - B)(A xi2 - B)
    return Poly(d.beta) * A * A - e1 * A * B + Poly(d.gamma) * B * B;
  }
  const auto& d2 = q.g.at(g - js[i - 1]);
  const Poly x2 = x - Poly(d2.alpha);
  const Poly &f1 = fg.f1, &f2 = fg.f2, &g1 = fg.g1, &g2 = fg.g2;
  // product over chi of ((f1 xi - f2) chi + g1 xi - g2), times gamma2, as
  // c2 xi^2 + c1 xi + c0
  const Poly b2(d2.beta), c2g(d2.gamma);
  const Poly c2 = b2 * f1 * f1 + x2 * f1 * g1 + c2g * g1 * g1;
  const Poly c1 = Poly(-2) * b2 * f1 * f2 - x2 * (f1 * g2 + f2 * g1) - Poly(2) * c2g * g1 * g2;
  const Poly c0 = b2 * f2 * f2 + x2 * f2 * g2 + c2g * g2 * g2;
  // product over the roots xi of gamma X^2 + (alpha - x) X + beta, times
  // gamma^2: xi1 + xi2 = e1 / gamma, xi1 xi2 = beta / gamma
  const Poly b(d.beta), G(d.gamma);
  return c2 * c2 * b * b + c2 * c1 * b * e1 + c2 * c0 * (e1 * e1 - Poly(2) * b * G) + c1 * c1 * b * G +
         c1 * c0 * e1 * G + c0 * c0 * G * G;
}

// find_well_placed, with a NoInterval verdict confirmed in floating point:
// the middle third of every cell between guide points in (R_1, R_t) must fail
// to be well-placed.
int no_interval_cases = 0;

std::optional<drg::WellPlacedInterval> place(const GraphicalSequence& g, int t) {
  try {
    return drg::find_well_placed(g, t);
  } catch (const drg::NoInterval&) {
    ++no_interval_cases;
    const double lo = right_of(g.at(1)), hi = right_of(g.at(t));
    std::vector<double> cuts{lo, hi};
    for (int i = 1; i <= g.g(); ++i) {
      for (double y : {left_of(g.at(i)), right_of(g.at(i))}) {
        if (y > lo + 1e-9 && y < hi - 1e-9) cuts.push_back(y);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 1; k < cuts.size(); ++k) {
      const double w = cuts[k] - cuts[k - 1];
      if (w < 1e-6) continue;
      auto f = float_classify(g, cuts[k - 1] + w / 3, cuts[k] - w / 3);
      EXPECT_TRUE(f && !(f->w1 && f->w2 && f->w3)) << g.str() << " target " << t;
    }
    return std::nullopt;
  }
}

bool proportional(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading() == b * a.leading();
}

}  // namespace

TEST(GuidePoints, HeawoodAndSynthetic) {
  auto heawood = drg::graphical_of(drg::parse_array("{3,2,2;1,1,3}")).sequence;
  auto gh = drg::guide_points(heawood);
  ASSERT_EQ(gh.g(), 1);
  EXPECT_EQ(gh.at(1).right.minimal_polynomial(), Poly({-8, 0, 1}));
  EXPECT_NEAR(gh.at(1).right.to_double(), 2 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(gh.at(1).left.to_double(), -2 * std::sqrt(2.0), 1e-12);

  auto gs = drg::guide_points(synthetic20());
  ASSERT_EQ(gs.g(), 3);
  EXPECT_NEAR(gs.at(1).right.to_double(), 2 * std::sqrt(19.0), 1e-12);
  EXPECT_EQ(gs.at(2).right, AlgebraicNumber(18));
  EXPECT_NEAR(gs.at(3).right.to_double(), 15 + 2 * std::sqrt(6.0), 1e-12);
  EXPECT_EQ(gs.right_max, gs.at(3).right);
  EXPECT_TRUE(gs.report.holds());
  EXPECT_EQ(gs.report.peak, 3);
}

TEST(GuidePoints, UnimodalOnRandomSequences) {
  std::mt19937 rng(11);
  for (int n = 0; n < 300; ++n) {
    const long kappa = gen::uniform(rng, 3, 12);
    const long lambda = gen::uniform(rng, 0, kappa - 2);
    auto g = gen::random_graphical(rng, kappa, lambda, 6);
    if (g.g() < 1) continue;
    auto gd = drg::guide_points(g);
    EXPECT_TRUE(gd.report.holds()) << g.str();
    // floating oracle: weakly rises then weakly falls
    std::vector<double> r;
    for (int i = 1; i <= g.g(); ++i) r.push_back(right_of(g.at(i)));
    std::size_t k = 0;
    while (k + 1 < r.size() && r[k + 1] >= r[k] - 1e-12) ++k;
    while (k + 1 < r.size()) {
      EXPECT_LE(r[k + 1], r[k] + 1e-12) << g.str();
      ++k;
    }
  }
}

TEST(Classify, SyntheticExamples) {
  auto g = synthetic20();
  const std::vector<int> ell{5, 4, 3, 1};

  auto c1 = drg::classify_interval(g, rat(89, 10), rat(92, 10));
  ASSERT_TRUE(c1.well_placed()) << c1.reason();
  EXPECT_EQ((std::array<int, 4>{c1.interval->a, c1.interval->b, c1.interval->c, c1.interval->d}),
            (std::array<int, 4>{2, 3, 3, 3}));
  auto m1 = drg::len_gap(ell, *c1.interval);
  EXPECT_EQ(m1.len, 4);
  EXPECT_EQ(m1.gap, 3);

  // no left guide point above the interval: c = g + 1
  auto c2 = drg::classify_interval(g, rat(105, 10), rat(108, 10));
  ASSERT_TRUE(c2.well_placed()) << c2.reason();
  EXPECT_EQ((std::array<int, 4>{c2.interval->a, c2.interval->b, c2.interval->c, c2.interval->d}),
            (std::array<int, 4>{2, 3, 4, 4}));
  auto m2 = drg::len_gap(ell, *c2.interval);
  EXPECT_EQ(m2.len, 7);
  EXPECT_EQ(m2.gap, 0);

  // 8.4 < 2 sqrt 19 < 8.8: outside (R_1, R_max) and straddling I_1
  auto c3 = drg::classify_interval(g, rat(84, 10), rat(88, 10));
  EXPECT_FALSE(c3.well_placed());
  EXPECT_EQ(c3.reason(), "W1");
  EXPECT_NE(std::find(c3.violations.begin(), c3.violations.end(), "W2:1"), c3.violations.end());

  EXPECT_THROW(drg::classify_interval(g, 1, 1), std::invalid_argument);
}

TEST(Classify, AgreesWithFloatingOracleAndPartitionFacts) {
  std::mt19937 rng(5);
  int placed = 0;
  for (int n = 0; n < 200; ++n) {
    const long kappa = gen::uniform(rng, 3, 14);
    auto g = gen::random_graphical(rng, kappa, gen::uniform(rng, 0, kappa - 2), 6);
    if (g.g() < 2) continue;
    auto gd = drg::guide_points(g);
    for (int k = 0; k < 20; ++k) {
      long x = gen::uniform(rng, -1000 * kappa, 1000 * kappa);
      long y = x + gen::uniform(rng, 1, 800);
      const Rational lo = rat(x, 1000), hi = rat(y, 1000);
      auto f = float_classify(g, lo.get_d(), hi.get_d());
      if (!f) continue;
      auto c = drg::classify_interval(gd, lo, hi);
      EXPECT_EQ(c.well_placed(), f->w1 && f->w2 && f->w3) << g.str() << " " << lo << " " << hi;
      if (!c.well_placed()) continue;
      ++placed;
      const auto& w = *c.interval;
      EXPECT_EQ(w.a, f->a);
      EXPECT_EQ(w.b, f->b);
      EXPECT_EQ(w.c, f->c);
      EXPECT_EQ(w.d, f->d);
      for (bool ok : drg::partition_clauses(gd, w)) EXPECT_TRUE(ok);
    }
  }
  EXPECT_GT(placed, 20);
}

TEST(Classify, SubIntervalsKeepTheirLetters) {
  std::mt19937 rng(17);
  int checked = 0;
  for (int n = 0; n < 120; ++n) {
    const long kappa = gen::uniform(rng, 4, 14);
    auto g = gen::random_graphical(rng, kappa, gen::uniform(rng, 0, kappa - 2), 6);
    if (g.g() < 2) continue;
    auto gd = drg::guide_points(g);
    for (int t = 2; t <= g.g(); ++t) {
      if (gd.at(t).right <= gd.at(1).right) continue;
      auto placed = place(g, t);
      if (!placed) continue;
      const auto& w = *placed;
      for (int k = 0; k < 5; ++k) {
        const Rational len = w.hi - w.lo;
        Rational a = w.lo + len * rat(gen::uniform(rng, 0, 499), 1000);
        Rational b = w.hi - len * rat(gen::uniform(rng, 0, 499), 1000);
        auto c = drg::classify_interval(gd, a, b);
        ASSERT_TRUE(c.well_placed()) << c.reason();
        EXPECT_EQ(c.interval->a, w.a);
        EXPECT_EQ(c.interval->b, w.b);
        EXPECT_EQ(c.interval->c, w.c);
        EXPECT_EQ(c.interval->d, w.d);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(FindWellPlaced, ThirdsConstruction) {
  auto g = synthetic20();
  auto gd = drg::guide_points(g);
  auto w = drg::find_well_placed(g, 3, gd.at(1).right, gd.at(3).right);
  EXPECT_LT(gd.at(1).right.compare(w.lo), 0);
  EXPECT_GT(gd.at(3).right.compare(w.hi), 0);
  EXPECT_TRUE(drg::classify_interval(gd, w.lo, w.hi).well_placed());
  // guide points in [2 sqrt 19, 15 + 2 sqrt 6): the largest is R_2 = 18, so
  // the thirds interval is [(R_3 + 36)/3, (2 R_3 + 18)/3] up to the shrink
  const double r3 = 15 + 2 * std::sqrt(6.0);
  const double jlo = (r3 + 36) / 3, jhi = (2 * r3 + 18) / 3;
  EXPECT_GE(w.lo.get_d(), jlo - 1e-12);
  EXPECT_LE(w.lo.get_d(), jlo + (jhi - jlo) / 1000 + 1e-12);
  EXPECT_LE(w.hi.get_d(), jhi + 1e-12);
  EXPECT_GE(w.hi.get_d(), jhi - (jhi - jlo) / 1000 - 1e-12);

  EXPECT_THROW(drg::find_well_placed(g, 1), drg::NoInterval);
  EXPECT_THROW(drg::find_well_placed(g, 4), std::invalid_argument);
}

TEST(FindWellPlaced, NoIntervalWhenAnEarlyGuideIntervalSitsAbove) {
  // I_2 = (9, 13) lies above R_4 = 9, so every interval in (R_1, R_4) has
  // a = 2 without being contained in I_2
  GraphicalSequence g{{{1, 1, 11}, {1, 11, 1}, {7, 5, 1}, {9, 3, 1}, {10, 2, 1}, {11, 1, 1}, {12, 1, 0}}, 13, 1};
  ASSERT_NO_THROW(drg::validate_graphical(g));
  const int before = no_interval_cases;
  EXPECT_FALSE(place(g, 4).has_value());
  EXPECT_EQ(no_interval_cases, before + 1);
  EXPECT_TRUE(place(g, 3).has_value());
}

TEST(FgPolynomials, AdjacentAndSkipping) {
  auto q = synthetic_quadruple();
  EXPECT_EQ(drg::delta_offsets(q), (std::vector<int>{0, 2}));
  auto p0 = drg::fg_polynomials(q, 0);
  EXPECT_TRUE(p0.adjacent);
  EXPECT_TRUE(p0.f1.is_zero());
  EXPECT_EQ(p0.g1, Poly(1));
  EXPECT_EQ(p0.f2, Poly(1));
  EXPECT_TRUE(p0.g2.is_zero());
  auto p1 = drg::fg_polynomials(q, 1);
  EXPECT_FALSE(p1.adjacent);
  EXPECT_EQ(p1.N, 4);
  EXPECT_EQ(p1.f1.degree(), 3);
  EXPECT_EQ(p1.g1.degree(), 2);
  EXPECT_EQ(p1.f2.degree(), 4);
  EXPECT_EQ(p1.g2.degree(), 3);
}

TEST(FgPolynomials, ReproduceTheStandardSequence) {
  std::mt19937 rng(23);
  int checked = 0;
  for (int n = 0; n < 150; ++n) {
    const long kappa = gen::uniform(rng, 3, 12);
    auto g = gen::random_graphical(rng, kappa, gen::uniform(rng, 0, kappa - 2), 6);
    if (g.g() < 1) continue;
    auto q = gen::random_quadruple(rng, g, 4, 4);
    auto t = q.tridiagonal();
    const Rational theta = rat(gen::uniform(rng, -3000, 3000), 997);
    auto u = standard_at(t, theta);
    for (int i = 0; i < static_cast<int>(q.delta.size()); ++i) {
      auto fg = drg::fg_polynomials(q, i);
      const int R = fg.anchor_row;
      ASSERT_GE(R - fg.N - 1, 0);
      EXPECT_EQ(u[R - fg.N], fg.f1(theta) * u[R - 1] + fg.g1(theta) * u[R]);
      EXPECT_EQ(u[R - fg.N - 1], fg.f2(theta) * u[R - 1] + fg.g2(theta) * u[R]);
      if (!fg.adjacent) {
        EXPECT_EQ(fg.f1.degree(), fg.N - 1);
        EXPECT_EQ(fg.g1.degree(), fg.N - 2);
        EXPECT_EQ(fg.f2.degree(), fg.N);
        EXPECT_EQ(fg.g2.degree(), fg.N - 1);
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(BadSet, SyntheticQualifiesOnlyTheLastDeltaTriple) {
  auto q = synthetic_quadruple();
  auto B = drg::bad_set(q);
  ASSERT_EQ(B.branches.size(), 1u);
  EXPECT_EQ(B.branches[0].position, 0);
  EXPECT_EQ(B.branches[0].triple, 3);
  EXPECT_TRUE(proportional(B.branches[0].polynomial, symmetric_bad_poly(q, 0)));
  EXPECT_TRUE(B.within_bound());
  EXPECT_EQ(B.bound, 16L * 4 * (3 + 4 + 1));
}

TEST(BadSet, EmptyWithoutQualifyingTriple) {
  auto heawood = drg::graphical_of(drg::parse_array("{3,2,2;1,1,3}")).sequence;
  Quadruple q{heawood, {1}, {2, 1}, {2, 1}};
  auto B = drg::bad_set(q);
  EXPECT_TRUE(B.branches.empty());
  EXPECT_TRUE(B.roots.empty());
}

TEST(BadSet, KappaIsBadWhenAGuidePointReachesIt) {
  Quadruple q{balanced20(), {1, 3}, {5, 4, 3, 1}, {5, 4, 3, 1}};
  auto gd = drg::guide_points(q.g);
  ASSERT_EQ(gd.right_max, AlgebraicNumber(20));
  auto B = drg::bad_set(q);
  ASSERT_FALSE(B.branches.empty());
  EXPECT_TRUE(B.contains(AlgebraicNumber(20)));
}

TEST(BadSet, MatchesSymmetricOracleAndBound) {
  std::mt19937 rng(31);
  int branches = 0;
  for (int n = 0; n < 60; ++n) {
    const long kappa = gen::uniform(rng, 3, 10);
    auto g = gen::random_graphical(rng, kappa, gen::uniform(rng, 0, kappa - 2), 5);
    if (g.g() < 1) continue;
    auto q = gen::random_quadruple(rng, g, 3, 3);
    auto B = drg::bad_set(q);
    EXPECT_TRUE(B.within_bound()) << g.str();
    for (const auto& br : B.branches) {
      EXPECT_TRUE(proportional(br.polynomial, symmetric_bad_poly(q, br.position))) << g.str();
      EXPECT_LE(static_cast<int>(br.roots.size()), br.bound);
      for (const auto& r : br.roots) {
        EXPECT_GE(r, br.lo);
        EXPECT_LE(r, br.hi);
      }
      ++branches;
    }
  }
  EXPECT_GT(branches, 10);
}

TEST(FindAvoiding, MissesEveryBadRoot) {
  std::mt19937 rng(41);
  int found = 0;
  for (int n = 0; n < 60; ++n) {
    const long kappa = gen::uniform(rng, 3, 10);
    auto g = gen::random_graphical(rng, kappa, gen::uniform(rng, 0, kappa - 2), 5);
    if (g.g() < 2) continue;
    auto q = gen::random_quadruple(rng, g, 3, 3);
    auto gd = drg::guide_points(g);
    auto B = drg::bad_set(q);
    for (int t = 2; t <= g.g(); ++t) {
      if (gd.at(t).right <= gd.at(1).right) continue;
      auto placed = place(g, t);
      if (!placed) continue;
      auto w = drg::avoid_bad_roots(gd, *placed, B);
      EXPECT_TRUE(drg::classify_interval(gd, w.lo, w.hi).well_placed());
      for (const auto& r : B.roots) EXPECT_TRUE(r.compare(w.lo) < 0 || r.compare(w.hi) > 0);
      ++found;
    }
  }
  EXPECT_GT(found, 10);
}

TEST(GapChain, SyntheticSingleStep) {
  auto g = synthetic20();
  const std::vector<int> ell{5, 4, 3, 1};
  auto start = *drg::classify_interval(g, rat(89, 10), rat(92, 10)).interval;
  auto chain = drg::gap_chain(g, ell, start);
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_EQ(chain[1].via, 3);
  EXPECT_EQ(chain[1].measure.gap, 0);
  EXPECT_EQ(chain[1].measure.len, 3);
  EXPECT_GT(chain[1].interval.lo, start.hi);
}

TEST(GapChain, DecreasesAndTerminates) {
  std::mt19937 rng(53);
  int chains = 0;
  for (int n = 0; n < 4000; ++n) {
    const long kappa = gen::uniform(rng, 10, 30);
    auto g = gen::random_graphical(rng, kappa, gen::uniform(rng, 0, kappa - 2), 7);
    if (g.g() < 3) continue;
    std::vector<int> ell;
    for (int i = 1; i <= g.g(); ++i) ell.push_back(static_cast<int>(gen::uniform(rng, 1, 9)));
    ell.push_back(1);
    auto gd = drg::guide_points(g);
    // start from the middle third of every cell between guide points
    std::vector<double> cuts;
    for (int i = 1; i <= g.g(); ++i) cuts.insert(cuts.end(), {left_of(g.at(i)), right_of(g.at(i))});
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 1; k < cuts.size(); ++k) {
      const double width = cuts[k] - cuts[k - 1];
      if (width < 1e-3) continue;
      const Rational lo = rat(std::lround((cuts[k - 1] + width / 3) * 1e6), 1000000);
      const Rational hi = rat(std::lround((cuts[k] - width / 3) * 1e6), 1000000);
      auto c = drg::classify_interval(gd, lo, hi);
      if (!c.well_placed() || drg::len_gap(ell, *c.interval).gap == 0) continue;
      const auto& w = *c.interval;
      auto chain = drg::gap_chain(g, ell, w);
      EXPECT_LE(static_cast<int>(chain.size()) - 1, g.g());
      EXPECT_EQ(chain.back().measure.gap, 0);
      for (std::size_t k = 1; k < chain.size(); ++k) {
        const auto& prev = chain[k - 1];
        EXPECT_GT(chain[k].interval.lo, prev.interval.hi);
        EXPECT_LT(chain[k].measure.gap, prev.measure.gap);
        EXPECT_GT(chain[k].measure.len * g.g(), prev.measure.gap);
      }
      ++chains;
    }
  }
  EXPECT_GE(chains, 10);
}
