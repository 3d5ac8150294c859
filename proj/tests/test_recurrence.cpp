#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "drg/multiplicity.hpp"
#include "drg/recurrence.hpp"
#include "random_sequences.hpp"

using drg::AlgebraicNumber;
using drg::GraphicalSequence;
using drg::Quadruple;
using drg::QuadraticSurd;
using drg::Rational;
using drg::TridiagonalSequence;
using cplx = std::complex<double>;

namespace {

GraphicalSequence synthetic20() { return {{{1, 0, 19}, {2, 10, 8}, {3, 15, 2}, {6, 14, 0}}, 20, 0}; }

Quadruple synthetic_quadruple() { return {synthetic20(), {1, 3}, {5, 4, 3, 1}, {5, 4, 3, 1}}; }

TridiagonalSequence petersen() { return drg::tridiagonal_of(drg::parse_array("{3,2;1,1}")); }

Rational rat(long n, long d) { return drg::ratio(n, d); }

// Forward recurrence in exact rationals, independent of the library's
// standard vector.
std::vector<Rational> standard_at(const TridiagonalSequence& t, const Rational& theta) {
  std::vector<Rational> u{Rational(1), theta / t.kappa()};
  for (int m = 1; m < t.diameter(); ++m) {
    const auto& r = t.row(m);
    u.push_back(((theta - r.alpha) * u[m] - Rational(r.gamma) * u[m - 1]) / Rational(r.beta));
  }
  return u;
}

// Quadratic formula in complex doubles, larger modulus first.
std::pair<cplx, cplx> float_roots(double A, double B, double C) {
  const cplx s = std::sqrt(cplx(B * B - 4 * A * C, 0));
  cplx r1 = (-B + s) / (2 * A), r2 = (-B - s) / (2 * A);
  if (std::abs(r1) < std::abs(r2)) std::swap(r1, r2);
  return {r1, r2};
}

cplx as_complex(const QuadraticSurd& x) { return {x.real_part(), x.imag_part()}; }

std::vector<Rational> vertex_counts(const TridiagonalSequence& t) { return drg::kappa_counts(t.to_array()); }

}  // namespace

TEST(AuxiliaryRoots, SyntheticFirstRun) {
  const TridiagonalSequence t = synthetic_quadruple().tridiagonal();
  const auto r = drg::auxiliary_roots(t, 1, AlgebraicNumber(9));
  ASSERT_TRUE(r.real());
  EXPECT_EQ(r.first.to_algebraic(), AlgebraicNumber::quadratic(rat(9, 38), rat(1, 38), 5));
  EXPECT_EQ(r.second.to_algebraic(), AlgebraicNumber::quadratic(rat(9, 38), rat(-1, 38), 5));
}

TEST(AuxiliaryRoots, PetersenRationalRoots) {
  const auto r = drg::auxiliary_roots(petersen(), 1, AlgebraicNumber(3));
  EXPECT_EQ(r.first.to_algebraic(), AlgebraicNumber(1));
  EXPECT_EQ(r.second.to_algebraic(), AlgebraicNumber(rat(1, 2)));
}

TEST(AuxiliaryRoots, ComplexInsideGuideInterval) {
  // theta = alpha: roots +- i sqrt(gamma / beta).
  const TridiagonalSequence t = synthetic_quadruple().tridiagonal();
  const auto r = drg::auxiliary_roots(t, 2, AlgebraicNumber(10));
  EXPECT_FALSE(r.real());
  EXPECT_EQ(r.first.norm().rational_value(), rat(2, 8));
  EXPECT_NEAR(r.first.real_part(), 0, 1e-15);
  EXPECT_THROW(r.first.sign(), std::domain_error);
}

TEST(AuxiliaryRoots, GuidePointIsABoundaryError) {
  // Triple (2, 10, 8): 10 - 2 sqrt(16) = 2 is rational.
  const TridiagonalSequence t = synthetic_quadruple().tridiagonal();
  try {
    drg::auxiliary_roots(t, 2, AlgebraicNumber(2));
    FAIL();
  } catch (const drg::OnGuidePoint& e) {
    EXPECT_EQ(e.index, 2);
  }
  EXPECT_THROW(drg::run_coefficients(t, AlgebraicNumber(18)), drg::OnGuidePoint);
}

TEST(AuxiliaryRoots, VietaAndFloatingFormula) {
  std::mt19937 rng(11);
  int count = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const GraphicalSequence g = gen::random_graphical(rng, gen::uniform(rng, 3, 14), 0, 5);
    if (g.g() < 1) continue;
    std::vector<int> ell(static_cast<std::size_t>(g.g()), 2);
    ell.push_back(1);
    const TridiagonalSequence t = drg::build_tridiagonal(g, ell);
    const Rational theta = rat(gen::uniform(rng, -4 * g.kappa, 4 * g.kappa), 4) + rat(1, 7);
    for (int i = 1; i <= g.g(); ++i) {
      const auto& tr = g.at(i);
      const auto r = drg::auxiliary_roots(t, i, AlgebraicNumber(theta));
      const QuadraticSurd prod = r.first * r.second;
      const QuadraticSurd sum = r.first + r.second;
      EXPECT_TRUE(equal(prod, QuadraticSurd(drg::FieldElement(r.first.a().field(), rat(tr.gamma, tr.beta)))));
      EXPECT_TRUE(equal(sum, QuadraticSurd(drg::FieldElement(r.first.a().field(), (theta - tr.alpha) / tr.beta))));
      const auto [f1, f2] = float_roots(double(tr.beta), double(tr.alpha) - theta.get_d(), double(tr.gamma));
      EXPECT_NEAR(std::abs(as_complex(r.first) - f1), 0, 1e-9);
      EXPECT_NEAR(std::abs(as_complex(r.second) - f2), 0, 1e-9);
      ++count;
    }
    for (int i = 0; i < g.g(); ++i) {
      const auto& tr = g.at(g.g() - i);
      const auto r = drg::tail_roots(t, i, AlgebraicNumber(theta));
      EXPECT_TRUE(equal(r.first * r.second,
                        QuadraticSurd(drg::FieldElement(r.first.a().field(), rat(tr.beta, tr.gamma)))));
      const auto [f1, f2] = float_roots(double(tr.gamma), double(tr.alpha) - theta.get_d(), double(tr.beta));
      EXPECT_NEAR(std::abs(as_complex(r.first) - f1), 0, 1e-9);
      EXPECT_NEAR(std::abs(as_complex(r.second) - f2), 0, 1e-9);
    }
  }
  EXPECT_GT(count, 60);
}

TEST(AuxiliaryRoots, QuadraticTheta) {
  // Heawood at theta = sqrt(2): triple (1, 0, 2) gives 2z^2 - sqrt(2) z + 1,
  // discriminant 2 - 8 < 0.
  const TridiagonalSequence t = drg::tridiagonal_of(drg::parse_array("{3,2,2;1,1,3}"));
  const AlgebraicNumber r2 = AlgebraicNumber(2).sqrt();
  const auto r = drg::auxiliary_roots(t, 1, r2);
  EXPECT_FALSE(r.real());
  EXPECT_NEAR(r.first.real_part(), std::sqrt(2.0) / 4, 1e-12);
  EXPECT_NEAR(std::abs(as_complex(r.first)), std::sqrt(0.5), 1e-12);
}

TEST(RunCoefficients, PetersenComplexRun) {
  const TridiagonalSequence t = petersen();
  const auto rc = drg::run_coefficients(t, AlgebraicNumber(1));
  ASSERT_TRUE(rc.reconstructs);
  ASSERT_EQ(rc.runs.size(), 1U);
  // Oracle: solve w1 + w2 = 1, w1 rho + w2 sigma = 1/3 in complex doubles.
  const auto [rho, sigma] = float_roots(2, -1, 1);
  const cplx w1 = (1.0 / 3 - sigma) / (rho - sigma);
  const cplx w2 = (rho - 1.0 / 3) / (rho - sigma);
  EXPECT_NEAR(std::abs(as_complex(rc.runs[0].omega1) - w1), 0, 1e-12);
  EXPECT_NEAR(std::abs(as_complex(rc.runs[0].omega2) - w2), 0, 1e-12);
  EXPECT_TRUE(equal(rc.runs[0].omega2, rc.runs[0].omega1.conj()));
}

TEST(RunCoefficients, SyntheticTailAtNine) {
  const TridiagonalSequence t = synthetic_quadruple().tridiagonal();
  const auto rc = drg::run_coefficients(t, AlgebraicNumber(9));
  ASSERT_TRUE(rc.reconstructs);
  ASSERT_EQ(rc.tails.size(), 3U);
  const std::vector<Rational> u = standard_at(t, Rational(9));
  // Tail index 0 uses triple g = 3: 3 X^2 + 6 X + 2.
  const auto [x, y] = float_roots(3, 15 - 9, 2);
  const int s = t.s(4);
  const double top = u[static_cast<std::size_t>(s)].get_d();
  const double below = u[static_cast<std::size_t>(s - 1)].get_d();
  const cplx nu1 = (-y / (x - y)) * top + (1.0 / (x - y)) * below;
  const cplx nu2 = (x / (x - y)) * top - (1.0 / (x - y)) * below;
  EXPECT_NEAR(std::abs(as_complex(rc.tails[0].nu1) - nu1), 0, 1e-9 * std::abs(nu1));
  EXPECT_NEAR(std::abs(as_complex(rc.tails[0].nu2) - nu2), 0, 1e-9 * std::abs(nu2));
  ASSERT_TRUE(rc.tails[0].ratio().has_value());
  EXPECT_NEAR(*rc.tails[0].ratio(), std::abs(nu1 / nu2), 1e-9 * std::abs(nu1 / nu2));
}

TEST(RunCoefficients, ReconstructionOnRandomQuadruples) {
  std::mt19937 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const GraphicalSequence g = gen::random_graphical(rng, gen::uniform(rng, 3, 16), gen::uniform(rng, 0, 1), 5);
    if (g.g() < 1 || g.lambda > g.kappa - 2) continue;
    const Quadruple q = gen::random_quadruple(rng, g, 4, 4);
    const TridiagonalSequence t = q.tridiagonal();
    const Rational theta = rat(gen::uniform(rng, -3 * g.kappa, 3 * g.kappa), 3) + rat(1, 11);
    drg::RunCoefficients rc = [&] {
      try {
        return drg::run_coefficients(t, AlgebraicNumber(theta));
      } catch (const drg::OnGuidePoint&) {
        return drg::RunCoefficients{};
      }
    }();
    if (rc.u.empty()) continue;
    EXPECT_TRUE(rc.reconstructs) << g.str() << " at " << theta;
    // Floating replay of the closed forms against the exact recurrence.
    const std::vector<Rational> u = standard_at(t, theta);
    for (int i = 1; i <= t.g(); ++i) {
      const auto& run = rc.runs[static_cast<std::size_t>(i - 1)];
      const cplx r = as_complex(run.roots.first), s = as_complex(run.roots.second);
      const cplx w1 = as_complex(run.omega1), w2 = as_complex(run.omega2);
      for (int j = 0; j <= t.ell(i) + 1; ++j) {
        const double expect = u[static_cast<std::size_t>(t.s(i) - 1 + j)].get_d();
        const cplx got = w1 * std::pow(r, j) + w2 * std::pow(s, j);
        EXPECT_NEAR(std::abs(got - expect), 0, 1e-7 * (1 + std::abs(expect)));
      }
    }
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(SumDecomposition, PetersenRawSplit) {
  const TridiagonalSequence t = petersen();
  const auto d = drg::sum_split(t, AlgebraicNumber(1), 0, 1);
  EXPECT_EQ(d.total.rational_value(), Rational(2));
  EXPECT_EQ(d.head.rational_value(), Rational(1));
  EXPECT_EQ(d.gap.rational_value(), rat(1, 3));
  EXPECT_EQ(d.tail.rational_value(), rat(2, 3));
  EXPECT_THROW(drg::sum_split(t, AlgebraicNumber(1), 2, 1), std::invalid_argument);
}

TEST(SumDecomposition, SyntheticAtNine) {
  const Quadruple q = synthetic_quadruple();
  const TridiagonalSequence t = q.tridiagonal();
  const auto c = drg::classify_interval(q.g, rat(89, 10), rat(92, 10));
  ASSERT_TRUE(c.well_placed());
  const auto d = drg::sum_decomposition(q, *c.interval, AlgebraicNumber(9));
  EXPECT_EQ(d.head_end, t.s(c.interval->a) - 2);
  EXPECT_EQ(d.gap_end, t.s(c.interval->b + 1));
  // Direct summation from the independent recurrence.
  const std::vector<Rational> u = standard_at(t, Rational(9));
  const std::vector<Rational> k = vertex_counts(t);
  Rational head, gap, tail;
  for (int i = 0; i <= t.diameter(); ++i) {
    const std::size_t n = static_cast<std::size_t>(i);
    Rational term = k[n] * u[n] * u[n];
    (i <= d.head_end ? head : i <= d.gap_end ? gap : tail) += term;
  }
  EXPECT_EQ(d.head.rational_value(), head);
  EXPECT_EQ(d.gap.rational_value(), gap);
  EXPECT_EQ(d.tail.rational_value(), tail);
  EXPECT_EQ(d.total.rational_value(), head + gap + tail);
  EXPECT_THROW(drg::sum_decomposition(q, *c.interval, AlgebraicNumber(10)), std::invalid_argument);
}

TEST(SumDecomposition, TotalMatchesChristoffelSum) {
  for (const char* text : {"{3,2;1,1}", "{3,2,2;1,1,3}", "{4,3,3;1,1,2}", "{6,5,5,4;1,1,2,6}"}) {
    const TridiagonalSequence t = drg::tridiagonal_of(drg::parse_array(text));
    const auto table = drg::christoffel(t);
    for (const auto& e : table.entries) {
      const auto d = drg::sum_split(t, e.theta, -1, -1);
      EXPECT_TRUE(d.head.is_zero());
      EXPECT_TRUE(d.gap.is_zero());
      EXPECT_EQ(d.total.to_algebraic(), AlgebraicNumber(table.vertex_count) / e.weight) << text;
    }
  }
}

TEST(VerifyRuns, SyntheticAtNine) {
  const Quadruple q = synthetic_quadruple();
  const TridiagonalSequence t = q.tridiagonal();
  const auto c = drg::classify_interval(q.g, rat(89, 10), rat(92, 10));
  ASSERT_TRUE(c.well_placed());
  ASSERT_EQ(c.interval->a, 2);
  const auto report = drg::verify_runs(t, *c.interval, AlgebraicNumber(9));
  EXPECT_TRUE(report.holds());
  bool saw_ii = false, saw_iii_na = false;
  for (const auto& chk : report.checks) {
    if (chk.clause == "u-product" && chk.index == 2) saw_ii = chk.applicable && chk.holds;
    if (chk.clause == "omega-signs" && chk.index == 2) saw_iii_na = !chk.applicable;
  }
  EXPECT_TRUE(saw_ii);
  EXPECT_TRUE(saw_iii_na);
  // Floating oracle for (ii) at i = 2: u_5(9) against rho_1^5.
  const std::vector<Rational> u = standard_at(t, Rational(9));
  EXPECT_GT(u[5].get_d(), std::pow((9 + std::sqrt(5.0)) / 38, 5));
}

TEST(VerifyRuns, HoldOnRandomWellPlacedIntervals) {
  std::mt19937 rng(23);
  int intervals = 0, applicable = 0;
  for (int trial = 0; trial < 400 && intervals < 60; ++trial) {
    const long kappa = gen::uniform(rng, 6, 24);
    const GraphicalSequence g = gen::random_graphical(rng, kappa, gen::uniform(rng, 0, 2), 6);
    if (g.g() < 2) continue;
    const Quadruple q = gen::random_quadruple(rng, g, 4, 6);
    const TridiagonalSequence t = q.tridiagonal();
    for (int target = 2; target <= g.g(); ++target) {
      drg::WellPlacedInterval w;
      try {
        w = drg::find_well_placed(g, target);
      } catch (const drg::NoInterval&) {
        continue;
      }
      ++intervals;
      for (int k = 0; k < 3; ++k) {
        const Rational theta = w.lo + (w.hi - w.lo) * rat(gen::uniform(rng, 1, 99), 100);
        const auto report = drg::verify_runs(t, w, AlgebraicNumber(theta));
        const auto fail = report.first_failure();
        EXPECT_FALSE(fail.has_value()) << g.str() << " clause " << fail->clause << " at " << fail->index;
        applicable += report.applicable_count();
      }
    }
  }
  EXPECT_GE(intervals, 30);
  EXPECT_GT(applicable, 200);
}

TEST(NeighbourBounds, PetersenAndTop) {
  const TridiagonalSequence t = petersen();
  EXPECT_TRUE(drg::verify_neighbour_bounds(t, AlgebraicNumber(1)).holds());
  EXPECT_TRUE(drg::verify_neighbour_bounds(t, AlgebraicNumber(3)).holds());
  EXPECT_THROW(drg::verify_neighbour_bounds(t, AlgebraicNumber(4)), std::invalid_argument);
}

TEST(NeighbourBounds, HeawoodAtRootTwo) {
  const TridiagonalSequence t = drg::tridiagonal_of(drg::parse_array("{3,2,2;1,1,3}"));
  const auto r = drg::verify_neighbour_bounds(t, AlgebraicNumber(2).sqrt());
  EXPECT_EQ(r.checks.size(), 2U);
  EXPECT_TRUE(r.holds());
}

TEST(NeighbourBounds, RandomPointsOnKnownArrays) {
  std::mt19937 rng(3);
  for (const char* text : {"{3,2;1,1}", "{3,2,2;1,1,3}", "{4,3,3;1,1,2}", "{6,5,5,4;1,1,2,6}", "{7,6,4,4;1,1,1,6}",
                           "{3,2,2,1;1,1,2,3}", "{5,4,1,1;1,1,4,5}"}) {
    const TridiagonalSequence t = drg::tridiagonal_of(drg::parse_array(text));
    const long k = t.kappa();
    for (int n = 0; n < 100; ++n) {
      const Rational theta = rat(gen::uniform(rng, -1000 * k, 1000 * k), 1000);
      const auto r = drg::verify_neighbour_bounds(t, AlgebraicNumber(theta));
      ASSERT_TRUE(r.holds()) << text << " at " << theta;
      // Floating replay of the weakest inequality.
      const std::vector<Rational> u = standard_at(t, theta);
      for (int i = 1; i + 1 <= t.diameter(); ++i) {
        const double prev = std::max(std::abs(u[i - 1].get_d()), std::abs(u[i].get_d()));
        const double next = std::max(std::abs(u[i].get_d()), std::abs(u[i + 1].get_d()));
        EXPECT_LE(next, 3.0 * k * prev * (1 + 1e-12));
      }
    }
  }
}

TEST(GrowthProbe, RatioStaysInsideTheGapWindow) {
  const Quadruple q = synthetic_quadruple();
  const auto c = drg::classify_interval(q.g, rat(89, 10), rat(92, 10));
  ASSERT_TRUE(c.well_placed());
  const auto rows = drg::sum_trace(q, 1, {2, 4, 8}, *c.interval, AlgebraicNumber(9));
  ASSERT_EQ(rows.size(), 3U);
  const double window = std::pow(9.0 * std::pow(20.0, 4), double(rows[0].measure.gap));
  for (const auto& r : rows) {
    EXPECT_NEAR(r.head + r.gap + r.tail, r.total, 1e-9 * r.total);
    EXPECT_GT(r.ratio, rows[0].ratio / window);
    EXPECT_LT(r.ratio, rows[0].ratio * window);
  }
  const std::string csv = drg::trace_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "h,Gap,Len,head,gap,tail,total,ratio");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}
