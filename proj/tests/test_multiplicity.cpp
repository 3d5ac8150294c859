#include <gtest/gtest.h>

#include "drg/multiplicity.hpp"
#include "graph_oracle.hpp"

using drg::AlgebraicNumber;
using drg::FieldElement;
using drg::Poly;
using drg::Rational;

namespace {

drg::TridiagonalSequence seq(const char* s) { return drg::tridiagonal_of(drg::parse_array(s)); }

drg::TridiagonalSequence synthetic20() {
  drg::GraphicalSequence g{{{1, 0, 19}, {2, 10, 8}, {3, 15, 2}, {6, 14, 0}}, 20, 0};
  return drg::build_tridiagonal(g, {5, 4, 3, 1});
}

// Sum of f over all roots of the irreducible factor, exactly: minus the
// subleading coefficient of the characteristic polynomial of f in Q[x]/(p).
Rational conjugate_trace(const Poly& f, const AlgebraicNumber& any_root) {
  FieldElement e(drg::make_field(any_root), f);
  Poly ch = e.charpoly();
  return -ch.coeff(ch.degree() - 1);
}

}  // namespace

TEST(Multiplicity, PetersenHandValues) {
  auto tab = drg::christoffel(seq("{3,2;1,1}"));
  EXPECT_EQ(tab.vertex_count, Rational(10));
  ASSERT_EQ(tab.entries.size(), 3u);
  EXPECT_EQ(tab.entries[0].theta, AlgebraicNumber(3));
  EXPECT_EQ(*tab.entries[0].rational, Rational(1));
  EXPECT_EQ(tab.entries[1].theta, AlgebraicNumber(1));
  EXPECT_EQ(tab.sum_poly(Rational(1)), Rational(2));
  EXPECT_EQ(*tab.entries[1].rational, Rational(5));
  EXPECT_EQ(*tab.entries[2].rational, Rational(4));
}

TEST(Multiplicity, HeawoodConjugates) {
  auto t = seq("{3,2,2;1,1,3}");
  auto tab = drg::christoffel(t);
  ASSERT_EQ(tab.entries.size(), 4u);
  EXPECT_EQ(*tab.entries[1].rational, Rational(6));
  EXPECT_EQ(*tab.entries[2].rational, Rational(6));
  auto ac = drg::check_ac(t);
  EXPECT_TRUE(ac.holds);
  for (const auto& c : ac.certificate) EXPECT_TRUE(c.constant());
}

TEST(Multiplicity, FeasibilityMatchesAdjacencyOracle) {
  std::vector<oracle::Graph> graphs{oracle::complete(4), oracle::complete_bipartite(3), oracle::petersen(),
                                    oracle::hypercube(3), oracle::heawood(), oracle::pappus(),
                                    oracle::hypercube(4)};
  for (const auto& g : graphs) {
    auto arr = oracle::array_string(*oracle::intersection_array(g));
    auto v = drg::feasibility(drg::parse_array(arr));
    ASSERT_TRUE(v.feasible()) << arr << ": " << v.reason;
    auto want = oracle::adjacency_spectrum(g);
    ASSERT_EQ(v.table->entries.size(), want.size()) << arr;
    for (std::size_t i = 0; i < want.size(); ++i) {
      EXPECT_EQ(*v.table->entries[i].rational, Rational(want[i].multiplicity)) << arr << " #" << i;
    }
  }
}

TEST(Multiplicity, TraceIdentities) {
  for (const char* s : {"{3,2;1,1}", "{3,2,2;1,1,3}", "{3,2,2,1;1,1,2,3}", "{4,3,2,1;1,2,3,4}", "{7,6,4,4;1,1,1,6}"}) {
    auto t = seq(s);
    auto sp = drg::spectrum(t);
    auto tab = drg::christoffel(t, sp);
    ASSERT_TRUE(drg::check_ac(t, sp).holds) << s;
    EXPECT_EQ(*tab.entries[0].rational, Rational(1));
    // sum m_i = n and sum m_i theta_i = 0, summing each factor's conjugates exactly
    Rational total, first_moment;
    auto cp = drg::companion_polys(t);
    const int D = t.diameter();
    std::vector<std::vector<Rational>> gram(D + 1, std::vector<Rational>(D + 1));
    for (std::size_t f = 0; f < sp.factors.size(); ++f) {
      const auto& fac = sp.factors[f];
      Rational m = tab.vertex_count / tab.factors[f].reduced_sum.coeff(0);
      total += m * fac.poly.degree();
      first_moment += m * conjugate_trace(Poly::x(), fac.roots[0]);
      for (int a = 0; a <= D; ++a)
        for (int b = 0; b <= D; ++b)
          gram[a][b] += m * conjugate_trace(cp.v[a] * cp.v[b], fac.roots[0]);
    }
    EXPECT_EQ(total, tab.vertex_count) << s;
    EXPECT_EQ(first_moment, Rational(0)) << s;
    for (int a = 0; a <= D; ++a)
      for (int b = 0; b <= D; ++b) {
        if (a == b)
          EXPECT_NE(gram[a][b], Rational(0)) << s;
        else
          EXPECT_EQ(gram[a][b], Rational(0)) << s << " (" << a << "," << b << ")";
      }
  }
}

TEST(Multiplicity, AcAgreesWithPerRootWeights) {
  for (auto t : {synthetic20(), seq("{3,2,2;1,1,1}"), seq("{5,4,1;1,1,4}"), seq("{3,2,2;1,1,3}")}) {
    auto sp = drg::spectrum(t);
    auto tab = drg::christoffel(t, sp);
    auto ac = drg::check_ac(t, sp);
    bool equal_within_classes = true;
    for (std::size_t i = 0; i < tab.entries.size(); ++i)
      for (std::size_t j = i + 1; j < tab.entries.size(); ++j)
        if (tab.entries[i].factor == tab.entries[j].factor && tab.entries[i].weight != tab.entries[j].weight)
          equal_within_classes = false;
    EXPECT_EQ(ac.holds, equal_within_classes);
    // floating sanity: weights sum to n
    double sum = 0;
    for (const auto& e : tab.entries) sum += e.weight.to_double();
    EXPECT_NEAR(sum, tab.vertex_count.get_d(), 1e-6);
  }
}

TEST(Multiplicity, VerdictCategories) {
  auto bad = drg::feasibility(drg::parse_array("{3,3;1,1}"));
  EXPECT_EQ(bad.status, drg::Feasibility::CombinatoriallyInvalid);
  EXPECT_FALSE(bad.reason.empty());

  auto v = drg::feasibility(drg::parse_array("{3,2,2;1,1,1}"));
  EXPECT_TRUE(v.combinatorial.valid());
  ASSERT_TRUE(v.table.has_value());
  bool all_int = true;
  for (const auto& e : v.table->entries) all_int = all_int && e.rational && drg::is_integer(*e.rational);
  EXPECT_EQ(v.multiplicities_integral, all_int);
  EXPECT_EQ(v.feasible(), all_int && v.ac);
  if (!v.feasible()) EXPECT_FALSE(v.reason.empty());
}
