#include <gtest/gtest.h>

#include "drg/array_model.hpp"

using drg::GraphicalSequence;
using drg::IntersectionArray;
using drg::Rational;
using drg::Triple;

namespace {

GraphicalSequence synthetic20() {
  return {{{1, 0, 19}, {2, 10, 8}, {3, 15, 2}, {6, 14, 0}}, 20, 0};
}

// Independent kappa counts: k_m = k_{m-1} b_{m-1} / c_m with plain integer
// division, valid only when every step divides.
std::vector<long> kappa_by_hand(const IntersectionArray& a) {
  std::vector<long> k{1};
  for (int m = 1; m <= a.diameter(); ++m) k.push_back(k.back() * a.b[m - 1] / a.c[m - 1]);
  return k;
}

}  // namespace

TEST(ArrayModel, ParseForms) {
  auto a = drg::parse_array("{3,2;1,1}");
  EXPECT_EQ(a.b, (std::vector<long>{3, 2}));
  EXPECT_EQ(a.c, (std::vector<long>{1, 1}));
  EXPECT_EQ(drg::parse_array(" 3, 2 ; 1, 1 "), a);
  EXPECT_EQ(a.str(), "{3,2;1,1}");
  EXPECT_THROW(drg::parse_array("{3,2;1}"), drg::ParseError);
  EXPECT_THROW(drg::parse_array("{3,2,1,1}"), drg::ParseError);
  EXPECT_THROW(drg::parse_array("{3,x;1,1}"), drg::ParseError);
  EXPECT_THROW(drg::parse_array("{3,2;1,1"), drg::ParseError);
}

TEST(ArrayModel, DerivedIntersectionNumbers) {
  auto a = drg::parse_array("{3,2,2;1,1,3}");
  EXPECT_EQ(a.valency(), 3);
  EXPECT_EQ(a.diameter(), 3);
  EXPECT_EQ(a.triple(0), (Triple{0, 0, 3}));
  EXPECT_EQ(a.triple(1), (Triple{1, 0, 2}));
  EXPECT_EQ(a.triple(3), (Triple{3, 0, 0}));
}

TEST(ArrayModel, ValidArrays) {
  for (const char* s : {"{3,2;1,1}", "{3;1}", "{3,2,2;1,1,3}", "{3,2,1;1,2,3}", "{4,2;1,2}", "{6,5,5,4;1,1,2,6}"}) {
    auto r = drg::validate_array(drg::parse_array(s));
    EXPECT_TRUE(r.valid()) << s << " " << (r.violations.empty() ? "" : r.violations[0].message);
  }
}

TEST(ArrayModel, InvalidArraysReportEveryViolation) {
  auto r = drg::validate_array(drg::parse_array("{3,3;1,1}"));
  EXPECT_FALSE(r.valid());
  EXPECT_TRUE(r.has("b-decreasing"));

  auto r2 = drg::validate_array(drg::parse_array("{3,2;2,1}"));
  EXPECT_TRUE(r2.has("c-first"));
  EXPECT_TRUE(r2.has("c-nondecreasing"));

  // k_2 = 3*2/4 is not an integer
  auto r3 = drg::validate_array(drg::parse_array("{3,2;1,4}"));
  EXPECT_TRUE(r3.has("kappa-integrality"));
  EXPECT_TRUE(r3.has("c-bound"));

  // a_1 = 2 and min(b_2, c_2) = 2 force a_2 >= 1, but a_2 = 5 - 2 - 3 = 0
  auto r4 = drg::validate_array(drg::parse_array("{5,2,2;1,3,5}"));
  EXPECT_TRUE(r4.has("lambda-bound"));

  IntersectionArray bad;
  bad.b = {3, 2};
  bad.c = {1};
  EXPECT_THROW(drg::validate_array(bad), drg::ParseError);
}

TEST(ArrayModel, KappaCounts) {
  for (const char* s : {"{3,2;1,1}", "{3,2,2;1,1,3}", "{3;1}", "{3,2,1;1,2,3}", "{6,5,5,4;1,1,2,6}"}) {
    auto a = drg::parse_array(s);
    auto k = drg::kappa_counts(a);
    auto want = kappa_by_hand(a);
    ASSERT_EQ(k.size(), want.size());
    for (std::size_t i = 0; i < k.size(); ++i) EXPECT_EQ(k[i], Rational(want[i])) << s;
  }
  auto k = drg::kappa_counts(drg::parse_array("{3,2,2;1,1,3}"));
  EXPECT_EQ(k, (std::vector<Rational>{1, 3, 6, 4}));
  EXPECT_EQ(drg::kappa_counts(drg::parse_array("{3,2;1,4}"))[2], Rational(3, 2));
}

TEST(ArrayModel, HeadTail) {
  EXPECT_EQ(drg::head_tail(drg::parse_array("{3,2,2;1,1,3}")), std::make_pair(2, 0));
  EXPECT_EQ(drg::head_tail(drg::parse_array("{3,2,1;1,2,3}")), std::make_pair(1, 1));
  EXPECT_EQ(drg::head_tail(drg::parse_array("{3;1}")), std::make_pair(0, 0));
  EXPECT_EQ(drg::head_tail(drg::parse_array("{3,2;1,1}")), std::make_pair(1, 0));
}

TEST(ArrayModel, GraphicalDecomposition) {
  auto heawood = drg::graphical_of(drg::parse_array("{3,2,2;1,1,3}"));
  EXPECT_EQ(heawood.sequence.triples, (std::vector<Triple>{{1, 0, 2}, {3, 0, 0}}));
  EXPECT_EQ(heawood.ell, (std::vector<int>{2, 1}));
  EXPECT_EQ(heawood.sequence.kappa, 3);
  EXPECT_EQ(heawood.sequence.lambda, 0);

  auto petersen = drg::graphical_of(drg::parse_array("{3,2;1,1}"));
  EXPECT_EQ(petersen.sequence.triples, (std::vector<Triple>{{1, 0, 2}, {1, 2, 0}}));
  EXPECT_EQ(petersen.ell, (std::vector<int>{1, 1}));

  auto cube = drg::graphical_of(drg::parse_array("{3,2,1;1,2,3}"));
  EXPECT_EQ(cube.sequence.triples, (std::vector<Triple>{{1, 0, 2}, {2, 0, 1}, {3, 0, 0}}));
  EXPECT_EQ(cube.ell, (std::vector<int>{1, 1, 1}));

  auto k4 = drg::graphical_of(drg::parse_array("{3;1}"));
  EXPECT_EQ(k4.sequence.g(), 0);
  EXPECT_NO_THROW(drg::validate_graphical(k4.sequence));
}

TEST(ArrayModel, RoundTrip) {
  for (const char* s : {"{3,2;1,1}", "{3;1}", "{3,2,2;1,1,3}", "{3,2,1;1,2,3}", "{6,5,5,4;1,1,2,6}",
                        "{7,6,4,4;1,1,1,6}"}) {
    auto a = drg::parse_array(s);
    auto t = drg::tridiagonal_of(a);
    EXPECT_EQ(t.to_array(), a) << s;
    EXPECT_EQ(t.diameter(), a.diameter());
    auto [h, tl] = drg::head_tail(a);
    EXPECT_EQ(t.head(), h) << s;
    EXPECT_EQ(t.tail(), tl) << s;
    EXPECT_LE(tl, h);
  }
}

TEST(ArrayModel, TridiagonalExpansion) {
  auto t = drg::build_tridiagonal(synthetic20(), {5, 4, 3, 1});
  EXPECT_EQ(t.diameter(), 13);
  EXPECT_EQ(t.head(), 5);
  EXPECT_EQ(t.tail(), 0);
  EXPECT_EQ(t.s(1), 1);
  EXPECT_EQ(t.s(2), 6);
  EXPECT_EQ(t.s(3), 10);
  EXPECT_EQ(t.s(4), 13);
  EXPECT_EQ(t.row(0), (Triple{0, 0, 20}));
  EXPECT_EQ(t.row(5), (Triple{1, 0, 19}));
  EXPECT_EQ(t.row(6), (Triple{2, 10, 8}));
  EXPECT_EQ(t.row(12), (Triple{3, 15, 2}));
  EXPECT_EQ(t.row(13), (Triple{6, 14, 0}));
  EXPECT_EQ(t.run_of(9), 2);
  EXPECT_EQ(t.run_of(13), 4);

  auto identity = drg::build_tridiagonal(synthetic20(), {1, 1, 1, 1});
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(identity.row(m), synthetic20().at(m));
}

TEST(ArrayModel, GraphicalConditions) {
  auto g = synthetic20();
  g.triples[0] = {1, 1, 18};
  EXPECT_THROW(drg::validate_graphical(g), drg::InvalidSequence);

  // beta increases
  GraphicalSequence up{{{1, 0, 3}, {2, 0, 2}, {1, 0, 3}, {4, 0, 0}}, 4, 0};
  EXPECT_THROW(drg::validate_graphical(up), drg::InvalidSequence);

  // terminal beta nonzero
  GraphicalSequence open{{{1, 0, 3}, {2, 0, 2}}, 4, 0};
  EXPECT_THROW(drg::validate_graphical(open), drg::InvalidSequence);

  // V bound: alpha >= lambda + 1 - gamma fails for (1,0,3) with lambda = 1
  GraphicalSequence vbound{{{1, 1, 2}, {1, 0, 3}, {4, 0, 0}}, 4, 1};
  EXPECT_THROW(drg::validate_graphical(vbound), drg::InvalidSequence);

  EXPECT_THROW(drg::build_tridiagonal(synthetic20(), {5, 4, 3, 2}), drg::InvalidSequence);
  EXPECT_THROW(drg::build_tridiagonal(synthetic20(), {5, 0, 3, 1}), drg::InvalidSequence);
}

TEST(ArrayModel, Quadruple) {
  drg::Quadruple q{synthetic20(), {1, 3}, {5, 4, 3, 1}, {5, 4, 3, 1}};
  EXPECT_NO_THROW(drg::validate_quadruple(q));
  EXPECT_TRUE(q.in_delta(3));
  EXPECT_FALSE(q.in_delta(2));
  EXPECT_EQ(q.tridiagonal().diameter(), 13);

  auto noFirst = q;
  noFirst.delta = {2};
  EXPECT_THROW(drg::validate_quadruple(noFirst), drg::InvalidSequence);

  auto terminal = q;
  terminal.delta = {1, 4};
  EXPECT_THROW(drg::validate_quadruple(terminal), drg::InvalidSequence);

  auto mismatch = q;
  mismatch.L = {5, 7, 3, 1};
  EXPECT_THROW(drg::validate_quadruple(mismatch), drg::InvalidSequence);

  // L on delta indices is free
  auto free = q;
  free.L = {99, 4, 42, 1};
  EXPECT_NO_THROW(drg::validate_quadruple(free));
}
