#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drg/rational.hpp"

namespace drg {

// (c, a, b) of one row of the intersection matrix.
struct Triple {
  long gamma = 0;
  long alpha = 0;
  long beta = 0;

  long sum() const { return gamma + alpha + beta; }
  friend bool operator==(const Triple& x, const Triple& y) {
    return x.gamma == y.gamma && x.alpha == y.alpha && x.beta == y.beta;
  }
  friend bool operator!=(const Triple& x, const Triple& y) { return !(x == y); }
  std::string str() const;
};

struct InvalidSequence : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// {b0,...,b_{D-1}; c1,...,cD}; a_i is always derived.
struct IntersectionArray {
  std::vector<long> b;
  std::vector<long> c;

  int diameter() const { return static_cast<int>(c.size()); }
  long valency() const { return b.empty() ? 0 : b.front(); }
  long b_at(int i) const;  // 0..D, b_D = 0
  long c_at(int i) const;  // 0..D, c_0 = 0
  long a_at(int i) const;  // 0..D
  Triple triple(int i) const { return {c_at(i), a_at(i), b_at(i)}; }
  std::string str() const;

  friend bool operator==(const IntersectionArray& x, const IntersectionArray& y) {
    return x.b == y.b && x.c == y.c;
  }
  friend bool operator<(const IntersectionArray& x, const IntersectionArray& y);
};

// Accepts "{3,2;1,1}" (braces optional, whitespace ignored).
IntersectionArray parse_array(std::string_view text);

struct Violation {
  std::string condition;  // short code, e.g. "b-decreasing"
  int index;              // offending position, -1 when global
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  bool has(std::string_view condition) const;
};

// Checks b0 > b1 >= ... >= b_{D-1} > 0, 1 = c1 <= ... <= cD <= k, a_i >= 0,
// a_i >= a1 + 1 - min(b_i, c_i) for 1 <= i <= D-1, and integrality of every
// vertex count k_i. Reports every violation. Throws ParseError when b and c
// have different lengths or are empty.
ValidationReport validate_array(const IntersectionArray& a);

// k_0..k_D as exact rationals.
std::vector<Rational> kappa_counts(const IntersectionArray& a);

// Head and tail of an array; D = 1 gives (0, 0).
std::pair<int, int> head_tail(const IntersectionArray& a);

// Distinct triples (gamma_i, alpha_i, beta_i), i = 1..g+1; the last one is the
// terminal triple. g = 0 only for complete graphs.
struct GraphicalSequence {
  std::vector<Triple> triples;
  long kappa = 0;
  long lambda = 0;

  int g() const { return static_cast<int>(triples.size()) - 1; }
  const Triple& at(int i) const { return triples.at(static_cast<std::size_t>(i - 1)); }  // 1-based
  std::string str() const;
};

// Throws InvalidSequence naming the first failed condition (G0..G3, distinctness).
void validate_graphical(const GraphicalSequence& g);

struct GraphicalDecomposition {
  GraphicalSequence sequence;
  std::vector<int> ell;  // ell[i-1] = run length of triple i; last entry 1
};

GraphicalDecomposition graphical_of(const IntersectionArray& a);

// The expanded sequence of triples of length D = s(g+1) together with the
// data it was built from.
class TridiagonalSequence {
 public:
  TridiagonalSequence(GraphicalSequence g, std::vector<int> ell);

  const GraphicalSequence& base() const { return g_; }
  const std::vector<int>& ells() const { return ell_; }
  int ell(int i) const { return ell_.at(static_cast<std::size_t>(i - 1)); }  // 1-based
  int s(int i) const;                                                     // 1-based, s(1) = 1
  int g() const { return g_.g(); }
  long kappa() const { return g_.kappa; }
  long lambda() const { return g_.lambda; }
  int diameter() const { return static_cast<int>(rows_.size()) - 1; }
  int head() const;
  int tail() const;
  // Row m of the intersection matrix, m = 0..D; row 0 is (0, 0, kappa).
  const Triple& row(int m) const { return rows_.at(static_cast<std::size_t>(m)); }
  // Guide index i (1..g+1) owning row m >= 1.
  int run_of(int m) const;
  IntersectionArray to_array() const;

 private:
  GraphicalSequence g_;
  std::vector<int> ell_;
  std::vector<Triple> rows_;
};

TridiagonalSequence build_tridiagonal(const GraphicalSequence& g, const std::vector<int>& ell);
TridiagonalSequence tridiagonal_of(const IntersectionArray& a);

// (G, Delta; L, ell). delta holds the 1-based indices i_1 < ... < i_tau of the
// distinguished triples; L is indexed like ell and ignored on delta indices.
struct Quadruple {
  GraphicalSequence g;
  std::vector<int> delta;
  std::vector<int> L;
  std::vector<int> ell;

  bool in_delta(int i) const;
  int L_at(int i) const { return L.at(static_cast<std::size_t>(i - 1)); }
  int ell_at(int i) const { return ell.at(static_cast<std::size_t>(i - 1)); }
  TridiagonalSequence tridiagonal() const { return build_tridiagonal(g, ell); }
};

// Throws InvalidSequence on any violated quadruple condition.
void validate_quadruple(const Quadruple& q);

}  // namespace drg
