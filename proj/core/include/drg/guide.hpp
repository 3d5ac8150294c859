#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "drg/algebraic.hpp"
#include "drg/array_model.hpp"

namespace drg {

// Guide points of interior triple i: alpha_i -+ 2 sqrt(beta_i gamma_i). The
// guide interval is the open interval (left, right).
struct GuidePoint {
  int index = 0;
  AlgebraicNumber left;
  AlgebraicNumber right;
};

struct UnimodalityReport {
  bool right_at_least_first = true;  // R_i >= R_1 for all i
  bool equality_characterized = true;  // R_i == R_1 exactly for the first triple and its reflection
  bool unimodal = true;
  int peak = 0;                      // an index where R attains its maximum
  bool holds() const { return right_at_least_first && equality_characterized && unimodal; }
};

struct GuideData {
  std::vector<GuidePoint> points;  // points[i-1] for i = 1..g
  AlgebraicNumber right_max;
  UnimodalityReport report;

  const GuidePoint& at(int i) const { return points.at(static_cast<std::size_t>(i - 1)); }
  int g() const { return static_cast<int>(points.size()); }
};

// Requires g >= 1.
GuideData guide_points(const GraphicalSequence& g);

struct WellPlacedInterval {
  Rational lo, hi;
  int a = 0, b = 0, c = 0, d = 0;
  std::vector<int> contained_in;  // j with [lo, hi] inside I_j
};

struct Classification {
  std::optional<WellPlacedInterval> interval;
  // Codes "W1", "W2", "W3" in that order; W2 and W3 carry the guide index.
  std::vector<std::string> violations;
  bool well_placed() const { return interval.has_value(); }
  std::string reason() const { return violations.empty() ? std::string() : violations.front(); }
};

Classification classify_interval(const GraphicalSequence& g, const Rational& lo, const Rational& hi);
Classification classify_interval(const GuideData& guide, const Rational& lo, const Rational& hi);

// Middle thirds (rounded to 1e-6) of the cells between consecutive guide
// points that are well-placed, ascending. Cells narrower than 1e-3 are
// skipped.
std::vector<WellPlacedInterval> well_placed_cells(const GuideData& guide);

// Clauses (i)..(vi) of the a/b/c/d partition facts for a well-placed
// interval, recomputed from the guide points.
std::array<bool, 6> partition_clauses(const GuideData& guide, const WellPlacedInterval& w);

struct LenGap {
  long len = 0;
  long gap = 0;
};

// Len sums ell over the guide intervals containing the interval that are not
// in the c..d block; Gap sums ell over c..d (0 when c = g + 1).
LenGap len_gap(const std::vector<int>& ell, const WellPlacedInterval& w);
inline LenGap len_gap(const Quadruple& q, const WellPlacedInterval& w) { return len_gap(q.ell, w); }

struct NoInterval : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thirds construction inside [lo, hi] subset of [R_1, R_target]: M is the
// largest guide point in [lo, hi) (or lo), and the result is
// [(hi + 2M)/3, (2hi + M)/3] shrunk to rational endpoints by at most 1/1000 of
// its length per side. When that interval is not well-placed (a guide
// interval I_j with small j can sit entirely above R_target, forcing a = j
// without containment), the lower cells between guide points are tried in
// turn. Throws NoInterval when R_target <= R_1, the range is empty, or no
// cell is well-placed.
WellPlacedInterval find_well_placed(const GraphicalSequence& g, int target);
WellPlacedInterval find_well_placed(const GraphicalSequence& g, int target, const AlgebraicNumber& lo,
                                    const AlgebraicNumber& hi);

// Position i (0 <= i < tau) of the Delta list counted from the tail:
// delta_{tau-i} is triple g - j_i. Returns j_0, ..., j_{tau-1}.
std::vector<int> delta_offsets(const Quadruple& q);

// v_N and v_{N+1} of the backward recurrence through the non-Delta triples
// between Delta positions i-1 and i, as f v_1 + g v_0.
struct FGPolynomials {
  int position = 0;
  bool adjacent = true;
  int N = 0;
  // Standard-sequence row that plays v_0; v_j is row anchor - j.
  int anchor_row = 0;
  Poly f1, g1, f2, g2;
};

FGPolynomials fg_polynomials(const Quadruple& q, int position);

struct BadRootBranch {
  int position = 0;  // i
  int triple = 0;    // g - j_i
  Poly polynomial;   // rationalized product of the surd factors
  AlgebraicNumber lo, hi;  // [R_{g - j_i}, R_max]
  std::vector<AlgebraicNumber> roots;  // ascending
  int bound = 0;  // 8 (4 + deg f1) for i = 0, 16 (4 + deg f1) otherwise
};

struct BadRootSet {
  std::vector<BadRootBranch> branches;  // qualifying positions only
  std::vector<AlgebraicNumber> roots;  // union, ascending, distinct
  long bound = 0;  // 16 |G| (3 + sum of L off Delta)
  bool within_bound() const { return static_cast<long>(roots.size()) <= bound; }
  bool contains(const AlgebraicNumber& x) const;
};

BadRootSet bad_set(const Quadruple& q);

// A well-placed interval from find_well_placed, subdivided until its closure
// misses every bad root.
WellPlacedInterval find_avoiding(const Quadruple& q, int target);
WellPlacedInterval find_avoiding(const Quadruple& q, int target, const AlgebraicNumber& lo, const AlgebraicNumber& hi);
WellPlacedInterval avoid_bad_roots(const GuideData& guide, const WellPlacedInterval& w, const BadRootSet& bad);

struct GapStep {
  WellPlacedInterval interval;
  LenGap measure;
  int via = 0;  // guide index the step was placed under; 0 for the start
};

// Starting from w, repeatedly places a well-placed interval above the
// previous one, under a guide interval j in c..d with ell(j) > Gap / g, until
// Gap vanishes. Throws NoInterval when no such placement exists and
// std::logic_error when the chain exceeds g steps.
std::vector<GapStep> gap_chain(const GraphicalSequence& g, const std::vector<int>& ell, const WellPlacedInterval& w);

}  // namespace drg
