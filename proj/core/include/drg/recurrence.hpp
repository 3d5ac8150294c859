#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "drg/algebraic.hpp"
#include "drg/array_model.hpp"
#include "drg/guide.hpp"
#include "drg/number_field.hpp"

namespace drg {

// a + b sqrt(q) with a, b, q in the field of theta. For q < 0 this is the
// complex number a + i b sqrt(-q). Values sharing an expression only combine
// when they share q (or one of them has b = 0).
class QuadraticSurd {
 public:
  QuadraticSurd(FieldElement a, FieldElement b, FieldElement q);
  explicit QuadraticSurd(const FieldElement& a);

  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  const FieldElement& q() const { return q_; }

  bool real() const { return b_.is_zero() || q_.sign() >= 0; }
  bool is_zero() const;
  int sign() const;  // requires real()
  // a^2 - b^2 q; the squared modulus when q < 0.
  FieldElement norm() const { return a_ * a_ - b_ * b_ * q_; }
  QuadraticSurd conj() const { return QuadraticSurd(a_, -b_, q_); }
  QuadraticSurd pow(unsigned n) const;
  QuadraticSurd abs() const { return sign() < 0 ? -*this : *this; }

  AlgebraicNumber to_algebraic() const;  // requires real()
  double real_part() const;
  double imag_part() const;
  std::string str(int digits = 12) const;

  QuadraticSurd operator-() const { return QuadraticSurd(-a_, -b_, q_); }
  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y);

 private:
  FieldElement a_, b_, q_;
};

inline bool equal(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).is_zero(); }
// Both arguments real.
int compare(const QuadraticSurd& x, const QuadraticSurd& y);

// theta sits on a guide point of triple `index`: the auxiliary quadratic has a
// double root. Callers are expected to move theta.
struct OnGuidePoint : std::domain_error {
  OnGuidePoint(int index, const std::string& what) : std::domain_error(what), index(index) {}
  int index;
};

// Roots of one auxiliary quadratic, the larger in absolute value first.
struct RootPair {
  int index = 0;  // triple index the quadratic was built from
  QuadraticSurd first, second;
  bool real() const { return first.real(); }
};

// rho_i, sigma_i: roots of beta_i z^2 + (alpha_i - theta) z + gamma_i, 1 <= i <= g.
RootPair auxiliary_roots(const TridiagonalSequence& t, int i, const FieldElement& theta);
RootPair auxiliary_roots(const TridiagonalSequence& t, int i, const AlgebraicNumber& theta);
// x_i, y_i: roots of gamma_{g-i} X^2 + (alpha_{g-i} - theta) X + beta_{g-i}, 0 <= i < g.
RootPair tail_roots(const TridiagonalSequence& t, int i, const FieldElement& theta);
RootPair tail_roots(const TridiagonalSequence& t, int i, const AlgebraicNumber& theta);

// u_{s(i)-1+j} = omega1 rho^j + omega2 sigma^j for 0 <= j <= ell(i) + 1.
struct RunOmega {
  RootPair roots;
  QuadraticSurd omega1, omega2;
};

// u_{s(g-i+1)-j} = nu1 x^j + nu2 y^j for 0 <= j <= ell(g-i) + 1.
struct TailNu {
  int i = 0;
  RootPair roots;
  QuadraticSurd nu1, nu2;
  // |nu1 / nu2|; empty when nu2 = 0.
  std::optional<double> ratio() const;
};

struct RunCoefficients {
  std::vector<FieldElement> u;  // u_0..u_D
  std::vector<RunOmega> runs;   // runs[i-1] for i = 1..g
  std::vector<TailNu> tails;    // tails[i] for i = 0..g-1
  // Every closed form reproduces the recursed u values exactly.
  bool reconstructs = false;
};

// Throws OnGuidePoint when theta hits any guide point.
RunCoefficients run_coefficients(const TridiagonalSequence& t, const AlgebraicNumber& theta);

struct SumDecomposition {
  int head_end = -1;  // head covers 0..head_end
  int gap_end = -1;   // gap covers head_end+1..gap_end, tail the rest
  FieldElement head, gap, tail, total;
};

// Splits sum_i k_i u_i(theta)^2 at arbitrary indices -1 <= head_end <= gap_end <= D.
SumDecomposition sum_split(const TridiagonalSequence& t, const AlgebraicNumber& theta, int head_end, int gap_end);
// The split at s(a) - 2 and s(b + 1) of a well-placed interval; theta must lie
// in [w.lo, w.hi].
SumDecomposition sum_decomposition(const Quadruple& q, const WellPlacedInterval& w, const AlgebraicNumber& theta);

// total / (Len * prod_{i<a} ((beta_i/gamma_i) rho_i^2)^ell(i)).
AlgebraicNumber growth_ratio(const Quadruple& q, const WellPlacedInterval& w, const AlgebraicNumber& theta);

// One inequality of a report. `applicable` is false where the statement
// involves a complex root pair (the run at index a always sits inside its
// guide interval).
struct InequalityCheck {
  std::string clause;  // roots-ordered, u-product, omega-signs, rho-decreasing, u-step, omega1-dominates
  int index = 0;
  bool applicable = true;
  bool holds = true;
};

struct InequalityReport {
  std::vector<InequalityCheck> checks;
  bool holds() const;
  std::optional<InequalityCheck> first_failure() const;
  int applicable_count() const;
};

// The sign and growth facts for the runs before a at theta in a well-placed
// interval: 0 < sigma_i < rho_i < 1, u_{s(i)-1} > prod_{j<i} rho_j^ell(j),
// -omega1 < omega2 < 0 < omega1, and three helper facts (rho decreasing,
// u_{s(i)} > rho_i u_{s(i)-1}, omega1 > u_{s(i)-1}).
InequalityReport verify_runs(const TridiagonalSequence& t, const WellPlacedInterval& w, const AlgebraicNumber& theta);

struct NeighbourCheck {
  int i = 0;
  bool ratio_lower = true;   // max(|u_i|,|u_i+1|) <= 3k max(|u_i-1|,|u_i|)
  bool ratio_upper = true;   // max(|u_i-1|,|u_i|) <= 3k max(|u_i|,|u_i+1|)
  bool weighted_lower = true;  // same with k_j u_j^2 and 9k^4
  bool weighted_upper = true;
  bool holds() const { return ratio_lower && ratio_upper && weighted_lower && weighted_upper; }
};

struct NeighbourReport {
  std::vector<NeighbourCheck> checks;  // i = 1..D-1
  bool holds() const;
};

// Requires |theta| <= kappa.
NeighbourReport verify_neighbour_bounds(const TridiagonalSequence& t, const AlgebraicNumber& theta);

// One line of a sum-decomposition sweep.
struct TraceRow {
  long h = 0;
  LenGap measure;
  double head = 0, gap = 0, tail = 0, total = 0;
  double ratio = 0;  // growth_ratio
};

// Replaces ell(index) by each h in turn and records the decomposition at theta.
std::vector<TraceRow> sum_trace(const Quadruple& q, int index, const std::vector<long>& hs,
                                const WellPlacedInterval& w, const AlgebraicNumber& theta);

// Header line h,Gap,Len,head,gap,tail,total,ratio then one line per row.
std::string trace_csv(const std::vector<TraceRow>& rows);

}  // namespace drg
