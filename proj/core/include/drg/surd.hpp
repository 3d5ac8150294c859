#pragma once

#include <optional>
#include <vector>

#include "drg/algebraic.hpp"
#include "drg/number_field.hpp"

namespace drg {

// P(x) = P1 + P2 sqrt(q1) + P3 sqrt(q2) + P4 sqrt(q1 q2), with q1, q2 monic
// quadratics that are not squares of linear polynomials.
struct SurdExpression {
  Poly P1, P2, P3, P4;
  Poly q1, q2;

  // Throws std::invalid_argument when q1 or q2 is not an admissible quadratic.
  void validate() const;
  // max deg P_j; -1 when all four vanish.
  int max_degree() const;
};

// Exact sign of X + Y sqrt(Q) for field elements with Q >= 0.
int surd_sign(const FieldElement& X, const FieldElement& Y, const FieldElement& Q);

// Exact sign of P(theta); theta must lie where q1 and q2 are nonnegative.
int surd_sign_at(const SurdExpression& e, const AlgebraicNumber& theta);

struct SurdRootCount {
  int count = 0;       // distinct roots of P in the interval
  int bound = 0;       // 4 (C + 2)
  bool degenerate = false;  // P vanishes on the whole interval
  Poly resolvent;      // polynomial whose roots contain those of P
  std::vector<AlgebraicNumber> roots;  // ascending
};

// Counts roots of P in the closed interval [lo, hi], which must lie where
// q1 and q2 are nonnegative.
SurdRootCount surd_root_count(const SurdExpression& e, const Rational& lo, const Rational& hi);

// U^2 - V^2 q1, the product of the four sign-conjugates of P.
Poly surd_resolvent(const SurdExpression& e);

// Rational polynomial vanishing at every root of P: the resolvent when
// q1 != q2, and A^2 - q B^2 for P = A + B sqrt(q) when q1 == q2. Empty when
// P vanishes identically.
std::optional<Poly> surd_rationalization(const SurdExpression& e);

}  // namespace drg
