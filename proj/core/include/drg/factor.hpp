#pragma once

#include <utility>
#include <vector>

#include "drg/poly.hpp"

namespace drg {

struct Factor {
  Poly poly;  // primitive integer polynomial, positive leading coefficient
  int multiplicity;
};

// Factorization of a nonzero integer polynomial into irreducible factors over
// the integers. The product of factor^multiplicity equals p up to its content.
// Ordering: by degree, then lexicographically by coefficients (lowest first).
std::vector<Factor> factor_integer_poly(const Poly& p);

// Same, for any nonzero rational polynomial (factors are primitive integer
// polynomials; the rational content is dropped).
std::vector<Factor> factor_rational_poly(const Poly& p);

// Irreducible factors of a squarefree primitive integer polynomial.
std::vector<Poly> factor_squarefree(const Poly& p);

bool is_irreducible(const Poly& p);

}  // namespace drg
