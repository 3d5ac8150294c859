#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drg/spectral.hpp"

namespace drg {

// S(x) = sum_j k_j u_j(x)^2 reduced modulo one irreducible factor of the
// characteristic polynomial.
struct FactorCertificate {
  Poly factor;
  Poly reduced_sum;
  bool constant() const { return reduced_sum.degree() <= 0; }
};

struct ChristoffelEntry {
  AlgebraicNumber theta;
  int factor = 0;
  AlgebraicNumber weight;                // n / S(theta)
  std::optional<Rational> rational;      // set when the weight is rational
};

struct ChristoffelTable {
  Rational vertex_count;  // n = sum_j k_j
  Poly sum_poly;          // S(x) before reduction
  std::vector<FactorCertificate> factors;
  std::vector<ChristoffelEntry> entries;  // same order as Spectrum::eigenvalues
};

// sum_j k_j u_j(x)^2 as a rational polynomial.
Poly christoffel_sum_poly(const TridiagonalSequence& t);

ChristoffelTable christoffel(const TridiagonalSequence& t, const Spectrum& s);
ChristoffelTable christoffel(const TridiagonalSequence& t);

struct AcResult {
  bool holds = false;
  std::vector<FactorCertificate> certificate;
};

// Conjugate eigenvalues share a Christoffel number iff S reduces to a
// constant modulo every factor.
AcResult check_ac(const TridiagonalSequence& t, const Spectrum& s);
AcResult check_ac(const TridiagonalSequence& t);

enum class Feasibility { CombinatoriallyInvalid, SpectrallyInfeasible, Feasible };

const char* to_string(Feasibility f);

struct FeasibilityVerdict {
  IntersectionArray array;
  Feasibility status = Feasibility::CombinatoriallyInvalid;
  ValidationReport combinatorial;
  std::string structural_error;  // set when the array has no tridiagonal model
  bool multiplicities_integral = false;
  bool ac = false;
  std::optional<Spectrum> spectrum;
  std::optional<ChristoffelTable> table;
  std::string reason;  // first failure, empty when feasible

  bool feasible() const { return status == Feasibility::Feasible; }
};

FeasibilityVerdict feasibility(const IntersectionArray& a);

}  // namespace drg
