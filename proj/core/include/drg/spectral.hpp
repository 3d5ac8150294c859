#pragma once

#include <optional>
#include <vector>

#include "drg/algebraic.hpp"
#include "drg/array_model.hpp"
#include "drg/number_field.hpp"

namespace drg {

// The (D+1)x(D+1) tridiagonal matrix of a sequence: row m is
// (c_m, a_m, b_m) placed at columns m-1, m, m+1.
struct L1Matrix {
  std::vector<long> diag;   // a_0..a_D
  std::vector<long> super;  // b_0..b_{D-1}
  std::vector<long> sub;    // c_1..c_D

  int order() const { return static_cast<int>(diag.size()); }
};

L1Matrix l1_matrix(const TridiagonalSequence& t);

// det(xI - M) for the tridiagonal matrix with the given diagonal and
// off-diagonal products super[i]*sub[i].
Poly tridiagonal_charpoly(const std::vector<long>& diag, const std::vector<long>& offdiag_products);

// det(xI - M') where M' is M with row and column r removed.
Poly principal_minor_charpoly(const L1Matrix& m, int r);

struct CompanionPolynomials {
  std::vector<Poly> v;  // v_0..v_{D+1}
  std::vector<Poly> F;  // F_0..F_D, monic
  std::vector<Poly> u;  // u_0..u_D, u_i(kappa) = 1
};

CompanionPolynomials companion_polys(const TridiagonalSequence& t);

// (x - kappa) F_D(x).
Poly characteristic_poly(const TridiagonalSequence& t);

inline const Rational& default_isolation_width() {
  static const Rational w(1, 1000000000);
  return w;
}

struct SpectrumFactor {
  Poly poly;                            // primitive irreducible integer polynomial
  std::vector<AlgebraicNumber> roots;   // descending
};

struct Spectrum {
  Poly charpoly;
  std::vector<SpectrumFactor> factors;
  std::vector<AlgebraicNumber> eigenvalues;  // strictly descending, eigenvalues[0] = kappa
  std::vector<int> factor_of;                // index into factors for each eigenvalue
};

Spectrum spectrum(const TridiagonalSequence& t, const Rational& width = default_isolation_width());

// u_0(theta)..u_D(theta) computed in theta's field.
std::vector<FieldElement> standard_vector(const TridiagonalSequence& t, const FieldElement& theta);
std::vector<FieldElement> standard_vector(const TridiagonalSequence& t, const AlgebraicNumber& theta);

// L1 * w for a vector of field elements.
std::vector<FieldElement> apply_l1(const TridiagonalSequence& t, const std::vector<FieldElement>& w);

struct InterlacingResult {
  bool holds = false;
  std::vector<AlgebraicNumber> full;   // ascending
  std::vector<AlgebraicNumber> minor;  // ascending, with multiplicity
};

InterlacingResult check_interlacing(const TridiagonalSequence& t, int row);

// One eigenvalue localization instance for a run of length ell >= 2 at
// guide index i. j = 2 uses the half-open range [lower, kappa); j = 3..ell
// use the closed range [lower, upper].
struct LocalizationInstance {
  int index = 0;
  int j = 0;
  AlgebraicNumber lower;
  AlgebraicNumber upper;
  bool upper_open = false;
  std::optional<AlgebraicNumber> witness;

  bool holds() const { return witness.has_value(); }
};

// alpha + 2 sqrt(beta gamma) cos(j pi / (ell + 1)) for j = 1..ell, descending.
std::vector<AlgebraicNumber> localization_points(const Triple& tr, int ell);

std::vector<LocalizationInstance> check_localization(const TridiagonalSequence& t, const Spectrum& s);
std::vector<LocalizationInstance> check_localization(const TridiagonalSequence& t);

// Number of eigenvalues in the closed interval [lo, hi].
int eigencount_in_interval(const TridiagonalSequence& t, const Rational& lo, const Rational& hi);

}  // namespace drg
