#pragma once

#include <optional>
#include <vector>

#include "drg/algebraic.hpp"

namespace drg {

// All monic irreducible integer polynomials of degree 1..max_degree whose
// roots are real and lie in [-kappa, kappa]. Sorted by degree, then
// coefficients. Requires kappa >= 2 and 1 <= max_degree <= 12.
//
// For kappa = 2 the members are exactly the minimal polynomials of
// 2cos(2 pi/m) (Kronecker), which are generated directly; any other kappa
// runs search_Pkappa.
std::vector<Poly> enumerate_Pkappa(const Rational& kappa, int max_degree);

// Coefficient search: the k-th derivative of a member has simple real roots
// in [-kappa, kappa], which bounds each coefficient given the higher ones.
// Cost grows steeply with the degree.
std::vector<Poly> search_Pkappa(const Rational& kappa, int max_degree);

// True when p is monic, integral, irreducible, with all roots real in
// [-kappa, kappa].
bool in_Pkappa(const Poly& p, const Rational& kappa);

// (#roots of p in [lo, hi] - 1) / deg p.
Rational upsilon(const Poly& p, const Rational& lo, const Rational& hi);

struct UpsilonRecord {
  Poly poly;
  Rational lo, hi;  // hi - lo = zeta
  int roots_inside = 0;
  Rational upsilon;
};

struct UpsilonSup {
  Rational value;
  UpsilonRecord witness;
  int polynomials = 0;  // size of the enumerated family
  bool lower_bound = true;  // degrees beyond max_degree are not searched
};

// Best window of length zeta for p inside [-kappa, kappa].
UpsilonRecord best_window(const Poly& p, const Rational& kappa, const Rational& zeta);

UpsilonSup upsilon_sup(const Rational& kappa, const Rational& zeta, int max_degree);

// The root-concentration inequality for t >= 2 roots of a degree-n member
// of P_kappa in an interval of length zeta < 1, with tau = t/n, decided
// exactly in the form (1/zeta)^(t^2) <= (2 kappa)^(2 n^2).
bool tau_bound_holds(const Rational& kappa, const Rational& zeta, int t, int n);

struct TauSweep {
  int windows_checked = 0;
  int failures = 0;
};

// Checks tau_bound_holds on every best window with at least two roots.
TauSweep tau_bound_sweep(const Rational& kappa, const Rational& zeta, int max_degree);

}  // namespace drg
