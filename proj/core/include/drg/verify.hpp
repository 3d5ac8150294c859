#pragma once

#include <string>
#include <vector>

#include "drg/enumerate.hpp"

namespace drg {

struct CheckResult {
  std::string name;
  long passed = 0;
  long failed = 0;
  long skipped = 0;                   // instances where the statement does not apply
  std::vector<std::string> failures{};  // first few messages

  bool ok() const { return failed == 0; }
  long total() const { return passed + failed; }
  void record(bool holds, const std::string& what);
};

// Known arrays plus the survivors of enumerate_feasible for each valency in
// [3, max_k] and diameter <= max_diameter; duplicates removed.
std::vector<IntersectionArray> verification_corpus(long max_k, int max_diameter);

// D <= 4^k h for every array with h >= 1.
CheckResult check_ivanov(const std::vector<IntersectionArray>& corpus);

// surd_root_count stays within 4 (C + 2) and flags exactly the planted
// identically-vanishing expressions.
CheckResult check_surd_bound(unsigned seed, int trials, int max_degree = 4);

// The root-concentration inequality on every best window of P_kappa members.
CheckResult check_discriminant(const Rational& kappa, const Rational& zeta, int max_degree);

// Eigenvalues of every principal submatrix interlace the full spectrum.
CheckResult check_interlacing(const std::vector<IntersectionArray>& corpus);

// Every localization instance (runs of length >= 2) has a witness eigenvalue.
CheckResult check_localization(const std::vector<IntersectionArray>& corpus);

// The neighbour growth bounds at `points` seeded rational theta in
// [-kappa, kappa] per array.
CheckResult check_neighbour_bounds(const std::vector<IntersectionArray>& corpus, unsigned seed, int points);

// Run-sign facts for the kappa = 20 synthetic quadruple with ell(1) in
// ell_values, at `points` seeded rational theta per well-placed interval.
CheckResult check_runs(const std::vector<int>& ell_values, unsigned seed, int points);

// Counting and identity facts on every corpus array (t <= h, integral k_i
// with k_i b_i = k_{i+1} c_{i+1}, m(theta) S(theta) = n, u(kappa) = 1,
// sum of multiplicities = n, D <= 4^k h) and, on `trials` seeded random
// quadruples, unimodality of the right guide points, the partition clauses
// on every well-placed cell, the bad-root bound and termination of the gap
// chain within g steps.
CheckResult check_structure(const std::vector<IntersectionArray>& corpus, unsigned seed, int trials);

// Check names accepted by run_check.
const std::vector<std::string>& check_names();

struct CheckOptions {
  long k = 3;
  int max_diameter = 4;
  unsigned seed = 7;
  int trials = 1000;
  Rational kappa = 2;
  Rational zeta = Rational(1, 4);
  int max_degree = 8;
};

// Dispatches on a name from check_names(); throws std::invalid_argument
// otherwise.
CheckResult run_check(const std::string& name, const CheckOptions& opt);

}  // namespace drg
