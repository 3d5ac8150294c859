#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "drg/multiplicity.hpp"

namespace drg {

struct EnumerationTask {
  long k = 3;
  int max_diameter = 4;
  bool combinatorial = true;  // drop arrays failing validate_array or without a tridiagonal model
  bool integrality = true;    // drop arrays with a non-integral multiplicity
  bool ac = true;             // drop arrays where conjugate eigenvalues disagree
  bool ivanov = false;        // drop arrays with h >= 1 and D > 4^k h
  long node_limit = 10000000;
};

struct EnumerationResult {
  std::vector<FeasibilityVerdict> survivors;  // sorted by array
  std::map<std::string, long> rejections;     // reason code -> count
  long candidates = 0;                        // complete arrays examined
  long nodes = 0;                             // partial placements visited
};

struct NodeLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Depth-first search over b_1 >= b_2 >= ... and c_2 <= c_3 <= ... with
// a_i >= 0, integral k_i and a_i >= a_1 + 1 - min(b_i, c_i) enforced as each
// position is placed; every complete candidate then goes through
// feasibility(). Output is independent of search order. Throws
// NodeLimitExceeded past task.node_limit placements.
EnumerationResult enumerate_feasible(const EnumerationTask& task);

// Rejection codes used in EnumerationResult::rejections.
inline constexpr const char* kRejectCombinatorial = "combinatorial";
inline constexpr const char* kRejectStructural = "no-tridiagonal-model";
inline constexpr const char* kRejectIntegrality = "non-integral-multiplicity";
inline constexpr const char* kRejectAc = "conjugate-mismatch";
inline constexpr const char* kRejectIvanov = "diameter-bound";

// D <= 4^k h; vacuous (true) when h = 0.
bool ivanov_bound_holds(const IntersectionArray& a);

struct OrderSTReport {
  long s = 0, t = 0;
  bool inferred = false;           // s, t derived from a_1 (c_2 = 1 or D = 1)
  AlgebraicNumber theta_min;       // smallest eigenvalue
  bool bound_ok = false;           // theta_min >= -t - 1
  bool equality_forced = false;    // s > t
  bool equality_holds = false;     // theta_min == -t - 1
  bool holds() const { return bound_ok && (!equality_forced || equality_holds); }
};

struct NotOfOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Order (s, t): every vertex lies on t + 1 cliques of size s + 1, so
// k = s (t + 1) and a_1 = s - 1. Without explicit s, t the shape is inferred
// only when c_2 = 1 or D = 1; otherwise, or when k / (a_1 + 1) is not an
// integer, throws NotOfOrder. Explicit values must satisfy both identities.
OrderSTReport order_st(const IntersectionArray& a, std::optional<std::pair<long, long>> st = std::nullopt);

struct NamedArray {
  std::string name;
  IntersectionArray array;
};

// Small embedded corpus of classical distance-regular graphs.
const std::vector<NamedArray>& known_arrays();

}  // namespace drg
