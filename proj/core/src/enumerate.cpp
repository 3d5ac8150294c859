#include "drg/enumerate.hpp"

#include <algorithm>

namespace drg {

namespace {

struct Search {
  const EnumerationTask& task;
  EnumerationResult& out;
  std::vector<long> b, c, kc;  // b_0.., c_1.., k_0..

  void visit() {
    if (++out.nodes > task.node_limit) {
      throw NodeLimitExceeded("enumeration exceeded " + std::to_string(task.node_limit) + " nodes");
    }
  }

  void consider(IntersectionArray a) {
    ++out.candidates;
    FeasibilityVerdict v = feasibility(a);
    const char* reject = nullptr;
    if (task.combinatorial && !v.combinatorial.valid()) {
      reject = kRejectCombinatorial;
    } else if (task.combinatorial && !v.structural_error.empty()) {
      reject = kRejectStructural;
    } else if (task.integrality && v.table && !v.multiplicities_integral) {
      reject = kRejectIntegrality;
    } else if (task.ac && v.table && !v.ac) {
      reject = kRejectAc;
    } else if (task.ivanov && !ivanov_bound_holds(a)) {
      reject = kRejectIvanov;
    }
    if (reject) {
      ++out.rejections[reject];
    } else {
      out.survivors.push_back(std::move(v));
    }
  }

  // c_1..c_i and b_0..b_{i-1} are placed.
  void extend(int i) {
    const long k = task.k;
    const long ci = c.back();
    consider({b, c});
    if (i >= task.max_diameter) return;
    const long a1 = i >= 2 ? k - b[1] - 1 : -1;
    const long top = std::min(i == 1 ? k - 1 : b.back(), k - ci);
    for (long bi = top; bi >= 1; --bi) {
      if (i >= 2 && k - bi - ci < a1 + 1 - std::min(bi, ci)) continue;
      visit();
      b.push_back(bi);
      for (long cn = ci; cn <= k; ++cn) {
        if ((kc.back() * bi) % cn != 0) continue;
        visit();
        c.push_back(cn);
        kc.push_back(kc.back() * bi / cn);
        extend(i + 1);
        kc.pop_back();
        c.pop_back();
      }
      b.pop_back();
    }
  }
};

}  // namespace

EnumerationResult enumerate_feasible(const EnumerationTask& task) {
  if (task.k < 3) throw std::invalid_argument("valency must be at least 3");
  if (task.max_diameter < 1) throw std::invalid_argument("max diameter must be at least 1");
  EnumerationResult out;
  Search s{task, out, {task.k}, {1}, {1, task.k}};
  s.extend(1);
  std::sort(out.survivors.begin(), out.survivors.end(),
            [](const FeasibilityVerdict& x, const FeasibilityVerdict& y) { return x.array < y.array; });
  return out;
}

bool ivanov_bound_holds(const IntersectionArray& a) {
  const long h = head_tail(a).first;
  if (h == 0) return true;
  const long k = a.valency();
  if (k >= 30) return true;  // 4^k h exceeds any representable diameter
  return static_cast<long>(a.diameter()) <= (1L << (2 * k)) * h;
}

OrderSTReport order_st(const IntersectionArray& a, std::optional<std::pair<long, long>> st) {
  const ValidationReport v = validate_array(a);
  if (!v.valid()) throw NotOfOrder("invalid array: " + v.violations.front().message);
  const long k = a.valency();
  const long a1 = a.a_at(1);
  OrderSTReport r;
  if (st) {
    r.s = st->first;
    r.t = st->second;
    if (r.s < 1 || r.t < 0 || k != r.s * (r.t + 1) || a1 != r.s - 1) {
      throw NotOfOrder("s = " + std::to_string(r.s) + ", t = " + std::to_string(r.t) +
                       " needs k = s(t+1) and a1 = s-1");
    }
  } else {
    if (a.diameter() >= 2 && a.c_at(2) != 1) {
      throw NotOfOrder("order not inferable: c2 = " + std::to_string(a.c_at(2)) + "; supply s and t");
    }
    r.s = a1 + 1;
    if (k % r.s != 0) throw NotOfOrder("k / (a1 + 1) is not an integer");
    r.t = k / r.s - 1;
    r.inferred = true;
  }
  const Spectrum sp = spectrum(tridiagonal_of(a));
  r.theta_min = sp.eigenvalues.back();
  const Rational floor(-r.t - 1);
  r.bound_ok = r.theta_min.compare(floor) >= 0;
  r.equality_forced = r.s > r.t;
  r.equality_holds = r.theta_min.compare(floor) == 0;
  return r;
}

const std::vector<NamedArray>& known_arrays() {
  static const std::vector<NamedArray> corpus = [] {
    const std::vector<std::pair<const char*, const char*>> raw{
        {"K4", "{3;1}"},
        {"K3,3", "{3,2;1,3}"},
        {"Petersen", "{3,2;1,1}"},
        {"cube", "{3,2,1;1,2,3}"},
        {"Heawood", "{3,2,2;1,1,3}"},
        {"Pappus", "{3,2,2,1;1,1,2,3}"},
        {"Coxeter", "{3,2,2,1;1,1,1,2}"},
        {"Tutte 8-cage", "{3,2,2,2;1,1,1,3}"},
        {"dodecahedron", "{3,2,1,1,1;1,1,1,2,3}"},
        {"Desargues", "{3,2,2,1,1;1,1,2,2,3}"},
        {"Tutte 12-cage", "{3,2,2,2,2,2;1,1,1,1,1,3}"},
        {"Biggs-Smith", "{3,2,2,2,1,1,1;1,1,1,1,1,1,3}"},
        {"Foster", "{3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3}"},
        {"K5", "{4;1}"},
        {"octahedron", "{4,1;1,4}"},
        {"K4,4", "{4,3;1,4}"},
        {"H(2,3)", "{4,2;1,2}"},
        {"line graph of Petersen", "{4,2,1;1,1,4}"},
        {"odd graph O4", "{4,3,3;1,1,2}"},
        {"4-cube", "{4,3,2,1;1,2,3,4}"},
        {"folded 5-cube", "{5,4;1,2}"},
        {"icosahedron", "{5,2,1;1,2,5}"},
        {"H(3,3)", "{6,4,2;1,2,3}"},
        {"Hoffman-Singleton", "{7,6;1,1}"},
        {"J(6,3)", "{9,4,1;1,4,9}"},
    };
    std::vector<NamedArray> out;
    for (const auto& [name, text] : raw) out.push_back({name, parse_array(text)});
    return out;
  }();
  return corpus;
}

}  // namespace drg
