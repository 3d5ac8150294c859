#include "drg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "drg/guide.hpp"
#include "drg/recurrence.hpp"
#include "drg/sampling.hpp"
#include "drg/upsilon.hpp"

namespace drg {

namespace {

constexpr std::size_t kMaxMessages = 10;

Rational random_between(std::mt19937& rng, const Rational& lo, const Rational& hi) {
  return lo + (hi - lo) * ratio(sampling::uniform(rng, 1, 999), 1000);
}

GraphicalSequence synthetic20() { return {{{1, 0, 19}, {2, 10, 8}, {3, 15, 2}, {6, 14, 0}}, 20, 0}; }

}  // namespace

void CheckResult::record(bool holds, const std::string& what) {
  if (holds) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < kMaxMessages) failures.push_back(what);
}

std::vector<IntersectionArray> verification_corpus(long max_k, int max_diameter) {
  std::vector<IntersectionArray> out;
  for (const NamedArray& n : known_arrays()) out.push_back(n.array);
  for (long k = 3; k <= max_k; ++k) {
    EnumerationTask task;
    task.k = k;
    task.max_diameter = max_diameter;
    for (const FeasibilityVerdict& v : enumerate_feasible(task).survivors) out.push_back(v.array);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CheckResult check_ivanov(const std::vector<IntersectionArray>& corpus) {
  CheckResult r{"ivanov"};
  for (const IntersectionArray& a : corpus) {
    if (head_tail(a).first == 0) {
      ++r.skipped;
      continue;
    }
    r.record(ivanov_bound_holds(a), a.str() + ": D exceeds 4^k h");
  }
  return r;
}

CheckResult check_surd_bound(unsigned seed, int trials, int max_degree) {
  CheckResult r{"ft-bound"};
  std::mt19937 rng(seed);
  for (int n = 0; n < trials; ++n) {
    const sampling::SurdSample s = sampling::random_surd(rng, max_degree);
    const SurdExpression& e = s.expr;
    const bool vanishes = e.q1 == e.q2 && (e.P2 + e.P3).is_zero() && (e.P1 + e.q1 * e.P4).is_zero();
    const SurdRootCount c = surd_root_count(e, s.lo, s.hi);
    const bool ok = c.degenerate == vanishes && (c.degenerate || c.count <= c.bound);
    r.record(ok, "trial " + std::to_string(n) + ": " + std::to_string(c.count) + " roots, bound " +
                     std::to_string(c.bound) + (c.degenerate ? ", degenerate" : ""));
  }
  return r;
}

CheckResult check_discriminant(const Rational& kappa, const Rational& zeta, int max_degree) {
  CheckResult r{"discriminant"};
  const TauSweep sweep = tau_bound_sweep(kappa, zeta, max_degree);
  r.passed = sweep.windows_checked - sweep.failures;
  r.failed = sweep.failures;
  if (sweep.failures > 0) r.failures.push_back(std::to_string(sweep.failures) + " windows break the bound");
  return r;
}

CheckResult check_interlacing(const std::vector<IntersectionArray>& corpus) {
  CheckResult r{"interlacing"};
  for (const IntersectionArray& a : corpus) {
    const TridiagonalSequence t = tridiagonal_of(a);
    for (int row = 0; row <= t.diameter(); ++row) {
      r.record(drg::check_interlacing(t, row).holds, a.str() + " row " + std::to_string(row));
    }
  }
  return r;
}

CheckResult check_localization(const std::vector<IntersectionArray>& corpus) {
  CheckResult r{"localization"};
  for (const IntersectionArray& a : corpus) {
    const TridiagonalSequence t = tridiagonal_of(a);
    const auto instances = drg::check_localization(t);
    if (instances.empty()) ++r.skipped;
    for (const LocalizationInstance& i : instances) {
      r.record(i.holds(), a.str() + " run " + std::to_string(i.index) + " j=" + std::to_string(i.j));
    }
  }
  return r;
}

CheckResult check_neighbour_bounds(const std::vector<IntersectionArray>& corpus, unsigned seed, int points) {
  CheckResult r{"neighbour"};
  std::mt19937 rng(seed);
  for (const IntersectionArray& a : corpus) {
    const TridiagonalSequence t = tridiagonal_of(a);
    const long k = t.kappa();
    for (int n = 0; n < points; ++n) {
      const Rational theta = ratio(sampling::uniform(rng, -1000 * k, 1000 * k), 1000);
      const NeighbourReport rep = verify_neighbour_bounds(t, AlgebraicNumber(theta));
      r.record(rep.holds(), a.str() + " at " + theta.get_str());
    }
  }
  return r;
}

CheckResult check_runs(const std::vector<int>& ell_values, unsigned seed, int points) {
  CheckResult r{"runs"};
  std::mt19937 rng(seed);
  const GraphicalSequence g = synthetic20();
  const GuideData guide = guide_points(g);
  const std::vector<WellPlacedInterval> cells = well_placed_cells(guide);
  for (int h : ell_values) {
    const Quadruple q{g, {1, 3}, {h, 4, 3, 1}, {h, 4, 3, 1}};
    validate_quadruple(q);
    const TridiagonalSequence t = q.tridiagonal();
    for (const WellPlacedInterval& w : cells) {
      for (int n = 0; n < points; ++n) {
        const Rational theta = random_between(rng, w.lo, w.hi);
        const InequalityReport rep = verify_runs(t, w, AlgebraicNumber(theta));
        const auto fail = rep.first_failure();
        r.record(!fail, "ell(1)=" + std::to_string(h) + " theta=" + theta.get_str() +
                            (fail ? " clause " + fail->clause + " at " + std::to_string(fail->index) : ""));
      }
    }
  }
  return r;
}

CheckResult check_structure(const std::vector<IntersectionArray>& corpus, unsigned seed, int trials) {
  CheckResult r{"structure"};
  for (const IntersectionArray& a : corpus) {
    const std::string name = a.str();
    const FeasibilityVerdict v = feasibility(a);
    if (!v.feasible()) {
      r.record(false, name + " is not feasible: " + v.reason);
      continue;
    }
    const auto [h, tl] = head_tail(a);
    r.record(tl <= h, name + ": tail exceeds head");

    const std::vector<Rational> k = kappa_counts(a);
    bool integral = true;
    for (int i = 0; i <= a.diameter(); ++i) {
      const std::size_t n = static_cast<std::size_t>(i);
      integral = integral && is_integer(k[n]);
      if (i < a.diameter()) integral = integral && k[n] * a.b_at(i) == k[n + 1] * a.c_at(i + 1);
    }
    r.record(integral, name + ": vertex counts");

    const TridiagonalSequence t = tridiagonal_of(a);
    const Rational n_vertices = v.table->vertex_count;
    Rational msum = 0;
    bool identity = true;
    for (const ChristoffelEntry& e : v.table->entries) {
      const SumDecomposition s = sum_split(t, e.theta, -1, -1);
      identity = identity && e.weight * s.total.to_algebraic() == AlgebraicNumber(n_vertices);
      msum += *e.rational;
    }
    r.record(identity, name + ": multiplicity times sum differs from n");
    r.record(msum == n_vertices, name + ": multiplicities do not sum to n");

    bool ones = true;
    for (const FieldElement& u : standard_vector(t, AlgebraicNumber(a.valency()))) {
      ones = ones && u.is_rational() && u.rational_value() == 1;
    }
    r.record(ones, name + ": u(k) is not all ones");
    r.record(ivanov_bound_holds(a), name + ": D exceeds 4^k h");
  }

  std::mt19937 rng(seed);
  for (int n = 0; n < trials; ++n) {
    const long kappa = sampling::uniform(rng, 6, 24);
    const GraphicalSequence g = sampling::random_graphical(rng, kappa, sampling::uniform(rng, 0, 2), 6);
    if (g.g() < 1) {
      ++r.skipped;
      continue;
    }
    const Quadruple q = sampling::random_quadruple(rng, g, 3, 6);
    const std::string name = g.str();
    const GuideData guide = guide_points(g);
    r.record(guide.report.holds(), name + ": right guide points not unimodal");

    for (const WellPlacedInterval& w : well_placed_cells(guide)) {
      const auto clauses = partition_clauses(guide, w);
      r.record(std::all_of(clauses.begin(), clauses.end(), [](bool b) { return b; }),
               name + ": partition clause fails on [" + w.lo.get_str() + ", " + w.hi.get_str() + "]");
      if (len_gap(q, w).gap == 0) continue;
      try {
        const auto chain = gap_chain(g, q.ell, w);
        r.record(static_cast<int>(chain.size()) - 1 <= g.g() && chain.back().measure.gap == 0,
                 name + ": gap chain did not settle");
      } catch (const NoInterval&) {
        ++r.skipped;
      } catch (const std::logic_error& e) {
        r.record(false, name + ": " + e.what());
      }
    }

    const BadRootSet bad = bad_set(q);
    bool branches = true;
    for (const BadRootBranch& b : bad.branches) branches = branches && static_cast<int>(b.roots.size()) <= b.bound;
    r.record(bad.within_bound() && branches, name + ": bad roots exceed the bound");
  }
  return r;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"ivanov",       "ft-bound",  "discriminant", "interlacing",
                                              "localization", "neighbour", "runs",         "structure"};
  return names;
}

CheckResult run_check(const std::string& name, const CheckOptions& opt) {
  if (name == "ft-bound") return check_surd_bound(opt.seed, opt.trials);
  if (name == "discriminant") return check_discriminant(opt.kappa, opt.zeta, opt.max_degree);
  if (name == "runs") return check_runs({5, 10, 20, 40}, opt.seed, 20);
  const auto corpus = [&] { return verification_corpus(opt.k, opt.max_diameter); };
  if (name == "ivanov") return check_ivanov(corpus());
  if (name == "interlacing") return check_interlacing(corpus());
  if (name == "localization") return check_localization(corpus());
  if (name == "neighbour") return check_neighbour_bounds(corpus(), opt.seed, 100);
  if (name == "structure") return check_structure(corpus(), opt.seed, opt.trials);
  throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace drg
