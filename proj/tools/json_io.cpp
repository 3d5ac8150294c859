#include "json_io.hpp"

namespace drg::io {

json document(const std::string& command) { return json{{"schema", kSchema}, {"command", command}}; }

json rational_json(const Rational& q) { return to_string(q); }

json algebraic_json(const AlgebraicNumber& x) {
  json j{{"decimal", x.decimal(12)}, {"minimal_polynomial", to_string(x.minimal_polynomial())}};
  if (x.is_rational()) {
    j["exact"] = to_string(x.rational_value());
  } else {
    j["interval"] = {to_string(x.lower()), to_string(x.upper())};
  }
  return j;
}

json array_json(const IntersectionArray& a) {
  return json{{"text", a.str()}, {"b", a.b}, {"c", a.c}, {"diameter", a.diameter()}, {"valency", a.valency()}};
}

json triple_json(const Triple& t) { return json::array({t.gamma, t.alpha, t.beta}); }

json sequence_json(const GraphicalSequence& g) {
  json triples = json::array();
  for (const Triple& t : g.triples) triples.push_back(triple_json(t));
  return json{{"kappa", g.kappa}, {"lambda", g.lambda}, {"triples", triples}};
}

json spectrum_json(const Spectrum& s, const ChristoffelTable& table) {
  json eig = json::array();
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    json e = algebraic_json(s.eigenvalues[i]);
    const ChristoffelEntry& c = table.entries[i];
    e["multiplicity"] = algebraic_json(c.weight);
    if (c.rational) e["multiplicity"]["exact"] = to_string(*c.rational);
    eig.push_back(e);
  }
  return json{{"characteristic_polynomial", to_string(s.charpoly)},
              {"vertex_count", to_string(table.vertex_count)},
              {"eigenvalues", eig}};
}

json verdict_json(const FeasibilityVerdict& v) {
  json violations = json::array();
  for (const Violation& x : v.combinatorial.violations) {
    violations.push_back({{"condition", x.condition}, {"index", x.index}, {"message", x.message}});
  }
  json j{{"array", array_json(v.array)},
         {"status", to_string(v.status)},
         {"feasible", v.feasible()},
         {"note", kFeasibilityNote},
         {"violations", violations},
         {"multiplicities_integral", v.multiplicities_integral},
         {"ac", v.ac},
         {"reason", v.reason}};
  if (!v.structural_error.empty()) j["structural_error"] = v.structural_error;
  if (v.spectrum && v.table) j["spectrum"] = spectrum_json(*v.spectrum, *v.table);
  return j;
}

json guide_json(const GuideData& g) {
  json points = json::array();
  for (const GuidePoint& p : g.points) {
    points.push_back({{"index", p.index}, {"left", algebraic_json(p.left)}, {"right", algebraic_json(p.right)}});
  }
  const UnimodalityReport& r = g.report;
  return json{{"points", points},
              {"right_max", algebraic_json(g.right_max)},
              {"unimodality",
               {{"holds", r.holds()},
                {"right_at_least_first", r.right_at_least_first},
                {"equality_characterized", r.equality_characterized},
                {"unimodal", r.unimodal},
                {"peak", r.peak}}}};
}

json interval_json(const WellPlacedInterval& w, const LenGap& m) {
  return json{{"lo", to_string(w.lo)},
              {"hi", to_string(w.hi)},
              {"a", w.a},
              {"b", w.b},
              {"c", w.c},
              {"d", w.d},
              {"contained_in", w.contained_in},
              {"Len", m.len},
              {"Gap", m.gap}};
}

json bad_set_json(const BadRootSet& b) {
  json roots = json::array();
  for (const AlgebraicNumber& r : b.roots) roots.push_back(algebraic_json(r));
  json branches = json::array();
  for (const BadRootBranch& br : b.branches) {
    branches.push_back({{"position", br.position},
                        {"triple", br.triple},
                        {"degree", br.polynomial.degree()},
                        {"roots", br.roots.size()},
                        {"bound", br.bound}});
  }
  return json{{"count", b.roots.size()}, {"bound", b.bound}, {"within_bound", b.within_bound()},
              {"roots", roots},          {"branches", branches}};
}

json check_json(const CheckResult& r) {
  return json{{"check", r.name},     {"passed", r.passed},     {"failed", r.failed},
              {"skipped", r.skipped}, {"ok", r.ok()},           {"failures", r.failures}};
}

json order_st_json(const OrderSTReport& r) {
  return json{{"s", r.s},
              {"t", r.t},
              {"inferred", r.inferred},
              {"theta_min", algebraic_json(r.theta_min)},
              {"bound", -r.t - 1},
              {"bound_ok", r.bound_ok},
              {"equality_forced", r.equality_forced},
              {"equality_holds", r.equality_holds},
              {"holds", r.holds()}};
}

json upsilon_json(const UpsilonSup& s) {
  return json{{"value", to_string(s.value)},
              {"lower_bound", s.lower_bound},
              {"polynomials", s.polynomials},
              {"witness",
               {{"polynomial", to_string(s.witness.poly)},
                {"lo", to_string(s.witness.lo)},
                {"hi", to_string(s.witness.hi)},
                {"roots_inside", s.witness.roots_inside}}}};
}

json trace_json(const std::vector<TraceRow>& rows) {
  json out = json::array();
  for (const TraceRow& r : rows) {
    out.push_back({{"h", r.h},
                   {"Gap", r.measure.gap},
                   {"Len", r.measure.len},
                   {"head", r.head},
                   {"gap", r.gap},
                   {"tail", r.tail},
                   {"total", r.total},
                   {"ratio", r.ratio}});
  }
  return out;
}

}  // namespace drg::io
