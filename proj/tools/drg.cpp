// drg: exact spectral feasibility and recurrence tools for intersection arrays.
//
// Exit codes: 0 success / every check passed, 1 a verification failed,
// 2 usage or input error.

#include <CLI11.hpp>

#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "json_io.hpp"

namespace {

using drg::io::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("expected an integer, got '" + item + "'");
    }
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (long v : parse_longs(text)) out.push_back(static_cast<int>(v));
  return out;
}

// "gamma,alpha,beta;..." with kappa and lambda read off the first triple.
drg::GraphicalSequence parse_sequence(const std::string& text) {
  drg::GraphicalSequence g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const std::vector<long> v = parse_longs(item);
    if (v.size() != 3) throw UsageError("each triple needs three entries: '" + item + "'");
    g.triples.push_back({v[0], v[1], v[2]});
  }
  if (g.triples.empty()) throw UsageError("empty sequence");
  g.kappa = g.triples.front().sum();
  g.lambda = g.triples.front().alpha;
  drg::validate_graphical(g);
  return g;
}

// Shared by intervals and trace: a quadruple from --array or --sequence.
struct QuadrupleInput {
  std::string array, sequence, ell, L, delta;

  void add(CLI::App* app) {
    app->add_option("--array", array, "intersection array, e.g. {3,2,2;1,1,3}");
    app->add_option("--sequence", sequence, "graphical sequence gamma,alpha,beta;...");
    app->add_option("--ell", ell, "run lengths ell(1..g+1), comma separated");
    app->add_option("--L", L, "L(1..g+1) for the Delta triples; defaults to ell");
    app->add_option("--delta", delta, "Delta indices, comma separated; defaults to 1");
  }

  drg::Quadruple build() const {
    if (array.empty() == sequence.empty()) throw UsageError("give exactly one of --array and --sequence");
    drg::Quadruple q;
    if (!array.empty()) {
      const drg::GraphicalDecomposition d = drg::graphical_of(drg::parse_array(array));
      q.g = d.sequence;
      q.ell = d.ell;
    } else {
      q.g = parse_sequence(sequence);
      q.ell.assign(static_cast<std::size_t>(q.g.g() + 1), 1);
    }
    if (!ell.empty()) q.ell = parse_ints(ell);
    q.L = L.empty() ? q.ell : parse_ints(L);
    q.delta = delta.empty() ? std::vector<int>{1} : parse_ints(delta);
    drg::validate_quadruple(q);
    return q;
  }
};

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string eigen_text(const drg::AlgebraicNumber& x) {
  return x.is_rational() ? drg::to_string(x.rational_value()) : x.decimal(9);
}

void print_spectrum(const drg::Spectrum& s, const drg::ChristoffelTable& t) {
  std::cout << pad("eigenvalue", 16) << pad("multiplicity", 16) << "minimal polynomial\n";
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    const drg::ChristoffelEntry& e = t.entries[i];
    const std::string m = e.rational ? drg::to_string(*e.rational) : e.weight.decimal(9);
    std::cout << pad(eigen_text(s.eigenvalues[i]), 16) << pad(m, 16)
              << drg::to_string(s.eigenvalues[i].minimal_polynomial()) << '\n';
  }
  std::cout << "vertices: " << drg::to_string(t.vertex_count) << '\n';
}

int cmd_spectrum(const std::string& text, bool as_json) {
  const drg::IntersectionArray a = drg::parse_array(text);
  const drg::ValidationReport v = drg::validate_array(a);
  if (!v.valid()) throw UsageError("invalid array: " + v.violations.front().message);
  const drg::TridiagonalSequence t = drg::tridiagonal_of(a);
  const drg::Spectrum s = drg::spectrum(t);
  const drg::ChristoffelTable table = drg::christoffel(t, s);
  if (as_json) {
    json j = drg::io::document("spectrum");
    j["array"] = drg::io::array_json(a);
    j["spectrum"] = drg::io::spectrum_json(s, table);
    print_json(j);
  } else {
    std::cout << a.str() << '\n';
    print_spectrum(s, table);
  }
  return kOk;
}

int cmd_analyze(const std::string& text, bool as_json) {
  const drg::IntersectionArray a = drg::parse_array(text);
  const drg::FeasibilityVerdict v = drg::feasibility(a);
  std::optional<drg::GraphicalDecomposition> dec;
  std::optional<drg::GuideData> guide;
  std::pair<int, int> ht{0, 0};
  if (v.combinatorial.valid() && v.structural_error.empty()) {
    ht = drg::head_tail(a);
    dec = drg::graphical_of(a);
    if (dec->sequence.g() >= 1) guide = drg::guide_points(dec->sequence);
  }
  if (as_json) {
    json j = drg::io::document("analyze");
    j["verdict"] = drg::io::verdict_json(v);
    if (dec) {
      j["head"] = ht.first;
      j["tail"] = ht.second;
      j["graphical_sequence"] = drg::io::sequence_json(dec->sequence);
      j["ell"] = dec->ell;
    }
    if (guide) j["guide"] = drg::io::guide_json(*guide);
    print_json(j);
    return kOk;
  }
  std::cout << "# " << drg::io::kFeasibilityNote << '\n' << a.str() << '\n';
  for (const drg::Violation& x : v.combinatorial.violations) {
    std::cout << "violation " << x.condition << (x.index >= 0 ? " at " + std::to_string(x.index) : "") << ": "
              << x.message << '\n';
  }
  if (dec) {
    std::cout << "head " << ht.first << ", tail " << ht.second << '\n';
    std::cout << "graphical sequence " << dec->sequence.str() << ", ell =";
    for (int l : dec->ell) std::cout << ' ' << l;
    std::cout << '\n';
  }
  if (guide) {
    for (const drg::GuidePoint& p : guide->points) {
      std::cout << "guide " << p.index << ": [" << p.left.decimal(6) << ", " << p.right.decimal(6) << "]\n";
    }
    std::cout << "right guide points unimodal: " << (guide->report.holds() ? "yes" : "no") << '\n';
  }
  if (v.spectrum && v.table) print_spectrum(*v.spectrum, *v.table);
  std::cout << "verdict: " << drg::to_string(v.status);
  if (!v.reason.empty()) std::cout << " (" << v.reason << ")";
  std::cout << '\n';
  return kOk;
}

int cmd_feasible(const drg::EnumerationTask& task, bool as_json) {
  const drg::EnumerationResult r = drg::enumerate_feasible(task);
  if (as_json) {
    json j = drg::io::document("feasible");
    j["note"] = drg::io::kFeasibilityNote;
    j["k"] = task.k;
    j["max_diameter"] = task.max_diameter;
    j["filters"] = {{"combinatorial", task.combinatorial},
                    {"integrality", task.integrality},
                    {"ac", task.ac},
                    {"ivanov", task.ivanov}};
    json survivors = json::array();
    for (const drg::FeasibilityVerdict& v : r.survivors) survivors.push_back(drg::io::verdict_json(v));
    j["survivors"] = survivors;
    j["rejections"] = r.rejections;
    j["candidates"] = r.candidates;
    j["nodes"] = r.nodes;
    print_json(j);
    return kOk;
  }
  std::cout << "# " << drg::io::kFeasibilityNote << '\n';
  for (const drg::FeasibilityVerdict& v : r.survivors) {
    std::cout << v.array.str() << "  n=" << drg::to_string(v.table->vertex_count) << '\n';
  }
  std::cout << "survivors: " << r.survivors.size() << ", candidates: " << r.candidates << ", nodes: " << r.nodes
            << '\n';
  for (const auto& [reason, n] : r.rejections) std::cout << "rejected " << reason << ": " << n << '\n';
  return kOk;
}

int cmd_intervals(const drg::Quadruple& q, const std::string& lo, const std::string& hi, bool as_json) {
  const drg::GuideData guide = drg::guide_points(q.g);
  const drg::BadRootSet bad = drg::bad_set(q);
  json j = drg::io::document("intervals");
  j["graphical_sequence"] = drg::io::sequence_json(q.g);
  j["ell"] = q.ell;
  j["L"] = q.L;
  j["delta"] = q.delta;
  j["guide"] = drg::io::guide_json(guide);
  j["bad_roots"] = drg::io::bad_set_json(bad);

  std::ostringstream text;
  text << "sequence " << q.g.str() << '\n';
  for (const drg::GuidePoint& p : guide.points) {
    text << "guide " << p.index << ": [" << p.left.decimal(6) << ", " << p.right.decimal(6) << "]\n";
  }
  text << "bad roots: " << bad.roots.size() << " (bound " << bad.bound << ")\n";

  bool failed = false;
  if (!lo.empty() || !hi.empty()) {
    if (lo.empty() || hi.empty()) throw UsageError("--lo and --hi go together");
    const drg::Classification c = drg::classify_interval(guide, drg::parse_rational(lo), drg::parse_rational(hi));
    json cj{{"well_placed", c.well_placed()}, {"violations", c.violations}};
    text << "[" << lo << ", " << hi << "]: ";
    if (c.well_placed()) {
      const drg::LenGap m = drg::len_gap(q, *c.interval);
      cj["interval"] = drg::io::interval_json(*c.interval, m);
      text << "well-placed a=" << c.interval->a << " b=" << c.interval->b << " c=" << c.interval->c
           << " d=" << c.interval->d << " Len=" << m.len << " Gap=" << m.gap << '\n';
    } else {
      text << "not well-placed (" << c.reason() << ")\n";
      failed = true;
    }
    j["classified"] = cj;
  }

  json cells = json::array();
  for (const drg::WellPlacedInterval& w : drg::well_placed_cells(guide)) {
    const drg::LenGap m = drg::len_gap(q, w);
    json cj = drg::io::interval_json(w, m);
    const drg::WellPlacedInterval clean = drg::avoid_bad_roots(guide, w, bad);
    cj["avoiding"] = {{"lo", drg::to_string(clean.lo)}, {"hi", drg::to_string(clean.hi)}};
    cells.push_back(cj);
    text << "cell [" << drg::to_decimal(w.lo, 6) << ", " << drg::to_decimal(w.hi, 6) << "] a=" << w.a
         << " b=" << w.b << " c=" << w.c << " d=" << w.d << " Len=" << m.len << " Gap=" << m.gap << '\n';
  }
  j["cells"] = cells;
  if (as_json) {
    print_json(j);
  } else {
    std::cout << text.str();
  }
  return failed ? kFailed : kOk;
}

int cmd_verify(const std::string& check, const drg::CheckOptions& opt, bool as_json) {
  const drg::CheckResult r = drg::run_check(check, opt);
  if (as_json) {
    json j = drg::io::document("verify");
    j["result"] = drg::io::check_json(r);
    j["seed"] = opt.seed;
    print_json(j);
  } else {
    std::cout << "seed " << opt.seed << '\n';
    std::cout << r.name << ": " << r.passed << '/' << r.total() << " passed";
    if (r.skipped > 0) std::cout << ", " << r.skipped << " not applicable";
    std::cout << '\n';
    for (const std::string& f : r.failures) std::cout << "  fail: " << f << '\n';
    std::cout << (r.ok() ? "PASS" : "FAIL") << '\n';
  }
  return r.ok() ? kOk : kFailed;
}

int cmd_upsilon(const drg::Rational& kappa, const drg::Rational& zeta, int max_degree, bool as_json) {
  const drg::UpsilonSup s = drg::upsilon_sup(kappa, zeta, max_degree);
  const drg::TauSweep sweep = drg::tau_bound_sweep(kappa, zeta, max_degree);
  if (as_json) {
    json j = drg::io::document("upsilon");
    j["kappa"] = drg::to_string(kappa);
    j["zeta"] = drg::to_string(zeta);
    j["max_degree"] = max_degree;
    j["sup"] = drg::io::upsilon_json(s);
    j["tau_sweep"] = {{"windows", sweep.windows_checked}, {"failures", sweep.failures}};
    print_json(j);
  } else {
    std::cout << "polynomials: " << s.polynomials << '\n';
    std::cout << "upsilon >= " << drg::to_string(s.value) << " (degrees up to " << max_degree << ")\n";
    std::cout << "witness " << drg::to_string(s.witness.poly) << " on [" << drg::to_string(s.witness.lo) << ", "
              << drg::to_string(s.witness.hi) << "] with " << s.witness.roots_inside << " roots\n";
    std::cout << "tau bound: " << sweep.windows_checked - sweep.failures << '/' << sweep.windows_checked
              << " windows\n";
  }
  return sweep.failures == 0 ? kOk : kFailed;
}

int cmd_order_st(const std::string& text, std::optional<long> s, std::optional<long> t, bool as_json) {
  if (s.has_value() != t.has_value()) throw UsageError("--s and --t go together");
  std::optional<std::pair<long, long>> st;
  if (s) st = std::make_pair(*s, *t);
  const drg::IntersectionArray a = drg::parse_array(text);
  const drg::OrderSTReport r = drg::order_st(a, st);
  if (as_json) {
    json j = drg::io::document("order-st");
    j["array"] = drg::io::array_json(a);
    j["report"] = drg::io::order_st_json(r);
    print_json(j);
  } else {
    std::cout << a.str() << " order (" << r.s << ", " << r.t << ")" << (r.inferred ? " inferred" : "") << '\n';
    std::cout << "smallest eigenvalue " << eigen_text(r.theta_min) << (r.bound_ok ? " >= " : " < ") << -r.t - 1
              << '\n';
    if (r.equality_forced) std::cout << "s > t: equality " << (r.equality_holds ? "holds" : "fails") << '\n';
    std::cout << (r.holds() ? "PASS" : "FAIL") << '\n';
  }
  return r.holds() ? kOk : kFailed;
}

int cmd_trace(const drg::Quadruple& q, int index, const std::string& hs, const std::string& theta_text,
              const std::string& lo, const std::string& hi, bool as_json) {
  const drg::Rational theta = drg::parse_rational(theta_text);
  const drg::Rational l = lo.empty() ? theta - drg::Rational(1, 100) : drg::parse_rational(lo);
  const drg::Rational h = hi.empty() ? theta + drg::Rational(1, 100) : drg::parse_rational(hi);
  const drg::Classification c = drg::classify_interval(q.g, l, h);
  if (!c.well_placed()) throw UsageError("[" + drg::to_string(l) + ", " + drg::to_string(h) + "] is not well-placed (" +
                                         c.reason() + ")");
  if (index < 1 || index > q.g.g()) throw UsageError("--index must name an interior triple");
  const std::vector<long> values = parse_longs(hs);
  const auto rows = drg::sum_trace(q, index, values, *c.interval, drg::AlgebraicNumber(theta));
  if (as_json) {
    json j = drg::io::document("trace");
    j["theta"] = drg::to_string(theta);
    j["interval"] = drg::io::interval_json(*c.interval, drg::len_gap(q, *c.interval));
    j["index"] = index;
    j["rows"] = drg::io::trace_json(rows);
    print_json(j);
  } else {
    std::cout << drg::trace_csv(rows);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectral feasibility tools for distance-regular graph intersection arrays"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");
  std::function<int()> action;

  std::string array_text;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and multiplicities of an array");
  spectrum->add_option("--array", array_text, "intersection array")->required();
  spectrum->add_flag("--json", as_json);
  spectrum->callback([&] { action = [&] { return cmd_spectrum(array_text, as_json); }; });

  auto* analyze = app.add_subcommand("analyze", "full report for one array");
  analyze->add_option("--array", array_text, "intersection array")->required();
  analyze->add_flag("--json", as_json);
  analyze->callback([&] { action = [&] { return cmd_analyze(array_text, as_json); }; });

  drg::EnumerationTask task;
  bool no_integrality = false, no_ac = false;
  auto* feasible = app.add_subcommand("feasible", "enumerate feasible arrays of one valency");
  feasible->add_option("--k", task.k, "valency (>= 3)")->required();
  feasible->add_option("--max-diameter", task.max_diameter, "largest diameter")->required();
  feasible->add_flag("--no-integrality", no_integrality, "keep arrays with non-integral multiplicities");
  feasible->add_flag("--no-ac", no_ac, "keep arrays whose conjugate eigenvalues disagree");
  feasible->add_flag("--ivanov", task.ivanov, "drop arrays with D > 4^k h");
  feasible->add_option("--node-limit", task.node_limit, "abort after this many search nodes");
  feasible->add_flag("--json", as_json);
  feasible->callback([&] {
    action = [&] {
      task.integrality = !no_integrality;
      task.ac = !no_ac;
      return cmd_feasible(task, as_json);
    };
  });

  QuadrupleInput quad;
  std::string lo, hi;
  auto* intervals = app.add_subcommand("intervals", "guide points, well-placed intervals and bad roots");
  quad.add(intervals);
  intervals->add_option("--lo", lo, "classify [lo, hi]");
  intervals->add_option("--hi", hi, "classify [lo, hi]");
  intervals->add_flag("--json", as_json);
  intervals->callback([&] { action = [&] { return cmd_intervals(quad.build(), lo, hi, as_json); }; });

  std::string check;
  drg::CheckOptions opt;
  std::string kappa_text = "2", zeta_text = "1/4";
  auto* verify = app.add_subcommand("verify", "run a verification batch");
  verify->add_option("--check", check, "one of: ivanov, ft-bound, discriminant, interlacing, localization, neighbour, runs, structure")
      ->required();
  verify->add_option("--k", opt.k, "largest valency of the enumerated corpus")->capture_default_str();
  verify->add_option("--max-diameter", opt.max_diameter, "largest diameter of the enumerated corpus")
      ->capture_default_str();
  verify->add_option("--seed", opt.seed, "random seed")->capture_default_str();
  verify->add_option("--trials", opt.trials, "random instances")->capture_default_str();
  verify->add_option("--kappa", kappa_text, "root bound for P_kappa")->capture_default_str();
  verify->add_option("--zeta", zeta_text, "window length")->capture_default_str();
  verify->add_option("--max-degree", opt.max_degree, "largest polynomial degree")->capture_default_str();
  verify->add_flag("--json", as_json);
  verify->callback([&] {
    action = [&] {
      const auto& names = drg::check_names();
      if (std::find(names.begin(), names.end(), check) == names.end()) throw UsageError("unknown check '" + check + "'");
      opt.kappa = drg::parse_rational(kappa_text);
      opt.zeta = drg::parse_rational(zeta_text);
      return cmd_verify(check, opt, as_json);
    };
  });

  int max_degree = 8;
  auto* upsilon = app.add_subcommand("upsilon", "root concentration of P_kappa members");
  upsilon->add_option("--kappa", kappa_text, "root bound")->capture_default_str();
  upsilon->add_option("--zeta", zeta_text, "window length")->capture_default_str();
  upsilon->add_option("--max-degree", max_degree, "largest degree")->capture_default_str();
  upsilon->add_flag("--json", as_json);
  upsilon->callback([&] {
    action = [&] {
      return cmd_upsilon(drg::parse_rational(kappa_text), drg::parse_rational(zeta_text), max_degree, as_json);
    };
  });

  std::optional<long> s_opt, t_opt;
  auto* order = app.add_subcommand("order-st", "smallest-eigenvalue bound for graphs of order (s,t)");
  order->add_option("--array", array_text, "intersection array")->required();
  order->add_option("--s", s_opt, "clique size minus one");
  order->add_option("--t", t_opt, "cliques per vertex minus one");
  order->add_flag("--json", as_json);
  order->callback([&] { action = [&] { return cmd_order_st(array_text, s_opt, t_opt, as_json); }; });

  QuadrupleInput tquad;
  int index = 1;
  std::string hs = "5,10,20,40", theta_text;
  auto* trace = app.add_subcommand("trace", "head/gap/tail sums while one run length grows (CSV or JSON)");
  trace->set_help_flag("--help", "Print this help message and exit");
  tquad.add(trace);
  trace->add_option("--index", index, "triple whose run length varies")->capture_default_str();
  trace->add_option("--h", hs, "run lengths to try")->capture_default_str();
  trace->add_option("--theta", theta_text, "evaluation point")->required();
  trace->add_option("--lo", lo, "well-placed interval containing theta (default theta -+ 1/100)");
  trace->add_option("--hi", hi);
  trace->add_flag("--json", as_json);
  trace->callback([&] { action = [&] { return cmd_trace(tquad.build(), index, hs, theta_text, lo, hi, as_json); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const drg::NotOfOrder& e) {
    std::cerr << "not of order (s,t): " << e.what() << '\n';
  } catch (const drg::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const drg::NoInterval& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const drg::NodeLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}
