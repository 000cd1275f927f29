#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "maip/algebra.hpp"
#include "maip/diagram.hpp"
#include "maip/errors.hpp"
#include "maip/homology.hpp"
#include "maip/invariant.hpp"
#include "maip/moves.hpp"
#include "maip/tangle_ops.hpp"

namespace maip::cli {

namespace {

using nlohmann::json;

// Thrown for bad flag combinations; reported like any other input error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::set<SymbolId> symbols_of(const LaurentPoly& p) {
  std::set<SymbolId> out;
  for (const auto& [mono, coeff] : p.terms()) {
    for (const auto& [sym, k] : mono.exponent.coeffs()) out.insert(sym);
  }
  return out;
}

// "c1=0,c2=3" or "all=0", possibly spread over several --numeric flags.
std::map<SymbolId, std::int64_t> numeric_assignment(const std::vector<std::string>& specs, const LaurentPoly& p) {
  std::map<SymbolId, std::int64_t> values;
  std::optional<std::int64_t> all;
  for (const auto& spec : specs) {
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ',');) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("--numeric expects c<i>=<int>, got '" + item + "'");
      std::string key = item.substr(0, eq);
      std::int64_t value = 0;
      try {
        std::size_t used = 0;
        value = std::stoll(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
      } catch (const std::logic_error&) {
        throw UsageError("--numeric value for " + key + " is not an integer");
      }
      if (key == "all") {
        all = value;
      } else if (key.size() > 1 && key[0] == 'c') {
        int id = 0;
        try {
          id = std::stoi(key.substr(1));
        } catch (const std::logic_error&) {
          throw UsageError("--numeric: bad symbol '" + key + "'");
        }
        if (id < 1) throw UsageError("--numeric: bad symbol '" + key + "'");
        values[id] = value;
      } else {
        throw UsageError("--numeric: bad symbol '" + key + "'");
      }
    }
  }
  if (all) {
    for (SymbolId s : symbols_of(p)) values.emplace(s, *all);
  }
  return values;
}

std::string slot_list(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

json poly_json(const LaurentPoly& p) { return json{{"rendered", render(p)}, {"terms", to_json(p)}}; }

int report_expect(const std::optional<std::string>& expect, const LaurentPoly& got, std::ostream& out) {
  if (!expect) return kOk;
  LaurentPoly want = parse_polynomial(*expect);
  if (want == got) {
    out << "expect: match\n";
    return kOk;
  }
  out << "expect: MISMATCH (expected " << render(want) << ")\n";
  return kPropertyFailure;
}

// --- check suites -------------------------------------------------------------

struct CheckConfig {
  std::string what;
  std::optional<std::string> file;
  bool random = false;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t moves = 50;
  int components = 4;
  int crossings = 12;
};

struct TrialOutcome {
  bool ok = true;
  std::string detail;  // printed on failure
};

std::string dump(const TangleDiagram& d) {
  std::string s = serialize(d);
  std::string out;
  std::stringstream ss(s);
  for (std::string line; std::getline(ss, line);) out += "    " + line + "\n";
  return out;
}

TrialOutcome trial_moves(const TangleDiagram& d, std::uint64_t seed, std::size_t n_moves) {
  LaurentPoly before = maip(d);
  WalkResult walk = random_walk(d, n_moves, seed);
  TrialOutcome t;
  LaurentPoly after = maip(walk.diagram);
  t.ok = after == before && is_valid(walk.diagram);
  if (!t.ok) {
    t.detail = "  before: " + render(before) + "\n  after:  " + render(after) + "\n  diagram:\n" + dump(d) +
               "  moves:\n";
    for (const auto& line : walk.log()) t.detail += "    " + line + "\n";
  }
  return t;
}

TrialOutcome trial_prop2(const TangleDiagram& d) {
  Prop2Report r = check_prop2(d);
  TrialOutcome t;
  t.ok = r.passed();
  if (!t.ok) {
    for (const auto& f : r.failures()) {
      t.detail += "  crossing " + std::to_string(f.id) + ": W=" + f.weight.to_string() + " W^h=" +
                  f.homological.to_string() + " delta=" + std::to_string(f.delta) +
                  (f.early_under ? " (early under)" : "") + "\n";
    }
    t.detail += "  diagram:\n" + dump(d);
  }
  return t;
}

TrialOutcome trial_corollary(const TangleDiagram& d) {
  LaurentPoly direct = maip(d);
  LaurentPoly via = maip_via_homology(d);
  TrialOutcome t;
  t.ok = direct == via;
  if (!t.ok) t.detail = "  maip:      " + render(direct) + "\n  homology:  " + render(via) + "\n  diagram:\n" + dump(d);
  return t;
}

TrialOutcome trial_compose(const TangleDiagram& upper, const TangleDiagram& lower) {
  TangleDiagram composite = compose(upper, lower);
  LaurentPoly direct = maip(composite);
  LaurentPoly predicted = predict_composed(structured_maip(upper), structured_maip(lower),
                                           plan_composition(upper, lower));
  TrialOutcome t;
  t.ok = direct == predicted && is_valid(composite);
  if (!t.ok) {
    t.detail = "  direct:    " + render(direct) + "\n  predicted: " + render(predicted) + "\n  upper:\n" +
               dump(upper) + "  lower:\n" + dump(lower);
  }
  return t;
}

TrialOutcome trial_vassiliev(const TangleDiagram& d) {
  LaurentPoly v = vassiliev_eval(d);
  TrialOutcome t;
  // Order one: zero from two double points on, nonzero allowed at one.
  t.ok = d.num_singular() < 2 || v.is_zero();
  if (!t.ok) t.detail = "  value: " + render(v) + "\n  diagram:\n" + dump(d);
  return t;
}

int run_check(const CheckConfig& cfg, std::ostream& out) {
  static const std::set<std::string> kinds{"moves", "prop2", "corollary", "compose", "vassiliev"};
  if (!kinds.count(cfg.what)) throw UsageError("--what must be one of moves, prop2, corollary, compose, vassiliev");
  if (!cfg.file && !cfg.random) throw UsageError("check needs a diagram file or --random");
  if (cfg.file && cfg.random) throw UsageError("check takes either a diagram file or --random, not both");
  if (cfg.trials == 0) throw UsageError("--trials must be positive");

  std::optional<TangleDiagram> given;
  if (cfg.file) given = load_diagram(*cfg.file);
  // A fixed diagram has one outcome for these suites.
  const bool single = given && (cfg.what == "prop2" || cfg.what == "corollary" || cfg.what == "vassiliev");
  const std::size_t trials = single ? 1 : cfg.trials;

  std::size_t passed = 0;
  for (std::size_t k = 0; k < trials; ++k) {
    const std::uint64_t s = trial_seed(cfg.seed, k);
    TrialOutcome t;
    if (cfg.what == "moves") {
      TangleDiagram d = given ? *given : random_trial_diagram(s, cfg.components, cfg.crossings);
      t = trial_moves(d, s ^ 0x5bd1e995ULL, cfg.moves);
    } else if (cfg.what == "prop2") {
      t = trial_prop2(given ? *given : random_trial_diagram(s, cfg.components, cfg.crossings));
    } else if (cfg.what == "corollary") {
      t = trial_corollary(given ? *given : random_trial_diagram(s, cfg.components, cfg.crossings));
    } else if (cfg.what == "compose") {
      if (given) {
        std::vector<SlotEnd> top;
        for (SlotEnd e : boundary_pattern(*given).bottom) top.push_back(e == SlotEnd::Start ? SlotEnd::End : SlotEnd::Start);
        t = trial_compose(*given, random_diagram_with_top(s, top, 1, 1, cfg.crossings / 2));
      } else {
        auto [upper, lower] = random_composable_pair(s);
        t = trial_compose(upper, lower);
      }
    } else {
      t = trial_vassiliev(given ? *given : random_trial_diagram(s, cfg.components, cfg.crossings, 2));
    }
    if (t.ok) {
      ++passed;
    } else {
      out << "FAIL trial=" << k << " seed=" << s << "\n" << t.detail;
    }
  }
  out << "check " << cfg.what << ": " << passed << "/" << trials << " passed (seed " << cfg.seed << ")\n";
  return passed == trials ? kOk : kPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-variable affine index polynomial of virtual tangles", "maip"};
  app.require_subcommand(1);

  bool json_out = false;
  std::vector<std::string> numeric;
  bool collapse = false;
  std::optional<std::string> expect;
  std::string file_a;
  std::string file_b;

  auto* compute = app.add_subcommand("compute", "Print the polynomial of a diagram");
  compute->add_option("file", file_a, "Diagram file (text or JSON)")->required();
  compute->add_flag("--json", json_out, "JSON output");
  compute->add_option("--numeric", numeric, "Substitute labels: c1=0,c2=3 or all=0");
  compute->add_flag("--collapse", collapse, "Merge all variables into t1 (needs --numeric)");
  compute->add_option("--expect", expect, "Exit 1 unless the result equals this polynomial");

  auto* resolve = app.add_subcommand("resolve", "Evaluate a diagram with double points");
  resolve->add_option("file", file_a, "Diagram file")->required();
  resolve->add_flag("--json", json_out, "JSON output");
  resolve->add_option("--expect", expect, "Exit 1 unless the result equals this polynomial");

  auto* tensor_cmd = app.add_subcommand("tensor", "Place the second tangle to the right of the first");
  tensor_cmd->add_option("left", file_a, "Left tangle")->required();
  tensor_cmd->add_option("right", file_b, "Right tangle")->required();
  tensor_cmd->add_flag("--json", json_out, "JSON output");

  auto* compose_cmd = app.add_subcommand("compose", "Stack the first tangle above the second");
  compose_cmd->add_option("upper", file_a, "Upper tangle")->required();
  compose_cmd->add_option("lower", file_b, "Lower tangle")->required();
  compose_cmd->add_flag("--json", json_out, "JSON output");

  CheckConfig cfg;
  std::string check_file;
  auto* check = app.add_subcommand("check", "Run a property suite");
  check->add_option("file", check_file, "Diagram file (instead of --random)");
  check->add_option("--what", cfg.what, "moves | prop2 | corollary | compose | vassiliev")->required();
  check->add_flag("--random", cfg.random, "Use random diagrams");
  check->add_option("--trials", cfg.trials, "Number of trials");
  check->add_option("--seed", cfg.seed, "Base seed");
  check->add_option("--moves", cfg.moves, "Random walk length for --what moves");
  check->add_option("--components", cfg.components, "Maximum components of random diagrams");
  check->add_option("--crossings", cfg.crossings, "Maximum crossings of random diagrams");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (compute->parsed()) {
      TangleDiagram d = load_diagram(file_a);
      if (collapse && numeric.empty()) throw UsageError("--collapse needs --numeric (for example --numeric all=0)");
      LaurentPoly p = maip(d);
      if (!numeric.empty()) p = substitute_symbols(p, numeric_assignment(numeric, p));
      if (collapse) p = collapse_variables(p);
      if (json_out) {
        json j = poly_json(p);
        j["delta"] = propagate_labels(d).delta;
        out << j.dump(2) << "\n";
      } else {
        out << render(p) << "\n";
      }
      return report_expect(expect, p, out);
    }
    if (resolve->parsed()) {
      TangleDiagram d = load_diagram(file_a);
      if (!d.has_singular()) throw Error(ErrorCode::NoSingular, "diagram has no singular crossings");
      LaurentPoly p = vassiliev_eval(d);
      if (json_out) {
        json j = poly_json(p);
        j["resolutions"] = resolve_singular(d).size();
        out << j.dump(2) << "\n";
      } else {
        out << render(p) << "\n";
      }
      return report_expect(expect, p, out);
    }
    if (tensor_cmd->parsed()) {
      TangleDiagram a = load_diagram(file_a);
      TangleDiagram b = load_diagram(file_b);
      TangleDiagram t = tensor(a, b);
      LaurentPoly p = maip(t);
      LaurentPoly sum = maip(a) + shift_indices(maip(b), static_cast<int>(a.num_components()));
      const bool agree = p == sum;
      if (json_out) {
        out << json{{"diagram", diagram_to_json(t)}, {"maip", poly_json(p)}, {"additivity", agree}}.dump(2) << "\n";
      } else {
        out << serialize(t) << "maip: " << render(p) << "\n"
            << "additivity: " << (agree ? "agree" : "DISAGREE") << "\n";
      }
      return agree ? kOk : kPropertyFailure;
    }
    if (compose_cmd->parsed()) {
      TangleDiagram upper = load_diagram(file_a);
      TangleDiagram lower = load_diagram(file_b);
      GluePlan plan = plan_composition(upper, lower);
      TangleDiagram c = compose(upper, lower);
      LaurentPoly p = maip(c);
      LaurentPoly predicted = predict_composed(structured_maip(upper), structured_maip(lower), plan);
      const bool agree = p == predicted;
      if (json_out) {
        out << json{{"diagram", diagram_to_json(c)},
                    {"maip", poly_json(p)},
                    {"predicted", poly_json(predicted)},
                    {"cross_check", agree}}
                   .dump(2)
            << "\n";
      } else {
        out << serialize(c) << "maip: " << render(p) << "\n"
            << "delta: " << slot_list(propagate_labels(c).delta) << "\n"
            << "predicted: " << render(predicted) << "\n"
            << "cross-check: " << (agree ? "agree" : "DISAGREE") << "\n";
      }
      return agree ? kOk : kPropertyFailure;
    }
    if (check->parsed()) {
      if (!check_file.empty()) cfg.file = check_file;
      return run_check(cfg, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace maip::cli
