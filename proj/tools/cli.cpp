// Copyright 2026 The sscover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sscover/cli.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sscover/generators.hpp"
#include "sscover/greedy.hpp"
#include "sscover/harness.hpp"
#include "sscover/instance.hpp"
#include "sscover/io.hpp"
#include "sscover/oracle.hpp"
#include "sscover/reduction.hpp"

namespace sscover {
namespace {

using nlohmann::json;

struct Options {
  std::string file;
  std::uint64_t seed = 0;
  std::string trace_out;
  bool no_reduce = false;
  std::string out;
  std::string edges_out;
  std::uint64_t cap = OracleCaps{}.realizations;
  std::uint64_t dp_cap = OracleCaps{}.dp_states;
  std::size_t trials = 1000;
  unsigned threads = 1;
  std::string csv_out;

  std::string family = "random";
  std::size_t items = 3;
  std::size_t elements = 3;
  std::size_t max_support = 2;
  std::string cost_lo = "1";
  std::string cost_hi = "4";
  std::string mode = "perfect";
  std::size_t granularity = 4;
  std::size_t n = 3;
  std::string epsilon = "1/10";
  std::size_t ground_size = 0;
  std::vector<std::string> sets;
  std::vector<std::string> costs;
};

void Emit(std::ostream& out, const json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
  }
}

ElementSubset ParseSet(const std::string& text) {
  ElementSubset s;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    const unsigned long v = std::stoul(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad element \"" + tok + "\"");
    s.insert(v);
  }
  return s;
}

int Validate(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o.file);
  out << "ok: " << inst.items.size() << " item(s), ground size "
      << inst.ground_size << ", "
      << (is_perfect_coverage(inst) ? "perfect" : "imperfect")
      << " coverage\n";
  return kExitOk;
}

int Marginals(const Options& o, std::ostream& out) {
  Emit(out, marginals_to_json(marginals(load_instance(o.file))), "");
  return kExitOk;
}

int Run(const Options& o, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(o.file);
  const Realization real = sample_realization(inst, o.seed);
  const bool perfect = is_perfect_coverage(inst);
  const bool reduce = !perfect && !o.no_reduce;
  json result = {{"seed", o.seed}, {"reduced", reduce}};
  json realized = json::array();
  for (const ElementSubset& s : real.states) realized.push_back(s.to_vector());
  result["realization"] = realized;

  GreedyTrace trace;
  if (reduce) {
    const ReducedInstance reduced = reduce_instance(inst);
    ImperfectSolution sol = solve_imperfect(reduced, real);
    result["edges"] = edge_map_to_json(reduced.graph)["edges"];
    result["valid_cover"] = is_valid_cover(inst, sol.chosen, real);
    trace = std::move(sol.trace);
  } else {
    try {
      trace = run_greedy(inst, real);
    } catch (const StuckResidual& e) {
      err << e.what() << "\n";
      Emit(err, trace_to_json(e.partial_trace()), "");
      return perfect ? kExitPropertyViolation : kExitInvalidInput;
    }
    result["valid_cover"] = is_valid_cover(inst, trace.evaluated, real);
  }
  result["chosen"] = trace.evaluated.to_vector();
  result["cost"] = trace.total_cost.str();
  if (o.trace_out.empty()) {
    result["trace"] = trace_to_json(trace);
  } else {
    Emit(out, trace_to_json(trace), o.trace_out);
  }
  Emit(out, result, "");
  return kExitOk;
}

int Reduce(const Options& o, std::ostream& out) {
  const ReducedInstance reduced = reduce_instance(load_instance(o.file));
  Emit(out, instance_to_json(reduced.instance), o.out);
  if (!o.edges_out.empty()) {
    Emit(out, edge_map_to_json(reduced.graph), o.edges_out);
  }
  return kExitOk;
}

int Compare(const Options& o, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(o.file);
  const OracleCaps caps{o.cap, o.dp_cap};
  const OracleReport report = is_perfect_coverage(inst)
                                  ? exact_greedy_report(inst, caps)
                                  : exact_imperfect_report(inst, caps);
  Emit(out, report_to_json(report), "");
  if (!report.identity_holds()) {
    err << "price identity violated: " << report.cost_by_items
        << " != " << report.cost_by_prices << "\n";
  }
  if (!report.bound_holds()) {
    err << "approximation bound violated: " << report.greedy_expected_cost
        << " > " << report.bound << " * " << report.optimal_expected_cost
        << "\n";
  }
  return report.identity_holds() && report.bound_holds()
             ? kExitOk
             : kExitPropertyViolation;
}

int MonteCarlo(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o.file);
  const TrialStats stats =
      run_trials(inst, o.trials, o.seed, TrialOptions{o.threads, o.no_reduce});
  if (!o.csv_out.empty()) write_text(o.csv_out, trials_to_csv(stats));
  Emit(out,
       {{"n_trials", stats.n_trials},
        {"master_seed", stats.master_seed},
        {"mean_cost", stats.mean_cost},
        {"sample_stddev", stats.sample_stddev},
        {"ci95_halfwidth", stats.ci95_halfwidth},
        {"min_cost", stats.min_cost},
        {"max_cost", stats.max_cost}},
       "");
  return kExitOk;
}

int Generate(const Options& o, std::ostream& out) {
  Instance inst;
  if (o.family == "random") {
    GenParams p;
    p.n_items = o.items;
    p.n_elements = o.elements;
    p.max_support = o.max_support;
    p.cost_lo = Rational::Parse(o.cost_lo);
    p.cost_hi = Rational::Parse(o.cost_hi);
    if (o.mode != "perfect" && o.mode != "imperfect") {
      throw std::invalid_argument("--mode must be perfect or imperfect");
    }
    p.coverage_mode = o.mode == "perfect" ? CoverageMode::kPerfect
                                          : CoverageMode::kImperfect;
    p.prob_granularity = o.granularity;
    p.seed = o.seed;
    inst = random_instance(p);
  } else if (o.family == "tight") {
    inst = tight_instance(o.n, Rational::Parse(o.epsilon));
  } else if (o.family == "pointmass") {
    std::vector<ElementSubset> sets;
    std::vector<Rational> costs;
    for (const std::string& s : o.sets) sets.push_back(ParseSet(s));
    for (const std::string& c : o.costs) costs.push_back(Rational::Parse(c));
    inst = point_mass_embedding(o.ground_size, sets, costs);
  } else {
    throw std::invalid_argument("unknown family \"" + o.family + "\"");
  }
  Emit(out, instance_to_json(inst), o.out);
  return kExitOk;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out,
                 std::ostream& err) {
  CLI::App app{"Adaptive greedy for stochastic set cover, with exact oracles"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("file", o.file)->required();

  auto* marg = app.add_subcommand("marginals", "Print the marginal table");
  marg->add_option("file", o.file)->required();

  auto* run = app.add_subcommand("run", "Run greedy on one sampled realization");
  run->add_option("file", o.file)->required();
  run->add_option("--seed", o.seed, "Realization seed")->required();
  run->add_option("--trace", o.trace_out, "Write the trace JSON here");
  run->add_flag("--no-reduce", o.no_reduce,
                "Run greedy directly on imperfect instances");

  auto* reduce = app.add_subcommand("reduce", "Reduce to perfect coverage");
  reduce->add_option("file", o.file)->required();
  reduce->add_option("--out", o.out, "Reduced instance (default: stdout)");
  reduce->add_option("--edges", o.edges_out, "Edge map output");

  auto* compare =
      app.add_subcommand("compare", "Exact greedy vs optimal, with checks");
  compare->add_option("file", o.file)->required();
  compare->add_option("--cap", o.cap, "Realization enumeration cap");
  compare->add_option("--dp-cap", o.dp_cap, "Expectimin state cap");

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of greedy cost");
  mc->add_option("file", o.file)->required();
  mc->add_option("--trials", o.trials)->required()->check(CLI::PositiveNumber);
  mc->add_option("--seed", o.seed, "Master seed")->required();
  mc->add_option("--csv", o.csv_out, "Per-trial CSV output");
  mc->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  mc->add_flag("--no-reduce", o.no_reduce);

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", o.family)
      ->check(CLI::IsMember({"random", "tight", "pointmass"}));
  gen->add_option("--out", o.out, "Output file (default: stdout)");
  gen->add_option("--items", o.items);
  gen->add_option("--elements", o.elements);
  gen->add_option("--max-support", o.max_support);
  gen->add_option("--cost-lo", o.cost_lo);
  gen->add_option("--cost-hi", o.cost_hi);
  gen->add_option("--mode", o.mode);
  gen->add_option("--granularity", o.granularity);
  gen->add_option("--seed", o.seed);
  gen->add_option("--n", o.n, "Tight family size");
  gen->add_option("--epsilon", o.epsilon, "Tight family epsilon");
  gen->add_option("--ground-size", o.ground_size);
  gen->add_option("--set", o.sets, "Comma-separated elements (repeatable)");
  gen->add_option("--cost", o.costs, "Set cost (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*validate) return Validate(o, out);
    if (*marg) return Marginals(o, out);
    if (*run) return Run(o, out, err);
    if (*reduce) return Reduce(o, out);
    if (*compare) return Compare(o, out, err);
    if (*mc) return MonteCarlo(o, out);
    if (*gen) return Generate(o, out);
  } catch (const ParseError& e) {
    for (const std::string& m : e.messages()) err << o.file << ":" << m << "\n";
    return kExitInvalidInput;
  } catch (const TooLarge& e) {
    err << "too large: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitPropertyViolation;
  } catch (const StuckResidual& e) {
    err << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace sscover
