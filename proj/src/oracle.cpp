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

#include "sscover/oracle.hpp"

#include <random>
#include <string>
#include <unordered_map>

#include "sscover/greedy.hpp"

namespace sscover {
namespace {

struct PolicyState {
  std::uint64_t remaining = 0;
  ElementSubset uncovered;

  friend bool operator==(const PolicyState&, const PolicyState&) = default;
};

struct PolicyStateHash {
  std::size_t operator()(const PolicyState& s) const {
    return static_cast<std::size_t>(splitmix64(s.remaining)) ^ s.uncovered.hash();
  }
};

class ExpectiminSolver {
 public:
  ExpectiminSolver(const Instance& inst, const DpOptions& options)
      : inst_(inst), q_(marginals(inst)), options_(options),
        rng_(options.eviction_seed) {}

  Rational Solve() {
    // CheckDpCap keeps the item count below 64.
    const std::uint64_t all = (std::uint64_t{1} << inst_.items.size()) - 1;
    return Value(PolicyState{all, ElementSubset::Full(inst_.ground_size)});
  }

 private:
  Rational Value(const PolicyState& s) {
    if (s.uncovered.empty()) return Rational();
    if (const auto it = memo_.find(s); it != memo_.end()) return it->second;

    std::optional<Rational> best;
    for (ItemId f = 0; f < inst_.items.size(); ++f) {
      if (((s.remaining >> f) & 1U) == 0) continue;
      if (q_.mass(f, s.uncovered).is_zero()) continue;
      Rational value = inst_.items[f].cost;
      const std::uint64_t rest = s.remaining & ~(std::uint64_t{1} << f);
      for (const StateOutcome& out : inst_.items[f].dist.support()) {
        value += out.prob * Value(PolicyState{rest, s.uncovered - out.state});
      }
      if (!best || value < *best) best = std::move(value);
    }
    if (!best) {
      throw Infeasible("no item can cover the " +
                       std::to_string(s.uncovered.count()) +
                       " remaining element(s)");
    }
    if (options_.memo_limit != 0 && memo_.size() >= options_.memo_limit) {
      Evict();
    }
    memo_.emplace(s, *best);
    return *best;
  }

  void Evict() {
    for (auto it = memo_.begin(); it != memo_.end();) {
      it = (rng_() & 1U) != 0 ? memo_.erase(it) : std::next(it);
    }
  }

  const Instance& inst_;
  MarginalTable q_;
  DpOptions options_;
  std::mt19937_64 rng_;
  std::unordered_map<PolicyState, Rational, PolicyStateHash> memo_;
};

void CheckDpCap(std::size_t items, std::size_t elements, std::uint64_t cap) {
  const std::size_t bits = items + elements;
  if (bits >= 64 || (std::uint64_t{1} << bits) > cap) {
    throw TooLarge("2^" + std::to_string(bits) +
                   " policy states exceed cap of " + std::to_string(cap));
  }
}

}  // namespace

Rational harmonic(std::size_t n) {
  Rational h;
  for (std::size_t k = 1; k <= n; ++k) {
    h += Rational(1, static_cast<std::int64_t>(k));
  }
  return h;
}

Rational optimal_adaptive_cost(const Instance& inst, std::uint64_t dp_cap,
                               const DpOptions& options) {
  CheckDpCap(inst.items.size(), inst.ground_size, dp_cap);
  if (!is_perfect_coverage(inst)) {
    throw std::invalid_argument(
        "optimal_adaptive_cost requires perfect coverage");
  }
  return ExpectiminSolver(inst, options).Solve();
}

namespace {

OracleReport Aggregate(const Instance& source, std::size_t ground_size,
                       std::uint64_t realization_cap,
                       const std::function<GreedyTrace(const Realization&)>&
                           run) {
  OracleReport report;
  report.ground_size = ground_size;
  report.eval_probs.assign(source.items.size(), Rational());
  report.price_expectations.assign(ground_size, Rational());
  for_each_realization(
      source, realization_cap, [&](const Realization& real, const Rational& p) {
        const GreedyTrace trace = run(real);
        report.greedy_expected_cost += p * trace.total_cost;
        trace.evaluated.for_each(
            [&](std::size_t f) { report.eval_probs[f] += p; });
        for (std::size_t e = 0; e < ground_size; ++e) {
          if (!trace.prices[e].is_zero()) {
            report.price_expectations[e] += p * trace.prices[e];
          }
        }
      });
  for (std::size_t f = 0; f < source.items.size(); ++f) {
    report.cost_by_items += report.eval_probs[f] * source.items[f].cost;
  }
  for (const Rational& price : report.price_expectations) {
    report.cost_by_prices += price;
  }
  report.bound = harmonic(ground_size);
  return report;
}

void Finish(OracleReport& report) {
  if (report.optimal_expected_cost.sign() > 0) {
    report.ratio = report.greedy_expected_cost / report.optimal_expected_cost;
  }
}

}  // namespace

OracleReport exact_greedy_report(const Instance& inst, const OracleCaps& caps) {
  if (!is_perfect_coverage(inst)) {
    throw std::invalid_argument(
        "exact_greedy_report requires perfect coverage");
  }
  CheckDpCap(inst.items.size(), inst.ground_size, caps.dp_states);
  const GreedyModel model = greedy_model(inst);
  OracleReport report = Aggregate(
      inst, inst.ground_size, caps.realizations, [&](const Realization& real) {
        return run_greedy(model,
                          [&](ItemId item) { return real.states[item]; });
      });
  report.optimal_expected_cost = optimal_adaptive_cost(inst, caps.dp_states);
  Finish(report);
  return report;
}

OracleReport exact_imperfect_report(const Instance& inst,
                                    const OracleCaps& caps) {
  const ReducedInstance reduced = reduce_instance(inst);
  CheckDpCap(reduced.instance.items.size(), reduced.instance.ground_size,
             caps.dp_states);
  OracleReport report =
      Aggregate(inst, reduced.graph.edge_count(), caps.realizations,
                [&](const Realization& real) {
                  return solve_imperfect(reduced, real).trace;
                });
  report.reduced = true;
  report.optimal_expected_cost =
      optimal_adaptive_cost(reduced.instance, caps.dp_states);
  Finish(report);
  return report;
}

}  // namespace sscover
