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

#include "sscover/greedy.hpp"

#include <utility>

namespace sscover {

GreedyModel greedy_model(const Instance& inst) {
  return GreedyModel{inst.ground_size, inst.costs(), marginals(inst)};
}

ResidualSystem ResidualSystem::Initial(std::size_t item_count,
                                       std::size_t ground_size) {
  return ResidualSystem{ItemSet::Full(item_count),
                        ElementSubset::Full(ground_size), 1};
}

StuckResidual::StuckResidual(GreedyTrace partial)
    : std::runtime_error("greedy stuck: " +
                         std::to_string(partial.uncovered.count()) +
                         " element(s) uncovered and no item has positive "
                         "residual mass"),
      partial_(std::move(partial)) {}

std::optional<Rational> unitprice(ItemId item, const ResidualSystem& residual,
                                  const MarginalTable& q,
                                  std::span<const Rational> costs) {
  const Rational mass = q.mass(item, residual.uncovered);
  if (mass.is_zero()) return std::nullopt;
  return costs[item] / mass;
}

std::optional<ItemId> select_next(const ResidualSystem& residual,
                                  const MarginalTable& q,
                                  std::span<const Rational> costs) {
  std::optional<ItemId> best;
  Rational best_price;
  residual.remaining_items.for_each([&](std::size_t item) {
    const auto price = unitprice(item, residual, q, costs);
    if (!price) return;
    // Ascending iteration, so strict comparison keeps the smallest id on ties.
    if (!best || *price < best_price) {
      best = item;
      best_price = *price;
    }
  });
  return best;
}

GreedyTrace run_greedy(const GreedyModel& model, const StateOracle& reveal) {
  ResidualSystem residual =
      ResidualSystem::Initial(model.costs.size(), model.ground_size);
  GreedyTrace trace;
  trace.prices.assign(model.ground_size, Rational());

  while (!residual.uncovered.empty()) {
    const auto next = select_next(residual, model.q, model.costs);
    if (!next) {
      trace.uncovered = residual.uncovered;
      throw StuckResidual(std::move(trace));
    }
    const ItemId item = *next;
    GreedyStep step;
    step.item = item;
    step.cost = model.costs[item];
    step.unitprice = *unitprice(item, residual, model.q, model.costs);
    step.newly_covered = residual.uncovered & reveal(item);
    step.g_cov = step.newly_covered.count();
    step.newly_covered.for_each(
        [&](std::size_t e) { trace.prices[e] = step.unitprice; });

    residual.uncovered -= step.newly_covered;
    residual.remaining_items.erase(item);
    ++residual.step_index;

    trace.evaluated.insert(item);
    trace.total_cost += step.cost;
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

GreedyTrace run_greedy(const Instance& inst, const Realization& real) {
  return run_greedy(greedy_model(inst),
                    [&](ItemId item) { return real.states[item]; });
}

Rational greedy_cost(const GreedyTrace& trace) {
  Rational total;
  for (const GreedyStep& step : trace.steps) total += step.cost;
  return total;
}

}  // namespace sscover
