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

// Adaptive greedy for stochastic set cover.
//
// Before each evaluation the residual system is (remaining items, uncovered
// elements). Every remaining item with positive residual mass
//   mass(F) = sum over uncovered e of q_F(e)
// has unitprice C(F) / mass(F), and greedy evaluates the item with the
// smallest unitprice, ties going to the smallest id. The revealed state
// covers some uncovered elements; each of those is charged the unitprice of
// the step that covered it (its price). Elements never covered are charged 0.
// Greedy stops once nothing is uncovered.
//
// The policy only reads costs, marginals and the states of items it has
// evaluated. GreedyModel holds exactly that knowledge and states are pulled
// through a StateOracle one evaluation at a time.

#ifndef SSCOVER_GREEDY_HPP_
#define SSCOVER_GREEDY_HPP_

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sscover/bitset.hpp"
#include "sscover/instance.hpp"
#include "sscover/rational.hpp"

namespace sscover {

struct GreedyModel {
  std::size_t ground_size = 0;
  std::vector<Rational> costs;
  MarginalTable q;
};

GreedyModel greedy_model(const Instance& inst);

// Returns the state of an item when it is evaluated.
using StateOracle = std::function<ElementSubset(ItemId)>;

struct ResidualSystem {
  ItemSet remaining_items;
  ElementSubset uncovered;
  std::size_t step_index = 1;

  static ResidualSystem Initial(std::size_t item_count,
                                std::size_t ground_size);
};

struct GreedyStep {
  ItemId item = 0;
  Rational cost;
  Rational unitprice;
  ElementSubset newly_covered;
  std::size_t g_cov = 0;

  friend bool operator==(const GreedyStep&, const GreedyStep&) = default;
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  // Indexed by element.
  std::vector<Rational> prices;
  Rational total_cost;
  ItemSet evaluated;
  // Elements still uncovered at termination; empty unless greedy got stuck.
  ElementSubset uncovered;

  friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

// Raised when elements remain uncovered but no remaining item has positive
// residual mass. Cannot happen on perfect-coverage instances.
class StuckResidual : public std::runtime_error {
 public:
  explicit StuckResidual(GreedyTrace partial);
  const GreedyTrace& partial_trace() const { return partial_; }

 private:
  GreedyTrace partial_;
};

// C(F) / mass(F), or nullopt when the residual mass is zero.
std::optional<Rational> unitprice(ItemId item, const ResidualSystem& residual,
                                  const MarginalTable& q,
                                  std::span<const Rational> costs);

std::optional<ItemId> select_next(const ResidualSystem& residual,
                                  const MarginalTable& q,
                                  std::span<const Rational> costs);

GreedyTrace run_greedy(const GreedyModel& model, const StateOracle& reveal);
GreedyTrace run_greedy(const Instance& inst, const Realization& real);

Rational greedy_cost(const GreedyTrace& trace);

}  // namespace sscover

#endif  // SSCOVER_GREEDY_HPP_
