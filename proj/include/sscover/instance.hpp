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

// Stochastic set cover instances.
//
// An instance has a ground set {0, ..., ground_size-1} and a list of items.
// Evaluating item F reveals its state, a random subset of the ground set
// drawn from an explicit finite distribution p_F. Item states are mutually
// independent, and every realization fixes one state per item. The marginal
// q_F(e) is the probability that the state of F contains e.

#ifndef SSCOVER_INSTANCE_HPP_
#define SSCOVER_INSTANCE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sscover/bitset.hpp"
#include "sscover/rational.hpp"

namespace sscover {

using ItemId = std::size_t;
using ElementId = std::size_t;

// Thrown when an exhaustive computation would exceed its configured cap.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StateOutcome {
  ElementSubset state;
  Rational prob;

  friend bool operator==(const StateOutcome&, const StateOutcome&) = default;
};

// Finite support of (state, probability) pairs, always kept in ascending
// order of the state bit pattern. Construction does not check that the
// probabilities are positive or sum to one; validate_instance does.
class StateDistribution {
 public:
  StateDistribution() = default;
  explicit StateDistribution(std::vector<StateOutcome> support);

  static StateDistribution PointMass(ElementSubset state);

  std::span<const StateOutcome> support() const { return support_; }
  std::size_t size() const { return support_.size(); }

  friend bool operator==(const StateDistribution&,
                         const StateDistribution&) = default;

 private:
  std::vector<StateOutcome> support_;
};

struct Item {
  ItemId id = 0;
  Rational cost;
  StateDistribution dist;

  friend bool operator==(const Item&, const Item&) = default;
};

struct Instance {
  std::size_t ground_size = 0;
  std::vector<Item> items;

  std::size_t item_count() const { return items.size(); }
  std::vector<Rational> costs() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct Violation {
  std::optional<ItemId> item;
  // Index into the item's canonical support, when the violation concerns a
  // single support entry.
  std::optional<std::size_t> entry;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  // One violation per line, prefixed with "item k: " where applicable.
  std::string to_string() const;
};

ValidationReport validate_instance(const Instance& inst);

// q[F][e] for every item F and element e.
class MarginalTable {
 public:
  MarginalTable() = default;
  MarginalTable(std::size_t item_count, std::size_t ground_size);

  std::size_t item_count() const { return item_count_; }
  std::size_t ground_size() const { return ground_size_; }

  const Rational& at(ItemId item, ElementId e) const {
    return q_[item * ground_size_ + e];
  }
  Rational& at(ItemId item, ElementId e) { return q_[item * ground_size_ + e]; }

  // Expected number of elements of `subset` contained in the item's state.
  Rational mass(ItemId item, const ElementSubset& subset) const;

  friend bool operator==(const MarginalTable&, const MarginalTable&) = default;

 private:
  std::size_t item_count_ = 0;
  std::size_t ground_size_ = 0;
  std::vector<Rational> q_;
};

MarginalTable marginals(const Instance& inst);

// Pr[no item's state contains e] = prod_F (1 - q_F(e)), by independence.
Rational miss_probability(const MarginalTable& q, ElementId e);

// Elements e with q_F(e) = 1 for some item F.
ElementSubset perfectly_covered_elements(const MarginalTable& q);

// True iff every element lies in some item's state with probability one.
// Since the miss probability is a product of the factors (1 - q_F(e)), it is
// zero exactly when one factor is zero, i.e. when some q_F(e) = 1.
bool is_perfect_coverage(const MarginalTable& q);
bool is_perfect_coverage(const Instance& inst);

struct Realization {
  std::vector<ElementSubset> states;

  friend bool operator==(const Realization&, const Realization&) = default;
};

struct WeightedRealization {
  Realization realization;
  Rational prob;
};

// True iff real has one state per item and each lies in that item's support.
bool is_consistent(const Instance& inst, const Realization& real);

// Number of realizations, prod_F |support(F)|, or nullopt past `cap`.
std::optional<std::uint64_t> realization_count(const Instance& inst,
                                               std::uint64_t cap);

// Visits every element of the product of supports exactly once, in
// odometer order with the last item varying fastest. Throws TooLarge when the
// product exceeds cap.
void for_each_realization(
    const Instance& inst, std::uint64_t cap,
    const std::function<void(const Realization&, const Rational&)>& visit);

std::vector<WeightedRealization> enumerate_realizations(const Instance& inst,
                                                        std::uint64_t cap);

// Draws each item's state independently by inverse CDF over its canonical
// support. Item F uses a std::mt19937_64 seeded with derive_seed(seed, F);
// the top 53 bits of its first output form u = k / 2^53, and the chosen state
// is the first whose cumulative probability exceeds u (exact comparison).
Realization sample_realization(const Instance& inst, std::uint64_t seed);

// True iff the union of the chosen items' states contains the union of all
// items' states.
bool is_valid_cover(const Instance& inst, const ItemSet& chosen,
                    const Realization& real);

// splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);
// Deterministic stream seed for (base, index).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace sscover

#endif  // SSCOVER_INSTANCE_HPP_
