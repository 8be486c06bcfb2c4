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

// Exact ground truth on enumerable instances.
//
// The optimal adaptive policy is computed by expectimin over
// (remaining items, uncovered elements). That pair is a sufficient statistic:
// item states are independent, so once we condition on which items were
// evaluated and what they covered, every unevaluated item still has its prior
// distribution, and the states of evaluated items matter only through the
// elements they left uncovered.
//
//   V(A', {})  = 0
//   V(A', B')  = min over F in A' with mass_F(B') > 0 of
//                C(F) + sum_V p_F(V) * V(A' \ {F}, B' \ V)
//
// Items with zero residual mass are skipped: their evaluation cannot shrink B'.

#ifndef SSCOVER_ORACLE_HPP_
#define SSCOVER_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sscover/instance.hpp"
#include "sscover/rational.hpp"
#include "sscover/reduction.hpp"

namespace sscover {

class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleCaps {
  std::uint64_t realizations = 1'000'000;
  std::uint64_t dp_states = std::uint64_t{1} << 22;
};

struct DpOptions {
  // Memo entries kept before a random half is evicted; 0 keeps everything.
  std::size_t memo_limit = 0;
  std::uint64_t eviction_seed = 0;
};

// H(n) = 1 + 1/2 + ... + 1/n, H(0) = 0.
Rational harmonic(std::size_t n);

// Expected cost of the optimal adaptive policy. Requires perfect coverage
// (std::invalid_argument otherwise) and 2^|A| * 2^|B| <= dp_cap (TooLarge
// otherwise).
Rational optimal_adaptive_cost(const Instance& inst, std::uint64_t dp_cap,
                               const DpOptions& options = {});

struct OracleReport {
  // Size of the ground set the bound refers to: |B|, or |E| after reduction.
  std::size_t ground_size = 0;
  bool reduced = false;
  Rational greedy_expected_cost;
  Rational optimal_expected_cost;
  // greedy / optimal, absent when optimal is 0.
  std::optional<Rational> ratio;
  Rational bound;
  // Pr[F evaluated by greedy].
  std::vector<Rational> eval_probs;
  // E[price(e)] over the ground set greedy ran on.
  std::vector<Rational> price_expectations;
  // sum_F Pr[F evaluated] C(F) and sum_e E[price(e)].
  Rational cost_by_items;
  Rational cost_by_prices;

  bool identity_holds() const { return cost_by_items == cost_by_prices; }
  bool bound_holds() const {
    return greedy_expected_cost <= bound * optimal_expected_cost;
  }
};

// Runs greedy on every realization of a perfect-coverage instance.
OracleReport exact_greedy_report(const Instance& inst,
                                 const OracleCaps& caps = {});

// Runs greedy through the reduction on every realization of the source;
// the optimum and the H(|E|) bound refer to the reduced instance.
OracleReport exact_imperfect_report(const Instance& inst,
                                    const OracleCaps& caps = {});

}  // namespace sscover

#endif  // SSCOVER_ORACLE_HPP_
