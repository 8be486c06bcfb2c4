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

#ifndef SSCOVER_GENERATORS_HPP_
#define SSCOVER_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sscover/instance.hpp"

namespace sscover {

enum class CoverageMode { kPerfect, kImperfect };

struct GenParams {
  std::size_t n_items = 3;
  std::size_t n_elements = 3;
  std::size_t max_support = 2;
  Rational cost_lo = Rational(1);
  Rational cost_hi = Rational(4);
  CoverageMode coverage_mode = CoverageMode::kPerfect;
  // Upper bound on probability (and cost step) denominators.
  std::size_t prob_granularity = 4;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument for max_support == 0, granularity == 0,
// cost_lo <= 0, cost_hi < cost_lo, or perfect mode with elements but no items.
void check_params(const GenParams& p);

// Seed-deterministic random instance. Each item draws between 1 and
// max_support distinct states with probabilities k_i / d, d <= granularity.
// In perfect mode every element gets a random guarantor item whose states
// all contain it (states that become equal are merged).
Instance random_instance(const GenParams& p);

class UncoveredElement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Item k deterministically reveals sets[k]. With require_cover, throws
// UncoveredElement if some element lies in no set.
Instance point_mass_embedding(std::size_t ground_size,
                              const std::vector<ElementSubset>& sets,
                              const std::vector<Rational>& costs,
                              bool require_cover = true);

// Elements 0..n-1; item i < n is the singleton {i} with cost 1/(i+1); item n
// covers everything at cost 1 + epsilon. Greedy pays H(n) and the optimum
// pays min(H(n), 1 + epsilon).
Instance tight_instance(std::size_t n, const Rational& epsilon);

}  // namespace sscover

#endif  // SSCOVER_GENERATORS_HPP_
