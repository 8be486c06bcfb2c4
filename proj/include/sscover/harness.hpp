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

#ifndef SSCOVER_HARNESS_HPP_
#define SSCOVER_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sscover/instance.hpp"

namespace sscover {

struct TrialOptions {
  // Worker threads; results do not depend on this.
  unsigned threads = 1;
  // Run greedy directly even on imperfect instances (may throw
  // StuckResidual).
  bool no_reduce = false;
};

struct TrialStats {
  std::size_t n_trials = 0;
  std::uint64_t master_seed = 0;
  double mean_cost = 0;
  double sample_stddev = 0;
  // 1.96 * sample_stddev / sqrt(n_trials).
  double ci95_halfwidth = 0;
  double min_cost = 0;
  double max_cost = 0;
  // Per-trial cost, indexed by trial.
  std::vector<double> costs;

  friend bool operator==(const TrialStats&, const TrialStats&) = default;
};

// Seed of trial t: derive_seed(master_seed, t).
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial);

// Each trial samples a realization and runs greedy on it, through the
// reduction when the instance lacks perfect coverage. Costs are summed
// exactly, so the mean is independent of scheduling.
TrialStats run_trials(const Instance& inst, std::size_t n,
                      std::uint64_t master_seed,
                      const TrialOptions& options = {});

// "trial,seed,cost" header then one row per trial.
std::string trials_to_csv(const TrialStats& stats);

}  // namespace sscover

#endif  // SSCOVER_HARNESS_HPP_
