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

#include "sscover/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sscover/greedy.hpp"
#include "sscover/reduction.hpp"

namespace sscover {

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial) {
  return derive_seed(master_seed, trial);
}

TrialStats run_trials(const Instance& inst, std::size_t n,
                      std::uint64_t master_seed, const TrialOptions& options) {
  if (n == 0) throw std::invalid_argument("run_trials needs n >= 1");

  const bool reduce = !options.no_reduce && !is_perfect_coverage(inst);
  const GreedyModel model = greedy_model(inst);
  std::optional<ReducedInstance> reduced;
  if (reduce) reduced = reduce_instance(inst);

  std::vector<Rational> costs(n);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      const Realization real =
          sample_realization(inst, trial_seed(master_seed, t));
      if (reduced) {
        costs[t] = solve_imperfect(*reduced, real).cost;
      } else {
        costs[t] = run_greedy(model, [&](ItemId item) {
                     return real.states[item];
                   }).total_cost;
      }
    }
  };

  const unsigned threads =
      std::max(1U, std::min<unsigned>(options.threads,
                                      static_cast<unsigned>(n)));
  if (threads == 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = std::min(n, w * chunk);
      const std::size_t end = std::min(n, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  TrialStats stats;
  stats.n_trials = n;
  stats.master_seed = master_seed;
  Rational total;
  for (const Rational& c : costs) total += c;
  const Rational mean = total / Rational(static_cast<std::int64_t>(n));
  stats.mean_cost = mean.to_double();

  stats.costs.reserve(n);
  double sq = 0;
  for (const Rational& c : costs) {
    const double d = (c - mean).to_double();
    sq += d * d;
    stats.costs.push_back(c.to_double());
  }
  stats.sample_stddev = n > 1 ? std::sqrt(sq / static_cast<double>(n - 1)) : 0;
  stats.ci95_halfwidth =
      1.96 * stats.sample_stddev / std::sqrt(static_cast<double>(n));
  stats.min_cost = *std::min_element(stats.costs.begin(), stats.costs.end());
  stats.max_cost = *std::max_element(stats.costs.begin(), stats.costs.end());
  return stats;
}

std::string trials_to_csv(const TrialStats& stats) {
  std::ostringstream os;
  os.precision(17);
  os << "trial,seed,cost\n";
  for (std::size_t t = 0; t < stats.costs.size(); ++t) {
    os << t << "," << trial_seed(stats.master_seed, t) << "," << stats.costs[t]
       << "\n";
  }
  return os.str();
}

}  // namespace sscover
