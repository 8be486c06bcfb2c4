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

#include "sscover/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace sscover {
namespace {

// Uniform draw from [0, n) by rejection. std::uniform_int_distribution is
// implementation-defined, which would make instances differ across
// standard libraries.
std::uint64_t Draw(std::mt19937_64& gen, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return x % n;
}

ElementSubset RandomSubset(std::mt19937_64& gen, std::size_t n) {
  ElementSubset s;
  for (std::size_t e = 0; e < n; ++e) {
    if ((gen() >> 63) != 0) s.insert(e);
  }
  return s;
}

// s positive integers summing to d, via s-1 distinct cut points.
std::vector<std::int64_t> RandomComposition(std::mt19937_64& gen,
                                            std::size_t s, std::size_t d) {
  std::set<std::size_t> cuts;
  while (cuts.size() + 1 < s) cuts.insert(1 + Draw(gen, d - 1));
  std::vector<std::int64_t> parts;
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    parts.push_back(static_cast<std::int64_t>(c - prev));
    prev = c;
  }
  parts.push_back(static_cast<std::int64_t>(d - prev));
  return parts;
}

}  // namespace

void check_params(const GenParams& p) {
  if (p.max_support == 0) throw std::invalid_argument("max_support must be >= 1");
  if (p.prob_granularity == 0) {
    throw std::invalid_argument("granularity must be >= 1");
  }
  if (p.cost_lo.sign() <= 0) throw std::invalid_argument("cost_lo must be > 0");
  if (p.cost_hi < p.cost_lo) {
    throw std::invalid_argument("cost_hi must be >= cost_lo");
  }
  if (p.coverage_mode == CoverageMode::kPerfect && p.n_items == 0 &&
      p.n_elements > 0) {
    throw std::invalid_argument("perfect coverage needs at least one item");
  }
}

Instance random_instance(const GenParams& p) {
  check_params(p);
  std::mt19937_64 gen(p.seed);
  Instance inst;
  inst.ground_size = p.n_elements;

  std::vector<std::vector<ElementSubset>> states(p.n_items);
  std::vector<std::vector<Rational>> probs(p.n_items);
  for (std::size_t k = 0; k < p.n_items; ++k) {
    std::size_t s = 1 + Draw(gen, p.max_support);
    s = std::min(s, p.prob_granularity);
    if (p.n_elements < 20) {
      s = std::min<std::size_t>(s, std::size_t{1} << p.n_elements);
    }
    std::set<ElementSubset> distinct;
    while (distinct.size() < s) distinct.insert(RandomSubset(gen, p.n_elements));
    states[k].assign(distinct.begin(), distinct.end());

    const std::size_t d = s + Draw(gen, p.prob_granularity - s + 1);
    for (std::int64_t part : RandomComposition(gen, s, d)) {
      probs[k].emplace_back(part, static_cast<std::int64_t>(d));
    }

    const auto step_den = static_cast<std::int64_t>(1 + Draw(gen, p.prob_granularity));
    const auto step = static_cast<std::int64_t>(
        Draw(gen, static_cast<std::uint64_t>(step_den) + 1));
    inst.items.push_back(Item{k, p.cost_lo + (p.cost_hi - p.cost_lo) *
                                                 Rational(step, step_den),
                              {}});
  }

  if (p.coverage_mode == CoverageMode::kPerfect) {
    for (std::size_t e = 0; e < p.n_elements; ++e) {
      const std::size_t guarantor = Draw(gen, p.n_items);
      for (ElementSubset& st : states[guarantor]) st.insert(e);
    }
  }

  for (std::size_t k = 0; k < p.n_items; ++k) {
    std::map<ElementSubset, Rational> merged;
    for (std::size_t j = 0; j < states[k].size(); ++j) {
      merged[states[k][j]] += probs[k][j];
    }
    std::vector<StateOutcome> support;
    for (auto& [state, prob] : merged) support.push_back({state, prob});
    inst.items[k].dist = StateDistribution(std::move(support));
  }
  return inst;
}

Instance point_mass_embedding(std::size_t ground_size,
                              const std::vector<ElementSubset>& sets,
                              const std::vector<Rational>& costs,
                              bool require_cover) {
  if (sets.size() != costs.size()) {
    throw std::invalid_argument("sets and costs differ in length");
  }
  Instance inst;
  inst.ground_size = ground_size;
  ElementSubset covered;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    covered |= sets[k];
    inst.items.push_back(
        Item{k, costs[k], StateDistribution::PointMass(sets[k])});
  }
  if (require_cover) {
    for (std::size_t e = 0; e < ground_size; ++e) {
      if (!covered.contains(e)) {
        throw UncoveredElement("element " + std::to_string(e) +
                               " is in no set");
      }
    }
  }
  return inst;
}

Instance tight_instance(std::size_t n, const Rational& epsilon) {
  if (n == 0) throw std::invalid_argument("tight_instance needs n >= 1");
  if (epsilon.sign() <= 0) {
    throw std::invalid_argument("tight_instance needs epsilon > 0");
  }
  std::vector<ElementSubset> sets;
  std::vector<Rational> costs;
  for (std::size_t i = 0; i < n; ++i) {
    sets.push_back(ElementSubset{i});
    costs.emplace_back(1, static_cast<std::int64_t>(i + 1));
  }
  sets.push_back(ElementSubset::Full(n));
  costs.push_back(Rational(1) + epsilon);
  return point_mass_embedding(n, sets, costs);
}

}  // namespace sscover
