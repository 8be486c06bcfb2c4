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

#include "sscover/instance.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace sscover {

StateDistribution::StateDistribution(std::vector<StateOutcome> support)
    : support_(std::move(support)) {
  std::stable_sort(support_.begin(), support_.end(),
                   [](const StateOutcome& a, const StateOutcome& b) {
                     return a.state < b.state;
                   });
}

StateDistribution StateDistribution::PointMass(ElementSubset state) {
  return StateDistribution({StateOutcome{std::move(state), Rational(1)}});
}

std::vector<Rational> Instance::costs() const {
  std::vector<Rational> out;
  out.reserve(items.size());
  for (const Item& item : items) out.push_back(item.cost);
  return out;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const Violation& v : violations) {
    if (v.item) os << "item " << *v.item << ": ";
    os << v.message << "\n";
  }
  return os.str();
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report;
  auto add = [&](std::optional<ItemId> item, std::optional<std::size_t> entry,
                 std::string msg) {
    report.violations.push_back(Violation{item, entry, std::move(msg)});
  };

  std::vector<bool> seen(inst.items.size(), false);
  for (std::size_t k = 0; k < inst.items.size(); ++k) {
    const ItemId id = inst.items[k].id;
    if (id >= inst.items.size()) {
      add(k, std::nullopt, "item id " + std::to_string(id) + " is not dense");
    } else if (seen[id]) {
      add(k, std::nullopt, "duplicate item id " + std::to_string(id));
    } else {
      seen[id] = true;
    }
  }

  for (std::size_t k = 0; k < inst.items.size(); ++k) {
    const Item& item = inst.items[k];
    if (item.cost.sign() <= 0) {
      add(k, std::nullopt, "nonpositive cost " + item.cost.str());
    }
    const auto support = item.dist.support();
    if (support.empty()) {
      add(k, std::nullopt, "empty support");
      continue;
    }
    Rational total;
    for (std::size_t j = 0; j < support.size(); ++j) {
      const StateOutcome& out = support[j];
      if (out.prob.sign() <= 0) {
        add(k, j, "nonpositive probability " + out.prob.str());
      }
      if (out.state.bit_width() > inst.ground_size) {
        add(k, j,
            "state out of range: element " +
                std::to_string(out.state.bit_width() - 1) +
                " >= ground size " + std::to_string(inst.ground_size));
      }
      if (j > 0 && support[j - 1].state == out.state) {
        add(k, j, "duplicate support state");
      }
      total += out.prob;
    }
    if (total != Rational(1)) {
      add(k, std::nullopt,
          "probabilities sum to " + total.str() + " ≠ 1");
    }
  }
  return report;
}

MarginalTable::MarginalTable(std::size_t item_count, std::size_t ground_size)
    : item_count_(item_count),
      ground_size_(ground_size),
      q_(item_count * ground_size) {}

Rational MarginalTable::mass(ItemId item, const ElementSubset& subset) const {
  Rational total;
  subset.for_each([&](std::size_t e) {
    if (e < ground_size_) total += at(item, e);
  });
  return total;
}

MarginalTable marginals(const Instance& inst) {
  MarginalTable q(inst.items.size(), inst.ground_size);
  for (std::size_t k = 0; k < inst.items.size(); ++k) {
    for (const StateOutcome& out : inst.items[k].dist.support()) {
      out.state.for_each([&](std::size_t e) {
        if (e < inst.ground_size) q.at(k, e) += out.prob;
      });
    }
  }
  return q;
}

Rational miss_probability(const MarginalTable& q, ElementId e) {
  Rational p(1);
  for (ItemId f = 0; f < q.item_count(); ++f) p *= Rational(1) - q.at(f, e);
  return p;
}

ElementSubset perfectly_covered_elements(const MarginalTable& q) {
  ElementSubset out;
  const Rational one(1);
  for (ElementId e = 0; e < q.ground_size(); ++e) {
    for (ItemId f = 0; f < q.item_count(); ++f) {
      if (q.at(f, e) == one) {
        out.insert(e);
        break;
      }
    }
  }
  return out;
}

bool is_perfect_coverage(const MarginalTable& q) {
  return perfectly_covered_elements(q).count() == q.ground_size();
}

bool is_perfect_coverage(const Instance& inst) {
  return is_perfect_coverage(marginals(inst));
}

bool is_consistent(const Instance& inst, const Realization& real) {
  if (real.states.size() != inst.items.size()) return false;
  for (std::size_t k = 0; k < inst.items.size(); ++k) {
    const auto support = inst.items[k].dist.support();
    const bool found =
        std::any_of(support.begin(), support.end(), [&](const StateOutcome& o) {
          return o.state == real.states[k];
        });
    if (!found) return false;
  }
  return true;
}

std::optional<std::uint64_t> realization_count(const Instance& inst,
                                               std::uint64_t cap) {
  std::uint64_t n = 1;
  for (const Item& item : inst.items) {
    const std::uint64_t s = item.dist.size();
    if (s == 0) return 0;
    if (n > cap / s) return std::nullopt;
    n *= s;
  }
  if (n > cap) return std::nullopt;
  return n;
}

void for_each_realization(
    const Instance& inst, std::uint64_t cap,
    const std::function<void(const Realization&, const Rational&)>& visit) {
  const auto count = realization_count(inst, cap);
  if (!count) {
    throw TooLarge("realization space exceeds cap of " + std::to_string(cap));
  }
  if (*count == 0) return;

  const std::size_t n = inst.items.size();
  std::vector<std::size_t> digit(n, 0);
  Realization real;
  real.states.reserve(n);
  for (const Item& item : inst.items) {
    real.states.push_back(item.dist.support()[0].state);
  }
  // prefix[k] = product of the chosen probabilities of items 0..k-1.
  std::vector<Rational> prefix(n + 1, Rational(1));
  for (std::size_t k = 0; k < n; ++k) {
    prefix[k + 1] = prefix[k] * inst.items[k].dist.support()[0].prob;
  }

  while (true) {
    visit(real, prefix[n]);
    std::size_t k = n;
    while (k > 0) {
      --k;
      const auto support = inst.items[k].dist.support();
      if (++digit[k] < support.size()) break;
      digit[k] = 0;
      if (k == 0) return;
    }
    if (n == 0) return;
    for (std::size_t j = k; j < n; ++j) {
      const StateOutcome& out = inst.items[j].dist.support()[digit[j]];
      real.states[j] = out.state;
      prefix[j + 1] = prefix[j] * out.prob;
    }
  }
}

std::vector<WeightedRealization> enumerate_realizations(const Instance& inst,
                                                        std::uint64_t cap) {
  std::vector<WeightedRealization> out;
  for_each_realization(inst, cap,
                       [&](const Realization& r, const Rational& p) {
                         out.push_back(WeightedRealization{r, p});
                       });
  return out;
}

Realization sample_realization(const Instance& inst, std::uint64_t seed) {
  static const Rational kScale = [] {
    Rational r(1);
    for (int i = 0; i < 53; ++i) r *= Rational(2);
    return r;
  }();
  Realization real;
  real.states.reserve(inst.items.size());
  for (std::size_t k = 0; k < inst.items.size(); ++k) {
    std::mt19937_64 gen(derive_seed(seed, k));
    const auto bits = static_cast<std::int64_t>(gen() >> 11);
    const Rational u = Rational(bits) / kScale;
    const auto support = inst.items[k].dist.support();
    Rational cumulative;
    std::size_t pick = support.size() - 1;
    for (std::size_t j = 0; j < support.size(); ++j) {
      cumulative += support[j].prob;
      if (u < cumulative) {
        pick = j;
        break;
      }
    }
    real.states.push_back(support[pick].state);
  }
  return real;
}

bool is_valid_cover(const Instance& inst, const ItemSet& chosen,
                    const Realization& real) {
  ElementSubset target;
  ElementSubset covered;
  for (std::size_t k = 0; k < inst.items.size(); ++k) {
    target |= real.states[k];
    if (chosen.contains(k)) covered |= real.states[k];
  }
  return target.is_subset_of(covered);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) ^ splitmix64(index + 1));
}

}  // namespace sscover
