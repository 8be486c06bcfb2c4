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

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sscover/generators.hpp"
#include "sscover/io.hpp"
#include "support/brute_force.hpp"
#include "support/examples.hpp"

namespace sscover {
namespace {

using testing::MakeItem;
using testing::R;

std::vector<Instance> PerfectInstances(int count, std::uint64_t base) {
  std::vector<Instance> out;
  for (int s = 0; s < count; ++s) {
    GenParams p;
    p.n_items = 1 + s % 4;
    p.n_elements = s % 5;
    p.max_support = 3;
    p.prob_granularity = 4;
    p.seed = base + static_cast<std::uint64_t>(s);
    out.push_back(random_instance(p));
  }
  return out;
}

// Same marginals, different joint law: each element included independently.
Instance IndependentElementsTwin(const Instance& inst) {
  Instance twin = inst;
  const MarginalTable q = marginals(inst);
  for (ItemId f = 0; f < inst.items.size(); ++f) {
    std::vector<StateOutcome> support{{ElementSubset{}, R(1)}};
    for (ElementId e = 0; e < inst.ground_size; ++e) {
      std::vector<StateOutcome> next;
      for (const auto& o : support) {
        if (q.at(f, e) != R(1)) {
          next.push_back({o.state, o.prob * (R(1) - q.at(f, e))});
        }
        if (!q.at(f, e).is_zero()) {
          ElementSubset with = o.state;
          with.insert(e);
          next.push_back({with, o.prob * q.at(f, e)});
        }
      }
      support = std::move(next);
    }
    twin.items[f].dist = StateDistribution(std::move(support));
  }
  return twin;
}

TEST_CASE("unitprice") {
  const Instance ex1 = testing::Ex1();
  const MarginalTable q = marginals(ex1);
  const auto costs = ex1.costs();
  const ResidualSystem start = ResidualSystem::Initial(2, 2);
  CHECK(unitprice(0, start, q, costs) == R(2, 3));
  CHECK(unitprice(1, start, q, costs) == R(1));

  Instance single{1, {MakeItem(0, R(5), {{ElementSubset{0}, R(1)}})}};
  CHECK(unitprice(0, ResidualSystem::Initial(1, 1), marginals(single),
                  single.costs()) == R(5));

  const ResidualSystem only_zero{ItemSet{0, 1}, ElementSubset{}, 1};
  CHECK_FALSE(unitprice(0, only_zero, q, costs).has_value());
  const ResidualSystem only_one{ItemSet{1}, ElementSubset{0}, 2};
  CHECK_FALSE(unitprice(1, only_one, q, costs).has_value());
}

TEST_CASE("select_next") {
  SUBCASE("smallest unitprice") {
    const Instance ex1 = testing::Ex1();
    CHECK(select_next(ResidualSystem::Initial(2, 2), marginals(ex1),
                      ex1.costs()) == 0);
  }
  SUBCASE("ties go to the smallest id") {
    Instance inst{1, {}};
    for (ItemId k = 0; k < 8; ++k) {
      const Rational cost = (k == 3 || k == 7) ? R(1, 2) : R(1);
      inst.items.push_back(MakeItem(k, cost, {{ElementSubset{0}, R(1)}}));
    }
    CHECK(select_next(ResidualSystem::Initial(8, 1), marginals(inst),
                      inst.costs()) == 3);
    const ResidualSystem without3{ItemSet{0, 1, 2, 4, 5, 6, 7}, ElementSubset{0}, 2};
    CHECK(select_next(without3, marginals(inst), inst.costs()) == 7);
  }
  SUBCASE("nothing selectable") {
    const Instance ex2 = testing::Ex2();
    const ResidualSystem r{ItemSet{}, ElementSubset{0}, 2};
    CHECK_FALSE(select_next(r, marginals(ex2), ex2.costs()).has_value());
    Instance empty_state{1, {MakeItem(0, R(1), {{ElementSubset{}, R(1)}})}};
    CHECK_FALSE(select_next(ResidualSystem::Initial(1, 1), marginals(empty_state),
                            empty_state.costs())
                    .has_value());
  }
}

TEST_CASE("run_greedy on the two-state example") {
  const Instance ex1 = testing::Ex1();
  SUBCASE("first item covers everything") {
    const GreedyTrace t =
        run_greedy(ex1, Realization{{ElementSubset{0, 1}, ElementSubset{1}}});
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].item == 0);
    CHECK(t.steps[0].unitprice == R(2, 3));
    CHECK(t.steps[0].newly_covered == ElementSubset{0, 1});
    CHECK(t.steps[0].g_cov == 2);
    CHECK(t.total_cost == R(1));
    CHECK(greedy_cost(t) == R(1));
    CHECK(t.prices == std::vector<Rational>{R(2, 3), R(2, 3)});
    CHECK(t.evaluated == ItemSet{0});
  }
  SUBCASE("second item needed") {
    const GreedyTrace t =
        run_greedy(ex1, Realization{{ElementSubset{0}, ElementSubset{1}}});
    REQUIRE(t.steps.size() == 2);
    CHECK(t.steps[0].item == 0);
    CHECK(t.steps[0].unitprice == R(2, 3));
    CHECK(t.steps[0].newly_covered == ElementSubset{0});
    CHECK(t.steps[1].item == 1);
    CHECK(t.steps[1].unitprice == R(1));
    CHECK(t.steps[1].newly_covered == ElementSubset{1});
    CHECK(greedy_cost(t) == R(2));
    CHECK(t.prices == std::vector<Rational>{R(2, 3), R(1)});
  }
}

TEST_CASE("greedy_cost of an empty run") {
  const GreedyTrace t = run_greedy(Instance{}, Realization{});
  CHECK(t.steps.empty());
  CHECK(greedy_cost(t) == R(0));
  Instance no_elements{0, {MakeItem(0, R(3), {{ElementSubset{}, R(1)}})}};
  CHECK(greedy_cost(run_greedy(no_elements, Realization{{ElementSubset{}}})) ==
        R(0));
}

TEST_CASE("stuck residual on raw imperfect instances") {
  const Instance ex2 = testing::Ex2();
  try {
    run_greedy(ex2, Realization{{ElementSubset{}}});
    FAIL("expected StuckResidual");
  } catch (const StuckResidual& e) {
    const GreedyTrace& t = e.partial_trace();
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].g_cov == 0);
    CHECK(t.uncovered == ElementSubset{0});
    CHECK(t.prices == std::vector<Rational>{R(0)});
  }
  CHECK(run_greedy(ex2, Realization{{ElementSubset{0}}}).total_cost == R(1));
}

TEST_CASE("point masses reduce to classical weighted greedy") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenParams p;
    p.n_items = 2 + seed % 4;
    p.n_elements = 1 + seed % 5;
    p.max_support = 1;
    p.seed = seed;
    const Instance inst = random_instance(p);
    const auto all = enumerate_realizations(inst, 1);
    REQUIRE(all.size() == 1);
    const GreedyTrace t = run_greedy(inst, all[0].realization);
    const auto ref = testing::ReferenceGreedy(inst, all[0].realization.states);
    CHECK(t.total_cost == ref.cost);
    std::vector<ItemId> order;
    for (const auto& s : t.steps) order.push_back(s.item);
    CHECK(order == ref.order);
    for (std::uint64_t s = 0; s < 5; ++s) {
      CHECK(run_greedy(inst, sample_realization(inst, s)) == t);
    }
  }
}

TEST_CASE("nested sets golden trace") {
  const Instance inst = point_mass_embedding(
      3, {ElementSubset{0}, ElementSubset{0, 1}, ElementSubset{0, 1, 2}},
      {R(1), R(3, 2), R(3)});
  const GreedyTrace t = run_greedy(inst, enumerate_realizations(inst, 1)[0].realization);
  std::ifstream in(std::string(SSCOVER_TEST_DATA_DIR) + "/nested_trace.json");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(trace_to_json(t) == nlohmann::json::parse(buf.str()));
}

TEST_CASE("trace invariants on random perfect instances") {
  for (const Instance& inst : PerfectInstances(150, 5000)) {
    const Rational one(1);
    for (const auto& w : enumerate_realizations(inst, 1000)) {
      const GreedyTrace t = run_greedy(inst, w.realization);
      CHECK(t.uncovered.empty());
      CHECK(is_valid_cover(inst, t.evaluated, w.realization));

      ElementSubset uncovered = ElementSubset::Full(inst.ground_size);
      ItemSet seen;
      Rational cost;
      std::vector<Rational> prices(inst.ground_size);
      for (const GreedyStep& s : t.steps) {
        CHECK_FALSE(seen.contains(s.item));
        seen.insert(s.item);
        CHECK(s.newly_covered.is_subset_of(uncovered));
        CHECK(s.g_cov == s.newly_covered.count());
        CHECK(s.unitprice > R(0));
        CHECK(s.newly_covered == (uncovered & w.realization.states[s.item]));
        s.newly_covered.for_each([&](std::size_t e) { prices[e] = s.unitprice; });
        uncovered -= s.newly_covered;
        cost += inst.items[s.item].cost;
      }
      CHECK(seen == t.evaluated);
      CHECK(cost == t.total_cost);
      CHECK(greedy_cost(t) == t.total_cost);
      CHECK(prices == t.prices);

      const auto ref = testing::ReferenceGreedy(inst, w.realization.states);
      CHECK(ref.cost == t.total_cost);
      CHECK(ref.prices == t.prices);
      CHECK(run_greedy(inst, w.realization) == t);
    }
  }
}

TEST_CASE("greedy reads only marginals and evaluated states") {
  for (const Instance& inst : PerfectInstances(80, 9000)) {
    const Instance twin = IndependentElementsTwin(inst);
    REQUIRE(marginals(twin) == marginals(inst));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Realization real = sample_realization(inst, seed);
      std::vector<ItemId> revealed;
      auto reveal = [&](ItemId f) {
        revealed.push_back(f);
        return real.states[f];
      };
      const GreedyTrace t = run_greedy(greedy_model(inst), reveal);
      std::vector<ItemId> order;
      for (const auto& s : t.steps) order.push_back(s.item);
      CHECK(revealed == order);

      revealed.clear();
      CHECK(run_greedy(greedy_model(twin), reveal) == t);
    }
  }
}

TEST_CASE("expected cost equals expected total price") {
  for (const Instance& inst : PerfectInstances(100, 7000)) {
    Rational by_items, by_prices;
    for (const auto& w : enumerate_realizations(inst, 1000)) {
      const GreedyTrace t = run_greedy(inst, w.realization);
      by_items += w.prob * t.total_cost;
      for (const Rational& p : t.prices) by_prices += w.prob * p;
    }
    CHECK(by_items == by_prices);
  }
}

}  // namespace
}  // namespace sscover
