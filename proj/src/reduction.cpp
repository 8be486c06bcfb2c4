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

#include "sscover/reduction.hpp"

#include <algorithm>
#include <map>

namespace sscover {

BipartiteGraph::BipartiteGraph(std::size_t item_count, std::size_t ground_size,
                               std::vector<Edge> edges)
    : edges_(std::move(edges)),
      self_edges_(item_count),
      element_edges_(ground_size) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    self_edges_[edges_[i].item].insert(i);
    element_edges_[edges_[i].element].insert(i);
  }
}

std::optional<std::size_t> BipartiteGraph::index_of(const Edge& edge) const {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), edge);
  if (it == edges_.end() || *it != edge) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

BipartiteGraph induced_bipartite_graph(const MarginalTable& q) {
  std::vector<Edge> edges;
  for (ItemId f = 0; f < q.item_count(); ++f) {
    for (ElementId e = 0; e < q.ground_size(); ++e) {
      if (q.at(f, e).sign() > 0) edges.push_back(Edge{f, e});
    }
  }
  return BipartiteGraph(q.item_count(), q.ground_size(), std::move(edges));
}

BipartiteGraph induced_bipartite_graph(const Instance& inst) {
  return induced_bipartite_graph(marginals(inst));
}

ElementSubset mu(ItemId item, const ElementSubset& state,
                 const BipartiteGraph& graph) {
  ElementSubset image = graph.self_edges(item);
  state.for_each([&](std::size_t e) {
    if (e < graph.ground_size()) image |= graph.element_edges(e);
  });
  return image;
}

ReducedInstance reduce_instance(const Instance& inst) {
  ReducedInstance reduced;
  reduced.graph = induced_bipartite_graph(inst);
  reduced.source = inst;
  reduced.instance.ground_size = reduced.graph.edge_count();
  reduced.instance.items.reserve(inst.items.size());
  for (const Item& item : inst.items) {
    std::map<ElementSubset, Rational> images;
    for (const StateOutcome& out : item.dist.support()) {
      images[mu(item.id, out.state, reduced.graph)] += out.prob;
    }
    std::vector<StateOutcome> support;
    support.reserve(images.size());
    for (auto& [state, prob] : images) support.push_back({state, prob});
    reduced.instance.items.push_back(
        Item{item.id, item.cost, StateDistribution(std::move(support))});
  }
  reduced.model = GreedyModel{reduced.graph.edge_count(), inst.costs(),
                              reduced_marginals(marginals(inst), reduced.graph)};
  return reduced;
}

MarginalTable reduced_marginals(const MarginalTable& source_q,
                                const BipartiteGraph& graph) {
  MarginalTable m(source_q.item_count(), graph.edge_count());
  for (ItemId f = 0; f < source_q.item_count(); ++f) {
    for (std::size_t i = 0; i < graph.edge_count(); ++i) {
      const Edge& edge = graph.edges()[i];
      m.at(f, i) = edge.item == f ? Rational(1) : source_q.at(f, edge.element);
    }
  }
  return m;
}

Realization map_realization(const ReducedInstance& reduced,
                            const Realization& real) {
  Realization out;
  out.states.reserve(real.states.size());
  for (std::size_t k = 0; k < real.states.size(); ++k) {
    out.states.push_back(mu(k, real.states[k], reduced.graph));
  }
  return out;
}

ImperfectSolution solve_imperfect(const ReducedInstance& reduced,
                                  const Realization& real) {
  GreedyTrace trace = run_greedy(reduced.model, [&](ItemId item) {
    return mu(item, real.states[item], reduced.graph);
  });
  ImperfectSolution sol{trace.evaluated, greedy_cost(trace), std::move(trace)};
  return sol;
}

ImperfectSolution solve_imperfect(const Instance& inst,
                                  const Realization& real) {
  return solve_imperfect(reduce_instance(inst), real);
}

}  // namespace sscover
