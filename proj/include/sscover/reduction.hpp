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

// Reduction from imperfect to perfect coverage.
//
// The induced bipartite graph has an edge (F, e) whenever q_F(e) > 0. The
// reduced instance keeps the items and costs and replaces the ground set by
// the edges. A source state B of item F becomes
//   mu_F(B) = {(G, e) in E : G == F or e in B},
// so F always covers its own edges and the reduced marginals are
//   m_F((G, e)) = 1 if G == F, q_F(e) otherwise.
// An item subset is a valid cover of the source realization iff it covers
// every edge under the mapped realization.

#ifndef SSCOVER_REDUCTION_HPP_
#define SSCOVER_REDUCTION_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "sscover/greedy.hpp"
#include "sscover/instance.hpp"

namespace sscover {

struct Edge {
  ItemId item = 0;
  ElementId element = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  // Edges are sorted item-major, element-minor.
  BipartiteGraph(std::size_t item_count, std::size_t ground_size,
                 std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t item_count() const { return self_edges_.size(); }
  std::size_t ground_size() const { return element_edges_.size(); }

  std::optional<std::size_t> index_of(const Edge& edge) const;
  // Indices of the edges (item, *).
  const ElementSubset& self_edges(ItemId item) const {
    return self_edges_[item];
  }
  // Indices of the edges (*, e).
  const ElementSubset& element_edges(ElementId e) const {
    return element_edges_[e];
  }

 private:
  std::vector<Edge> edges_;
  std::vector<ElementSubset> self_edges_;
  std::vector<ElementSubset> element_edges_;
};

BipartiteGraph induced_bipartite_graph(const MarginalTable& q);
BipartiteGraph induced_bipartite_graph(const Instance& inst);

// mu_F(state) as a set of edge indices.
ElementSubset mu(ItemId item, const ElementSubset& state,
                 const BipartiteGraph& graph);

struct ReducedInstance {
  Instance instance;
  BipartiteGraph graph;
  Instance source;
  // What greedy on the reduced instance knows: source costs and the reduced
  // marginals computed from the source marginals.
  GreedyModel model;
};

// Pushes each item's distribution forward through mu, merging source states
// with equal images. Items without edges get the point mass on the empty set.
ReducedInstance reduce_instance(const Instance& inst);

// Reduced marginals straight from the source marginals, without touching any
// distribution.
MarginalTable reduced_marginals(const MarginalTable& source_q,
                                const BipartiteGraph& graph);

Realization map_realization(const ReducedInstance& reduced,
                            const Realization& real);

struct ImperfectSolution {
  ItemSet chosen;
  Rational cost;
  GreedyTrace trace;
};

// Runs greedy on the reduced instance, mapping each source state through mu
// only when greedy evaluates that item.
ImperfectSolution solve_imperfect(const ReducedInstance& reduced,
                                  const Realization& real);
ImperfectSolution solve_imperfect(const Instance& inst,
                                  const Realization& real);

}  // namespace sscover

#endif  // SSCOVER_REDUCTION_HPP_
