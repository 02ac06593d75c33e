// Copyright 2026 The graphcanon Authors.
//
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

#ifndef GRAPHCANON_GRAPH_H_
#define GRAPHCANON_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "graphcanon/rng.h"

namespace graphcanon {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Immutable simple undirected graph on vertices 0..n-1 in CSR form. Every
// adjacency list is strictly increasing and the adjacency relation is
// symmetric. Instances are safe to share across threads.
class Graph {
 public:
  // The graph with no vertices.
  Graph() : offsets_{0} {}

  static Graph Empty(VertexId n);

  // Builds a graph from an arbitrary edge list. Each edge may appear in either
  // orientation and more than once; duplicates collapse. Throws
  // ParameterError on self-loops or out-of-range endpoints.
  static Graph FromEdges(VertexId n, std::span<const Edge> edges);

  VertexId num_vertices() const { return n_; }
  std::uint64_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::vector<std::uint32_t> Degrees() const;

  // O(log deg(u)).
  bool HasEdge(VertexId u, VertexId v) const;

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> Edges() const;

  // Verifies symmetry, simplicity and sortedness. Throws std::logic_error on
  // violation; used by tests and by constructors in debug builds.
  void CheckInvariants() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  VertexId n_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> adjacency_;
};

// Induced ball around a vertex. Local id 0 is the root; original_ids maps
// local ids back to the parent graph, in BFS discovery order.
struct RootedSubgraph {
  VertexId root = 0;
  Graph graph;
  std::vector<VertexId> original_ids;

  friend bool operator==(const RootedSubgraph&, const RootedSubgraph&) = default;
};

// G(n, p) by geometric skipping over the linearized pair index: expected
// O(n + n^2 p) work.
Graph GenerateErdosRenyi(VertexId n, double p, RngSeed seed);

// Edge set union / symmetric difference. Throws ParameterError on size
// mismatch.
Graph UnionGraph(const Graph& g1, const Graph& g2);
Graph XorGraph(const Graph& g1, const Graph& g2);

// Relabels vertex v as pi[v]: (pi[u], pi[v]) is an edge of the result iff
// (u, v) is an edge of g.
Graph Permute(const Graph& g, std::span<const VertexId> pi);

// Throws ParameterError unless pi is a bijection on 0..n-1.
void ValidatePermutation(std::span<const VertexId> pi, VertexId n);
std::vector<VertexId> InvertPermutation(std::span<const VertexId> pi);
std::vector<VertexId> RandomPermutation(VertexId n, Rng& rng);

// Induced subgraph on all vertices within distance `radius` of v.
RootedSubgraph Neighborhood(const Graph& g, VertexId v, std::uint32_t radius);

// Reusable scratch space for repeated ball extraction on one graph. Each
// call costs O(size of the ball plus the degrees of its vertices) instead of
// O(n).
class BallExtractor {
 public:
  explicit BallExtractor(const Graph& g);

  RootedSubgraph Extract(VertexId v, std::uint32_t radius);

  // Vertices within distance `radius`, in BFS order, root first.
  std::span<const VertexId> Ball(VertexId v, std::uint32_t radius);

 private:
  const Graph& g_;
  std::vector<std::uint32_t> stamp_;
  std::vector<VertexId> local_id_;
  std::vector<VertexId> ball_;
  std::uint32_t epoch_ = 0;
};

}  // namespace graphcanon

#endif  // GRAPHCANON_GRAPH_H_
