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

#include "graphcanon/graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "graphcanon/errors.h"

namespace graphcanon {
namespace {

// Builds CSR from undirected edges already known to be in range and
// loop-free; sorts and deduplicates every adjacency list.
void BuildFromHalfEdges(VertexId n, std::span<const Edge> edges,
                         std::vector<std::uint64_t>& offsets,
                         std::vector<VertexId>& adjacency) {
  offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  adjacency.resize(offsets[n]);
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    adjacency[cursor[u]++] = v;
    adjacency[cursor[v]++] = u;
  }
  // Sort each list, then compact out duplicates in place.
  std::uint64_t write = 0;
  for (VertexId v = 0; v < n; ++v) {
    auto first = adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    auto last = adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(first, last);
    auto unique_end = std::unique(first, last);
    offsets[v] = write;
    for (auto it = first; it != unique_end; ++it) adjacency[write++] = *it;
  }
  offsets[n] = write;
  adjacency.resize(write);
  adjacency.shrink_to_fit();
}

}  // namespace

Graph Graph::Empty(VertexId n) {
  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  return g;
}

Graph Graph::FromEdges(VertexId n, std::span<const Edge> edges) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ParameterError("edge (" + std::to_string(u) + ", " +
                           std::to_string(v) + ") out of range for n = " +
                           std::to_string(n));
    }
    if (u == v) {
      throw ParameterError("self-loop at vertex " + std::to_string(u));
    }
  }
  Graph g;
  g.n_ = n;
  BuildFromHalfEdges(n, edges, g.offsets_, g.adjacency_);
#ifndef NDEBUG
  g.CheckInvariants();
#endif
  return g;
}

std::vector<std::uint32_t> Graph::Degrees() const {
  std::vector<std::uint32_t> degrees(n_);
  for (VertexId v = 0; v < n_; ++v) degrees[v] = degree(v);
  return degrees;
}

bool Graph::HasEdge(VertexId u, VertexId v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges());
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

void Graph::CheckInvariants() const {
  if (offsets_.size() != static_cast<std::size_t>(n_) + 1 ||
      offsets_.back() != adjacency_.size() || adjacency_.size() % 2 != 0) {
    throw std::logic_error("graph: inconsistent CSR sizes");
  }
  for (VertexId v = 0; v < n_; ++v) {
    auto nbrs = neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] >= n_) throw std::logic_error("graph: neighbor out of range");
      if (nbrs[i] == v) throw std::logic_error("graph: self-loop");
      if (i > 0 && nbrs[i - 1] >= nbrs[i]) {
        throw std::logic_error("graph: adjacency not strictly increasing");
      }
      if (!HasEdge(nbrs[i], v)) throw std::logic_error("graph: asymmetric");
    }
  }
}

Graph GenerateErdosRenyi(VertexId n, double p, RngSeed seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("edge probability must lie in [0, 1], got " +
                         std::to_string(p));
  }
  std::vector<Edge> edges;
  if (n < 2 || p == 0.0) return Graph::Empty(n);
  if (p == 1.0) {
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (VertexId v = 1; v < n; ++v) {
      for (VertexId w = 0; w < v; ++w) edges.emplace_back(w, v);
    }
    return Graph::FromEdges(n, edges);
  }
  const double expected = 0.5 * static_cast<double>(n) * (n - 1) * p;
  edges.reserve(static_cast<std::size_t>(expected + 4.0 * std::sqrt(expected) + 16));

  // Pairs (w, v) with w < v are enumerated row by row; the gap to the next
  // present pair is geometric with parameter p.
  Rng rng(seed);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const std::int64_t nn = n;
  while (v < nn) {
    const double skip = std::floor(std::log1p(-rng.Uniform01()) / log_q);
    if (skip > 9.0e15) break;  // beyond every remaining pair
    w += 1 + static_cast<std::int64_t>(skip);
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) {
      edges.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(v));
    }
  }
  return Graph::FromEdges(n, edges);
}

namespace {

void CheckSameSize(const Graph& g1, const Graph& g2) {
  if (g1.num_vertices() != g2.num_vertices()) {
    throw ParameterError("graph sizes differ: " +
                         std::to_string(g1.num_vertices()) + " vs " +
                         std::to_string(g2.num_vertices()));
  }
}

}  // namespace

Graph UnionGraph(const Graph& g1, const Graph& g2) {
  CheckSameSize(g1, g2);
  std::vector<Edge> edges = g1.Edges();
  std::vector<Edge> more = g2.Edges();
  edges.insert(edges.end(), more.begin(), more.end());
  return Graph::FromEdges(g1.num_vertices(), edges);
}

Graph XorGraph(const Graph& g1, const Graph& g2) {
  CheckSameSize(g1, g2);
  const std::vector<Edge> a = g1.Edges();
  const std::vector<Edge> b = g2.Edges();
  std::vector<Edge> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(diff));
  return Graph::FromEdges(g1.num_vertices(), diff);
}

void ValidatePermutation(std::span<const VertexId> pi, VertexId n) {
  if (pi.size() != n) {
    throw ParameterError("permutation has length " + std::to_string(pi.size()) +
                         ", expected " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (VertexId image : pi) {
    if (image >= n || seen[image]) {
      throw ParameterError("map is not a bijection on 0..n-1");
    }
    seen[image] = true;
  }
}

std::vector<VertexId> InvertPermutation(std::span<const VertexId> pi) {
  std::vector<VertexId> inverse(pi.size());
  for (VertexId v = 0; v < pi.size(); ++v) inverse[pi[v]] = v;
  return inverse;
}

std::vector<VertexId> RandomPermutation(VertexId n, Rng& rng) {
  std::vector<VertexId> pi(n);
  std::iota(pi.begin(), pi.end(), VertexId{0});
  rng.Shuffle(std::span<VertexId>(pi));
  return pi;
}

Graph Permute(const Graph& g, std::span<const VertexId> pi) {
  ValidatePermutation(pi, g.num_vertices());
  std::vector<Edge> edges = g.Edges();
  for (auto& [u, v] : edges) {
    u = pi[u];
    v = pi[v];
  }
  return Graph::FromEdges(g.num_vertices(), edges);
}

BallExtractor::BallExtractor(const Graph& g)
    : g_(g), stamp_(g.num_vertices(), 0), local_id_(g.num_vertices(), 0) {}

std::span<const VertexId> BallExtractor::Ball(VertexId v,
                                              std::uint32_t radius) {
  if (v >= g_.num_vertices()) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range");
  }
  if (++epoch_ == 0) {  // wrapped: reset stamps
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  ball_.clear();
  ball_.push_back(v);
  stamp_[v] = epoch_;
  local_id_[v] = 0;
  std::size_t level_begin = 0;
  for (std::uint32_t depth = 0; depth < radius; ++depth) {
    const std::size_t level_end = ball_.size();
    if (level_begin == level_end) break;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (VertexId u : g_.neighbors(ball_[i])) {
        if (stamp_[u] != epoch_) {
          stamp_[u] = epoch_;
          local_id_[u] = static_cast<VertexId>(ball_.size());
          ball_.push_back(u);
        }
      }
    }
    level_begin = level_end;
  }
  return ball_;
}

RootedSubgraph BallExtractor::Extract(VertexId v, std::uint32_t radius) {
  Ball(v, radius);
  std::vector<Edge> edges;
  for (VertexId local = 0; local < ball_.size(); ++local) {
    for (VertexId u : g_.neighbors(ball_[local])) {
      if (stamp_[u] == epoch_ && local < local_id_[u]) {
        edges.emplace_back(local, local_id_[u]);
      }
    }
  }
  RootedSubgraph sub;
  sub.root = 0;
  sub.graph = Graph::FromEdges(static_cast<VertexId>(ball_.size()), edges);
  sub.original_ids = ball_;
  return sub;
}

RootedSubgraph Neighborhood(const Graph& g, VertexId v, std::uint32_t radius) {
  BallExtractor extractor(g);
  return extractor.Extract(v, radius);
}

}  // namespace graphcanon
