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

#include "graphcanon/isomorph.h"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

#include "graphcanon/errors.h"
#include "graphcanon/refinement.h"

namespace graphcanon {
namespace {

std::vector<VertexId> SortedByLabel(const LabelTable& labels) {
  std::vector<VertexId> order(labels.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    auto cmp = LabelTable::Compare(labels, a, labels, b);
    return cmp != 0 ? cmp < 0 : a < b;
  });
  return order;
}

std::vector<std::vector<VertexId>> DuplicateGroups(const LabelTable& labels,
                                                   std::span<const VertexId> order) {
  std::vector<std::vector<VertexId>> groups;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && labels.SameLabel(order[i], order[j])) ++j;
    if (j - i >= 2) groups.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(i),
                                        order.begin() + static_cast<std::ptrdiff_t>(j));
    i = j;
  }
  return groups;
}

class Backtracker {
 public:
  Backtracker(const Graph& g1, const Graph& g2, bool pin_root)
      : g1_(g1), g2_(g2), pin_root_(pin_root),
        map_(g1.num_vertices()), used_(g2.num_vertices(), false) {}

  std::optional<std::vector<VertexId>> Run() {
    const VertexId n = g1_.num_vertices();
    if (n != g2_.num_vertices() || g1_.num_edges() != g2_.num_edges()) {
      return std::nullopt;
    }
    std::vector<std::uint32_t> d1 = g1_.Degrees();
    std::vector<std::uint32_t> d2 = g2_.Degrees();
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) return std::nullopt;
    if (Extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool Extend(VertexId v) {
    if (v == g1_.num_vertices()) return true;
    for (VertexId w = 0; w < g2_.num_vertices(); ++w) {
      if (used_[w] || g1_.degree(v) != g2_.degree(w)) continue;
      if (pin_root_ && (v == 0) != (w == 0)) continue;
      bool consistent = true;
      for (VertexId u = 0; u < v && consistent; ++u) {
        consistent = g1_.HasEdge(u, v) == g2_.HasEdge(map_[u], w);
      }
      if (!consistent) continue;
      map_[v] = w;
      used_[w] = true;
      if (Extend(v + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  const Graph& g1_;
  const Graph& g2_;
  bool pin_root_;
  std::vector<VertexId> map_;
  std::vector<bool> used_;
};

std::optional<std::vector<VertexId>> RunBruteForce(const Graph& g1,
                                                   const Graph& g2,
                                                   bool pin_root) {
  if (g1.num_vertices() > kBruteForceMaxVertices ||
      g2.num_vertices() > kBruteForceMaxVertices) {
    throw ParameterError("brute-force isomorphism is limited to " +
                         std::to_string(kBruteForceMaxVertices) + " vertices");
  }
  return Backtracker(g1, g2, pin_root).Run();
}

class RootedSearch {
 public:
  RootedSearch(const Graph& g1, const Graph& g2, std::uint64_t budget)
      : g1_(g1), g2_(g2), budget_(budget) {}

  RootedSearchResult Run() {
    RootedSearchResult result;
    result.status = SearchStatus::kNotIsomorphic;
    const VertexId n = g1_.num_vertices();
    if (n != g2_.num_vertices() || g1_.num_edges() != g2_.num_edges()) return result;
    if (n == 0) return result;
    if (!ComputeColors()) return result;
    BuildOrder();
    map_.assign(n, kUnmapped);
    inverse_.assign(n, kUnmapped);
    const bool found = Extend(0);
    result.nodes = nodes_;
    if (found) {
      result.status = SearchStatus::kIsomorphic;
      result.permutation = map_;
    } else if (gave_up_) {
      result.status = SearchStatus::kGaveUp;
    }
    return result;
  }

 private:
  static constexpr VertexId kUnmapped = static_cast<VertexId>(-1);

  // Stable refinement of the disjoint union with the two roots marked.
  // Returns false when the color histograms of the two sides differ.
  bool ComputeColors() {
    const VertexId n = g1_.num_vertices();
    std::vector<Edge> edges = g1_.Edges();
    for (const auto& [u, v] : g2_.Edges()) edges.push_back({u + n, v + n});
    const Graph both = Graph::FromEdges(2 * n, edges);
    std::vector<std::uint32_t> initial(2 * n, 0);
    initial[0] = initial[n] = 1;
    colors_ = Refine(both, initial).colors;
    std::vector<std::uint32_t> h1(colors_.begin(), colors_.begin() + n);
    std::vector<std::uint32_t> h2(colors_.begin() + n, colors_.end());
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    return h1 == h2;
  }

  void BuildOrder() {
    const VertexId n = g1_.num_vertices();
    std::vector<bool> seen(n, false);
    for (VertexId start = 0; start < n; ++start) {
      if (seen[start]) continue;
      seen[start] = true;
      const std::size_t first = order_.size();
      order_.push_back(start);
      for (std::size_t i = first; i < order_.size(); ++i) {
        for (VertexId u : g1_.neighbors(order_[i])) {
          if (!seen[u]) {
            seen[u] = true;
            order_.push_back(u);
          }
        }
      }
    }
  }

  bool Consistent(VertexId v, VertexId w) const {
    const VertexId n = g1_.num_vertices();
    if (colors_[v] != colors_[w + n] || inverse_[w] != kUnmapped) return false;
    std::uint32_t mapped_v = 0, mapped_w = 0;
    for (VertexId u : g1_.neighbors(v)) {
      if (map_[u] == kUnmapped) continue;
      ++mapped_v;
      if (!g2_.HasEdge(map_[u], w)) return false;
    }
    for (VertexId x : g2_.neighbors(w)) mapped_w += inverse_[x] != kUnmapped;
    return mapped_v == mapped_w;
  }

  bool Extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const VertexId v = order_[depth];
    // Candidates: neighbors of an already mapped neighbor, else everything.
    std::span<const VertexId> pool;
    std::vector<VertexId> all;
    VertexId anchor = kUnmapped;
    for (VertexId u : g1_.neighbors(v)) {
      if (map_[u] != kUnmapped) {
        anchor = map_[u];
        break;
      }
    }
    if (v == 0) {
      all = {0};
      pool = all;
    } else if (anchor != kUnmapped) {
      pool = g2_.neighbors(anchor);
    } else {
      all.resize(g2_.num_vertices());
      std::iota(all.begin(), all.end(), VertexId{0});
      pool = all;
    }
    for (VertexId w : pool) {
      if (++nodes_ > budget_) {
        gave_up_ = true;
        return false;
      }
      if (!Consistent(v, w)) continue;
      map_[v] = w;
      inverse_[w] = v;
      if (Extend(depth + 1)) return true;
      map_[v] = kUnmapped;
      inverse_[w] = kUnmapped;
      if (gave_up_) return false;
    }
    return false;
  }

  const Graph& g1_;
  const Graph& g2_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool gave_up_ = false;
  std::vector<std::uint32_t> colors_;
  std::vector<VertexId> order_;
  std::vector<VertexId> map_;
  std::vector<VertexId> inverse_;
};

}  // namespace

std::string MatchResult::OutcomeName() const {
  if (matched()) return "matched";
  if (ambiguous()) return "ambiguous";
  return "non_isomorphic";
}

bool VerifyIsomorphism(const Graph& g1, const Graph& g2,
                       std::span<const VertexId> pi) {
  if (g1.num_vertices() != g2.num_vertices()) return false;
  ValidatePermutation(pi, g1.num_vertices());
  if (g1.num_edges() != g2.num_edges()) return false;
  // pi is injective on edges, so equal edge counts plus one direction of
  // containment gives equality.
  for (VertexId u = 0; u < g1.num_vertices(); ++u) {
    for (VertexId v : g1.neighbors(u)) {
      if (u < v && !g2.HasEdge(pi[u], pi[v])) return false;
    }
  }
  return true;
}

MatchResult MatchBySignatures(const Graph& g1, const Graph& g2, Depth depth,
                              std::optional<std::uint32_t> m) {
  const auto start = std::chrono::steady_clock::now();
  MatchResult result;
  auto finish = [&]() -> MatchResult {
    result.millis = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return result;
  };
  if (g1.num_vertices() != g2.num_vertices()) {
    result.outcome = NonIsomorphic{"vertex counts differ", std::nullopt};
    return finish();
  }
  const Graph* graphs[] = {&g1, &g2};
  const std::uint32_t modulus =
      depth == Depth::kThree ? m.value_or(DefaultModulus(g1)) : 0;
  std::vector<LabelTable> tables = ComputeLabelTables(graphs, depth, modulus);
  const std::vector<VertexId> order1 = SortedByLabel(tables[0]);
  const std::vector<VertexId> order2 = SortedByLabel(tables[1]);

  for (std::size_t rank = 0; rank < order1.size(); ++rank) {
    if (LabelTable::Compare(tables[0], order1[rank], tables[1], order2[rank]) != 0) {
      result.outcome = NonIsomorphic{"sorted label sequences differ", rank};
      return finish();
    }
  }
  Ambiguous ties{DuplicateGroups(tables[0], order1),
                 DuplicateGroups(tables[1], order2)};
  if (!ties.groups_g1.empty() || !ties.groups_g2.empty()) {
    result.outcome = std::move(ties);
    return finish();
  }
  std::vector<VertexId> pi(g1.num_vertices());
  for (std::size_t rank = 0; rank < order1.size(); ++rank) {
    pi[order1[rank]] = order2[rank];
  }
  if (!VerifyIsomorphism(g1, g2, pi)) {
    result.outcome =
        NonIsomorphic{"unique labels but the forced matching breaks an edge",
                      std::nullopt};
    return finish();
  }
  result.outcome = Matched{std::move(pi)};
  result.verified = true;
  return finish();
}

std::optional<std::vector<VertexId>> BruteForceIsomorphic(const Graph& g1,
                                                          const Graph& g2) {
  return RunBruteForce(g1, g2, /*pin_root=*/false);
}

std::optional<std::vector<VertexId>> BruteForceRootedIsomorphic(
    const Graph& g1, const Graph& g2) {
  return RunBruteForce(g1, g2, /*pin_root=*/true);
}

RootedSearchResult RootedIsomorphismSearch(const Graph& g1, const Graph& g2,
                                           std::uint64_t node_budget) {
  return RootedSearch(g1, g2, node_budget).Run();
}

}  // namespace graphcanon
