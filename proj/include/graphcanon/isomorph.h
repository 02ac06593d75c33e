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

#ifndef GRAPHCANON_ISOMORPH_H_
#define GRAPHCANON_ISOMORPH_H_

#include <cstdint>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "graphcanon/graph.h"
#include "graphcanon/signatures.h"

namespace graphcanon {

// permutation[v] is the vertex of g2 matched to vertex v of g1.
struct Matched {
  std::vector<VertexId> permutation;
};

// Some label occurs more than once within one of the graphs; the matcher
// does not guess among ties.
struct Ambiguous {
  std::vector<std::vector<VertexId>> groups_g1;
  std::vector<std::vector<VertexId>> groups_g2;
};

struct NonIsomorphic {
  std::string reason;
  // First rank at which the sorted label sequences differ, when that is the
  // witness.
  std::optional<std::size_t> rank;
};

struct MatchResult {
  std::variant<Matched, Ambiguous, NonIsomorphic> outcome;
  // Set only for Matched, after the edge-preservation check passed.
  bool verified = false;
  double millis = 0.0;

  bool matched() const { return std::holds_alternative<Matched>(outcome); }
  bool ambiguous() const { return std::holds_alternative<Ambiguous>(outcome); }
  bool non_isomorphic() const {
    return std::holds_alternative<NonIsomorphic>(outcome);
  }
  // "matched" | "ambiguous" | "non_isomorphic"
  std::string OutcomeName() const;
};

// Labels both graphs (shared dictionary), sorts the 2n labels and pairs the
// vertices by rank. Order of checks:
//   1. sizes differ, or sorted label sequences differ -> NonIsomorphic;
//   2. a label repeats within either graph -> Ambiguous;
//   3. otherwise the rank pairing is edge-verified; it is returned as
//      Matched only if verification passes. With unique labels a failed
//      check proves the graphs non-isomorphic.
// m defaults to DefaultModulus(g1) for depth 3.
MatchResult MatchBySignatures(const Graph& g1, const Graph& g2, Depth depth,
                              std::optional<std::uint32_t> m = std::nullopt);

// True iff (u, v) in E(g1) <=> (pi[u], pi[v]) in E(g2). O(|E| log deg).
bool VerifyIsomorphism(const Graph& g1, const Graph& g2,
                       std::span<const VertexId> pi);

inline constexpr VertexId kBruteForceMaxVertices = 10;

// Exhaustive backtracking with degree pruning; candidates are tried in
// increasing vertex order, so the identity is found first when it works.
// Throws ParameterError above kBruteForceMaxVertices vertices.
std::optional<std::vector<VertexId>> BruteForceIsomorphic(const Graph& g1,
                                                          const Graph& g2);

// Same search restricted to maps sending vertex 0 to vertex 0, i.e. rooted
// isomorphism of RootedSubgraph graphs.
std::optional<std::vector<VertexId>> BruteForceRootedIsomorphic(
    const Graph& g1, const Graph& g2);

enum class SearchStatus { kIsomorphic, kNotIsomorphic, kGaveUp };

struct RootedSearchResult {
  SearchStatus status = SearchStatus::kGaveUp;
  // Witness map with permutation[0] == 0; set only for kIsomorphic.
  std::vector<VertexId> permutation;
  std::uint64_t nodes = 0;
};

// Rooted isomorphism (vertex 0 to vertex 0) for graphs of any size. Color
// refinement on the disjoint union rejects most non-isomorphic pairs and
// restricts candidates; backtracking then builds the map in BFS order from
// the root. The search stops after `node_budget` extension attempts and
// reports kGaveUp. Every kIsomorphic result carries an explicit witness.
RootedSearchResult RootedIsomorphismSearch(const Graph& g1, const Graph& g2,
                                           std::uint64_t node_budget);

}  // namespace graphcanon

#endif  // GRAPHCANON_ISOMORPH_H_
