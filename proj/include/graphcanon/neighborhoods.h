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

#ifndef GRAPHCANON_NEIGHBORHOODS_H_
#define GRAPHCANON_NEIGHBORHOODS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graphcanon/graph.h"

namespace graphcanon {

// Vertex classes used by the 2-neighborhood collision search. All sets are
// sorted.
struct GoodVertexPartition {
  // |deg(v) - (n-1)p| >= threshold.
  std::vector<VertexId> atypical;
  // Not atypical, no atypical neighbor, tree 2-neighborhood.
  std::vector<VertexId> good;
  // 2-neighborhood is not a tree.
  std::vector<VertexId> non_tree;
  VertexId n = 0;
  double p = 0.0;
  // 3 * sqrt(np * ln ln n).
  double threshold = 0.0;
};

// Edge count equals vertex count minus one. The subgraph is assumed to be
// connected, which holds for every extracted neighborhood.
bool IsTree(const RootedSubgraph& sub);

// Throws ParameterError when n < 16 (ln ln n would not be positive enough
// for the threshold to make sense) or p is not a probability.
GoodVertexPartition ClassifyGood(const Graph& g, double p);

// AHU encoding of the tree rooted at `sub.root`: each vertex is "(" + the
// sorted codes of its children + ")". Equal codes iff isomorphic rooted
// trees. Throws ParameterError for non-trees.
std::string AhuCode(const RootedSubgraph& sub);

enum class CollisionMethod {
  // Good vertices with equal degree profiles (AHU-confirmed).
  kDegreeProfileTree,
  // Tree 2-neighborhoods outside the good set, AHU-confirmed.
  kAhu,
  // Small non-tree 2-neighborhoods, confirmed by rooted brute force.
  kBruteForce,
  // Larger non-tree 2-neighborhoods, confirmed by RootedIsomorphismSearch
  // with an explicit witness map.
  kRootedSearch,
};

// Extension attempts allowed per pairwise rooted search.
inline constexpr std::uint64_t kRootedSearchBudget = 200000;

const char* CollisionMethodName(CollisionMethod method);

// Vertices whose rooted 2-neighborhoods are pairwise isomorphic.
struct CollisionGroup {
  std::vector<VertexId> vertices;
  CollisionMethod method = CollisionMethod::kAhu;
};

struct CollisionReport {
  std::vector<CollisionGroup> groups;
  std::size_t good_count = 0;
  // Distinct degree profiles among good vertices.
  std::size_t profile_count = 0;
  // Candidate non-tree vertices left unclassified because a rooted search
  // ran out of budget.
  std::size_t skipped_large = 0;

  bool collision_found() const { return !groups.empty(); }
  std::size_t PairCount() const;
  // Every unordered pair inside every group.
  std::vector<std::pair<VertexId, VertexId>> Pairs() const;
};

// Buckets all vertices by degree profile (a necessary condition for
// isomorphic rooted 2-neighborhoods) and confirms every bucket exactly:
// tree neighborhoods by AHU code, non-tree neighborhoods by rooted brute
// force (at most kBruteForceMaxVertices vertices) or a budgeted rooted
// search. Searches that exhaust their budget are skipped, so the report may
// under-count but never contains an unverified pair.
CollisionReport FindTwoNeighborhoodCollisions(const Graph& g, double p);

enum class ProfileScope { kGoodVertices, kAllVertices };

struct ProfileCount {
  std::size_t count = 0;
  // exp(4 sqrt(np ln ln n) ln(np)); log_bound avoids overflow.
  double bound = 0.0;
  double log_bound = 0.0;
};

// Number of distinct degree profiles in the chosen scope together with the
// deterministic bound for good vertices.
ProfileCount CountDegreeProfiles(const Graph& g, double p,
                                 ProfileScope scope = ProfileScope::kGoodVertices);

}  // namespace graphcanon

#endif  // GRAPHCANON_NEIGHBORHOODS_H_
