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
#include <cmath>
#include <numeric>
#include <vector>

#include "graphcanon/errors.h"
#include "gtest/gtest.h"
#include "test_graphs.h"

namespace graphcanon {
namespace {

constexpr std::uint64_t kDefaultBudget = 1000000;

using ::graphcanon::testing::CompleteGraph;
using ::graphcanon::testing::CycleGraph;
using ::graphcanon::testing::MakeGraph;
using ::graphcanon::testing::PathGraph;

// Tries all n! maps; independent of the library's backtracker.
bool ExhaustiveIsomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<VertexId> pi(a.num_vertices());
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : a.Edges()) {
      if (!b.HasEdge(pi[u], pi[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

Graph TwoTriangles() {
  return MakeGraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

TEST(MatchBySignaturesTest, PermutedCopyIsMatched) {
  const VertexId n = 2000;
  const Graph g = GenerateErdosRenyi(n, 3 * std::log(double{n}) / n, {60, 0});
  Rng rng({60, 1});
  const auto pi = RandomPermutation(n, rng);
  const MatchResult r = MatchBySignatures(g, Permute(g, pi), Depth::kThree);
  ASSERT_TRUE(r.matched()) << r.OutcomeName();
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(std::get<Matched>(r.outcome).permutation, pi);
  EXPECT_EQ(r.OutcomeName(), "matched");
}

TEST(MatchBySignaturesTest, DifferentDegreesAreNonIsomorphic) {
  Graph k4_minus = MakeGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const MatchResult r = MatchBySignatures(CompleteGraph(4), k4_minus, Depth::kThree, 3);
  EXPECT_TRUE(r.non_isomorphic());
  EXPECT_FALSE(r.verified);
  EXPECT_EQ(r.OutcomeName(), "non_isomorphic");
  EXPECT_TRUE(std::get<NonIsomorphic>(r.outcome).rank.has_value());
  EXPECT_TRUE(MatchBySignatures(PathGraph(4), PathGraph(5), Depth::kTwo).non_isomorphic());
}

TEST(MatchBySignaturesTest, RegularGraphsAreAmbiguous) {
  for (std::uint32_t m = 3; m <= 6; ++m) {
    const MatchResult r = MatchBySignatures(CycleGraph(6), TwoTriangles(), Depth::kThree, m);
    EXPECT_TRUE(r.ambiguous()) << m;
    EXPECT_FALSE(r.verified);
    const auto& groups = std::get<Ambiguous>(r.outcome);
    EXPECT_EQ(groups.groups_g1.size(), 1u);
    EXPECT_EQ(groups.groups_g1[0].size(), 6u);
  }
  EXPECT_TRUE(MatchBySignatures(CycleGraph(6), TwoTriangles(), Depth::kTwo).ambiguous());
}

TEST(VerifyIsomorphismTest, Examples) {
  const Graph g = GenerateErdosRenyi(30, 0.2, {61, 0});
  std::vector<VertexId> id(30);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_TRUE(VerifyIsomorphism(g, g, id));
  const std::vector<VertexId> swap = {2, 1, 0};
  EXPECT_TRUE(VerifyIsomorphism(PathGraph(3), PathGraph(3), swap));
  const std::vector<VertexId> id3 = {0, 1, 2};
  EXPECT_FALSE(VerifyIsomorphism(PathGraph(3), CompleteGraph(3), id3));
}

TEST(BruteForceTest, Examples) {
  const std::vector<VertexId> relabel = {1, 2, 0};
  const auto witness = BruteForceIsomorphic(PathGraph(3), Permute(PathGraph(3), relabel));
  ASSERT_TRUE(witness.has_value());
  EXPECT_TRUE(VerifyIsomorphism(PathGraph(3), Permute(PathGraph(3), relabel), *witness));
  EXPECT_FALSE(BruteForceIsomorphic(CycleGraph(6), TwoTriangles()).has_value());
  const auto identity = BruteForceIsomorphic(Graph::Empty(4), Graph::Empty(4));
  ASSERT_TRUE(identity.has_value());
  EXPECT_EQ(*identity, (std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_THROW(BruteForceIsomorphic(Graph::Empty(11), Graph::Empty(11)), ParameterError);
}

TEST(BruteForceTest, RootedPinsVertexZero) {
  // P3 rooted at an end vs rooted at the middle.
  const Graph end_root = PathGraph(3);
  const Graph mid_root = MakeGraph(3, {{0, 1}, {0, 2}});
  EXPECT_TRUE(BruteForceIsomorphic(end_root, mid_root).has_value());
  EXPECT_FALSE(BruteForceRootedIsomorphic(end_root, mid_root).has_value());
  const auto rooted = BruteForceRootedIsomorphic(end_root, end_root);
  ASSERT_TRUE(rooted.has_value());
  EXPECT_EQ((*rooted)[0], 0u);
}

TEST(BruteForceTest, AgreesWithExhaustiveSearch) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    const VertexId n = 1 + static_cast<VertexId>(t % 7);
    const Graph a = GenerateErdosRenyi(n, 0.5, {62, t});
    Rng rng({63, t});
    const Graph b = t % 2 == 0 ? Permute(a, RandomPermutation(n, rng))
                               : GenerateErdosRenyi(n, 0.5, {64, t});
    const auto witness = BruteForceIsomorphic(a, b);
    EXPECT_EQ(witness.has_value(), ExhaustiveIsomorphic(a, b)) << t;
    if (witness) {
      EXPECT_TRUE(VerifyIsomorphism(a, b, *witness));
    }
  }
}

// A random relabelling that keeps vertex 0 in place.
std::vector<VertexId> RootFixingPermutation(VertexId n, Rng& rng) {
  std::vector<VertexId> pi = RandomPermutation(n, rng);
  const auto zero = std::find(pi.begin(), pi.end(), VertexId{0});
  std::swap(*zero, pi[0]);
  return pi;
}

TEST(RootedSearchTest, Examples) {
  const Graph end_root = PathGraph(3);
  const Graph mid_root = MakeGraph(3, {{0, 1}, {0, 2}});
  EXPECT_EQ(RootedIsomorphismSearch(end_root, mid_root, 1000).status,
            SearchStatus::kNotIsomorphic);
  const RootedSearchResult same = RootedIsomorphismSearch(end_root, end_root, 1000);
  ASSERT_EQ(same.status, SearchStatus::kIsomorphic);
  EXPECT_EQ(same.permutation, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(RootedIsomorphismSearch(PathGraph(3), PathGraph(4), 1000).status,
            SearchStatus::kNotIsomorphic);
  // Color refinement cannot split C6 from two triangles; the search must.
  EXPECT_EQ(RootedIsomorphismSearch(CycleGraph(6), TwoTriangles(), 100000).status,
            SearchStatus::kNotIsomorphic);
}

TEST(RootedSearchTest, AgreesWithRootedBruteForce) {
  for (std::uint64_t t = 0; t < 400; ++t) {
    const VertexId n = 1 + static_cast<VertexId>(t % 9);
    const Graph a = GenerateErdosRenyi(n, 0.45, {68, t});
    Rng rng({69, t});
    const Graph b = t % 2 == 0 ? Permute(a, RootFixingPermutation(n, rng))
                               : Permute(a, RandomPermutation(n, rng));
    const auto oracle = BruteForceRootedIsomorphic(a, b);
    const RootedSearchResult r = RootedIsomorphismSearch(a, b, 1000000);
    ASSERT_NE(r.status, SearchStatus::kGaveUp) << t;
    EXPECT_EQ(r.status == SearchStatus::kIsomorphic, oracle.has_value()) << t;
    if (r.status == SearchStatus::kIsomorphic) {
      EXPECT_EQ(r.permutation[0], 0u);
      EXPECT_TRUE(VerifyIsomorphism(a, b, r.permutation)) << t;
    }
  }
}

TEST(RootedSearchTest, FindsWitnessOnLargeRootedCopies) {
  for (std::uint64_t t = 0; t < 20; ++t) {
    const VertexId n = 200;
    const Graph a = GenerateErdosRenyi(n, 3.0 / n, {70, t});
    Rng rng({71, t});
    const Graph b = Permute(a, RootFixingPermutation(n, rng));
    const RootedSearchResult r = RootedIsomorphismSearch(a, b, kDefaultBudget);
    ASSERT_EQ(r.status, SearchStatus::kIsomorphic) << t;
    EXPECT_EQ(r.permutation[0], 0u);
    EXPECT_TRUE(VerifyIsomorphism(a, b, r.permutation));
    // Moving one edge breaks isomorphism.
    const VertexId u = 1 + static_cast<VertexId>(t);
    const Graph c = XorGraph(b, MakeGraph(n, {{u, u + 50}}));
    EXPECT_EQ(RootedIsomorphismSearch(a, c, kDefaultBudget).status,
              SearchStatus::kNotIsomorphic);
  }
}

TEST(RootedSearchTest, TinyBudgetGivesUp) {
  // Many automorphisms and no refinement help: the search must branch.
  const Graph a = CycleGraph(60);
  const RootedSearchResult r = RootedIsomorphismSearch(a, a, 1);
  EXPECT_EQ(r.status, SearchStatus::kGaveUp);
  EXPECT_TRUE(r.permutation.empty());
}

TEST(MatchBySignaturesTest, AgreesWithOracleOnSmallPairs) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    const VertexId n = 2 + static_cast<VertexId>(t % 6);
    const Graph a = GenerateErdosRenyi(n, 0.4, {65, t});
    Rng rng({66, t});
    const Graph b = t % 3 == 0 ? GenerateErdosRenyi(n, 0.4, {67, t})
                               : Permute(a, RandomPermutation(n, rng));
    for (Depth depth : {Depth::kTwo, Depth::kThree}) {
      const MatchResult r = MatchBySignatures(a, b, depth, 2);
      const bool iso = ExhaustiveIsomorphic(a, b);
      if (r.matched()) {
        EXPECT_TRUE(r.verified);
        EXPECT_TRUE(iso);
        EXPECT_TRUE(VerifyIsomorphism(a, b, std::get<Matched>(r.outcome).permutation));
      }
      if (r.non_isomorphic()) {
        EXPECT_FALSE(iso) << t;
      }
    }
  }
}

}  // namespace
}  // namespace graphcanon
