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


#include "graphcanon/neighborhoods.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "graphcanon/errors.h"
#include "graphcanon/isomorph.h"
#include "graphcanon/signatures.h"
#include "gtest/gtest.h"
#include "test_graphs.h"

namespace graphcanon {
namespace {

using ::graphcanon::testing::CompleteGraph;
using ::graphcanon::testing::MakeGraph;
using ::graphcanon::testing::PathGraph;
using ::graphcanon::testing::StarGraph;

RootedSubgraph Rooted(Graph g) {
  RootedSubgraph sub;
  sub.root = 0;
  sub.original_ids.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) sub.original_ids[v] = v;
  sub.graph = std::move(g);
  return sub;
}

// Decodes a Pruefer sequence into a labeled tree on k vertices.
Graph TreeFromPruefer(VertexId k, const std::vector<VertexId>& seq) {
  if (k == 1) return Graph::Empty(1);
  std::vector<std::uint32_t> degree(k, 1);
  for (VertexId x : seq) ++degree[x];
  std::vector<Edge> edges;
  for (VertexId x : seq) {
    for (VertexId leaf = 0; leaf < k; ++leaf) {
      if (degree[leaf] == 1) {
        edges.push_back({leaf, x});
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  std::vector<VertexId> last;
  for (VertexId v = 0; v < k; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.push_back({last[0], last[1]});
  return Graph::FromEdges(k, edges);
}

TEST(IsTreeTest, Examples) {
  EXPECT_TRUE(IsTree(Rooted(StarGraph(5))));
  EXPECT_FALSE(IsTree(Rooted(CompleteGraph(3))));
  EXPECT_TRUE(IsTree(Neighborhood(PathGraph(5), 0, 2)));
  EXPECT_TRUE(IsTree(Rooted(Graph::Empty(1))));
}

TEST(AhuCodeTest, Examples) {
  const std::string single = AhuCode(Rooted(Graph::Empty(1)));
  EXPECT_EQ(single, "()");
  const std::string center = AhuCode(Neighborhood(PathGraph(3), 1, 1));
  const std::string end = AhuCode(Neighborhood(PathGraph(3), 0, 2));
  EXPECT_NE(center, end);
  EXPECT_THROW(AhuCode(Rooted(CompleteGraph(3))), ParameterError);
}

TEST(AhuCodeTest, EqualityMatchesRootedBruteForceOnAllSmallTrees) {
  std::map<std::string, Graph> representative;
  std::size_t trees = 0;
  for (VertexId k = 1; k <= 7; ++k) {
    const std::size_t len = k >= 2 ? k - 2 : 0;
    std::vector<VertexId> seq(len, 0);
    while (true) {
      const Graph tree = TreeFromPruefer(k, seq);
      ASSERT_TRUE(IsTree(Rooted(tree)));
      const std::string code = AhuCode(Rooted(tree));
      ++trees;
      auto [it, inserted] = representative.emplace(code, tree);
      if (!inserted) {
        EXPECT_TRUE(BruteForceRootedIsomorphic(it->second, tree).has_value()) << code;
      }
      std::size_t i = 0;
      while (i < len && ++seq[i] == k) seq[i++] = 0;
      if (i == len) break;
    }
  }
  // 1 + 1 + 3 + 16 + 125 + 1296 + 16807 labeled trees.
  EXPECT_EQ(trees, 18249u);
  // Rooted unlabeled trees on 1..7 vertices: 1, 1, 2, 4, 9, 20, 48.
  EXPECT_EQ(representative.size(), 85u);
  std::vector<const Graph*> reps;
  for (const auto& [code, g] : representative) reps.push_back(&g);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (reps[i]->num_vertices() != reps[j]->num_vertices()) continue;
      EXPECT_FALSE(BruteForceRootedIsomorphic(*reps[i], *reps[j]).has_value());
    }
  }
}

TEST(ClassifyGoodTest, Examples) {
  const GoodVertexPartition empty = ClassifyGood(Graph::Empty(100), 0.5);
  EXPECT_EQ(empty.atypical.size(), 100u);
  EXPECT_TRUE(empty.good.empty());
  EXPECT_NEAR(empty.threshold, 3 * std::sqrt(50 * std::log(std::log(100.0))), 1e-9);

  const GoodVertexPartition dense = ClassifyGood(CompleteGraph(20), 1.0);
  EXPECT_TRUE(dense.good.empty());
  EXPECT_EQ(dense.non_tree.size(), 20u);

  EXPECT_THROW(ClassifyGood(Graph::Empty(15), 0.1), ParameterError);
  EXPECT_THROW(ClassifyGood(Graph::Empty(20), 1.1), ParameterError);
}

TEST(ClassifyGoodTest, MatchesDefinitionOnRandomGraphs) {
  for (std::uint64_t t = 0; t < 10; ++t) {
    const VertexId n = 2000;
    const double p = 1.2 * std::log(double{n}) / n;
    const Graph g = GenerateErdosRenyi(n, p, {70, t});
    const GoodVertexPartition part = ClassifyGood(g, p);
    const double threshold = 3 * std::sqrt(n * p * std::log(std::log(double{n})));
    std::set<VertexId> atypical, good, non_tree;
    for (VertexId v = 0; v < n; ++v) {
      if (std::abs(g.degree(v) - (n - 1) * p) >= threshold) atypical.insert(v);
    }
    for (VertexId v = 0; v < n; ++v) {
      const RootedSubgraph ball = Neighborhood(g, v, 2);
      const bool tree = ball.graph.num_edges() + 1 == ball.graph.num_vertices();
      if (!tree) non_tree.insert(v);
      bool clean = !atypical.count(v);
      for (VertexId u : g.neighbors(v)) clean &= !atypical.count(u);
      if (tree && clean) good.insert(v);
    }
    EXPECT_EQ(std::set<VertexId>(part.atypical.begin(), part.atypical.end()), atypical);
    EXPECT_EQ(std::set<VertexId>(part.good.begin(), part.good.end()), good);
    EXPECT_EQ(std::set<VertexId>(part.non_tree.begin(), part.non_tree.end()), non_tree);
  }
}

TEST(CollisionTest, IsolatedVerticesCollide) {
  const Graph g = MakeGraph(20, {{0, 1}, {1, 2}, {2, 3}});
  const CollisionReport report = FindTwoNeighborhoodCollisions(g, 0.05);
  const auto pairs = report.Pairs();
  EXPECT_NE(std::find(pairs.begin(), pairs.end(), std::make_pair(VertexId{4}, VertexId{5})),
            pairs.end());
}

TEST(CollisionTest, CompleteGraphAllPairs) {
  const CollisionReport report = FindTwoNeighborhoodCollisions(CompleteGraph(4), 1.0);
  EXPECT_EQ(report.PairCount(), 6u);
  ASSERT_EQ(report.groups.size(), 1u);
  EXPECT_EQ(report.groups[0].method, CollisionMethod::kBruteForce);
  EXPECT_EQ(report.groups[0].vertices, (std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_STREQ(CollisionMethodName(CollisionMethod::kDegreeProfileTree), "degree_profile_tree");
}

TEST(CollisionTest, EveryReportedPairIsRootedIsomorphic) {
  for (std::uint64_t t = 0; t < 10; ++t) {
    const VertexId n = 3000;
    const double p = 1.2 * std::log(double{n}) / n;
    const Graph g = GenerateErdosRenyi(n, p, {71, t});
    const CollisionReport report = FindTwoNeighborhoodCollisions(g, p);
    const GoodVertexPartition part = ClassifyGood(g, p);
    EXPECT_EQ(report.good_count, part.good.size());
    for (const auto& group : report.groups) {
      ASSERT_GE(group.vertices.size(), 2u);
      const RootedSubgraph first = Neighborhood(g, group.vertices[0], 2);
      for (std::size_t i = 1; i < group.vertices.size(); ++i) {
        const RootedSubgraph other = Neighborhood(g, group.vertices[i], 2);
        if (IsTree(first)) {
          EXPECT_EQ(AhuCode(first), AhuCode(other));
        } else if (first.graph.num_vertices() <= kBruteForceMaxVertices) {
          EXPECT_TRUE(BruteForceRootedIsomorphic(first.graph, other.graph).has_value());
        } else {
          const RootedSearchResult r =
              RootedIsomorphismSearch(first.graph, other.graph, kRootedSearchBudget);
          ASSERT_EQ(r.status, SearchStatus::kIsomorphic);
          EXPECT_EQ(r.permutation[0], 0u);
          EXPECT_TRUE(VerifyIsomorphism(first.graph, other.graph, r.permutation));
        }
      }
    }
  }
}

TEST(CollisionTest, GoodVerticesProfileEqualityIffAhuEquality) {
  for (std::uint64_t t = 0; t < 10; ++t) {
    const VertexId n = 3000;
    const double p = 1.2 * std::log(double{n}) / n;
    const Graph g = GenerateErdosRenyi(n, p, {72, t});
    const auto good = ClassifyGood(g, p).good;
    std::vector<std::string> codes;
    for (VertexId v : good) codes.push_back(AhuCode(Neighborhood(g, v, 2)));
    for (std::size_t i = 0; i < good.size(); ++i) {
      for (std::size_t j = i + 1; j < good.size(); ++j) {
        EXPECT_EQ(codes[i] == codes[j],
                  ComputeDegreeProfile(g, good[i]) == ComputeDegreeProfile(g, good[j]));
      }
    }
  }
}

TEST(ProfileCountTest, Examples) {
  const ProfileCount k4 = CountDegreeProfiles(CompleteGraph(4), 1.0, ProfileScope::kAllVertices);
  EXPECT_EQ(k4.count, 1u);
  const ProfileCount empty =
      CountDegreeProfiles(Graph::Empty(50), 0.1, ProfileScope::kAllVertices);
  EXPECT_EQ(empty.count, 1u);
  const ProfileCount path = CountDegreeProfiles(PathGraph(5), 0.5, ProfileScope::kAllVertices);
  // [2], [2,1], [2,2] -> profiles of 0/4, 1/3, 2.
  EXPECT_EQ(path.count, 3u);
}

TEST(ProfileCountTest, BoundFormulaAndHolds) {
  for (std::uint64_t t = 0; t < 5; ++t) {
    const VertexId n = 10000;
    const double p = 1.2 * std::log(double{n}) / n;
    const Graph g = GenerateErdosRenyi(n, p, {73, t});
    const ProfileCount pc = CountDegreeProfiles(g, p);
    const double np = n * p;
    EXPECT_NEAR(pc.log_bound, 4 * std::sqrt(np * std::log(std::log(double{n}))) * std::log(np),
                1e-9);
    std::set<DegreeProfile> distinct;
    for (VertexId v : ClassifyGood(g, p).good) distinct.insert(ComputeDegreeProfile(g, v));
    EXPECT_EQ(pc.count, distinct.size());
    EXPECT_LE(std::log(static_cast<double>(std::max<std::size_t>(pc.count, 1))), pc.log_bound);
  }
}

}  // namespace
}  // namespace graphcanon
