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
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "graphcanon/errors.h"
#include "graphcanon/isomorph.h"
#include "graphcanon/signatures.h"

namespace graphcanon {
namespace {

constexpr VertexId kMinClassifyVertices = 16;

double LogLog(VertexId n) { return std::log(std::log(static_cast<double>(n))); }

double LogProfileBound(VertexId n, double p) {
  const double np = static_cast<double>(n) * p;
  const double loglog = LogLog(n);
  if (!(np > 0.0) || !(loglog > 0.0)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return 4.0 * std::sqrt(np * loglog) * std::log(np);
}

std::size_t CountDistinctProfiles(const Graph& g,
                                  const std::vector<VertexId>& vertices) {
  std::vector<DegreeProfile> profiles;
  profiles.reserve(vertices.size());
  for (VertexId v : vertices) profiles.push_back(ComputeDegreeProfile(g, v));
  std::sort(profiles.begin(), profiles.end());
  return static_cast<std::size_t>(
      std::unique(profiles.begin(), profiles.end()) - profiles.begin());
}

bool Contains(const std::vector<VertexId>& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

bool IsTree(const RootedSubgraph& sub) {
  return sub.graph.num_edges() + 1 == sub.graph.num_vertices();
}

GoodVertexPartition ClassifyGood(const Graph& g, double p) {
  const VertexId n = g.num_vertices();
  if (n < kMinClassifyVertices) {
    throw ParameterError("good-vertex classification needs n >= 16");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("edge probability must lie in [0, 1]");
  }
  GoodVertexPartition part;
  part.n = n;
  part.p = p;
  part.threshold = 3.0 * std::sqrt(static_cast<double>(n) * p * LogLog(n));
  const double mean = static_cast<double>(n - 1) * p;

  std::vector<bool> is_atypical(n, false);
  for (VertexId v = 0; v < n; ++v) {
    if (std::abs(static_cast<double>(g.degree(v)) - mean) >= part.threshold) {
      is_atypical[v] = true;
      part.atypical.push_back(v);
    }
  }
  BallExtractor extractor(g);
  for (VertexId v = 0; v < n; ++v) {
    const bool tree = IsTree(extractor.Extract(v, 2));
    if (!tree) part.non_tree.push_back(v);
    if (!tree || is_atypical[v]) continue;
    const auto nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(),
                     [&](VertexId u) { return is_atypical[u]; })) {
      part.good.push_back(v);
    }
  }
  return part;
}

std::string AhuCode(const RootedSubgraph& sub) {
  if (!IsTree(sub)) throw ParameterError("AHU code requires a tree");
  const Graph& t = sub.graph;
  const VertexId n = t.num_vertices();
  if (sub.root >= n) throw ParameterError("root out of range");
  // BFS order from the root; children are processed before parents when
  // walking it backwards.
  std::vector<VertexId> order;
  std::vector<VertexId> parent(n, std::numeric_limits<VertexId>::max());
  order.reserve(n);
  order.push_back(sub.root);
  parent[sub.root] = sub.root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (VertexId u : t.neighbors(order[i])) {
      if (parent[u] == std::numeric_limits<VertexId>::max()) {
        parent[u] = order[i];
        order.push_back(u);
      }
    }
  }
  if (order.size() != n) throw ParameterError("AHU code requires a connected tree");
  std::vector<std::vector<std::string>> child_codes(n);
  std::string code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    auto& children = child_codes[v];
    std::sort(children.begin(), children.end());
    code = "(";
    for (const auto& c : children) code += c;
    code += ')';
    std::vector<std::string>().swap(children);
    if (v != sub.root) child_codes[parent[v]].push_back(code);
  }
  return code;
}

const char* CollisionMethodName(CollisionMethod method) {
  switch (method) {
    case CollisionMethod::kDegreeProfileTree:
      return "degree_profile_tree";
    case CollisionMethod::kAhu:
      return "ahu";
    case CollisionMethod::kBruteForce:
      return "brute_force";
    case CollisionMethod::kRootedSearch:
      return "rooted_search";
  }
  return "unknown";
}

std::size_t CollisionReport::PairCount() const {
  std::size_t total = 0;
  for (const auto& group : groups) {
    total += group.vertices.size() * (group.vertices.size() - 1) / 2;
  }
  return total;
}

std::vector<std::pair<VertexId, VertexId>> CollisionReport::Pairs() const {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(PairCount());
  for (const auto& group : groups) {
    for (std::size_t i = 0; i < group.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < group.vertices.size(); ++j) {
        pairs.emplace_back(group.vertices[i], group.vertices[j]);
      }
    }
  }
  return pairs;
}

CollisionReport FindTwoNeighborhoodCollisions(const Graph& g, double p) {
  CollisionReport report;
  const VertexId n = g.num_vertices();
  std::vector<VertexId> good;
  if (n >= kMinClassifyVertices) {
    good = ClassifyGood(g, p).good;
    report.good_count = good.size();
    report.profile_count = CountDistinctProfiles(g, good);
  }

  const LabelTable profiles = AllSignatures(g, Depth::kTwo);
  const UniquenessReport buckets = MakeUniquenessReport(profiles);
  BallExtractor extractor(g);
  for (const auto& bucket : buckets.duplicate_groups) {
    // Tree candidates grouped by code; non-tree candidates kept for exact
    // pairwise search.
    std::map<std::string, std::vector<VertexId>> by_code;
    std::vector<std::pair<VertexId, RootedSubgraph>> non_tree;
    for (VertexId v : bucket) {
      RootedSubgraph sub = extractor.Extract(v, 2);
      if (IsTree(sub)) {
        by_code[AhuCode(sub)].push_back(v);
      } else {
        non_tree.emplace_back(v, std::move(sub));
      }
    }
    std::size_t good_codes = 0;
    for (auto& [code, members] : by_code) {
      const bool all_good = std::all_of(members.begin(), members.end(),
                                        [&](VertexId v) { return Contains(good, v); });
      const bool any_good = std::any_of(members.begin(), members.end(),
                                        [&](VertexId v) { return Contains(good, v); });
      if (any_good) ++good_codes;
      if (members.size() < 2) continue;
      report.groups.push_back(
          {members, all_good ? CollisionMethod::kDegreeProfileTree
                             : CollisionMethod::kAhu});
    }
    // Good vertices in one profile bucket must share one tree shape.
    if (good_codes > 1) {
      throw std::logic_error(
          "good vertices with equal degree profiles have different AHU codes");
    }
    // Greedy classes against a representative; rooted isomorphism is an
    // equivalence relation, so this is exact apart from searches that run
    // out of budget, which only lose collisions.
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < non_tree.size(); ++i) {
      const Graph& candidate = non_tree[i].second.graph;
      bool placed = false;
      bool gave_up = false;
      for (auto& cls : classes) {
        const Graph& rep = non_tree[cls.front()].second.graph;
        bool same = false;
        if (rep.num_vertices() != candidate.num_vertices() ||
            rep.num_edges() != candidate.num_edges()) {
          same = false;
        } else if (candidate.num_vertices() <= kBruteForceMaxVertices) {
          same = BruteForceRootedIsomorphic(rep, candidate).has_value();
        } else {
          const RootedSearchResult search =
              RootedIsomorphismSearch(rep, candidate, kRootedSearchBudget);
          gave_up |= search.status == SearchStatus::kGaveUp;
          same = search.status == SearchStatus::kIsomorphic;
        }
        if (same) {
          cls.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) {
        if (gave_up) ++report.skipped_large;
        classes.push_back({i});
      }
    }
    for (const auto& cls : classes) {
      if (cls.size() < 2) continue;
      CollisionGroup group;
      group.method =
          non_tree[cls.front()].second.graph.num_vertices() <= kBruteForceMaxVertices
              ? CollisionMethod::kBruteForce
              : CollisionMethod::kRootedSearch;
      for (std::size_t i : cls) group.vertices.push_back(non_tree[i].first);
      std::sort(group.vertices.begin(), group.vertices.end());
      report.groups.push_back(std::move(group));
    }
  }
  std::sort(report.groups.begin(), report.groups.end(),
            [](const CollisionGroup& a, const CollisionGroup& b) {
              return a.vertices < b.vertices;
            });
  return report;
}

ProfileCount CountDegreeProfiles(const Graph& g, double p, ProfileScope scope) {
  std::vector<VertexId> vertices;
  if (scope == ProfileScope::kGoodVertices) {
    vertices = ClassifyGood(g, p).good;
  } else {
    vertices.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) vertices[v] = v;
  }
  ProfileCount out;
  out.count = CountDistinctProfiles(g, vertices);
  out.log_bound = g.num_vertices() >= 3
                      ? LogProfileBound(g.num_vertices(), p)
                      : std::numeric_limits<double>::quiet_NaN();
  out.bound = std::exp(out.log_bound);
  return out;
}

}  // namespace graphcanon
