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

// Small fixed graphs shared by the unit tests.

#ifndef GRAPHCANON_TESTS_TEST_GRAPHS_H_
#define GRAPHCANON_TESTS_TEST_GRAPHS_H_

#include <algorithm>
#include <queue>
#include <vector>

#include "graphcanon/graph.h"

namespace graphcanon::testing {

inline Graph MakeGraph(VertexId n, const std::vector<Edge>& edges) {
  return Graph::FromEdges(n, edges);
}

inline Graph PathGraph(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::FromEdges(n, edges);
}

inline Graph CycleGraph(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::FromEdges(n, edges);
}

inline Graph CompleteGraph(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::FromEdges(n, edges);
}

// Center 0, leaves 1..leaves.
inline Graph StarGraph(VertexId leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::FromEdges(leaves + 1, edges);
}

// Plain adjacency-matrix BFS, independent of the library's extractor.
inline std::vector<int> BfsDistances(const Graph& g, VertexId source) {
  const VertexId n = g.num_vertices();
  std::vector<int> dist(n, -1);
  std::queue<VertexId> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop();
    for (VertexId v = 0; v < n; ++v) {
      if (dist[v] < 0 && g.HasEdge(u, v)) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

}  // namespace graphcanon::testing

#endif  // GRAPHCANON_TESTS_TEST_GRAPHS_H_
