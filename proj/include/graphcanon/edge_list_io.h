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

#ifndef GRAPHCANON_EDGE_LIST_IO_H_
#define GRAPHCANON_EDGE_LIST_IO_H_

#include <string>
#include <string_view>

#include "graphcanon/graph.h"

namespace graphcanon {

// Text format: a header line "n m" followed by m lines "u v" with
// 0 <= u < v < n. Blank trailing lines are ignored. Throws ParseError (with
// the 1-based line number) on malformed lines, out-of-range ids, duplicate
// edges and self-loops.
Graph ReadEdgeList(std::string_view text);

// Deterministic: edges sorted by (u, v) with u < v.
std::string WriteEdgeList(const Graph& g);

Graph ReadEdgeListFile(const std::string& path);
void WriteEdgeListFile(const Graph& g, const std::string& path);

}  // namespace graphcanon

#endif  // GRAPHCANON_EDGE_LIST_IO_H_
