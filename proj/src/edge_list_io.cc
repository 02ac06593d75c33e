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

#include "graphcanon/edge_list_io.h"

#include <charconv>
#include <limits>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "graphcanon/errors.h"

namespace graphcanon {
namespace {

// Splits `line` into exactly two unsigned integers separated by blanks.
bool ParsePair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  auto skip_blanks = [&](std::size_t i) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    return i;
  };
  std::size_t i = skip_blanks(0);
  auto [p1, ec1] = std::from_chars(line.data() + i, line.data() + line.size(), a);
  if (ec1 != std::errc() || p1 == line.data() + i) return false;
  i = static_cast<std::size_t>(p1 - line.data());
  const std::size_t before = i;
  i = skip_blanks(i);
  if (i == before) return false;
  auto [p2, ec2] = std::from_chars(line.data() + i, line.data() + line.size(), b);
  if (ec2 != std::errc() || p2 == line.data() + i) return false;
  i = skip_blanks(static_cast<std::size_t>(p2 - line.data()));
  return i == line.size();
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph ReadEdgeList(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  while (!lines.empty() && IsBlank(lines.back())) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "missing header line \"n m\"");

  std::uint64_t n = 0;
  std::uint64_t m = 0;
  if (!ParsePair(lines[0], n, m)) {
    throw ParseError(1, "header must be \"n m\"");
  }
  if (n > std::numeric_limits<VertexId>::max()) {
    throw ParseError(1, "vertex count too large");
  }
  if (lines.size() - 1 != m) {
    // Point at the first missing line, or at the first surplus one.
    const std::size_t line = lines.size() - 1 < m ? lines.size() + 1 : m + 2;
    throw ParseError(line, "header declares " + std::to_string(m) +
                                       " edges, found " +
                                       std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!ParsePair(lines[i], u, v)) {
      throw ParseError(i + 1, "expected \"u v\"");
    }
    if (u >= n || v >= n) {
      throw ParseError(i + 1, "vertex id out of range [0, " +
                                  std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(i + 1, "self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert(u * n + v).second) {
      throw ParseError(i + 1, "duplicate edge");
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return Graph::FromEdges(static_cast<VertexId>(n), edges);
}

std::string WriteEdgeList(const Graph& g) {
  std::string out;
  out.reserve(16 + g.num_edges() * 14);
  out += std::to_string(g.num_vertices());
  out += ' ';
  out += std::to_string(g.num_edges());
  out += '\n';
  for (const auto& [u, v] : g.Edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ReadEdgeList(buffer.str());
}

void WriteEdgeListFile(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << WriteEdgeList(g);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace graphcanon
