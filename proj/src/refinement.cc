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

#include "graphcanon/refinement.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "graphcanon/errors.h"

namespace graphcanon {
namespace {

// Keys of one refinement round, flattened: key(v) = [color(v), sorted
// neighbor colors...].
struct RoundKeys {
  std::vector<std::uint64_t> offsets;
  std::vector<std::uint32_t> values;

  std::span<const std::uint32_t> key(VertexId v) const {
    return {values.data() + offsets[v], values.data() + offsets[v + 1]};
  }
};

RoundKeys BuildKeys(const Graph& g, std::span<const std::uint32_t> colors) {
  RoundKeys keys;
  const VertexId n = g.num_vertices();
  keys.offsets.resize(static_cast<std::size_t>(n) + 1);
  keys.values.resize(n + 2 * g.num_edges());
  std::uint64_t pos = 0;
  for (VertexId v = 0; v < n; ++v) {
    keys.offsets[v] = pos;
    keys.values[pos++] = colors[v];
    const std::uint64_t begin = pos;
    for (VertexId u : g.neighbors(v)) keys.values[pos++] = colors[u];
    std::sort(keys.values.begin() + static_cast<std::ptrdiff_t>(begin),
              keys.values.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  keys.offsets[n] = pos;
  return keys;
}

// Dense ids by lexicographic key order. `order` receives the sorted vertex
// order.
std::vector<std::uint32_t> Renumber(const RoundKeys& keys, VertexId n,
                                    std::vector<VertexId>& order) {
  order.resize(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    auto x = keys.key(a);
    auto y = keys.key(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  std::vector<std::uint32_t> ids(n);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && !std::ranges::equal(keys.key(order[i - 1]), keys.key(order[i]))) {
      ++next;
    }
    ids[order[i]] = next;
  }
  return ids;
}

std::uint32_t CountClasses(std::span<const std::uint32_t> colors) {
  std::vector<std::uint32_t> sorted(colors.begin(), colors.end());
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::uint32_t>(
      std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

void AppendUints(std::string& out, std::span<const std::uint32_t> values,
                 char sep) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
}

}  // namespace

std::vector<std::uint32_t> RefineOnce(const Graph& g,
                                      std::span<const std::uint32_t> colors) {
  if (colors.size() != g.num_vertices()) {
    throw ParameterError("coloring does not match graph size");
  }
  std::vector<VertexId> order;
  return Renumber(BuildKeys(g, colors), g.num_vertices(), order);
}

StableColoring Refine(const Graph& g, std::span<const std::uint32_t> initial,
                      std::optional<std::uint32_t> max_rounds) {
  if (initial.size() != g.num_vertices()) {
    throw ParameterError("coloring does not match graph size");
  }
  const VertexId n = g.num_vertices();
  StableColoring result;
  result.colors.assign(initial.begin(), initial.end());
  result.class_count = CountClasses(initial);
  const std::uint32_t limit = std::min<std::uint32_t>(max_rounds.value_or(n), n);
  while (result.rounds < limit) {
    std::vector<std::uint32_t> next = RefineOnce(g, result.colors);
    const std::uint32_t count = CountClasses(next);
    ++result.rounds;
    result.colors = std::move(next);
    if (count == result.class_count) break;
    result.class_count = count;
  }
  result.discrete = result.class_count == n;
  return result;
}

StableColoring Refine(const Graph& g, const ColorAssignment& initial,
                      std::optional<std::uint32_t> max_rounds) {
  return Refine(g, initial.colors(), max_rounds);
}

CanonicalLabeling CanonicalLabel(const Graph& g, std::uint32_t m) {
  const ColorAssignment initial = ModColorClasses(g, m);
  const VertexId n = g.num_vertices();
  std::string cert = "graphcanon-cr3;n=" + std::to_string(n) +
                     ";m=" + std::to_string(m) + ";r0:";
  {
    bool first = true;
    for (std::uint32_t k = 0; k < m; ++k) {
      if (initial.class_sizes()[k] == 0) continue;
      if (!first) cert += ',';
      first = false;
      cert += std::to_string(k) + "x" + std::to_string(initial.class_sizes()[k]);
    }
  }
  std::vector<std::uint32_t> colors(initial.colors().begin(),
                                    initial.colors().end());
  std::vector<VertexId> order;
  for (int round = 1; round <= 3; ++round) {
    RoundKeys keys = BuildKeys(g, colors);
    colors = Renumber(keys, n, order);
    cert += ";r" + std::to_string(round) + ":";
    // One entry per class in id order: key and multiplicity.
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i + 1;
      while (j < order.size() && colors[order[j]] == colors[order[i]]) ++j;
      auto key = keys.key(order[i]);
      cert += '(';
      cert += std::to_string(key[0]);
      cert += '|';
      AppendUints(cert, key.subspan(1), ',');
      cert += ")x";
      cert += std::to_string(j - i);
      i = j;
    }
  }

  CanonicalLabeling out;
  out.class_count = n == 0 ? 0 : 1 + *std::max_element(colors.begin(), colors.end());
  out.all_unique = out.class_count == n;
  std::vector<Edge> relabeled;
  relabeled.reserve(g.num_edges());
  for (const auto& [u, v] : g.Edges()) {
    relabeled.emplace_back(std::min(colors[u], colors[v]),
                           std::max(colors[u], colors[v]));
  }
  std::sort(relabeled.begin(), relabeled.end());
  cert += ";E:";
  for (const auto& [a, b] : relabeled) {
    cert += std::to_string(a);
    cert += '-';
    cert += std::to_string(b);
    cert += ',';
  }
  out.labels = std::move(colors);
  out.certificate = std::move(cert);
  return out;
}

}  // namespace graphcanon
