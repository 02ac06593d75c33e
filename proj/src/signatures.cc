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

#include "graphcanon/signatures.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "graphcanon/errors.h"
#include "json.hpp"

namespace graphcanon {
namespace {

void AppendList(std::string& out, std::span<const std::uint32_t> values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  out += ']';
}

std::uint64_t HashTokens(std::span<const std::uint32_t> tokens) {
  // splitmix64 finalizer folded over the sequence.
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ tokens.size();
  for (std::uint32_t t : tokens) {
    h ^= t + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
  }
  return h;
}

// A row of some per-graph matrix of color count lists.
struct RowRef {
  std::uint32_t graph;
  std::uint64_t row;
};

}  // namespace

Depth DepthFromInt(int depth) {
  if (depth == 2) return Depth::kTwo;
  if (depth == 3) return Depth::kThree;
  throw ParameterError("depth must be 2 or 3, got " + std::to_string(depth));
}

DegreeProfile ComputeDegreeProfile(const Graph& g, VertexId v) {
  if (v >= g.num_vertices()) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range");
  }
  DegreeProfile profile;
  profile.reserve(g.degree(v));
  for (VertexId u : g.neighbors(v)) profile.push_back(g.degree(u));
  std::sort(profile.begin(), profile.end(), std::greater<>());
  return profile;
}

Signature::Signature(std::uint32_t m, std::vector<ColorCountList> lists)
    : m_(m), lists_(std::move(lists)) {
  for (const auto& list : lists_) {
    if (list.size() != m_) {
      throw ParameterError("color count list length differs from m");
    }
  }
  std::sort(lists_.begin(), lists_.end());
}

std::string Signature::Serialize() const {
  std::string out = std::to_string(lists_.size());
  out += ':';
  for (const auto& list : lists_) AppendList(out, list);
  return out;
}

Signature ComputeDepth3Signature(const Graph& g, const ColorAssignment& colors,
                                 VertexId v, SignatureOptions options) {
  if (colors.size() != g.num_vertices()) {
    throw ParameterError("color assignment does not match graph size");
  }
  if (v >= g.num_vertices()) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range");
  }
  std::vector<ColorCountList> lists;
  lists.reserve(g.degree(v));
  for (VertexId u : g.neighbors(v)) {
    ColorCountList list = ComputeColorCountList(g, colors, u);
    if (options.exclude_center) --list[colors.color(v)];
    lists.push_back(std::move(list));
  }
  return Signature(colors.m(), std::move(lists));
}

bool LabelTable::SameLabel(VertexId u, VertexId v) const {
  auto a = tokens(u);
  auto b = tokens(v);
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

bool LabelTable::ComparableWith(const LabelTable& other) const {
  if (depth_ != other.depth_) return false;
  if (depth_ == Depth::kTwo) return true;
  return m_ == other.m_ && dictionary_ == other.dictionary_;
}

std::strong_ordering LabelTable::Compare(const LabelTable& a, VertexId u,
                                         const LabelTable& b, VertexId v) {
  if (!a.ComparableWith(b)) {
    throw ParameterError("label tables do not share a dictionary");
  }
  auto x = a.tokens(u);
  auto y = b.tokens(v);
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(),
                                                y.end());
}

std::string LabelTable::CanonicalString(VertexId v) const {
  auto t = tokens(v);
  std::string out = std::to_string(t.size());
  out += ':';
  if (depth_ == Depth::kTwo) {
    AppendList(out, t);
    return out;
  }
  for (std::uint32_t id : t) {
    AppendList(out, std::span<const std::uint32_t>(
                        dictionary_->data() + static_cast<std::size_t>(id) * m_, m_));
  }
  return out;
}

std::vector<LabelTable> ComputeLabelTables(std::span<const Graph* const> graphs,
                                           Depth depth, std::uint32_t m,
                                           SignatureOptions options) {
  std::vector<LabelTable> tables(graphs.size());
  if (depth == Depth::kTwo) {
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const Graph& g = *graphs[gi];
      LabelTable& table = tables[gi];
      table.depth_ = Depth::kTwo;
      table.offsets_.assign(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
      table.tokens_.resize(2 * g.num_edges());
      std::uint64_t pos = 0;
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        table.offsets_[v] = pos;
        const std::uint64_t begin = pos;
        for (VertexId u : g.neighbors(v)) table.tokens_[pos++] = g.degree(u);
        std::sort(table.tokens_.begin() + static_cast<std::ptrdiff_t>(begin),
                  table.tokens_.begin() + static_cast<std::ptrdiff_t>(pos),
                  std::greater<>());
      }
      table.offsets_[g.num_vertices()] = pos;
    }
    return tables;
  }

  if (m == 0) throw ParameterError("depth-3 labels need m >= 1");
  // Per graph: a matrix of candidate color count lists. Without
  // exclude_center there is one row per vertex and slot (v, i) uses the row
  // of the i-th neighbor; with it there is one row per directed edge.
  std::vector<std::vector<std::uint32_t>> matrices(graphs.size());
  std::vector<std::uint64_t> row_counts(graphs.size());
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = *graphs[gi];
    const ColorAssignment colors = ModColorClasses(g, m);
    std::vector<std::uint32_t> counts = ColorCountMatrix(g, colors);
    if (!options.exclude_center) {
      matrices[gi] = std::move(counts);
      row_counts[gi] = g.num_vertices();
      continue;
    }
    std::vector<std::uint32_t>& rows = matrices[gi];
    rows.resize(2 * g.num_edges() * m);
    std::uint64_t r = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      for (VertexId u : g.neighbors(v)) {
        std::copy_n(counts.data() + static_cast<std::size_t>(u) * m, m,
                    rows.data() + r * m);
        --rows[r * m + colors.color(v)];
        ++r;
      }
    }
    row_counts[gi] = r;
  }

  auto row_span = [&](const RowRef& ref) {
    return std::span<const std::uint32_t>(
        matrices[ref.graph].data() + ref.row * m, m);
  };
  std::vector<RowRef> refs;
  refs.reserve(std::accumulate(row_counts.begin(), row_counts.end(),
                               std::uint64_t{0}));
  for (std::uint32_t gi = 0; gi < graphs.size(); ++gi) {
    for (std::uint64_t r = 0; r < row_counts[gi]; ++r) refs.push_back({gi, r});
  }
  std::sort(refs.begin(), refs.end(), [&](const RowRef& a, const RowRef& b) {
    auto x = row_span(a);
    auto y = row_span(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });

  auto dictionary = std::make_shared<std::vector<std::uint32_t>>();
  std::vector<std::vector<std::uint32_t>> row_ids(graphs.size());
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    row_ids[gi].resize(row_counts[gi]);
  }
  std::uint32_t next_id = 0;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (i == 0 || !std::ranges::equal(row_span(refs[i - 1]), row_span(refs[i]))) {
      auto row = row_span(refs[i]);
      dictionary->insert(dictionary->end(), row.begin(), row.end());
      ++next_id;
    }
    row_ids[refs[i].graph][refs[i].row] = next_id - 1;
  }

  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = *graphs[gi];
    LabelTable& table = tables[gi];
    table.depth_ = Depth::kThree;
    table.m_ = m;
    table.dictionary_ = dictionary;
    table.offsets_.assign(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
    table.tokens_.resize(2 * g.num_edges());
    std::uint64_t pos = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      table.offsets_[v] = pos;
      const std::uint64_t begin = pos;
      auto nbrs = g.neighbors(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const std::uint64_t row = options.exclude_center ? begin + i : nbrs[i];
        table.tokens_[pos++] = row_ids[gi][row];
      }
      std::sort(table.tokens_.begin() + static_cast<std::ptrdiff_t>(begin),
                table.tokens_.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    table.offsets_[g.num_vertices()] = pos;
  }
  return tables;
}

LabelTable AllSignatures(const Graph& g, Depth depth,
                         std::optional<std::uint32_t> m,
                         SignatureOptions options) {
  const Graph* graphs[] = {&g};
  const std::uint32_t modulus =
      depth == Depth::kThree ? m.value_or(DefaultModulus(g)) : 0;
  return std::move(ComputeLabelTables(graphs, depth, modulus, options)[0]);
}

UniquenessReport MakeUniquenessReport(const LabelTable& labels) {
  UniquenessReport report;
  report.depth = labels.depth();
  const std::size_t n = labels.size();
  std::vector<std::uint64_t> hashes(n);
  for (VertexId v = 0; v < n; ++v) hashes[v] = HashTokens(labels.tokens(v));
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    if (hashes[a] != hashes[b]) return hashes[a] < hashes[b];
    auto cmp = LabelTable::Compare(labels, a, labels, b);
    if (cmp != 0) return cmp < 0;
    return a < b;
  });
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && hashes[order[j]] == hashes[order[i]] &&
           labels.SameLabel(order[i], order[j])) {
      ++j;
    }
    if (j - i >= 2) {
      std::vector<VertexId> group(order.begin() + static_cast<std::ptrdiff_t>(i),
                                  order.begin() + static_cast<std::ptrdiff_t>(j));
      for (VertexId v : group) {
        // Equal signatures carry one entry per neighbor.
        if (labels.tokens(v).size() != labels.tokens(group[0]).size()) {
          throw std::logic_error("equal labels with different degrees");
        }
      }
      report.duplicate_groups.push_back(std::move(group));
    }
    i = j;
  }
  std::sort(report.duplicate_groups.begin(), report.duplicate_groups.end());
  report.all_unique = report.duplicate_groups.empty();
  return report;
}

std::string LabelsToJson(const LabelTable& labels) {
  nlohmann::json out = nlohmann::json::array();
  for (VertexId v = 0; v < labels.size(); ++v) {
    out.push_back({{"vertex", v},
                   {"depth", static_cast<int>(labels.depth())},
                   {"label", labels.CanonicalString(v)}});
  }
  return out.dump();
}

}  // namespace graphcanon
