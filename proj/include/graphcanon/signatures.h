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

#ifndef GRAPHCANON_SIGNATURES_H_
#define GRAPHCANON_SIGNATURES_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphcanon/coloring.h"
#include "graphcanon/graph.h"

namespace graphcanon {

enum class Depth : int { kTwo = 2, kThree = 3 };

// Parses 2 or 3; throws ParameterError otherwise.
Depth DepthFromInt(int depth);

// Degrees of the neighbors of v, in decreasing order.
using DegreeProfile = std::vector<std::uint32_t>;
DegreeProfile ComputeDegreeProfile(const Graph& g, VertexId v);

struct SignatureOptions {
  // Subtract v itself from each neighbor's color count list. The default
  // uses the unrestricted lists of the neighbors.
  bool exclude_center = false;
};

// Multiset of the color count lists of v's neighbors, kept in lexicographic
// order so that equal multisets compare and serialize identically.
class Signature {
 public:
  Signature(std::uint32_t m, std::vector<ColorCountList> lists);

  std::uint32_t m() const { return m_; }
  std::span<const ColorCountList> lists() const { return lists_; }
  std::size_t degree() const { return lists_.size(); }

  // "<deg>:[c0,...,cm-1][...]..." with lists in lexicographic order.
  std::string Serialize() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  std::uint32_t m_;
  std::vector<ColorCountList> lists_;
};

Signature ComputeDepth3Signature(const Graph& g, const ColorAssignment& colors,
                                 VertexId v, SignatureOptions options = {});

// Per-vertex labels of one graph, stored as token sequences whose
// lexicographic order is the label order.
//
// Depth 2: the tokens are the degree profile itself.
// Depth 3: the tokens are sorted ids into a dictionary of distinct color
// count lists. The dictionary is itself sorted, so comparing id sequences
// is the same as comparing the underlying multisets of lists. Tables built
// by one ComputeLabelTables call share a dictionary and can be compared
// against each other.
class LabelTable {
 public:
  Depth depth() const { return depth_; }
  // 0 for depth 2.
  std::uint32_t m() const { return m_; }
  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }

  std::span<const std::uint32_t> tokens(VertexId v) const {
    return {tokens_.data() + offsets_[v], tokens_.data() + offsets_[v + 1]};
  }

  bool SameLabel(VertexId u, VertexId v) const;

  // Whether labels of the two tables are comparable.
  bool ComparableWith(const LabelTable& other) const;

  // Lexicographic label order across two comparable tables.
  static std::strong_ordering Compare(const LabelTable& a, VertexId u,
                                      const LabelTable& b, VertexId v);

  // Same text as DegreeProfile / Signature::Serialize for that vertex.
  std::string CanonicalString(VertexId v) const;

 private:
  friend std::vector<LabelTable> ComputeLabelTables(
      std::span<const Graph* const> graphs, Depth depth, std::uint32_t m,
      SignatureOptions options);

  Depth depth_ = Depth::kThree;
  std::uint32_t m_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> tokens_;
  // Distinct color count lists, row-major with width m_, sorted.
  std::shared_ptr<const std::vector<std::uint32_t>> dictionary_;
};

// Labels for several graphs at once with a shared dictionary. `m` is ignored
// for depth 2 and must be >= 1 for depth 3. O((n + |E|) log n) per graph.
std::vector<LabelTable> ComputeLabelTables(std::span<const Graph* const> graphs,
                                           Depth depth, std::uint32_t m,
                                           SignatureOptions options = {});

// Single-graph convenience; m defaults to DefaultModulus(g).
LabelTable AllSignatures(const Graph& g, Depth depth,
                         std::optional<std::uint32_t> m = std::nullopt,
                         SignatureOptions options = {});

struct UniquenessReport {
  bool all_unique = true;
  // Each group lists >= 2 vertices sharing one label, in increasing order;
  // groups are sorted by their first vertex.
  std::vector<std::vector<VertexId>> duplicate_groups;
  Depth depth = Depth::kThree;
};

// Exact duplicate grouping: vertices are bucketed by a 64-bit hash of their
// tokens and every bucket is split by full token comparison, so hash
// collisions never produce false groups.
UniquenessReport MakeUniquenessReport(const LabelTable& labels);

// [{"vertex": v, "depth": d, "label": "<canonical string>"}, ...]
std::string LabelsToJson(const LabelTable& labels);

}  // namespace graphcanon

#endif  // GRAPHCANON_SIGNATURES_H_
