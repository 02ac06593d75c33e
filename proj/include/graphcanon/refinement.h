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

#ifndef GRAPHCANON_REFINEMENT_H_
#define GRAPHCANON_REFINEMENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphcanon/coloring.h"
#include "graphcanon/graph.h"

namespace graphcanon {

struct StableColoring {
  // Dense class ids 0..class_count-1, ordered by class key.
  std::vector<std::uint32_t> colors;
  std::uint32_t rounds = 0;
  std::uint32_t class_count = 0;
  // Every class is a singleton.
  bool discrete = false;
};

// One Color Refinement step: every vertex gets the key (own color, sorted
// multiset of neighbor colors) and keys are renumbered densely in
// lexicographic order. Returns the new colors; the class count is
// 1 + max color (0 for the empty graph).
std::vector<std::uint32_t> RefineOnce(const Graph& g,
                                      std::span<const std::uint32_t> colors);

// Iterates RefineOnce until the number of classes stops growing or
// `max_rounds` rounds have run. Never runs more than n rounds.
StableColoring Refine(const Graph& g, std::span<const std::uint32_t> initial,
                      std::optional<std::uint32_t> max_rounds = std::nullopt);
StableColoring Refine(const Graph& g, const ColorAssignment& initial,
                      std::optional<std::uint32_t> max_rounds = std::nullopt);

struct CanonicalLabeling {
  // Class ids after three rounds from the deg mod m coloring.
  std::vector<std::uint32_t> labels;
  std::uint32_t class_count = 0;
  bool all_unique = false;
  // Byte string holding the initial color histogram, the sorted class-key
  // table of each round with multiplicities, and the edge list rewritten in
  // final labels and sorted. Equal certificates with all_unique set imply
  // isomorphic graphs; isomorphic graphs always get equal certificates.
  std::string certificate;
};

CanonicalLabeling CanonicalLabel(const Graph& g, std::uint32_t m);

}  // namespace graphcanon

#endif  // GRAPHCANON_REFINEMENT_H_
