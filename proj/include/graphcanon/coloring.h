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

#ifndef GRAPHCANON_COLORING_H_
#define GRAPHCANON_COLORING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graphcanon/graph.h"

namespace graphcanon {

// Per-vertex colors in {0, ..., m-1}. The level sets are the color classes;
// for assignments built by ModColorClasses, vertex v has color deg(v) mod m.
class ColorAssignment {
 public:
  // Validates that m >= 1 and every color is < m.
  static ColorAssignment FromColors(std::uint32_t m,
                                    std::vector<std::uint32_t> colors);

  std::uint32_t m() const { return m_; }
  std::size_t size() const { return colors_.size(); }
  std::uint32_t color(VertexId v) const { return colors_[v]; }
  std::span<const std::uint32_t> colors() const { return colors_; }
  std::span<const std::uint32_t> class_sizes() const { return class_sizes_; }

  friend bool operator==(const ColorAssignment&,
                         const ColorAssignment&) = default;

 private:
  std::uint32_t m_ = 1;
  std::vector<std::uint32_t> colors_;
  std::vector<std::uint32_t> class_sizes_;
};

// colors[v] = deg(v) mod m. Throws ParameterError when m == 0.
ColorAssignment ModColorClasses(const Graph& g, std::uint32_t m);

// counts[k] = number of neighbors of v with color k.
using ColorCountList = std::vector<std::uint32_t>;

// Counts the neighbors of v per color, restricted to `subset` (sorted vertex
// ids) when given. Throws ParameterError if the assignment does not cover g
// or v is out of range.
ColorCountList ComputeColorCountList(
    const Graph& g, const ColorAssignment& colors, VertexId v,
    std::optional<std::span<const VertexId>> subset = std::nullopt);

// Every row of the returned n x m matrix (row-major) is the full color count
// list of one vertex. One pass over the edges.
std::vector<std::uint32_t> ColorCountMatrix(const Graph& g,
                                            const ColorAssignment& colors);

enum class Regime { kRandom, kSmoothed };

struct ModulusChoice {
  std::uint32_t m = 1;
  // Only set in the random regime.
  std::optional<double> epsilon_star;
  std::optional<double> delta;
  Regime regime = Regime::kRandom;
};

// Random regime: with a = np / ln n = 1 + delta > 1, the minimum degree is
// at least epsilon_star(a) * np whp and m = ceil(3e / (epsilon_star * a)).
// Throws RegimeError when np <= ln n. Smoothed regime: m = ceil(ln n),
// requires n >= 2.
ModulusChoice ChooseModulus(std::uint64_t n, double p, Regime regime);

// Returns 1 - d where d is the smallest value in (0, 1) with
// a * (d + (1 - d) ln(1 - d)) > 1, located by bisection to 1e-9 and then
// nudged one tolerance step up. Throws ParameterError for a <= 1.
double SolveEpsilonStar(double a);

// The modulus used when the caller does not pick one: the random-regime
// rule for the graph's empirical edge density when it is above the
// connectivity threshold, otherwise ceil(ln n) (at least 1).
std::uint32_t DefaultModulus(const Graph& g);

}  // namespace graphcanon

#endif  // GRAPHCANON_COLORING_H_
