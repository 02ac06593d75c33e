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

#include "graphcanon/coloring.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "graphcanon/errors.h"

namespace graphcanon {
namespace {

constexpr double kEpsilonStarTolerance = 1e-9;

// d + (1 - d) ln(1 - d), increasing on [0, 1) from 0 towards 1.
double LowerTailExponent(double d) {
  if (d >= 1.0) return 1.0;
  return d + (1.0 - d) * std::log1p(-d);
}

}  // namespace

ColorAssignment ColorAssignment::FromColors(std::uint32_t m,
                                            std::vector<std::uint32_t> colors) {
  if (m == 0) throw ParameterError("modulus m must be >= 1");
  ColorAssignment ca;
  ca.m_ = m;
  ca.class_sizes_.assign(m, 0);
  for (std::uint32_t c : colors) {
    if (c >= m) {
      throw ParameterError("color " + std::to_string(c) + " not below m = " +
                           std::to_string(m));
    }
    ++ca.class_sizes_[c];
  }
  ca.colors_ = std::move(colors);
  return ca;
}

ColorAssignment ModColorClasses(const Graph& g, std::uint32_t m) {
  if (m == 0) throw ParameterError("modulus m must be >= 1");
  std::vector<std::uint32_t> colors(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) colors[v] = g.degree(v) % m;
  return ColorAssignment::FromColors(m, std::move(colors));
}

ColorCountList ComputeColorCountList(
    const Graph& g, const ColorAssignment& colors, VertexId v,
    std::optional<std::span<const VertexId>> subset) {
  if (colors.size() != g.num_vertices()) {
    throw ParameterError("color assignment covers " +
                         std::to_string(colors.size()) +
                         " vertices, graph has " +
                         std::to_string(g.num_vertices()));
  }
  if (v >= g.num_vertices()) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range");
  }
  ColorCountList counts(colors.m(), 0);
  for (VertexId u : g.neighbors(v)) {
    if (subset && !std::binary_search(subset->begin(), subset->end(), u)) {
      continue;
    }
    ++counts[colors.color(u)];
  }
  return counts;
}

std::vector<std::uint32_t> ColorCountMatrix(const Graph& g,
                                            const ColorAssignment& colors) {
  if (colors.size() != g.num_vertices()) {
    throw ParameterError("color assignment does not match graph size");
  }
  const std::size_t m = colors.m();
  std::vector<std::uint32_t> matrix(static_cast<std::size_t>(g.num_vertices()) * m, 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::uint32_t* row = matrix.data() + static_cast<std::size_t>(v) * m;
    for (VertexId u : g.neighbors(v)) ++row[colors.color(u)];
  }
  return matrix;
}

double SolveEpsilonStar(double a) {
  if (!(a > 1.0) || !std::isfinite(a)) {
    throw ParameterError("epsilon_star requires a > 1, got " +
                         std::to_string(a));
  }
  const double target = 1.0 / a;
  // Invariant: f(lo) <= target < f(hi).
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > kEpsilonStarTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (LowerTailExponent(mid) > target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  double delta_star = std::min(hi + kEpsilonStarTolerance,
                               std::nextafter(1.0, 0.0));
  if (!(a * LowerTailExponent(delta_star) > 1.0)) {
    throw std::logic_error("epsilon_star bisection lost strict inequality");
  }
  return 1.0 - delta_star;
}

ModulusChoice ChooseModulus(std::uint64_t n, double p, Regime regime) {
  ModulusChoice choice;
  choice.regime = regime;
  if (regime == Regime::kSmoothed) {
    if (n < 2) throw ParameterError("smoothed regime needs n >= 2");
    choice.m = std::max<std::uint32_t>(
        1, static_cast<std::uint32_t>(std::ceil(std::log(static_cast<double>(n)))));
    return choice;
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("edge probability must lie in [0, 1]");
  }
  if (n < 2) throw RegimeError("random regime needs n >= 2");
  const double log_n = std::log(static_cast<double>(n));
  const double a = static_cast<double>(n) * p / log_n;
  if (!(a > 1.0)) {
    throw RegimeError("np = " + std::to_string(static_cast<double>(n) * p) +
                      " is not above ln n = " + std::to_string(log_n) +
                      "; no delta > 0 exists");
  }
  const double eps = SolveEpsilonStar(a);
  choice.epsilon_star = eps;
  choice.delta = a - 1.0;
  const double m = std::ceil(3.0 * std::numbers::e / (eps * a));
  choice.m = static_cast<std::uint32_t>(std::max(1.0, m));
  return choice;
}

std::uint32_t DefaultModulus(const Graph& g) {
  const std::uint64_t n = g.num_vertices();
  if (n < 2) return 1;
  const double p = static_cast<double>(g.num_edges()) /
                   (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
  try {
    return ChooseModulus(n, p, Regime::kRandom).m;
  } catch (const RegimeError&) {
    return ChooseModulus(n, p, Regime::kSmoothed).m;
  }
}

}  // namespace graphcanon
