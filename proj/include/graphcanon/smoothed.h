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

#ifndef GRAPHCANON_SMOOTHED_H_
#define GRAPHCANON_SMOOTHED_H_

#include <cstdint>
#include <string>

#include "graphcanon/graph.h"
#include "graphcanon/rng.h"
#include "graphcanon/trial_record.h"

namespace graphcanon {

enum class BaseKind { kEmpty, kRing, kTorus, kCirculant, kFile };

// Deterministic base graph. Text form: "empty", "ring", "torus",
// "circulant:<d>" or "file:<path>".
struct BaseDescriptor {
  BaseKind kind = BaseKind::kTorus;
  // Circulant degree (even).
  std::uint32_t degree = 0;
  std::string path;

  static BaseDescriptor Parse(const std::string& text);
  std::string ToString() const;
};

// Seedless construction. Ring needs n >= 3; torus needs n = s * s with
// s >= 3 (4-regular, 2n edges); circulant:d needs even d with 2 <= d < n
// (offsets 1..d/2); file bases must have exactly n vertices. Throws
// ParameterError otherwise.
Graph MakeBase(const BaseDescriptor& base, VertexId n);

struct ClassMembership {
  // Every 2-neighborhood has at most n^lambda vertices.
  bool member = false;
  // Vertex with the largest 2-neighborhood, and that size.
  VertexId witness = 0;
  std::uint64_t max_ball = 0;
  double limit = 0.0;
};

// Throws ParameterError unless 0 < lambda < 1.
ClassMembership InClass(const Graph& g, double lambda);

enum class SmoothMode { kUnion, kXor };
SmoothMode SmoothModeFromString(const std::string& text);
const char* SmoothModeName(SmoothMode mode);

struct SmoothedConfig {
  double lambda = 0.5;
  BaseDescriptor base;
  VertexId n = 0;
  double p = 0.0;
  SmoothMode mode = SmoothMode::kUnion;
  std::uint32_t m = 1;

  // p = ln^2.5(n) / n and m = ceil(ln n).
  static SmoothedConfig WithDefaults(BaseDescriptor base, VertexId n,
                                     SmoothMode mode, double lambda = 0.5);
};

// Perturbs the base with an independent G(n, p) drawn from `seed`, combines
// per `mode`, and records depth-3 uniqueness with the configured m together
// with class-size balance and where p sits relative to the smoothed window.
// Throws ConfigError when the base is not in the class for cfg.lambda.
TrialRecord SmoothedTrial(const SmoothedConfig& cfg, RngSeed seed);

// The same trial on a prebuilt base (avoids rebuilding it per seed); the
// base must already satisfy the class check.
TrialRecord SmoothedTrialOnBase(const SmoothedConfig& cfg, const Graph& base,
                                RngSeed seed);

}  // namespace graphcanon

#endif  // GRAPHCANON_SMOOTHED_H_
