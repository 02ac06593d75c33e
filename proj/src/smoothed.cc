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

#include "graphcanon/smoothed.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "graphcanon/coloring.h"
#include "graphcanon/edge_list_io.h"
#include "graphcanon/errors.h"
#include "graphcanon/signatures.h"

namespace graphcanon {

BaseDescriptor BaseDescriptor::Parse(const std::string& text) {
  BaseDescriptor base;
  if (text == "empty") {
    base.kind = BaseKind::kEmpty;
  } else if (text == "ring") {
    base.kind = BaseKind::kRing;
  } else if (text == "torus") {
    base.kind = BaseKind::kTorus;
  } else if (text.rfind("circulant:", 0) == 0) {
    base.kind = BaseKind::kCirculant;
    try {
      base.degree = static_cast<std::uint32_t>(std::stoul(text.substr(10)));
    } catch (const std::exception&) {
      throw ParameterError("bad circulant degree in '" + text + "'");
    }
  } else if (text.rfind("file:", 0) == 0) {
    base.kind = BaseKind::kFile;
    base.path = text.substr(5);
  } else {
    throw ParameterError("unknown base graph '" + text + "'");
  }
  return base;
}

std::string BaseDescriptor::ToString() const {
  switch (kind) {
    case BaseKind::kEmpty:
      return "empty";
    case BaseKind::kRing:
      return "ring";
    case BaseKind::kTorus:
      return "torus";
    case BaseKind::kCirculant:
      return "circulant:" + std::to_string(degree);
    case BaseKind::kFile:
      return "file:" + path;
  }
  return "unknown";
}

Graph MakeBase(const BaseDescriptor& base, VertexId n) {
  std::vector<Edge> edges;
  switch (base.kind) {
    case BaseKind::kEmpty:
      return Graph::Empty(n);
    case BaseKind::kRing:
      if (n < 3) throw ParameterError("ring needs n >= 3");
      for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      return Graph::FromEdges(n, edges);
    case BaseKind::kTorus: {
      const auto side = static_cast<VertexId>(std::llround(std::sqrt(static_cast<double>(n))));
      if (side < 3 || side * side != n) {
        throw ParameterError("torus needs n = s*s with s >= 3, got " + std::to_string(n));
      }
      for (VertexId r = 0; r < side; ++r) {
        for (VertexId c = 0; c < side; ++c) {
          const VertexId v = r * side + c;
          edges.emplace_back(v, r * side + (c + 1) % side);
          edges.emplace_back(v, ((r + 1) % side) * side + c);
        }
      }
      return Graph::FromEdges(n, edges);
    }
    case BaseKind::kCirculant: {
      const std::uint32_t d = base.degree;
      if (d < 2 || d % 2 != 0 || d >= n) {
        throw ParameterError("circulant needs even d with 2 <= d < n");
      }
      for (VertexId v = 0; v < n; ++v) {
        for (std::uint32_t k = 1; k <= d / 2; ++k) edges.emplace_back(v, (v + k) % n);
      }
      return Graph::FromEdges(n, edges);
    }
    case BaseKind::kFile: {
      Graph g = ReadEdgeListFile(base.path);
      if (g.num_vertices() != n) {
        throw ParameterError("base file has " + std::to_string(g.num_vertices()) +
                             " vertices, expected " + std::to_string(n));
      }
      return g;
    }
  }
  throw ParameterError("unknown base kind");
}

ClassMembership InClass(const Graph& g, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw ParameterError("lambda must lie in (0, 1)");
  }
  ClassMembership out;
  out.limit = std::pow(static_cast<double>(g.num_vertices()), lambda);
  BallExtractor extractor(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const std::uint64_t size = extractor.Ball(v, 2).size();
    if (size > out.max_ball) {
      out.max_ball = size;
      out.witness = v;
    }
  }
  out.member = static_cast<double>(out.max_ball) <= out.limit;
  return out;
}

SmoothMode SmoothModeFromString(const std::string& text) {
  if (text == "union") return SmoothMode::kUnion;
  if (text == "xor") return SmoothMode::kXor;
  throw ParameterError("mode must be union or xor, got '" + text + "'");
}

const char* SmoothModeName(SmoothMode mode) {
  return mode == SmoothMode::kUnion ? "union" : "xor";
}

SmoothedConfig SmoothedConfig::WithDefaults(BaseDescriptor base, VertexId n,
                                            SmoothMode mode, double lambda) {
  SmoothedConfig cfg;
  cfg.lambda = lambda;
  cfg.base = std::move(base);
  cfg.n = n;
  cfg.mode = mode;
  const double log_n = std::log(static_cast<double>(n));
  cfg.p = std::min(1.0, std::pow(log_n, 2.5) / static_cast<double>(n));
  cfg.m = ChooseModulus(n, cfg.p, Regime::kSmoothed).m;
  return cfg;
}

TrialRecord SmoothedTrialOnBase(const SmoothedConfig& cfg, const Graph& base,
                                RngSeed seed) {
  if (base.num_vertices() != cfg.n) {
    throw ConfigError("base graph size does not match n");
  }
  const auto start = std::chrono::steady_clock::now();
  const Graph perturbation = GenerateErdosRenyi(cfg.n, cfg.p, seed);
  const Graph g = cfg.mode == SmoothMode::kUnion ? UnionGraph(base, perturbation)
                                                 : XorGraph(base, perturbation);
  const LabelTable labels = AllSignatures(g, Depth::kThree, cfg.m);
  const UniquenessReport report = MakeUniquenessReport(labels);
  const ColorAssignment colors = ModColorClasses(g, cfg.m);

  TrialRecord r;
  r.kind = "smooth";
  r.trial = seed.stream_id;
  r.seed = seed.seed;
  r.n = cfg.n;
  r.p = cfg.p;
  r.m = cfg.m;
  r.base = cfg.base.ToString();
  r.mode = SmoothModeName(cfg.mode);
  r.lambda = cfg.lambda;
  r.all_unique = report.all_unique;
  r.success = report.all_unique;
  r.duplicate_groups = report.duplicate_groups.size();
  auto sizes = colors.class_sizes();
  r.class_min = *std::min_element(sizes.begin(), sizes.end());
  r.class_max = *std::max_element(sizes.begin(), sizes.end());
  const double log_n = std::log(static_cast<double>(cfg.n));
  r.p_lower_ratio = cfg.p * cfg.n / (log_n * log_n);
  r.p_upper_ratio = cfg.p * log_n * log_n * log_n;
  if (r.p_lower_ratio <= 1.0 || r.p_upper_ratio >= 1.0) r.note = "outside_window";
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

TrialRecord SmoothedTrial(const SmoothedConfig& cfg, RngSeed seed) {
  const Graph base = MakeBase(cfg.base, cfg.n);
  const ClassMembership membership = InClass(base, cfg.lambda);
  if (!membership.member) {
    throw ConfigError("base graph is not in the class for lambda = " +
                      std::to_string(cfg.lambda) + ": vertex " +
                      std::to_string(membership.witness) + " has a " +
                      std::to_string(membership.max_ball) +
                      "-vertex 2-neighborhood");
  }
  return SmoothedTrialOnBase(cfg, base, seed);
}

}  // namespace graphcanon
