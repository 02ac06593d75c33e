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

#ifndef GRAPHCANON_EXPERIMENTS_H_
#define GRAPHCANON_EXPERIMENTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphcanon/rng.h"
#include "graphcanon/smoothed.h"
#include "graphcanon/trial_record.h"

namespace graphcanon {

enum class ExperimentKind {
  kUnique3,
  kUnique2,
  kCollide2,
  kSmooth,
  kMatch,
  kBench,
  kPmfGrid,
};

ExperimentKind ExperimentKindFromString(const std::string& text);
const char* ExperimentKindName(ExperimentKind kind);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kUnique3;
  std::vector<std::uint64_t> n_values;
  // Cells are n x (c or p): p = c ln n / n for every c, plus every explicit
  // p. For pmfgrid the c list holds np values instead. Empty lists fall back
  // to kind defaults (smooth: p = ln^2.5 n / n; pmfgrid: the default grid).
  std::vector<double> c_values;
  std::vector<double> p_values;
  std::uint32_t trials = 30;
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> m;
  // match
  int depth = 3;
  // smooth
  std::string base = "torus";
  SmoothMode mode = SmoothMode::kUnion;
  double lambda = 0.5;
  // 0 = hardware concurrency. Output does not depend on it.
  unsigned threads = 0;
  bool include_timings = false;
};

// Reads the config from JSON with keys matching the field names above
// ("kind", "n", "c", "p", "trials", "seed", "m", "depth", "base", "mode",
// "lambda", "threads", "timings").
ExperimentConfig ExperimentConfigFromJson(const std::string& text);

struct CellSummary {
  std::string kind;
  std::uint64_t n = 0;
  double p = 0.0;
  double c = 0.0;
  std::uint32_t m = 0;
  std::uint32_t trials = 0;
  std::uint32_t successes = 0;
  std::uint32_t skipped = 0;
  double fraction = 0.0;
};

struct GridResult {
  // Sorted by (cell, trial).
  std::vector<TrialRecord> records;
  std::vector<CellSummary> cells;

  std::string Csv() const;
  std::string SummaryJson() const;
};

// Runs every trial of every cell. Trials are dispatched to worker threads;
// trial t of a cell uses RngSeed{cfg.seed, t}, so results never depend on
// scheduling. Invalid cells become "skipped" rows.
GridResult RunGrid(const ExperimentConfig& cfg);

// Single-trial entry points used by RunGrid; `c` is informational.
TrialRecord RunUniqueTrial(int depth, std::uint64_t n, double p, double c,
                           std::optional<std::uint32_t> m, RngSeed seed);
TrialRecord RunCollisionTrial(std::uint64_t n, double p, double c, RngSeed seed);
TrialRecord RunMatchTrial(std::uint64_t n, double p, double c, int depth,
                          std::optional<std::uint32_t> m, RngSeed seed);
TrialRecord RunPmfCell(std::uint64_t n, double np);

// Modulus rule used by depth-3 trials without an override: the random-regime
// rule when np > ln n, else ceil(ln n).
std::uint32_t TrialModulus(std::uint64_t n, double p,
                           std::optional<std::uint32_t> m);

struct BenchRow {
  std::uint64_t n = 0;
  std::uint64_t edges = 0;
  double median_ms = 0.0;
  // median_ms / previous row's median_ms; 0 for the first row.
  double ratio = 0.0;
};

// Median-of-`repeats` wall time per n. Kinds: "label" (depth-3 labels plus
// uniqueness report, np = c ln n, m by the random-regime rule), "label2",
// "empty" (labels of the empty graph), "match" (end-to-end matching of
// g against a random relabeling). Graph generation is not timed.
std::vector<BenchRow> BenchScaling(const std::string& kind,
                                   const std::vector<std::uint64_t>& n_values,
                                   double c, int repeats = 5,
                                   std::uint64_t seed = 1);

std::string BenchToCsv(const std::vector<BenchRow>& rows);

}  // namespace graphcanon

#endif  // GRAPHCANON_EXPERIMENTS_H_
