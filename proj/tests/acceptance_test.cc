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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Thresholds are fixed; a failing criterion
// is reported, never retried with other seeds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graphcanon/experiments.h"
#include "graphcanon/graph.h"
#include "graphcanon/isomorph.h"
#include "graphcanon/numerics.h"
#include "graphcanon/rng.h"
#include "graphcanon/signatures.h"
#include "graphcanon/smoothed.h"

namespace graphcanon {
namespace {

constexpr std::uint64_t kSeed = 1;
constexpr std::uint32_t kTrials = 30;
constexpr std::uint32_t kRequired = 27;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double PForC(std::uint64_t n, double c) {
  return c * std::log(static_cast<double>(n)) / static_cast<double>(n);
}

ExperimentConfig GridConfig(ExperimentKind kind, std::uint64_t n, double c) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  cfg.n_values = {n};
  cfg.c_values = {c};
  cfg.trials = kTrials;
  cfg.seed = kSeed;
  return cfg;
}

std::uint32_t Successes(const GridResult& grid) {
  std::uint32_t count = 0;
  for (const TrialRecord& r : grid.records) count += r.status == "ok" && r.success;
  return count;
}

// Sorted canonical label strings of every vertex in one table.
std::vector<std::string> LabelMultiset(const LabelTable& table) {
  std::vector<std::string> labels;
  labels.reserve(table.size());
  for (VertexId v = 0; v < table.size(); ++v) labels.push_back(table.CanonicalString(v));
  std::sort(labels.begin(), labels.end());
  return labels;
}

Outcome Equivariance() {
  int mismatches = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng({kSeed, 1000 + t});
    const VertexId n = 16 + static_cast<VertexId>(rng.NextU64() % (512 - 16 + 1));
    const double c = t % 2 == 0 ? 1.5 : 3.0;
    const double p = PForC(n, c);
    const Graph g = GenerateErdosRenyi(n, p, {kSeed, t});
    const Graph h = Permute(g, RandomPermutation(n, rng));
    const std::vector<const Graph*> graphs = {&g, &h};
    const std::vector<LabelTable> tables =
        ComputeLabelTables(graphs, Depth::kThree, TrialModulus(n, p, std::nullopt));
    mismatches += LabelMultiset(tables[0]) != LabelMultiset(tables[1]);
  }
  return {mismatches == 0, std::to_string(mismatches) + " of 200 multisets differ"};
}

Outcome OracleAgreement() {
  int disagreements = 0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    Rng rng({kSeed, 2000 + t});
    const VertexId n = 1 + static_cast<VertexId>(rng.NextU64() % 7);
    const double p = 0.2 + 0.6 * static_cast<double>(rng.NextU64() % 1000) / 1000.0;
    const Graph a = GenerateErdosRenyi(n, p, {kSeed, 3000 + t});
    const Graph b = t % 2 == 0 ? Permute(a, RandomPermutation(n, rng))
                               : GenerateErdosRenyi(n, p, {kSeed, 4000 + t});
    const bool iso = BruteForceIsomorphic(a, b).has_value();
    for (Depth depth : {Depth::kTwo, Depth::kThree}) {
      const MatchResult r = MatchBySignatures(a, b, depth);
      if (r.matched() && (!iso || !r.verified)) ++disagreements;
      if (r.non_isomorphic() && iso) ++disagreements;
    }
  }
  return {disagreements == 0, std::to_string(disagreements) + " disagreements"};
}

Outcome Unique3() {
  const GridResult grid = RunGrid(GridConfig(ExperimentKind::kUnique3, 8192, 3.0));
  const std::uint32_t ok = Successes(grid);
  return {ok >= kRequired, std::to_string(ok) + "/30 all_unique"};
}

// Shared by criteria 4 and 6.
const GridResult& CollisionGrid() {
  static const GridResult grid = RunGrid(GridConfig(ExperimentKind::kCollide2, 8192, 1.2));
  return grid;
}

Outcome Collisions() {
  const GridResult& grid = CollisionGrid();
  std::uint32_t found = 0;
  std::uint32_t unverified = 0;
  std::uint64_t skipped_total = 0;
  for (const TrialRecord& r : grid.records) {
    found += r.collision_found && r.verified;
    unverified += r.collision_found && !r.verified;
    skipped_total += r.status != "ok";
  }
  std::ostringstream out;
  out << found << "/30 with a verified pair, " << unverified
      << " trials with an unverified group";
  return {found >= kRequired && unverified == 0 && skipped_total == 0, out.str()};
}

Outcome RegimeContrast() {
  const std::uint32_t depth2 = Successes(RunGrid(GridConfig(ExperimentKind::kUnique2, 8192, 1.2)));
  const std::uint32_t depth3 = Successes(RunGrid(GridConfig(ExperimentKind::kUnique3, 8192, 1.2)));
  return {depth2 < depth3,
          "depth2 " + std::to_string(depth2) + "/30, depth3 " + std::to_string(depth3) + "/30"};
}

Outcome ProfileBound() {
  const GridResult& grid = CollisionGrid();
  std::uint32_t held = 0;
  std::uint64_t max_count = 0;
  std::uint64_t min_good = ~std::uint64_t{0};
  for (const TrialRecord& r : grid.records) {
    held += r.status == "ok" && r.profile_bound_ok;
    max_count = std::max(max_count, r.profile_count);
    min_good = std::min(min_good, r.good_count);
  }
  std::ostringstream out;
  out << held << "/30 within bound, max profile count " << max_count << ", min |B| "
      << min_good;
  return {held == kTrials, out.str()};
}

Outcome PmfGrid() {
  const std::vector<PmfGridCell> cells = DefaultPmfGrid();
  std::size_t satisfied = 0;
  for (const PmfGridCell& cell : cells) {
    satisfied += CheckPmfBound(cell.n, cell.np / static_cast<double>(cell.n)).satisfied;
  }
  return {!cells.empty() && satisfied == cells.size(),
          std::to_string(satisfied) + "/" + std::to_string(cells.size()) + " cells"};
}

Outcome Smoothed() {
  std::ostringstream out;
  bool pass = true;
  for (SmoothMode mode : {SmoothMode::kUnion, SmoothMode::kXor}) {
    ExperimentConfig cfg = GridConfig(ExperimentKind::kSmooth, 4096, 0.0);
    cfg.c_values.clear();
    cfg.base = "torus";
    cfg.mode = mode;
    const std::uint32_t ok = Successes(RunGrid(cfg));
    pass = pass && ok >= kRequired;
    out << SmoothModeName(mode) << " " << ok << "/30, ";
  }
  SmoothedConfig control =
      SmoothedConfig::WithDefaults(BaseDescriptor::Parse("torus"), 4096, SmoothMode::kUnion);
  control.p = 0.0;
  const Graph base = MakeBase(control.base, 4096);
  std::uint32_t not_unique = 0;
  for (std::uint64_t t = 0; t < kTrials; ++t) {
    not_unique += !SmoothedTrialOnBase(control, base, {kSeed, t}).all_unique;
  }
  pass = pass && not_unique == kTrials;
  out << "control not unique " << not_unique << "/30";
  return {pass, out.str()};
}

Outcome MatchPipeline() {
  const GridResult grid = RunGrid(GridConfig(ExperimentKind::kMatch, 8192, 3.0));
  std::uint32_t matched = 0;
  std::uint32_t unverified = 0;
  for (const TrialRecord& r : grid.records) {
    matched += r.matched && r.verified;
    unverified += r.matched && !r.verified;
  }
  return {matched >= kRequired && unverified == 0,
          std::to_string(matched) + "/30 matched and verified, " +
              std::to_string(unverified) + " unverified"};
}

Outcome Scaling() {
  std::vector<std::uint64_t> n_values;
  for (int k = 15; k <= 19; ++k) n_values.push_back(std::uint64_t{1} << k);
  const std::vector<BenchRow> rows = BenchScaling("label", n_values, 3.0, 5, kSeed);
  std::ostringstream out;
  bool pass = rows.size() == n_values.size();
  out << "ratios";
  for (std::size_t i = 1; i < rows.size(); ++i) {
    pass = pass && rows[i].ratio <= 3.0;
    char buf[32];
    std::snprintf(buf, sizeof(buf), " %.2f", rows[i].ratio);
    out << buf;
  }
  return {pass, out.str()};
}

Outcome Determinism() {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::kUnique3;
  cfg.n_values = {256, 1024};
  cfg.c_values = {1.5, 3.0};
  cfg.trials = kTrials;
  cfg.seed = kSeed;
  cfg.threads = 1;
  const std::string serial = RunGrid(cfg).Csv();
  const std::string rerun = RunGrid(cfg).Csv();
  cfg.threads = 4;
  const std::string parallel = RunGrid(cfg).Csv();
  ExperimentConfig collide = GridConfig(ExperimentKind::kCollide2, 2048, 1.2);
  collide.threads = 1;
  const std::string collide_serial = RunGrid(collide).Csv();
  collide.threads = 4;
  const std::string collide_parallel = RunGrid(collide).Csv();
  const bool pass = serial == rerun && serial == parallel && collide_serial == collide_parallel;
  return {pass, pass ? "CSV byte-identical" : "CSV differs"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no time limit.
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace graphcanon

int main() {
  using graphcanon::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "equivariance", 10, graphcanon::Equivariance},
      {2, "oracle_agreement", 30, graphcanon::OracleAgreement},
      {3, "unique3_c3", 300, graphcanon::Unique3},
      {4, "collide2_c1.2", 300, graphcanon::Collisions},
      {5, "regime_contrast", 0, graphcanon::RegimeContrast},
      {6, "profile_bound", 0, graphcanon::ProfileBound},
      {7, "pmf_grid", 10, graphcanon::PmfGrid},
      {8, "smoothed_torus", 300, graphcanon::Smoothed},
      {9, "match_pipeline", 0, graphcanon::MatchPipeline},
      {10, "label_scaling", 600, graphcanon::Scaling},
      {11, "determinism", 0, graphcanon::Determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    graphcanon::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = outcome.pass;
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      pass = false;
      outcome.detail += ", over time limit";
    }
    failures += !pass;
    std::printf("%s %2d %s: %s (%.1f s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
