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

#include "graphcanon/experiments.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "graphcanon/coloring.h"
#include "graphcanon/errors.h"
#include "graphcanon/isomorph.h"
#include "graphcanon/neighborhoods.h"
#include "graphcanon/numerics.h"
#include "graphcanon/signatures.h"

namespace graphcanon {
namespace {

// Salt separating the relabeling stream of a match trial from its graph
// stream.
constexpr std::uint64_t kPermutationSalt = 0x7f4a7c159e3779b9ULL;

struct Cell {
  std::uint64_t n = 0;
  double p = 0.0;
  double c = 0.0;
  // Non-empty when the cell cannot run.
  std::string invalid;
};

double Log(std::uint64_t n) { return std::log(static_cast<double>(n)); }

double ElapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void RecordClassSizes(const Graph& g, std::uint32_t m, TrialRecord& r) {
  const ColorAssignment colors = ModColorClasses(g, m);
  auto sizes = colors.class_sizes();
  r.class_min = *std::min_element(sizes.begin(), sizes.end());
  r.class_max = *std::max_element(sizes.begin(), sizes.end());
}

std::vector<Cell> BuildCells(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  if (cfg.kind == ExperimentKind::kPmfGrid) {
    if (cfg.n_values.empty() && cfg.c_values.empty()) {
      for (const auto& cell : DefaultPmfGrid()) {
        cells.push_back({cell.n, cell.np / static_cast<double>(cell.n), cell.np, ""});
      }
      return cells;
    }
    for (std::uint64_t n : cfg.n_values) {
      for (double np : cfg.c_values) {
        Cell cell{n, np / static_cast<double>(n), np, ""};
        if (np < 2.0 || cell.p > 1.0 / 3.0) cell.invalid = "needs np >= 2 and p <= 1/3";
        cells.push_back(cell);
      }
    }
    return cells;
  }
  for (std::uint64_t n : cfg.n_values) {
    std::vector<Cell> row;
    for (double c : cfg.c_values) {
      row.push_back({n, n >= 2 ? c * Log(n) / static_cast<double>(n) : 0.0, c, ""});
    }
    for (double p : cfg.p_values) row.push_back({n, p, 0.0, ""});
    if (row.empty() && cfg.kind == ExperimentKind::kSmooth) {
      row.push_back({n, std::pow(Log(n), 2.5) / static_cast<double>(n), 0.0, ""});
    }
    for (Cell& cell : row) {
      if (!(cell.p >= 0.0 && cell.p <= 1.0)) {
        cell.invalid = "edge probability outside [0, 1]";
      } else if (n < 2 || n > std::numeric_limits<VertexId>::max()) {
        cell.invalid = "n out of range";
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

TrialRecord SkippedRecord(const ExperimentConfig& cfg, const Cell& cell,
                          std::uint64_t trial, const std::string& why) {
  TrialRecord r;
  r.kind = ExperimentKindName(cfg.kind);
  r.status = "skipped";
  r.note = why;
  r.trial = trial;
  r.seed = cfg.seed;
  r.n = cell.n;
  r.p = cell.p;
  r.c = cell.c;
  return r;
}

bool VerifyCollisionGroups(const Graph& g, const CollisionReport& report) {
  BallExtractor extractor(g);
  for (const auto& group : report.groups) {
    const RootedSubgraph first = extractor.Extract(group.vertices.front(), 2);
    const bool tree = IsTree(first);
    const std::string code = tree ? AhuCode(first) : std::string();
    for (std::size_t i = 1; i < group.vertices.size(); ++i) {
      const RootedSubgraph other = extractor.Extract(group.vertices[i], 2);
      if (tree) {
        if (!IsTree(other) || AhuCode(other) != code) return false;
      } else if (first.graph.num_vertices() <= kBruteForceMaxVertices) {
        if (!BruteForceRootedIsomorphic(first.graph, other.graph)) return false;
      } else {
        // Accept only an explicit witness that maps root to root and
        // preserves every edge.
        const RootedSearchResult search =
            RootedIsomorphismSearch(first.graph, other.graph, kRootedSearchBudget);
        if (search.status != SearchStatus::kIsomorphic || search.permutation[0] != 0 ||
            !VerifyIsomorphism(first.graph, other.graph, search.permutation)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

ExperimentKind ExperimentKindFromString(const std::string& text) {
  for (ExperimentKind kind :
       {ExperimentKind::kUnique3, ExperimentKind::kUnique2, ExperimentKind::kCollide2,
        ExperimentKind::kSmooth, ExperimentKind::kMatch, ExperimentKind::kBench,
        ExperimentKind::kPmfGrid}) {
    if (text == ExperimentKindName(kind)) return kind;
  }
  throw ConfigError("unknown experiment kind '" + text + "'");
}

const char* ExperimentKindName(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kUnique3:
      return "unique3";
    case ExperimentKind::kUnique2:
      return "unique2";
    case ExperimentKind::kCollide2:
      return "collide2";
    case ExperimentKind::kSmooth:
      return "smooth";
    case ExperimentKind::kMatch:
      return "match";
    case ExperimentKind::kBench:
      return "bench";
    case ExperimentKind::kPmfGrid:
      return "pmfgrid";
  }
  return "unknown";
}

ExperimentConfig ExperimentConfigFromJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    if (j.contains("kind")) cfg.kind = ExperimentKindFromString(j.at("kind").get<std::string>());
    if (j.contains("n")) cfg.n_values = j.at("n").get<std::vector<std::uint64_t>>();
    if (j.contains("c")) cfg.c_values = j.at("c").get<std::vector<double>>();
    if (j.contains("p")) cfg.p_values = j.at("p").get<std::vector<double>>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<std::uint32_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("m") && !j.at("m").is_null()) cfg.m = j.at("m").get<std::uint32_t>();
    if (j.contains("depth")) cfg.depth = j.at("depth").get<int>();
    if (j.contains("base")) cfg.base = j.at("base").get<std::string>();
    if (j.contains("mode")) cfg.mode = SmoothModeFromString(j.at("mode").get<std::string>());
    if (j.contains("lambda")) cfg.lambda = j.at("lambda").get<double>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<unsigned>();
    if (j.contains("timings")) cfg.include_timings = j.at("timings").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config field: ") + e.what());
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

std::uint32_t TrialModulus(std::uint64_t n, double p,
                           std::optional<std::uint32_t> m) {
  if (m) return *m;
  if (n < 2) return 1;
  try {
    return ChooseModulus(n, p, Regime::kRandom).m;
  } catch (const RegimeError&) {
    return ChooseModulus(n, p, Regime::kSmoothed).m;
  }
}

TrialRecord RunUniqueTrial(int depth, std::uint64_t n, double p, double c,
                           std::optional<std::uint32_t> m, RngSeed seed) {
  const auto start = std::chrono::steady_clock::now();
  const Depth d = DepthFromInt(depth);
  TrialRecord r;
  r.kind = d == Depth::kThree ? "unique3" : "unique2";
  r.trial = seed.stream_id;
  r.seed = seed.seed;
  r.n = n;
  r.p = p;
  r.c = c;
  const Graph g = GenerateErdosRenyi(static_cast<VertexId>(n), p, seed);
  if (d == Depth::kThree) {
    r.m = TrialModulus(n, p, m);
    RecordClassSizes(g, r.m, r);
  }
  const LabelTable labels = AllSignatures(g, d, r.m);
  const UniquenessReport report = MakeUniquenessReport(labels);
  r.all_unique = report.all_unique;
  r.success = report.all_unique;
  r.duplicate_groups = report.duplicate_groups.size();
  r.wall_ms = ElapsedMs(start);
  return r;
}

TrialRecord RunCollisionTrial(std::uint64_t n, double p, double c, RngSeed seed) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord r;
  r.kind = "collide2";
  r.trial = seed.stream_id;
  r.seed = seed.seed;
  r.n = n;
  r.p = p;
  r.c = c;
  const Graph g = GenerateErdosRenyi(static_cast<VertexId>(n), p, seed);
  const CollisionReport report = FindTwoNeighborhoodCollisions(g, p);
  r.collision_found = report.collision_found();
  r.collision_groups = report.groups.size();
  r.collision_pairs = report.PairCount();
  r.good_count = report.good_count;
  r.profile_count = report.profile_count;
  if (n >= 16) {
    const ProfileCount bound = CountDegreeProfiles(g, p);
    if (std::isfinite(bound.log_bound)) r.log_profile_bound = bound.log_bound;
    r.profile_bound_ok =
        report.good_count == 0 ||
        std::log(static_cast<double>(report.profile_count)) <= bound.log_bound;
  }
  r.verified = VerifyCollisionGroups(g, report);
  r.success = r.collision_found && r.verified;
  r.wall_ms = ElapsedMs(start);
  return r;
}

TrialRecord RunMatchTrial(std::uint64_t n, double p, double c, int depth,
                          std::optional<std::uint32_t> m, RngSeed seed) {
  const auto start = std::chrono::steady_clock::now();
  const Depth d = DepthFromInt(depth);
  TrialRecord r;
  r.kind = "match";
  r.trial = seed.stream_id;
  r.seed = seed.seed;
  r.n = n;
  r.p = p;
  r.c = c;
  const Graph g = GenerateErdosRenyi(static_cast<VertexId>(n), p, seed);
  Rng rng(RngSeed{seed.seed ^ kPermutationSalt, seed.stream_id});
  const std::vector<VertexId> pi = RandomPermutation(static_cast<VertexId>(n), rng);
  const Graph relabeled = Permute(g, pi);
  if (d == Depth::kThree) r.m = TrialModulus(n, p, m);
  const MatchResult result = MatchBySignatures(g, relabeled, d, r.m);
  r.match_outcome = result.OutcomeName();
  r.matched = result.matched();
  r.verified = result.verified;
  if (result.matched() &&
      !VerifyIsomorphism(g, relabeled, std::get<Matched>(result.outcome).permutation)) {
    throw std::logic_error("matcher returned an invalid permutation");
  }
  r.success = r.matched && r.verified;
  r.wall_ms = ElapsedMs(start);
  return r;
}

TrialRecord RunPmfCell(std::uint64_t n, double np) {
  const auto start = std::chrono::steady_clock::now();
  const double p = np / static_cast<double>(n);
  const PmfCheck check = CheckPmfBound(n, p);
  TrialRecord r;
  r.kind = "pmfgrid";
  r.n = n;
  r.p = p;
  r.c = np;
  r.max_pmf = check.max_pmf;
  r.pmf_bound = check.bound;
  r.success = check.satisfied;
  r.wall_ms = ElapsedMs(start);
  return r;
}

GridResult RunGrid(const ExperimentConfig& cfg) {
  if (cfg.kind == ExperimentKind::kBench) {
    throw ConfigError("bench is timing-only; use BenchScaling");
  }
  DepthFromInt(cfg.depth);
  const std::vector<Cell> cells = BuildCells(cfg);
  const std::uint32_t trials_per_cell =
      cfg.kind == ExperimentKind::kPmfGrid ? 1 : cfg.trials;

  // Smoothed bases are built and class-checked once per n.
  std::vector<std::optional<Graph>> bases(cells.size());
  std::vector<std::string> base_errors(cells.size());
  if (cfg.kind == ExperimentKind::kSmooth) {
    const BaseDescriptor descriptor = BaseDescriptor::Parse(cfg.base);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!cells[i].invalid.empty()) continue;
      if (i > 0 && cells[i - 1].n == cells[i].n && (bases[i - 1] || !base_errors[i - 1].empty())) {
        bases[i] = bases[i - 1];
        base_errors[i] = base_errors[i - 1];
        continue;
      }
      try {
        Graph base = MakeBase(descriptor, static_cast<VertexId>(cells[i].n));
        const ClassMembership membership = InClass(base, cfg.lambda);
        if (membership.member) {
          bases[i] = std::move(base);
        } else {
          base_errors[i] = "base not in class for lambda";
        }
      } catch (const std::exception& e) {
        base_errors[i] = e.what();
      }
    }
  }

  struct Job {
    std::size_t cell;
    std::uint32_t trial;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const bool runnable = cells[i].invalid.empty() && base_errors[i].empty();
    const std::uint32_t count = runnable ? trials_per_cell : 1;
    for (std::uint32_t t = 0; t < count; ++t) jobs.push_back({i, t});
  }

  std::vector<TrialRecord> records(jobs.size());
  auto run_job = [&](const Job& job) {
    const Cell& cell = cells[job.cell];
    const RngSeed seed{cfg.seed, job.trial};
    if (!cell.invalid.empty()) return SkippedRecord(cfg, cell, job.trial, cell.invalid);
    if (!base_errors[job.cell].empty()) {
      return SkippedRecord(cfg, cell, job.trial, base_errors[job.cell]);
    }
    try {
      switch (cfg.kind) {
        case ExperimentKind::kUnique3:
          return RunUniqueTrial(3, cell.n, cell.p, cell.c, cfg.m, seed);
        case ExperimentKind::kUnique2:
          return RunUniqueTrial(2, cell.n, cell.p, cell.c, std::nullopt, seed);
        case ExperimentKind::kCollide2:
          return RunCollisionTrial(cell.n, cell.p, cell.c, seed);
        case ExperimentKind::kMatch:
          return RunMatchTrial(cell.n, cell.p, cell.c, cfg.depth, cfg.m, seed);
        case ExperimentKind::kPmfGrid: {
          TrialRecord r = RunPmfCell(cell.n, cell.c);
          r.seed = cfg.seed;
          return r;
        }
        case ExperimentKind::kSmooth: {
          SmoothedConfig sc;
          sc.lambda = cfg.lambda;
          sc.base = BaseDescriptor::Parse(cfg.base);
          sc.n = static_cast<VertexId>(cell.n);
          sc.p = cell.p;
          sc.mode = cfg.mode;
          sc.m = cfg.m.value_or(ChooseModulus(cell.n, cell.p, Regime::kSmoothed).m);
          TrialRecord r = SmoothedTrialOnBase(sc, *bases[job.cell], seed);
          r.c = cell.c;
          return r;
        }
        case ExperimentKind::kBench:
          break;
      }
    } catch (const std::logic_error&) {
      throw;
    } catch (const std::exception& e) {
      return SkippedRecord(cfg, cell, job.trial, e.what());
    }
    throw std::logic_error("unreachable experiment kind");
  };

  unsigned threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) records[i] = run_job(jobs[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
          try {
            records[i] = run_job(jobs[i]);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& worker : workers) worker.join();
    if (failure) std::rethrow_exception(failure);
  }
  if (!cfg.include_timings) {
    for (auto& r : records) r.wall_ms = 0.0;
  }

  GridResult result;
  result.cells.resize(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CellSummary& s = result.cells[i];
    s.kind = ExperimentKindName(cfg.kind);
    s.n = cells[i].n;
    s.p = cells[i].p;
    s.c = cells[i].c;
  }
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    CellSummary& s = result.cells[jobs[i].cell];
    const TrialRecord& r = records[i];
    if (r.status != "ok") {
      ++s.skipped;
      continue;
    }
    ++s.trials;
    s.m = r.m;
    if (r.success) ++s.successes;
  }
  for (auto& s : result.cells) {
    s.fraction = s.trials == 0 ? 0.0 : static_cast<double>(s.successes) / s.trials;
  }
  result.records = std::move(records);
  return result;
}

std::string GridResult::Csv() const { return ToCsv(records); }

std::string GridResult::SummaryJson() const {
  nlohmann::json out;
  out["schema"] = kTrialSchemaVersion;
  out["cells"] = nlohmann::json::array();
  for (const auto& s : cells) {
    out["cells"].push_back({{"kind", s.kind},
                            {"n", s.n},
                            {"p", s.p},
                            {"c", s.c},
                            {"m", s.m},
                            {"trials", s.trials},
                            {"successes", s.successes},
                            {"skipped", s.skipped},
                            {"fraction", s.fraction}});
  }
  out["records"] = records;
  return out.dump(2);
}

std::vector<BenchRow> BenchScaling(const std::string& kind,
                                   const std::vector<std::uint64_t>& n_values,
                                   double c, int repeats, std::uint64_t seed) {
  if (!std::is_sorted(n_values.begin(), n_values.end())) {
    throw ParameterError("bench n list must be increasing");
  }
  if (kind != "label" && kind != "label2" && kind != "empty" && kind != "match") {
    throw ParameterError("unknown bench kind '" + kind + "'");
  }
  repeats = std::max(1, repeats);
  std::vector<BenchRow> rows;
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    const std::uint64_t n = n_values[i];
    const double p = n >= 2 ? std::min(1.0, c * Log(n) / static_cast<double>(n)) : 0.0;
    const Graph g = kind == "empty"
                        ? Graph::Empty(static_cast<VertexId>(n))
                        : GenerateErdosRenyi(static_cast<VertexId>(n), p, RngSeed{seed, i});
    const std::uint32_t m = TrialModulus(n, p, std::nullopt);
    Graph relabeled;
    if (kind == "match") {
      Rng rng(RngSeed{seed ^ kPermutationSalt, i});
      relabeled = Permute(g, RandomPermutation(static_cast<VertexId>(n), rng));
    }
    std::vector<double> times;
    for (int rep = 0; rep < repeats; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      if (kind == "match") {
        const MatchResult result = MatchBySignatures(g, relabeled, Depth::kThree, m);
        if (result.matched() && !result.verified) throw std::logic_error("unverified match");
      } else {
        const Depth depth = kind == "label2" ? Depth::kTwo : Depth::kThree;
        const LabelTable labels = AllSignatures(g, depth, m);
        const UniquenessReport report = MakeUniquenessReport(labels);
        if (report.depth != depth) throw std::logic_error("depth mismatch");
      }
      times.push_back(ElapsedMs(start));
    }
    std::sort(times.begin(), times.end());
    BenchRow row;
    row.n = n;
    row.edges = g.num_edges();
    row.median_ms = times[times.size() / 2];
    row.ratio = rows.empty() || rows.back().median_ms <= 0.0
                    ? 0.0
                    : row.median_ms / rows.back().median_ms;
    rows.push_back(row);
  }
  return rows;
}

std::string BenchToCsv(const std::vector<BenchRow>& rows) {
  std::string out = "n,edges,median_ms,ratio\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + "," + std::to_string(row.edges) + "," +
           std::to_string(row.median_ms) + "," + std::to_string(row.ratio) + "\n";
  }
  return out;
}

}  // namespace graphcanon
