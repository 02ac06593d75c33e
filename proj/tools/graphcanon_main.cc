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

// graphcanon: command-line front end for generation, labeling, matching and
// the experiment harness.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphcanon/coloring.h"
#include "graphcanon/edge_list_io.h"
#include "graphcanon/errors.h"
#include "graphcanon/experiments.h"
#include "graphcanon/isomorph.h"
#include "graphcanon/neighborhoods.h"
#include "graphcanon/numerics.h"
#include "graphcanon/refinement.h"
#include "graphcanon/signatures.h"
#include "graphcanon/smoothed.h"
#include "json.hpp"

namespace gc = graphcanon;
using nlohmann::json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitAssertFailed = 2;

void Emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw gc::IoError("cannot open " + out_path + " for writing");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) throw gc::IoError("write failed: " + out_path);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gc::IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

double EmpiricalDensity(const gc::Graph& g) {
  const double n = g.num_vertices();
  return n < 2 ? 0.0 : static_cast<double>(g.num_edges()) / (0.5 * n * (n - 1));
}

// p from --p or --c (np = c ln n).
double ResolveP(std::optional<double> p, std::optional<double> c, std::uint64_t n) {
  if (p) return *p;
  if (c) return n >= 2 ? *c * std::log(static_cast<double>(n)) / static_cast<double>(n) : 0.0;
  throw gc::ParameterError("one of --p or --c is required");
}

json GroupsJson(const std::vector<std::vector<gc::VertexId>>& groups) {
  json out = json::array();
  for (const auto& group : groups) out.push_back(group);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local canonical labeling of sparse random graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate G(n,p), optionally perturbing a base graph");
  std::uint64_t gen_n = 0;
  std::optional<double> gen_p, gen_c;
  std::uint64_t gen_seed = 1, gen_stream = 0;
  std::string gen_base, gen_mode = "union", gen_out;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--p", gen_p, "edge probability");
  gen->add_option("--c", gen_c, "np = c ln n");
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--stream", gen_stream, "stream id");
  gen->add_option("--base", gen_base, "base graph: empty|ring|torus|circulant:<d>|file:<path>");
  gen->add_option("--mode", gen_mode, "union|xor");
  gen->add_option("--out", gen_out, "output edge-list path (default stdout)");

  // sign
  auto* sign = app.add_subcommand("sign", "Per-vertex signatures and uniqueness report");
  std::string sign_in, sign_out, sign_format = "json";
  int sign_depth = 3;
  std::optional<std::uint32_t> sign_m;
  bool sign_exclude = false;
  sign->add_option("--in", sign_in, "edge-list file")->required();
  sign->add_option("--depth", sign_depth, "2 or 3");
  sign->add_option("--m", sign_m, "modulus (default from edge density)");
  sign->add_flag("--exclude-center", sign_exclude,
                 "drop the center vertex from each neighbor's count list");
  sign->add_option("--format", sign_format, "json|csv");
  sign->add_option("--out", sign_out, "output path");

  // refine
  auto* refine = app.add_subcommand("refine", "Color refinement from the deg mod m coloring");
  std::string refine_in, refine_out;
  std::optional<std::uint32_t> refine_m, refine_rounds;
  bool refine_canonical = false;
  refine->add_option("--in", refine_in, "edge-list file")->required();
  refine->add_option("--m", refine_m, "modulus (default from edge density)");
  refine->add_option("--rounds", refine_rounds, "maximum rounds");
  refine->add_flag("--canonical", refine_canonical,
                   "three rounds plus graph certificate");
  refine->add_option("--out", refine_out, "output path");

  // match
  auto* match = app.add_subcommand("match", "Match two graphs by sorted signatures");
  std::string match_g1, match_g2, match_out;
  int match_depth = 3;
  std::optional<std::uint32_t> match_m;
  match->add_option("--g1", match_g1, "first edge-list file")->required();
  match->add_option("--g2", match_g2, "second edge-list file")->required();
  match->add_option("--depth", match_depth, "2 or 3");
  match->add_option("--m", match_m, "modulus (default from g1's edge density)");
  match->add_option("--out", match_out, "output path");

  // collide2
  auto* collide = app.add_subcommand("collide2", "Find vertices with isomorphic 2-neighborhoods");
  std::string collide_in, collide_out;
  std::optional<double> collide_p;
  collide->add_option("--in", collide_in, "edge-list file")->required();
  collide->add_option("--p", collide_p, "model edge probability (default: edge density)");
  collide->add_option("--out", collide_out, "output path");

  // smooth
  auto* smooth = app.add_subcommand("smooth", "Smoothed-model uniqueness trials");
  std::string smooth_base = "torus", smooth_mode = "union", smooth_config, smooth_out,
              smooth_format = "json";
  std::uint64_t smooth_n = 0, smooth_seed = 1;
  std::optional<double> smooth_p;
  std::optional<std::uint32_t> smooth_m;
  double smooth_lambda = 0.5;
  std::uint32_t smooth_trials = 1;
  smooth->add_option("--config", smooth_config, "JSON config (keys: base, n, p, mode, m, lambda, seed, trials)");
  smooth->add_option("--base", smooth_base, "empty|ring|torus|circulant:<d>|file:<path>");
  smooth->add_option("--n", smooth_n, "vertex count");
  smooth->add_option("--p", smooth_p, "perturbation probability (default ln^2.5(n)/n)");
  smooth->add_option("--mode", smooth_mode, "union|xor");
  smooth->add_option("--m", smooth_m, "modulus (default ceil(ln n))");
  smooth->add_option("--lambda", smooth_lambda, "class parameter in (0,1)");
  smooth->add_option("--seed", smooth_seed, "seed");
  smooth->add_option("--trials", smooth_trials, "number of seeded trials");
  smooth->add_option("--format", smooth_format, "json|csv");
  smooth->add_option("--out", smooth_out, "output path");

  // grid
  auto* grid = app.add_subcommand("grid", "Run an experiment grid");
  gc::ExperimentConfig grid_cfg;
  std::string grid_kind = "unique3", grid_config, grid_out, grid_summary, grid_format = "csv",
              grid_mode = "union";
  std::optional<double> grid_assert;
  grid->add_option("--config", grid_config, "JSON config file (flags override)");
  grid->add_option("--kind", grid_kind, "unique3|unique2|collide2|smooth|match|pmfgrid");
  grid->add_option("--n", grid_cfg.n_values, "vertex counts")->delimiter(',');
  grid->add_option("--c", grid_cfg.c_values, "multipliers c with np = c ln n")->delimiter(',');
  grid->add_option("--p", grid_cfg.p_values, "explicit edge probabilities")->delimiter(',');
  grid->add_option("--trials", grid_cfg.trials, "trials per cell");
  grid->add_option("--seed", grid_cfg.seed, "base seed");
  grid->add_option("--m", grid_cfg.m, "modulus override");
  grid->add_option("--depth", grid_cfg.depth, "match depth");
  grid->add_option("--base", grid_cfg.base, "smoothed base graph");
  grid->add_option("--mode", grid_mode, "union|xor");
  grid->add_option("--lambda", grid_cfg.lambda, "class parameter");
  grid->add_option("--threads", grid_cfg.threads, "worker threads (0 = all cores)");
  grid->add_flag("--timings", grid_cfg.include_timings, "fill wall_ms (output no longer reproducible)");
  grid->add_option("--out", grid_out, "output path");
  grid->add_option("--summary", grid_summary, "also write the JSON summary here");
  grid->add_option("--format", grid_format, "csv|json");
  grid->add_option("--assert", grid_assert,
                   "exit 2 unless every cell's success fraction is at least this value");

  // bench
  auto* bench = app.add_subcommand("bench", "Median-of-k scaling benchmark");
  std::string bench_kind = "label", bench_out;
  std::vector<std::uint64_t> bench_n;
  double bench_c = 3.0;
  int bench_repeats = 5;
  std::uint64_t bench_seed = 1;
  std::optional<double> bench_max_ratio;
  bench->add_option("--kind", bench_kind, "label|label2|empty|match");
  bench->add_option("--n", bench_n, "increasing vertex counts")->delimiter(',')->required();
  bench->add_option("--c", bench_c, "np = c ln n");
  bench->add_option("--repeats", bench_repeats, "timed repetitions per n");
  bench->add_option("--seed", bench_seed, "seed");
  bench->add_option("--max-ratio", bench_max_ratio, "exit 2 if any doubling ratio exceeds this");
  bench->add_option("--out", bench_out, "output path");

  // pmfgrid
  auto* pmf = app.add_subcommand("pmfgrid", "Check max binomial pmf <= e^4/sqrt(np) on a grid");
  std::string pmf_format = "csv", pmf_out;
  pmf->add_option("--format", pmf_format, "csv|json");
  pmf->add_option("--out", pmf_out, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const double p = ResolveP(gen_p, gen_c, gen_n);
      gc::Graph g = gc::GenerateErdosRenyi(static_cast<gc::VertexId>(gen_n), p,
                                           gc::RngSeed{gen_seed, gen_stream});
      if (!gen_base.empty()) {
        const gc::Graph base = gc::MakeBase(gc::BaseDescriptor::Parse(gen_base),
                                            static_cast<gc::VertexId>(gen_n));
        g = gc::SmoothModeFromString(gen_mode) == gc::SmoothMode::kUnion
                ? gc::UnionGraph(base, g)
                : gc::XorGraph(base, g);
      }
      Emit(gc::WriteEdgeList(g), gen_out);
      return 0;
    }

    if (*sign) {
      const gc::Graph g = gc::ReadEdgeListFile(sign_in);
      const gc::Depth depth = gc::DepthFromInt(sign_depth);
      const std::uint32_t m = depth == gc::Depth::kThree ? sign_m.value_or(gc::DefaultModulus(g)) : 0;
      const gc::LabelTable labels = gc::AllSignatures(g, depth, m, {sign_exclude});
      const gc::UniquenessReport report = gc::MakeUniquenessReport(labels);
      if (sign_format == "csv") {
        std::string out = "vertex,depth,label\n";
        for (gc::VertexId v = 0; v < labels.size(); ++v) {
          out += std::to_string(v) + "," + std::to_string(sign_depth) + ",\"" +
                 labels.CanonicalString(v) + "\"\n";
        }
        Emit(out, sign_out);
      } else {
        json out;
        out["depth"] = sign_depth;
        out["m"] = m;
        out["all_unique"] = report.all_unique;
        out["duplicate_groups"] = GroupsJson(report.duplicate_groups);
        out["labels"] = json::parse(gc::LabelsToJson(labels));
        Emit(out.dump(2), sign_out);
      }
      return 0;
    }

    if (*refine) {
      const gc::Graph g = gc::ReadEdgeListFile(refine_in);
      const std::uint32_t m = refine_m.value_or(gc::DefaultModulus(g));
      json out;
      out["m"] = m;
      if (refine_canonical) {
        const gc::CanonicalLabeling labeling = gc::CanonicalLabel(g, m);
        out["labels"] = labeling.labels;
        out["class_count"] = labeling.class_count;
        out["all_unique"] = labeling.all_unique;
        out["certificate"] = labeling.certificate;
      } else {
        const gc::StableColoring coloring =
            gc::Refine(g, gc::ModColorClasses(g, m), refine_rounds);
        out["colors"] = coloring.colors;
        out["rounds"] = coloring.rounds;
        out["class_count"] = coloring.class_count;
        out["discrete"] = coloring.discrete;
      }
      Emit(out.dump(2), refine_out);
      return 0;
    }

    if (*match) {
      const gc::Graph g1 = gc::ReadEdgeListFile(match_g1);
      const gc::Graph g2 = gc::ReadEdgeListFile(match_g2);
      const gc::MatchResult result =
          gc::MatchBySignatures(g1, g2, gc::DepthFromInt(match_depth), match_m);
      json out;
      out["outcome"] = result.OutcomeName();
      out["verified"] = result.verified;
      out["millis"] = result.millis;
      if (const auto* matched = std::get_if<gc::Matched>(&result.outcome)) {
        out["permutation"] = matched->permutation;
      } else if (const auto* ties = std::get_if<gc::Ambiguous>(&result.outcome)) {
        out["duplicate_groups_g1"] = GroupsJson(ties->groups_g1);
        out["duplicate_groups_g2"] = GroupsJson(ties->groups_g2);
      } else {
        const auto& witness = std::get<gc::NonIsomorphic>(result.outcome);
        out["reason"] = witness.reason;
        if (witness.rank) out["rank"] = *witness.rank;
      }
      Emit(out.dump(2), match_out);
      return 0;
    }

    if (*collide) {
      const gc::Graph g = gc::ReadEdgeListFile(collide_in);
      const double p = collide_p.value_or(EmpiricalDensity(g));
      const gc::CollisionReport report = gc::FindTwoNeighborhoodCollisions(g, p);
      json out;
      out["n"] = g.num_vertices();
      out["p"] = p;
      out["good_count"] = report.good_count;
      out["profile_count"] = report.profile_count;
      out["skipped_large"] = report.skipped_large;
      out["pair_count"] = report.PairCount();
      out["groups"] = json::array();
      for (const auto& group : report.groups) {
        out["groups"].push_back(
            {{"vertices", group.vertices}, {"method", gc::CollisionMethodName(group.method)}});
      }
      Emit(out.dump(2), collide_out);
      return 0;
    }

    if (*smooth) {
      if (!smooth_config.empty()) {
        const json j = json::parse(ReadFile(smooth_config));
        smooth_base = j.value("base", smooth_base);
        smooth_n = j.value("n", smooth_n);
        if (j.contains("p")) smooth_p = j.at("p").get<double>();
        smooth_mode = j.value("mode", smooth_mode);
        if (j.contains("m")) smooth_m = j.at("m").get<std::uint32_t>();
        smooth_lambda = j.value("lambda", smooth_lambda);
        smooth_seed = j.value("seed", smooth_seed);
        smooth_trials = j.value("trials", smooth_trials);
      }
      if (smooth_n == 0) throw gc::ConfigError("--n is required");
      gc::SmoothedConfig cfg = gc::SmoothedConfig::WithDefaults(
          gc::BaseDescriptor::Parse(smooth_base), static_cast<gc::VertexId>(smooth_n),
          gc::SmoothModeFromString(smooth_mode), smooth_lambda);
      if (smooth_p) cfg.p = *smooth_p;
      if (smooth_m) cfg.m = *smooth_m;
      std::vector<gc::TrialRecord> records;
      for (std::uint32_t t = 0; t < smooth_trials; ++t) {
        records.push_back(gc::SmoothedTrial(cfg, gc::RngSeed{smooth_seed, t}));
      }
      if (smooth_format == "csv") {
        Emit(gc::ToCsv(records), smooth_out);
      } else {
        Emit(records.size() == 1 ? json(records[0]).dump(2) : json(records).dump(2), smooth_out);
      }
      return 0;
    }

    if (*grid) {
      gc::ExperimentConfig cfg = grid_cfg;
      if (!grid_config.empty()) {
        gc::ExperimentConfig file_cfg = gc::ExperimentConfigFromJson(ReadFile(grid_config));
        // Command-line values win over the file.
        if (grid->count("--n") > 0) file_cfg.n_values = cfg.n_values;
        if (grid->count("--c") > 0) file_cfg.c_values = cfg.c_values;
        if (grid->count("--p") > 0) file_cfg.p_values = cfg.p_values;
        if (grid->count("--trials") > 0) file_cfg.trials = cfg.trials;
        if (grid->count("--seed") > 0) file_cfg.seed = cfg.seed;
        if (grid->count("--m") > 0) file_cfg.m = cfg.m;
        if (grid->count("--depth") > 0) file_cfg.depth = cfg.depth;
        if (grid->count("--base") > 0) file_cfg.base = cfg.base;
        if (grid->count("--lambda") > 0) file_cfg.lambda = cfg.lambda;
        if (grid->count("--threads") > 0) file_cfg.threads = cfg.threads;
        if (cfg.include_timings) file_cfg.include_timings = true;
        if (grid->count("--kind") == 0) grid_kind = gc::ExperimentKindName(file_cfg.kind);
        if (grid->count("--mode") == 0) grid_mode = gc::SmoothModeName(file_cfg.mode);
        cfg = file_cfg;
      }
      cfg.kind = gc::ExperimentKindFromString(grid_kind);
      cfg.mode = gc::SmoothModeFromString(grid_mode);
      const gc::GridResult result = gc::RunGrid(cfg);
      Emit(grid_format == "json" ? result.SummaryJson() : result.Csv(), grid_out);
      if (!grid_summary.empty()) Emit(result.SummaryJson(), grid_summary);
      if (grid_assert) {
        bool ok = true;
        for (const auto& cell : result.cells) {
          if (cell.trials == 0) continue;
          if (cell.fraction < *grid_assert) {
            ok = false;
            std::cerr << "assert failed: " << cell.kind << " n=" << cell.n << " p=" << cell.p
                      << " fraction " << cell.fraction << " < " << *grid_assert << "\n";
          }
        }
        if (!ok) return kExitAssertFailed;
      }
      return 0;
    }

    if (*bench) {
      const std::vector<gc::BenchRow> rows =
          gc::BenchScaling(bench_kind, bench_n, bench_c, bench_repeats, bench_seed);
      Emit(gc::BenchToCsv(rows), bench_out);
      if (bench_max_ratio) {
        for (const auto& row : rows) {
          if (row.ratio > *bench_max_ratio) return kExitAssertFailed;
        }
      }
      return 0;
    }

    if (*pmf) {
      gc::ExperimentConfig cfg;
      cfg.kind = gc::ExperimentKind::kPmfGrid;
      const gc::GridResult result = gc::RunGrid(cfg);
      Emit(pmf_format == "json" ? result.SummaryJson() : result.Csv(), pmf_out);
      for (const auto& cell : result.cells) {
        if (cell.successes != cell.trials) return kExitAssertFailed;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "graphcanon: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
