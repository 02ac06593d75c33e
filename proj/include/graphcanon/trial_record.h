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

#ifndef GRAPHCANON_TRIAL_RECORD_H_
#define GRAPHCANON_TRIAL_RECORD_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace graphcanon {

inline constexpr int kTrialSchemaVersion = 1;

// One experiment outcome. Fields that do not apply to a kind keep their
// defaults. Every record carries its full parameterization.
//
// CSV columns, in order (see TrialCsvHeader):
//   schema, kind, status, note, trial, seed, n, p, c, m, base, mode, lambda,
//   success, all_unique, duplicate_groups, collision_found,
//   collision_groups, collision_pairs, good_count, profile_count,
//   log_profile_bound, profile_bound_ok, match_outcome, matched, verified,
//   class_min, class_max, p_lower_ratio, p_upper_ratio, max_pmf, pmf_bound,
//   wall_ms
struct TrialRecord {
  int schema = kTrialSchemaVersion;
  std::string kind;
  // "ok" or "skipped" (invalid cell; `note` says why).
  std::string status = "ok";
  std::string note;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  double p = 0.0;
  // np / ln n when the cell was given as a multiplier, else 0.
  double c = 0.0;
  std::uint32_t m = 0;
  std::string base;
  std::string mode;
  double lambda = 0.0;
  // Kind-specific verdict that the cell's success fraction counts.
  bool success = false;
  bool all_unique = false;
  std::uint64_t duplicate_groups = 0;
  bool collision_found = false;
  std::uint64_t collision_groups = 0;
  std::uint64_t collision_pairs = 0;
  std::uint64_t good_count = 0;
  std::uint64_t profile_count = 0;
  double log_profile_bound = 0.0;
  bool profile_bound_ok = false;
  std::string match_outcome;
  bool matched = false;
  bool verified = false;
  std::uint64_t class_min = 0;
  std::uint64_t class_max = 0;
  // Smoothed window diagnostics: p n / ln^2 n (want >> 1) and p ln^3 n
  // (want << 1).
  double p_lower_ratio = 0.0;
  double p_upper_ratio = 0.0;
  double max_pmf = 0.0;
  double pmf_bound = 0.0;
  // Zero unless timings were requested, so CSV output stays reproducible.
  double wall_ms = 0.0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

std::string TrialCsvHeader();
std::string ToCsvRow(const TrialRecord& record);
// Parses one row produced by ToCsvRow. Throws ParseError on malformed input.
TrialRecord FromCsvRow(std::string_view row);

void to_json(nlohmann::json& j, const TrialRecord& record);
void from_json(const nlohmann::json& j, TrialRecord& record);

// Header line plus one line per record.
std::string ToCsv(const std::vector<TrialRecord>& records);

}  // namespace graphcanon

#endif  // GRAPHCANON_TRIAL_RECORD_H_
