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

#include "graphcanon/trial_record.h"

#include <charconv>
#include <cstdio>
#include <string>

#include "graphcanon/errors.h"

namespace graphcanon {
namespace {

// Shortest representation that parses back to the same double.
std::string FormatDouble(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

std::string Quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> SplitCsv(std::string_view row) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const char ch = row[i];
    if (quoted) {
      if (ch == '"' && i + 1 < row.size() && row[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else if (ch != '\r') {
      fields.back() += ch;
    }
  }
  return fields;
}

template <typename T>
T ParseNumber(const std::string& field, const char* name) {
  T value{};
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    throw ParseError(1, std::string("bad value for ") + name + ": '" + field + "'");
  }
  return value;
}

bool ParseBool(const std::string& field, const char* name) {
  if (field == "1") return true;
  if (field == "0") return false;
  throw ParseError(1, std::string("bad boolean for ") + name + ": '" + field + "'");
}

// Single table driving header, writer, reader and JSON.
template <typename Visitor>
void VisitFields(TrialRecord& r, Visitor&& visit) {
  visit("schema", r.schema);
  visit("kind", r.kind);
  visit("status", r.status);
  visit("note", r.note);
  visit("trial", r.trial);
  visit("seed", r.seed);
  visit("n", r.n);
  visit("p", r.p);
  visit("c", r.c);
  visit("m", r.m);
  visit("base", r.base);
  visit("mode", r.mode);
  visit("lambda", r.lambda);
  visit("success", r.success);
  visit("all_unique", r.all_unique);
  visit("duplicate_groups", r.duplicate_groups);
  visit("collision_found", r.collision_found);
  visit("collision_groups", r.collision_groups);
  visit("collision_pairs", r.collision_pairs);
  visit("good_count", r.good_count);
  visit("profile_count", r.profile_count);
  visit("log_profile_bound", r.log_profile_bound);
  visit("profile_bound_ok", r.profile_bound_ok);
  visit("match_outcome", r.match_outcome);
  visit("matched", r.matched);
  visit("verified", r.verified);
  visit("class_min", r.class_min);
  visit("class_max", r.class_max);
  visit("p_lower_ratio", r.p_lower_ratio);
  visit("p_upper_ratio", r.p_upper_ratio);
  visit("max_pmf", r.max_pmf);
  visit("pmf_bound", r.pmf_bound);
  visit("wall_ms", r.wall_ms);
}

struct CsvWriter {
  std::string& out;
  bool first = true;

  void Sep() {
    if (!first) out += ',';
    first = false;
  }
  void operator()(const char*, const std::string& v) { Sep(); out += Quote(v); }
  void operator()(const char*, bool v) { Sep(); out += v ? '1' : '0'; }
  void operator()(const char*, double v) { Sep(); out += FormatDouble(v); }
  template <typename Int>
  void operator()(const char*, Int v) { Sep(); out += std::to_string(v); }
};

struct CsvReader {
  const std::vector<std::string>& fields;
  std::size_t index = 0;

  void operator()(const char*, std::string& v) { v = fields[index++]; }
  void operator()(const char* name, bool& v) { v = ParseBool(fields[index++], name); }
  void operator()(const char* name, double& v) {
    v = ParseNumber<double>(fields[index++], name);
  }
  template <typename Int>
  void operator()(const char* name, Int& v) {
    v = ParseNumber<Int>(fields[index++], name);
  }
};

}  // namespace

std::string TrialCsvHeader() {
  std::string out;
  TrialRecord dummy;
  bool first = true;
  VisitFields(dummy, [&](const char* name, auto&) {
    if (!first) out += ',';
    first = false;
    out += name;
  });
  return out;
}

std::string ToCsvRow(const TrialRecord& record) {
  std::string out;
  TrialRecord copy = record;
  CsvWriter writer{out};
  VisitFields(copy, writer);
  return out;
}

TrialRecord FromCsvRow(std::string_view row) {
  const std::vector<std::string> fields = SplitCsv(row);
  std::size_t expected = 0;
  TrialRecord record;
  VisitFields(record, [&](const char*, auto&) { ++expected; });
  if (fields.size() != expected) {
    throw ParseError(1, "expected " + std::to_string(expected) +
                            " CSV fields, found " + std::to_string(fields.size()));
  }
  CsvReader reader{fields};
  VisitFields(record, reader);
  if (record.schema != kTrialSchemaVersion) {
    throw ParseError(1, "unsupported schema version " + std::to_string(record.schema));
  }
  return record;
}

void to_json(nlohmann::json& j, const TrialRecord& record) {
  j = nlohmann::json::object();
  TrialRecord copy = record;
  VisitFields(copy, [&](const char* name, auto& value) { j[name] = value; });
}

void from_json(const nlohmann::json& j, TrialRecord& record) {
  VisitFields(record, [&](const char* name, auto& value) {
    j.at(name).get_to(value);
  });
}

std::string ToCsv(const std::vector<TrialRecord>& records) {
  std::string out = TrialCsvHeader();
  out += '\n';
  for (const auto& record : records) {
    out += ToCsvRow(record);
    out += '\n';
  }
  return out;
}

}  // namespace graphcanon
