// Copyright 2026 The qswitch Authors
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

#include "table_output.hpp"

#include <cmath>
#include <cstdio>

namespace qswitch::cli {

namespace {

bool any_flags(const SweepResult& result) {
  for (const auto& row : result.rows)
    if (!row.flags.empty()) return true;
  return false;
}

std::string join_flags(const std::vector<std::string>& flags) {
  std::string s;
  for (const auto& f : flags) {
    if (!s.empty()) s += ';';
    s += f;
  }
  return s;
}

nlohmann::ordered_json number_or_null(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(const SweepResult& result, std::ostream& out) {
  const bool flags = any_flags(result);
  bool first = true;
  auto cell = [&](const std::string& s) {
    if (!first) out << ',';
    out << s;
    first = false;
  };
  for (const auto& n : result.param_names) cell(n);
  for (const auto& c : result.columns) cell(c);
  if (flags) cell("flags");
  out << '\n';
  for (const auto& row : result.rows) {
    first = true;
    for (double v : row.params) cell(format_number(v));
    for (double v : row.values) cell(format_number(v));
    if (flags) cell(join_flags(row.flags));
    out << '\n';
  }
}

nlohmann::ordered_json to_json(const SweepResult& result, const nlohmann::ordered_json& metadata) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : result.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < result.param_names.size(); ++k) {
      obj[result.param_names[k]] = number_or_null(row.params[k]);
    }
    for (std::size_t k = 0; k < result.columns.size(); ++k) {
      obj[result.columns[k]] = number_or_null(row.values[k]);
    }
    if (!row.flags.empty()) obj["flags"] = row.flags;
    rows.push_back(std::move(obj));
  }
  nlohmann::ordered_json doc;
  doc["metadata"] = metadata;
  doc["rows"] = std::move(rows);
  return doc;
}

}  // namespace qswitch::cli
