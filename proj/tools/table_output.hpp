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

#pragma once

#include <nlohmann/json.hpp>
#include <ostream>
#include <string>

#include "qswitch/scenarios.hpp"

namespace qswitch::cli {

/// 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double x);

/// Header row, then one row per sweep row. A trailing "flags" column is
/// present only when some row carries a flag.
void write_csv(const SweepResult& result, std::ostream& out);

/// {"metadata": ..., "rows": [...]}; non-finite values become null.
nlohmann::ordered_json to_json(const SweepResult& result, const nlohmann::ordered_json& metadata);

}  // namespace qswitch::cli
