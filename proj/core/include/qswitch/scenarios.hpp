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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qswitch/catalog.hpp"
#include "qswitch/channels.hpp"
#include "qswitch/fisher.hpp"
#include "qswitch/quantum_switch.hpp"

namespace qswitch {

struct ParamSpec {
  std::string name;
  double default_value;
  double lo;
  double hi;
  std::vector<double> singular;  // endpoints nudged inward when hit by a grid
  std::string help;
};

struct ScenarioInfo {
  ScenarioId id;
  std::string summary;
  std::vector<ParamSpec> params;
  std::vector<std::string> default_estimate;
  std::vector<std::string> default_columns;  // "f_*" style wildcards allowed
  int default_dim;
};

const ScenarioInfo& scenario_info(ScenarioId id);

enum class DepolGauge { kMatrixUnits, kPauli };

struct ScenarioOptions {
  int dim = 0;  // 0 selects the scenario default
  std::optional<Axis> dephasing_axis;
  Sink sink_a = Sink::kGround;
  Sink sink_b = Sink::kGround;
  int copies = 3;
  bool imag_povm = false;
  DepolGauge gauge = DepolGauge::kMatrixUnits;
  std::vector<std::string> estimate;     // empty selects the default
  std::vector<int> control_labels;       // empty selects the default
  std::map<int, CausalOrder> bindings;   // extra label -> order bindings
  std::optional<ComplexMatrix> probe;    // default is maximally mixed
};

struct BuiltScenario {
  SwitchSpec spec;
  ComplexMatrix probe;
  std::vector<int> labels;  // control label per basis state
  CatalogInputs catalog;
};

/// Fills defaults and expands the shared probability p where needed.
ParamPoint resolve_point(ScenarioId id, const ParamPoint& given, const ScenarioOptions& opts);

/// Effective probe dimension for the options.
int scenario_dim(ScenarioId id, const ScenarioOptions& opts);

BuiltScenario build_scenario(ScenarioId id, const ParamPoint& point, const ScenarioOptions& opts);

/// Catalog closed forms keyed by control-basis index pairs of the built spec.
std::vector<std::pair<std::pair<std::size_t, std::size_t>, Complex>> catalog_for(
    ScenarioId id, const BuiltScenario& built, bool derived);

struct PointResult {
  std::vector<std::pair<std::string, double>> quantities;
  std::vector<std::string> flags;

  double get(const std::string& name) const;
  bool has_flag(const std::string& flag) const;
};

/// Every quantity the sweep can report at one resolved point.
PointResult evaluate_point(ScenarioId id, const ParamPoint& point, const ScenarioOptions& opts);

struct GridAxis {
  std::string name;
  double min;
  double max;
  int count;
};

struct ScenarioConfig {
  ScenarioId id = ScenarioId::kDepolSingle;
  std::vector<GridAxis> grid;
  ParamPoint fixed;
  ScenarioOptions options;
  std::vector<std::string> columns;  // empty selects the default, "all" selects everything
  int threads = 1;
  std::uint64_t seed = 0;
};

struct SweepRow {
  std::vector<double> params;  // one per grid axis
  std::vector<double> values;  // one per output column
  std::vector<std::string> flags;
};

struct SweepResult {
  std::vector<std::string> param_names;
  std::vector<std::string> columns;
  std::vector<SweepRow> rows;
};

/// Throws std::invalid_argument when the config does not fit the scenario.
void validate_config(const ScenarioConfig& config);

/// Evenly spaced inclusive values, with singular endpoints nudged by 1e-9.
std::vector<double> grid_values(const GridAxis& axis, const ParamSpec& spec,
                                std::vector<bool>* nudged = nullptr);

SweepResult run_sweep(const ScenarioConfig& config);

}  // namespace qswitch
