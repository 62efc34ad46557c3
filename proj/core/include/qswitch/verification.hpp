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
#include <random>
#include <string>
#include <vector>

#include "qswitch/scenarios.hpp"

namespace qswitch {

struct SuiteResult {
  std::string name;
  double max_deviation;
  double tolerance;
  int samples;
  bool passed() const { return max_deviation <= tolerance; }
};

struct VerificationReport {
  std::vector<SuiteResult> suites;
  bool all_passed() const;
};

/// Random density matrix of dimension d from a complex Ginibre draw.
ComplexMatrix random_density(std::size_t d, std::mt19937_64& rng);

/// One scenario draw for the closed-form comparison: random parameters, and a
/// random probe where the closed form allows one.
struct OracleDraw {
  ParamPoint point;
  ScenarioOptions options;
};
OracleDraw random_oracle_draw(ScenarioId id, std::mt19937_64& rng);

/// Max |closed form - Kraus sum| for every catalog entry over `draws` draws,
/// one result per (scenario, pair). The copies-D entry is a small-p
/// approximation and is not part of this comparison.
std::vector<SuiteResult> oracle_equivalence(std::uint64_t seed, int draws, bool derived);

VerificationReport run_verification(std::uint64_t seed);

}  // namespace qswitch
