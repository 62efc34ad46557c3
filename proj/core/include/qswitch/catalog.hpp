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

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qswitch/matrix.hpp"

namespace qswitch {

enum class ScenarioId {
  kDepolSingle,
  kDephaseSingle,
  kAmpdampSingle,
  kAmpdampParallel,
  kDepolMulti,
  kDephaseMulti,
  kAmpdampMulti,
  kDephasePhaseAxis,
  kAmpdampPhaseAxis,
  kCopiesThree,
  kCopiesD,
};

const std::vector<ScenarioId>& all_scenarios();
std::string to_string(ScenarioId id);
/// Throws std::invalid_argument for an unknown id.
ScenarioId parse_scenario_id(const std::string& text);

/// Scalars and probe-dependent traces the closed forms are written in.
/// exp_* are expectation values in the probe state.
struct CatalogInputs {
  double theta = 0.0;
  double Theta = 0.0;
  double p_A = 0.0;
  double p_B = 0.0;
  double p_C = 0.0;
  int d = 2;
  int n_qubits = 1;
  int copies = 3;
  Complex tr_u;
  Complex exp_u;
  Complex exp_udag;
  Complex tr_u2;
  Complex exp_u2;
  Complex exp_u2dag;
  Complex s;  // <V^dag U^dag V U>
};

/// Keyed by control-state labels (j1, j2) with j1 < j2.
using RCatalog = std::map<std::pair<int, int>, Complex>;

/// The closed forms as written for each scenario.
RCatalog r_catalog(ScenarioId id, const CatalogInputs& in);

/// Replacement forms for entries whose closed form disagrees with the Kraus
/// sum. Empty for scenarios without such entries.
RCatalog r_catalog_derived(ScenarioId id, const CatalogInputs& in);

/// copies-three with p_A = p_B = p_C = p, in the reduced form.
RCatalog copies_three_equal_p(double p, const CatalogInputs& in);

/// Single-parameter ICO information for the depolarizing switch, with
/// u = |Tr U|^2.
double q_ico_depol(double theta, double p_A, double p_B, int d, double u, double du_dtheta);

/// Best DCO information for a depolarized unitary: p^2/(p + 2(1-p)/d) gap^2.
double q_dco_depol_bound(double p_eff, int d, double gap);

/// 2 (pA pB)^n / (1 + (1 - pA pB)^n + (pA pB)^n).
double ghz_damping_qfi(int n, double p_A, double p_B);

/// ICO information at p_A = p_B = 1/2 for dephasing, given Re s(theta).
double dephasing_halfhalf_qfi(double theta, const std::function<double(double)>& re_s);

/// Leading small-p ICO information for single-qubit amplitude damping.
double q_ico_damp_small_p(double theta, double p_A, double p_B);

/// u = |Tr U|^2 and du/dtheta for a spin-(two_j/2) rotation by theta.
struct SpinCharacter {
  double u;
  double du;
};
SpinCharacter spin_character(double theta, int two_j);

using Matrix3 = std::array<std::array<double, 3>, 3>;
using Matrix2 = std::array<std::array<double, 2>, 2>;

/// depol-multi Fisher matrix over (theta, p_A, p_B) at p_A = p_B = 0.
Matrix3 depol_multi_fisher_noiseless(int d, double u, double du);
/// Large-d limit of the (p_A, p_B) block of the depol-multi Fisher matrix.
Matrix2 depol_multi_fisher_large_d(double p_A, double p_B);
/// dephase-multi inverse Fisher matrix over (theta, p_A, p_B) at p = 1/2.
Matrix3 dephase_multi_inverse_half(double theta);

}  // namespace qswitch
