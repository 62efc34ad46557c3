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

#include <vector>

#include "qswitch/channels.hpp"
#include "qswitch/matrix.hpp"

namespace qswitch {

/// Channel indices in application order, first-applied first.
struct CausalOrder {
  std::vector<int> permutation;

  bool operator==(const CausalOrder&) const = default;
};

struct SwitchSpec {
  std::vector<KrausChannel> channels;
  std::vector<CausalOrder> orders;  // one per control basis state
  std::vector<Complex> control_amplitudes;

  std::size_t probe_dim() const { return channels.empty() ? 0 : channels.front().dim; }
  std::size_t control_dim() const { return orders.size(); }

  /// Throws std::invalid_argument when any invariant is broken.
  void validate() const;
};

/// 1/sqrt(D) for every control basis state.
std::vector<Complex> equal_amplitudes(std::size_t d);

/// Tr of the probe operator conditioned on control coherence (j1, j2).
Complex r_element(const SwitchSpec& spec, std::size_t j1, std::size_t j2,
                  const ComplexMatrix& probe);

/// All R entries in one pass over the Kraus multi-indices.
ComplexMatrix r_matrix(const SwitchSpec& spec, const ComplexMatrix& probe);

/// Evolved control state: psi_j1 conj(psi_j2) R_j1j2.
ComplexMatrix control_state(const SwitchSpec& spec, const ComplexMatrix& probe);

/// Full output of the switch channel on control_prep (x) probe.
ComplexMatrix evolve_joint(const SwitchSpec& spec, const ComplexMatrix& control_prep,
                           const ComplexMatrix& probe);

/// Joint Kraus operators sum_j |j><j| (x) K_pi_j(n-1) ... K_pi_j(0).
std::vector<ComplexMatrix> switch_kraus_operators(const SwitchSpec& spec);

/// All n! orders, lexicographic.
std::vector<CausalOrder> all_orders(int n_channels);

}  // namespace qswitch
