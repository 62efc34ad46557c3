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
#include <numbers>
#include <string>
#include <vector>

#include "qswitch/matrix.hpp"

namespace qswitch {

struct KrausChannel {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> kraus_ops;
  std::string label;

  /// Max-entry deviation of sum K^dag K from the identity.
  double completeness_defect() const;
};

/// Rotation axis n = (sin T cos P, sin T sin P, cos T).
struct Axis {
  double polar = 0.0;    // Theta in [0, pi]
  double azimuth = 0.0;  // Phi in [0, 2 pi)

  static Axis x() { return {std::numbers::pi / 2, 0.0}; }
  static Axis y() { return {std::numbers::pi / 2, std::numbers::pi / 2}; }
  static Axis z() { return {0.0, 0.0}; }
  std::array<double, 3> direction() const;
};

enum class Sink { kGround, kExcited };

/// Spin-(two_j/2) matrices (Jx, Jy, Jz), basis ordered by descending m.
std::array<ComplexMatrix, 3> spin_matrices(int two_j);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// exp(i theta n.J) in dimension two_j + 1.
ComplexMatrix su2_unitary(double theta, const Axis& axis, int two_j);

KrausChannel unitary_channel(const ComplexMatrix& u);
KrausChannel depolarizing_channel(std::size_t d, double p);
KrausChannel depolarizing_channel_pauli(double p);
KrausChannel dephasing_channel(double p, const ComplexMatrix& v);
KrausChannel amplitude_damping_channel(double p, Sink sink);
KrausChannel parallel_channel(const KrausChannel& base, int n);
KrausChannel joint_unitary_depol(const ComplexMatrix& u, double p);

ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& rho);

/// Applies channels in sequence, first element first.
ComplexMatrix apply_dco(const std::vector<KrausChannel>& channels, const ComplexMatrix& rho);

}  // namespace qswitch
