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

#include "qswitch/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace qswitch {

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kMaxParallelOps = 1e6;

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": probability out of [0,1]");
  }
}

void require_unitary(const ComplexMatrix& u, const char* what) {
  if (!u.is_square() || u.rows() == 0) {
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
  }
  if (max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows())) > kUnitaryTol) {
    throw std::invalid_argument(std::string(what) + ": matrix is not unitary");
  }
}

}  // namespace

double KrausChannel::completeness_defect() const {
  ComplexMatrix sum(dim, dim);
  for (const auto& k : kraus_ops) sum += k.adjoint() * k;
  return max_abs_diff(sum, ComplexMatrix::identity(dim));
}

std::array<double, 3> Axis::direction() const {
  return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
          std::cos(polar)};
}

std::array<ComplexMatrix, 3> spin_matrices(int two_j) {
  if (two_j < 0) throw std::invalid_argument("spin_matrices: two_j must be nonnegative");
  const std::size_t d = static_cast<std::size_t>(two_j) + 1;
  const double j = two_j / 2.0;
  ComplexMatrix jp(d, d);
  ComplexMatrix jz(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const double m = j - static_cast<double>(k);
    jz(k, k) = m;
    // J+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>, and |m+1> sits at index k-1.
    if (k > 0) jp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const ComplexMatrix jm = jp.adjoint();
  ComplexMatrix jx = 0.5 * (jp + jm);
  ComplexMatrix jy = Complex(0.0, -0.5) * (jp - jm);
  return {jx, jy, jz};
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix su2_unitary(double theta, const Axis& axis, int two_j) {
  if (two_j < 1) throw std::invalid_argument("su2_unitary: two_j must be at least 1");
  const auto js = spin_matrices(two_j);
  const auto n = axis.direction();
  ComplexMatrix g = n[0] * js[0] + n[1] * js[1] + n[2] * js[2];
  return unitary_exp(g, theta);
}

KrausChannel unitary_channel(const ComplexMatrix& u) {
  require_unitary(u, "unitary_channel");
  return {u.rows(), {u}, "unitary"};
}

KrausChannel depolarizing_channel(std::size_t d, double p) {
  require_probability(p, "depolarizing_channel");
  if (d == 0) throw std::invalid_argument("depolarizing_channel: dimension must be positive");
  KrausChannel ch{d, {}, "depol"};
  ch.kraus_ops.reserve(d * d + 1);
  ch.kraus_ops.push_back(std::sqrt(p) * ComplexMatrix::identity(d));
  const double w = std::sqrt((1.0 - p) / static_cast<double>(d));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) ch.kraus_ops.push_back(w * ComplexMatrix::unit(d, k, l));
  return ch;
}

KrausChannel depolarizing_channel_pauli(double p) {
  require_probability(p, "depolarizing_channel_pauli");
  const double a = std::sqrt(1.0 + 3.0 * p) / 2.0;
  const double b = std::sqrt(1.0 - p) / 2.0;
  return {2,
          {a * ComplexMatrix::identity(2), b * pauli_x(), b * pauli_y(), b * pauli_z()},
          "depol-pauli"};
}

KrausChannel dephasing_channel(double p, const ComplexMatrix& v) {
  require_probability(p, "dephasing_channel");
  require_unitary(v, "dephasing_channel");
  return {v.rows(), {std::sqrt(p) * ComplexMatrix::identity(v.rows()), std::sqrt(1.0 - p) * v},
          "dephase"};
}

KrausChannel amplitude_damping_channel(double p, Sink sink) {
  require_probability(p, "amplitude_damping_channel");
  const double sp = std::sqrt(p);
  const double sq = std::sqrt(1.0 - p);
  if (sink == Sink::kGround) {
    return {2, {ComplexMatrix::diagonal({1.0, sp}), sq * ComplexMatrix::unit(2, 0, 1)},
            "ampdamp-ground"};
  }
  return {2, {ComplexMatrix::diagonal({sp, 1.0}), sq * ComplexMatrix::unit(2, 1, 0)},
          "ampdamp-excited"};
}

KrausChannel parallel_channel(const KrausChannel& base, int n) {
  if (n < 1) throw std::invalid_argument("parallel_channel: n must be at least 1");
  if (std::pow(static_cast<double>(base.kraus_ops.size()), n) > kMaxParallelOps) {
    throw std::invalid_argument("parallel_channel: operator count exceeds 1e6");
  }
  KrausChannel out = base;
  for (int i = 1; i < n; ++i) {
    std::vector<ComplexMatrix> next;
    next.reserve(out.kraus_ops.size() * base.kraus_ops.size());
    for (const auto& a : out.kraus_ops)
      for (const auto& b : base.kraus_ops) next.push_back(kron(a, b));
    out.kraus_ops = std::move(next);
    out.dim *= base.dim;
  }
  out.label = base.label + "^" + std::to_string(n);
  return out;
}

KrausChannel joint_unitary_depol(const ComplexMatrix& u, double p) {
  require_probability(p, "joint_unitary_depol");
  require_unitary(u, "joint_unitary_depol");
  KrausChannel ch = depolarizing_channel(u.rows(), p);
  for (auto& k : ch.kraus_ops) k = k * u;
  ch.label = "unitary-depol";
  return ch;
}

ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& rho) {
  if (!rho.is_square() || rho.rows() != ch.dim) {
    throw std::invalid_argument("apply_channel: dimension mismatch");
  }
  ComplexMatrix out(ch.dim, ch.dim);
  for (const auto& k : ch.kraus_ops) out += k * rho * k.adjoint();
  return out;
}

ComplexMatrix apply_dco(const std::vector<KrausChannel>& channels, const ComplexMatrix& rho) {
  ComplexMatrix out = rho;
  for (const auto& ch : channels) out = apply_channel(ch, out);
  return out;
}

}  // namespace qswitch
