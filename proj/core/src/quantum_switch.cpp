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

#include "qswitch/quantum_switch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qswitch {

namespace {

constexpr double kMaxMultiIndex = 1e8;
constexpr int kMaxOrderChannels = 5;

double multi_index_count(const SwitchSpec& spec) {
  double count = 1.0;
  for (const auto& ch : spec.channels) count *= static_cast<double>(ch.kraus_ops.size());
  return count;
}

void require_probe(const SwitchSpec& spec, const ComplexMatrix& probe) {
  if (!probe.is_square() || probe.rows() != spec.probe_dim()) {
    throw std::invalid_argument("switch: probe dimension does not match channels");
  }
}

// Calls visit(products) once per multi-index, where products[j] is the Kraus
// product along order j.
template <typename Visit>
void for_each_multi_index(const SwitchSpec& spec, const std::vector<std::size_t>& needed,
                          Visit visit) {
  spec.validate();
  if (multi_index_count(spec) > kMaxMultiIndex) {
    throw std::invalid_argument("switch: Kraus multi-index count exceeds 1e8");
  }
  const std::size_t n = spec.channels.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<ComplexMatrix> products(spec.orders.size());
  for (;;) {
    for (std::size_t j : needed) {
      const auto& perm = spec.orders[j].permutation;
      ComplexMatrix p = spec.channels[perm[0]].kraus_ops[idx[perm[0]]];
      for (std::size_t k = 1; k < perm.size(); ++k) {
        p = spec.channels[perm[k]].kraus_ops[idx[perm[k]]] * p;
      }
      products[j] = std::move(p);
    }
    visit(products);
    std::size_t c = 0;
    while (c < n) {
      if (++idx[c] < spec.channels[c].kraus_ops.size()) break;
      idx[c] = 0;
      ++c;
    }
    if (c == n) break;
  }
}

// Tr(A B^dag) for equally shaped A, B.
Complex trace_adjoint_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) t += a.entries()[i] * std::conj(b.entries()[i]);
  return t;
}

}  // namespace

void SwitchSpec::validate() const {
  if (channels.empty()) throw std::invalid_argument("SwitchSpec: no channels");
  const std::size_t d = channels.front().dim;
  for (const auto& ch : channels) {
    if (ch.dim != d) throw std::invalid_argument("SwitchSpec: channels differ in dimension");
    if (ch.kraus_ops.empty()) throw std::invalid_argument("SwitchSpec: channel without Kraus operators");
  }
  const int n = static_cast<int>(channels.size());
  double n_fact = 1.0;
  for (int k = 2; k <= n; ++k) n_fact *= k;
  if (orders.empty() || static_cast<double>(orders.size()) > n_fact) {
    throw std::invalid_argument("SwitchSpec: control dimension must lie in [1, n!]");
  }
  for (const auto& o : orders) {
    if (static_cast<int>(o.permutation.size()) != n) {
      throw std::invalid_argument("SwitchSpec: order length differs from channel count");
    }
    std::vector<int> sorted = o.permutation;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < n; ++k) {
      if (sorted[k] != k) throw std::invalid_argument("SwitchSpec: order is not a permutation");
    }
  }
  if (control_amplitudes.size() != orders.size()) {
    throw std::invalid_argument("SwitchSpec: amplitude count differs from control dimension");
  }
  double norm = 0.0;
  for (const auto& a : control_amplitudes) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("SwitchSpec: control amplitudes are not normalized");
  }
}

std::vector<Complex> equal_amplitudes(std::size_t d) {
  return std::vector<Complex>(d, Complex(1.0 / std::sqrt(static_cast<double>(d))));
}

Complex r_element(const SwitchSpec& spec, std::size_t j1, std::size_t j2,
                  const ComplexMatrix& probe) {
  require_probe(spec, probe);
  if (j1 >= spec.orders.size() || j2 >= spec.orders.size()) {
    throw std::invalid_argument("r_element: order index out of range");
  }
  std::vector<std::size_t> needed{j1};
  if (j2 != j1) needed.push_back(j2);
  Complex total = 0.0;
  for_each_multi_index(spec, needed, [&](const std::vector<ComplexMatrix>& prods) {
    total += trace_adjoint_product(prods[j1] * probe, prods[j2]);
  });
  return total;
}

ComplexMatrix r_matrix(const SwitchSpec& spec, const ComplexMatrix& probe) {
  require_probe(spec, probe);
  const std::size_t dc = spec.orders.size();
  std::vector<std::size_t> needed(dc);
  std::iota(needed.begin(), needed.end(), 0);
  ComplexMatrix r(dc, dc);
  std::vector<ComplexMatrix> left(dc);
  for_each_multi_index(spec, needed, [&](const std::vector<ComplexMatrix>& prods) {
    for (std::size_t j = 0; j < dc; ++j) left[j] = prods[j] * probe;
    for (std::size_t a = 0; a < dc; ++a)
      for (std::size_t b = a; b < dc; ++b) r(a, b) += trace_adjoint_product(left[a], prods[b]);
  });
  for (std::size_t a = 0; a < dc; ++a)
    for (std::size_t b = 0; b < a; ++b) r(a, b) = std::conj(r(b, a));
  return r;
}

ComplexMatrix control_state(const SwitchSpec& spec, const ComplexMatrix& probe) {
  ComplexMatrix r = r_matrix(spec, probe);
  const auto& psi = spec.control_amplitudes;
  for (std::size_t a = 0; a < r.rows(); ++a)
    for (std::size_t b = 0; b < r.cols(); ++b) r(a, b) *= psi[a] * std::conj(psi[b]);
  return r;
}

ComplexMatrix evolve_joint(const SwitchSpec& spec, const ComplexMatrix& control_prep,
                           const ComplexMatrix& probe) {
  require_probe(spec, probe);
  const std::size_t dc = spec.orders.size();
  const std::size_t d = spec.probe_dim();
  if (!control_prep.is_square() || control_prep.rows() != dc) {
    throw std::invalid_argument("evolve_joint: control preparation dimension mismatch");
  }
  std::vector<std::size_t> needed(dc);
  std::iota(needed.begin(), needed.end(), 0);
  // blocks[a * dc + b] accumulates sum P_a probe P_b^dag.
  std::vector<ComplexMatrix> blocks(dc * dc, ComplexMatrix(d, d));
  std::vector<ComplexMatrix> left(dc);
  for_each_multi_index(spec, needed, [&](const std::vector<ComplexMatrix>& prods) {
    for (std::size_t j = 0; j < dc; ++j) left[j] = prods[j] * probe;
    for (std::size_t a = 0; a < dc; ++a)
      for (std::size_t b = 0; b < dc; ++b) blocks[a * dc + b] += left[a] * prods[b].adjoint();
  });
  ComplexMatrix out(dc * d, dc * d);
  for (std::size_t a = 0; a < dc; ++a)
    for (std::size_t b = 0; b < dc; ++b) {
      const Complex c = control_prep(a, b);
      const auto& blk = blocks[a * dc + b];
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) out(a * d + r, b * d + s) = c * blk(r, s);
    }
  return out;
}

std::vector<ComplexMatrix> switch_kraus_operators(const SwitchSpec& spec) {
  const std::size_t dc = spec.orders.size();
  const std::size_t d = spec.probe_dim();
  std::vector<std::size_t> needed(dc);
  std::iota(needed.begin(), needed.end(), 0);
  std::vector<ComplexMatrix> ops;
  for_each_multi_index(spec, needed, [&](const std::vector<ComplexMatrix>& prods) {
    ComplexMatrix k(dc * d, dc * d);
    for (std::size_t j = 0; j < dc; ++j)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) k(j * d + r, j * d + s) = prods[j](r, s);
    ops.push_back(std::move(k));
  });
  return ops;
}

std::vector<CausalOrder> all_orders(int n_channels) {
  if (n_channels < 1 || n_channels > kMaxOrderChannels) {
    throw std::invalid_argument("all_orders: channel count must lie in [1, 5]");
  }
  std::vector<int> perm(n_channels);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<CausalOrder> out;
  do {
    out.push_back({perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace qswitch
