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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qswitch/matrix.hpp"

namespace qswitch::testing {

inline constexpr double kPi = std::numbers::pi;
inline const Complex kI{0.0, 1.0};

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = {g(rng), g(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(n, n, rng);
  return 0.5 * (a + a.adjoint());
}

/// Density matrix from a Ginibre draw, written out independently of the library.
inline ComplexMatrix random_state(std::size_t n, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(n, n, rng);
  ComplexMatrix rho = a * a.adjoint();
  return (1.0 / rho.trace().real()) * rho;
}

inline ComplexMatrix ket_bra(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  ComplexMatrix m(a.size(), b.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace qswitch::testing

#define EXPECT_MATRIX_NEAR(a, b, tol) EXPECT_LE(::qswitch::max_abs_diff((a), (b)), (tol))
#define EXPECT_COMPLEX_NEAR(a, b, tol) EXPECT_LE(std::abs(Complex(a) - Complex(b)), (tol))
