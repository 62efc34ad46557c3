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

#include "qswitch/matrix.hpp"

#include <gtest/gtest.h>

#include "qswitch/channels.hpp"
#include "test_util.hpp"

namespace qswitch {
namespace {

using testing::kI;
using testing::kPi;

ComplexMatrix reconstruct(const EigenSystem& es) {
  std::vector<Complex> diag(es.eigenvalues.begin(), es.eigenvalues.end());
  return es.eigenvectors * ComplexMatrix::diagonal(diag) * es.eigenvectors.adjoint();
}

TEST(HermEig, IdentityHasUnitEigenvalues) {
  const EigenSystem es = herm_eig(ComplexMatrix::identity(2));
  EXPECT_NEAR(es.eigenvalues[0], 1.0, 1e-14);
  EXPECT_NEAR(es.eigenvalues[1], 1.0, 1e-14);
  EXPECT_MATRIX_NEAR(es.eigenvectors.adjoint() * es.eigenvectors, ComplexMatrix::identity(2), 1e-12);
}

TEST(HermEig, PauliZAscending) {
  const EigenSystem es = herm_eig(pauli_z());
  EXPECT_NEAR(es.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(es.eigenvalues[1], 1.0, 1e-14);
}

TEST(HermEig, RandomReconstruction) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {2u, 4u, 9u, 27u}) {
    const ComplexMatrix m = testing::random_hermitian(n, rng);
    const EigenSystem es = herm_eig(m);
    EXPECT_LT(max_abs_diff(reconstruct(es), m), 1e-10) << n;
    EXPECT_LT(max_abs_diff(es.eigenvectors.adjoint() * es.eigenvectors, ComplexMatrix::identity(n)), 1e-12);
    for (std::size_t k = 1; k < n; ++k) EXPECT_LE(es.eigenvalues[k - 1], es.eigenvalues[k]);
  }
}

TEST(HermEig, RejectsNonHermitian) {
  ComplexMatrix m{{1.0, 1.0}, {0.0, 1.0}};
  EXPECT_THROW(herm_eig(m), std::invalid_argument);
  EXPECT_THROW(herm_eig(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST(UnitaryExp, ZeroAngleIsIdentity) {
  EXPECT_MATRIX_NEAR(unitary_exp(0.5 * pauli_z(), 0.0), ComplexMatrix::identity(2), 1e-14);
}

TEST(UnitaryExp, DiagonalGenerator) {
  const ComplexMatrix expected = ComplexMatrix::diagonal({kI, -kI});
  EXPECT_MATRIX_NEAR(unitary_exp(0.5 * pauli_z(), kPi), expected, 1e-14);
}

TEST(UnitaryExp, PauliXQuarterTurn) {
  const double c = std::cos(kPi / 4);
  const double s = std::sin(kPi / 4);
  const ComplexMatrix expected{{c, kI * s}, {kI * s, c}};
  EXPECT_MATRIX_NEAR(unitary_exp(0.5 * pauli_x(), kPi / 2), expected, 1e-14);
}

TEST(UnitaryExp, GroupLaw) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    const ComplexMatrix g = testing::random_hermitian(4, rng);
    const double a = testing::uniform(rng, -3, 3);
    const double b = testing::uniform(rng, -3, 3);
    EXPECT_LT(max_abs_diff(unitary_exp(g, a) * unitary_exp(g, b), unitary_exp(g, a + b)), 1e-10);
  }
}

TEST(Kron, Identities) {
  EXPECT_MATRIX_NEAR(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4),
                     0.0);
  EXPECT_MATRIX_NEAR(kron(pauli_z(), ComplexMatrix::identity(2)), ComplexMatrix::diagonal({1.0, 1.0, -1.0, -1.0}),
                     0.0);
}

TEST(Kron, MixedProduct) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix a = testing::random_matrix(2, 2, rng);
    const ComplexMatrix b = testing::random_matrix(2, 2, rng);
    const ComplexMatrix c = testing::random_matrix(2, 2, rng);
    const ComplexMatrix d = testing::random_matrix(2, 2, rng);
    EXPECT_LT(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-12);
  }
}

TEST(PartialTrace, ProductStates) {
  std::mt19937_64 rng(17);
  const ComplexMatrix rc = testing::random_state(3, rng);
  const ComplexMatrix rp = testing::random_state(2, rng);
  const ComplexMatrix joint = kron(rc, rp);
  EXPECT_MATRIX_NEAR(partial_trace(joint, 3, 2, Subsystem::kFirst), rc, 1e-14);
  EXPECT_MATRIX_NEAR(partial_trace(joint, 3, 2, Subsystem::kSecond), rp, 1e-14);
}

TEST(PartialTrace, BellStateMarginals) {
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> bell{h, 0.0, 0.0, h};
  const ComplexMatrix rho = testing::ket_bra(bell, bell);
  const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
  EXPECT_MATRIX_NEAR(partial_trace(rho, 2, 2, Subsystem::kFirst), half, 1e-15);
  EXPECT_MATRIX_NEAR(partial_trace(rho, 2, 2, Subsystem::kSecond), half, 1e-15);
}

TEST(PartialTrace, PreservesTrace) {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 10; ++rep) {
    const ComplexMatrix rho = testing::random_state(12, rng);
    EXPECT_NEAR(partial_trace(rho, 3, 4, Subsystem::kFirst).trace().real(), 1.0, 1e-12);
    EXPECT_NEAR(partial_trace(rho, 3, 4, Subsystem::kSecond).trace().real(), 1.0, 1e-12);
  }
}

TEST(PartialTrace, RejectsBadShape) {
  EXPECT_THROW(partial_trace(ComplexMatrix::identity(5), 2, 2, Subsystem::kFirst), std::invalid_argument);
}

}  // namespace
}  // namespace qswitch
