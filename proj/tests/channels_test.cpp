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

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace qswitch {
namespace {

using testing::kI;
using testing::kPi;

ComplexMatrix plus_state() {
  const double h = 1.0 / std::sqrt(2.0);
  return testing::ket_bra({h, h}, {h, h});
}

TEST(UnitaryChannel, SingleOperator) {
  const KrausChannel id = unitary_channel(ComplexMatrix::identity(2));
  ASSERT_EQ(id.kraus_ops.size(), 1u);
  EXPECT_MATRIX_NEAR(id.kraus_ops[0], ComplexMatrix::identity(2), 0.0);

  const ComplexMatrix u = ComplexMatrix::diagonal({kI, -kI});
  const KrausChannel ch = unitary_channel(u);
  EXPECT_MATRIX_NEAR(ch.kraus_ops[0], u, 0.0);
  EXPECT_LT(ch.completeness_defect(), 1e-12);
}

TEST(UnitaryChannel, RejectsNonUnitary) {
  EXPECT_THROW(unitary_channel(2.0 * ComplexMatrix::identity(2)), std::invalid_argument);
}

TEST(Su2Unitary, ZeroAngle) {
  EXPECT_MATRIX_NEAR(su2_unitary(0.0, Axis{0.7, 1.3}, 1), ComplexMatrix::identity(2), 1e-14);
}

TEST(Su2Unitary, ZAxisIsDiagonal) {
  for (double th : {0.3, 1.1, 2.9}) {
    const ComplexMatrix u = su2_unitary(th, Axis::z(), 1);
    EXPECT_MATRIX_NEAR(u, ComplexMatrix::diagonal({std::polar(1.0, th / 2), std::polar(1.0, -th / 2)}), 1e-14);
    EXPECT_NEAR(std::norm(u.trace()), 4 * std::cos(th / 2) * std::cos(th / 2), 1e-13);
  }
}

TEST(Su2Unitary, XAxisHalfTurn) {
  EXPECT_MATRIX_NEAR(su2_unitary(kPi, Axis::x(), 1), kI * pauli_x(), 1e-14);
}

TEST(Su2Unitary, SpinMatricesAlgebra) {
  for (int two_j : {1, 2, 3, 4}) {
    const auto s = spin_matrices(two_j);
    const ComplexMatrix comm = s[0] * s[1] - s[1] * s[0];
    EXPECT_LT(max_abs_diff(comm, kI * s[2]), 1e-12) << two_j;
    const double j = two_j / 2.0;
    const ComplexMatrix casimir = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
    EXPECT_LT(max_abs_diff(casimir, j * (j + 1) * ComplexMatrix::identity(two_j + 1)), 1e-12);
    EXPECT_NEAR(s[2](0, 0).real(), j, 1e-15);
  }
}

TEST(Depolarizing, Endpoints) {
  std::mt19937_64 rng(1);
  const ComplexMatrix rho = testing::random_state(2, rng);
  EXPECT_MATRIX_NEAR(apply_channel(depolarizing_channel(2, 1.0), rho), rho, 1e-14);
  EXPECT_MATRIX_NEAR(apply_channel(depolarizing_channel(2, 0.0), rho), 0.5 * ComplexMatrix::identity(2), 1e-14);
}

TEST(Depolarizing, QutritAction) {
  std::mt19937_64 rng(2);
  const ComplexMatrix rho = testing::random_state(3, rng);
  const ComplexMatrix expected = 0.4 * rho + (0.6 / 3.0) * ComplexMatrix::identity(3);
  const KrausChannel ch = depolarizing_channel(3, 0.4);
  EXPECT_EQ(ch.kraus_ops.size(), 10u);
  EXPECT_MATRIX_NEAR(apply_channel(ch, rho), expected, 1e-14);
}

TEST(DepolarizingPauli, MatchesMatrixUnitForm) {
  std::mt19937_64 rng(3);
  const KrausChannel pauli_one = depolarizing_channel_pauli(1.0);
  ASSERT_EQ(pauli_one.kraus_ops.size(), 4u);
  EXPECT_MATRIX_NEAR(pauli_one.kraus_ops[0], ComplexMatrix::identity(2), 0.0);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_LT(frobenius_norm(pauli_one.kraus_ops[k]), 1e-15);

  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix rho = testing::random_state(2, rng);
    EXPECT_MATRIX_NEAR(apply_channel(depolarizing_channel_pauli(0.0), rho), 0.5 * ComplexMatrix::identity(2),
                       1e-14);
    const double p = testing::uniform(rng, 0, 1);
    EXPECT_LT(max_abs_diff(apply_channel(depolarizing_channel_pauli(p), rho),
                           apply_channel(depolarizing_channel(2, p), rho)),
              1e-12);
  }
  const ComplexMatrix rho = testing::random_state(2, rng);
  EXPECT_MATRIX_NEAR(apply_channel(depolarizing_channel_pauli(0.3), rho),
                     apply_channel(depolarizing_channel(2, 0.3), rho), 1e-14);
}

TEST(Dephasing, Endpoints) {
  std::mt19937_64 rng(4);
  const ComplexMatrix rho = testing::random_state(2, rng);
  EXPECT_MATRIX_NEAR(apply_channel(dephasing_channel(1.0, pauli_y()), rho), rho, 1e-14);
  EXPECT_MATRIX_NEAR(apply_channel(dephasing_channel(0.0, pauli_z()), rho), pauli_z() * rho * pauli_z(), 1e-14);
}

TEST(Dephasing, HalfYOnPlusState) {
  const ComplexMatrix out = apply_channel(dephasing_channel(0.5, pauli_y()), plus_state());
  EXPECT_MATRIX_NEAR(out, 0.5 * ComplexMatrix::identity(2), 1e-15);
}

TEST(AmplitudeDamping, Endpoints) {
  std::mt19937_64 rng(5);
  const ComplexMatrix rho = testing::random_state(2, rng);
  EXPECT_MATRIX_NEAR(apply_channel(amplitude_damping_channel(1.0, Sink::kGround), rho), rho, 1e-15);
  EXPECT_MATRIX_NEAR(apply_channel(amplitude_damping_channel(0.0, Sink::kGround), rho),
                     ComplexMatrix::unit(2, 0, 0), 1e-15);
  EXPECT_MATRIX_NEAR(apply_channel(amplitude_damping_channel(0.0, Sink::kExcited), rho),
                     ComplexMatrix::unit(2, 1, 1), 1e-15);
}

TEST(AmplitudeDamping, HalfOnExcited) {
  const ComplexMatrix out = apply_channel(amplitude_damping_channel(0.5, Sink::kGround), ComplexMatrix::unit(2, 1, 1));
  EXPECT_MATRIX_NEAR(out, ComplexMatrix::diagonal({0.5, 0.5}), 1e-15);
}

TEST(ParallelChannel, Cases) {
  const KrausChannel base = amplitude_damping_channel(0.5, Sink::kGround);
  const KrausChannel one = parallel_channel(base, 1);
  ASSERT_EQ(one.kraus_ops.size(), base.kraus_ops.size());
  for (std::size_t k = 0; k < base.kraus_ops.size(); ++k) EXPECT_MATRIX_NEAR(one.kraus_ops[k], base.kraus_ops[k], 0.0);

  const ComplexMatrix u = su2_unitary(0.9, Axis{0.4, 0.2}, 1);
  const KrausChannel uu = parallel_channel(unitary_channel(u), 2);
  ASSERT_EQ(uu.kraus_ops.size(), 1u);
  EXPECT_MATRIX_NEAR(uu.kraus_ops[0], kron(u, u), 1e-15);

  const ComplexMatrix single = apply_channel(base, 0.5 * ComplexMatrix::identity(2));
  const ComplexMatrix two = apply_channel(parallel_channel(base, 2), 0.25 * ComplexMatrix::identity(4));
  EXPECT_MATRIX_NEAR(two, kron(single, single), 1e-15);
}

TEST(JointUnitaryDepol, Endpoints) {
  std::mt19937_64 rng(6);
  const ComplexMatrix u = su2_unitary(kPi / 3, Axis::z(), 1);
  const ComplexMatrix rho = testing::random_state(2, rng);
  EXPECT_MATRIX_NEAR(apply_channel(joint_unitary_depol(u, 1.0), rho), u * rho * u.adjoint(), 1e-14);
  EXPECT_MATRIX_NEAR(apply_channel(joint_unitary_depol(u, 0.0), rho), 0.5 * ComplexMatrix::identity(2), 1e-14);
  const ComplexMatrix expected = 0.7 * (u * rho * u.adjoint()) + 0.15 * ComplexMatrix::identity(2);
  EXPECT_MATRIX_NEAR(apply_channel(joint_unitary_depol(u, 0.7), rho), expected, 1e-14);
}

TEST(ApplyDco, EmptySequence) {
  std::mt19937_64 rng(7);
  const ComplexMatrix rho = testing::random_state(3, rng);
  EXPECT_MATRIX_NEAR(apply_dco({}, rho), rho, 0.0);
}

TEST(ApplyDco, DepolarizedRotation) {
  const double pa = 0.3;
  const double pb = 0.8;
  const ComplexMatrix u = su2_unitary(1.2, Axis::z(), 1);
  const ComplexMatrix out =
      apply_dco({depolarizing_channel(2, pa), unitary_channel(u), depolarizing_channel(2, pb)}, plus_state());
  const ComplexMatrix expected =
      pa * pb * (u * plus_state() * u.adjoint()) + 0.5 * (1 - pa * pb) * ComplexMatrix::identity(2);
  EXPECT_MATRIX_NEAR(out, expected, 1e-14);
}

TEST(ApplyDco, AmplitudeDampedRotationMatrix) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 10; ++rep) {
    const double pa = testing::uniform(rng, 0, 1);
    const double pb = testing::uniform(rng, 0, 1);
    const double th = testing::uniform(rng, 0, 2 * kPi);
    const ComplexMatrix rho = testing::random_state(2, rng);
    const ComplexMatrix out = apply_dco({amplitude_damping_channel(pa, Sink::kGround),
                                         unitary_channel(su2_unitary(th, Axis::z(), 1)),
                                         amplitude_damping_channel(pb, Sink::kGround)},
                                        rho);
    const double s = std::sqrt(pa * pb);
    const double r00 = rho(0, 0).real();
    const ComplexMatrix expected{{1 - pa * pb * (1 - r00), std::polar(1.0, th) * s * rho(0, 1)},
                                 {std::polar(1.0, -th) * s * rho(1, 0), pa * pb * (1 - r00)}};
    EXPECT_MATRIX_NEAR(out, expected, 1e-14);
  }
}

TEST(ApplyDco, TraceAndPositivity) {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix rho = testing::random_state(3, rng);
    const ComplexMatrix u = su2_unitary(testing::uniform(rng, 0, 6), Axis{1.0, 2.0}, 2);
    const ComplexMatrix out = apply_dco({depolarizing_channel(3, testing::uniform(rng, 0, 1)), unitary_channel(u),
                                         dephasing_channel(testing::uniform(rng, 0, 1), su2_unitary(kPi, Axis::y(), 2))},
                                        rho);
    EXPECT_NEAR(out.trace().real(), 1.0, 1e-12);
    EXPECT_GT(min_eigenvalue(out), -1e-10);
  }
}

TEST(ApplyDco, GroundDampingFixedPoint) {
  std::mt19937_64 rng(10);
  const ComplexMatrix rho = testing::random_state(2, rng);
  const ComplexMatrix out = apply_dco({amplitude_damping_channel(0.0, Sink::kGround),
                                       unitary_channel(su2_unitary(0.4, Axis::z(), 1)),
                                       amplitude_damping_channel(0.0, Sink::kGround)},
                                      rho);
  EXPECT_MATRIX_NEAR(out, ComplexMatrix::unit(2, 0, 0), 1e-15);
}

TEST(Completeness, AllConstructors) {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 10; ++rep) {
    const double p = testing::uniform(rng, 0, 1);
    const ComplexMatrix u = su2_unitary(testing::uniform(rng, 0, 6), Axis{0.3, 0.9}, 3);
    EXPECT_LT(depolarizing_channel(4, p).completeness_defect(), 1e-10);
    EXPECT_LT(depolarizing_channel_pauli(p).completeness_defect(), 1e-10);
    EXPECT_LT(dephasing_channel(p, u).completeness_defect(), 1e-10);
    EXPECT_LT(amplitude_damping_channel(p, Sink::kExcited).completeness_defect(), 1e-10);
    EXPECT_LT(parallel_channel(amplitude_damping_channel(p, Sink::kGround), 3).completeness_defect(), 1e-10);
    EXPECT_LT(joint_unitary_depol(u, p).completeness_defect(), 1e-10);
  }
}

TEST(Validation, RejectsBadProbabilities) {
  EXPECT_THROW(depolarizing_channel(2, 1.5), std::invalid_argument);
  EXPECT_THROW(amplitude_damping_channel(-0.1, Sink::kGround), std::invalid_argument);
  EXPECT_THROW(parallel_channel(depolarizing_channel(2, 0.5), 0), std::invalid_argument);
}

}  // namespace
}  // namespace qswitch
