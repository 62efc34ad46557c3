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

#include <gtest/gtest.h>

#include "qswitch/channels.hpp"
#include "test_util.hpp"

namespace qswitch {
namespace {

using testing::kPi;

constexpr int kA = 0;
constexpr int kB = 1;
constexpr int kU = 2;

SwitchSpec sandwich(const KrausChannel& a, const ComplexMatrix& u, const KrausChannel& b) {
  return {{a, b, unitary_channel(u)}, {{{kA, kU, kB}}, {{kB, kU, kA}}}, equal_amplitudes(2)};
}

// R between orders (first, second) and (second, first) for two channels, as a
// literal double sum.
Complex two_channel_r(const KrausChannel& first, const KrausChannel& second, const ComplexMatrix& rho) {
  Complex total = 0.0;
  for (const auto& f : first.kraus_ops) {
    for (const auto& s : second.kraus_ops) {
      total += ((s * f) * rho * (f * s).adjoint()).trace();
    }
  }
  return total;
}

TEST(SwitchSpec, Validation) {
  const KrausChannel a = depolarizing_channel(2, 0.5);
  SwitchSpec ok{{a, a}, {{{0, 1}}, {{1, 0}}}, equal_amplitudes(2)};
  EXPECT_NO_THROW(ok.validate());

  SwitchSpec bad_dim{{a, depolarizing_channel(3, 0.5)}, {{{0, 1}}}, {1.0}};
  EXPECT_THROW(bad_dim.validate(), std::invalid_argument);
  SwitchSpec bad_perm{{a, a}, {{{0, 0}}}, {1.0}};
  EXPECT_THROW(bad_perm.validate(), std::invalid_argument);
  SwitchSpec bad_norm{{a, a}, {{{0, 1}}, {{1, 0}}}, {1.0, 1.0}};
  EXPECT_THROW(bad_norm.validate(), std::invalid_argument);
  SwitchSpec too_many{{a, a}, {{{0, 1}}, {{1, 0}}, {{0, 1}}}, equal_amplitudes(3)};
  EXPECT_THROW(too_many.validate(), std::invalid_argument);
}

TEST(RElement, IdenticalUnitariesGiveOne) {
  std::mt19937_64 rng(1);
  const ComplexMatrix u = su2_unitary(0.8, Axis{0.5, 0.1}, 1);
  SwitchSpec spec{{unitary_channel(u), unitary_channel(u)}, {{{0, 1}}, {{1, 0}}}, equal_amplitudes(2)};
  EXPECT_COMPLEX_NEAR(r_element(spec, 0, 1, testing::random_state(2, rng)), 1.0, 1e-14);
}

TEST(RElement, FullyDepolarizedSandwich) {
  const SwitchSpec spec = sandwich(depolarizing_channel(2, 0.0), su2_unitary(kPi, Axis::z(), 1),
                                   depolarizing_channel(2, 0.0));
  EXPECT_COMPLEX_NEAR(r_element(spec, 0, 1, 0.5 * ComplexMatrix::identity(2)), 0.25, 1e-14);
}

TEST(RElement, FullyDampedSandwich) {
  const SwitchSpec spec = sandwich(amplitude_damping_channel(0.0, Sink::kGround), su2_unitary(0.0, Axis::z(), 1),
                                   amplitude_damping_channel(0.0, Sink::kGround));
  EXPECT_COMPLEX_NEAR(r_element(spec, 0, 1, 0.5 * ComplexMatrix::identity(2)), 0.5, 1e-14);
}

TEST(RElement, MatchesLiteralDoubleSum) {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 10; ++rep) {
    const KrausChannel a = amplitude_damping_channel(testing::uniform(rng, 0, 1), Sink::kGround);
    const KrausChannel b = dephasing_channel(testing::uniform(rng, 0, 1), su2_unitary(kPi, Axis{1.1, 0.3}, 1));
    const ComplexMatrix rho = testing::random_state(2, rng);
    SwitchSpec spec{{a, b}, {{{0, 1}}, {{1, 0}}}, equal_amplitudes(2)};
    EXPECT_COMPLEX_NEAR(r_element(spec, 0, 1, rho), two_channel_r(a, b, rho), 1e-14);
  }
}

TEST(RMatrix, StructuralInvariants) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<KrausChannel> chs{depolarizing_channel(2, testing::uniform(rng, 0, 1)),
                                  amplitude_damping_channel(testing::uniform(rng, 0, 1), Sink::kExcited),
                                  unitary_channel(su2_unitary(testing::uniform(rng, 0, 6), Axis{0.4, 1.0}, 1))};
    SwitchSpec spec{chs, all_orders(3), equal_amplitudes(6)};
    const ComplexMatrix r = r_matrix(spec, testing::random_state(2, rng));
    for (std::size_t i = 0; i < 6; ++i) {
      EXPECT_COMPLEX_NEAR(r(i, i), 1.0, 1e-10);
      for (std::size_t j = 0; j < 6; ++j) {
        EXPECT_COMPLEX_NEAR(r(i, j), std::conj(r(j, i)), 1e-12);
        EXPECT_LE(std::abs(r(i, j)), 1.0 + 1e-10);
      }
    }
  }
}

TEST(RMatrix, AgreesWithRElement) {
  std::mt19937_64 rng(4);
  std::vector<KrausChannel> chs{depolarizing_channel(3, 0.3), dephasing_channel(0.6, su2_unitary(kPi, Axis::y(), 2)),
                                unitary_channel(su2_unitary(1.3, Axis::x(), 2))};
  SwitchSpec spec{chs, all_orders(3), equal_amplitudes(6)};
  const ComplexMatrix probe = testing::random_state(3, rng);
  const ComplexMatrix r = r_matrix(spec, probe);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_COMPLEX_NEAR(r(i, j), r_element(spec, i, j, probe), 1e-13);
}

TEST(ControlState, IdenticalUnitariesLeaveControlPure) {
  const ComplexMatrix u = su2_unitary(0.6, Axis::z(), 1);
  SwitchSpec spec{{unitary_channel(u), unitary_channel(u)}, {{{0, 1}}, {{1, 0}}}, equal_amplitudes(2)};
  const ComplexMatrix rc = control_state(spec, 0.5 * ComplexMatrix::identity(2));
  EXPECT_MATRIX_NEAR(rc, (0.5 * ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}}), 1e-14);
}

TEST(ControlState, PlusProjection) {
  std::mt19937_64 rng(5);
  const SwitchSpec spec = sandwich(depolarizing_channel(2, 0.35), su2_unitary(1.0, Axis::z(), 1),
                                   depolarizing_channel(2, 0.55));
  const ComplexMatrix probe = testing::random_state(2, rng);
  const double r = r_element(spec, 0, 1, probe).real();
  const ComplexMatrix rc = control_state(spec, probe);
  const Complex plus = 0.5 * (rc(0, 0) + rc(0, 1) + rc(1, 0) + rc(1, 1));
  EXPECT_COMPLEX_NEAR(plus, 0.5 * (1 + r), 1e-14);
}

TEST(ControlState, DepolarizingThreeOrdersNoiseless) {
  // Orders [U,B,A], [B,A,U], [A,U,B] with p_A = p_B = 0, probe I/d.
  for (int d : {2, 3}) {
    const double th = 0.9;
    const ComplexMatrix u = su2_unitary(th, Axis::z(), d - 1);
    const double uu = std::norm(u.trace());
    SwitchSpec spec{{depolarizing_channel(d, 0.0), depolarizing_channel(d, 0.0), unitary_channel(u)},
                    {{{kU, kB, kA}}, {{kB, kA, kU}}, {{kA, kU, kB}}},
                    equal_amplitudes(3)};
    const ComplexMatrix rc = control_state(spec, (1.0 / d) * ComplexMatrix::identity(d));
    const double dd = static_cast<double>(d) * d;
    EXPECT_COMPLEX_NEAR(rc(0, 1), uu / dd / 3.0, 1e-14);
    EXPECT_COMPLEX_NEAR(rc(0, 2), 1.0 / dd / 3.0, 1e-14);
    EXPECT_COMPLEX_NEAR(rc(1, 2), 1.0 / dd / 3.0, 1e-14);
  }
}

TEST(EvolveJoint, DefiniteOrderBranches) {
  std::mt19937_64 rng(6);
  const KrausChannel a = amplitude_damping_channel(0.3, Sink::kGround);
  const KrausChannel b = depolarizing_channel(2, 0.7);
  const ComplexMatrix u = su2_unitary(1.7, Axis{0.6, 0.2}, 1);
  const SwitchSpec spec = sandwich(a, u, b);
  const ComplexMatrix probe = testing::random_state(2, rng);

  const ComplexMatrix j0 = evolve_joint(spec, ComplexMatrix::unit(2, 0, 0), probe);
  EXPECT_MATRIX_NEAR(partial_trace(j0, 2, 2, Subsystem::kSecond), apply_dco({a, unitary_channel(u), b}, probe), 1e-14);
  const ComplexMatrix j1 = evolve_joint(spec, ComplexMatrix::unit(2, 1, 1), probe);
  EXPECT_MATRIX_NEAR(partial_trace(j1, 2, 2, Subsystem::kSecond), apply_dco({b, unitary_channel(u), a}, probe), 1e-14);
}

TEST(EvolveJoint, ControlMarginalMatchesControlState) {
  std::mt19937_64 rng(7);
  const SwitchSpec spec = sandwich(depolarizing_channel(2, 0.2), su2_unitary(2.2, Axis::z(), 1),
                                   depolarizing_channel(2, 0.9));
  const ComplexMatrix probe = testing::random_state(2, rng);
  const ComplexMatrix plus = 0.5 * ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}};
  const ComplexMatrix joint = evolve_joint(spec, plus, probe);
  EXPECT_MATRIX_NEAR(partial_trace(joint, 2, 2, Subsystem::kFirst), control_state(spec, probe), 1e-12);
  EXPECT_NEAR(joint.trace().real(), 1.0, 1e-12);
  EXPECT_GT(min_eigenvalue(joint), -1e-10);
}

TEST(SwitchKraus, Completeness) {
  std::vector<KrausChannel> chs{depolarizing_channel(2, 0.4), amplitude_damping_channel(0.3, Sink::kGround),
                                unitary_channel(su2_unitary(0.5, Axis::y(), 1))};
  SwitchSpec spec{chs, all_orders(3), equal_amplitudes(6)};
  const auto ops = switch_kraus_operators(spec);
  ComplexMatrix sum(12, 12);
  for (const auto& k : ops) sum += k.adjoint() * k;
  EXPECT_MATRIX_NEAR(sum, ComplexMatrix::identity(12), 1e-10);
}

TEST(AllOrders, Enumeration) {
  EXPECT_EQ(all_orders(1), (std::vector<CausalOrder>{{{0}}}));
  EXPECT_EQ(all_orders(2), (std::vector<CausalOrder>{{{0, 1}}, {{1, 0}}}));
  const auto three = all_orders(3);
  const std::vector<CausalOrder> expected{{{0, 1, 2}}, {{0, 2, 1}}, {{1, 0, 2}},
                                          {{1, 2, 0}}, {{2, 0, 1}}, {{2, 1, 0}}};
  EXPECT_EQ(three, expected);
  EXPECT_EQ(all_orders(4).size(), 24u);
  EXPECT_THROW(all_orders(0), std::invalid_argument);
}

}  // namespace
}  // namespace qswitch
