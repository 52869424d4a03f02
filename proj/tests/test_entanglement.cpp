// Copyright 2026 The qcausal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qcausal/circuits.hpp"
#include "qcausal/entanglement.hpp"
#include "qcausal/error.hpp"
#include "qcausal/gates.hpp"
#include "test_util.hpp"

namespace qcausal {
namespace {

using std::numbers::pi;
using testing::random_angles;
using testing::random_state;
using testing::random_unitary;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Second algebraic route to the closed form:
//   e_p = 1 - C_d^2 sum_alpha [ tr T_{1+a,3+a} + <U^{(x)2} T_{1+a,3+a} U^{dag (x)2}, T_13> ]
// with C_d = 1 / (d (d + 1)) and <A, B> = Tr(A^dagger B) on four qubits.
double entangling_power_swap_sum(const ComplexMatrix& u) {
  const double cd = 1.0 / 6.0;
  const auto t13 = qubit_swap_operator(4, 0, 2);
  const auto t24 = qubit_swap_operator(4, 1, 3);
  const auto uu = kron(u, u);
  double sum = 0.0;
  for (const auto* t : {&t13, &t24}) {
    const auto rotated = uu * (*t) * dagger(uu);
    sum += trace(*t).real() + trace(dagger(rotated) * t13).real();
  }
  return 1.0 - cd * cd * sum;
}

// sqrt(2 (1 - Tr rho_B^2)) through an explicit partial trace.
double concurrence_purity(const PureState& psi) {
  const auto rho_b = partial_trace(DensityMatrix::from_pure(psi), Subsystem::Second, {2, 2});
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity(rho_b))));
}

ComplexMatrix random_local(std::mt19937_64& gen) {
  return kron(random_unitary(2, gen), random_unitary(2, gen));
}

TEST(Concurrence, Examples) {
  EXPECT_NEAR(concurrence_pure(PureState({kInvSqrt2, 0.0, 0.0, kInvSqrt2})), 1.0, 1e-15);
  EXPECT_NEAR(concurrence_pure(PureState::basis(4, 0)), 0.0, 1e-15);

  const std::vector<double> angles{pi / 2, pi / 2};
  const auto out = apply(build_circuit(CircuitFamily::Switch, 1, angles), PureState::basis(4, 0));
  const auto u = apply(gates::rx(pi / 2) * gates::ry(pi / 2), PureState::basis(2, 0));
  const auto v = apply(gates::ry(pi / 2) * gates::rx(pi / 2), PureState::basis(2, 0));
  const double oracle = std::sqrt(1.0 - std::norm(inner(u, v)));
  EXPECT_NEAR(concurrence_pure(out), oracle, 1e-12);
  EXPECT_NEAR(oracle, kInvSqrt2, 1e-12);
}

TEST(Concurrence, MatchesPurityFormula) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto psi = random_state(4, gen);
    const double c = concurrence_pure(psi);
    EXPECT_NEAR(c, concurrence_purity(psi), 1e-10);
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0);
  }
  EXPECT_THROW(concurrence_pure(PureState::basis(2, 0)), InvalidArgument);
}

TEST(LinearEntropy, ExamplesAndIdentityWithConcurrence) {
  EXPECT_NEAR(linear_entropy(PureState({kInvSqrt2, 0.0, 0.0, kInvSqrt2})), 0.5, 1e-15);
  EXPECT_NEAR(linear_entropy(PureState::basis(4, 3)), 0.0, 1e-15);
  // C = 1/sqrt2 state: cos(a)|00> + sin(a)|11> with sin(2a) = 1/sqrt2.
  const double a = 0.5 * std::asin(kInvSqrt2);
  const PureState half({std::cos(a), 0.0, 0.0, std::sin(a)});
  EXPECT_NEAR(concurrence_pure(half), kInvSqrt2, 1e-12);
  EXPECT_NEAR(linear_entropy(half), 0.25, 1e-12);

  std::mt19937_64 gen(22);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto psi = random_state(4, gen);
    const double c = concurrence_pure(psi);
    const double e = linear_entropy(psi);
    EXPECT_NEAR(e, c * c / 2.0, 1e-10);
    EXPECT_GE(e, 0.0);
    EXPECT_LE(e, 0.5);
  }
}

TEST(ConcurrenceStats, SeparableIsExactlyZero) {
  for (int layers = 1; layers <= 4; ++layers) {
    const auto r = concurrence_stats(CircuitFamily::Sep, layers, 500, RngStream(1, layers));
    EXPECT_LE(r.mean, 1e-12);
    EXPECT_LE(r.stddev, 1e-12);
    EXPECT_EQ(r.metric, "concurrence");
    EXPECT_EQ(r.n_outer, 500u);
  }
  EXPECT_THROW(concurrence_stats(CircuitFamily::Sep, 1, 99, RngStream(1)), InvalidArgument);
}

TEST(ConcurrenceStats, TextAnchors) {
  for (int layers = 1; layers <= 4; ++layers) {
    const auto r = concurrence_stats(CircuitFamily::Rxy, layers, 2000, RngStream(42, layers));
    EXPECT_NEAR(r.mean, 0.7, 0.1) << "rxy L=" << layers;
  }
  const auto sw = concurrence_stats(CircuitFamily::Switch, 3, 2000, RngStream(42, 3));
  EXPECT_NEAR(sw.mean, 0.6, 0.1);
}

TEST(ConcurrenceStats, ReportFieldsAreConsistent) {
  const auto r = concurrence_stats(CircuitFamily::Hea, 2, 400, RngStream(7, 0));
  EXPECT_EQ(r.circuit, "hea");
  EXPECT_EQ(r.layers, 2);
  EXPECT_EQ(r.seed, 7u);
  EXPECT_NEAR(r.std_error, r.stddev / std::sqrt(400.0), 1e-15);
}

TEST(EntanglingPowerExact, FixedGates) {
  EXPECT_NEAR(entangling_power_exact(ComplexMatrix::identity(4)), 0.0, 1e-12);
  EXPECT_NEAR(entangling_power_exact(gates::swap_gate()), 0.0, 1e-12);
  EXPECT_NEAR(entangling_power_exact(gates::cnot()), 2.0 / 9.0, 1e-12);
}

TEST(EntanglingPowerExact, AgreesWithSwapSumRoute) {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = random_unitary(4, gen);
    EXPECT_NEAR(entangling_power_exact(u), entangling_power_swap_sum(u), 1e-12);
  }
  EXPECT_NEAR(entangling_power_swap_sum(gates::cnot()), 2.0 / 9.0, 1e-12);
}

TEST(EntanglingPowerExact, LocalUnitaryInvariance) {
  std::mt19937_64 gen(24);
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = trial % 2 ? random_unitary(4, gen)
                             : build_circuit(kAllFamilies[trial % 6], 1 + trial % 3,
                                             random_angles(2 * (1 + trial % 3), gen));
    const double e = entangling_power_exact(u);
    EXPECT_NEAR(entangling_power_exact(random_local(gen) * u * random_local(gen)), e, 1e-12);
    EXPECT_GE(e, -1e-12);
    EXPECT_LE(e, kMaxEntanglingPower + 1e-12);
  }
}

TEST(EntanglingPowerExact, RejectsNonUnitary) {
  EXPECT_THROW(entangling_power_exact(2.0 * ComplexMatrix::identity(4)), InvalidArgument);
  EXPECT_THROW(entangling_power_exact(ComplexMatrix::identity(2)), InvalidArgument);
  EXPECT_THROW(entangling_power_mc(2.0 * ComplexMatrix::identity(4), 1000, RngStream(1)),
               InvalidArgument);
}

TEST(EntanglingPowerMc, FixedGates) {
  const RngStream rng(31, 0);
  EXPECT_NEAR(entangling_power_mc(ComplexMatrix::identity(4), 1000, rng).mean, 0.0, 1e-12);
  EXPECT_NEAR(entangling_power_mc(gates::swap_gate(), 1000, rng).mean, 0.0, 1e-12);
  const auto cnot = entangling_power_mc(gates::cnot(), 1'000'000, rng);
  EXPECT_NEAR(cnot.mean, 2.0 / 9.0, 2e-3);
  EXPECT_EQ(cnot.samples, 1'000'000u);
  EXPECT_THROW(entangling_power_mc(gates::cnot(), 999, rng), InvalidArgument);
}

TEST(EntanglingPowerMc, ConvergesToExactValue) {
  std::mt19937_64 gen(25);
  for (int trial = 0; trial < 6; ++trial) {
    const auto u = random_unitary(4, gen);
    const auto mc = entangling_power_mc(u, 200'000, RngStream(32, trial));
    EXPECT_LE(std::abs(mc.mean - entangling_power_exact(u)), 4.0 * mc.std_error);
  }
}

TEST(EntanglingPowerMc, IndependentOfWorkerCount) {
  const auto u = build_circuit(CircuitFamily::Switch, 2, std::vector<double>{0.3, 1.2, 2.2, 4.0});
  const RngStream rng(33, 0);
  const auto one = entangling_power_mc(u, 50'000, rng, 1);
  const auto four = entangling_power_mc(u, 50'000, rng, 4);
  EXPECT_EQ(one.mean, four.mean);
  EXPECT_EQ(one.std_error, four.std_error);
}

TEST(EntanglingPowerStats, HeaFirstLayerIsMaximalWithZeroSpread) {
  const auto r = entangling_power_stats(CircuitFamily::Hea, 1, 200, RngStream(42, 0));
  EXPECT_NEAR(r.normalized.mean, 1.0, 1e-10);
  EXPECT_LE(r.normalized.stddev, 1e-10);
  EXPECT_NEAR(r.raw.mean, 2.0 / 9.0, 1e-10);
  EXPECT_EQ(r.raw.metric, "epow_raw");
  EXPECT_EQ(r.normalized.metric, "epow_norm");
}

TEST(EntanglingPowerStats, SeparableIsZeroAndSwitchBelowHea) {
  const auto sep = entangling_power_stats(CircuitFamily::Sep, 3, 60, RngStream(42, 1));
  EXPECT_LE(std::abs(sep.raw.mean), 1e-12);
  EXPECT_LE(sep.raw.stddev, 1e-12);
  const auto sw = entangling_power_stats(CircuitFamily::Switch, 1, 200, RngStream(42, 2));
  const auto hea = entangling_power_stats(CircuitFamily::Hea, 1, 200, RngStream(42, 2));
  EXPECT_LT(sw.raw.mean, hea.raw.mean);
  EXPECT_THROW(entangling_power_stats(CircuitFamily::Hea, 1, 49, RngStream(1)), InvalidArgument);
}

TEST(QubitSwapOperator, PermutesBasisStates) {
  const auto t = qubit_swap_operator(2, 0, 1);
  EXPECT_EQ(t, gates::swap_gate());
  const auto t13 = qubit_swap_operator(4, 0, 2);
  // |1000> (index 8) -> |0010> (index 2)
  EXPECT_EQ(t13(2, 8), Complex(1.0));
  EXPECT_EQ(t13 * t13, ComplexMatrix::identity(16));
  EXPECT_THROW(qubit_swap_operator(2, 0, 2), InvalidArgument);
}

TEST(Kernels, MatchGeneralPath) {
  std::mt19937_64 gen(26);
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = random_unitary(4, gen);
    const auto psi = random_state(4, gen);
    const detail::State4 raw{psi[0], psi[1], psi[2], psi[3]};
    const auto out = detail::apply4(detail::to_unitary4(u), raw);
    const auto ref = apply(u, psi);
    for (int i = 0; i < 4; ++i) EXPECT_LT(std::abs(out[i] - ref[i]), 1e-14);
    EXPECT_NEAR(1.0 - detail::reduced_purity(out), linear_entropy(ref), 1e-12);
  }
}

}  // namespace
}  // namespace qcausal
