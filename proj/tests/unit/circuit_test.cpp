// Copyright 2026 The rotorq Authors
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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rotorq/binary_encoding.hpp"
#include "rotorq/circuit.hpp"
#include "rotorq/errors.hpp"
#include "rotorq/qpe.hpp"

namespace rotorq {
namespace {

using testing::to_eigen;

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

StateVector random_state(int q, std::mt19937_64& rng) {
  const auto v = testing::random_vector(Eigen::Index{1} << q, rng);
  return StateVector(q, std::vector<Complex>(v.data(), v.data() + v.size()));
}

Eigen::MatrixXcd gate_matrix(const Gate& g, int q) {
  const auto dim = Eigen::Index{1} << q;
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    auto v = StateVector::basis(q, static_cast<std::uint64_t>(c));
    apply_gate(v, g);
    m.col(c) = to_eigen(v.amplitudes());
  }
  return m;
}

TEST(Gates, Examples) {
  auto v = StateVector(1);
  apply_gate(v, Gate::h(0));
  EXPECT_NEAR(std::abs(v[0] - 1 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(v[1] - 1 / std::sqrt(2.0)), 0.0, 1e-15);

  v = StateVector::basis(3, 0b110);
  apply_gate(v, Gate::ccx(0, 1, 2));
  EXPECT_EQ(v[0b111], Complex(1.0));

  const double theta = 0.37;
  v = StateVector(1);
  apply_gate(v, Gate::rz(0, theta));
  EXPECT_LT(std::abs(v[0] - std::exp(-kI * theta / 2.0)), 1e-15);
}

TEST(Gates, RotationsAreMatrixExponentials) {
  const double theta = 1.234;
  for (auto [kind, axis] : {std::pair{GateKind::Rx, PauliAxis::X},
                            {GateKind::Ry, PauliAxis::Y},
                            {GateKind::Rz, PauliAxis::Z}}) {
    const Gate g = kind == GateKind::Rx   ? Gate::rx(1, theta)
                   : kind == GateKind::Ry ? Gate::ry(1, theta)
                                          : Gate::rz(1, theta);
    const auto p = PauliString::single(2, 1, axis);
    const Eigen::MatrixXcd expected = testing::dense_propagator(testing::kron_string(p), theta / 2);
    EXPECT_LT((gate_matrix(g, 2) - expected).norm(), 1e-13);
  }
}

TEST(Gates, ControlledPhaseAndSwap) {
  const double phi = 0.81;
  const auto cp = gate_matrix(Gate::cphase(0, 1, phi), 2);
  EXPECT_LT((cp.diagonal() - Eigen::Vector4cd(1, 1, 1, std::exp(kI * phi))).norm(), 1e-15);
  auto v = StateVector::basis(3, 0b100);
  apply_gate(v, Gate::swap(0, 2));
  EXPECT_EQ(v[0b001], Complex(1.0));
  v = StateVector::basis(2, 0b10);
  apply_gate(v, Gate::cx(0, 1));
  EXPECT_EQ(v[0b11], Complex(1.0));
}

TEST(Gates, IndexContracts) {
  auto v = StateVector(2);
  EXPECT_THROW(apply_gate(v, Gate::cx(0, 0)), DimensionError);
  EXPECT_THROW(apply_gate(v, Gate::x(2)), DimensionError);
  EXPECT_THROW(apply_gate(v, Gate::ccx(0, 1, 1)), DimensionError);
}

TEST(Gates, PreserveNormAndAreUnitary) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  const std::vector<Gate> gates{Gate::h(2),         Gate::x(0),          Gate::rx(1, angle(rng)),
                                Gate::ry(3, angle(rng)), Gate::rz(0, angle(rng)), Gate::cx(3, 1),
                                Gate::ccx(2, 0, 3), Gate::cphase(1, 2, angle(rng)),
                                Gate::swap(0, 3),   Gate::rotation(PauliString::parse("XYZI"), angle(rng))};
  auto v = random_state(4, rng);
  for (int round = 0; round < 20; ++round) {
    for (const auto& g : gates) {
      apply_gate(v, g);
      EXPECT_NEAR(v.norm(), 1.0, 1e-10);
    }
  }
  for (const auto& g : gates) {
    const auto m = gate_matrix(g, 4);
    EXPECT_LT((m.adjoint() * m - Eigen::MatrixXcd::Identity(16, 16)).norm(), 1e-13);
  }
}

TEST(PauliRotation, Examples) {
  std::mt19937_64 rng(43);
  auto v = random_state(3, rng);
  const auto before = v;
  pauli_rotation(v, PauliString::parse("XYZ"), 0.0);
  EXPECT_EQ((to_eigen(v.amplitudes()) - to_eigen(before.amplitudes())).norm(), 0.0);

  v = StateVector::basis(1, 1);
  pauli_rotation(v, PauliString::parse("Z"), kPi);
  EXPECT_LT(std::abs(v[1] - kI), 1e-15);
  EXPECT_LT(std::abs(v[0]), 1e-15);
}

TEST(PauliRotation, MatchesDenseExponential) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = testing::random_string(3, rng);
    const double theta = angle(rng);
    auto v = random_state(3, rng);
    const Eigen::VectorXcd expected =
        testing::dense_propagator(testing::kron_string(p), theta / 2) * to_eigen(v.amplitudes());
    pauli_rotation(v, p, theta);
    EXPECT_LT((to_eigen(v.amplitudes()) - expected).norm(), 1e-12);
  }
}

TEST(PauliRotation, ControlledActsOnlyWhenControlsSet) {
  std::mt19937_64 rng(53);
  auto v = random_state(3, rng);
  auto ref = v;
  const auto p = PauliString::parse("IXY");
  pauli_rotation(v.amplitudes(), p, 0.9, qubit_bit(3, 0));
  // Reference: rotate only the half with qubit 0 set.
  auto upper = StateVector(2, {ref[4], ref[5], ref[6], ref[7]});
  pauli_rotation(upper, PauliString::parse("XY"), 0.9);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(v[i], ref[i]);
    EXPECT_LT(std::abs(v[4 + i] - upper[i]), 1e-15);
  }
  EXPECT_THROW(pauli_rotation(v.amplitudes(), PauliString::parse("XII"), 0.1, qubit_bit(3, 0)),
               ContractError);
}

TEST(Trotter, SingleTermAndCommutingTermsExact) {
  std::mt19937_64 rng(59);
  PauliSum single(3);
  single.add(PauliString::parse("XZY"), 0.8);
  PauliSum commuting(2);
  commuting.add(PauliString::parse("ZI"), 0.6);
  commuting.add(PauliString::parse("IZ"), -1.1);
  commuting.add(PauliString::parse("II"), 0.25);
  for (const auto* h : {&single, &commuting}) {
    const int q = h->qubit_count();
    auto v = random_state(q, rng);
    const double dt = 0.9;
    const Eigen::VectorXcd expected =
        testing::dense_propagator(testing::kron_sum(*h), dt) * to_eigen(v.amplitudes());
    trotter4_step(v, *h, dt);
    EXPECT_LT((to_eigen(v.amplitudes()) - expected).norm(), 1e-13);
  }
}

TEST(Trotter, FourthOrderConvergence) {
  ChainSpec spec;
  spec.rotors = 2;
  spec.g = 1.0;
  spec.basis = {1, 2};
  const auto h = encode_chain_hamiltonian(spec) * Complex(1.0 / 10.0);
  const double total = 2 * kPi;
  std::mt19937_64 rng(61);
  const auto v0 = random_state(4, rng);
  const Eigen::VectorXcd exact = testing::dense_propagator(testing::kron_sum(h), total) *
                                 to_eigen(v0.amplitudes());
  std::vector<double> dts, errors;
  const TrotterStepper stepper(h);
  for (int p : {5, 10, 15, 20}) {
    auto v = v0;
    const double dt = total / p;
    for (int s = 0; s < p; ++s) stepper.step4(v.amplitudes(), dt);
    dts.push_back(dt);
    errors.push_back((to_eigen(v.amplitudes()) - exact).norm());
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
  }
  EXPECT_NEAR(log_log_slope(dts, errors), 4.0, 0.3);
}

TEST(Trotter, SecondOrderIsSymmetric) {
  std::mt19937_64 rng(67);
  const auto h = testing::random_sum(3, 6, rng, true);
  const TrotterStepper stepper(h);
  auto v = random_state(3, rng);
  const auto before = v;
  stepper.step2(v.amplitudes(), 0.3);
  stepper.step2(v.amplitudes(), -0.3);
  EXPECT_LT((to_eigen(v.amplitudes()) - to_eigen(before.amplitudes())).norm(), 1e-13);
}

TEST(Trotter, SuzukiCoefficient) {
  const double p = suzuki_p();
  EXPECT_NEAR(4 * p + (1 - 4 * p), 1.0, 1e-15);
  EXPECT_NEAR(4 * std::pow(p, 3) + std::pow(1 - 4 * p, 3), 0.0, 1e-14);
}

TEST(Qft, SingleQubitIsHadamard) {
  auto v = StateVector::basis(1, 1);
  inverse_qft(v, 0, 1);
  EXPECT_NEAR(v[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(v[1].real(), -1 / std::sqrt(2.0), 1e-15);
}

TEST(Qft, UniformMapsToZero) {
  auto v = StateVector::uniform(5);
  inverse_qft(v, 0, 5);
  EXPECT_NEAR(std::abs(v[0]), 1.0, 1e-13);
}

TEST(Qft, MatchesInverseDft) {
  for (int r = 1; r <= 5; ++r) {
    const auto dim = Eigen::Index{1} << r;
    Eigen::MatrixXcd m(dim, dim);
    Eigen::MatrixXcd from_gates(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
      auto v = StateVector::basis(r, static_cast<std::uint64_t>(c));
      inverse_qft(v, 0, r);
      m.col(c) = to_eigen(v.amplitudes());
      auto w = StateVector::basis(r, static_cast<std::uint64_t>(c));
      for (const auto& g : inverse_qft_gates(0, r)) apply_gate(w, g);
      from_gates.col(c) = to_eigen(w.amplitudes());
    }
    EXPECT_LT((m - testing::inverse_dft(r)).norm(), 1e-12) << "r=" << r;
    EXPECT_LT((from_gates - testing::inverse_dft(r)).norm(), 1e-12) << "r=" << r;
  }
}

TEST(Qft, RoundTripOnSubrange) {
  std::mt19937_64 rng(71);
  auto v = random_state(6, rng);
  const auto before = v;
  qft(v, 1, 4);
  EXPECT_NEAR(v.norm(), 1.0, 1e-12);
  inverse_qft(v, 1, 4);
  EXPECT_LT((to_eigen(v.amplitudes()) - to_eigen(before.amplitudes())).norm(), 1e-12);
  EXPECT_THROW(qft(v, 4, 4), DimensionError);
}

TEST(Measurement, ExactMarginals) {
  auto h = sample_measurement(StateVector::basis(2, 0b01), 0, 2, kExactShots, 0);
  EXPECT_EQ(h.probabilities[0b01], 1.0);

  StateVector bell(2, {1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0)});
  h = sample_measurement(bell, 0, 1, kExactShots, 0);
  EXPECT_NEAR(h.probabilities[0], 0.5, 1e-15);
  EXPECT_NEAR(h.probabilities[1], 0.5, 1e-15);
}

TEST(Measurement, SeededShotsReproducible) {
  std::mt19937_64 rng(73);
  const auto v = random_state(4, rng);
  const auto a = sample_measurement(v, 1, 3, 1000, 99);
  const auto b = sample_measurement(v, 1, 3, 1000, 99);
  EXPECT_EQ(a.counts, b.counts);
  std::uint64_t total = 0;
  for (auto c : a.counts) total += c;
  EXPECT_EQ(total, 1000u);
  EXPECT_THROW(sample_measurement(v, 0, 1, -1, 0), ContractError);
}

}  // namespace
}  // namespace rotorq
