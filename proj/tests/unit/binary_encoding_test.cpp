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

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rotorq/binary_encoding.hpp"
#include "rotorq/errors.hpp"
#include "rotorq/rotor_model.hpp"

namespace rotorq {
namespace {

using testing::kron_sum;

ChainSpec chain(int rotors, int l, int n, double g) {
  ChainSpec s;
  s.rotors = rotors;
  s.g = g;
  s.basis = {l, n};
  return s;
}

Eigen::VectorXd spectrum(const Eigen::MatrixXcd& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m).eigenvalues();
}

// Bases with d = 2^k for k = 1, 2, 3.
const RotorBasis kBases[] = {{1, 0}, {1, 2}, {3, 4}};

TEST(BinaryEncoding, RejectsNonPowerOfTwo) {
  EXPECT_THROW(binary_qubits_per_rotor({1, 1}), UnsupportedBasisError);
  EXPECT_THROW(encode_kinetic({2, 2}, 0, 1), UnsupportedBasisError);
  EXPECT_EQ(binary_qubits_per_rotor({3, 4}), 3);
}

TEST(BinaryKinetic, FourLevelDiagonal) {
  const auto k = kron_sum(encode_kinetic({1, 2}, 0, 1));
  const Eigen::Vector4cd expected(1, 0, 1, 4);
  EXPECT_LT((k.diagonal() - expected).norm(), 1e-14);
  EXPECT_LT((k - Eigen::MatrixXcd(k.diagonal().asDiagonal())).norm(), 1e-14);
}

TEST(BinaryKinetic, VacuumIsLowestMomentum) {
  for (const auto& b : kBases) {
    const auto k = kron_sum(encode_kinetic(b, 0, 1));
    EXPECT_NEAR(k(0, 0).real(), double(b.l * b.l), 1e-13);
  }
}

TEST(BinaryKinetic, EightLevelSpectrum) {
  const auto e = spectrum(kron_sum(encode_kinetic({3, 4}, 0, 1)));
  std::vector<double> expected;
  for (int m = 0; m < 8; ++m) expected.push_back(double((m - 3) * (m - 3)));
  std::sort(expected.begin(), expected.end());
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(e[i], expected[i], 1e-12);
}

TEST(BinaryIncrement, CyclicShift) {
  for (const auto& b : kBases) {
    const int d = b.d();
    const auto s = kron_sum(encode_increment(b, 0, 1));
    Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(d, d);
    for (int m = 0; m < d; ++m) shift((m + 1) % d, m) = 1.0;
    EXPECT_LT((s - shift).norm(), 1e-14) << "d=" << d;
    const auto down = kron_sum(encode_decrement(b, 0, 1));
    EXPECT_LT((down - shift.adjoint()).norm(), 1e-14);
  }
}

TEST(BinaryIncrement, Examples) {
  const auto x = kron_sum(encode_increment({1, 0}, 0, 1));
  EXPECT_LT((x - testing::single_pauli(PauliAxis::X)).norm(), 1e-15);
  const auto s = kron_sum(encode_increment({1, 2}, 0, 1));
  EXPECT_EQ(s(0b10, 0b01), Complex(1.0));
  EXPECT_EQ(s(0b00, 0b11), Complex(1.0));
}

TEST(BinaryPosition, MatchesRotorModel) {
  for (const auto& b : kBases) {
    const auto ops = position_ops(b);
    EXPECT_LT((kron_sum(encode_position_x(b, 0, 1)) - ops.x).norm(), 1e-14);
    EXPECT_LT((kron_sum(encode_position_y(b, 0, 1)) - ops.y).norm(), 1e-14);
  }
  EXPECT_TRUE(encode_position_y({1, 0}, 0, 1).empty());
}

TEST(BinaryPosition, GammaStringClosedForm) {
  for (int k = 1; k <= 3; ++k) {
    const RotorBasis b{1 << (k - 1), (1 << (k - 1)) - 1};
    const auto x = testing::gamma_string_position(k, false);
    const auto y = testing::gamma_string_position(k, true);
    EXPECT_LT((kron_sum(x) - kron_sum(encode_position_x(b, 0, 1))).norm(), 1e-14);
    EXPECT_LT((kron_sum(y) - kron_sum(encode_position_y(b, 0, 1))).norm(), 1e-14);
  }
}

TEST(BinaryPosition, UnsimplifiedTermCount) {
  for (int k = 1; k <= 3; ++k) {
    const auto raw = testing::gamma_string_position(k, false);
    int expected = 1 << (k - 1);
    for (int r = 1; r <= k; ++r) expected += 1 << (k - r);
    EXPECT_EQ(static_cast<int>(raw.size()), expected);
    const RotorBasis b{1 << (k - 1), (1 << (k - 1)) - 1};
    EXPECT_LE(encode_position_x(b, 0, 1).size(), raw.size());
  }
}

TEST(BinaryPosition, CoefficientsReal) {
  for (const auto& b : kBases) {
    const auto x = encode_position_x(b, 0, 1);
    const auto y = encode_position_y(b, 0, 1);
    for (const auto& t : x.terms()) EXPECT_EQ(t.coefficient.imag(), 0.0);
    for (const auto& t : y.terms()) EXPECT_EQ(t.coefficient.imag(), 0.0);
    EXPECT_EQ(kron_sum(encode_position_x(b, 0, 1)).imag().norm(), 0.0);
    EXPECT_LT(kron_sum(encode_position_y(b, 0, 1)).real().norm(), 1e-15);
  }
}

TEST(BinaryChain, DecoupledSpectrum) {
  const auto e = spectrum(kron_sum(encode_chain_hamiltonian(chain(2, 1, 2, 0.0))));
  std::vector<double> expected;
  for (double a : {1, 0, 1, 4})
    for (double c : {1, 0, 1, 4}) expected.push_back(a + c);
  std::sort(expected.begin(), expected.end());
  for (int i = 0; i < 16; ++i) EXPECT_NEAR(e[i], expected[i], 1e-12);
}

TEST(BinaryChain, FullSpectrumMatchesMomentum) {
  for (int rotors = 2; rotors <= 3; ++rotors) {
    for (const auto& b : kBases) {
      if (rotors * binary_qubits_per_rotor(b) > 9) continue;
      for (double g : {0.1, 0.5, 1.0, 2.0}) {
        const auto spec = chain(rotors, b.l, b.n, g);
        const auto h = encode_chain_hamiltonian(spec);
        EXPECT_TRUE(h.is_hermitian());
        const auto m = build_momentum_hamiltonian(spec);
        // The binary index equals the momentum index, so the matrices agree
        // element by element, not only spectrally.
        EXPECT_LT((kron_sum(h) - m.dense()).norm(), 1e-10);
        EXPECT_LT((spectrum(kron_sum(h)) - spectrum(m.dense())).norm(), 1e-10);
      }
    }
  }
}

TEST(BinaryChain, PauliWeightBounds) {
  for (const auto& b : kBases) {
    const int k = binary_qubits_per_rotor(b);
    EXPECT_LE(encode_kinetic(b, 0, 1).max_weight(), k);
    EXPECT_LE(encode_position_x(b, 1, 3).max_weight(), k);
    const auto h = encode_chain_hamiltonian(chain(3, b.l, b.n, 1.0));
    EXPECT_LE(h.max_weight(), 2 * k);
  }
}

TEST(BinaryEmbed, MatchesMomentumIndex) {
  const RotorBasis b{1, 2};
  for (std::size_t t = 0; t < 16; ++t) {
    const auto c = index_config(b, 2, t);
    EXPECT_EQ(binary_embed(b, c), t);
  }
  // |m1 = 0, m2 = 0> for (n=2, l=1) is 0101.
  const std::vector<int> zero{1, 1};
  EXPECT_EQ(binary_embed(b, zero), 0b0101u);
}

}  // namespace
}  // namespace rotorq
