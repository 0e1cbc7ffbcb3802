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
#include <vector>

#include <gtest/gtest.h>

#include "rotorq/binary_encoding.hpp"
#include "rotorq/errors.hpp"
#include "rotorq/lanczos.hpp"
#include "rotorq/unary_encoding.hpp"
#include "rotorq/vqe.hpp"

namespace rotorq {
namespace {

ChainSpec chain(int rotors, int l, int n, double g) {
  ChainSpec s;
  s.rotors = rotors;
  s.g = g;
  s.basis = {l, n};
  return s;
}

TEST(Ansatz, ParameterAndGateCounts) {
  const auto a = build_ansatz({4, 16, true});
  EXPECT_EQ(a.parameter_count(), 204u);
  EXPECT_EQ(a.entangler().size(), 4u);
  for (const auto& g : a.entangler()) {
    EXPECT_EQ(g.kind, GateKind::CCX);
    EXPECT_LT(g.qubits[0], g.qubits[1]);
    EXPECT_LT(g.qubits[1], g.qubits[2]);
  }
  const std::vector<double> theta(204, 0.1);
  EXPECT_EQ(a.gates(theta).size(), 204u + 16u * 4u);
  EXPECT_EQ(build_ansatz({5, 2, true}).entangler().size(), 10u);
  EXPECT_EQ(build_ansatz({2, 3, true}).entangler().size(), 1u);
  EXPECT_EQ(build_ansatz({2, 3, true}).entangler()[0].kind, GateKind::CX);
  EXPECT_EQ(build_ansatz({3, 2, false}).parameter_count(), 18u);
  EXPECT_THROW(build_ansatz({1, 1, true}), DimensionError);
  EXPECT_THROW(a.gates(std::vector<double>(3)), DimensionError);
}

TEST(Ansatz, ZeroAnglesPermuteBasisStates) {
  const auto a = build_ansatz({4, 16, true});
  const std::vector<double> zero(a.parameter_count(), 0.0);
  auto v = StateVector::basis(4, 0b0101);
  a.apply(v, zero);
  int support = 0;
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      ++support;
      EXPECT_NEAR(std::abs(v[i]), 1.0, 1e-12);
    }
  }
  EXPECT_EQ(support, 1);
}

TEST(Ansatz, PreservesNorm) {
  const auto a = build_ansatz({4, 3, true});
  const auto theta = initial_parameters(a.parameter_count(), 3.0, 9);
  auto v = StateVector::uniform(4);
  a.apply(v, theta);
  EXPECT_NEAR(v.norm(), 1.0, 1e-12);
}

TEST(Vqe, SingleZTermReachesMinusOne) {
  PauliSum h(2);
  h.add(PauliString::parse("ZI"), 1.0);
  const auto a = build_ansatz({2, 1, true});
  VqeOptions opt;
  opt.max_iterations = 500;
  opt.rho_begin = 1.0;
  const auto trace = vqe_minimize(h, a, StateVector(2), opt);
  EXPECT_NEAR(trace.converged_energy, -1.0, 1e-6);
}

TEST(Vqe, TraceInvariants) {
  const auto spec = chain(2, 1, 2, 2.0);
  const auto h = encode_chain_hamiltonian(spec);
  const double e0 = lanczos_ground(make_operator(h)).eigenvalues[0];
  const auto a = build_ansatz({4, 2, true});
  VqeOptions opt;
  opt.max_iterations = 150;
  const std::vector<int> zero{1, 1};
  const auto trace = vqe_minimize(h, a, StateVector::basis(4, binary_embed(spec.basis, zero)), opt);
  ASSERT_FALSE(trace.energies.empty());
  EXPECT_LE(trace.energies.size(), 150u);
  EXPECT_EQ(trace.energies.size(), trace.best_so_far.size());
  double running = trace.energies[0];
  for (std::size_t i = 0; i < trace.energies.size(); ++i) {
    running = std::min(running, trace.energies[i]);
    EXPECT_EQ(trace.best_so_far[i], running);
    EXPECT_GE(trace.energies[i], e0 - 1e-10);
  }
  EXPECT_EQ(trace.converged_energy, trace.best_so_far.back());
  EXPECT_EQ(trace.initial_parameters, std::vector<double>(a.parameter_count(), 0.0));
}

TEST(Vqe, DeterministicFromZeroAngles) {
  const auto spec = chain(2, 1, 2, 0.2);
  const auto h = encode_chain_hamiltonian(spec);
  const auto a = build_ansatz({4, 1, true});
  VqeOptions opt;
  opt.max_iterations = 80;
  const auto s = StateVector::basis(4, 0b0101);
  const auto t1 = vqe_minimize(h, a, s, opt);
  const auto t2 = vqe_minimize(h, a, s, opt);
  EXPECT_EQ(t1.energies, t2.energies);
  EXPECT_EQ(t1.parameters, t2.parameters);
}

TEST(Vqe, SeededRandomStartReproducible) {
  const auto p1 = initial_parameters(12, 3.14, 42);
  const auto p2 = initial_parameters(12, 3.14, 42);
  const auto p3 = initial_parameters(12, 3.14, 43);
  EXPECT_EQ(p1, p2);
  EXPECT_NE(p1, p3);
  for (double x : p1) EXPECT_LE(std::abs(x), 3.14);
}

TEST(Vqe, UnaryRespectsVariationalBound) {
  const auto spec = chain(2, 1, 2, 0.5);
  const auto h = encode_chain_hamiltonian_unary(spec);
  const double e0 = lanczos_ground(make_physical_operator(spec)).eigenvalues[0];
  const PhysicalIndexer ix(spec.basis, 2);
  const std::vector<int> zero{1, 1};
  const auto a = build_ansatz({8, 1, true});
  VqeOptions opt;
  opt.max_iterations = 60;
  const auto trace = vqe_minimize(h, a, StateVector::basis(8, ix.embed(zero)), opt);
  // At this coupling no unphysical sector lies below the physical ground
  // level, so every ansatz state obeys the bound.
  const Eigen::VectorXd full =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(to_dense(h)).eigenvalues();
  ASSERT_NEAR(full[0], e0, 1e-10);
  for (double e : trace.energies) EXPECT_GE(e, e0 - 1e-10);
}

TEST(Vqe, Contracts) {
  PauliSum h(3);
  h.add(PauliString::parse("ZII"), 1.0);
  const auto a = build_ansatz({2, 1, true});
  EXPECT_THROW(vqe_minimize(h, a, StateVector(2), {}), DimensionError);
  PauliSum nh(2);
  nh.add(PauliString::parse("XY"), Complex(0.0, 1.0));
  EXPECT_THROW(vqe_minimize(nh, a, StateVector(2), {}), ContractError);
}

}  // namespace
}  // namespace rotorq
