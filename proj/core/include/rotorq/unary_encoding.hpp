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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rotorq/pauli.hpp"
#include "rotorq/rotor_model.hpp"
#include "rotorq/state_vector.hpp"

namespace rotorq {

/// One-hot layout: rotor j owns qubits [j*d, (j+1)*d) and basis index m sets
/// qubit j*d + (d-1-m). The occupied bit of rotor j is therefore bit
/// m + (N-1-j)*d of the computational-basis index.
int unary_qubit(const RotorBasis& basis, int rotor, int level);

/// Bijection between physical one-hot configurations, their lexicographic
/// index over d^N and their 2^(N*d) computational-basis index.
class PhysicalIndexer {
 public:
  PhysicalIndexer(RotorBasis basis, int rotors);

  const RotorBasis& basis() const noexcept { return basis_; }
  int rotors() const noexcept { return rotors_; }
  int qubit_count() const noexcept { return rotors_ * basis_.d(); }
  std::size_t size() const noexcept { return size_; }

  std::vector<int> config(std::size_t lex) const;
  std::size_t lex(std::span<const int> config) const;
  std::uint64_t embed(std::span<const int> config) const;
  std::uint64_t embed_lex(std::size_t lex) const;
  /// Lexicographic index of a computational-basis index, if it is physical.
  std::optional<std::size_t> lex_of(std::uint64_t t) const;

 private:
  RotorBasis basis_;
  int rotors_;
  std::size_t size_;
};

/// Projected kinetic term -1/2 sum_m (m-l)^2 Z_m + C on rotor j, with C the
/// half-sum of (m-l)^2 so that the physical eigenvalues are (m-l)^2.
PauliSum encode_kinetic_projected(const RotorBasis& basis, int rotor, int rotors);
/// Projected cyclic increment sum_m sigma+_{m+1} sigma-_m, d terms.
PauliSum encode_increment_projected(const RotorBasis& basis, int rotor, int rotors);

enum class InteractionKind { xx, yy, xy_sym };

/// x_i x_j, y_i y_j or x_i y_j + x_j y_i in the projected representation.
PauliSum encode_interaction_projected(const RotorBasis& basis, int rotors, int i,
                                      int j, InteractionKind kind);

PauliSum encode_chain_hamiltonian_unary(const ChainSpec& spec);

/// Matrix-free lattice Hamiltonian acting on d^N physical amplitudes indexed
/// lexicographically. All momentum shifts wrap modulo d.
void apply_physical(const ChainSpec& spec, std::span<const Complex> in,
                    std::span<Complex> out);

/// 1 - sum over physical basis states of |v_t|^2.
double leakage(const PhysicalIndexer& indexer, const StateVector& v);

}  // namespace rotorq
