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
#include <span>

#include "rotorq/pauli.hpp"
#include "rotorq/rotor_model.hpp"

namespace rotorq {

/// Binary layout: rotor j owns qubits [j*k, (j+1)*k) and stores its basis index
/// m = sum_r 2^(k-r) i_r with i_1 on the first (most significant) qubit. The
/// resulting computational-basis index equals the lexicographic momentum index.
int binary_qubits_per_rotor(const RotorBasis& basis);

/// Single-qubit ladders, sigma+ = |1><0| and sigma- = |0><1|.
PauliSum sigma_plus(int qubit_count, int qubit);
PauliSum sigma_minus(int qubit_count, int qubit);

/// l_j^2 from the closed form in Z and ZZ terms. All operators below act on
/// rotors * k qubits and throw UnsupportedBasisError unless d is a power of 2.
PauliSum encode_kinetic(const RotorBasis& basis, int rotor, int rotors);
/// Ripple-carry increment S+ (cyclic) and its adjoint.
PauliSum encode_increment(const RotorBasis& basis, int rotor, int rotors);
PauliSum encode_decrement(const RotorBasis& basis, int rotor, int rotors);
PauliSum encode_position_x(const RotorBasis& basis, int rotor, int rotors);
PauliSum encode_position_y(const RotorBasis& basis, int rotor, int rotors);

/// Full lattice Hamiltonian, simplified.
PauliSum encode_chain_hamiltonian(const ChainSpec& spec);

/// Computational-basis index of a configuration of rotor basis indices.
std::uint64_t binary_embed(const RotorBasis& basis, std::span<const int> config);

}  // namespace rotorq
