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

#include "rotorq/binary_encoding.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "rotorq/errors.hpp"

namespace rotorq {
namespace {

void check_rotor(int rotor, int rotors) {
  if (rotors < 1 || rotor < 0 || rotor >= rotors) {
    throw DimensionError("rotor index " + std::to_string(rotor) +
                         " out of range for " + std::to_string(rotors) + " rotors");
  }
}

PauliSum z_on(int qubit_count, int qubit) {
  return PauliSum::from_string(
      PauliString::single(qubit_count, qubit, PauliAxis::Z));
}

}  // namespace

int binary_qubits_per_rotor(const RotorBasis& basis) {
  basis.validate();
  const auto d = static_cast<unsigned>(basis.d());
  if (!std::has_single_bit(d)) {
    throw UnsupportedBasisError("binary encoding needs d to be a power of 2, got " +
                                std::to_string(d));
  }
  return std::countr_zero(d);
}

PauliSum sigma_plus(int qubit_count, int qubit) {
  PauliSum s(qubit_count);
  s.add(PauliString::single(qubit_count, qubit, PauliAxis::X), 0.5);
  s.add(PauliString::single(qubit_count, qubit, PauliAxis::Y), Complex(0, -0.5));
  return s;
}

PauliSum sigma_minus(int qubit_count, int qubit) {
  PauliSum s(qubit_count);
  s.add(PauliString::single(qubit_count, qubit, PauliAxis::X), 0.5);
  s.add(PauliString::single(qubit_count, qubit, PauliAxis::Y), Complex(0, 0.5));
  return s;
}

PauliSum encode_kinetic(const RotorBasis& basis, int rotor, int rotors) {
  const int k = binary_qubits_per_rotor(basis);
  check_rotor(rotor, rotors);
  const int q = rotors * k;
  const int first = rotor * k;
  const double d = basis.d();
  const double span = basis.n - basis.l;

  // sum_r 2^-r Z_r, with r = 1 on the most significant qubit.
  PauliSum field(q);
  for (int r = 1; r <= k; ++r) field += z_on(q, first + r - 1) * std::ldexp(1.0, -r);

  PauliSum out = (field * field) * (0.25 * d * d);
  out += field * (-0.5 * d * span);
  out += PauliSum::identity(q, 0.25 * span * span);
  return simplify(out);
}

PauliSum encode_increment(const RotorBasis& basis, int rotor, int rotors) {
  const int k = binary_qubits_per_rotor(basis);
  check_rotor(rotor, rotors);
  const int q = rotors * k;
  const int first = rotor * k;

  // Flip the trailing run of ones and the first zero above it; the all-ones
  // string wraps to zero.
  PauliSum out(q);
  for (int r = 0; r < k; ++r) {
    PauliSum term = sigma_plus(q, first + r);
    for (int s = r + 1; s < k; ++s) term = term * sigma_minus(q, first + s);
    out += term;
  }
  PauliSum wrap = PauliSum::identity(q);
  for (int s = 0; s < k; ++s) wrap = wrap * sigma_minus(q, first + s);
  out += wrap;
  return simplify(out);
}

PauliSum encode_decrement(const RotorBasis& basis, int rotor, int rotors) {
  return encode_increment(basis, rotor, rotors).adjoint();
}

PauliSum encode_position_x(const RotorBasis& basis, int rotor, int rotors) {
  PauliSum up = encode_increment(basis, rotor, rotors);
  return simplify((up + up.adjoint()) * 0.5);
}

PauliSum encode_position_y(const RotorBasis& basis, int rotor, int rotors) {
  PauliSum up = encode_increment(basis, rotor, rotors);
  return simplify((up - up.adjoint()) * Complex(0.0, -0.5));
}

PauliSum encode_chain_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  const int k = binary_qubits_per_rotor(spec.basis);
  const int q = spec.rotors * k;
  std::vector<PauliSum> x, y;
  for (int j = 0; j < spec.rotors; ++j) {
    x.push_back(encode_position_x(spec.basis, j, spec.rotors));
    y.push_back(encode_position_y(spec.basis, j, spec.rotors));
  }
  PauliSum h(q);
  for (int j = 0; j < spec.rotors; ++j) h += encode_kinetic(spec.basis, j, spec.rotors);
  for (const auto& c : pair_couplings(spec)) {
    if (c.xx != 0.0) h += (x[c.i] * x[c.j]) * c.xx;
    if (c.yy != 0.0) h += (y[c.i] * y[c.j]) * c.yy;
    if (c.xy != 0.0) h += (x[c.i] * y[c.j] + x[c.j] * y[c.i]) * c.xy;
  }
  return simplify(h);
}

std::uint64_t binary_embed(const RotorBasis& basis, std::span<const int> config) {
  const int k = binary_qubits_per_rotor(basis);
  if (static_cast<int>(config.size()) * k > PauliString::kMaxQubits) {
    throw DimensionError("binary_embed: register too large");
  }
  return config_index(basis, config);
}

}  // namespace rotorq
