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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rotorq {

using Complex = std::complex<double>;

/// Largest register the dense statevector types accept.
inline constexpr int kMaxStateQubits = 40;

/// Mask of the computational-basis bit that belongs to `qubit`. Qubit 0 is the
/// leftmost (most significant) label of a basis string.
inline constexpr std::uint64_t qubit_bit(int qubit_count, int qubit) {
  return std::uint64_t{1} << (qubit_count - 1 - qubit);
}

/// Dense amplitude vector over `qubit_count` qubits, index bit order as in
/// qubit_bit().
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(int qubit_count);
  StateVector(int qubit_count, std::vector<Complex> amplitudes);

  static StateVector basis(int qubit_count, std::uint64_t index);
  /// Equal-weight superposition of every basis state (H on every qubit).
  static StateVector uniform(int qubit_count);

  int qubit_count() const noexcept { return qubit_count_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

  std::span<Complex> amplitudes() noexcept { return amplitudes_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  void normalize();
  /// <this|other>
  Complex inner(const StateVector& other) const;

 private:
  int qubit_count_;
  std::vector<Complex> amplitudes_;
};

/// Probability mass carried by each basis state.
std::vector<double> probabilities(const StateVector& v);

}  // namespace rotorq
