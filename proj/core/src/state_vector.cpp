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

#include "rotorq/state_vector.hpp"

#include <cmath>
#include <string>

#include "rotorq/errors.hpp"

namespace rotorq {
namespace {

void check_qubits(int qubit_count) {
  if (qubit_count < 1 || qubit_count > kMaxStateQubits) {
    throw DimensionError("state vector qubit count out of range: " +
                         std::to_string(qubit_count));
  }
}

}  // namespace

StateVector::StateVector(int qubit_count) : qubit_count_(qubit_count) {
  check_qubits(qubit_count);
  amplitudes_.assign(std::size_t{1} << qubit_count, Complex{});
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int qubit_count, std::vector<Complex> amplitudes)
    : qubit_count_(qubit_count), amplitudes_(std::move(amplitudes)) {
  check_qubits(qubit_count);
  if (amplitudes_.size() != (std::size_t{1} << qubit_count)) {
    throw DimensionError("amplitude count does not match 2^qubit_count");
  }
}

StateVector StateVector::basis(int qubit_count, std::uint64_t index) {
  StateVector v(qubit_count);
  if (index >= v.dimension()) throw DimensionError("basis index out of range");
  v.amplitudes_[0] = 0.0;
  v.amplitudes_[index] = 1.0;
  return v;
}

StateVector StateVector::uniform(int qubit_count) {
  StateVector v(qubit_count);
  const double a = 1.0 / std::sqrt(static_cast<double>(v.dimension()));
  for (auto& x : v.amplitudes_) x = a;
  return v;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw ContractError("cannot normalize the zero vector");
  for (auto& a : amplitudes_) a /= n;
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.dimension() != dimension()) {
    throw DimensionError("inner product of vectors with different dimension");
  }
  Complex s{};
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    s += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  }
  return s;
}

std::vector<double> probabilities(const StateVector& v) {
  std::vector<double> p(v.dimension());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(v[i]);
  return p;
}

}  // namespace rotorq
