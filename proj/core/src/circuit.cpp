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

#include "rotorq/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "rotorq/errors.hpp"

namespace rotorq {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_qubits(const StateVector& v, const std::vector<int>& qubits,
                  std::size_t expected) {
  if (qubits.size() != expected) {
    throw DimensionError("gate expects " + std::to_string(expected) + " qubit(s)");
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= v.qubit_count()) {
      throw DimensionError("gate qubit index out of range: " +
                           std::to_string(qubits[i]));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) throw DimensionError("gate qubits must be distinct");
    }
  }
}

// Swaps amplitude pairs differing in `target` whenever all `controls` are set.
void controlled_flip(StateVector& v, std::uint64_t controls, std::uint64_t target) {
  auto a = v.amplitudes();
  for (std::uint64_t t = 0; t < a.size(); ++t) {
    if ((t & target) == 0 && (t & controls) == controls) std::swap(a[t], a[t | target]);
  }
}

void hadamard(StateVector& v, std::uint64_t bit) {
  const double s = std::numbers::sqrt2 / 2.0;
  auto a = v.amplitudes();
  for (std::uint64_t t = 0; t < a.size(); ++t) {
    if (t & bit) continue;
    const Complex lo = a[t], hi = a[t | bit];
    a[t] = s * (lo + hi);
    a[t | bit] = s * (lo - hi);
  }
}

int sign(std::uint64_t t, std::uint64_t z) { return (std::popcount(t & z) & 1) ? -1 : 1; }

}  // namespace

void pauli_rotation(std::span<Complex> amplitudes, const PauliString& p,
                    double theta, std::uint64_t control_mask) {
  const std::uint64_t dim = std::uint64_t{1} << p.qubit_count();
  if (amplitudes.size() != dim) {
    throw DimensionError("pauli_rotation: amplitude count does not match 2^Q");
  }
  const std::uint64_t x = p.x_mask(), z = p.z_mask();
  if (x & control_mask) {
    throw ContractError("pauli_rotation: the string may not flip a control qubit");
  }
  const double c = std::cos(0.5 * theta);
  const Complex f = -kI * std::sin(0.5 * theta) * kIPowers[p.y_count() & 3];
  if (x == 0) {
    const Complex plus = c + f, minus = c - f;
    for (std::uint64_t t = 0; t < dim; ++t) {
      if ((t & control_mask) != control_mask) continue;
      amplitudes[t] *= sign(t, z) > 0 ? plus : minus;
    }
    return;
  }
  const std::uint64_t high = std::bit_floor(x);
  for (std::uint64_t t = 0; t < dim; ++t) {
    if ((t & high) || (t & control_mask) != control_mask) continue;
    const std::uint64_t u = t ^ x;
    const Complex a = amplitudes[t], b = amplitudes[u];
    amplitudes[t] = c * a + f * static_cast<double>(sign(u, z)) * b;
    amplitudes[u] = c * b + f * static_cast<double>(sign(t, z)) * a;
  }
}

void pauli_rotation(StateVector& v, const PauliString& p, double theta) {
  if (p.qubit_count() != v.qubit_count()) {
    throw DimensionError("pauli_rotation: string and state sizes differ");
  }
  pauli_rotation(v.amplitudes(), p, theta);
}

void apply_gate(StateVector& v, const Gate& g) {
  const int q = v.qubit_count();
  auto bit = [&](int i) { return qubit_bit(q, g.qubits[i]); };
  switch (g.kind) {
    case GateKind::H:
      check_qubits(v, g.qubits, 1);
      hadamard(v, bit(0));
      return;
    case GateKind::X:
      check_qubits(v, g.qubits, 1);
      controlled_flip(v, 0, bit(0));
      return;
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz: {
      check_qubits(v, g.qubits, 1);
      const PauliAxis axis = g.kind == GateKind::Rx   ? PauliAxis::X
                             : g.kind == GateKind::Ry ? PauliAxis::Y
                                                      : PauliAxis::Z;
      pauli_rotation(v, PauliString::single(q, g.qubits[0], axis), g.angle);
      return;
    }
    case GateKind::CX:
      check_qubits(v, g.qubits, 2);
      controlled_flip(v, bit(0), bit(1));
      return;
    case GateKind::CCX:
      check_qubits(v, g.qubits, 3);
      controlled_flip(v, bit(0) | bit(1), bit(2));
      return;
    case GateKind::CPhase: {
      check_qubits(v, g.qubits, 2);
      const std::uint64_t both = bit(0) | bit(1);
      const Complex phase = std::polar(1.0, g.angle);
      auto a = v.amplitudes();
      for (std::uint64_t t = 0; t < a.size(); ++t) {
        if ((t & both) == both) a[t] *= phase;
      }
      return;
    }
    case GateKind::Swap: {
      check_qubits(v, g.qubits, 2);
      const std::uint64_t b0 = bit(0), b1 = bit(1);
      auto a = v.amplitudes();
      for (std::uint64_t t = 0; t < a.size(); ++t) {
        if ((t & b0) && !(t & b1)) std::swap(a[t], a[t ^ b0 ^ b1]);
      }
      return;
    }
    case GateKind::PauliRotation:
      if (!g.pauli) throw ContractError("PauliRotation gate without a string");
      pauli_rotation(v, *g.pauli, g.angle);
      return;
  }
  throw ContractError("unknown gate kind");
}

TrotterStepper::TrotterStepper(const PauliSum& h) : qubit_count_(h.qubit_count()) {
  if (!h.is_hermitian()) {
    throw ContractError("Trotter evolution requires a Hermitian Pauli sum");
  }
  const PauliSum merged = simplify(h);
  for (const auto& t : merged.terms()) {
    if (t.string.is_identity()) {
      identity_ += t.coefficient.real();
    } else {
      terms_.push_back({t.string, t.coefficient.real()});
    }
  }
}

TrotterStepper TrotterStepper::widened(int extra_leading_qubits) const {
  TrotterStepper out;
  out.qubit_count_ = qubit_count_ + extra_leading_qubits;
  out.identity_ = identity_;
  for (const auto& t : terms_) {
    out.terms_.push_back({PauliString::from_masks(out.qubit_count_, t.string.x_mask(),
                                                  t.string.z_mask()),
                          t.coefficient});
  }
  return out;
}

void TrotterStepper::step2(std::span<Complex> amplitudes, double dt,
                           std::uint64_t control_mask) const {
  // exp(-i c P dt/2) is a rotation by theta = c dt.
  for (const auto& t : terms_) {
    pauli_rotation(amplitudes, t.string, t.coefficient * dt, control_mask);
  }
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    pauli_rotation(amplitudes, it->string, it->coefficient * dt, control_mask);
  }
  if (identity_ != 0.0) {
    const Complex phase = std::polar(1.0, -identity_ * dt);
    for (std::uint64_t t = 0; t < amplitudes.size(); ++t) {
      if ((t & control_mask) == control_mask) amplitudes[t] *= phase;
    }
  }
}

double suzuki_p() { return 1.0 / (4.0 - std::cbrt(4.0)); }

void TrotterStepper::step4(std::span<Complex> amplitudes, double dt,
                           std::uint64_t control_mask) const {
  const double p = suzuki_p();
  step2(amplitudes, p * dt, control_mask);
  step2(amplitudes, p * dt, control_mask);
  step2(amplitudes, (1.0 - 4.0 * p) * dt, control_mask);
  step2(amplitudes, p * dt, control_mask);
  step2(amplitudes, p * dt, control_mask);
}

void trotter4_step(StateVector& v, const PauliSum& h, double dt) {
  if (h.qubit_count() != v.qubit_count()) {
    throw DimensionError("trotter4_step: operator and state sizes differ");
  }
  TrotterStepper(h).step4(v.amplitudes(), dt);
}

namespace {

std::vector<Gate> qft_gates(int first, int count) {
  std::vector<Gate> gates;
  for (int j = 0; j < count; ++j) {
    gates.push_back(Gate::h(first + j));
    for (int k = j + 1; k < count; ++k) {
      gates.push_back(Gate::cphase(first + k, first + j,
                                   2.0 * std::numbers::pi / std::ldexp(1.0, k - j + 1)));
    }
  }
  for (int j = 0; j < count / 2; ++j) {
    gates.push_back(Gate::swap(first + j, first + count - 1 - j));
  }
  return gates;
}

void check_range(const StateVector& v, int first, int count) {
  if (first < 0 || count < 1 || first + count > v.qubit_count()) {
    throw DimensionError("qubit range out of bounds");
  }
}

}  // namespace

std::vector<Gate> inverse_qft_gates(int first, int count) {
  std::vector<Gate> gates = qft_gates(first, count);
  std::reverse(gates.begin(), gates.end());
  for (auto& g : gates) g.angle = -g.angle;
  return gates;
}

void qft(StateVector& v, int first, int count) {
  check_range(v, first, count);
  for (const auto& g : qft_gates(first, count)) apply_gate(v, g);
}

void inverse_qft(StateVector& v, int first, int count) {
  check_range(v, first, count);
  for (const auto& g : inverse_qft_gates(first, count)) apply_gate(v, g);
}

std::vector<double> marginal_probabilities(const StateVector& v, int first, int count) {
  check_range(v, first, count);
  const int shift = v.qubit_count() - first - count;
  const std::uint64_t mask = (std::uint64_t{1} << count) - 1;
  std::vector<double> p(std::size_t{1} << count, 0.0);
  const auto a = v.amplitudes();
  for (std::uint64_t t = 0; t < a.size(); ++t) p[(t >> shift) & mask] += std::norm(a[t]);
  return p;
}

Histogram sample_measurement(const StateVector& v, int first, int count, int shots,
                             std::uint64_t seed) {
  if (shots < 0) throw ContractError("shots must be >= 1 or kExactShots");
  Histogram h{first, count, shots, marginal_probabilities(v, first, count), {}};
  if (shots == kExactShots) return h;
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> dist(h.probabilities.begin(),
                                               h.probabilities.end());
  h.counts.assign(h.probabilities.size(), 0);
  for (int s = 0; s < shots; ++s) ++h.counts[dist(rng)];
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    h.probabilities[i] = static_cast<double>(h.counts[i]) / shots;
  }
  return h;
}

}  // namespace rotorq
