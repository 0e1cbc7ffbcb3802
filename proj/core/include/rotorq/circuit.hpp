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
#include "rotorq/state_vector.hpp"

namespace rotorq {

enum class GateKind { H, Rx, Ry, Rz, X, CX, CCX, CPhase, Swap, PauliRotation };

/// One circuit instruction. `qubits` lists controls first, then the target
/// (CX: {c, t}; CCX: {c1, c2, t}; CPhase: {c, t}; Swap: {a, b}). Rotations use
/// R_a(theta) = exp(-i theta sigma^a / 2); CPhase multiplies |11> by e^{i theta}.
struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> qubits;
  double angle = 0.0;
  std::optional<PauliString> pauli;

  static Gate h(int q) { return make(GateKind::H, {q}); }
  static Gate x(int q) { return make(GateKind::X, {q}); }
  static Gate rx(int q, double theta) { return make(GateKind::Rx, {q}, theta); }
  static Gate ry(int q, double theta) { return make(GateKind::Ry, {q}, theta); }
  static Gate rz(int q, double theta) { return make(GateKind::Rz, {q}, theta); }
  static Gate cx(int c, int t) { return make(GateKind::CX, {c, t}); }
  static Gate ccx(int c1, int c2, int t) { return make(GateKind::CCX, {c1, c2, t}); }
  static Gate cphase(int c, int t, double theta) {
    return make(GateKind::CPhase, {c, t}, theta);
  }
  static Gate swap(int a, int b) { return make(GateKind::Swap, {a, b}); }
  static Gate rotation(PauliString p, double theta) {
    Gate g = make(GateKind::PauliRotation, {}, theta);
    g.pauli = std::move(p);
    return g;
  }

 private:
  static Gate make(GateKind kind, std::vector<int> qubits, double angle = 0.0) {
    Gate g;
    g.kind = kind;
    g.qubits = std::move(qubits);
    g.angle = angle;
    return g;
  }
};

/// Throws DimensionError for out-of-range or repeated qubit indices.
void apply_gate(StateVector& v, const Gate& g);

/// exp(-i theta P / 2) on the amplitudes whose bits cover `control_mask`.
/// `amplitudes` must hold 2^P.qubit_count() entries.
void pauli_rotation(std::span<Complex> amplitudes, const PauliString& p,
                    double theta, std::uint64_t control_mask = 0);
void pauli_rotation(StateVector& v, const PauliString& p, double theta);

/// Symmetric product formulas for exp(-i H dt) with the terms of H applied in
/// sorted string order. The identity term contributes a phase, which becomes a
/// relative phase when the step is controlled.
class TrotterStepper {
 public:
  /// Throws ContractError unless H is Hermitian.
  explicit TrotterStepper(const PauliSum& h);

  int qubit_count() const noexcept { return qubit_count_; }
  /// Second-order step: forward half-steps then reverse half-steps.
  void step2(std::span<Complex> amplitudes, double dt,
             std::uint64_t control_mask = 0) const;
  /// Fourth-order Suzuki step built from five second-order steps.
  void step4(std::span<Complex> amplitudes, double dt,
             std::uint64_t control_mask = 0) const;
  /// Re-targets the stepper onto a larger register whose extra qubits sit in
  /// front (more significant), as with a QPE ancilla block.
  TrotterStepper widened(int extra_leading_qubits) const;

 private:
  TrotterStepper() = default;
  struct Term {
    PauliString string;
    double coefficient;
  };
  int qubit_count_ = 0;
  double identity_ = 0.0;
  std::vector<Term> terms_;
};

/// p = 1 / (4 - 4^(1/3)).
double suzuki_p();

void trotter4_step(StateVector& v, const PauliSum& h, double dt);

/// QFT |a> -> 2^{-r/2} sum_k e^{+2 pi i a k / 2^r} |k> on the contiguous
/// qubits [first, first + count), qubit `first` being the most significant.
void qft(StateVector& v, int first, int count);
void inverse_qft(StateVector& v, int first, int count);
/// Gate list of the inverse QFT (H, controlled phases, swaps).
std::vector<Gate> inverse_qft_gates(int first, int count);

/// Marker for exact probabilities instead of sampled counts.
inline constexpr int kExactShots = 0;

struct Histogram {
  int first = 0;
  int count = 0;
  int shots = kExactShots;
  /// Exact marginals, or empirical frequencies when sampled.
  std::vector<double> probabilities;
  /// Raw counts; empty in exact mode.
  std::vector<std::uint64_t> counts;
};

/// Marginal distribution of the register value on [first, first + count).
std::vector<double> marginal_probabilities(const StateVector& v, int first, int count);

/// kExactShots returns the exact marginal; otherwise `shots` seeded samples.
Histogram sample_measurement(const StateVector& v, int first, int count, int shots,
                             std::uint64_t seed);

}  // namespace rotorq
