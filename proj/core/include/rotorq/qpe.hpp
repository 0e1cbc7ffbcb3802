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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rotorq/circuit.hpp"
#include "rotorq/pauli.hpp"
#include "rotorq/rotor_model.hpp"
#include "rotorq/state_vector.hpp"

namespace rotorq {

/// Affine image H~ = (H - offset) / scale of a Hamiltonian. With classical
/// bounds (offset = E_min, scale = E_max - E_min) the spectrum lands in [0, 1).
struct RescaledHamiltonian {
  PauliSum original;
  PauliSum rescaled;
  double offset = 0.0;
  double scale = 1.0;
  bool shifted = false;

  double to_rescaled(double energy) const { return (energy - offset) / scale; }
  double from_rescaled(double value) const { return value * scale + offset; }
};

RescaledHamiltonian rescale(const PauliSum& h, double e_min, double e_max);
/// Uses classical_energy_bounds(spec).
RescaledHamiltonian rescale_chain(const PauliSum& h, const ChainSpec& spec);
/// H' = (H - e0) / lambda + 1/2, placing the ground level at phase 1/2.
RescaledHamiltonian shift_to_half(const PauliSum& h, double e0, double lambda);

struct RegisterBound {
  double gap = 0.0;  // first rescaled gap
  int t = 0;         // precision bits
  int r = 0;         // register size including the success-probability margin
};

/// t = -ceil(log2 gap) + 1 and r = t + 3. Throws ContractError for gaps below
/// 1e-14 or not below 1.
RegisterBound register_bound_from_gap(double rescaled_gap);
/// First gap of the chain via Lanczos, rescaled by the classical bounds.
RegisterBound register_bound(const ChainSpec& spec);

enum class QpeBackend {
  /// Dense U on the system register, joint state sum_a |a> U^a |phi>, then the
  /// inverse-QFT gates on the ancillas. Exact equivalent of the circuit.
  factorized,
  /// Gate-level controlled Pauli rotations; only for small registers.
  circuit,
};

enum class QpeEvolution { trotter4, exact };

inline constexpr std::uint64_t kDefaultMemoryCap = std::uint64_t{2} << 30;

struct QpeOptions {
  int register_qubits = 4;
  int trotter_steps = 20;
  int shots = kExactShots;
  std::uint64_t seed = 0;
  QpeBackend backend = QpeBackend::factorized;
  QpeEvolution evolution = QpeEvolution::trotter4;
  std::uint64_t memory_cap_bytes = kDefaultMemoryCap;
};

/// Result of one QPE run. Ancillas are the leading r qubits; the measured
/// integer a estimates the rescaled energy as (2^r - a) mod 2^r over 2^r.
class QpeOutcome {
 public:
  QpeOutcome(int register_qubits, StateVector state, Histogram histogram);

  int register_qubits() const noexcept { return register_qubits_; }
  int system_qubits() const noexcept { return state_.qubit_count() - register_qubits_; }
  const Histogram& histogram() const noexcept { return histogram_; }
  const StateVector& state() const noexcept { return state_; }

  /// Normalized system state conditioned on ancilla value `a`, or nullopt when
  /// that outcome has zero probability.
  std::optional<StateVector> projected_state(std::uint64_t a) const;

 private:
  int register_qubits_;
  StateVector state_;
  Histogram histogram_;
};

/// Rescaled energy read from ancilla value a.
double qpe_energy_estimate(std::uint64_t a, int register_qubits);

/// Dense U = exp(-i 2 pi H~) on the system register, Trotterized with
/// `steps` fourth-order steps or exact.
Eigen::MatrixXcd qpe_unitary(const PauliSum& rescaled, int steps, QpeEvolution evolution);

QpeOutcome run_qpe(const RescaledHamiltonian& h, const StateVector& input,
                   const QpeOptions& options);

/// Local maxima below this fraction of the largest probability are ignored.
inline constexpr double kSignificantPeakFraction = 0.05;

struct Peak {
  std::uint64_t ancilla = 0;
  double phase = 0.0;     // a / 2^r
  double estimate = 0.0;  // rescaled energy read from the register
  double probability = 0.0;
  double overlap = 0.0;   // |<E0|phi>|^2
  double energy = 0.0;    // <phi|H~|phi>
};

struct PeakReport {
  std::vector<Peak> peaks;  // significant local maxima, ascending ancilla
  std::size_t rightmost = 0;    // index of the largest-ancilla peak
  std::size_t best_overlap = 0; // index of the peak closest to the ground state
  /// Whether the two lowest levels land at least two bins apart.
  bool ground_resolvable = true;
};

struct ExactLevels {
  Eigen::VectorXcd ground;      // in the qubit representation
  double ground_energy = 0.0;   // rescaled
  std::optional<double> first_excited;  // rescaled
};

PeakReport analyze_peaks(const QpeOutcome& outcome, const RescaledHamiltonian& h,
                         const ExactLevels& exact,
                         double threshold = kSignificantPeakFraction);

/// Peak probability required at P = max(P) in the Trotter study.
inline constexpr double kTrotterConvergenceThreshold = 0.8;

struct TrotterStudyRow {
  int steps = 0;
  double dt = 0.0;
  double phase_error = 0.0;  // |arg <E0|U_P|E0> e^{2 pi i E0~}|
  double state_error = 0.0;  // ||U_P|E0> - U|E0>||
  double peak_probability = 0.0;
};

struct TrotterStudy {
  std::vector<TrotterStudyRow> rows;
  double lambda = 1.0;
  double ground_rescaled = 0.0;
  std::uint64_t target = 0;
  int register_qubits = 4;
  double phase_slope = 0.0;  // least-squares slope of log error vs log dt
  double state_slope = 0.0;
  bool converged = false;
};

/// Exact-ground-state QPE for each Trotter step count. With `shift` the
/// ground level is moved to phase 1/2 using lambda = E_max - E_min.
TrotterStudy trotter_convergence_study(const PauliSum& h,
                                       std::pair<double, double> bounds,
                                       std::span<const int> steps, bool shift,
                                       int register_qubits = 4);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace rotorq
