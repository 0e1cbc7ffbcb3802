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
#include <string>
#include <vector>

#include "rotorq/circuit.hpp"
#include "rotorq/optimizer.hpp"
#include "rotorq/pauli.hpp"
#include "rotorq/state_vector.hpp"

namespace rotorq {

/// Layered hardware-efficient ansatz: `blocks` x [Rx Ry Rz on every qubit,
/// then CCX on every triple i<j<k with controls i, j and target k], followed
/// by an optional final rotation layer. Registers of two qubits use CX on the
/// single pair instead.
struct AnsatzSpec {
  int qubit_count = 4;
  int blocks = 16;
  bool final_rotation_layer = true;

  int parameter_count() const {
    return 3 * qubit_count * (blocks + (final_rotation_layer ? 1 : 0));
  }
};

class Ansatz {
 public:
  explicit Ansatz(AnsatzSpec spec);

  const AnsatzSpec& spec() const noexcept { return spec_; }
  std::size_t parameter_count() const noexcept { return parameters_; }
  /// Gates of one entanglement layer.
  const std::vector<Gate>& entangler() const noexcept { return entangler_; }

  /// Full gate list for the given angles.
  std::vector<Gate> gates(std::span<const double> theta) const;
  /// Applies the circuit to `v` in place.
  void apply(StateVector& v, std::span<const double> theta) const;

 private:
  AnsatzSpec spec_;
  std::size_t parameters_;
  std::vector<Gate> entangler_;
};

/// Throws DimensionError for fewer than two qubits or negative blocks.
Ansatz build_ansatz(const AnsatzSpec& spec);

struct VqeOptions {
  std::string optimizer = "cobyla";
  /// Objective evaluations; each counts as one iteration of the trace.
  int max_iterations = 1000;
  double rho_begin = 0.5;
  double rho_end = 1e-6;
  /// Zero gives the all-zero start; otherwise angles are drawn uniformly from
  /// [-init_scale, init_scale] with `seed`.
  double init_scale = 0.0;
  std::uint64_t seed = 0;
};

struct VqeTrace {
  std::vector<double> energies;     // one per objective evaluation
  std::vector<double> best_so_far;  // running minimum of energies
  std::vector<double> initial_parameters;
  std::vector<double> parameters;   // best point found
  double converged_energy = 0.0;
  StopReason reason = StopReason::converged;
  double wall_seconds = 0.0;
};

/// Exact-statevector VQE. Never throws on poor convergence; the trace reports
/// the best energy found.
VqeTrace vqe_minimize(const PauliSum& h, const Ansatz& ansatz,
                      const StateVector& initial_state, const VqeOptions& options);

std::vector<double> initial_parameters(std::size_t count, double scale,
                                       std::uint64_t seed);

}  // namespace rotorq
