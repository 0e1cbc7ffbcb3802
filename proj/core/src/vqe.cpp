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

#include "rotorq/vqe.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "rotorq/errors.hpp"

namespace rotorq {

Ansatz::Ansatz(AnsatzSpec spec) : spec_(spec) {
  const int q = spec_.qubit_count;
  if (q < 2) throw DimensionError("the ansatz needs at least two qubits");
  if (q > kMaxStateQubits) throw DimensionError("ansatz register too large");
  if (spec_.blocks < 0) throw DimensionError("block count must be non-negative");
  parameters_ = static_cast<std::size_t>(spec_.parameter_count());
  if (q == 2) {
    entangler_.push_back(Gate::cx(0, 1));
    return;
  }
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      for (int k = j + 1; k < q; ++k) entangler_.push_back(Gate::ccx(i, j, k));
    }
  }
}

std::vector<Gate> Ansatz::gates(std::span<const double> theta) const {
  if (theta.size() != parameters_) {
    throw DimensionError("ansatz expects " + std::to_string(parameters_) +
                         " parameters, got " + std::to_string(theta.size()));
  }
  const int q = spec_.qubit_count;
  std::vector<Gate> out;
  std::size_t p = 0;
  auto rotations = [&] {
    for (int i = 0; i < q; ++i) {
      out.push_back(Gate::rx(i, theta[p++]));
      out.push_back(Gate::ry(i, theta[p++]));
      out.push_back(Gate::rz(i, theta[p++]));
    }
  };
  for (int b = 0; b < spec_.blocks; ++b) {
    rotations();
    out.insert(out.end(), entangler_.begin(), entangler_.end());
  }
  if (spec_.final_rotation_layer) rotations();
  return out;
}

void Ansatz::apply(StateVector& v, std::span<const double> theta) const {
  if (v.qubit_count() != spec_.qubit_count) {
    throw DimensionError("ansatz and state register sizes differ");
  }
  for (const auto& g : gates(theta)) apply_gate(v, g);
}

Ansatz build_ansatz(const AnsatzSpec& spec) { return Ansatz(spec); }

std::vector<double> initial_parameters(std::size_t count, double scale,
                                       std::uint64_t seed) {
  std::vector<double> theta(count, 0.0);
  if (scale == 0.0) return theta;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  for (auto& t : theta) t = dist(rng);
  return theta;
}

VqeTrace vqe_minimize(const PauliSum& h, const Ansatz& ansatz,
                      const StateVector& initial_state, const VqeOptions& options) {
  if (h.qubit_count() != ansatz.spec().qubit_count ||
      initial_state.qubit_count() != h.qubit_count()) {
    throw DimensionError("VQE Hamiltonian, ansatz and state sizes differ");
  }
  if (!h.is_hermitian()) throw ContractError("VQE needs a Hermitian Hamiltonian");
  if (std::abs(initial_state.norm() - 1.0) > 1e-10) {
    throw ContractError("VQE initial state must be normalized");
  }
  const PauliSum hs = simplify(h);
  const auto optimizer = make_optimizer(options.optimizer);

  VqeTrace trace;
  trace.initial_parameters =
      initial_parameters(ansatz.parameter_count(), options.init_scale, options.seed);
  const auto start = std::chrono::steady_clock::now();
  auto energy = [&](std::span<const double> theta) {
    StateVector v = initial_state;
    ansatz.apply(v, theta);
    const double e = raw_expectation(hs, v.amplitudes()).real();
    trace.energies.push_back(e);
    trace.best_so_far.push_back(
        trace.best_so_far.empty() ? e : std::min(e, trace.best_so_far.back()));
    return e;
  };
  OptimizerOptions opt;
  opt.max_evaluations = options.max_iterations;
  opt.rho_begin = options.rho_begin;
  opt.rho_end = options.rho_end;
  const OptimizerResult result = optimizer->minimize(energy, trace.initial_parameters, opt);
  trace.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  trace.parameters = result.x;
  trace.converged_energy = result.value;
  trace.reason = result.reason;
  return trace;
}

}  // namespace rotorq
