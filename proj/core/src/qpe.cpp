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

#include "rotorq/qpe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rotorq/errors.hpp"
#include "rotorq/lanczos.hpp"

namespace rotorq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

StateVector from_eigen(const Eigen::VectorXcd& v, int qubits) {
  return StateVector(qubits, std::vector<Complex>(v.data(), v.data() + v.size()));
}

void check_memory(int total_qubits, int system_qubits, std::uint64_t cap) {
  if (total_qubits > kMaxStateQubits) {
    throw ResourceError("QPE register of " + std::to_string(total_qubits) +
                        " qubits is too large");
  }
  const double bytes = 16.0 * (std::ldexp(1.0, total_qubits) +
                               std::ldexp(1.0, 2 * system_qubits));
  if (bytes > static_cast<double>(cap)) {
    throw ResourceError("QPE needs " + std::to_string(bytes / (1 << 20)) +
                        " MiB, above the memory cap of " +
                        std::to_string(cap >> 20) + " MiB");
  }
}

}  // namespace

RescaledHamiltonian rescale(const PauliSum& h, double e_min, double e_max) {
  if (!(e_max > e_min)) throw ContractError("rescale needs e_max > e_min");
  RescaledHamiltonian out{h, h, e_min, e_max - e_min, false};
  out.rescaled = simplify((h - PauliSum::identity(h.qubit_count(), e_min)) *
                          (1.0 / out.scale));
  return out;
}

RescaledHamiltonian rescale_chain(const PauliSum& h, const ChainSpec& spec) {
  const auto [lo, hi] = classical_energy_bounds(spec);
  return rescale(h, lo, hi);
}

RescaledHamiltonian shift_to_half(const PauliSum& h, double e0, double lambda) {
  if (!(lambda > 0.0)) throw ContractError("shift_to_half needs lambda > 0");
  RescaledHamiltonian out = rescale(h, e0 - 0.5 * lambda, e0 + 0.5 * lambda);
  out.shifted = true;
  return out;
}

RegisterBound register_bound_from_gap(double rescaled_gap) {
  if (!(rescaled_gap >= 1e-14)) {
    throw ContractError("register bound: degenerate gap");
  }
  if (!(rescaled_gap < 1.0)) throw ContractError("register bound: gap must be < 1");
  const int digits = -static_cast<int>(std::ceil(std::log2(rescaled_gap)));
  return {rescaled_gap, digits + 1, digits + 4};
}

RegisterBound register_bound(const ChainSpec& spec) {
  const auto [lo, hi] = classical_energy_bounds(spec);
  const MomentumHamiltonian h(spec);
  LanczosOptions opts;
  opts.eigenvalues = 2;
  const EigenResult levels = lanczos_ground(make_operator(h), opts);
  return register_bound_from_gap((levels.eigenvalues[1] - levels.eigenvalues[0]) /
                                 (hi - lo));
}

QpeOutcome::QpeOutcome(int register_qubits, StateVector state, Histogram histogram)
    : register_qubits_(register_qubits),
      state_(std::move(state)),
      histogram_(std::move(histogram)) {}

std::optional<StateVector> QpeOutcome::projected_state(std::uint64_t a) const {
  if (a >= (std::uint64_t{1} << register_qubits_)) {
    throw DimensionError("ancilla value out of range");
  }
  const int sq = system_qubits();
  const std::size_t block = std::size_t{1} << sq;
  const auto amps = state_.amplitudes().subspan(a * block, block);
  StateVector phi(sq, std::vector<Complex>(amps.begin(), amps.end()));
  if (phi.norm() < 1e-300) return std::nullopt;
  phi.normalize();
  return phi;
}

double qpe_energy_estimate(std::uint64_t a, int register_qubits) {
  const std::uint64_t m = std::uint64_t{1} << register_qubits;
  return static_cast<double>((m - a % m) % m) / static_cast<double>(m);
}

Eigen::MatrixXcd qpe_unitary(const PauliSum& rescaled, int steps,
                             QpeEvolution evolution) {
  const int q = rescaled.qubit_count();
  if (evolution == QpeEvolution::exact) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(to_dense(rescaled));
    Eigen::VectorXcd phases = (eig.eigenvalues().array() * -kTwoPi)
                                  .unaryExpr([](double t) { return std::polar(1.0, t); });
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
  }
  if (steps < 1) throw ContractError("QPE needs at least one Trotter step");
  const TrotterStepper stepper(rescaled);
  const std::size_t dim = std::size_t{1} << q;
  const double dt = kTwoPi / steps;
  Eigen::MatrixXcd u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector v = StateVector::basis(q, col);
    for (int s = 0; s < steps; ++s) stepper.step4(v.amplitudes(), dt);
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = v[row];
  }
  return u;
}

QpeOutcome run_qpe(const RescaledHamiltonian& h, const StateVector& input,
                   const QpeOptions& options) {
  const int r = options.register_qubits;
  const int sq = input.qubit_count();
  if (r < 1) throw ContractError("QPE register needs at least one qubit");
  if (options.trotter_steps < 1 && options.evolution == QpeEvolution::trotter4) {
    throw ContractError("QPE needs at least one Trotter step");
  }
  if (h.rescaled.qubit_count() != sq) {
    throw DimensionError("QPE input state does not match the Hamiltonian");
  }
  if (std::abs(input.norm() - 1.0) > 1e-10) {
    throw ContractError("QPE input state must be normalized");
  }
  check_memory(r + sq, sq, options.memory_cap_bytes);

  const std::size_t block = std::size_t{1} << sq;
  const std::uint64_t m = std::uint64_t{1} << r;
  StateVector state(r + sq);

  if (options.backend == QpeBackend::factorized) {
    const Eigen::MatrixXcd u =
        qpe_unitary(h.rescaled, options.trotter_steps, options.evolution);
    Eigen::VectorXcd cur = Eigen::Map<const Eigen::VectorXcd>(
        input.amplitudes().data(), static_cast<Eigen::Index>(block));
    const double norm = 1.0 / std::sqrt(static_cast<double>(m));
    auto amps = state.amplitudes();
    for (std::uint64_t a = 0; a < m; ++a) {
      for (std::size_t s = 0; s < block; ++s) amps[a * block + s] = norm * cur[s];
      if (a + 1 < m) cur = u * cur;
    }
  } else {
    if (options.evolution != QpeEvolution::trotter4) {
      throw ContractError("the circuit backend only supports Trotterized evolution");
    }
    std::copy(input.amplitudes().begin(), input.amplitudes().end(),
              state.amplitudes().begin());
    for (int q = 0; q < r; ++q) apply_gate(state, Gate::h(q));
    const TrotterStepper stepper = TrotterStepper(h.rescaled).widened(r);
    const double dt = kTwoPi / options.trotter_steps;
    for (int j = 0; j < r; ++j) {
      // Ancilla r-1-j carries weight 2^j in the register integer.
      const std::uint64_t control = qubit_bit(r + sq, r - 1 - j);
      for (std::uint64_t rep = 0; rep < (std::uint64_t{1} << j); ++rep) {
        for (int s = 0; s < options.trotter_steps; ++s) {
          stepper.step4(state.amplitudes(), dt, control);
        }
      }
    }
  }
  for (const auto& g : inverse_qft_gates(0, r)) apply_gate(state, g);
  Histogram hist = sample_measurement(state, 0, r, options.shots, options.seed);
  return QpeOutcome(r, std::move(state), std::move(hist));
}

PeakReport analyze_peaks(const QpeOutcome& outcome, const RescaledHamiltonian& h,
                         const ExactLevels& exact, double threshold) {
  const auto& p = outcome.histogram().probabilities;
  const int r = outcome.register_qubits();
  const std::size_t m = p.size();
  if (static_cast<Eigen::Index>(std::size_t{1} << outcome.system_qubits()) !=
      exact.ground.size()) {
    throw DimensionError("analyze_peaks: ground state does not match the system");
  }
  const double top = *std::max_element(p.begin(), p.end());

  PeakReport report;
  for (std::size_t a = 0; a < m; ++a) {
    const double left = p[(a + m - 1) % m], right = p[(a + 1) % m];
    const bool local_max = m == 1 || (p[a] > left && p[a] >= right);
    if (!local_max || p[a] < threshold * top) continue;
    Peak peak;
    peak.ancilla = a;
    peak.phase = static_cast<double>(a) / static_cast<double>(m);
    peak.estimate = qpe_energy_estimate(a, r);
    peak.probability = p[a];
    if (auto phi = outcome.projected_state(a)) {
      const Eigen::Map<const Eigen::VectorXcd> v(phi->amplitudes().data(),
                                                 exact.ground.size());
      peak.overlap = std::norm(exact.ground.dot(v));
      peak.energy = raw_expectation(h.rescaled, phi->amplitudes()).real();
    }
    report.peaks.push_back(peak);
  }
  if (report.peaks.empty()) throw ContractError("histogram has no peaks");
  report.rightmost = report.peaks.size() - 1;
  for (std::size_t i = 0; i < report.peaks.size(); ++i) {
    if (report.peaks[i].overlap > report.peaks[report.best_overlap].overlap) {
      report.best_overlap = i;
    }
  }
  if (exact.first_excited) {
    const double bins = (*exact.first_excited - exact.ground_energy) * static_cast<double>(m);
    report.ground_resolvable = bins >= 2.0;
  }
  return report;
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ContractError("log_log_slope needs two or more matching points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

TrotterStudy trotter_convergence_study(const PauliSum& h,
                                       std::pair<double, double> bounds,
                                       std::span<const int> steps, bool shift,
                                       int register_qubits) {
  if (steps.empty()) throw ContractError("Trotter study needs step counts");
  const int q = h.qubit_count();
  const EigenResult ground = lanczos_ground(make_operator(h));
  const double e0 = ground.eigenvalues[0];

  TrotterStudy study;
  study.lambda = bounds.second - bounds.first;
  study.register_qubits = register_qubits;
  const RescaledHamiltonian scaled = shift ? shift_to_half(h, e0, study.lambda)
                                           : rescale(h, bounds.first, bounds.second);
  study.ground_rescaled = scaled.to_rescaled(e0);
  const std::uint64_t m = std::uint64_t{1} << register_qubits;
  const auto bin = static_cast<std::uint64_t>(std::llround(study.ground_rescaled * m));
  study.target = (m - bin % m) % m;

  const Eigen::VectorXcd& g = ground.vectors[0];
  const Complex exact_phase = std::polar(1.0, -kTwoPi * study.ground_rescaled);
  const StateVector input = from_eigen(g, q);
  std::vector<double> dts, phase_errors, state_errors;
  for (int p : steps) {
    const Eigen::MatrixXcd u = qpe_unitary(scaled.rescaled, p, QpeEvolution::trotter4);
    const Eigen::VectorXcd evolved = u * g;
    TrotterStudyRow row;
    row.steps = p;
    row.dt = kTwoPi / p;
    row.phase_error = std::abs(std::arg(g.dot(evolved) / exact_phase));
    row.state_error = (evolved - exact_phase * g).norm();
    QpeOptions opts;
    opts.register_qubits = register_qubits;
    opts.trotter_steps = p;
    row.peak_probability =
        run_qpe(scaled, input, opts).histogram().probabilities[study.target];
    dts.push_back(row.dt);
    phase_errors.push_back(row.phase_error);
    state_errors.push_back(row.state_error);
    study.rows.push_back(row);
  }
  if (steps.size() >= 2) {
    study.phase_slope = log_log_slope(dts, phase_errors);
    study.state_slope = log_log_slope(dts, state_errors);
  }
  const auto last = std::max_element(study.rows.begin(), study.rows.end(),
                                     [](const auto& a, const auto& b) {
                                       return a.steps < b.steps;
                                     });
  study.converged = last->peak_probability >= kTrotterConvergenceThreshold;
  return study;
}

}  // namespace rotorq
