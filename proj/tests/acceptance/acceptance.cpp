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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   rotorq_acceptance [--only 1,3] [--known-failures 6]
//
// The exit status is non-zero when a criterion fails that is not listed in
// --known-failures. Listed criteria still print their real status.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "rotorq/binary_encoding.hpp"
#include "rotorq/circuit.hpp"
#include "rotorq/lanczos.hpp"
#include "rotorq/qpe.hpp"
#include "rotorq/rotor_model.hpp"
#include "rotorq/unary_encoding.hpp"
#include "rotorq/vqe.hpp"

namespace {

using namespace rotorq;
using rotorq::testing::kron_sum;
using rotorq::testing::to_eigen;

constexpr double kTwoPi = 2 * std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void note(Outcome& o, bool ok, const std::string& text) {
  o.pass &= ok;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += (ok ? "" : "!") + text;
}

ChainSpec chain(int rotors, int l, int n, double g) {
  ChainSpec s;
  s.rotors = rotors;
  s.g = g;
  s.basis = {l, n};
  return s;
}

double ground(const LinearOperator& op) { return lanczos_ground(op).eigenvalues[0]; }

// 1. Encoding equivalence over the three-rotor coupling sweep.
Outcome encoding_equivalence() {
  Outcome o;
  double worst_binary = 0.0, worst_unary = 0.0;
  for (int i = 1; i <= 10; ++i) {
    const double g = 0.1 * i;
    const auto b = chain(3, 3, 4, g);
    const double e_mom = ground(make_operator(build_momentum_hamiltonian(b)));
    const double e_bin = ground(make_operator(encode_chain_hamiltonian(b)));
    worst_binary = std::max(worst_binary, std::abs(e_bin - e_mom));

    const auto u = chain(3, 2, 3, g);
    const double e_mom_u = ground(make_operator(build_momentum_hamiltonian(u)));
    const double e_una = ground(make_physical_operator(u));
    worst_unary = std::max(worst_unary, std::abs(e_una - e_mom_u));
  }
  note(o, worst_binary < 1e-8, fmt("max |E0 binary - momentum| = %.2e", worst_binary));
  note(o, worst_unary < 1e-8, fmt("max |E0 unary - momentum| = %.2e", worst_unary));
  return o;
}

struct QpeCheck {
  double energy = 0.0;
  double overlap = 0.0;
  double ed = 0.0;
  std::uint64_t ancilla = 0;
};

QpeCheck rightmost_peak(const ChainSpec& spec, int r, int steps) {
  const auto h = encode_chain_hamiltonian(spec);
  const auto scaled = rescale_chain(h, spec);
  LanczosOptions lo;
  lo.eigenvalues = 2;
  const auto levels = lanczos_ground(make_operator(scaled.rescaled), lo);
  QpeOptions opt;
  opt.register_qubits = r;
  opt.trotter_steps = steps;
  const auto out = run_qpe(scaled, StateVector::uniform(h.qubit_count()), opt);
  const auto report = analyze_peaks(
      out, scaled, {levels.vectors[0], levels.eigenvalues[0], levels.eigenvalues[1]});
  const auto& p = report.peaks[report.rightmost];
  return {p.energy, p.overlap, levels.eigenvalues[0], p.ancilla};
}

// 2. Two-rotor QPE with a 12-qubit register.
Outcome qpe_two_rotors() {
  Outcome o;
  const auto c = rightmost_peak(chain(2, 3, 4, 1.5), 12, 20);
  const double published_ed = 5.140588e-2;
  note(o, std::abs(c.ed - published_ed) < 5e-9, fmt("ED %.8e", c.ed));
  note(o, std::abs(c.energy - published_ed) < 2e-6,
       fmt("peak a=%llu energy %.8e (diff %.1e)", static_cast<unsigned long long>(c.ancilla),
           c.energy, std::abs(c.energy - published_ed)));
  note(o, c.overlap > 0.99, fmt("overlap %.6f", c.overlap));
  return o;
}

// 3. Three-rotor QPE, full d = 8 system and the d = 4 surrogate.
Outcome qpe_three_rotors() {
  Outcome o;
  const auto full = rightmost_peak(chain(3, 3, 4, 0.5), 10, 20);
  const double published_ed = 3.24766e-2;
  note(o, std::abs(full.ed - published_ed) < 5e-7, fmt("full ED %.6e", full.ed));
  note(o, std::abs(full.energy - published_ed) < 2e-4,
       fmt("full peak energy %.6e (diff %.1e)", full.energy,
           std::abs(full.energy - published_ed)));
  note(o, full.overlap > 0.9, fmt("full overlap %.4f", full.overlap));

  // Surrogate: golden value from textbook QPE with dense exact propagator.
  const auto spec = chain(3, 1, 2, 0.5);
  const auto scaled = rescale_chain(encode_chain_hamiltonian(spec), spec);
  const Eigen::MatrixXcd hd = kron_sum(scaled.rescaled);
  const Eigen::MatrixXcd u = rotorq::testing::dense_propagator(hd, kTwoPi);
  const int r = 10;
  const Eigen::Index m = Eigen::Index{1} << r, block = hd.rows();
  Eigen::MatrixXcd rows(m, block);
  Eigen::VectorXcd cur = to_eigen(StateVector::uniform(6).amplitudes());
  for (Eigen::Index a = 0; a < m; ++a) {
    rows.row(a) = cur.transpose() / std::sqrt(double(m));
    cur = u * cur;
  }
  const Eigen::MatrixXcd reg = rotorq::testing::inverse_dft(r) * rows;
  const auto sur = rightmost_peak(spec, r, 20);
  const Eigen::VectorXcd phi = reg.row(static_cast<Eigen::Index>(sur.ancilla)).transpose().normalized();
  const double golden = phi.dot(hd * phi).real();
  note(o, std::abs(sur.energy - sur.ed) < 2e-4 && std::abs(sur.energy - golden) < 1e-5,
       fmt("surrogate peak energy %.6e, ED %.6e, dense golden %.6e", sur.energy, sur.ed,
           golden));
  note(o, sur.overlap > 0.9, fmt("surrogate overlap %.4f", sur.overlap));
  return o;
}

// 4. Register bounds over the coupling sweep.
Outcome register_bounds() {
  Outcome o;
  int lo = 1000, hi = 0;
  for (int rotors : {2, 3}) {
    for (int i = 1; i <= 10; ++i) {
      const int r = register_bound(chain(rotors, 3, 4, 0.1 * i)).r;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  const int strong = register_bound(chain(3, 3, 4, 1.5)).r;
  note(o, hi == 12 && lo == 9, fmt("sweep max %d min %d", hi, lo));
  note(o, strong == 13, fmt("N=3 g=1.5 bound %d", strong));
  return o;
}

// 5. Fourth-order Trotter convergence with the ground phase shifted to 1/2.
Outcome trotter_order() {
  Outcome o;
  const auto spec = chain(2, 3, 4, 2.0);
  const std::vector<int> steps{5, 10, 15, 20};
  const auto study = trotter_convergence_study(encode_chain_hamiltonian(spec),
                                               classical_energy_bounds(spec), steps, true);
  note(o, std::abs(study.phase_slope - 4.0) <= 0.3, fmt("phase-error slope %.3f", study.phase_slope));
  note(o, study.rows.back().peak_probability >= kTrotterConvergenceThreshold,
       fmt("P=20 peak probability %.4f", study.rows.back().peak_probability));
  return o;
}

// 6. VQE on two d = 4 rotors from zero angles.
Outcome vqe_convergence() {
  Outcome o;
  const AnsatzSpec binary_ansatz{4, 16, true};
  const auto ansatz = build_ansatz(binary_ansatz);
  for (auto [g, budget] : {std::pair{0.2, 1000}, {2.0, 10000}}) {
    const auto spec = chain(2, 1, 2, g);
    const auto h = encode_chain_hamiltonian(spec);
    const double e0 = ground(make_operator(h));
    const std::vector<int> zero{1, 1};
    VqeOptions opt;
    opt.max_iterations = budget;
    opt.rho_begin = 1.0;
    opt.rho_end = 1e-6;
    const auto trace = vqe_minimize(h, ansatz, StateVector::basis(4, binary_embed(spec.basis, zero)), opt);
    const double err = trace.converged_energy - e0;
    note(o, err < 1e-3,
         fmt("binary g=%.1f: E=%.6f E0=%.6f err %.2e after %zu evals", g, trace.converged_energy,
             e0, err, trace.energies.size()));
  }

  const auto unary_ansatz = build_ansatz({8, 16, true});
  for (double g : {0.2, 2.0}) {
    const auto spec = chain(2, 1, 2, g);
    const auto h = encode_chain_hamiltonian_unary(spec);
    const double e0 = ground(make_physical_operator(spec));
    const PhysicalIndexer ix(spec.basis, 2);
    const std::vector<int> zero{1, 1};
    VqeOptions opt;
    opt.max_iterations = 1000;
    opt.rho_begin = 1.0;
    const auto trace = vqe_minimize(h, unary_ansatz, StateVector::basis(8, ix.embed(zero)), opt);
    bool monotone = true;
    for (std::size_t i = 1; i < trace.best_so_far.size(); ++i) {
      monotone &= trace.best_so_far[i] <= trace.best_so_far[i - 1];
    }
    const double lowest = *std::min_element(trace.energies.begin(), trace.energies.end());
    note(o, monotone && lowest >= e0 - 1e-10,
         fmt("unary g=%.1f: lowest E=%.6f vs physical E0=%.6f, envelope %s", g, lowest, e0,
             monotone ? "monotone" : "NOT monotone"));
  }
  return o;
}

// 7. Always-on property checks.
Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(2026);

  double algebra = 0.0;
  for (int q = 1; q <= 8; ++q) {
    for (int t = 0; t < 4; ++t) {
      const auto a = rotorq::testing::random_sum(q, 6, rng);
      const auto b = rotorq::testing::random_sum(q, 6, rng);
      algebra = std::max(algebra, (kron_sum(a * b) - kron_sum(a) * kron_sum(b)).norm());
      const auto v = rotorq::testing::random_vector(Eigen::Index{1} << q, rng);
      std::vector<Complex> in(v.data(), v.data() + v.size()), out(in.size());
      apply(a, in, out);
      algebra = std::max(algebra, (to_eigen(out) - kron_sum(a) * v).norm());
    }
  }
  note(o, algebra < 1e-12, fmt("Pauli algebra vs Kronecker %.1e", algebra));

  bool hermitian = true, weights = true;
  for (const RotorBasis& b : {RotorBasis{1, 0}, RotorBasis{1, 2}, RotorBasis{3, 4}}) {
    const int k = binary_qubits_per_rotor(b);
    for (int n = 2; n <= 3; ++n) {
      const auto h = encode_chain_hamiltonian(chain(n, b.l, b.n, 0.7));
      hermitian &= h.is_hermitian();
      weights &= h.max_weight() <= 2 * k;
      const auto m = build_momentum_hamiltonian(chain(n, b.l, b.n, 0.7));
      if (m.has_dense()) hermitian &= (m.dense() - m.dense().adjoint()).norm() < 1e-12;
    }
  }
  for (int d = 2; d <= 5; ++d) {
    const RotorBasis b{d / 2, d - 1 - d / 2};
    hermitian &= encode_chain_hamiltonian_unary(chain(3, b.l, b.n, 0.7)).is_hermitian();
    for (auto kind : {InteractionKind::xx, InteractionKind::yy, InteractionKind::xy_sym}) {
      const auto s = encode_interaction_projected(b, 3, 0, 1, kind);
      for (const auto& t : s.terms()) weights &= t.string.weight() == 4;
    }
  }
  hermitian &= hermiticity_defect(make_physical_operator(chain(3, 3, 4, 0.7)), 4, 1) < 1e-10;
  note(o, hermitian, "hermiticity");
  note(o, weights, "Pauli weight bounds");

  {
    const auto spec = chain(2, 1, 2, 0.9);
    const auto h = kron_sum(encode_chain_hamiltonian_unary(spec));
    double worst = 0.0;
    for (int j = 0; j < 2; ++j) {
      PauliSum number(8);
      for (int lvl = 0; lvl < 4; ++lvl) {
        number.add(PauliString(8), 0.5);
        number.add(PauliString::single(8, unary_qubit(spec.basis, j, lvl), PauliAxis::Z), -0.5);
      }
      const auto nd = kron_sum(number);
      worst = std::max(worst, (h * nd - nd * h).norm());
    }
    note(o, worst < 1e-12, fmt("unary occupation commutator %.1e", worst));
  }

  {
    const auto spec = chain(3, 3, 4, 0.6);
    const auto h = build_momentum_hamiltonian(spec);
    const auto v = rotorq::testing::random_vector(static_cast<Eigen::Index>(h.dimension()), rng);
    std::vector<Complex> out(h.dimension());
    apply_physical(spec, std::span<const Complex>(v.data(), h.dimension()), out);
    const double err = (to_eigen(out) - h.dense() * v).norm();
    note(o, err < 1e-12, fmt("apply_physical vs dense %.1e", err));
  }

  {
    double drift = 0.0;
    const auto ansatz = build_ansatz({4, 4, true});
    const auto theta = initial_parameters(ansatz.parameter_count(), 3.0, 5);
    auto v = StateVector::uniform(4);
    for (const auto& g : ansatz.gates(theta)) {
      apply_gate(v, g);
      drift = std::max(drift, std::abs(v.norm() - 1.0));
    }
    const auto h = encode_chain_hamiltonian(chain(2, 1, 2, 1.0));
    const TrotterStepper stepper(h);
    for (int s = 0; s < 20; ++s) {
      stepper.step4(v.amplitudes(), 0.3);
      drift = std::max(drift, std::abs(v.norm() - 1.0));
    }
    auto w = StateVector::uniform(7);
    for (const auto& g : inverse_qft_gates(0, 7)) {
      apply_gate(w, g);
      drift = std::max(drift, std::abs(w.norm() - 1.0));
    }
    note(o, drift < 1e-10, fmt("norm drift %.1e", drift));
  }

  {
    double worst = 0.0;
    for (int r = 1; r <= 8; ++r) {
      const auto v = rotorq::testing::random_vector(Eigen::Index{1} << r, rng);
      StateVector s(r, std::vector<Complex>(v.data(), v.data() + v.size()));
      qft(s, 0, r);
      inverse_qft(s, 0, r);
      worst = std::max(worst, (to_eigen(s.amplitudes()) - v).norm());
    }
    note(o, worst < 1e-12, fmt("QFT round trip %.1e", worst));
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotorq acceptance suite"};
  std::vector<int> only, known;
  app.add_option("--only", only, "Run only these criteria")->delimiter(',');
  app.add_option("--known-failures", known,
                 "Criteria whose failure is documented and does not fail the run")
      ->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"encoding equivalence (N=3 sweep)", encoding_equivalence},
      {"QPE N=2 r=12 g=1.5", qpe_two_rotors},
      {"QPE N=3 r=10 g=0.5", qpe_three_rotors},
      {"register bounds", register_bounds},
      {"Trotter order", trotter_order},
      {"VQE convergence", vqe_convergence},
      {"property suites", properties},
  };
  const std::set<int> selected(only.begin(), only.end());
  const std::set<int> tolerated(known.begin(), known.end());
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool excused = !result.pass && tolerated.count(id);
    if (!result.pass && !excused) ++unexpected;
    std::printf("criterion %d %s: %s (%s) [%.1fs]\n", id, result.pass ? "PASS" : "FAIL",
                criteria[i].first, result.detail.c_str(), secs);
    if (excused) std::printf("criterion %d failure is listed as known\n", id);
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
