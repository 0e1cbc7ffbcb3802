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

#include <vector>

#include <benchmark/benchmark.h>

#include "rotorq/binary_encoding.hpp"
#include "rotorq/circuit.hpp"
#include "rotorq/lanczos.hpp"
#include "rotorq/unary_encoding.hpp"
#include "rotorq/vqe.hpp"

namespace {

using namespace rotorq;

ChainSpec chain(int rotors, int l, int n, double g) {
  ChainSpec s;
  s.rotors = rotors;
  s.g = g;
  s.basis = {l, n};
  return s;
}

std::vector<Complex> random_amplitudes(std::size_t dim) {
  const Eigen::VectorXcd v = random_unit_vector(dim, 7);
  return {v.data(), v.data() + v.size()};
}

// Matrix-free H|psi> for the binary chain, N = range(0) rotors at d = 8.
void BM_PauliApply(benchmark::State& state) {
  const PauliSum h = encode_chain_hamiltonian(chain(static_cast<int>(state.range(0)), 3, 4, 0.5));
  const std::size_t dim = std::size_t{1} << h.qubit_count();
  const auto in = random_amplitudes(dim);
  std::vector<Complex> out(dim);
  for (auto _ : state) {
    apply(h, in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["terms"] = static_cast<double>(h.size());
}
BENCHMARK(BM_PauliApply)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

// One fourth-order Trotter step on the binary chain.
void BM_TrotterStep(benchmark::State& state) {
  const PauliSum h = encode_chain_hamiltonian(chain(static_cast<int>(state.range(0)), 3, 4, 0.5));
  const TrotterStepper stepper(h);
  auto amps = random_amplitudes(std::size_t{1} << h.qubit_count());
  for (auto _ : state) {
    stepper.step4(amps, 0.05);
    benchmark::DoNotOptimize(amps.data());
  }
}
BENCHMARK(BM_TrotterStep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

// Ground state of the N=3, d=8 chain through the unary physical operator.
void BM_LanczosPhysical(benchmark::State& state) {
  const LinearOperator op = make_physical_operator(chain(3, 3, 4, state.range(0) / 10.0));
  for (auto _ : state) benchmark::DoNotOptimize(lanczos_ground(op).eigenvalues[0]);
}
BENCHMARK(BM_LanczosPhysical)->Arg(2)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ApplyPhysical(benchmark::State& state) {
  const ChainSpec spec = chain(static_cast<int>(state.range(0)), 3, 4, 0.5);
  const LinearOperator op = make_physical_operator(spec);
  const auto in = random_amplitudes(op.dim);
  std::vector<Complex> out(op.dim);
  for (auto _ : state) {
    apply_physical(spec, in, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_ApplyPhysical)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

// One VQE objective: 16-block ansatz on 4 qubits, then <H>.
void BM_AnsatzApply(benchmark::State& state) {
  const Ansatz ansatz = build_ansatz({4, 16, true});
  const std::vector<double> theta(ansatz.parameter_count(), 0.1);
  for (auto _ : state) {
    StateVector v(4);
    ansatz.apply(v, theta);
    benchmark::DoNotOptimize(v.amplitudes().data());
  }
}
BENCHMARK(BM_AnsatzApply)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
