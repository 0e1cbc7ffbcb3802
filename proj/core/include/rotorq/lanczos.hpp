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
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rotorq/pauli.hpp"
#include "rotorq/rotor_model.hpp"
#include "rotorq/state_vector.hpp"

namespace rotorq {

/// Hermitian linear map given only by its action. `apply` writes out = A in;
/// the spans never alias.
struct LinearOperator {
  std::size_t dim = 0;
  std::function<void(std::span<const Complex>, std::span<Complex>)> apply;
};

LinearOperator make_operator(const PauliSum& h);
/// Captures `h` by reference; it must outlive the operator.
LinearOperator make_operator(const MomentumHamiltonian& h);
/// Unary physical-subspace action of apply_physical.
LinearOperator make_physical_operator(const ChainSpec& spec);

struct LanczosOptions {
  int eigenvalues = 1;
  double tolerance = 1e-10;
  int max_iterations = 500;
  std::uint64_t seed = 0x5eed;
};

struct EigenResult {
  std::vector<double> eigenvalues;        // ascending
  std::vector<Eigen::VectorXcd> vectors;  // orthonormal
  std::vector<double> residuals;          // ||A v - lambda v||
  int iterations = 0;
};

/// Lowest eigenpairs by Lanczos with full reorthogonalization. Throws
/// ConvergenceError (carrying the best residual) if max_iterations is reached.
EigenResult lanczos_ground(const LinearOperator& op, const LanczosOptions& options = {});

/// Largest |<u, A v> - <A u, v>| over `trials` random unit pairs.
double hermiticity_defect(const LinearOperator& op, int trials, std::uint64_t seed);

/// Seeded complex Gaussian vector of unit norm.
Eigen::VectorXcd random_unit_vector(std::size_t dim, std::uint64_t seed);

}  // namespace rotorq
