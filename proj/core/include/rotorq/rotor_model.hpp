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

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "rotorq/state_vector.hpp"

namespace rotorq {

/// Truncated single-rotor momentum basis -l <= m <= n. Basis index i stores
/// momentum i - l, so index 0 is the lowest momentum.
struct RotorBasis {
  int l = 0;
  int n = 0;

  int d() const noexcept { return n + l + 1; }
  /// Throws DimensionError unless l, n >= 0 and d >= 2.
  void validate() const;
};

/// Dipole bond of a general lattice. Angles are in radians.
struct Bond {
  int i = 0;
  int j = 0;
  double length = 1.0;
  double polar = 0.0;
  double azimuthal = 0.0;
  double g0 = 1.0;
};

struct ChainGeometry {};
struct GeneralGeometry {
  std::vector<Bond> bonds;
};

/// Rotor lattice. For a chain the coupling is `g`; a general lattice takes its
/// couplings from the bonds (g0 / R^3) and ignores `g`.
struct ChainSpec {
  int rotors = 2;
  double g = 0.0;
  RotorBasis basis;
  std::variant<ChainGeometry, GeneralGeometry> geometry = ChainGeometry{};

  bool is_chain() const noexcept {
    return std::holds_alternative<ChainGeometry>(geometry);
  }
  void validate() const;
};

/// Cyclic increment S+ |i> = |i+1 mod d>.
Eigen::MatrixXcd increment_op(const RotorBasis& basis);

struct PositionOps {
  Eigen::MatrixXcd x;
  Eigen::MatrixXcd y;
};

/// x = (S+ + S-)/2 and y = (S+ - S-)/(2i) on one rotor.
PositionOps position_ops(const RotorBasis& basis);

/// Two-site coupling c_xx x_i x_j + c_yy y_i y_j + c_xy (x_i y_j + x_j y_i).
struct PairCoupling {
  int i = 0;
  int j = 0;
  double xx = 0.0;
  double yy = 0.0;
  double xy = 0.0;
};

/// Resolves a spec into its list of pair couplings (chain: yy = g, xx = -2g).
std::vector<PairCoupling> pair_couplings(const ChainSpec& spec);

/// H = sum_i K_i + sum_bonds V_ij in the product momentum basis, indexed
/// lexicographically with rotor 0 as the most significant digit.
class MomentumHamiltonian {
 public:
  /// Largest dimension that is assembled as a dense matrix.
  static constexpr std::size_t kDenseLimit = 4096;

  explicit MomentumHamiltonian(ChainSpec spec);

  const ChainSpec& spec() const noexcept { return spec_; }
  std::size_t dimension() const noexcept { return dim_; }
  bool has_dense() const noexcept { return dense_.size() > 0; }
  /// Throws ResourceError when the dimension exceeds kDenseLimit.
  const Eigen::MatrixXcd& dense() const;
  /// Diagonal kinetic part, sum_i (m_i - l)^2.
  std::span<const double> kinetic_diagonal() const noexcept { return kinetic_; }

  /// out = H in; uses the dense matrix when present, site blocks otherwise.
  void apply(std::span<const Complex> in, std::span<Complex> out) const;
  /// Matrix-free path regardless of size; exposed so both paths are testable.
  void apply_lazy(std::span<const Complex> in, std::span<Complex> out) const;

 private:
  ChainSpec spec_;
  std::size_t dim_;
  PositionOps ops_;
  std::vector<PairCoupling> couplings_;
  std::vector<double> kinetic_;
  Eigen::MatrixXcd dense_;
};

MomentumHamiltonian build_momentum_hamiltonian(const ChainSpec& spec);

/// (E_min, E_max) = (-2(N-1)g, N n^2 + 2(N-1)g) for a chain with g >= 0.
/// Throws UnsupportedBasisError for general geometries.
std::pair<double, double> classical_energy_bounds(const ChainSpec& spec);

/// Diagonal of the global pi-rotation, (-1)^(sum of basis indices).
Eigen::VectorXd parity_diagonal(const ChainSpec& spec);

/// Lexicographic index of a configuration of basis indices and its inverse.
std::size_t config_index(const RotorBasis& basis, std::span<const int> config);
std::vector<int> index_config(const RotorBasis& basis, int rotors,
                              std::size_t index);

}  // namespace rotorq
