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

#include "rotorq/rotor_model.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "rotorq/errors.hpp"

namespace rotorq {
namespace {

std::size_t int_pow(std::size_t base, int exponent) {
  std::size_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

// Embeds `op` on rotor `site` of an N-rotor product space.
Eigen::MatrixXcd embed_site(const Eigen::MatrixXcd& op, int site, int rotors) {
  const auto d = op.rows();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int s = 0; s < rotors; ++s) {
    const Eigen::MatrixXcd factor =
        s == site ? op : Eigen::MatrixXcd::Identity(d, d).eval();
    out = Eigen::kroneckerProduct(out, factor).eval();
  }
  return out;
}

// d^2 x d^2 block of a pair coupling, rows/cols indexed a*d + b for (i, j).
Eigen::MatrixXcd pair_block(const PositionOps& ops, const PairCoupling& c) {
  using Eigen::kroneckerProduct;
  Eigen::MatrixXcd w = c.xx * kroneckerProduct(ops.x, ops.x).eval();
  w += c.yy * kroneckerProduct(ops.y, ops.y).eval();
  if (c.xy != 0.0) {
    w += c.xy * (kroneckerProduct(ops.x, ops.y) + kroneckerProduct(ops.y, ops.x))
                    .eval();
  }
  return w;
}

}  // namespace

void RotorBasis::validate() const {
  if (l < 0 || n < 0 || d() < 2) {
    throw DimensionError("rotor basis needs l, n >= 0 and d >= 2 (l=" +
                         std::to_string(l) + ", n=" + std::to_string(n) + ")");
  }
}

void ChainSpec::validate() const {
  basis.validate();
  if (rotors < 2) throw DimensionError("a rotor lattice needs at least 2 rotors");
  if (const auto* general = std::get_if<GeneralGeometry>(&geometry)) {
    for (const auto& b : general->bonds) {
      if (b.i < 0 || b.j < 0 || b.i >= rotors || b.j >= rotors || b.i == b.j) {
        throw DimensionError("bond refers to an invalid rotor pair");
      }
      if (!(b.length > 0.0)) throw DimensionError("bond length must be positive");
    }
  }
}

Eigen::MatrixXcd increment_op(const RotorBasis& basis) {
  basis.validate();
  const int d = basis.d();
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(d, d);
  for (int m = 0; m < d; ++m) s((m + 1) % d, m) += 1.0;
  return s;
}

PositionOps position_ops(const RotorBasis& basis) {
  const Eigen::MatrixXcd up = increment_op(basis);
  const Eigen::MatrixXcd down = up.adjoint();
  return {0.5 * (up + down), (up - down) / Complex(0.0, 2.0)};
}

std::vector<PairCoupling> pair_couplings(const ChainSpec& spec) {
  std::vector<PairCoupling> out;
  if (spec.is_chain()) {
    for (int i = 0; i + 1 < spec.rotors; ++i) {
      out.push_back({i, i + 1, -2.0 * spec.g, spec.g, 0.0});
    }
    return out;
  }
  for (const auto& b : std::get<GeneralGeometry>(spec.geometry).bonds) {
    const double scale = b.g0 / (b.length * b.length * b.length);
    const double c1 = std::cos(b.polar), s1 = std::sin(b.polar);
    const double s2sq = std::sin(b.azimuthal) * std::sin(b.azimuthal);
    out.push_back({b.i, b.j, scale * (1.0 - 3.0 * c1 * c1 * s2sq),
                   scale * (1.0 - 3.0 * s1 * s1 * s2sq),
                   -3.0 * scale * c1 * s1 * s2sq});
  }
  return out;
}

MomentumHamiltonian::MomentumHamiltonian(ChainSpec spec)
    : spec_(std::move(spec)) {
  spec_.validate();
  const int d = spec_.basis.d();
  const int rotors = spec_.rotors;
  dim_ = int_pow(d, rotors);
  ops_ = position_ops(spec_.basis);
  couplings_ = pair_couplings(spec_);

  kinetic_.assign(dim_, 0.0);
  for (std::size_t t = 0; t < dim_; ++t) {
    std::size_t rest = t;
    for (int s = 0; s < rotors; ++s) {
      const int m = static_cast<int>(rest % d) - spec_.basis.l;
      kinetic_[t] += m * m;
      rest /= d;
    }
  }

  if (dim_ > kDenseLimit) return;
  Eigen::MatrixXcd k1 = Eigen::MatrixXcd::Zero(d, d);
  for (int m = 0; m < d; ++m) {
    const double p = m - spec_.basis.l;
    k1(m, m) = p * p;
  }
  dense_ = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int s = 0; s < rotors; ++s) dense_ += embed_site(k1, s, rotors);
  for (const auto& c : couplings_) {
    const Eigen::MatrixXcd xi = embed_site(ops_.x, c.i, rotors);
    const Eigen::MatrixXcd yi = embed_site(ops_.y, c.i, rotors);
    const Eigen::MatrixXcd xj = embed_site(ops_.x, c.j, rotors);
    const Eigen::MatrixXcd yj = embed_site(ops_.y, c.j, rotors);
    dense_ += c.xx * (xi * xj) + c.yy * (yi * yj);
    if (c.xy != 0.0) dense_ += c.xy * (xi * yj + xj * yi);
  }
}

const Eigen::MatrixXcd& MomentumHamiltonian::dense() const {
  if (!has_dense()) {
    throw ResourceError("momentum Hamiltonian of dimension " +
                        std::to_string(dim_) + " is not assembled densely");
  }
  return dense_;
}

void MomentumHamiltonian::apply(std::span<const Complex> in,
                                std::span<Complex> out) const {
  if (!has_dense()) {
    apply_lazy(in, out);
    return;
  }
  if (in.size() != dim_ || out.size() != dim_) {
    throw DimensionError("momentum Hamiltonian apply: dimension mismatch");
  }
  Eigen::Map<const Eigen::VectorXcd> vin(in.data(), dim_);
  Eigen::Map<Eigen::VectorXcd> vout(out.data(), dim_);
  vout.noalias() = dense_ * vin;
}

void MomentumHamiltonian::apply_lazy(std::span<const Complex> in,
                                     std::span<Complex> out) const {
  if (in.size() != dim_ || out.size() != dim_) {
    throw DimensionError("momentum Hamiltonian apply: dimension mismatch");
  }
  const int d = spec_.basis.d();
  for (std::size_t t = 0; t < dim_; ++t) out[t] = kinetic_[t] * in[t];
  for (const auto& c : couplings_) {
    const Eigen::MatrixXcd w = pair_block(ops_, c);
    const std::size_t si = int_pow(d, spec_.rotors - 1 - c.i);
    const std::size_t sj = int_pow(d, spec_.rotors - 1 - c.j);
    for (std::size_t t = 0; t < dim_; ++t) {
      const int a = static_cast<int>((t / si) % d);
      const int b = static_cast<int>((t / sj) % d);
      const Complex v = in[t];
      if (v == Complex{}) continue;
      const std::size_t base = t - a * si - b * sj;
      const int col = a * d + b;
      for (int a2 = 0; a2 < d; ++a2) {
        for (int b2 = 0; b2 < d; ++b2) {
          const Complex h = w(a2 * d + b2, col);
          if (h != Complex{}) out[base + a2 * si + b2 * sj] += h * v;
        }
      }
    }
  }
}

MomentumHamiltonian build_momentum_hamiltonian(const ChainSpec& spec) {
  return MomentumHamiltonian(spec);
}

std::pair<double, double> classical_energy_bounds(const ChainSpec& spec) {
  if (!spec.is_chain()) {
    throw UnsupportedBasisError(
        "classical energy bounds are defined for chains only");
  }
  spec.validate();
  const double bond = 2.0 * (spec.rotors - 1) * std::abs(spec.g);
  const double n = spec.basis.n;
  return {-bond, spec.rotors * n * n + bond};
}

Eigen::VectorXd parity_diagonal(const ChainSpec& spec) {
  spec.validate();
  const int d = spec.basis.d();
  const std::size_t dim = int_pow(d, spec.rotors);
  Eigen::VectorXd p(dim);
  for (std::size_t t = 0; t < dim; ++t) {
    std::size_t rest = t;
    int sum = 0;
    for (int s = 0; s < spec.rotors; ++s) {
      sum += static_cast<int>(rest % d);
      rest /= d;
    }
    p[t] = (sum & 1) ? -1.0 : 1.0;
  }
  return p;
}

std::size_t config_index(const RotorBasis& basis, std::span<const int> config) {
  const int d = basis.d();
  std::size_t index = 0;
  for (int m : config) {
    if (m < 0 || m >= d) throw DimensionError("rotor basis index out of range");
    index = index * d + m;
  }
  return index;
}

std::vector<int> index_config(const RotorBasis& basis, int rotors,
                              std::size_t index) {
  const int d = basis.d();
  std::vector<int> config(rotors);
  for (int s = rotors - 1; s >= 0; --s) {
    config[s] = static_cast<int>(index % d);
    index /= d;
  }
  if (index != 0) throw DimensionError("configuration index out of range");
  return config;
}

}  // namespace rotorq
