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

#include "rotorq/unary_encoding.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "rotorq/binary_encoding.hpp"
#include "rotorq/errors.hpp"

namespace rotorq {
namespace {

void check_rotor(int rotor, int rotors) {
  if (rotors < 1 || rotor < 0 || rotor >= rotors) {
    throw DimensionError("rotor index " + std::to_string(rotor) +
                         " out of range for " + std::to_string(rotors) + " rotors");
  }
}

PauliSum position_x(const RotorBasis& basis, int rotor, int rotors) {
  PauliSum up = encode_increment_projected(basis, rotor, rotors);
  return simplify((up + up.adjoint()) * 0.5);
}

PauliSum position_y(const RotorBasis& basis, int rotor, int rotors) {
  PauliSum up = encode_increment_projected(basis, rotor, rotors);
  return simplify((up - up.adjoint()) * Complex(0.0, -0.5));
}

}  // namespace

int unary_qubit(const RotorBasis& basis, int rotor, int level) {
  const int d = basis.d();
  if (level < 0 || level >= d) throw DimensionError("unary level out of range");
  return rotor * d + (d - 1 - level);
}

PhysicalIndexer::PhysicalIndexer(RotorBasis basis, int rotors)
    : basis_(basis), rotors_(rotors), size_(1) {
  basis_.validate();
  if (rotors < 1 || rotors * basis_.d() > PauliString::kMaxQubits) {
    throw DimensionError("unary register out of range");
  }
  for (int j = 0; j < rotors; ++j) size_ *= basis_.d();
}

std::vector<int> PhysicalIndexer::config(std::size_t lex) const {
  if (lex >= size_) throw DimensionError("physical index out of range");
  return index_config(basis_, rotors_, lex);
}

std::size_t PhysicalIndexer::lex(std::span<const int> config) const {
  if (static_cast<int>(config.size()) != rotors_) {
    throw DimensionError("configuration length does not match rotor count");
  }
  return config_index(basis_, config);
}

std::uint64_t PhysicalIndexer::embed(std::span<const int> config) const {
  lex(config);  // validates
  const int d = basis_.d();
  std::uint64_t t = 0;
  for (int j = 0; j < rotors_; ++j) {
    t |= std::uint64_t{1} << (config[j] + (rotors_ - 1 - j) * d);
  }
  return t;
}

std::uint64_t PhysicalIndexer::embed_lex(std::size_t lex) const {
  return embed(config(lex));
}

std::optional<std::size_t> PhysicalIndexer::lex_of(std::uint64_t t) const {
  const int d = basis_.d();
  const std::uint64_t block = (std::uint64_t{1} << d) - 1;
  std::size_t lex = 0;
  for (int j = 0; j < rotors_; ++j) {
    const std::uint64_t bits = (t >> ((rotors_ - 1 - j) * d)) & block;
    if (std::popcount(bits) != 1) return std::nullopt;
    lex = lex * d + static_cast<std::size_t>(std::countr_zero(bits));
  }
  if (rotors_ * d < 64 && (t >> (rotors_ * d)) != 0) return std::nullopt;
  return lex;
}

PauliSum encode_kinetic_projected(const RotorBasis& basis, int rotor, int rotors) {
  basis.validate();
  check_rotor(rotor, rotors);
  const int d = basis.d();
  const int q = rotors * d;
  PauliSum out(q);
  double half_sum = 0.0;
  for (int m = 0; m < d; ++m) {
    const double p = m - basis.l;
    if (p == 0.0) continue;
    out.add(PauliString::single(q, unary_qubit(basis, rotor, m), PauliAxis::Z),
            -0.5 * p * p);
    half_sum += 0.5 * p * p;
  }
  out.add(PauliString(q), half_sum);
  return simplify(out);
}

PauliSum encode_increment_projected(const RotorBasis& basis, int rotor,
                                    int rotors) {
  basis.validate();
  check_rotor(rotor, rotors);
  const int d = basis.d();
  const int q = rotors * d;
  PauliSum out(q);
  for (int m = 0; m < d; ++m) {
    out += sigma_plus(q, unary_qubit(basis, rotor, (m + 1) % d)) *
           sigma_minus(q, unary_qubit(basis, rotor, m));
  }
  return simplify(out);
}

PauliSum encode_interaction_projected(const RotorBasis& basis, int rotors, int i,
                                      int j, InteractionKind kind) {
  check_rotor(i, rotors);
  check_rotor(j, rotors);
  if (i == j) throw DimensionError("interaction needs two distinct rotors");
  switch (kind) {
    case InteractionKind::xx:
      return position_x(basis, i, rotors) * position_x(basis, j, rotors);
    case InteractionKind::yy:
      return position_y(basis, i, rotors) * position_y(basis, j, rotors);
    case InteractionKind::xy_sym:
      return simplify(position_x(basis, i, rotors) * position_y(basis, j, rotors) +
                      position_x(basis, j, rotors) * position_y(basis, i, rotors));
  }
  throw ContractError("unknown interaction kind");
}

PauliSum encode_chain_hamiltonian_unary(const ChainSpec& spec) {
  spec.validate();
  const int q = spec.rotors * spec.basis.d();
  PauliSum h(q);
  for (int j = 0; j < spec.rotors; ++j) {
    h += encode_kinetic_projected(spec.basis, j, spec.rotors);
  }
  for (const auto& c : pair_couplings(spec)) {
    using K = InteractionKind;
    if (c.xx != 0.0) {
      h += encode_interaction_projected(spec.basis, spec.rotors, c.i, c.j, K::xx) * c.xx;
    }
    if (c.yy != 0.0) {
      h += encode_interaction_projected(spec.basis, spec.rotors, c.i, c.j, K::yy) * c.yy;
    }
    if (c.xy != 0.0) {
      h += encode_interaction_projected(spec.basis, spec.rotors, c.i, c.j,
                                        K::xy_sym) * c.xy;
    }
  }
  return simplify(h);
}

void apply_physical(const ChainSpec& spec, std::span<const Complex> in,
                    std::span<Complex> out) {
  spec.validate();
  const int d = spec.basis.d();
  const int l = spec.basis.l;
  const int rotors = spec.rotors;
  std::vector<std::size_t> stride(rotors);
  std::size_t dim = 1;
  for (int j = rotors - 1; j >= 0; --j) {
    stride[j] = dim;
    dim *= d;
  }
  if (in.size() != dim || out.size() != dim) {
    throw DimensionError("apply_physical: vector length must be d^N");
  }

  // Each pair coupling in ladder form: S+S+, S-S-, and the mixed S+S-, S-S+.
  struct Ladder {
    std::size_t si, sj;
    int i, j;
    Complex pp, mm, mixed;
  };
  std::vector<Ladder> ladders;
  for (const auto& c : pair_couplings(spec)) {
    const double same = 0.25 * (c.xx - c.yy);
    ladders.push_back({stride[c.i], stride[c.j], c.i, c.j,
                       Complex(same, -0.5 * c.xy), Complex(same, 0.5 * c.xy),
                       Complex(0.25 * (c.xx + c.yy), 0.0)});
  }

  for (std::size_t t = 0; t < dim; ++t) {
    double kinetic = 0.0;
    for (int j = 0; j < rotors; ++j) {
      const int p = static_cast<int>((t / stride[j]) % d) - l;
      kinetic += p * p;
    }
    Complex acc = kinetic * in[t];
    for (const auto& b : ladders) {
      const int a = static_cast<int>((t / b.si) % d);
      const int c = static_cast<int>((t / b.sj) % d);
      const std::size_t base = t - a * b.si - c * b.sj;
      const int ap = (a + 1) % d, am = (a + d - 1) % d;
      const int cp = (c + 1) % d, cm = (c + d - 1) % d;
      auto at = [&](int x, int y) { return in[base + x * b.si + y * b.sj]; };
      // (S+_i S+_j v)_t picks up the amplitude one step down on both rotors.
      acc += b.pp * at(am, cm) + b.mm * at(ap, cp) +
             b.mixed * (at(am, cp) + at(ap, cm));
    }
    out[t] = acc;
  }
}

double leakage(const PhysicalIndexer& indexer, const StateVector& v) {
  if (v.qubit_count() != indexer.qubit_count()) {
    throw DimensionError("leakage: state does not match the unary register");
  }
  double physical = 0.0;
  for (std::size_t lex = 0; lex < indexer.size(); ++lex) {
    physical += std::norm(v[indexer.embed_lex(lex)]);
  }
  return std::clamp(1.0 - physical, 0.0, 1.0);
}

}  // namespace rotorq
