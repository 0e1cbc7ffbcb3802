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

#include "rotorq/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "rotorq/errors.hpp"

namespace rotorq {
namespace {

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::uint64_t full_mask(int qubit_count) {
  return qubit_count >= 64 ? ~std::uint64_t{0}
                           : (std::uint64_t{1} << qubit_count) - 1;
}

// I=0 < X=1 < Y=2 < Z=3 from the (x, z) bit pair.
int axis_rank(bool x, bool z) { return z ? (x ? 2 : 3) : (x ? 1 : 0); }

void check_same_size(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": qubit counts differ (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

// i^{#Y} carried by the string itself.
Complex y_phase(const PauliString& s) { return kIPowers[s.y_count() & 3]; }

}  // namespace

PauliString::PauliString(int qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count < 1 || qubit_count > kMaxQubits) {
    throw DimensionError("Pauli string qubit count out of range: " +
                         std::to_string(qubit_count));
  }
}

PauliString PauliString::from_masks(int qubit_count, std::uint64_t x,
                                    std::uint64_t z) {
  PauliString s(qubit_count);
  if (((x | z) & ~full_mask(qubit_count)) != 0) {
    throw DimensionError("Pauli mask has bits beyond qubit_count");
  }
  s.x_ = x;
  s.z_ = z;
  return s;
}

PauliString PauliString::parse(std::string_view axes) {
  PauliString s(static_cast<int>(axes.size()));
  for (int q = 0; q < s.qubit_count_; ++q) {
    const std::uint64_t bit = qubit_bit(s.qubit_count_, q);
    switch (axes[q]) {
      case 'I': break;
      case 'X': s.x_ |= bit; break;
      case 'Y': s.x_ |= bit; s.z_ |= bit; break;
      case 'Z': s.z_ |= bit; break;
      default:
        throw ContractError("invalid Pauli axis '" + std::string(1, axes[q]) +
                            "' in \"" + std::string(axes) + "\"");
    }
  }
  return s;
}

PauliString PauliString::single(int qubit_count, int qubit, PauliAxis axis) {
  return PauliString(qubit_count).with_axis(qubit, axis);
}

PauliAxis PauliString::axis(int qubit) const {
  const std::uint64_t bit = qubit_bit(qubit_count_, qubit);
  const bool x = x_ & bit, z = z_ & bit;
  if (x && z) return PauliAxis::Y;
  if (x) return PauliAxis::X;
  if (z) return PauliAxis::Z;
  return PauliAxis::I;
}

PauliString PauliString::with_axis(int qubit, PauliAxis axis) const {
  if (qubit < 0 || qubit >= qubit_count_) {
    throw DimensionError("qubit index out of range: " + std::to_string(qubit));
  }
  PauliString s = *this;
  const std::uint64_t bit = qubit_bit(qubit_count_, qubit);
  s.x_ &= ~bit;
  s.z_ &= ~bit;
  if (axis == PauliAxis::X || axis == PauliAxis::Y) s.x_ |= bit;
  if (axis == PauliAxis::Z || axis == PauliAxis::Y) s.z_ |= bit;
  return s;
}

int PauliString::weight() const noexcept { return std::popcount(x_ | z_); }

int PauliString::y_count() const noexcept { return std::popcount(x_ & z_); }

std::string PauliString::to_string() const {
  std::string out(qubit_count_, 'I');
  for (int q = 0; q < qubit_count_; ++q) {
    out[q] = "IXYZ"[static_cast<int>(axis(q))];
  }
  return out;
}

std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
  if (auto c = a.qubit_count_ <=> b.qubit_count_; c != 0) return c;
  const std::uint64_t diff = (a.x_ ^ b.x_) | (a.z_ ^ b.z_);
  if (diff == 0) return std::strong_ordering::equal;
  const std::uint64_t bit = std::uint64_t{1} << (63 - std::countl_zero(diff));
  return axis_rank(a.x_ & bit, a.z_ & bit) <=> axis_rank(b.x_ & bit, b.z_ & bit);
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  check_same_size(a.qubit_count(), b.qubit_count(), "multiply");
  // With P = i^{|x&z|} X^x Z^z and Z^z X^x = (-1)^{|z&x|} X^x Z^z.
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  const int exponent = std::popcount(a.x_mask() & a.z_mask()) +
                       std::popcount(b.x_mask() & b.z_mask()) +
                       2 * std::popcount(a.z_mask() & b.x_mask()) -
                       std::popcount(x & z);
  return {kIPowers[((exponent % 4) + 4) % 4],
          PauliString::from_masks(a.qubit_count(), x, z)};
}

PauliSum::PauliSum(int qubit_count) : qubit_count_(qubit_count) {
  PauliString check(qubit_count);
  (void)check;
}

PauliSum::PauliSum(int qubit_count, std::vector<PauliTerm> terms)
    : PauliSum(qubit_count) {
  for (const auto& t : terms) {
    check_same_size(qubit_count, t.string.qubit_count(), "PauliSum");
  }
  terms_ = std::move(terms);
}

PauliSum PauliSum::identity(int qubit_count, Complex coefficient) {
  PauliSum s(qubit_count);
  s.add(PauliString(qubit_count), coefficient);
  return s;
}

PauliSum PauliSum::from_string(const PauliString& p, Complex coefficient) {
  PauliSum s(p.qubit_count());
  s.add(p, coefficient);
  return s;
}

void PauliSum::add(const PauliString& s, Complex coefficient) {
  check_same_size(qubit_count_, s.qubit_count(), "PauliSum::add");
  terms_.push_back({s, coefficient});
}

Complex PauliSum::coefficient(const PauliString& s) const {
  Complex c{};
  for (const auto& t : terms_) {
    if (t.string == s) c += t.coefficient;
  }
  return c;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  check_same_size(qubit_count_, other.qubit_count_, "PauliSum +");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  check_same_size(qubit_count_, other.qubit_count_, "PauliSum -");
  for (const auto& t : other.terms_) terms_.push_back({t.string, -t.coefficient});
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  for (auto& t : terms_) t.coefficient *= scale;
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  check_same_size(a.qubit_count_, b.qubit_count_, "PauliSum *");
  PauliSum out(a.qubit_count_);
  out.terms_.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      auto [phase, product] = multiply(ta.string, tb.string);
      out.terms_.push_back({product, phase * ta.coefficient * tb.coefficient});
    }
  }
  return simplify(out);
}

PauliSum PauliSum::adjoint() const {
  PauliSum out = *this;
  for (auto& t : out.terms_) t.coefficient = std::conj(t.coefficient);
  return out;
}

bool PauliSum::is_hermitian(double tolerance) const {
  const PauliSum merged = simplify(*this, 0.0);
  const double scale = std::max(1.0, merged.max_abs_coefficient());
  return std::all_of(merged.terms_.begin(), merged.terms_.end(),
                     [&](const PauliTerm& t) {
                       return std::abs(t.coefficient.imag()) <= tolerance * scale;
                     });
}

int PauliSum::max_weight() const {
  int w = 0;
  for (const auto& t : terms_) w = std::max(w, t.string.weight());
  return w;
}

double PauliSum::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coefficient));
  return m;
}

PauliSum simplify(const PauliSum& s, double relative_tolerance) {
  std::vector<PauliTerm> sorted(s.terms().begin(), s.terms().end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const PauliTerm& a, const PauliTerm& b) {
                     return a.string < b.string;
                   });
  std::vector<PauliTerm> merged;
  merged.reserve(sorted.size());
  for (const auto& t : sorted) {
    if (!merged.empty() && merged.back().string == t.string) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(t);
    }
  }
  double largest = 0.0;
  for (const auto& t : merged) largest = std::max(largest, std::abs(t.coefficient));
  const double cutoff = relative_tolerance * largest;
  std::erase_if(merged, [&](const PauliTerm& t) {
    return std::abs(t.coefficient) <= cutoff;
  });
  return PauliSum(s.qubit_count(), std::move(merged));
}

void apply(const PauliSum& s, std::span<const Complex> in, std::span<Complex> out) {
  const std::size_t dim = std::size_t{1} << s.qubit_count();
  if (in.size() != dim || out.size() != dim) {
    throw DimensionError("apply: vector dimension does not match 2^qubit_count");
  }
  std::fill(out.begin(), out.end(), Complex{});
  for (const auto& term : s.terms()) {
    const std::uint64_t x = term.string.x_mask();
    const std::uint64_t z = term.string.z_mask();
    const Complex c = term.coefficient * y_phase(term.string);
    for (std::uint64_t t = 0; t < dim; ++t) {
      const Complex v = (std::popcount(t & z) & 1) ? -in[t] : in[t];
      out[t ^ x] += c * v;
    }
  }
}

StateVector apply(const PauliSum& s, const StateVector& v) {
  if (s.qubit_count() != v.qubit_count()) {
    throw DimensionError("apply: operator and state qubit counts differ");
  }
  StateVector out(v.qubit_count());
  apply(s, v.amplitudes(), out.amplitudes());
  return out;
}

Complex raw_expectation(const PauliSum& s, std::span<const Complex> v) {
  const std::size_t dim = std::size_t{1} << s.qubit_count();
  if (v.size() != dim) {
    throw DimensionError("expectation: vector dimension does not match");
  }
  Complex total{};
  for (const auto& term : s.terms()) {
    const std::uint64_t x = term.string.x_mask();
    const std::uint64_t z = term.string.z_mask();
    Complex acc{};
    for (std::uint64_t t = 0; t < dim; ++t) {
      const Complex p = std::conj(v[t ^ x]) * v[t];
      acc += (std::popcount(t & z) & 1) ? -p : p;
    }
    total += term.coefficient * y_phase(term.string) * acc;
  }
  return total;
}

double expectation(const PauliSum& s, const StateVector& v) {
  if (s.qubit_count() != v.qubit_count()) {
    throw DimensionError("expectation: operator and state qubit counts differ");
  }
  if (!s.is_hermitian()) {
    throw ContractError("expectation requires a Hermitian Pauli sum");
  }
  if (std::abs(v.norm() - 1.0) > 1e-8) {
    throw ContractError("expectation requires a normalized state");
  }
  const Complex e = raw_expectation(s, v.amplitudes());
  double scale = 1.0;
  for (const auto& t : s.terms()) scale += std::abs(t.coefficient);
  if (std::abs(e.imag()) > 1e-10 * scale) {
    throw ContractError("expectation has a non-negligible imaginary part");
  }
  return e.real();
}

Eigen::MatrixXcd to_dense(const PauliSum& s) {
  if (s.qubit_count() > kMaxDenseQubits) {
    throw ResourceError("to_dense refuses more than " +
                        std::to_string(kMaxDenseQubits) + " qubits");
  }
  const std::uint64_t dim = std::uint64_t{1} << s.qubit_count();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : s.terms()) {
    const std::uint64_t x = term.string.x_mask();
    const std::uint64_t z = term.string.z_mask();
    const Complex c = term.coefficient * y_phase(term.string);
    for (std::uint64_t t = 0; t < dim; ++t) {
      m(t ^ x, t) += (std::popcount(t & z) & 1) ? -c : c;
    }
  }
  return m;
}

void write_text(std::ostream& os, const PauliSum& s) {
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << std::setprecision(17);
  for (const auto& t : s.terms()) {
    os << t.coefficient.real() << ' ' << t.coefficient.imag() << ' '
       << t.string.to_string() << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

PauliSum read_text(std::istream& is) {
  std::vector<PauliTerm> terms;
  int qubits = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double re = 0.0, im = 0.0;
    std::string axes;
    if (!(ls >> re >> im >> axes)) {
      throw ContractError("malformed Pauli line " + std::to_string(line_no));
    }
    auto p = PauliString::parse(axes);
    if (qubits == 0) qubits = p.qubit_count();
    check_same_size(qubits, p.qubit_count(), "read_text");
    terms.push_back({p, {re, im}});
  }
  if (qubits == 0) throw ContractError("empty Pauli text");
  return PauliSum(qubits, std::move(terms));
}

}  // namespace rotorq
