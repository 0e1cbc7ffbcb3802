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

#include <compare>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "rotorq/state_vector.hpp"

namespace rotorq {

enum class PauliAxis : std::uint8_t { I, X, Y, Z };

/// Tensor product of single-qubit Paulis, stored as X and Z bitmasks laid out
/// like computational-basis indices (qubit 0 in the most significant bit).
/// Y is the Hermitian i*X*Z, so a string acts as
///   P|t> = i^{#Y} (-1)^{popcount(t & z)} |t ^ x>.
class PauliString {
 public:
  static constexpr int kMaxQubits = 62;

  /// Identity on `qubit_count` qubits.
  explicit PauliString(int qubit_count);
  /// Parses an axis string such as "IXYZ"; qubit 0 is the first character.
  static PauliString parse(std::string_view axes);
  static PauliString single(int qubit_count, int qubit, PauliAxis axis);
  static PauliString from_masks(int qubit_count, std::uint64_t x,
                                std::uint64_t z);

  int qubit_count() const noexcept { return qubit_count_; }
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }

  PauliAxis axis(int qubit) const;
  PauliString with_axis(int qubit, PauliAxis axis) const;
  int weight() const noexcept;
  int y_count() const noexcept;
  bool is_identity() const noexcept { return (x_ | z_) == 0; }
  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  /// Lexicographic on axes from qubit 0, with I < X < Y < Z.
  friend std::strong_ordering operator<=>(const PauliString& a,
                                          const PauliString& b);

 private:
  PauliString(int qubit_count, std::uint64_t x, std::uint64_t z)
      : qubit_count_(qubit_count), x_(x), z_(z) {}

  int qubit_count_;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

struct PauliProduct {
  Complex phase;  // one of +-1, +-i
  PauliString product;
};

/// Single-string product a*b. Throws DimensionError on mismatched sizes.
PauliProduct multiply(const PauliString& a, const PauliString& b);

struct PauliTerm {
  PauliString string;
  Complex coefficient;
};

/// Relative coefficient cutoff used by simplify().
inline constexpr double kDedupTolerance = 1e-12;

/// Weighted sum of Pauli strings. Arithmetic appends terms; simplify() merges
/// duplicates, drops negligible coefficients and sorts the strings.
class PauliSum {
 public:
  explicit PauliSum(int qubit_count);
  PauliSum(int qubit_count, std::vector<PauliTerm> terms);

  static PauliSum identity(int qubit_count, Complex coefficient = 1.0);
  static PauliSum from_string(const PauliString& s, Complex coefficient = 1.0);

  int qubit_count() const noexcept { return qubit_count_; }
  std::span<const PauliTerm> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  void add(const PauliString& s, Complex coefficient);
  /// Sum of coefficients attached to `s` (duplicates included).
  Complex coefficient(const PauliString& s) const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scale);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
  friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }
  /// Operator product, simplified.
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  PauliSum adjoint() const;
  /// True when every merged coefficient is real to within `tolerance` relative
  /// to the largest coefficient.
  bool is_hermitian(double tolerance = 1e-12) const;
  int max_weight() const;
  double max_abs_coefficient() const;

 private:
  int qubit_count_;
  std::vector<PauliTerm> terms_;
};

PauliSum simplify(const PauliSum& s, double relative_tolerance = kDedupTolerance);

/// out = s * in, matrix-free. `out` must not alias `in`.
void apply(const PauliSum& s, std::span<const Complex> in, std::span<Complex> out);
StateVector apply(const PauliSum& s, const StateVector& v);

/// <v|s|v> for Hermitian s and normalized v. Throws ContractError when s is
/// not Hermitian or the result carries an imaginary part above 1e-10.
double expectation(const PauliSum& s, const StateVector& v);
/// Same as expectation() without the normalization and Hermiticity checks.
Complex raw_expectation(const PauliSum& s, std::span<const Complex> v);

inline constexpr int kMaxDenseQubits = 12;

/// Sum of Kronecker products. Test oracle; refuses more than 12 qubits.
Eigen::MatrixXcd to_dense(const PauliSum& s);

/// One term per line: `<re> <im> <axes>`, round-trip exact.
void write_text(std::ostream& os, const PauliSum& s);
PauliSum read_text(std::istream& is);

}  // namespace rotorq
