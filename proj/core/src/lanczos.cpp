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

#include "rotorq/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "rotorq/errors.hpp"
#include "rotorq/unary_encoding.hpp"

namespace rotorq {
namespace {

Eigen::VectorXcd apply_op(const LinearOperator& op, const Eigen::VectorXcd& v) {
  Eigen::VectorXcd out(op.dim);
  op.apply({v.data(), op.dim}, {out.data(), op.dim});
  return out;
}

// Two passes of classical Gram-Schmidt against the first `count` columns.
void orthogonalize(const Eigen::MatrixXcd& basis, int count, Eigen::VectorXcd& v) {
  for (int pass = 0; pass < 2; ++pass) {
    const auto q = basis.leftCols(count);
    v -= q * (q.adjoint() * v);
  }
}

}  // namespace

LinearOperator make_operator(const PauliSum& h) {
  return {std::size_t{1} << h.qubit_count(),
          [h](std::span<const Complex> in, std::span<Complex> out) {
            apply(h, in, out);
          }};
}

LinearOperator make_operator(const MomentumHamiltonian& h) {
  return {h.dimension(), [&h](std::span<const Complex> in, std::span<Complex> out) {
            h.apply(in, out);
          }};
}

LinearOperator make_physical_operator(const ChainSpec& spec) {
  spec.validate();
  std::size_t dim = 1;
  for (int j = 0; j < spec.rotors; ++j) dim *= spec.basis.d();
  return {dim, [spec](std::span<const Complex> in, std::span<Complex> out) {
            apply_physical(spec, in, out);
          }};
}

Eigen::VectorXcd random_unit_vector(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = Complex(normal(rng), normal(rng));
  return v.normalized();
}

namespace {

// One Krylov sequence with full reorthogonalization. It sees a single
// direction per degenerate eigenspace.
EigenResult krylov_lowest(const LinearOperator& op, const LanczosOptions& options) {
  const auto dim = static_cast<Eigen::Index>(op.dim);
  const int wanted = options.eigenvalues;
  if (wanted < 1 || static_cast<Eigen::Index>(wanted) > dim) {
    throw ContractError("lanczos: need 1 <= eigenvalues <= dim");
  }
  if (options.max_iterations < 1 || !(options.tolerance > 0.0)) {
    throw ContractError("lanczos: invalid iteration limit or tolerance");
  }
  const int capacity =
      static_cast<int>(std::min<Eigen::Index>(dim, options.max_iterations));
  Eigen::MatrixXcd basis(dim, capacity);
  std::vector<double> alpha, beta;  // beta[i] couples columns i and i+1
  std::uint64_t restart_seed = options.seed;
  double best_residual = std::numeric_limits<double>::infinity();

  Eigen::VectorXcd v = random_unit_vector(op.dim, restart_seed);
  int m = 0;
  while (m < capacity) {
    basis.col(m) = v;
    Eigen::VectorXcd w = apply_op(op, v);
    const double a = v.dot(w).real();
    alpha.push_back(a);
    orthogonalize(basis, m + 1, w);
    ++m;
    const double b = w.norm();

    // Ritz values of the current tridiagonal. A zero coupling means the Krylov
    // space is invariant; the block is still exact.
    const bool invariant = b < 1e-12 * std::max(1.0, std::abs(a));
    const bool check = invariant || m == capacity || m % 5 == 0 || m < 2 * wanted;
    if (check && m >= wanted) {
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
      Eigen::VectorXd sub = m > 1 ? Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1)
                                  : Eigen::VectorXd();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const double coupling = invariant ? 0.0 : b;
      bool converged = true;
      for (int i = 0; i < wanted; ++i) {
        converged &= coupling * std::abs(tri.eigenvectors()(m - 1, i)) < options.tolerance;
      }
      if (converged) {
        EigenResult result;
        result.iterations = m;
        double worst = 0.0;
        for (int i = 0; i < wanted; ++i) {
          Eigen::VectorXcd x = basis.leftCols(m) * tri.eigenvectors().col(i).cast<Complex>();
          x.normalize();
          const double lambda = tri.eigenvalues()[i];
          const double res = (apply_op(op, x) - lambda * x).norm();
          worst = std::max(worst, res);
          result.eigenvalues.push_back(lambda);
          result.vectors.push_back(std::move(x));
          result.residuals.push_back(res);
        }
        best_residual = std::min(best_residual, worst);
        if (worst < options.tolerance) return result;
      }
    }
    if (m == capacity) break;
    if (invariant) {
      // Continue in the orthogonal complement; picks up degenerate copies.
      beta.push_back(0.0);
      v = random_unit_vector(op.dim, ++restart_seed);
      orthogonalize(basis, m, v);
      const double nv = v.norm();
      if (nv < 1e-12) break;
      v /= nv;
    } else {
      beta.push_back(b);
      v = w / b;
    }
  }
  throw ConvergenceError("lanczos did not converge in " + std::to_string(m) +
                             " iterations",
                         best_residual);
}

}  // namespace

EigenResult lanczos_ground(const LinearOperator& op, const LanczosOptions& options) {
  EigenResult result = krylov_lowest(op, options);
  const int wanted = options.eigenvalues;
  if (wanted < 2) return result;

  // Look for levels the Krylov sequence missed (degenerate copies) by lifting
  // the converged vectors above the spectrum and searching again. A hit
  // replaces the current highest level.
  LanczosOptions single = options;
  single.eigenvalues = 1;
  for (int round = 0; round < wanted; ++round) {
    const double lift = std::abs(result.eigenvalues.back() - result.eigenvalues.front()) +
                        2.0 * std::max(1.0, std::abs(result.eigenvalues.back()));
    const auto found = result.vectors;
    LinearOperator deflated{op.dim, [&](std::span<const Complex> in, std::span<Complex> out) {
                              op.apply(in, out);
                              const Eigen::Map<const Eigen::VectorXcd> x(in.data(), in.size());
                              Eigen::Map<Eigen::VectorXcd> y(out.data(), out.size());
                              for (const auto& u : found) y += lift * u * u.dot(x);
                            }};
    single.seed = options.seed + 0x9e37 + static_cast<std::uint64_t>(round);
    EigenResult extra = krylov_lowest(deflated, single);
    if (!(extra.eigenvalues[0] < result.eigenvalues.back() - 10.0 * options.tolerance)) {
      break;
    }
    Eigen::VectorXcd x = extra.vectors[0];
    for (const auto& u : found) x -= u * u.dot(x);
    x.normalize();
    const double lambda = x.dot(apply_op(op, x)).real();
    result.eigenvalues.back() = lambda;
    result.vectors.back() = std::move(x);
    result.residuals.back() = (apply_op(op, result.vectors.back()) - lambda * result.vectors.back()).norm();
    result.iterations += extra.iterations;
    std::vector<int> order(wanted);
    for (int i = 0; i < wanted; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return result.eigenvalues[a] < result.eigenvalues[b];
    });
    EigenResult sorted;
    sorted.iterations = result.iterations;
    for (int i : order) {
      sorted.eigenvalues.push_back(result.eigenvalues[i]);
      sorted.vectors.push_back(result.vectors[i]);
      sorted.residuals.push_back(result.residuals[i]);
    }
    result = std::move(sorted);
  }
  return result;
}

double hermiticity_defect(const LinearOperator& op, int trials, std::uint64_t seed) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Eigen::VectorXcd u = random_unit_vector(op.dim, seed + 2 * t);
    const Eigen::VectorXcd v = random_unit_vector(op.dim, seed + 2 * t + 1);
    const Complex lhs = u.dot(apply_op(op, v));
    const Complex rhs = apply_op(op, u).dot(v);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace rotorq
