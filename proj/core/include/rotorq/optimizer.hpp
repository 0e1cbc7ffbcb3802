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

#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

namespace rotorq {

using Objective = std::function<double(std::span<const double>)>;
/// Objective with inequality constraints: writes c_k(x) >= 0 into `c`.
using ConstrainedObjective =
    std::function<double(std::span<const double> x, std::span<double> c)>;

struct OptimizerOptions {
  int max_evaluations = 1000;
  /// Initial trust radius (COBYLA) or initial simplex edge (Nelder-Mead).
  double rho_begin = 0.5;
  /// Final trust radius, or simplex size at which Nelder-Mead stops.
  double rho_end = 1e-6;
};

enum class StopReason { converged, max_evaluations, rounding_errors };

struct OptimizerResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  StopReason reason = StopReason::converged;
};

/// Derivative-free minimizer. Implementations are deterministic: the same
/// objective, start point and options give the same evaluation sequence.
class Optimizer {
 public:
  virtual ~Optimizer() = default;
  virtual std::string_view name() const = 0;
  virtual OptimizerResult minimize(const Objective& f, std::vector<double> x0,
                                   const OptimizerOptions& options) const = 0;
};

/// Powell's COBYLA: linear models on a simplex inside a shrinking trust region.
class Cobyla final : public Optimizer {
 public:
  std::string_view name() const override { return "cobyla"; }
  OptimizerResult minimize(const Objective& f, std::vector<double> x0,
                           const OptimizerOptions& options) const override;
};

class NelderMead final : public Optimizer {
 public:
  std::string_view name() const override { return "nelder-mead"; }
  OptimizerResult minimize(const Objective& f, std::vector<double> x0,
                           const OptimizerOptions& options) const override;
};

/// COBYLA with `constraints` inequality constraints.
OptimizerResult cobyla_minimize(const ConstrainedObjective& f, int constraints,
                                std::vector<double> x0, const OptimizerOptions& options);

/// "cobyla" or "nelder-mead"; throws ContractError otherwise.
std::unique_ptr<Optimizer> make_optimizer(std::string_view name);

}  // namespace rotorq
