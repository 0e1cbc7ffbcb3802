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

#include "rotorq/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rotorq/errors.hpp"

namespace rotorq {

OptimizerResult NelderMead::minimize(const Objective& f, std::vector<double> x0,
                                     const OptimizerOptions& options) const {
  if (x0.empty()) throw ContractError("optimizer needs at least one variable");
  if (!(options.rho_begin > 0.0) || !(options.rho_end > 0.0)) {
    throw ContractError("optimizer needs positive rho_begin and rho_end");
  }
  const std::size_t n = x0.size();
  int evaluations = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evaluations;
    return f(x);
  };
  auto budget_left = [&] { return evaluations < options.max_evaluations; };

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.rho_begin;
  std::vector<double> values;
  for (const auto& v : simplex) {
    if (!budget_left()) break;
    values.push_back(eval(v));
  }
  if (values.size() < simplex.size()) {
    const auto best = std::min_element(values.begin(), values.end()) - values.begin();
    return {simplex[best], values[best], evaluations, StopReason::max_evaluations};
  }

  std::vector<std::size_t> order(n + 1);
  StopReason reason = StopReason::max_evaluations;
  while (budget_left()) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back(),
                      second = order[n - 1];

    double diameter = 0.0;
    for (const auto& v : simplex) {
      for (std::size_t i = 0; i < n; ++i) {
        diameter = std::max(diameter, std::abs(v[i] - simplex[best][i]));
      }
    }
    if (diameter <= options.rho_end) {
      reason = StopReason::converged;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t j : order) {
      if (j == worst) continue;
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[j][i] / n;
    }
    auto along = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = centroid[i] + t * (simplex[worst][i] - centroid[i]);
      }
      return p;
    };

    auto reflected = along(-1.0);
    const double fr = eval(reflected);
    if (fr < values[best]) {
      if (!budget_left()) {
        simplex[worst] = reflected;
        values[worst] = fr;
        break;
      }
      auto expanded = along(-2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = std::move(expanded);
        values[worst] = fe;
      } else {
        simplex[worst] = std::move(reflected);
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = std::move(reflected);
      values[worst] = fr;
      continue;
    }
    if (!budget_left()) break;
    const bool outside = fr < values[worst];
    auto contracted = along(outside ? -0.5 : 0.5);
    const double fc = eval(contracted);
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = std::move(contracted);
      values[worst] = fc;
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t j = 0; j <= n && budget_left(); ++j) {
      if (j == best) continue;
      for (std::size_t i = 0; i < n; ++i) {
        simplex[j][i] = simplex[best][i] + 0.5 * (simplex[j][i] - simplex[best][i]);
      }
      values[j] = eval(simplex[j]);
    }
  }
  const auto best = std::min_element(values.begin(), values.end()) - values.begin();
  return {simplex[best], values[best], evaluations, reason};
}

std::unique_ptr<Optimizer> make_optimizer(std::string_view name) {
  if (name == "cobyla") return std::make_unique<Cobyla>();
  if (name == "nelder-mead") return std::make_unique<NelderMead>();
  throw ContractError("unknown optimizer \"" + std::string(name) + "\"");
}

}  // namespace rotorq
