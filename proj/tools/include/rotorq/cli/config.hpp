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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rotorq/qpe.hpp"
#include "rotorq/rotor_model.hpp"

namespace rotorq::cli {

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Task { build, ed, qpe, vqe, resources };
enum class Encoding { binary, unary, momentum };

struct ModelConfig {
  std::vector<int> rotors{2};
  int l = 1;
  int n = 2;
  std::vector<double> g{0.0};
  std::optional<std::vector<Bond>> bonds;  // general geometry when present
};

struct EdConfig {
  std::vector<Encoding> encodings{Encoding::momentum, Encoding::binary, Encoding::unary};
  std::optional<RotorBasis> unary_basis;  // defaults to the model basis
  double tolerance = 1e-10;
};

struct QpeConfig {
  int register_qubits = 4;
  int trotter_steps = 20;
  int shots = 0;  // 0 = exact probabilities
  bool shift_to_half = false;
  std::string input = "uniform";  // or "ground"
  QpeBackend backend = QpeBackend::factorized;
  QpeEvolution evolution = QpeEvolution::trotter4;
  std::vector<int> study_steps;  // Trotter convergence table when non-empty
};

struct VqeConfig {
  int blocks = 16;
  std::string optimizer = "cobyla";
  int max_iterations = 1000;
  double rho_begin = 1.0;
  double rho_end = 1e-6;
  double init_scale = 0.0;  // 0 starts from all-zero angles
};

struct RunConfig {
  Task task = Task::ed;
  ModelConfig model;
  Encoding encoding = Encoding::binary;
  std::uint64_t seed = 0;
  std::string output = "rotorq-out";
  std::uint64_t memory_cap_mib = 2048;
  int threads = 0;  // 0 = hardware concurrency
  EdConfig ed;
  QpeConfig qpe;
  VqeConfig vqe;

  /// Fully resolved configuration, defaults included.
  nlohmann::json to_json() const;
  /// One chain spec per (rotors, g) grid point, rotors-major.
  std::vector<ChainSpec> grid() const;
};

std::string to_string(Task t);
std::string to_string(Encoding e);
Task parse_task(const std::string& name);

/// Validates `j` against the schema. Unknown keys and wrong types throw
/// ConfigError. `task` fills in when the document does not name one.
RunConfig parse_config(const nlohmann::json& j, std::optional<Task> task = std::nullopt);
RunConfig load_config(const std::filesystem::path& path, std::optional<Task> task = std::nullopt);

}  // namespace rotorq::cli
