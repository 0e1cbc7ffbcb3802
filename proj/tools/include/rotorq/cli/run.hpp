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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rotorq/cli/config.hpp"

namespace rotorq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitResource = 4;

struct RunOptions {
  std::filesystem::path out;
  bool dump_pauli = false;
};

struct RunReport {
  std::vector<std::string> files;  // written artifacts, relative to `out`
  nlohmann::json summary;
};

/// Executes one task and writes its artifacts plus manifest.json into
/// options.out. Throws on failure; see exit_code().
RunReport run(const RunConfig& config, const RunOptions& options);

/// Maps an exception to the documented exit code and its error JSON.
int exit_code(const std::exception& e);
nlohmann::json error_json(const std::exception& e);

/// Command-line entry point: `rotorq <task> --config <path> [--out <dir>]
/// [--seed <u64>] [--threads <n>] [--dump-pauli]`.
int main_entry(int argc, char** argv);

}  // namespace rotorq::cli
