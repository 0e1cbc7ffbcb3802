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

#include "rotorq/cli/config.hpp"

#include <fstream>
#include <set>

namespace rotorq::cli {
namespace {

using nlohmann::json;

// Typed view of one JSON object that remembers which keys were read, so the
// remainder can be rejected as unknown.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_ + ": expected an object");
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key);
  }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    return j_.at(key);
  }

  template <class T>
  void read(const std::string& key, T& out) {
    if (!has(key)) return;
    out = as<T>(j_.at(key), path_ + "." + key);
  }

  template <class T>
  static T as(const json& v, const std::string& where) {
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw ConfigError(where + ": expected a boolean");
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) throw ConfigError(where + ": expected an integer");
      if constexpr (std::is_unsigned_v<T>) {
        if (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0) {
          throw ConfigError(where + ": expected a non-negative integer");
        }
      }
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) throw ConfigError(where + ": expected a number");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) throw ConfigError(where + ": expected a string");
    }
    return v.get<T>();
  }

  void finish() const {
    for (const auto& [key, _] : j_.items()) {
      if (!seen_.count(key)) throw ConfigError(path_ + ": unknown key \"" + key + "\"");
    }
  }

  const std::string& path() const { return path_; }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

template <class T>
std::vector<T> scalar_or_list(const json& v, const std::string& where) {
  std::vector<T> out;
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(Section::as<T>(v[i], where + "[" + std::to_string(i) + "]"));
    }
    if (out.empty()) throw ConfigError(where + ": list must not be empty");
  } else {
    out.push_back(Section::as<T>(v, where));
  }
  return out;
}

Encoding parse_encoding(const std::string& s, const std::string& where) {
  if (s == "binary") return Encoding::binary;
  if (s == "unary") return Encoding::unary;
  if (s == "momentum") return Encoding::momentum;
  throw ConfigError(where + ": unknown encoding \"" + s + "\"");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

std::string to_string(Task t) {
  switch (t) {
    case Task::build: return "build";
    case Task::ed: return "ed";
    case Task::qpe: return "qpe";
    case Task::vqe: return "vqe";
    case Task::resources: return "resources";
  }
  return "?";
}

std::string to_string(Encoding e) {
  switch (e) {
    case Encoding::binary: return "binary";
    case Encoding::unary: return "unary";
    case Encoding::momentum: return "momentum";
  }
  return "?";
}

Task parse_task(const std::string& name) {
  for (Task t : {Task::build, Task::ed, Task::qpe, Task::vqe, Task::resources}) {
    if (to_string(t) == name) return t;
  }
  throw ConfigError("unknown task \"" + name + "\"");
}

RunConfig parse_config(const json& j, std::optional<Task> task) {
  RunConfig c;
  Section top(j, "config");

  if (top.has("task")) {
    const Task named = parse_task(Section::as<std::string>(top.raw("task"), "config.task"));
    require(!task || *task == named, "config.task disagrees with the requested task");
    c.task = named;
  } else if (task) {
    c.task = *task;
  } else {
    throw ConfigError("config: no task given");
  }

  require(top.has("model"), "config: missing \"model\"");
  {
    Section m(top.raw("model"), "config.model");
    require(m.has("rotors"), "config.model: missing \"rotors\"");
    c.model.rotors = scalar_or_list<int>(m.raw("rotors"), "config.model.rotors");
    m.read("l", c.model.l);
    m.read("n", c.model.n);
    if (m.has("g")) c.model.g = scalar_or_list<double>(m.raw("g"), "config.model.g");
    if (m.has("bonds")) {
      const json& arr = m.raw("bonds");
      require(arr.is_array(), "config.model.bonds: expected a list");
      std::vector<Bond> bonds;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        Section b(arr[i], "config.model.bonds[" + std::to_string(i) + "]");
        Bond bond;
        b.read("i", bond.i);
        b.read("j", bond.j);
        b.read("length", bond.length);
        b.read("polar", bond.polar);
        b.read("azimuthal", bond.azimuthal);
        b.read("g0", bond.g0);
        b.finish();
        bonds.push_back(bond);
      }
      c.model.bonds = std::move(bonds);
    }
    m.finish();
  }

  if (top.has("encoding")) {
    c.encoding = parse_encoding(Section::as<std::string>(top.raw("encoding"), "config.encoding"),
                                "config.encoding");
  }
  top.read("seed", c.seed);
  top.read("output", c.output);
  top.read("memory_cap_mib", c.memory_cap_mib);
  top.read("threads", c.threads);

  if (top.has("ed")) {
    Section e(top.raw("ed"), "config.ed");
    if (e.has("encodings")) {
      c.ed.encodings.clear();
      for (const auto& s : scalar_or_list<std::string>(e.raw("encodings"), "config.ed.encodings")) {
        c.ed.encodings.push_back(parse_encoding(s, "config.ed.encodings"));
      }
    }
    if (e.has("unary_basis")) {
      Section b(e.raw("unary_basis"), "config.ed.unary_basis");
      RotorBasis basis;
      require(b.has("l") && b.has("n"), "config.ed.unary_basis: needs l and n");
      b.read("l", basis.l);
      b.read("n", basis.n);
      b.finish();
      c.ed.unary_basis = basis;
    }
    e.read("tolerance", c.ed.tolerance);
    e.finish();
  }

  if (top.has("qpe")) {
    Section q(top.raw("qpe"), "config.qpe");
    q.read("register_qubits", c.qpe.register_qubits);
    q.read("trotter_steps", c.qpe.trotter_steps);
    q.read("shots", c.qpe.shots);
    q.read("shift_to_half", c.qpe.shift_to_half);
    q.read("input", c.qpe.input);
    std::string backend = "factorized", evolution = "trotter4";
    q.read("backend", backend);
    q.read("evolution", evolution);
    if (q.has("study_steps")) {
      c.qpe.study_steps = scalar_or_list<int>(q.raw("study_steps"), "config.qpe.study_steps");
    }
    q.finish();
    require(backend == "factorized" || backend == "circuit",
            "config.qpe.backend: expected \"factorized\" or \"circuit\"");
    c.qpe.backend = backend == "circuit" ? QpeBackend::circuit : QpeBackend::factorized;
    require(evolution == "trotter4" || evolution == "exact",
            "config.qpe.evolution: expected \"trotter4\" or \"exact\"");
    c.qpe.evolution = evolution == "exact" ? QpeEvolution::exact : QpeEvolution::trotter4;
    require(c.qpe.input == "uniform" || c.qpe.input == "ground",
            "config.qpe.input: expected \"uniform\" or \"ground\"");
    require(c.qpe.register_qubits >= 1 && c.qpe.register_qubits <= 30,
            "config.qpe.register_qubits: expected 1..30");
    require(c.qpe.trotter_steps >= 1, "config.qpe.trotter_steps: expected >= 1");
    require(c.qpe.shots >= 0, "config.qpe.shots: expected >= 0");
    for (int p : c.qpe.study_steps) require(p >= 1, "config.qpe.study_steps: expected >= 1");
  }

  if (top.has("vqe")) {
    Section v(top.raw("vqe"), "config.vqe");
    v.read("blocks", c.vqe.blocks);
    v.read("optimizer", c.vqe.optimizer);
    v.read("max_iterations", c.vqe.max_iterations);
    v.read("rho_begin", c.vqe.rho_begin);
    v.read("rho_end", c.vqe.rho_end);
    v.read("init_scale", c.vqe.init_scale);
    v.finish();
    require(c.vqe.blocks >= 0, "config.vqe.blocks: expected >= 0");
    require(c.vqe.max_iterations >= 1, "config.vqe.max_iterations: expected >= 1");
    require(c.vqe.optimizer == "cobyla" || c.vqe.optimizer == "nelder-mead",
            "config.vqe.optimizer: expected \"cobyla\" or \"nelder-mead\"");
    require(c.vqe.rho_end > 0 && c.vqe.rho_begin >= c.vqe.rho_end,
            "config.vqe: need 0 < rho_end <= rho_begin");
    require(c.vqe.init_scale >= 0, "config.vqe.init_scale: expected >= 0");
  }
  top.finish();

  for (int r : c.model.rotors) require(r >= 2, "config.model.rotors: expected >= 2");
  require(c.model.l >= 0 && c.model.n >= 0 && c.model.l + c.model.n >= 1,
          "config.model: need l, n >= 0 and n + l + 1 >= 2");
  require(c.memory_cap_mib >= 1, "config.memory_cap_mib: expected >= 1");
  require(c.threads >= 0, "config.threads: expected >= 0");
  if (c.model.bonds) {
    require(c.model.rotors.size() == 1, "config.model: bonds need a single rotor count");
    for (const auto& b : *c.model.bonds) {
      require(b.i >= 0 && b.j >= 0 && b.i < c.model.rotors[0] && b.j < c.model.rotors[0] &&
                  b.i != b.j,
              "config.model.bonds: rotor index out of range");
      require(b.length > 0, "config.model.bonds: length must be positive");
    }
  }
  const bool single = c.model.rotors.size() == 1 && c.model.g.size() == 1;
  if (c.task == Task::qpe || c.task == Task::build) {
    require(single, "config.model: task \"" + to_string(c.task) + "\" needs a single (rotors, g) point");
  }
  if (c.task == Task::qpe || c.task == Task::vqe || c.task == Task::build) {
    require(c.encoding != Encoding::momentum || c.task == Task::build,
            "config.encoding: task \"" + to_string(c.task) + "\" needs a qubit encoding");
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path, std::optional<Task> task) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return parse_config(j, task);
}

nlohmann::json RunConfig::to_json() const {
  json j;
  j["task"] = to_string(task);
  j["model"] = {{"rotors", model.rotors}, {"l", model.l}, {"n", model.n}, {"g", model.g}};
  if (model.bonds) {
    json bonds = json::array();
    for (const auto& b : *model.bonds) {
      bonds.push_back({{"i", b.i}, {"j", b.j}, {"length", b.length}, {"polar", b.polar},
                       {"azimuthal", b.azimuthal}, {"g0", b.g0}});
    }
    j["model"]["bonds"] = bonds;
  }
  j["encoding"] = to_string(encoding);
  j["seed"] = seed;
  j["output"] = output;
  j["memory_cap_mib"] = memory_cap_mib;
  j["threads"] = threads;
  json encs = json::array();
  for (auto e : ed.encodings) encs.push_back(to_string(e));
  j["ed"] = {{"encodings", encs}, {"tolerance", ed.tolerance}};
  if (ed.unary_basis) j["ed"]["unary_basis"] = {{"l", ed.unary_basis->l}, {"n", ed.unary_basis->n}};
  j["qpe"] = {{"register_qubits", qpe.register_qubits},
              {"trotter_steps", qpe.trotter_steps},
              {"shots", qpe.shots},
              {"shift_to_half", qpe.shift_to_half},
              {"input", qpe.input},
              {"backend", qpe.backend == QpeBackend::circuit ? "circuit" : "factorized"},
              {"evolution", qpe.evolution == QpeEvolution::exact ? "exact" : "trotter4"}};
  if (!qpe.study_steps.empty()) j["qpe"]["study_steps"] = qpe.study_steps;
  j["vqe"] = {{"blocks", vqe.blocks},       {"optimizer", vqe.optimizer},
              {"max_iterations", vqe.max_iterations}, {"rho_begin", vqe.rho_begin},
              {"rho_end", vqe.rho_end},     {"init_scale", vqe.init_scale}};
  return j;
}

std::vector<ChainSpec> RunConfig::grid() const {
  std::vector<ChainSpec> out;
  for (int r : model.rotors) {
    for (double g : model.g) {
      ChainSpec s;
      s.rotors = r;
      s.g = g;
      s.basis = {model.l, model.n};
      if (model.bonds) s.geometry = GeneralGeometry{*model.bonds};
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace rotorq::cli
