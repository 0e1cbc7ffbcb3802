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

#include "rotorq/cli/run.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <thread>

#include <CLI11.hpp>

#include "rotorq/binary_encoding.hpp"
#include "rotorq/errors.hpp"
#include "rotorq/lanczos.hpp"
#include "rotorq/unary_encoding.hpp"
#include "rotorq/version.hpp"
#include "rotorq/vqe.hpp"

namespace rotorq::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Runs f(0..n-1) on a small pool; results keep index order and the first
// failing index's exception is rethrown.
template <class F>
auto parallel_map(std::size_t n, int threads, F f) -> std::vector<decltype(f(std::size_t{0}))> {
  using R = decltype(f(std::size_t{0}));
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

class Writer {
 public:
  explicit Writer(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

  std::ofstream open(const std::string& name) {
    std::ofstream f(dir_ / name);
    if (!f) throw Error("cannot write " + (dir_ / name).string());
    files_.push_back(name);
    return f;
  }

  void json_file(const std::string& name, const json& j) { open(name) << j.dump(2) << '\n'; }

  const std::vector<std::string>& files() const { return files_; }

 private:
  fs::path dir_;
  std::vector<std::string> files_;
};

std::string spec_label(const ChainSpec& s) {
  return "N=" + std::to_string(s.rotors) + " g=" + num(s.g);
}

PauliSum encode(const ChainSpec& spec, Encoding e) {
  return e == Encoding::unary ? encode_chain_hamiltonian_unary(spec)
                              : encode_chain_hamiltonian(spec);
}

/// Product state with every rotor at m = 0 in the chosen qubit encoding.
StateVector zero_momentum_state(const ChainSpec& spec, Encoding e) {
  const std::vector<int> cfg(spec.rotors, spec.basis.l);
  if (e == Encoding::unary) {
    const PhysicalIndexer ix(spec.basis, spec.rotors);
    return StateVector::basis(ix.qubit_count(), ix.embed(cfg));
  }
  return StateVector::basis(spec.rotors * binary_qubits_per_rotor(spec.basis),
                            binary_embed(spec.basis, cfg));
}

double ground_energy(const LinearOperator& op, double tol) {
  LanczosOptions o;
  o.tolerance = tol;
  return lanczos_ground(op, o).eigenvalues[0];
}

void dump_pauli(Writer& w, const PauliSum& h) {
  auto f = w.open("pauli.txt");
  write_text(f, h);
}

// ---------------------------------------------------------------- tasks

json task_build(const RunConfig& c, const RunOptions&, Writer& w) {
  const ChainSpec spec = c.grid().front();
  json s{{"point", spec_label(spec)}, {"encoding", to_string(c.encoding)}};
  if (c.encoding == Encoding::momentum) {
    const auto h = build_momentum_hamiltonian(spec);
    s["dimension"] = h.dimension();
    s["dense"] = h.has_dense();
    return s;
  }
  const PauliSum h = encode(spec, c.encoding);
  dump_pauli(w, h);
  s["qubits"] = h.qubit_count();
  s["terms"] = h.size();
  s["max_weight"] = h.max_weight();
  s["hermitian"] = h.is_hermitian();
  return s;
}

json task_ed(const RunConfig& c, const RunOptions& opt, Writer& w) {
  const auto grid = c.grid();
  const auto& encs = c.ed.encodings;
  const bool extra_momentum =
      c.ed.unary_basis &&
      std::find(encs.begin(), encs.end(), Encoding::unary) != encs.end() &&
      (c.ed.unary_basis->l != c.model.l || c.ed.unary_basis->n != c.model.n);

  auto rows = parallel_map(grid.size(), c.threads, [&](std::size_t i) {
    const ChainSpec& spec = grid[i];
    std::vector<double> row;
    for (Encoding e : encs) {
      if (e == Encoding::momentum) {
        const auto h = build_momentum_hamiltonian(spec);
        row.push_back(ground_energy(make_operator(h), c.ed.tolerance));
      } else if (e == Encoding::binary) {
        row.push_back(ground_energy(make_operator(encode_chain_hamiltonian(spec)), c.ed.tolerance));
      } else {
        ChainSpec u = spec;
        if (c.ed.unary_basis) u.basis = *c.ed.unary_basis;
        row.push_back(ground_energy(make_physical_operator(u), c.ed.tolerance));
      }
    }
    if (extra_momentum) {
      ChainSpec u = spec;
      u.basis = *c.ed.unary_basis;
      const auto h = build_momentum_hamiltonian(u);
      row.push_back(ground_energy(make_operator(h), c.ed.tolerance));
    }
    return row;
  });

  auto f = w.open("energies.csv");
  f << "rotors,g";
  for (Encoding e : encs) f << ",E0_" << to_string(e);
  if (extra_momentum) f << ",E0_momentum_unary_basis";
  f << '\n';
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    f << grid[i].rotors << ',' << num(grid[i].g);
    for (double e : rows[i]) f << ',' << num(e);
    f << '\n';
    const double ref = rows[i][0];
    for (std::size_t k = 1; k < encs.size(); ++k) {
      if (encs[0] == Encoding::momentum && encs[k] == Encoding::binary) {
        worst = std::max(worst, std::abs(rows[i][k] - ref));
      }
    }
  }
  if (opt.dump_pauli && c.encoding != Encoding::momentum) dump_pauli(w, encode(grid.front(), c.encoding));
  return {{"points", grid.size()}, {"max_binary_momentum_difference", worst}};
}

json task_resources(const RunConfig& c, const RunOptions&, Writer& w) {
  const auto grid = c.grid();
  auto bounds = parallel_map(grid.size(), c.threads,
                             [&](std::size_t i) { return register_bound(grid[i]); });
  auto f = w.open("resources.csv");
  f << "rotors,g,gap,t,r\n";
  int lo = 1 << 30, hi = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    f << grid[i].rotors << ',' << num(grid[i].g) << ',' << num(bounds[i].gap) << ','
      << bounds[i].t << ',' << bounds[i].r << '\n';
    lo = std::min(lo, bounds[i].r);
    hi = std::max(hi, bounds[i].r);
  }
  return {{"points", grid.size()}, {"min_r", lo}, {"max_r", hi}};
}

json task_qpe(const RunConfig& c, const RunOptions& opt, Writer& w) {
  const ChainSpec spec = c.grid().front();
  const PauliSum h = encode(spec, c.encoding);
  const int q = h.qubit_count();
  const auto bounds = classical_energy_bounds(spec);

  // Exact levels of the physical problem, expressed on the qubit register.
  LanczosOptions lo;
  lo.eigenvalues = 2;
  Eigen::VectorXcd ground;
  std::vector<double> levels;
  if (c.encoding == Encoding::unary) {
    const auto res = lanczos_ground(make_physical_operator(spec), lo);
    const PhysicalIndexer ix(spec.basis, spec.rotors);
    ground = Eigen::VectorXcd::Zero(Eigen::Index{1} << q);
    for (std::size_t t = 0; t < ix.size(); ++t) ground[ix.embed_lex(t)] = res.vectors[0][t];
    levels = res.eigenvalues;
  } else {
    const auto res = lanczos_ground(make_operator(h), lo);
    ground = res.vectors[0];
    levels = res.eigenvalues;
  }

  const RescaledHamiltonian scaled =
      c.qpe.shift_to_half ? shift_to_half(h, levels[0], bounds.second - bounds.first)
                          : rescale(h, bounds.first, bounds.second);

  StateVector input(q);
  if (c.qpe.input == "ground") {
    input = StateVector(q, std::vector<Complex>(ground.data(), ground.data() + ground.size()));
  } else if (c.encoding == Encoding::unary) {
    const PhysicalIndexer ix(spec.basis, spec.rotors);
    std::vector<Complex> amps(std::size_t{1} << q);
    const double a = 1.0 / std::sqrt(static_cast<double>(ix.size()));
    for (std::size_t t = 0; t < ix.size(); ++t) amps[ix.embed_lex(t)] = a;
    input = StateVector(q, std::move(amps));
  } else {
    input = StateVector::uniform(q);
  }

  QpeOptions qo;
  qo.register_qubits = c.qpe.register_qubits;
  qo.trotter_steps = c.qpe.trotter_steps;
  qo.shots = c.qpe.shots;
  qo.seed = c.seed;
  qo.backend = c.qpe.backend;
  qo.evolution = c.qpe.evolution;
  qo.memory_cap_bytes = c.memory_cap_mib << 20;
  const QpeOutcome out = run_qpe(scaled, input, qo);
  const ExactLevels exact{ground, scaled.to_rescaled(levels[0]), scaled.to_rescaled(levels[1])};
  const PeakReport report = analyze_peaks(out, scaled, exact);

  const int r = out.register_qubits();
  {
    auto f = w.open("histogram.csv");
    f << "ancilla,bits,phase,estimate_rescaled,estimate,probability";
    if (c.qpe.shots > 0) f << ",count";
    f << '\n';
    const auto& hist = out.histogram();
    for (std::size_t a = 0; a < hist.probabilities.size(); ++a) {
      std::string bits(static_cast<std::size_t>(r), '0');
      for (int b = 0; b < r; ++b) {
        if ((a >> (r - 1 - b)) & 1u) bits[static_cast<std::size_t>(b)] = '1';
      }
      const double est = qpe_energy_estimate(a, r);
      f << a << ',' << bits << ',' << num(static_cast<double>(a) / double(hist.probabilities.size()))
        << ',' << num(est) << ',' << num(scaled.from_rescaled(est)) << ','
        << num(hist.probabilities[a]);
      if (c.qpe.shots > 0) f << ',' << hist.counts[a];
      f << '\n';
    }
  }

  json peaks = json::array();
  for (const auto& p : report.peaks) {
    peaks.push_back({{"ancilla", p.ancilla},
                     {"phase", p.phase},
                     {"estimate_rescaled", p.estimate},
                     {"estimate", scaled.from_rescaled(p.estimate)},
                     {"probability", p.probability},
                     {"overlap", p.overlap},
                     {"energy_rescaled", p.energy},
                     {"energy", scaled.from_rescaled(p.energy)}});
  }
  const json peak_doc{{"register_qubits", r},
                      {"offset", scaled.offset},
                      {"scale", scaled.scale},
                      {"ground_energy", levels[0]},
                      {"ground_energy_rescaled", exact.ground_energy},
                      {"first_excited_rescaled", *exact.first_excited},
                      {"peaks", peaks},
                      {"rightmost", report.rightmost},
                      {"best_overlap", report.best_overlap},
                      {"ground_resolvable", report.ground_resolvable}};
  w.json_file("peaks.json", peak_doc);

  json summary{{"point", spec_label(spec)},
               {"qubits", q + r},
               {"rightmost_energy_rescaled", report.peaks[report.rightmost].energy},
               {"rightmost_overlap", report.peaks[report.rightmost].overlap},
               {"ground_energy_rescaled", exact.ground_energy}};

  if (!c.qpe.study_steps.empty()) {
    if (c.encoding != Encoding::binary) {
      throw ConfigError("config.qpe.study_steps: the Trotter study uses the binary encoding");
    }
    const auto study =
        trotter_convergence_study(h, bounds, c.qpe.study_steps, c.qpe.shift_to_half, r);
    auto f = w.open("trotter_study.csv");
    f << "steps,dt,phase_error,state_error,peak_probability\n";
    for (const auto& row : study.rows) {
      f << row.steps << ',' << num(row.dt) << ',' << num(row.phase_error) << ','
        << num(row.state_error) << ',' << num(row.peak_probability) << '\n';
    }
    summary["trotter_phase_slope"] = study.phase_slope;
    summary["trotter_state_slope"] = study.state_slope;
    summary["trotter_converged"] = study.converged;
    summary["trotter_target"] = study.target;
  }
  if (opt.dump_pauli) dump_pauli(w, h);
  return summary;
}

json task_vqe(const RunConfig& c, const RunOptions& opt, Writer& w) {
  const auto grid = c.grid();
  struct Point {
    double e0;
    VqeTrace trace;
  };
  auto points = parallel_map(grid.size(), c.threads, [&](std::size_t i) {
    const ChainSpec& spec = grid[i];
    const PauliSum h = encode(spec, c.encoding);
    const double e0 = c.encoding == Encoding::unary
                          ? ground_energy(make_physical_operator(spec), 1e-10)
                          : ground_energy(make_operator(h), 1e-10);
    const auto ansatz = build_ansatz({h.qubit_count(), c.vqe.blocks, true});
    VqeOptions vo;
    vo.optimizer = c.vqe.optimizer;
    vo.max_iterations = c.vqe.max_iterations;
    vo.rho_begin = c.vqe.rho_begin;
    vo.rho_end = c.vqe.rho_end;
    vo.init_scale = c.vqe.init_scale;
    vo.seed = c.seed;
    return Point{e0, vqe_minimize(h, ansatz, zero_momentum_state(spec, c.encoding), vo)};
  });

  auto f = w.open("vqe_trace.csv");
  f << "rotors,g,iteration,energy,best_so_far\n";
  json results = json::array();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& t = points[i].trace;
    for (std::size_t k = 0; k < t.energies.size(); ++k) {
      f << grid[i].rotors << ',' << num(grid[i].g) << ',' << k + 1 << ',' << num(t.energies[k])
        << ',' << num(t.best_so_far[k]) << '\n';
    }
    const char* reason = t.reason == StopReason::converged       ? "converged"
                         : t.reason == StopReason::max_evaluations ? "max_evaluations"
                                                                   : "rounding_errors";
    results.push_back({{"rotors", grid[i].rotors},
                       {"g", grid[i].g},
                       {"ground_energy", points[i].e0},
                       {"final_energy", t.converged_energy},
                       {"error", t.converged_energy - points[i].e0},
                       {"evaluations", t.energies.size()},
                       {"stop_reason", reason},
                       {"parameters", t.parameters}});
  }
  w.json_file("vqe_summary.json", results);
  if (opt.dump_pauli) dump_pauli(w, encode(grid.front(), c.encoding));
  return {{"points", grid.size()}};
}

}  // namespace

RunReport run(const RunConfig& config, const RunOptions& options) {
  Writer w(options.out);
  json summary;
  switch (config.task) {
    case Task::build: summary = task_build(config, options, w); break;
    case Task::ed: summary = task_ed(config, options, w); break;
    case Task::qpe: summary = task_qpe(config, options, w); break;
    case Task::vqe: summary = task_vqe(config, options, w); break;
    case Task::resources: summary = task_resources(config, options, w); break;
  }
  w.json_file("summary.json", summary);
  std::vector<std::string> files = w.files();
  files.push_back("manifest.json");
  const json manifest{{"tool", "rotorq"},
                      {"version", kVersion},
                      {"task", to_string(config.task)},
                      {"seed", config.seed},
                      {"config", config.to_json()},
                      {"outputs", files}};
  w.json_file("manifest.json", manifest);
  return {files, summary};
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const UnsupportedBasisError*>(&e) ||
      dynamic_cast<const DimensionError*>(&e) || dynamic_cast<const ContractError*>(&e) ||
      dynamic_cast<const CLI::Error*>(&e)) {
    return kExitSchema;
  }
  if (dynamic_cast<const ResourceError*>(&e) || dynamic_cast<const std::bad_alloc*>(&e)) {
    return kExitResource;
  }
  return kExitNumerical;
}

json error_json(const std::exception& e) {
  const int code = exit_code(e);
  const char* kind = code == kExitSchema     ? "schema"
                     : code == kExitResource ? "resource"
                                             : "numerical";
  json j{{"error", {{"code", code}, {"kind", kind}, {"message", e.what()}}}};
  if (const auto* ce = dynamic_cast<const ConvergenceError*>(&e)) {
    j["error"]["best_residual"] = ce->best_residual();
  }
  return j;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Planar-rotor chain simulations: encodings, ED, QPE and VQE"};
  std::string task_name, config_path, out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  bool dump = false;
  app.add_option("task", task_name, "build | ed | qpe | vqe | resources")->required();
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--out", out_dir, "Output directory (overrides config.output)");
  app.add_option("--seed", seed, "Seed (overrides config.seed)");
  app.add_option("--threads", threads, "Worker threads for sweeps (0 = all cores)");
  app.add_flag("--dump-pauli", dump, "Also write the encoded Hamiltonian to pauli.txt");
  app.set_version_flag("--version", std::string(kVersion));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json(e).dump() << '\n';
    return kExitSchema;
  }

  fs::path out;
  try {
    RunConfig config = load_config(config_path, parse_task(task_name));
    if (seed) config.seed = *seed;
    if (threads) config.threads = *threads;
    if (!out_dir.empty()) config.output = out_dir;
    out = config.output;
    const RunReport report = run(config, {out, dump});
    std::cout << report.summary.dump() << '\n';
    for (const auto& f : report.files) std::cout << "wrote " << (out / f).string() << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    const json err = error_json(e);
    std::cerr << err.dump() << '\n';
    if (!out.empty()) {
      std::error_code ec;
      fs::create_directories(out, ec);
      std::ofstream f(out / "error.json");
      if (f) f << err.dump(2) << '\n';
    }
    return exit_code(e);
  }
}

}  // namespace rotorq::cli
