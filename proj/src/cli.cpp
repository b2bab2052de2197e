// Copyright 2026 The qswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qswap/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>

#include "CLI11.hpp"
#include "qswap/circuit_io.hpp"
#include "qswap/derivation.hpp"
#include "qswap/identities.hpp"
#include "qswap/protocols.hpp"
#include "qswap/report.hpp"
#include "qswap/sim.hpp"

namespace qswap {

namespace {

// Teleportation is exact; the pass threshold leaves room for rounding only.
double fidelity_threshold() { return 1.0 - 10.0 * tolerance(); }

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

bool check_dim(int d, std::ostream& err) {
  if (d < 2) {
    err << "error: d must be at least 2, got " << d << "\n";
    return false;
  }
  return true;
}

std::string digits_text(std::size_t index, const Circuit& c) {
  std::string s = "|";
  for (int digit : decompose_index(index, c.dim(), c.n_wires())) s += std::to_string(digit);
  return s + ">";
}

}  // namespace

std::vector<std::string> split_input_spec(const std::string& spec) {
  std::vector<std::string> tokens;
  std::string current;
  int depth = 0;
  for (char ch : spec) {
    if (ch == '[') ++depth;
    if (ch == ']') depth = std::max(0, depth - 1);
    if (ch == ',' && depth == 0) {
      tokens.push_back(current);
      current.clear();
    } else if (ch != ' ') {
      current += ch;
    }
  }
  tokens.push_back(current);
  return tokens;
}

StateVector parse_input_spec(const std::string& spec, const Circuit& c) {
  std::vector<StateVector> wires;
  if (spec.empty()) {
    for (Wire w = 0; w < c.n_wires(); ++w) {
      const auto& label = c.input(w);
      wires.push_back(label && is_fixed(*label) ? label_state(*label, c.dim())
                                                : label_state(BasisLabel{0}, c.dim()));
    }
  } else {
    const auto tokens = split_input_spec(spec);
    if (tokens.size() != c.n_wires()) {
      throw std::invalid_argument("input spec has " + std::to_string(tokens.size()) +
                                  " wire state(s), circuit has " + std::to_string(c.n_wires()));
    }
    for (const auto& t : tokens) wires.push_back(parse_state_spec(t, c.dim()));
  }
  StateVector state = wires.front();
  for (std::size_t i = 1; i < wires.size(); ++i) state = tensor(state, wires[i]);
  return state;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  if (!is_identity_name(opts.identity)) {
    err << "error: unknown identity '" << opts.identity << "'; known:";
    for (auto name : identity_names()) err << " " << name;
    err << "\n";
    return kExitUsage;
  }
  if (opts.dims.empty()) {
    err << "error: --d needs at least one dimension\n";
    return kExitUsage;
  }
  for (int d : opts.dims) {
    if (!check_dim(d, err)) return kExitUsage;
    if (total_dimension(Dimension(d), 3) > kMaxTotalDimension) {
      err << "error: d = " << d << " is too large for three-wire checks\n";
      return kExitUsage;
    }
  }

  std::vector<IdentityCase> cases;
  for (int d : opts.dims) {
    auto part = verify_identity(opts.identity, Dimension(d));
    cases.insert(cases.end(), part.begin(), part.end());
  }
  const bool passed =
      std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.report.pass; });

  if (opts.format == OutputFormat::kJson) {
    Json j;
    j["schema"] = kVerifySchema;
    j["identity"] = opts.identity;
    j["dims"] = opts.dims;
    j["tolerance"] = tolerance();
    j["passed"] = passed;
    j["cases"] = to_json(cases);
    print_json(out, j);
  } else {
    for (const auto& c : cases) {
      out << (c.report.pass ? "[PASS] " : "[FAIL] ") << c.identity << " d=" << c.d << "  "
          << c.label << "  max deviation " << format_deviation(c.report.max_deviation) << "\n";
      if (!c.report.pass && !c.report.detail.empty()) out << "       " << c.report.detail << "\n";
    }
    out << (passed ? "PASSED" : "FAILED") << ": " << cases.size() << " case(s)\n";
  }
  return passed ? kExitPass : kExitCheckFailed;
}

int cmd_derive(const DeriveOptions& opts, std::ostream& out, std::ostream& err) {
  Pipeline pipeline;
  try {
    pipeline = parse_pipeline(opts.pipeline);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!check_dim(opts.d, err)) return kExitUsage;
  if (pipeline == Pipeline::kQubit && opts.d != 2) {
    err << "error: the qubit pipeline needs d = 2\n";
    return kExitUsage;
  }
  if (total_dimension(Dimension(opts.d), 3) > kMaxTotalDimension) {
    err << "error: d = " << opts.d << " is too large for a three-wire derivation\n";
    return kExitUsage;
  }

  const DerivationReport report = run_derivation(pipeline, Dimension(opts.d));
  const std::string text = to_text(report);
  const std::string json = to_json(report).dump(2) + "\n";

  if (opts.out_dir) {
    const std::filesystem::path dir(*opts.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const std::string stem =
        "derive-" + std::string(pipeline_name(pipeline)) + "-d" + std::to_string(opts.d);
    for (const auto& [ext, body] : {std::pair{".txt", &text}, std::pair{".json", &json}}) {
      std::ofstream file(dir / (stem + ext), std::ios::binary);
      file << *body;
      if (!file) {
        err << "error: cannot write " << (dir / (stem + ext)).string() << "\n";
        return kExitInput;
      }
    }
  }
  out << (opts.format == OutputFormat::kJson ? json : text);
  return report.passed ? kExitPass : kExitCheckFailed;
}

int cmd_teleport(const TeleportOptions& opts, std::ostream& out, std::ostream& err) {
  if (!check_dim(opts.d, err)) return kExitUsage;
  if (total_dimension(Dimension(opts.d), 3) > kMaxTotalDimension) {
    err << "error: d = " << opts.d << " is too large for teleportation\n";
    return kExitUsage;
  }
  if (opts.trials < 1) {
    err << "error: --trials must be positive\n";
    return kExitUsage;
  }
  const Dimension dim(opts.d);
  const bool haar = opts.state == "haar";
  std::optional<StateVector> fixed;
  if (!haar) {
    try {
      fixed = parse_state_spec(opts.state, dim);
    } catch (const std::exception& e) {
      err << "error: bad --state '" << opts.state << "': " << e.what() << "\n";
      return kExitUsage;
    }
  }

  // One stream drives both the Haar draws and the per-trial measurement seeds.
  Rng rng(opts.seed);
  double min_fidelity = std::numeric_limits<double>::infinity();
  double min_overlap = std::numeric_limits<double>::infinity();
  double fidelity_sum = 0.0;
  std::map<std::pair<int, int>, int> histogram;
  Json trials = Json::array();
  for (int t = 0; t < opts.trials; ++t) {
    const StateVector psi = haar ? haar_random_state(dim, 1, rng) : *fixed;
    const TeleportOutcome o = teleport_trial(dim, psi, rng.next_u64());
    const int a_m = o.record.entries.at(0).value;
    const int a_t = o.record.entries.at(1).value;
    ++histogram[{a_m, a_t}];
    min_fidelity = std::min(min_fidelity, o.fidelity);
    min_overlap = std::min(min_overlap, o.alice_chi_overlap);
    fidelity_sum += o.fidelity;
    Json tj;
    tj["trial"] = t;
    tj["outcomes"] = {{kAncillaRegister, a_m}, {kSourceRegister, a_t}};
    tj["branch_probability"] = o.record.total_probability();
    tj["fidelity"] = o.fidelity;
    tj["alice_chi_overlap"] = o.alice_chi_overlap;
    trials.push_back(std::move(tj));
  }
  const bool passed = min_fidelity >= fidelity_threshold() && min_overlap >= fidelity_threshold();

  if (opts.format == OutputFormat::kJson) {
    Json j;
    j["schema"] = kTeleportSchema;
    j["d"] = opts.d;
    j["state"] = opts.state;
    j["trials"] = opts.trials;
    j["seed"] = opts.seed;
    j["threshold"] = fidelity_threshold();
    j["passed"] = passed;
    j["min_fidelity"] = min_fidelity;
    j["mean_fidelity"] = fidelity_sum / opts.trials;
    j["min_alice_chi_overlap"] = min_overlap;
    j["results"] = std::move(trials);
    print_json(out, j);
  } else {
    char line[160];
    out << "teleport: d = " << opts.d << ", state " << opts.state << ", " << opts.trials
        << " trial(s), seed " << opts.seed << "\n";
    std::snprintf(line, sizeof(line), "min fidelity      %.17g\nmean fidelity     %.17g\n",
                  min_fidelity, fidelity_sum / opts.trials);
    out << line;
    std::snprintf(line, sizeof(line), "min chi overlap   %.17g\n", min_overlap);
    out << line;
    out << "outcome counts (" << kAncillaRegister << "," << kSourceRegister << "):";
    for (const auto& [key, count] : histogram) {
      out << " (" << key.first << "," << key.second << ")=" << count;
    }
    out << "\n" << (passed ? "PASSED" : "FAILED") << "\n";
  }
  return passed ? kExitPass : kExitCheckFailed;
}

namespace {

std::optional<Circuit> load_or_report(const std::string& path, std::ostream& err) {
  try {
    return load_circuit(path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return std::nullopt;
  }
}

}  // namespace

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  auto circuit = load_or_report(opts.circuit_path, err);
  if (!circuit) return kExitInput;
  StateVector input = StateVector::basis(circuit->dim(), circuit->n_wires(), 0);
  try {
    input = parse_input_spec(opts.input, *circuit);
  } catch (const std::exception& e) {
    err << "error: bad --input: " << e.what() << "\n";
    return kExitUsage;
  }
  std::optional<RunResult> result;
  try {
    SampledOutcomes source(opts.seed);
    result = run_circuit(*circuit, input, source);
  } catch (const std::exception& e) {
    err << "error: " << opts.circuit_path << ": " << e.what() << "\n";
    return kExitInput;
  }
  const auto amps = result->final_state.amplitudes();

  if (opts.format == OutputFormat::kJson) {
    Json j;
    j["schema"] = kRunSchema;
    j["circuit"] = opts.circuit_path;
    j["d"] = circuit->dim().value();
    j["wires"] = circuit->n_wires();
    j["input"] = opts.input;
    j["seed"] = opts.seed;
    Json record = Json::array();
    for (const auto& e : result->record.entries) {
      record.push_back({{"register", e.reg}, {"value", e.value}, {"probability", e.probability}});
    }
    j["outcomes"] = std::move(record);
    j["branch_probability"] = result->record.total_probability();
    Json state = Json::array();
    for (const auto& a : amps) state.push_back({a.real() + 0.0, a.imag() + 0.0});
    j["amplitudes"] = std::move(state);
    print_json(out, j);
  } else {
    out << "run: " << opts.circuit_path << " (d = " << circuit->dim().value() << ", "
        << circuit->n_wires() << " wires), seed " << opts.seed << "\n";
    for (const auto& e : result->record.entries) {
      char line[96];
      std::snprintf(line, sizeof(line), "  %s = %d  (p = %.17g)\n", e.reg.c_str(), e.value,
                    e.probability);
      out << line;
    }
    out << "final state (nonzero amplitudes):\n";
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if (std::abs(amps[i]) <= tolerance()) continue;
      out << "  " << digits_text(i, *circuit) << "  " << format_complex(amps[i]) << "\n";
    }
  }
  return kExitPass;
}

int cmd_unitary(const UnitaryOptions& opts, std::ostream& out, std::ostream& err) {
  auto circuit = load_or_report(opts.circuit_path, err);
  if (!circuit) return kExitInput;
  if (circuit->has_measurements()) {
    err << "error: " << opts.circuit_path << " measures; it has no unitary\n";
    return kExitInput;
  }
  const Matrix u = circuit_unitary(*circuit);
  std::vector<std::string> rows;
  for (std::size_t r = 0; r < u.size(); ++r) {
    std::string row;
    for (std::size_t c = 0; c < u.size(); ++c) {
      if (c) row += ',';
      row += format_complex(u(r, c));
    }
    rows.push_back(std::move(row));
  }
  if (opts.format == OutputFormat::kJson) {
    Json j;
    j["schema"] = kUnitarySchema;
    j["circuit"] = opts.circuit_path;
    j["d"] = circuit->dim().value();
    j["wires"] = circuit->n_wires();
    j["size"] = u.size();
    j["rows"] = rows;
    print_json(out, j);
  } else {
    for (const auto& row : rows) out << row << "\n";
  }
  return kExitPass;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qswap: circuit identities, derivations and teleportation on qudits"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::kText},
                                                    {"json", OutputFormat::kJson}};
  OutputFormat format = OutputFormat::kText;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "check a named circuit identity");
  verify_cmd->add_option("--identity", verify.identity, "identity name")->required();
  verify_cmd->add_option("--d", verify.dims, "comma-separated dimensions")
      ->required()
      ->delimiter(',');
  add_format(verify_cmd);

  DeriveOptions derive;
  auto* derive_cmd = app.add_subcommand("derive", "replay the swap-to-teleportation rewrites");
  derive_cmd->add_option("--pipeline", derive.pipeline, "qubit or qudit")->required();
  derive_cmd->add_option("--d", derive.d, "dimension")->required();
  derive_cmd->add_option("--out", derive.out_dir, "directory for .txt and .json reports");
  add_format(derive_cmd);

  TeleportOptions teleport;
  auto* teleport_cmd = app.add_subcommand("teleport", "run seeded teleportation trials");
  teleport_cmd->add_option("--d", teleport.d, "dimension")->required();
  teleport_cmd->add_option("--state", teleport.state, "state spec or 'haar'");
  teleport_cmd->add_option("--trials", teleport.trials, "number of trials");
  teleport_cmd->add_option("--seed", teleport.seed, "random seed");
  add_format(teleport_cmd);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "simulate a circuit file once");
  run_cmd->add_option("--circuit", run.circuit_path, "circuit file")->required();
  run_cmd->add_option("--input", run.input, "comma-separated per-wire states");
  run_cmd->add_option("--seed", run.seed, "random seed");
  add_format(run_cmd);

  UnitaryOptions unitary;
  auto* unitary_cmd = app.add_subcommand("unitary", "print a circuit's matrix");
  unitary_cmd->add_option("--circuit", unitary.circuit_path, "circuit file")->required();
  add_format(unitary_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) {
      verify.format = format;
      return cmd_verify(verify, out, err);
    }
    if (derive_cmd->parsed()) {
      derive.format = format;
      return cmd_derive(derive, out, err);
    }
    if (teleport_cmd->parsed()) {
      teleport.format = format;
      return cmd_teleport(teleport, out, err);
    }
    if (run_cmd->parsed()) {
      run.format = format;
      return cmd_run(run, out, err);
    }
    unitary.format = format;
    return cmd_unitary(unitary, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace qswap
