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

// The qswap command line. Each cmd_* writes its report to `out` and
// diagnostics to `err`, and returns the process exit code.

#ifndef QSWAP_CLI_HPP
#define QSWAP_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qswap/core.hpp"

namespace qswap {

enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitInput = 3,  // unreadable file, parse error, unusable circuit
};

enum class OutputFormat { kText, kJson };

struct VerifyOptions {
  std::string identity;
  std::vector<int> dims;
  OutputFormat format = OutputFormat::kText;
};

struct DeriveOptions {
  std::string pipeline;
  int d = 2;
  /// When set, writes derive-<pipeline>-d<d>.{txt,json} there.
  std::optional<std::string> out_dir;
  OutputFormat format = OutputFormat::kText;
};

struct TeleportOptions {
  int d = 2;
  /// A single-wire state spec, or "haar" for a fresh random state per trial.
  std::string state = "haar";
  int trials = 1;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::kText;
};

struct RunOptions {
  std::string circuit_path;
  /// Comma-separated per-wire state specs; empty means declared fixed
  /// inputs, |0> elsewhere.
  std::string input;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::kText;
};

struct UnitaryOptions {
  std::string circuit_path;
  OutputFormat format = OutputFormat::kText;
};

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_derive(const DeriveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_teleport(const TeleportOptions& opts, std::ostream& out, std::ostream& err);
int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);
int cmd_unitary(const UnitaryOptions& opts, std::ostream& out, std::ostream& err);

/// Splits "0,psi:[1,0],chi" at top-level commas only.
std::vector<std::string> split_input_spec(const std::string& spec);

/// Tensor product of per-wire states, wire 0 first.
StateVector parse_input_spec(const std::string& spec, const Circuit& c);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qswap

#endif  // QSWAP_CLI_HPP
