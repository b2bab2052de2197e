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

// Line-oriented circuit files. '#' starts a comment.
//
//   dim <d>
//   wires <n>
//   input <wire> <label>                    label: digit, chi or psi
//   gate <MNEMONIC> <wire> [<wire>]         control first for 2-wire gates
//   measure <wire> -> <register>
//   cgate <MNEMONIC>^<register> <wire>
//   output <wire> <label>
//
// `dim` and `wires` come first, in that order. serialize_circuit writes the
// canonical form: header, inputs by wire, instructions, outputs by wire.

#ifndef QSWAP_CIRCUIT_IO_HPP
#define QSWAP_CIRCUIT_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qswap/core.hpp"

namespace qswap {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& c);
Circuit load_circuit(const std::filesystem::path& path);

/// One-line instruction text as it appears in a circuit file (without keyword
/// prefixes for inputs/outputs).
std::string format_instruction(const Instruction& instr);

/// ASCII wire diagram, one row per wire.
std::string render_ascii(const Circuit& c);

}  // namespace qswap

#endif  // QSWAP_CIRCUIT_IO_HPP
