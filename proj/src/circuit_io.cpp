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

#include "qswap/circuit_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace qswap {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') {
      ++i;
    }
    tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return tokens;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

class Parser {
 public:
  Circuit parse(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      std::string_view line = text.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      line_ = line_no;
      tokens_ = tokenize(line);
      if (!tokens_.empty()) statement();
      if (end == text.size()) break;
      pos = end + 1;
    }
    if (!circuit_) {
      throw ParseError(1, 1, dim_ ? "missing 'wires' header" : "missing 'dim' header");
    }
    return *circuit_;
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(line_, at.column, message);
  }

  void expect_count(std::size_t n, const std::string& usage) const {
    if (tokens_.size() < n) {
      const auto& last = tokens_.back();
      throw ParseError(line_, last.column + last.text.size(), "expected: " + usage);
    }
    if (tokens_.size() > n) fail(tokens_[n], "unexpected token '" + tokens_[n].text + "'");
  }

  long long integer(const Token& t) const {
    long long v = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) fail(t, "expected an integer, got '" + t.text + "'");
    return v;
  }

  Wire wire(const Token& t) const {
    const long long v = integer(t);
    if (v < 0 || static_cast<std::size_t>(v) >= circuit_->n_wires()) {
      fail(t, "wire " + t.text + " out of range [0, " + std::to_string(circuit_->n_wires()) + ")");
    }
    return static_cast<Wire>(v);
  }

  GateId gate_id(const Token& t, std::string_view text) const {
    auto g = parse_mnemonic(text);
    if (!g) fail(t, "unknown gate mnemonic '" + std::string(text) + "'");
    if (*g == GateId::H && circuit_->dim().value() != 2) fail(t, "H needs dim 2; use F/FD");
    return *g;
  }

  StateLabel label(const Token& t) const {
    try {
      StateLabel l = parse_state_label(t.text);
      if (auto* b = std::get_if<BasisLabel>(&l); b && b->value >= circuit_->dim().value()) {
        fail(t, "basis label " + t.text + " outside [0, d)");
      }
      return l;
    } catch (const std::invalid_argument&) {
      fail(t, "unknown state label '" + t.text + "'");
    } catch (const std::out_of_range&) {
      fail(t, "basis label " + t.text + " outside [0, d)");
    }
  }

  void require_circuit(const Token& t) const {
    if (!circuit_) fail(t, "'dim' and 'wires' must come before '" + t.text + "'");
  }

  void statement() {
    const Token& kw = tokens_[0];
    if (kw.text == "dim") {
      if (dim_) fail(kw, "duplicate 'dim'");
      expect_count(2, "dim <d>");
      const long long d = integer(tokens_[1]);
      if (d < 2) fail(tokens_[1], "dim must be at least 2");
      if (d > static_cast<long long>(kMaxTotalDimension)) fail(tokens_[1], "dim too large");
      dim_ = static_cast<int>(d);
    } else if (kw.text == "wires") {
      if (!dim_) fail(kw, "'dim' must come before 'wires'");
      if (circuit_) fail(kw, "duplicate 'wires'");
      expect_count(2, "wires <n>");
      const long long n = integer(tokens_[1]);
      if (n < 1) fail(tokens_[1], "wires must be at least 1");
      try {
        circuit_.emplace(Dimension(*dim_), static_cast<std::size_t>(n));
      } catch (const std::exception& e) {
        fail(tokens_[1], e.what());
      }
    } else if (kw.text == "gate") {
      require_circuit(kw);
      if (tokens_.size() < 3) expect_count(3, "gate <MNEMONIC> <wire> [<wire>]");
      const GateId g = gate_id(tokens_[1], tokens_[1].text);
      const std::size_t arity = gate_arity(g);
      if (tokens_.size() != 2 + arity) {
        fail(tokens_.size() > 2 + arity ? tokens_[2 + arity] : tokens_.back(),
             tokens_[1].text + " takes " + std::to_string(arity) + " wire(s), got " +
                 std::to_string(tokens_.size() - 2));
      }
      std::vector<Wire> wires;
      for (std::size_t i = 0; i < arity; ++i) {
        const Wire w = wire(tokens_[2 + i]);
        if (std::find(wires.begin(), wires.end(), w) != wires.end()) {
          fail(tokens_[2 + i], "duplicate wire " + tokens_[2 + i].text + " in one gate");
        }
        wires.push_back(w);
      }
      circuit_->gate(g, std::move(wires));
    } else if (kw.text == "measure") {
      require_circuit(kw);
      expect_count(4, "measure <wire> -> <register>");
      const Wire w = wire(tokens_[1]);
      if (tokens_[2].text != "->") fail(tokens_[2], "expected '->'");
      const Token& reg = tokens_[3];
      if (!is_identifier(reg.text)) fail(reg, "bad register name '" + reg.text + "'");
      if (!written_.insert(reg.text).second) fail(reg, "register '" + reg.text + "' reused");
      circuit_->measure(w, reg.text);
    } else if (kw.text == "cgate") {
      require_circuit(kw);
      expect_count(3, "cgate <MNEMONIC>^<register> <wire>");
      const Token& spec = tokens_[1];
      const auto caret = spec.text.find('^');
      if (caret == std::string::npos) fail(spec, "expected <MNEMONIC>^<register>");
      const std::string name = spec.text.substr(0, caret);
      const std::string reg = spec.text.substr(caret + 1);
      const GateId g = gate_id(spec, name);
      if (gate_arity(g) != 1) fail(spec, "classically controlled gate must be single-wire");
      if (!is_identifier(reg)) fail(spec, "bad register name '" + reg + "'");
      if (!written_.contains(reg)) fail(spec, "register '" + reg + "' read before it is measured");
      circuit_->classical_gate(reg, g, wire(tokens_[2]));
    } else if (kw.text == "input" || kw.text == "output") {
      require_circuit(kw);
      expect_count(3, kw.text + " <wire> <label>");
      const Wire w = wire(tokens_[1]);
      const StateLabel l = label(tokens_[2]);
      auto& seen = kw.text == "input" ? inputs_seen_ : outputs_seen_;
      if (!seen.insert(w).second) fail(tokens_[1], "duplicate " + kw.text + " for wire " + tokens_[1].text);
      if (kw.text == "input") {
        circuit_->set_input(w, l);
      } else {
        circuit_->set_output(w, l);
      }
    } else {
      fail(kw, "unknown keyword '" + kw.text + "'");
    }
  }

  std::size_t line_ = 0;
  std::vector<Token> tokens_;
  std::optional<int> dim_;
  std::optional<Circuit> circuit_;
  std::set<std::string> written_;
  std::set<Wire> inputs_seen_;
  std::set<Wire> outputs_seen_;
};

}  // namespace

Circuit parse_circuit(std::string_view text) { return Parser().parse(text); }

std::string format_instruction(const Instruction& instr) {
  std::ostringstream os;
  if (auto* g = std::get_if<GateOp>(&instr)) {
    os << "gate " << mnemonic(g->gate);
    for (Wire w : g->wires) os << ' ' << w;
  } else if (auto* m = std::get_if<MeasureOp>(&instr)) {
    os << "measure " << m->wire << " -> " << m->reg;
  } else {
    const auto& cg = std::get<ClassicalGateOp>(instr);
    os << "cgate " << mnemonic(cg.base) << '^' << cg.reg << ' ' << cg.wire;
  }
  return os.str();
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "dim " << c.dim().value() << '\n' << "wires " << c.n_wires() << '\n';
  for (Wire w = 0; w < c.n_wires(); ++w) {
    if (c.input(w)) os << "input " << w << ' ' << to_string(*c.input(w)) << '\n';
  }
  for (const auto& instr : c.instructions()) os << format_instruction(instr) << '\n';
  for (Wire w = 0; w < c.n_wires(); ++w) {
    if (c.output(w)) os << "output " << w << ' ' << to_string(*c.output(w)) << '\n';
  }
  return os.str();
}

Circuit load_circuit(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open circuit file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_circuit(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(),
                     path.string() + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
}

std::string render_ascii(const Circuit& c) {
  const std::size_t n = c.n_wires();
  std::vector<std::string> rows(n);
  for (Wire w = 0; w < n; ++w) {
    rows[w] = "q" + std::to_string(w) + ": ";
    if (c.input(w)) rows[w] += "|" + to_string(*c.input(w)) + "> ";
  }
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.size());
  for (auto& r : rows) r.resize(width, ' ');

  for (const auto& instr : c.instructions()) {
    std::vector<std::string> cells(n);
    if (auto* g = std::get_if<GateOp>(&instr)) {
      if (g->wires.size() == 1) {
        cells[g->wires[0]] = std::string(mnemonic(g->gate));
      } else {
        const std::string name(mnemonic(g->gate));
        cells[g->wires[0]] = "*";
        cells[g->wires[1]] = name.substr(1);  // CX -> X, CZD -> ZD
        const Wire lo = std::min(g->wires[0], g->wires[1]);
        const Wire hi = std::max(g->wires[0], g->wires[1]);
        for (Wire w = lo + 1; w < hi; ++w) cells[w] = "|";
      }
    } else if (auto* m = std::get_if<MeasureOp>(&instr)) {
      cells[m->wire] = "M>" + m->reg;
    } else {
      const auto& cg = std::get<ClassicalGateOp>(instr);
      cells[cg.wire] = std::string(mnemonic(cg.base)) + "^" + cg.reg;
    }
    std::size_t cell_width = 1;
    for (const auto& s : cells) cell_width = std::max(cell_width, s.size());
    for (Wire w = 0; w < n; ++w) {
      std::string cell = cells[w];
      cell.resize(cell_width, '-');
      rows[w] += "-" + cell + "-";
    }
  }
  std::string out;
  for (Wire w = 0; w < n; ++w) {
    out += rows[w];
    if (c.output(w)) out += " |" + to_string(*c.output(w)) + ">";
    out += '\n';
  }
  return out;
}

}  // namespace qswap
