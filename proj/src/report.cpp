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

#include "qswap/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qswap/circuit_io.hpp"

namespace qswap {

namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string indent(const std::string& block, const std::string& prefix) {
  std::string out;
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) out += prefix + line + '\n';
  return out;
}

std::string site_text(const Site& site) {
  std::string s = "index " + std::to_string(site.index);
  for (const auto& [name, wire] : site.roles) s += ", " + name + "=" + std::to_string(wire);
  return s;
}

}  // namespace

std::string format_complex(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

std::string format_deviation(double deviation) {
  if (!std::isfinite(deviation)) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2g", deviation);
  return buf;
}

Json to_json(const EquivalenceReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["checker"] = r.checker;
  j["max_deviation"] = number_or_null(r.max_deviation);
  j["structural_failure"] = r.structural_failure;
  j["detail"] = r.detail;
  return j;
}

Json to_json(const Site& site) {
  Json roles = Json::array();
  for (const auto& [name, wire] : site.roles) roles.push_back({{"role", name}, {"wire", wire}});
  return {{"index", site.index}, {"roles", roles}};
}

Json circuit_lines(const Circuit& c) {
  Json lines = Json::array();
  std::istringstream in(serialize_circuit(c));
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

Json to_json(const DerivationReport& report) {
  Json j;
  j["schema"] = kDerivationSchema;
  j["pipeline"] = std::string(pipeline_name(report.pipeline));
  j["d"] = report.d;
  j["seed"] = report.seed;
  j["tolerance"] = tolerance();
  j["passed"] = report.passed;
  j["step_count"] = report.step_count();
  j["max_deviation"] = number_or_null(report.max_deviation());
  Json moves = Json::array();
  for (const auto& m : report.moves) {
    Json mj;
    mj["step"] = m.step;
    mj["title"] = m.step_title;
    mj["rule"] = m.rule;
    mj["site"] = to_json(m.site);
    mj["verdict"] = to_json(m.verdict);
    mj["before"] = circuit_lines(m.before);
    mj["after"] = circuit_lines(m.after);
    moves.push_back(std::move(mj));
  }
  j["moves"] = std::move(moves);
  j["final_check"] = to_json(report.final_check);
  j["final_structural_match"] = report.final_structural_match;
  j["notes"] = report.notes;
  return j;
}

Json to_json(const std::vector<IdentityCase>& cases) {
  Json arr = Json::array();
  for (const auto& c : cases) {
    Json j;
    j["identity"] = c.identity;
    j["d"] = c.d;
    j["label"] = c.label;
    j["verdict"] = to_json(c.report);
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string to_text(const DerivationReport& report) {
  std::ostringstream os;
  os << "derivation: " << pipeline_name(report.pipeline) << " pipeline, d = " << report.d
     << ", tolerance " << format_deviation(tolerance()) << "\n";
  int step = 0;
  for (const auto& m : report.moves) {
    if (m.step != step) {
      step = m.step;
      os << "\nstep " << step << ": " << m.step_title << "\n";
    }
    os << "  " << (m.verdict.pass ? "[PASS] " : "[FAIL] ") << m.rule;
    if (!m.site.roles.empty() || m.rule != "START") os << " at " << site_text(m.site);
    os << "  (" << m.verdict.checker << ", max deviation "
       << format_deviation(m.verdict.max_deviation) << ")\n";
    if (!m.verdict.detail.empty()) os << "    " << m.verdict.detail << "\n";
    os << indent(render_ascii(m.after), "    ");
  }
  os << "\nfinal: " << (report.final_check.pass ? "[PASS]" : "[FAIL]")
     << " channel equivalence with the teleportation circuit (max deviation "
     << format_deviation(report.final_check.max_deviation) << ")\n";
  os << "final: " << (report.final_structural_match ? "[PASS]" : "[FAIL]")
     << " instruction-for-instruction match\n";
  for (const auto& note : report.notes) os << "note: " << note << "\n";
  os << (report.passed ? "PASSED" : "FAILED") << ": " << report.step_count() << " steps, "
     << report.moves.size() << " moves, max deviation "
     << format_deviation(report.max_deviation()) << "\n";
  return os.str();
}

}  // namespace qswap
