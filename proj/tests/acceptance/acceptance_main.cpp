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

// Acceptance checks, one line per criterion. Exit status is nonzero if any
// criterion fails. Reference values come from the digit-arithmetic oracles in
// tests/oracles.hpp, never from the library under test.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "qswap/circuit_io.hpp"
#include "qswap/cli.hpp"
#include "qswap/derivation.hpp"
#include "qswap/gates.hpp"
#include "qswap/identities.hpp"
#include "qswap/protocols.hpp"
#include "qswap/rewrite.hpp"
#include "qswap/sim.hpp"

namespace {

using namespace qswap;
namespace fs = std::filesystem;

constexpr double kTol = 1e-10;
constexpr double kFidelityTol = 1e-9;

struct Outcome {
  bool pass = true;
  double worst = 0.0;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
  void deviation(double dev, const std::string& what, double tol = kTol) {
    worst = std::max(worst, dev);
    require(dev < tol, what);
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double time_limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && seconds >= time_limit_s) {
    o.require(false, "took " + std::to_string(seconds) + " s, limit " +
                         std::to_string(time_limit_s) + " s");
  }
  std::printf("[%s] %s %s (max deviation %.2g, %.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", id,
              title, o.worst, seconds, o.note.empty() ? "" : ": ", o.note.c_str());
  if (!o.pass) ++failures;
}

std::string at(int d) { return " at d=" + std::to_string(d); }

Circuit before_drop(Dimension dim) {
  const GateStyle style = default_style(dim);
  Circuit c = derivation_start(dim, style);
  c = apply_rule(c, RuleId::kExpand, {0, {{"ancilla", kAncillaWire}}}, style);
  return apply_rule(c, RuleId::kConj, {4, {}}, style);
}

std::string cli_output(std::vector<std::string> args) {
  args.insert(args.begin(), "qswap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str();
}

std::vector<fs::path> corpus() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(fs::path(QSWAP_TEST_DATA_DIR) / "circuits")) {
    if (e.path().extension() == ".qc") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

int main() {
  criterion("AC1", "swap exchanges |x,y> -> |y,x>", 1.0, [](Outcome& o) {
    for (int d : {2, 3, 5, 7}) {
      const auto swap = oracle::permutation(d, 2, [](const oracle::Digits& x) {
        return oracle::Digits{x[1], x[0]};
      });
      o.deviation(oracle::distance(circuit_unitary(build_swap(Dimension(d))), swap), "swap" + at(d));
    }
    o.require(build_swap(Dimension(2)).size() == 3, "qubit swap is not three gates");
  });

  criterion("AC2", "ancilla expansion of the controlled shift", 1.0, [](Outcome& o) {
    for (int d : {2, 3, 5, 7}) {
      const Dimension dim(d);
      Circuit single(dim, 3);
      single.gate(GateId::CX, {0, 2});
      const Circuit expanded =
          apply_rule(single, RuleId::kExpand, {0, {{"ancilla", 1}}}, default_style(dim));
      const auto r = check_unitary_equiv(single, expanded);
      o.require(r.pass, "checker rejects expansion" + at(d));
      o.deviation(r.max_deviation, "checker deviation" + at(d));
      const auto digits = oracle::permutation(d, 3, [d](const oracle::Digits& x) {
        return oracle::Digits{x[0], x[1], oracle::mod(x[2] + x[0], d)};
      });
      o.deviation(oracle::distance(circuit_unitary(expanded), digits), "digit map" + at(d));
    }
  });

  criterion("AC3", "conjugation identities and controlled-phase symmetry", 0, [](Outcome& o) {
    using oracle::embed;
    using oracle::gate;
    using oracle::mul;
    for (int d : {2, 3, 5, 7}) {
      const auto f2 = embed(gate(GateId::F, d), {1}, d, 2);
      const auto fd2 = embed(gate(GateId::FD, d), {1}, d, 2);
      const auto cx = gate(GateId::CX, d);
      const auto cxd = gate(GateId::CXD, d);
      const auto cz12 = gate(GateId::CZ, d);
      const auto czd12 = gate(GateId::CZD, d);
      const auto czd21 = embed(gate(GateId::CZD, d), {1, 0}, d, 2);
      const auto cz21 = embed(gate(GateId::CZ, d), {1, 0}, d, 2);
      o.deviation(oracle::distance(mul(cx, f2), mul(f2, cz12)), "CX F = F CZ" + at(d));
      o.deviation(oracle::distance(cx, mul(mul(f2, cz12), fd2)), "CX = F CZ FD" + at(d));
      o.deviation(oracle::distance(cxd, mul(mul(f2, czd12), fd2)), "CXD = F CZD FD" + at(d));
      o.deviation(oracle::distance(cxd, mul(mul(f2, czd21), fd2)), "CXD = F CZD_21 FD" + at(d));
      o.deviation(oracle::distance(cz12, cz21), "CZ symmetry" + at(d));
      o.deviation(oracle::distance(czd12, czd21), "CZD symmetry" + at(d));
      // The library's own matrices and named checks agree.
      for (GateId g : {GateId::CX, GateId::CXD, GateId::CZ, GateId::CZD, GateId::F, GateId::FD}) {
        o.deviation(oracle::distance(gate_matrix(g, Dimension(d)), gate(g, d)),
                    std::string(mnemonic(g)) + " matrix" + at(d));
      }
      for (const char* name : {"fig4", "eq18", "eq19", "cz-symmetry"}) {
        for (const auto& c : verify_identity(name, Dimension(d))) {
          o.require(c.report.pass, std::string(name) + ": " + c.label + at(d));
          o.deviation(c.report.max_deviation, std::string(name) + at(d));
        }
      }
    }
  });

  criterion("AC4", "bit-rotation invariance of F|0> and coupling removal", 0, [](Outcome& o) {
    for (int d : {2, 3, 5, 7}) {
      const auto f = oracle::gate(GateId::F, d);
      std::vector<oracle::C> zero(d);
      zero[0] = 1.0;
      const auto chi = oracle::apply(f, zero);
      for (int k = 0; k < d; ++k) {
        const auto shifted = oracle::apply(oracle::power(oracle::gate(GateId::X, d), k), chi);
        double dev = 0.0;
        for (int i = 0; i < d; ++i) dev += std::norm(shifted[i] - chi[i]);
        o.deviation(std::sqrt(dev), "X^" + std::to_string(k) + " F|0>" + at(d));
      }
      const Dimension dim(d);
      const Circuit before = before_drop(dim);
      const Circuit after = apply_rule(before, RuleId::kDrop, {0, {}});
      const auto r = check_equiv_on_inputs(before, after, {{kAncillaWire, ChiLabel{}}});
      o.require(r.pass, "R-DROP certification" + at(d));
      o.deviation(r.max_deviation, "R-DROP deviation" + at(d));
      o.require(!check_equiv_on_inputs(before, after, {{kAncillaWire, BasisLabel{1}}}).pass,
                "removal accepted with ancilla |1>" + at(d));
    }
  });

  criterion("AC5", "measuring a control commutes with its controlled gate", 0, [](Outcome& o) {
    for (int d : {2, 3}) {
      const Dimension dim(d);
      for (auto [u, cu] : {std::pair{GateId::X, GateId::CX}, std::pair{GateId::Z, GateId::CZ},
                           std::pair{GateId::XD, GateId::CXD}, std::pair{GateId::ZD, GateId::CZD}}) {
        Circuit coherent(dim, 2), classical(dim, 2);
        coherent.gate(cu, {0, 1}).measure(0, "m");
        classical.measure(0, "m").classical_gate("m", u, 1);
        const std::string tag = std::string(mnemonic(u)) + at(d);
        const auto r = check_channel_equiv(coherent, classical);
        o.require(r.pass, "channel check " + tag);
        o.deviation(r.max_deviation, "channel deviation " + tag);
        const auto k1 = oracle::kraus(coherent);
        const auto k2 = oracle::kraus(classical);
        const KrausMap lib = kraus_map(classical);
        for (const auto& [m, op] : k1) {
          o.deviation(oracle::distance(op, k2.at(m)), "oracle Kraus " + tag);
          o.deviation(oracle::distance(lib.at(m), op), "library Kraus " + tag);
        }
        // Branch probabilities are the weights |<m|_0 psi>|^2 of the control.
        Rng rng(500 + d);
        const KrausMap kc = kraus_map(coherent);
        for (int trial = 0; trial < 20; ++trial) {
          const StateVector in = haar_random_state(dim, 2, rng);
          const auto pc = outcome_distribution(kc, in);
          const auto pl = outcome_distribution(lib, in);
          for (int m = 0; m < d; ++m) {
            double weight = 0.0;
            for (int y = 0; y < d; ++y) weight += std::norm(in[m * d + y]);
            o.deviation(std::abs(pc.at({m}) - weight), "coherent probability " + tag);
            o.deviation(std::abs(pl.at({m}) - weight), "classical probability " + tag);
          }
        }
      }
    }
  });

  criterion("AC6", "derivation replay from half-swap to teleportation", 10.0, [](Outcome& o) {
    std::vector<std::pair<Pipeline, int>> runs{{Pipeline::kQubit, 2}, {Pipeline::kQudit, 2},
                                               {Pipeline::kQudit, 3}, {Pipeline::kQudit, 5}};
    for (auto [pipeline, d] : runs) {
      const std::string tag = std::string(pipeline_name(pipeline)) + at(d);
      const DerivationReport r = run_derivation(pipeline, Dimension(d));
      o.require(r.step_count() == 7, "step count " + tag);
      for (const auto& m : r.moves) {
        o.require(m.verdict.pass, m.rule + " in step " + std::to_string(m.step) + " " + tag);
        o.deviation(m.verdict.max_deviation, m.rule + " " + tag);
      }
      const auto final_check = check_channel_equiv(r.final_circuit(), build_teleport(Dimension(d)));
      o.require(final_check.pass && r.passed, "final channel equivalence " + tag);
      o.deviation(final_check.max_deviation, "final deviation " + tag);
    }
  });

  criterion("AC7", "teleportation on every outcome branch", 30.0, [](Outcome& o) {
    for (int d : {2, 3, 5}) {
      const Dimension dim(d);
      Rng rng(700 + d);
      for (int trial = 0; trial < 100; ++trial) {
        const StateVector psi = haar_random_state(dim, 1, rng);
        for (int m = 0; m < d; ++m) {
          for (int t = 0; t < d; ++t) {
            const TeleportOutcome out = teleport_branch(dim, psi, m, t);
            // Bob's state against psi computed directly from the amplitudes.
            oracle::C overlap = 0.0;
            for (int k = 0; k < d; ++k) overlap += std::conj(psi[k]) * out.bob_state[k];
            const double fid = std::norm(overlap);
            o.deviation(1.0 - fid, "Bob fidelity" + at(d), kFidelityTol);
            o.deviation(1.0 - out.fidelity, "reported fidelity" + at(d), kFidelityTol);
            o.deviation(1.0 - out.alice_chi_overlap, "Alice chi overlap" + at(d), kFidelityTol);
            o.deviation(std::abs(out.record.total_probability() - 1.0 / (d * d)),
                        "branch probability" + at(d));
          }
        }
      }
    }
  });

  criterion("AC8", "Kraus completeness of every constructed circuit", 0, [](Outcome& o) {
    auto check = [&](const Circuit& c, const std::string& what) {
      o.deviation(kraus_map(c).completeness_deviation(), what);
    };
    for (int d : {2, 3, 5, 7}) {
      const Dimension dim(d);
      check(build_swap(dim), "swap" + at(d));
      check(build_half_swap(dim), "half-swap" + at(d));
      check(build_epr(dim).circuit, "epr" + at(d));
      check(build_bbc(dim), "bbc" + at(d));
      check(build_bbc(dim, GateStyle::kQudit), "bbc qudit" + at(d));
      check(build_teleport(dim), "teleport" + at(d));
      check(build_teleport(dim, GateStyle::kQudit), "teleport qudit" + at(d));
    }
    for (auto [pipeline, d] : {std::pair{Pipeline::kQubit, 2}, std::pair{Pipeline::kQudit, 2},
                               std::pair{Pipeline::kQudit, 3}, std::pair{Pipeline::kQudit, 5}}) {
      for (const auto& m : run_derivation(pipeline, Dimension(d)).moves) {
        check(m.after, "derivation " + m.rule + at(d));
      }
    }
    for (const auto& path : corpus()) check(load_circuit(path), path.filename().string());
  });

  criterion("AC9", "circuit file round trip and reproducible reports", 0, [](Outcome& o) {
    const auto files = corpus();
    o.require(files.size() == 20, "corpus has " + std::to_string(files.size()) + " files");
    bool measure = false, cgate = false, io = false;
    std::set<GateId> gates;
    for (const auto& path : files) {
      const Circuit first = load_circuit(path);
      const std::string text = serialize_circuit(first);
      const Circuit second = parse_circuit(text);
      o.require(first == second, "round trip changes " + path.filename().string());
      o.require(serialize_circuit(second) == text, "serialization not a fixpoint for " +
                                                       path.filename().string());
      for (const auto& instr : first.instructions()) {
        if (auto* g = std::get_if<GateOp>(&instr)) gates.insert(g->gate);
        measure |= std::holds_alternative<MeasureOp>(instr);
        cgate |= std::holds_alternative<ClassicalGateOp>(instr);
      }
      for (Wire w = 0; w < first.n_wires(); ++w) io |= first.input(w) || first.output(w);
    }
    o.require(gates.size() == std::size(kAllGates) && measure && cgate && io,
              "corpus misses an instruction kind");

    const std::string teleport_file = (fs::path(QSWAP_TEST_DATA_DIR) / "circuits" /
                                       "teleport_d5.qc").string();
    const std::vector<std::vector<std::string>> invocations{
        {"teleport", "--d", "3", "--state", "haar", "--trials", "50", "--seed", "7", "--format",
         "json"},
        {"run", "--circuit", teleport_file, "--input", "haar:4,0,0", "--seed", "9", "--format",
         "json"},
        {"derive", "--pipeline", "qudit", "--d", "3", "--format", "json"},
        {"verify", "--identity", "fig9-defer", "--d", "2,3", "--format", "json"}};
    for (const auto& args : invocations) {
      const std::string a = cli_output(args);
      const std::string b = cli_output(args);
      o.require(a == b, "output differs between runs of '" + args[0] + "'");
      o.require(a.rfind("0\n", 0) == 0, "'" + args[0] + "' did not exit 0");
    }
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
