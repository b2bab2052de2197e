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

// Text and JSON renderings of derivation and verification results. JSON
// objects keep insertion order so repeated runs serialize byte for byte.

#ifndef QSWAP_REPORT_HPP
#define QSWAP_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "qswap/derivation.hpp"
#include "qswap/identities.hpp"
#include "qswap/rewrite.hpp"

namespace qswap {

using Json = nlohmann::ordered_json;

inline constexpr const char* kDerivationSchema = "qswap.derivation/1";
inline constexpr const char* kVerifySchema = "qswap.verify/1";
inline constexpr const char* kTeleportSchema = "qswap.teleport/1";
inline constexpr const char* kRunSchema = "qswap.run/1";
inline constexpr const char* kUnitarySchema = "qswap.unitary/1";

/// Non-finite deviations (structural failures) become null.
Json to_json(const EquivalenceReport& r);
Json to_json(const Site& site);
Json to_json(const DerivationReport& report);
Json to_json(const std::vector<IdentityCase>& cases);

/// Circuit text split into lines, the form circuits take inside reports.
Json circuit_lines(const Circuit& c);

std::string to_text(const DerivationReport& report);

/// "%.17g%+.17gi", with negative zero printed as zero.
std::string format_complex(Complex z);

/// Shortest-form deviation for text reports, e.g. "3.1e-16".
std::string format_deviation(double deviation);

}  // namespace qswap

#endif  // QSWAP_REPORT_HPP
