// Copyright 2026 The Authors.
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

#ifndef SARR_COMMANDS_H_
#define SARR_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace sarr {

struct CommandOptions {
  std::string command;  // ranks, points, invariants, resolution, hilbert, quotients
  nlohmann::json input;
  std::optional<uint64_t> seed;
  bool timing = false;

  // points
  bool star = false;
  // invariants, hilbert
  std::optional<int> nu;
  std::optional<std::vector<int>> u;
  // invariants (decomposition window) and resolution (strand window)
  std::optional<int> tmax;
  // resolution
  bool verify = false;
  std::optional<nlohmann::json> poset;
  bool export_complex = false;
  std::string corrupt;  // "", "sign" or "constant"; negative controls
  // hilbert
  bool oracle = false;
  // quotients: "default", "random", or points such as "1,1;2,1;1,2"
  std::string order = "default";
};

struct RunReport {
  nlohmann::json document;
  bool all_passed = true;
  // Tabular view of the main result section.
  std::vector<std::vector<std::string>> table;
};

// Hex SHA-256 of the canonical input serialization followed by the seed.
std::string InputDigest(const nlohmann::json& input, uint64_t seed);

// Runs one command. InputError and ParseError propagate; verification
// failures (including TheoremViolation) are recorded in the report.
RunReport RunCommand(const CommandOptions& options);

std::string TableToCsv(const std::vector<std::vector<std::string>>& table);

}  // namespace sarr

#endif  // SARR_COMMANDS_H_
