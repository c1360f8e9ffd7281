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

// Command-line front end: sarr <command> <input.json> [options].

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sarr/commands.h"
#include "sarr/errors.h"

namespace {

nlohmann::json ReadJson(const std::string& path) {
  std::ifstream in;
  std::istream* stream = &std::cin;
  if (path != "-") {
    in.open(path);
    if (!in) throw sarr::InputError("cannot open " + path);
    stream = &in;
  }
  try {
    return nlohmann::json::parse(*stream);
  } catch (const nlohmann::json::parse_error& e) {
    throw sarr::ParseError(path + ": " + e.what());
  }
}

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw sarr::ParseError("bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      throw sarr::ParseError("bad integer '" + item + "'");
    }
  }
  return out;
}

int Fail(const char* kind, const std::string& message, int code) {
  nlohmann::json err = {{"error", kind}, {"message", message}};
  std::cerr << err.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subspace arrangement product ideals: invariants and resolutions"};
  app.require_subcommand(1);

  std::string input_path;
  std::string poset_path;
  std::string u_text;
  std::string export_path;
  uint64_t seed = 0;
  int nu = 0;
  int tmax = 0;
  bool csv = false;
  sarr::CommandOptions options;

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", input_path, "Arrangement JSON ('-' for stdin)")->required();
    sub->add_option("--seed", seed, "Override the input seed");
    sub->add_flag("--csv", csv, "Print the main table as CSV instead of JSON");
    sub->add_flag("--timing", options.timing, "Include wall-clock timing");
  };
  CLI::App* ranks = app.add_subcommand("ranks", "rk and rk* for every subset");
  common(ranks);
  CLI::App* points = app.add_subcommand("points", "Lattice points, gamma vector, D_V");
  common(points);
  points->add_flag("--star", options.star, "List P(V)* instead of P(V)");
  CLI::App* invariants =
      app.add_subcommand("invariants", "Betti numbers, pd, Ass, primary decomposition");
  common(invariants);
  CLI::Option* nu_opt = invariants->add_option("--nu", nu, "Power of J");
  CLI::Option* u_opt = invariants->add_option("--u", u_text, "Exponents u1,...,un");
  nu_opt->excludes(u_opt);
  CLI::Option* inv_tmax =
      invariants->add_option("--tmax", tmax, "Last degree of the decomposition check");
  CLI::App* resolution = app.add_subcommand("resolution", "Build and verify the resolution");
  common(resolution);
  resolution->add_flag("--verify", options.verify, "Run strand exactness checks");
  CLI::Option* res_tmax = resolution->add_option("--tmax", tmax, "Last strand degree");
  resolution->add_option("--poset", poset_path, "Poset ideal JSON ({\"generators\": [...]})");
  resolution->add_option("--export", export_path, "Write the complex as JSON to this file");
  resolution->add_option("--corrupt", options.corrupt, "Negative control: sign or constant")
      ->check(CLI::IsMember({"sign", "constant"}));
  CLI::App* hilbert = app.add_subcommand("hilbert", "Multiview Hilbert function at u");
  common(hilbert);
  hilbert->add_option("--u", u_text, "Multidegree u1,...,un")->required();
  hilbert->add_flag("--oracle", options.oracle, "Compare with the span-rank oracle");
  CLI::App* quotients = app.add_subcommand("quotients", "Linear quotients trace");
  common(quotients);
  quotients->add_option("--order", options.order,
                        "default, random, or points like 1,1;2,1;1,2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return Fail("UsageError", e.what(), 1);
  }

  try {
    options.command = app.get_subcommands().front()->get_name();
    options.input = ReadJson(input_path);
    for (CLI::App* sub : app.get_subcommands()) {
      if (sub->count("--seed") > 0) options.seed = seed;
    }
    if (*nu_opt) options.nu = nu;
    if (!u_text.empty()) options.u = ParseIntList(u_text);
    if (*inv_tmax || *res_tmax) options.tmax = tmax;
    if (!poset_path.empty()) options.poset = ReadJson(poset_path);
    options.export_complex = !export_path.empty();

    sarr::RunReport report = sarr::RunCommand(options);
    if (options.export_complex && report.document["results"].contains("complex")) {
      std::ofstream out(export_path);
      if (!out) throw sarr::InputError("cannot write " + export_path);
      out << report.document["results"]["complex"].dump(1) << "\n";
      report.document["results"].erase("complex");
      report.document["results"]["complex_file"] = export_path;
    }
    if (csv) {
      std::cout << sarr::TableToCsv(report.table);
    } else {
      std::cout << report.document.dump(2) << "\n";
    }
    return report.all_passed ? 0 : 2;
  } catch (const sarr::TheoremViolation& e) {
    return Fail("TheoremViolation", e.what(), 2);
  } catch (const sarr::GenericityError& e) {
    return Fail("GenericityError", e.what(), 2);
  } catch (const sarr::ParseError& e) {
    return Fail("ParseError", e.what(), 1);
  } catch (const sarr::InputError& e) {
    return Fail("InputError", e.what(), 1);
  } catch (const sarr::OracleScopeError& e) {
    return Fail("OracleScopeError", e.what(), 1);
  } catch (const nlohmann::json::exception& e) {
    return Fail("InputError", e.what(), 1);
  }
}
