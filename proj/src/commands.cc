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

#include "sarr/commands.h"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "sarr/arrangement.h"
#include "sarr/errors.h"
#include "sarr/ideals.h"
#include "sarr/invariants.h"
#include "sarr/polymatroid.h"
#include "sarr/resolution.h"

namespace sarr {
namespace {

using nlohmann::json;

// Brute-force partitions are only attempted up to this many subspaces.
constexpr int kOracleLimit = 8;

struct Context {
  Arrangement arr;
  uint64_t seed = 0;
  RankFunction rk;
  TruncatedRank trunc;
};

class Checks {
 public:
  void Add(const std::string& name, bool passed, json witness = nullptr,
           const std::string& scope = "") {
    json entry = {{"check", name}, {"passed", passed}};
    if (!scope.empty()) entry["scope"] = scope;
    if (!passed && !witness.is_null()) entry["witness"] = std::move(witness);
    all_passed_ = all_passed_ && passed;
    list_.push_back(std::move(entry));
  }
  const json& list() const { return list_; }
  bool all_passed() const { return all_passed_; }

 private:
  json list_ = json::array();
  bool all_passed_ = true;
};

json SubsetJson(Subset s) {
  std::vector<int> out;
  for (int i : Elements(s)) out.push_back(i + 1);
  return out;
}

json PartitionJson(const std::vector<Subset>& blocks) {
  json out = json::array();
  for (Subset b : blocks) out.push_back(SubsetJson(b));
  return out;
}

json VectorsJson(const std::vector<QVector>& rows) {
  json out = json::array();
  for (const QVector& row : rows) {
    json r = json::array();
    for (const Rat& x : row) r.push_back(FormatRat(x));
    out.push_back(r);
  }
  return out;
}

std::string JoinInts(const std::vector<int64_t>& v, const char* sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string PointCell(const Point& p) {
  return JoinInts(std::vector<int64_t>(p.begin(), p.end()), " ");
}

Context Load(const CommandOptions& options) {
  Context ctx;
  ctx.arr = LoadArrangement(options.input, options.seed);
  ctx.seed = options.seed.value_or(ctx.arr.seed.value_or(0));
  ctx.rk = ComputeRankFunction(ctx.arr);
  ctx.trunc = DilworthTruncation(ctx.rk);
  return ctx;
}

// All points of prod [0..d_i].
std::vector<Point> ClosedBox(const std::vector<int>& dims) {
  std::vector<Point> out;
  Point a(dims.size(), 0);
  while (true) {
    out.push_back(a);
    size_t i = a.size();
    while (i > 0 && a[i - 1] == dims[i - 1]) a[--i] = 0;
    if (i == 0) return out;
    ++a[i - 1];
  }
}

bool IsPolymatroidRank(const RankFunction& rk, json& witness) {
  const Subset full = FullSet(rk.n());
  if (rk(0) != 0) {
    witness = {{"axiom", "normalized"}};
    return false;
  }
  for (Subset a = 0; a <= full; ++a) {
    for (Subset b = 0; b <= full; ++b) {
      if ((a & b) == a && rk(a) > rk(b)) {
        witness = {{"axiom", "monotone"}, {"A", SubsetJson(a)}, {"B", SubsetJson(b)}};
        return false;
      }
      if (rk(a) + rk(b) < rk(a | b) + rk(a & b)) {
        witness = {{"axiom", "submodular"}, {"A", SubsetJson(a)}, {"B", SubsetJson(b)}};
        return false;
      }
    }
  }
  return true;
}

RunReport RunRanks(const Context& ctx, Checks& checks) {
  RunReport report;
  const int n = ctx.arr.n();
  json table = json::array();
  report.table.push_back({"subset", "rk", "rk_star", "witness_partition"});
  for (Subset s = 0; s <= FullSet(n); ++s) {
    const auto& partition = ctx.trunc.witness_partitions[s];
    table.push_back({{"subset", SubsetJson(s)},
                     {"rk", ctx.rk(s)},
                     {"rk_star", ctx.trunc(s)},
                     {"witness_partition", PartitionJson(partition)}});
    std::string blocks;
    for (Subset b : partition) blocks += SubsetToString(b);
    report.table.push_back(
        {SubsetToString(s), std::to_string(ctx.rk(s)), std::to_string(ctx.trunc(s)), blocks});
  }
  json flats = json::array();
  for (Subset b : Flats(ctx.rk)) flats.push_back(SubsetJson(b));
  report.document["results"] = {{"n", n},
                                {"ambient_dim", ctx.arr.ambient_dim},
                                {"dims", ctx.arr.dims},
                                {"table", table},
                                {"flats", flats}};
  json witness;
  checks.Add("rank_function_is_polymatroid", IsPolymatroidRank(ctx.rk, witness), witness);
  if (n <= kOracleLimit) {
    json bad = nullptr;
    for (Subset s = 0; s <= FullSet(n) && bad.is_null(); ++s) {
      const int oracle = BruteForceTruncationOracle(ctx.rk.values(), s);
      if (oracle != ctx.trunc(s)) {
        bad = {{"subset", SubsetJson(s)}, {"dp", ctx.trunc(s)}, {"oracle", oracle}};
      }
    }
    checks.Add("truncation_matches_partition_enumeration", bad.is_null(), bad);
  }
  return report;
}

RunReport RunPoints(const Context& ctx, const CommandOptions& options, Checks& checks) {
  RunReport report;
  const int n = ctx.arr.n();
  LatticePointSet full = EnumeratePoints(ctx.rk.values(), n, false);
  LatticePointSet star = EnumeratePoints(ctx.rk.values(), n, true);
  LatticePointSet dv = BoxIdealDV(ctx.arr.dims, star);
  const LatticePointSet& shown = options.star ? star : full;
  json points = json::array();
  report.table.push_back({"point"});
  for (const Point& p : shown.points) {
    points.push_back(p);
    report.table.push_back({PointCell(p)});
  }
  json dv_points = json::array();
  for (const Point& p : dv.points) dv_points.push_back(p);
  report.document["results"] = {{"set", options.star ? "P(V)*" : "P(V)"},
                                {"points", points},
                                {"count", shown.points.size()},
                                {"gamma", GammaVector(star)},
                                {"dv", dv_points}};

  GenericBases f = SampleGenericBases(ctx.arr, ctx.seed);
  report.document["results"]["bases"] = {{"certified", f.certified},
                                         {"coefficient_bound", f.coefficient_bound},
                                         {"attempts", f.attempts}};
  checks.Add("generic_bases_certified", f.certified);
  json bad_star = nullptr, bad_full = nullptr;
  for (const Point& a : ClosedBox(ctx.arr.dims)) {
    const bool none_contained = ContainedSubspaces(ctx.arr, f, a) == 0;
    if (bad_star.is_null() && none_contained != star.Contains(a)) {
      bad_star = {{"a", a}, {"no_subspace_inside", none_contained}, {"in_star", star.Contains(a)}};
    }
    const int w = static_cast<int>(SpanDim(WSpace(f, a)));
    const int size = std::accumulate(a.begin(), a.end(), 0);
    if (bad_full.is_null() && (w == size) != full.Contains(a)) {
      bad_full = {{"a", a}, {"dim_w", w}, {"in_polymatroid", full.Contains(a)}};
    }
  }
  checks.Add("star_iff_no_subspace_inside_w", bad_star.is_null(), bad_star);
  checks.Add("independent_iff_polymatroid", bad_full.is_null(), bad_full);
  return report;
}

std::vector<int> DecompositionExponents(const CommandOptions& options, int n,
                                        DecompositionMode& mode) {
  if (options.nu && options.u) throw InputError("--nu and --u are exclusive");
  if (options.nu) {
    mode = DecompositionMode::Power(*options.nu);
  } else if (options.u) {
    mode = DecompositionMode::ProductOfPowers(*options.u);
  } else {
    mode = DecompositionMode::Single();
  }
  return mode.Exponents(n);
}

RunReport RunInvariants(const Context& ctx, const CommandOptions& options, Checks& checks) {
  RunReport report;
  const int n = ctx.arr.n();
  const Subset full = FullSet(n);
  DecompositionMode mode;
  const std::vector<int> e = DecompositionExponents(options, n, mode);
  const std::vector<Subset> flats = Flats(ctx.rk);
  LatticePointSet star = EnumeratePoints(ctx.rk.values(), n, true);
  const BettiTable base = BettiFromGamma(GammaVector(star), n);
  const BettiTable betti = mode.kind == DecompositionMode::Kind::kSingle
                               ? base
                               : ProductPowersBetti(star, e);
  ProjectiveDimension pd = ComputeProjectiveDimension(ctx.trunc);
  json ass = json::array();
  std::vector<AssociatedPrime> primes = AssociatedPrimes(ctx.arr, ctx.rk, ctx.trunc, flats);
  for (const AssociatedPrime& p : primes) {
    ass.push_back({{"subset", SubsetJson(p.b)}, {"generators", VectorsJson(p.generators)}});
  }
  PrimaryDecomposition dec = ComputePrimaryDecomposition(ctx.rk, ctx.trunc, flats, mode);
  json comps = json::array();
  for (const PrimaryComponent& c : dec.components) {
    comps.push_back({{"subset", SubsetJson(c.b)}, {"multiplicity", c.multiplicity}});
  }
  // Multidegree support: the maximal points of P(V)*.
  json maximal = json::array();
  for (const Point& x : star.points) {
    bool is_max = true;
    for (const Point& y : star.points) {
      if (y == x) continue;
      bool above = true;
      for (int i = 0; i < n && above; ++i) above = y[i] >= x[i];
      if (above) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(x);
  }
  std::string ideal = "J";
  if (mode.kind == DecompositionMode::Kind::kPower) ideal = "J^" + std::to_string(*options.nu);
  if (mode.kind == DecompositionMode::Kind::kProductOfPowers) ideal = "product of powers";
  report.document["results"] = {{"ideal", ideal},
                                {"exponents", e},
                                {"betti", betti.betti},
                                {"gamma", betti.gamma},
                                {"regularity", betti.regularity},
                                {"pd", pd.pd},
                                {"pd_witness_partition", PartitionJson(pd.witness_partition)},
                                {"associated_primes", ass},
                                {"primary_decomposition", comps},
                                {"multidegree_support", maximal}};
  report.table.push_back({"i", "betti"});
  for (size_t i = 0; i < betti.betti.size(); ++i) {
    report.table.push_back({std::to_string(i), std::to_string(betti.betti[i])});
  }

  LatticePointSet dv = BoxIdealDV(ctx.arr.dims, star);
  std::vector<Point> dv_points = dv.points;
  const std::vector<int64_t> poset = PosetBetti(MakePosetIdeal(ctx.arr.dims, dv_points), dv);
  checks.Add("betti_formula_matches_poset_sum", poset == base.betti,
             json{{"formula", base.betti}, {"poset", poset}});
  const bool top_is_associated = std::any_of(
      primes.begin(), primes.end(), [&](const AssociatedPrime& p) { return p.b == full; });
  checks.Add("full_set_associated_iff_pd_is_rank_minus_one",
             top_is_associated == (pd.pd == ctx.rk(full) - 1),
             json{{"pd", pd.pd}, {"rk", ctx.rk(full)}, {"full_set_associated", top_is_associated}});
  if (mode.kind != DecompositionMode::Kind::kSingle) {
    RepeatedRank rep = MakeRepeatedRank(ctx.rk, e);
    const int m = rep.rank.n();
    LatticePointSet rep_star = EnumeratePoints(rep.rank.values(), m, true);
    const BettiTable rep_betti = BettiFromGamma(GammaVector(rep_star), m);
    checks.Add("betti_matches_repeated_arrangement", rep_betti.betti == betti.betti,
               json{{"formula", betti.betti}, {"repeated", rep_betti.betti}});
    std::vector<Subset> expected;
    for (Subset b : flats) expected.push_back(rep.Preimage(b));
    std::sort(expected.begin(), expected.end());
    checks.Add("repeated_flats_are_preimages", Flats(rep.rank) == expected);
  }
  const int g = std::accumulate(e.begin(), e.end(), 0);
  const int t_max = options.tmax.value_or(g + 2);
  std::vector<int> degrees;
  for (int t = 1; t <= t_max; ++t) degrees.push_back(t);
  std::vector<DegreeComparison> cmp = CompareDegreewise(ctx.arr, e, dec.components, degrees);
  json rows = json::array();
  json bad = nullptr;
  for (const DegreeComparison& c : cmp) {
    rows.push_back({{"t", c.t},
                    {"ideal_dim", c.ideal_dim},
                    {"intersection_dim", c.intersection_dim},
                    {"equal", c.equal},
                    {"method", c.method}});
    if (!c.equal && bad.is_null()) bad = rows.back();
  }
  report.document["results"]["decomposition_degreewise"] = rows;
  checks.Add("decomposition_degreewise", bad.is_null(), bad,
             "evidence to degree " + std::to_string(t_max));
  return report;
}

PosetIdeal PosetFromJson(const json& doc, const std::vector<int>& dims) {
  const json& gens = doc.contains("generators") ? doc["generators"] : doc;
  if (!gens.is_array()) throw InputError("poset file needs a list of generator points");
  std::vector<Point> points;
  for (const json& p : gens) {
    if (!p.is_array() || p.size() != dims.size()) {
      throw InputError("poset generator has the wrong length");
    }
    Point a;
    for (const json& x : p) {
      if (!x.is_number_integer()) throw ParseError("poset coordinates must be integers");
      a.push_back(x.get<int>());
    }
    points.push_back(std::move(a));
  }
  return MakePosetIdeal(dims, points);
}

void Corrupt(FreeComplex& complex, const std::string& how) {
  if (how.empty()) return;
  for (size_t k = complex.differentials.size(); k-- > 1;) {
    for (auto& column : complex.differentials[k]) {
      if (column.empty()) continue;
      if (how == "sign") {
        column.front().second *= Rat(-1);
      } else if (how == "constant") {
        column.front().second += SparsePoly::Constant(complex.num_vars, 1);
      } else {
        throw InputError("unknown corruption " + how);
      }
      return;
    }
  }
  throw InputError("complex has no differential entry to corrupt");
}

RunReport RunResolution(const Context& ctx, const CommandOptions& options, Checks& checks) {
  RunReport report;
  const int n = ctx.arr.n();
  LatticePointSet star = EnumeratePoints(ctx.rk.values(), n, true);
  LatticePointSet dv = BoxIdealDV(ctx.arr.dims, star);
  GenericBases f = SampleGenericBases(ctx.arr, ctx.seed);
  PosetIdeal p = options.poset ? PosetFromJson(*options.poset, ctx.arr.dims)
                               : MakePosetIdeal(ctx.arr.dims, dv.points);
  PosetIdeal reduced = ReduceToDV(p, dv);
  if (options.poset) {
    ReductionCheck red = VerifyReduction(p, reduced, f);
    checks.Add("reduction_to_dv_keeps_ideal", red.equal,
               json{{"rank_original", red.rank_original}, {"rank_reduced", red.rank_reduced}});
  }
  FreeComplex complex = Specialize(BuildGenericComplex(reduced), f, dv);
  Corrupt(complex, options.corrupt);
  const std::vector<int64_t> census = BettiCensus(complex);
  const std::vector<int64_t> expected = PosetBetti(reduced, dv);
  report.document["results"] = {{"poset_size", p.size()},
                                {"reduced_size", reduced.size()},
                                {"census", census},
                                {"length", complex.length()}};
  checks.Add("census_matches_poset_betti", census == expected,
             json{{"census", census}, {"poset_betti", expected}});
  if (!options.poset) {
    const int pd = ctx.trunc(FullSet(n));
    checks.Add("length_equals_pd", complex.length() == pd,
               json{{"length", complex.length()}, {"pd", pd}});
  }
  ChainCheck minimal = VerifyMinimality(complex);
  checks.Add("minimality", minimal.ok,
             json{{"degree", minimal.degree.value_or(0)},
                  {"column", minimal.column},
                  {"row", minimal.row},
                  {"entry", minimal.value}});
  ChainCheck square = VerifySquareZero(complex);
  checks.Add("square_zero", square.ok,
             json{{"degree", square.degree.value_or(0)},
                  {"column", square.column},
                  {"row", square.row},
                  {"value", square.value}});
  report.table.push_back({"t", "k", "dim", "rank", "method"});
  if (options.verify && minimal.ok && square.ok && !reduced.empty()) {
    const int t_max = options.tmax.value_or(n + ctx.trunc(FullSet(n)) + 2);
    std::vector<int> ts;
    for (int t = n; t <= t_max; ++t) ts.push_back(t);
    json strands = json::array();
    try {
      for (const StrandReport& s : VerifyStrands(complex, ts)) {
        strands.push_back({{"t", s.t},
                           {"dims", s.dims},
                           {"ranks", s.ranks},
                           {"ideal_dim", s.ideal_dim},
                           {"exact", s.exact},
                           {"method", s.method}});
        for (size_t k = 0; k < s.dims.size(); ++k) {
          report.table.push_back({std::to_string(s.t), std::to_string(k),
                                  std::to_string(s.dims[k]), std::to_string(s.ranks[k]),
                                  s.method});
        }
      }
      checks.Add("strand_exactness", true, nullptr,
                 "degrees " + std::to_string(n) + ".." + std::to_string(t_max));
    } catch (const TheoremViolation& e) {
      checks.Add("strand_exactness", false, json{{"message", e.what()}});
    }
    report.document["results"]["strands"] = strands;
    report.document["results"]["certified_degrees"] = ts;
  }
  if (options.export_complex) report.document["results"]["complex"] = ExportComplexJson(complex);
  return report;
}

RunReport RunHilbert(const Context& ctx, const CommandOptions& options, Checks& checks) {
  RunReport report;
  const int n = ctx.arr.n();
  if (!options.u) throw InputError("hilbert needs --u");
  LatticePointSet star = EnumeratePoints(ctx.rk.values(), n, true);
  const int64_t value = MultiviewHilbert(star, *options.u);
  report.document["results"] = {{"u", *options.u}, {"dimension", value}};
  report.table = {{"u", "dimension"},
                  {JoinInts(std::vector<int64_t>(options.u->begin(), options.u->end()), " "),
                   std::to_string(value)}};
  if (options.oracle) {
    const size_t oracle = MultiviewHilbertOracle(ctx.arr, *options.u);
    report.document["results"]["oracle"] = oracle;
    checks.Add("formula_matches_span_rank", static_cast<int64_t>(oracle) == value,
               json{{"formula", value}, {"span_rank", oracle}});
  }
  return report;
}

std::vector<Point> ParseOrder(const std::string& text, const PosetIdeal& p, uint64_t seed) {
  if (text == "default") return DefaultLinearExtension(p);
  if (text == "random") {
    std::mt19937_64 rng(seed);
    return RandomLinearExtension(p, rng);
  }
  std::vector<Point> order;
  std::stringstream points(text);
  std::string item;
  while (std::getline(points, item, ';')) {
    Point a;
    std::stringstream coords(item);
    std::string c;
    while (std::getline(coords, c, ',')) {
      try {
        size_t used = 0;
        a.push_back(std::stoi(c, &used));
        if (used != c.size()) throw ParseError("bad order coordinate '" + c + "'");
      } catch (const std::logic_error&) {
        throw ParseError("bad order coordinate '" + c + "'");
      }
    }
    order.push_back(std::move(a));
  }
  return order;
}

RunReport RunQuotients(const Context& ctx, const CommandOptions& options, Checks& checks) {
  RunReport report;
  const int n = ctx.arr.n();
  LatticePointSet star = EnumeratePoints(ctx.rk.values(), n, true);
  LatticePointSet dv = BoxIdealDV(ctx.arr.dims, star);
  GenericBases f = SampleGenericBases(ctx.arr, ctx.seed);
  PosetIdeal p = MakePosetIdeal(ctx.arr.dims, dv.points);
  std::vector<Point> order = ParseOrder(options.order, p, ctx.seed);
  json steps = json::array();
  report.table.push_back({"a", "b", "colon_dim", "w_dim", "w_in_colon", "new_generator"});
  try {
    LinearQuotientsReport trace = VerifyLinearQuotients(p, dv, f, order);
    for (const QuotientStep& s : trace.steps) {
      steps.push_back({{"a", s.a},
                       {"b", s.b},
                       {"colon_dim", s.colon_dim},
                       {"w_dim", s.w_dim},
                       {"w_in_colon", s.w_in_colon},
                       {"new_generator", s.outside_previous}});
      report.table.push_back({PointCell(s.a), PointCell(s.b), std::to_string(s.colon_dim),
                              std::to_string(s.w_dim), s.w_in_colon ? "1" : "0",
                              s.outside_previous ? "1" : "0"});
    }
    checks.Add("linear_quotients", true);
  } catch (const TheoremViolation& e) {
    checks.Add("linear_quotients", false, json{{"message", e.what()}});
  }
  json order_json = json::array();
  for (const Point& a : order) order_json.push_back(a);
  report.document["results"] = {{"order", order_json}, {"steps", steps}};
  return report;
}

}  // namespace

std::string InputDigest(const json& input, uint64_t seed) {
  const std::string canonical = input.dump() + "\n" + std::to_string(seed);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(canonical.data(), canonical.size(), digest, &length, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

RunReport RunCommand(const CommandOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx = Load(options);
  Checks checks;
  RunReport report;
  const std::string& cmd = options.command;
  try {
    if (cmd == "ranks") {
      report = RunRanks(ctx, checks);
    } else if (cmd == "points") {
      report = RunPoints(ctx, options, checks);
    } else if (cmd == "invariants") {
      report = RunInvariants(ctx, options, checks);
    } else if (cmd == "resolution") {
      report = RunResolution(ctx, options, checks);
    } else if (cmd == "hilbert") {
      report = RunHilbert(ctx, options, checks);
    } else if (cmd == "quotients") {
      report = RunQuotients(ctx, options, checks);
    } else {
      throw InputError("unknown command '" + cmd + "'");
    }
  } catch (const TheoremViolation& e) {
    checks.Add("theorem_violation", false, json{{"message", e.what()}});
  } catch (const GenericityError& e) {
    checks.Add("generic_bases_certified", false, json{{"message", e.what()}});
  }
  json doc;
  doc["command"] = cmd;
  doc["input_digest"] = InputDigest(options.input, ctx.seed);
  doc["seed"] = ctx.seed;
  doc["results"] = report.document.value("results", json::object());
  doc["verification"] = checks.list();
  doc["all_passed"] = checks.all_passed();
  if (options.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    doc["timing"] = {
        {"wall_ms", std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
  }
  report.document = std::move(doc);
  report.all_passed = checks.all_passed();
  return report;
}

std::string TableToCsv(const std::vector<std::vector<std::string>>& table) {
  std::string out;
  for (const auto& row : table) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ",";
      const bool quote = row[i].find_first_of(",\"") != std::string::npos;
      if (quote) {
        out += "\"";
        for (char c : row[i]) out += c == '"' ? std::string("\"\"") : std::string(1, c);
        out += "\"";
      } else {
        out += row[i];
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace sarr
