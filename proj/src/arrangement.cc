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

#include "sarr/arrangement.h"

#include <algorithm>
#include <limits>
#include <random>
#include <string>
#include <utility>

#include "sarr/errors.h"

namespace sarr {
namespace {

constexpr int kMaxAttempts = 20;
constexpr int kInitialBound = 10;

Rat ParseEntry(const nlohmann::json& entry) {
  if (entry.is_string()) return ParseRat(entry.get<std::string>());
  if (entry.is_number_integer()) {
    if (entry.is_number_unsigned()) return Rat(BigInt(std::to_string(entry.get<uint64_t>())));
    return Rat(BigInt(std::to_string(entry.get<int64_t>())));
  }
  throw ParseError("non-rational entry " + entry.dump() +
                   " (use an integer or a string such as \"-3/4\")");
}

std::mt19937_64 StreamFor(uint64_t seed, uint64_t stream) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

QVector RandomVector(std::mt19937_64& rng, int len, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  QVector v(len);
  for (Rat& x : v) x = dist(rng);
  return v;
}

// Independent subset of `rows`, in input order.
std::vector<QVector> IndependentRows(const std::vector<QVector>& rows, size_t dim) {
  EchelonBasis echelon(dim);
  std::vector<QVector> kept;
  for (const QVector& r : rows) {
    if (echelon.Insert(r)) kept.push_back(r);
  }
  return kept;
}

}  // namespace

std::vector<int> Elements(Subset s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1u) out.push_back(i);
  }
  return out;
}

std::string SubsetToString(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : Elements(s)) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

Arrangement MakeArrangement(int ambient_dim, std::vector<std::vector<QVector>> generators,
                            std::optional<uint64_t> seed) {
  if (ambient_dim < 1) throw InputError("ambient_dim must be at least 1");
  if (generators.empty()) throw InputError("arrangement has no subspaces");
  if (generators.size() > 16) throw InputError("at most 16 subspaces are supported");
  Arrangement arr;
  arr.ambient_dim = ambient_dim;
  arr.seed = seed;
  for (size_t i = 0; i < generators.size(); ++i) {
    for (const QVector& v : generators[i]) {
      if (static_cast<int>(v.size()) != ambient_dim) {
        throw InputError("subspace " + std::to_string(i + 1) + " has a vector of length " +
                         std::to_string(v.size()) + ", expected " +
                         std::to_string(ambient_dim));
      }
    }
    std::vector<QVector> basis = IndependentRows(generators[i], ambient_dim);
    if (basis.empty()) {
      throw InputError("subspace " + std::to_string(i + 1) + " is zero");
    }
    arr.dims.push_back(static_cast<int>(basis.size()));
    arr.subspaces.push_back(QMatrix::FromRows(basis, ambient_dim));
  }
  return arr;
}

Arrangement LoadArrangement(const nlohmann::json& document,
                            std::optional<uint64_t> seed_override) {
  if (!document.is_object()) throw InputError("input document must be a JSON object");
  std::optional<uint64_t> seed = seed_override;
  if (!seed && document.contains("seed")) {
    if (!document["seed"].is_number_integer()) throw InputError("seed must be an integer");
    seed = document["seed"].get<uint64_t>();
  }

  if (document.contains("generic")) {
    const nlohmann::json& g = document["generic"];
    if (!g.is_object() || !g.contains("ambient_dim") || !g.contains("dims") ||
        !g["ambient_dim"].is_number_integer() || !g["dims"].is_array()) {
      throw InputError("\"generic\" needs integer \"ambient_dim\" and array \"dims\"");
    }
    std::vector<int> dims;
    for (const auto& x : g["dims"]) {
      if (!x.is_number_integer()) throw InputError("dims must be integers");
      dims.push_back(x.get<int>());
    }
    Arrangement arr = SampleLinearlyGeneral(g["ambient_dim"].get<int>(), dims, seed.value_or(0));
    arr.seed = seed;
    return arr;
  }

  if (!document.contains("ambient_dim") || !document["ambient_dim"].is_number_integer()) {
    throw InputError("missing integer \"ambient_dim\"");
  }
  if (!document.contains("subspaces") || !document["subspaces"].is_array()) {
    throw InputError("missing array \"subspaces\"");
  }
  std::vector<std::vector<QVector>> generators;
  for (const auto& subspace : document["subspaces"]) {
    if (!subspace.is_array()) throw InputError("each subspace must be a list of vectors");
    std::vector<QVector> rows;
    for (const auto& vec : subspace) {
      if (!vec.is_array()) throw InputError("each generator must be a list of entries");
      QVector row;
      for (const auto& entry : vec) row.push_back(ParseEntry(entry));
      rows.push_back(std::move(row));
    }
    generators.push_back(std::move(rows));
  }
  return MakeArrangement(document["ambient_dim"].get<int>(), std::move(generators), seed);
}

Arrangement SampleLinearlyGeneral(int ambient_dim, const std::vector<int>& dims,
                                  uint64_t seed) {
  if (dims.empty()) throw InputError("arrangement has no subspaces");
  for (int d : dims) {
    if (d < 1 || d > ambient_dim) {
      throw InputError("generic dims must lie in [1, ambient_dim]");
    }
  }
  int bound = kInitialBound;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt, bound *= 2) {
    std::mt19937_64 rng = StreamFor(seed, 0x6c696e67656eull + attempt);
    std::vector<std::vector<QVector>> generators;
    for (int d : dims) {
      std::vector<QVector> rows;
      for (int j = 0; j < d; ++j) rows.push_back(RandomVector(rng, ambient_dim, bound));
      generators.push_back(std::move(rows));
    }
    Arrangement arr;
    try {
      arr = MakeArrangement(ambient_dim, std::move(generators), seed);
    } catch (const InputError&) {
      continue;
    }
    if (arr.dims != dims) continue;
    const RankFunction rk = ComputeRankFunction(arr);
    bool general = true;
    for (Subset s = 0; s <= FullSet(arr.n()) && general; ++s) {
      int total = 0;
      for (int i : Elements(s)) total += dims[i];
      general = rk(s) == std::min(total, ambient_dim);
    }
    if (general) return arr;
  }
  throw GenericityError("could not sample a linearly general arrangement");
}

RankFunction::RankFunction(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != (size_t{1} << n_)) throw InputError("rank table has wrong size");
}

RankFunction ComputeRankFunction(const Arrangement& arr) {
  const int n = arr.n();
  std::vector<int> values(size_t{1} << n, 0);
  for (Subset s = 1; s <= FullSet(n); ++s) {
    std::vector<QVector> rows;
    for (int i : Elements(s)) {
      for (QVector& r : arr.subspaces[i].RowList()) rows.push_back(std::move(r));
    }
    values[s] = static_cast<int>(SpanDim(rows));
  }
  return RankFunction(n, std::move(values));
}

GenericBases InputBases(const Arrangement& arr) {
  GenericBases f;
  for (const QMatrix& m : arr.subspaces) f.f.push_back(m.RowList());
  return f;
}

GenericBases SampleGenericBases(const Arrangement& arr, uint64_t seed) {
  int bound = kInitialBound;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt, bound *= 2) {
    std::mt19937_64 rng = StreamFor(seed, attempt);
    GenericBases f;
    f.seed = seed;
    f.coefficient_bound = bound;
    f.attempts = attempt + 1;
    for (int i = 0; i < arr.n(); ++i) {
      const int di = arr.dims[i];
      const std::vector<QVector> basis = arr.subspaces[i].RowList();
      std::vector<QVector> combos;
      // A singular recombination just gets redrawn from the same stream.
      do {
        combos.clear();
        for (int j = 0; j < di; ++j) combos.push_back(RandomVector(rng, di, bound));
      } while (static_cast<int>(SpanDim(combos)) != di);
      std::vector<QVector> fi;
      for (const QVector& c : combos) {
        QVector v(arr.ambient_dim);
        for (int k = 0; k < di; ++k) {
          for (int x = 0; x < arr.ambient_dim; ++x) v[x] += c[k] * basis[k][x];
        }
        fi.push_back(std::move(v));
      }
      f.f.push_back(std::move(fi));
    }
    if (CertifyAssumption(arr, f)) {
      f.certified = true;
      return f;
    }
  }
  throw GenericityError("no generic collection of bases after " +
                        std::to_string(kMaxAttempts) + " attempts");
}

CertificationResult CertifyAssumptionDetailed(const Arrangement& arr, const GenericBases& f) {
  const int n = arr.n();
  if (static_cast<int>(f.f.size()) != n) throw InputError("bases for wrong number of subspaces");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(f.f[i].size()) != arr.dims[i]) {
      throw InputError("subspace " + std::to_string(i + 1) + " needs " +
                       std::to_string(arr.dims[i]) + " basis vectors");
    }
    const std::vector<QVector> basis = arr.subspaces[i].RowList();
    for (size_t j = 0; j < f.f[i].size(); ++j) {
      if (static_cast<int>(f.f[i][j].size()) != arr.ambient_dim ||
          !SolveMembership(f.f[i][j], basis)) {
        throw InputError("f_" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         " does not lie in V_" + std::to_string(i + 1));
      }
    }
    if (static_cast<int>(SpanDim(f.f[i])) != arr.dims[i]) {
      throw InputError("vectors given for V_" + std::to_string(i + 1) + " are not a basis");
    }
  }

  const RankFunction rk = ComputeRankFunction(arr);
  CertificationResult result;
  Point a(n, 0);
  while (true) {
    int bound = std::numeric_limits<int>::max();
    for (Subset t = 0; t <= FullSet(n); ++t) {
      int value = rk(t);
      for (int i = 0; i < n; ++i) {
        if (!Contains(t, i)) value += a[i];
      }
      bound = std::min(bound, value);
    }
    const int dim = static_cast<int>(SpanDim(WSpace(f, a)));
    if (dim > bound) {
      throw TheoremViolation("dim W_a exceeds the subspace-sum bound");
    }
    if (dim < bound) {
      result.certified = false;
      result.witness = a;
      result.witness_dim = dim;
      result.witness_bound = bound;
      return result;
    }
    int i = 0;
    while (i < n && a[i] == arr.dims[i]) a[i++] = 0;
    if (i == n) break;
    ++a[i];
  }
  return result;
}

bool CertifyAssumption(const Arrangement& arr, const GenericBases& f) {
  return CertifyAssumptionDetailed(arr, f).certified;
}

std::vector<QVector> WSpace(const GenericBases& f, const Point& a) {
  if (a.size() != f.f.size()) throw InputError("point has wrong number of coordinates");
  std::vector<QVector> out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] > static_cast<int>(f.f[i].size())) {
      throw InputError("coordinate " + std::to_string(i + 1) + " of a is outside [0, d_i]");
    }
    for (int j = 0; j < a[i]; ++j) out.push_back(f.f[i][j]);
  }
  return out;
}

Subset ContainedSubspaces(const Arrangement& arr, const GenericBases& f, const Point& a) {
  const std::vector<QVector> w = WSpace(f, a);
  Subset t = 0;
  for (int i = 0; i < arr.n(); ++i) {
    bool inside = true;
    for (const QVector& v : arr.subspaces[i].RowList()) {
      if (w.empty() || !SolveMembership(v, w)) {
        inside = false;
        break;
      }
    }
    if (inside) t |= Subset{1} << i;
  }
  return t;
}

std::vector<Subset> Flats(const RankFunction& rk) {
  std::vector<Subset> out;
  const Subset full = FullSet(rk.n());
  for (Subset b = 0; b <= full; ++b) {
    bool closed = true;
    for (int i = 0; i < rk.n() && closed; ++i) {
      if (!Contains(b, i) && rk(b | (Subset{1} << i)) == rk(b)) closed = false;
    }
    if (closed) out.push_back(b);
  }
  return out;
}

std::vector<QVector> SubspaceSumBasis(const Arrangement& arr, Subset b) {
  std::vector<QVector> rows;
  for (int i : Elements(b)) {
    for (QVector& r : arr.subspaces[i].RowList()) rows.push_back(std::move(r));
  }
  return IndependentRows(rows, arr.ambient_dim);
}

}  // namespace sarr
