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

#ifndef SARR_ARRANGEMENT_H_
#define SARR_ARRANGEMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sarr/qmatrix.h"
#include "sarr/rational.h"

namespace sarr {

// Subsets of [n] are bitmasks; element i (0-based) is bit i.
using Subset = uint32_t;
// Integer point of N^n; coordinates of box points are 1-based.
using Point = std::vector<int>;

inline bool Contains(Subset s, int i) { return (s >> i) & 1u; }
inline int Cardinality(Subset s) { return __builtin_popcount(s); }
inline Subset FullSet(int n) { return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1; }
// Ascending element list of a subset.
std::vector<int> Elements(Subset s);
// 1-based rendering, e.g. "{1,3}".
std::string SubsetToString(Subset s);

struct Arrangement {
  int ambient_dim = 0;
  // One matrix per subspace; rows are a basis of V_i (redundant input rows
  // are dropped on load).
  std::vector<QMatrix> subspaces;
  std::vector<int> dims;
  std::optional<uint64_t> seed;

  int n() const { return static_cast<int>(subspaces.size()); }
};

// Validates shapes and normalizes every subspace to rank-many rows.
// Throws InputError on empty lists, zero subspaces or ragged vectors.
Arrangement MakeArrangement(int ambient_dim, std::vector<std::vector<QVector>> generators,
                            std::optional<uint64_t> seed = std::nullopt);

// Reads the JSON input document, including the {"generic": {...}} form that
// samples a linearly general arrangement. Rational entries are strings
// ("3", "-1/2", "0.25") or JSON integers.
Arrangement LoadArrangement(const nlohmann::json& document,
                            std::optional<uint64_t> seed_override = std::nullopt);

// Random arrangement with rk(A) = min(sum_{i in A} d_i, d) for every A.
Arrangement SampleLinearlyGeneral(int ambient_dim, const std::vector<int>& dims,
                                  uint64_t seed);

class RankFunction {
 public:
  RankFunction() = default;
  RankFunction(int n, std::vector<int> values);

  int n() const { return n_; }
  int operator()(Subset s) const { return values_[s]; }
  const std::vector<int>& values() const { return values_; }

 private:
  int n_ = 0;
  std::vector<int> values_;
};

// rk(A) = dim sum_{i in A} V_i for all 2^n subsets.
RankFunction ComputeRankFunction(const Arrangement& arr);

struct GenericBases {
  // f[i][j] is f_{i,j+1}.
  std::vector<std::vector<QVector>> f;
  bool certified = false;
  uint64_t seed = 0;
  int coefficient_bound = 0;
  int attempts = 0;
};

// Random invertible integer recombinations of each subspace basis, retried
// with a doubled coefficient bound until CertifyAssumption passes.
GenericBases SampleGenericBases(const Arrangement& arr, uint64_t seed);

// The input bases themselves, not yet certified.
GenericBases InputBases(const Arrangement& arr);

struct CertificationResult {
  bool certified = true;
  // First a (coordinates 0..d_i) where dim W_a misses the upper bound.
  std::optional<Point> witness;
  int witness_dim = 0;
  int witness_bound = 0;
};

// dim W_a == min_T (sum_{i not in T} a_i + rk(T)) for every a with
// 0 <= a_i <= d_i. Throws InputError if some f_ij is not in V_i or a basis
// has the wrong size.
CertificationResult CertifyAssumptionDetailed(const Arrangement& arr, const GenericBases& f);
bool CertifyAssumption(const Arrangement& arr, const GenericBases& f);

// The listed vectors f_ij, j <= a_i. Throws InputError if a_i > d_i.
std::vector<QVector> WSpace(const GenericBases& f, const Point& a);

// {i : V_i subset of span W_a}.
Subset ContainedSubspaces(const Arrangement& arr, const GenericBases& f, const Point& a);

// All B with rk(B) < rk(A) for every proper superset A, ascending bitmask.
std::vector<Subset> Flats(const RankFunction& rk);

// Basis rows of sum_{i in B} V_i.
std::vector<QVector> SubspaceSumBasis(const Arrangement& arr, Subset b);

}  // namespace sarr

#endif  // SARR_ARRANGEMENT_H_
