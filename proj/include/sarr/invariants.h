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

#ifndef SARR_INVARIANTS_H_
#define SARR_INVARIANTS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sarr/arrangement.h"
#include "sarr/polymatroid.h"
#include "sarr/polynomial.h"

namespace sarr {

struct BettiTable {
  std::vector<int64_t> betti;  // indexed by homological degree
  std::vector<int64_t> gamma;
  int regularity = 0;          // the resolution is linear: always n
};

// sum_i beta_i z^i = sum_j gamma_j (1 + z)^j.
BettiTable BettiFromGamma(std::span<const int64_t> gamma, int n);

struct ProjectiveDimension {
  int pd = 0;
  std::vector<Subset> witness_partition;  // a partition of [n] attaining rk*([n])
};

ProjectiveDimension ComputeProjectiveDimension(const TruncatedRank& trunc);

// Flats B with rk*(B) = rk(B) - 1, by cardinality and then bitmask.
std::vector<Subset> AssociatedPrimeSets(const RankFunction& rk, const TruncatedRank& trunc,
                                        std::span<const Subset> flats);

struct AssociatedPrime {
  Subset b = 0;
  std::vector<QVector> generators;  // basis of sum_{i in B} V_i
};

std::vector<AssociatedPrime> AssociatedPrimes(const Arrangement& arr, const RankFunction& rk,
                                              const TruncatedRank& trunc,
                                              std::span<const Subset> flats);

// Which ideal is being decomposed: J, J^nu, or I_1^{u_1} ... I_n^{u_n}.
struct DecompositionMode {
  enum class Kind { kSingle, kPower, kProductOfPowers };
  Kind kind = Kind::kSingle;
  int nu = 1;
  std::vector<int> u;

  static DecompositionMode Single() { return {}; }
  static DecompositionMode Power(int nu) { return {Kind::kPower, nu, {}}; }
  static DecompositionMode ProductOfPowers(std::vector<int> u) {
    return {Kind::kProductOfPowers, 1, std::move(u)};
  }
  // Exponent vector of the decomposed ideal as a product of powers of I_i.
  std::vector<int> Exponents(int n) const;
};

struct PrimaryComponent {
  Subset b = 0;
  int multiplicity = 0;  // the component is I_B^multiplicity
};

struct PrimaryDecomposition {
  std::vector<PrimaryComponent> components;
};

// Throws InputError for nu < 1 or a zero entry of u.
PrimaryDecomposition ComputePrimaryDecomposition(const RankFunction& rk,
                                                 const TruncatedRank& trunc,
                                                 std::span<const Subset> flats,
                                                 const DecompositionMode& mode);

// beta_i = sum_{x in P(V)*} C(|x|, i) prod_j C(u_j + x_j - 1, x_j).
// Throws InputError if some u_j < 1.
BettiTable ProductPowersBetti(const LatticePointSet& star_points, std::span<const int> u);

struct PowersInvariants {
  int pd = 0;
  std::vector<Subset> associated;
  BettiTable betti;
};

PowersInvariants ComputePowersInvariants(const RankFunction& rk, const TruncatedRank& trunc,
                                         std::span<const Subset> flats,
                                         const LatticePointSet& star_points, int nu);

// sum_{x in P(V)*} prod_j C(u_j + x_j - 1, x_j); zero entries of u allowed.
int64_t MultiviewHilbert(const LatticePointSet& star_points, std::span<const int> u);

// All products prod_i (u_i basis vectors of V_i, chosen with repetition):
// generators of I_1^{u_1} ... I_n^{u_n}, homogeneous of degree |u|.
std::vector<SparsePoly> ProductOfPowersGenerators(const Arrangement& arr,
                                                  std::span<const int> u);

// dim_K V_1^{u_1} ... V_n^{u_n} inside S_{|u|}, by span rank.
size_t MultiviewHilbertOracle(const Arrangement& arr, std::span<const int> u);

// dim_K (intersection over components of I_B^m)_t. Each power of a linear
// ideal is cut out by the terms of s-degree < m after a coordinate change
// that turns I_B into (s_1, ..., s_r).
size_t ComponentIntersectionDim(const Arrangement& arr,
                                std::span<const PrimaryComponent> components, int t);

struct DegreeComparison {
  int t = 0;
  size_t ideal_dim = 0;         // dim (I_1^{u_1} ... I_n^{u_n})_t
  size_t intersection_dim = 0;  // dim (intersection of components)_t
  bool equal = false;
  // "modular" when matching lower bounds over Z/p pin both dimensions,
  // "exact" when ranks were recomputed over Q.
  std::string method;
};

// Evidence only: compares the two sides in the listed degrees.
std::vector<DegreeComparison> CompareDegreewise(const Arrangement& arr,
                                                std::span<const int> exponents,
                                                std::span<const PrimaryComponent> components,
                                                std::span<const int> degrees);

// Components ({i}, 1) for i in [n]: the intersection I_1 cap ... cap I_n.
std::vector<PrimaryComponent> IntersectionOfFactors(int n);

}  // namespace sarr

#endif  // SARR_INVARIANTS_H_
