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

#ifndef SARR_POLYMATROID_H_
#define SARR_POLYMATROID_H_

#include <span>
#include <vector>

#include "sarr/arrangement.h"

namespace sarr {

// Dilworth truncation rk*(A) = min over partitions {A_1..A_p} of A of
// sum_c rk(A_c) - p, with rk*(empty) = 0.
struct TruncatedRank {
  int n = 0;
  std::vector<int> values;
  // One minimizing partition per subset (blocks as bitmasks, ascending by
  // smallest element). Empty for the empty set.
  std::vector<std::vector<Subset>> witness_partitions;

  int operator()(Subset s) const { return values[s]; }
};

// Dynamic program over first blocks: rk*(A) = min over B subset of A with
// min(A) in B of rk(B) - 1 + rk*(A \ B). O(3^n).
TruncatedRank DilworthTruncation(const RankFunction& rk);

// Naive walk over all set partitions of A (restricted growth strings), no
// memoization. Throws OracleScopeError for |A| > 10.
int BruteForceTruncationOracle(std::span<const int> rank_values, Subset a);

enum class PointSetKind { kPolymatroid, kTruncated, kGeneratorBox };

struct LatticePointSet {
  int n = 0;
  PointSetKind kind = PointSetKind::kPolymatroid;
  // Lexicographically sorted.
  std::vector<Point> points;

  bool Contains(const Point& p) const;
};

// All x in N^n with sum_{i in A} x_i <= rank(A) - (strict ? 1 : 0) for every
// nonempty A. `rank_values` is indexed by bitmask (size 2^n).
LatticePointSet EnumeratePoints(std::span<const int> rank_values, int n, bool strict);

// gamma_i = #{x in P(V)* : |x| = i}, of length max |x| + 1.
std::vector<int64_t> GammaVector(const LatticePointSet& star_points);

// (1,...,1) + P(V)*, intersected with [d_1] x ... x [d_n].
LatticePointSet BoxIdealDV(std::span<const int> dims, const LatticePointSet& star_points);

// Rank function of the arrangement where V_i is repeated u_i times. The
// ground set lists the copies of V_1 first, then those of V_2, and so on.
struct RepeatedRank {
  RankFunction rank;
  std::vector<int> projection;  // copy index -> original index

  Subset Project(Subset copies) const;
  // All copies of the elements of b.
  Subset Preimage(Subset b) const;
};

RepeatedRank MakeRepeatedRank(const RankFunction& rk, std::span<const int> multiplicities);

}  // namespace sarr

#endif  // SARR_POLYMATROID_H_
