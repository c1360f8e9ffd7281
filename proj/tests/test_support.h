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

#ifndef SARR_TESTS_TEST_SUPPORT_H_
#define SARR_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "sarr/arrangement.h"
#include "sarr/rational.h"

namespace sarr::testing {

// Arrangement from integer rows, one list of rows per subspace.
Arrangement FromIntegers(int ambient_dim, const std::vector<std::vector<std::vector<int>>>& rows);

// Random arrangement in Q^d with n subspaces of dimension at most max_dim.
// Later subspaces are sometimes copies of, inside of, or containing earlier
// ones.
Arrangement RandomArrangement(uint64_t seed, int n, int d, int max_dim);

// The seeded suite shared by the cross-module checks: n <= 4, d_i <= 3,
// d <= 6, with repeated and nested subspaces present.
std::vector<Arrangement> MixedSuite();
std::string Describe(const Arrangement& arr);

// Random normalized, monotone, submodular integer function on 2^[n]: a sum
// of terms w * min(c, |A cap S|).
std::vector<int> RandomSubmodular(uint64_t seed, int n);

// ---- Oracles. None of these call into the library's linear algebra or
// combinatorics.

// Rank over Q by plain Gauss-Jordan on rationals.
int OracleRank(std::vector<QVector> rows);

// rk(A) for every bitmask, by stacking generators and OracleRank.
std::vector<int> OracleRankFunction(const Arrangement& arr);

// min over set partitions of A of sum(f(block) - 1), by recursive
// assignment of elements to blocks.
int OraclePartitionMinimum(const std::vector<int>& f, uint32_t a);

// Integer points x >= 0 with sum_{i in A} x_i <= f(A) - shift for all
// nonempty A, by scanning the box [0, f({i})]^n. Sorted lexicographically.
std::vector<std::vector<int>> OraclePoints(const std::vector<int>& f, int n, int shift);

// Betti numbers of a tensor product of truncated Koszul complexes:
// prod_i (sum_k C(d_i, k + 1) z^k).
std::vector<int64_t> TensorKoszulBetti(const std::vector<int>& dims);

// C(a, b) for 0 <= b, by Pascal's triangle.
int64_t OracleBinomial(int a, int b);

}  // namespace sarr::testing

#endif  // SARR_TESTS_TEST_SUPPORT_H_
