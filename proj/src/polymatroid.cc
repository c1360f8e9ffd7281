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

#include "sarr/polymatroid.h"

#include <algorithm>
#include <limits>
#include <string>

#include "sarr/errors.h"

namespace sarr {
namespace {

constexpr int kOracleMaxElements = 10;

void EnumerateFrom(std::span<const int> rank_values, int n, int offset, int coord,
                   std::span<const int> bounds, Point& x, std::vector<Point>& out) {
  if (coord == n) {
    out.push_back(x);
    return;
  }
  for (int v = 0; v <= bounds[coord]; ++v) {
    x[coord] = v;
    // Only constraints whose largest element is `coord` are new here.
    bool ok = true;
    const Subset top = Subset{1} << coord;
    for (Subset rest = 0; rest < top && ok; ++rest) {
      const Subset a = rest | top;
      int sum = 0;
      for (int i : Elements(a)) sum += x[i];
      ok = sum <= rank_values[a] - offset;
    }
    // Sums only grow with v.
    if (!ok) break;
    EnumerateFrom(rank_values, n, offset, coord + 1, bounds, x, out);
  }
  x[coord] = 0;
}

}  // namespace

TruncatedRank DilworthTruncation(const RankFunction& rk) {
  const int n = rk.n();
  const Subset full = FullSet(n);
  TruncatedRank out;
  out.n = n;
  out.values.assign(size_t{1} << n, 0);
  std::vector<Subset> first_block(size_t{1} << n, 0);
  for (Subset a = 1; a <= full; ++a) {
    const Subset low = a & (~a + 1);
    const Subset others = a & ~low;
    int best = std::numeric_limits<int>::max();
    Subset best_block = a;
    // B = low | sub for every sub of `others`, including all of it.
    for (Subset sub = others;; sub = (sub - 1) & others) {
      const Subset block = low | sub;
      const int value = rk(block) - 1 + out.values[a & ~block];
      if (value < best || (value == best && block > best_block)) {
        best = value;
        best_block = block;
      }
      if (sub == 0) break;
    }
    out.values[a] = best;
    first_block[a] = best_block;
  }
  out.witness_partitions.resize(size_t{1} << n);
  for (Subset a = 1; a <= full; ++a) {
    for (Subset rest = a; rest != 0; rest &= ~first_block[rest]) {
      out.witness_partitions[a].push_back(first_block[rest]);
    }
  }
  return out;
}

int BruteForceTruncationOracle(std::span<const int> rank_values, Subset a) {
  const std::vector<int> elems = Elements(a);
  const int m = static_cast<int>(elems.size());
  if (m > kOracleMaxElements) {
    throw OracleScopeError("refusing to enumerate partitions of a " + std::to_string(m) +
                           "-element set");
  }
  if (m == 0) return 0;
  // Restricted growth string: code[0] = 0, code[k] <= 1 + max(code[0..k-1]).
  std::vector<int> code(m, 0);
  int best = std::numeric_limits<int>::max();
  while (true) {
    int blocks = *std::max_element(code.begin(), code.end()) + 1;
    std::vector<Subset> parts(blocks, 0);
    for (int k = 0; k < m; ++k) parts[code[k]] |= Subset{1} << elems[k];
    int value = -blocks;
    for (Subset p : parts) value += rank_values[p];
    best = std::min(best, value);

    int k = m - 1;
    while (k > 0) {
      int prefix_max = *std::max_element(code.begin(), code.begin() + k);
      if (code[k] <= prefix_max) break;
      --k;
    }
    if (k == 0) break;
    ++code[k];
    std::fill(code.begin() + k + 1, code.end(), 0);
  }
  return best;
}

bool LatticePointSet::Contains(const Point& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

LatticePointSet EnumeratePoints(std::span<const int> rank_values, int n, bool strict) {
  if (rank_values.size() != (size_t{1} << n)) throw InputError("rank table has wrong size");
  const int offset = strict ? 1 : 0;
  std::vector<int> bounds(n);
  for (int i = 0; i < n; ++i) bounds[i] = rank_values[Subset{1} << i] - offset;
  LatticePointSet out;
  out.n = n;
  out.kind = strict ? PointSetKind::kTruncated : PointSetKind::kPolymatroid;
  if (std::any_of(bounds.begin(), bounds.end(), [](int b) { return b < 0; })) return out;
  Point x(n, 0);
  EnumerateFrom(rank_values, n, offset, 0, bounds, x, out.points);
  std::sort(out.points.begin(), out.points.end());
  return out;
}

std::vector<int64_t> GammaVector(const LatticePointSet& star_points) {
  std::vector<int64_t> gamma;
  for (const Point& x : star_points.points) {
    int size = 0;
    for (int v : x) size += v;
    if (static_cast<int>(gamma.size()) <= size) gamma.resize(size + 1, 0);
    ++gamma[size];
  }
  return gamma;
}

LatticePointSet BoxIdealDV(std::span<const int> dims, const LatticePointSet& star_points) {
  if (static_cast<int>(dims.size()) != star_points.n) throw InputError("dims/points mismatch");
  LatticePointSet out;
  out.n = star_points.n;
  out.kind = PointSetKind::kGeneratorBox;
  for (const Point& x : star_points.points) {
    Point a = x;
    bool inside = true;
    for (size_t i = 0; i < a.size(); ++i) {
      ++a[i];
      inside = inside && a[i] <= dims[i];
    }
    if (inside) out.points.push_back(std::move(a));
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

Subset RepeatedRank::Project(Subset copies) const {
  Subset out = 0;
  for (int c : Elements(copies)) out |= Subset{1} << projection[c];
  return out;
}

Subset RepeatedRank::Preimage(Subset b) const {
  Subset out = 0;
  for (size_t c = 0; c < projection.size(); ++c) {
    if (Contains(b, projection[c])) out |= Subset{1} << c;
  }
  return out;
}

RepeatedRank MakeRepeatedRank(const RankFunction& rk, std::span<const int> multiplicities) {
  if (static_cast<int>(multiplicities.size()) != rk.n()) {
    throw InputError("need one multiplicity per subspace");
  }
  RepeatedRank out;
  for (int i = 0; i < rk.n(); ++i) {
    if (multiplicities[i] < 1) throw InputError("multiplicities must be positive");
    for (int j = 0; j < multiplicities[i]; ++j) out.projection.push_back(i);
  }
  const int total = static_cast<int>(out.projection.size());
  if (total > 20) throw InputError("repeated ground set too large");
  std::vector<int> values(size_t{1} << total);
  for (Subset a = 0; a <= FullSet(total); ++a) values[a] = rk(out.Project(a));
  out.rank = RankFunction(total, std::move(values));
  return out;
}

}  // namespace sarr
