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

#ifndef SARR_IDEALS_H_
#define SARR_IDEALS_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "sarr/arrangement.h"
#include "sarr/polymatroid.h"
#include "sarr/polynomial.h"

namespace sarr {

// Downward-closed subset of the box D = [d_1] x ... x [d_n].
struct PosetIdeal {
  std::vector<int> dims;
  std::vector<Point> members;            // sorted
  std::vector<Point> maximal_elements;   // sorted antichain

  bool Contains(const Point& p) const;
  size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
};

// Downward closure of `generators` inside D. Throws InputError for points
// outside the box.
PosetIdeal MakePosetIdeal(std::span<const int> dims, std::span<const Point> generators);

// The whole box D.
PosetIdeal FullBox(std::span<const int> dims);

// (P1 meet P2, P1 join P2) = (intersection, union).
std::pair<PosetIdeal, PosetIdeal> MeetJoin(const PosetIdeal& p1, const PosetIdeal& p2);

// P intersected with D_V.
PosetIdeal ReduceToDV(const PosetIdeal& p, const LatticePointSet& dv);

// f_a = f_{1,a_1} ... f_{n,a_n}, a polynomial in ambient_dim variables.
SparsePoly ProductForm(const GenericBases& f, const Point& a);

struct GeneratorFamily {
  std::vector<std::pair<Point, SparsePoly>> entries;
  int degree = 0;  // n

  std::vector<SparsePoly> Polys() const;
  std::vector<int> Degrees() const;
};

// Throws InputError if f is not certified.
GeneratorFamily MakeGeneratorFamily(const PosetIdeal& p, const GenericBases& f);

// Ranks of span{f_a : a in P} and span{f_a : a in P'} in degree n; they
// agree exactly when J_P = J_P'.
struct ReductionCheck {
  size_t rank_original = 0;
  size_t rank_reduced = 0;
  bool equal = false;
};
ReductionCheck VerifyReduction(const PosetIdeal& original, const PosetIdeal& reduced,
                               const GenericBases& f);

// Members ordered by |a|, then lexicographically.
std::vector<Point> DefaultLinearExtension(const PosetIdeal& p);
std::vector<Point> RandomLinearExtension(const PosetIdeal& p, std::mt19937_64& rng);
bool IsLinearExtension(const PosetIdeal& p, std::span<const Point> order);

struct QuotientStep {
  Point a;
  Point b;              // a - (1,...,1)
  int colon_dim = 0;    // dim {l in S_1 : l f_a in (J_Q)_{n+1}}
  int w_dim = 0;        // dim W_b
  bool w_in_colon = false;
  bool outside_previous = false;  // f_a not in (J_Q)_n
};

struct LinearQuotientsReport {
  std::vector<QuotientStep> steps;
};

// Walks `order` and checks, for each a with predecessors Q, that the degree
// one part of J_Q : f_a is exactly W_b and that f_a is a new generator.
// Throws InputError if P is not inside D_V or `order` is not a linear
// extension, and TheoremViolation (with witness) if a check fails.
LinearQuotientsReport VerifyLinearQuotients(const PosetIdeal& p, const LatticePointSet& dv,
                                            const GenericBases& f,
                                            std::span<const Point> order);

// beta_i(J_P) = sum_{a in P} C(|a| - n, i). Throws InputError unless P is
// inside D_V.
std::vector<int64_t> PosetBetti(const PosetIdeal& p, const LatticePointSet& dv);

std::string PointToString(const Point& p);

}  // namespace sarr

#endif  // SARR_IDEALS_H_
