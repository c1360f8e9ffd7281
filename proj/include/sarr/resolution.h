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

#ifndef SARR_RESOLUTION_H_
#define SARR_RESOLUTION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sarr/arrangement.h"
#include "sarr/ideals.h"
#include "sarr/polymatroid.h"
#include "sarr/polynomial.h"

namespace sarr {

// e_A = e_{A_1} (x) ... (x) e_{A_n} with every A_i a nonempty subset of
// [d_i], stored sorted and 1-based.
struct BasisLabel {
  std::vector<std::vector<int>> parts;

  int HomologicalDegree() const;
  Point MaxTuple() const;
  std::string ToString() const;
  friend bool operator<(const BasisLabel& a, const BasisLabel& b) { return a.parts < b.parts; }
  friend bool operator==(const BasisLabel& a, const BasisLabel& b) { return a.parts == b.parts; }
};

// Sparse differential column: (row index, entry) pairs with ascending rows.
using DifferentialColumn = std::vector<std::pair<size_t, SparsePoly>>;

struct FreeComplex {
  // Over T = K[x_ij] this is sum d_i; over S it is the ambient dimension.
  size_t num_vars = 0;
  std::vector<int> dims;
  PosetIdeal poset;
  bool specialized = false;
  // modules[k] lists the labels in homological degree k, lexicographically.
  std::vector<std::vector<BasisLabel>> modules;
  // differentials[k][c] is the image of modules[k][c] in degree k - 1.
  // differentials[0] is empty.
  std::vector<std::vector<DifferentialColumn>> differentials;
  // Image of each degree-0 label under the augmentation onto J_P.
  std::vector<SparsePoly> augmentation;

  int n() const { return static_cast<int>(dims.size()); }
  int length() const { return static_cast<int>(modules.size()) - 1; }
};

// Index of x_ij (1-based j) among the variables of T.
size_t GenericVariable(std::span<const int> dims, int i, int j);

// Subcomplex K_P of the tensor product of the Koszul complexes on the
// variable blocks x_i1..x_id_i, over T.
FreeComplex BuildGenericComplex(const PosetIdeal& p);

// Substitutes x_ij -> f_ij. Throws InputError if f is uncertified, if the
// complex is already specialized, or if P is not inside D_V.
FreeComplex Specialize(const FreeComplex& generic, const GenericBases& f,
                       const LatticePointSet& dv);

struct ChainCheck {
  bool ok = true;
  // Failing position: d_{k-1} d_k (k = 1 means the augmentation) applied to
  // `column`, nonzero in `row` of degree k - 2.
  std::optional<int> degree;
  std::string column;
  std::string row;
  std::string value;
};

// Symbolic check of d_{k-1} d_k = 0 for every k >= 2 and of eps d_1 = 0.
ChainCheck VerifySquareZero(const FreeComplex& complex);

// Every nonzero entry is a linear form without constant term.
ChainCheck VerifyMinimality(const FreeComplex& complex);

struct StrandReport {
  int t = 0;
  std::vector<size_t> dims;   // dim C_k(t)
  std::vector<size_t> ranks;  // rank of d_k on the strand; ranks[0] = 0
  size_t ideal_dim = 0;       // dim (J_P)_t from the generators
  bool exact = false;
  std::string method;         // "modular" or "exact"
};

// Checks exactness of the degree t strand of a specialized complex and that
// its zeroth homology is (S/J_P)_t. Throws InputError if t < n or the complex
// is over T, and TheoremViolation with the failing (k, t) otherwise.
StrandReport VerifyStrandExactness(const FreeComplex& complex, int t);

// One report per degree, computed concurrently; the square-zero check runs
// once up front.
std::vector<StrandReport> VerifyStrands(const FreeComplex& complex, std::span<const int> ts);

// Module ranks per homological degree.
std::vector<int64_t> BettiCensus(const FreeComplex& complex);

nlohmann::json ExportComplexJson(const FreeComplex& complex);

}  // namespace sarr

#endif  // SARR_RESOLUTION_H_
