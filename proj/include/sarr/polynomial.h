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

#ifndef SARR_POLYNOMIAL_H_
#define SARR_POLYNOMIAL_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sarr/qmatrix.h"
#include "sarr/rational.h"

namespace sarr {

// Exponent vector; its length is the number of ambient variables.
using Monomial = std::vector<int>;

int TotalDegree(const Monomial& m);

// Graded lexicographic order, larger monomials first (x1^2 > x1 x2 > x2^2).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class SparsePoly {
 public:
  using Terms = std::map<Monomial, Rat, GrlexGreater>;

  explicit SparsePoly(size_t num_vars = 0) : num_vars_(num_vars) {}

  static SparsePoly Constant(size_t num_vars, const Rat& c);
  static SparsePoly Variable(size_t num_vars, size_t v);
  // sum_v coefficients[v] * x_v
  static SparsePoly Linear(std::span<const Rat> coefficients);

  size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }

  // Degree of every term, or nullopt if the terms disagree. The zero
  // polynomial is homogeneous of every degree; this returns nullopt for it.
  std::optional<int> HomogeneousDegree() const;
  // Largest total degree of a term; -1 for zero.
  int Degree() const;

  void AddTerm(const Monomial& m, const Rat& c);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const Rat& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rat& c) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  void CheckCompatible(const SparsePoly& other) const;

  size_t num_vars_;
  Terms terms_;
};

// A degree-one form sum_v coefficients[v] x_v.
struct LinearForm {
  QVector coefficients;

  size_t num_vars() const { return coefficients.size(); }
  SparsePoly ToPoly() const { return SparsePoly::Linear(coefficients); }
};

// Monomials of one degree in grlex order with a reverse index. Instances are
// cached per (num_vars, degree) and live for the whole process.
struct MonomialBasis {
  size_t num_vars = 0;
  int degree = 0;
  std::vector<Monomial> monomials;
  std::map<Monomial, size_t> index;
  // times_variable[i][v] is the index of monomials[i] * x_v in the basis of
  // degree + 1.
  std::vector<std::vector<uint32_t>> times_variable;

  size_t size() const { return monomials.size(); }
};

const MonomialBasis& GetMonomialBasis(size_t num_vars, int degree);

// Coefficient vector of a homogeneous polynomial of the basis degree.
QVector CoefficientVector(const SparsePoly& p, const MonomialBasis& basis);

// Rows are the coefficient vectors of m * g for every generator g and every
// monomial m of degree t - deg(g); the rank is dim (generators)_t.
// Generators with deg(g) > t contribute nothing.
QMatrix GradedComponentSpan(std::span<const SparsePoly> generators,
                            std::span<const int> gen_degrees, int t,
                            size_t num_vars);

// dim (A)_t + dim (B)_t - dim (A + B)_t, i.e. the nullity of the stacked
// span matrices restricted to relations between the two blocks.
size_t DegreeTDimIntersection(std::span<const SparsePoly> gens_a,
                              std::span<const int> degrees_a,
                              std::span<const SparsePoly> gens_b,
                              std::span<const int> degrees_b, int t,
                              size_t num_vars);

// Ranks over Z/p of the degree t parts of the ideal generated by `gens`,
// all homogeneous of degree g, for t = g..t_max. Each is a lower bound for
// the dimension over Q. Nullopt if p divides a denominator.
std::optional<std::vector<size_t>> GradedRanksModPrime(std::span<const SparsePoly> gens, int g,
                                                       int t_max, size_t num_vars,
                                                       uint32_t prime);

// C(t + d - 1, d - 1).
uint64_t NumMonomials(size_t num_vars, int degree);

}  // namespace sarr

#endif  // SARR_POLYNOMIAL_H_
