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

#include "sarr/invariants.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "sarr/binomial.h"
#include "sarr/errors.h"
#include "sarr/parallel.h"

namespace sarr {
namespace {

void CheckLength(std::span<const int> u, int n) {
  if (static_cast<int>(u.size()) != n) {
    throw InputError("exponent vector has " + std::to_string(u.size()) +
                     " entries, expected " + std::to_string(n));
  }
}

int PointSum(const Point& x) { return std::accumulate(x.begin(), x.end(), 0); }

// prod_j C(u_j + x_j - 1, x_j)
int64_t PowerWeight(const Point& x, std::span<const int> u) {
  int64_t w = 1;
  for (size_t j = 0; j < x.size() && w != 0; ++j) w *= Binomial(u[j] + x[j] - 1, x[j]);
  return w;
}

// Betti table from weights attached to the points of P(V)*.
BettiTable WeightedBetti(const LatticePointSet& star_points, std::span<const int> u) {
  int top = 0;
  for (const Point& x : star_points.points) top = std::max(top, PointSum(x));
  BettiTable table;
  table.gamma.assign(top + 1, 0);
  for (const Point& x : star_points.points) table.gamma[PointSum(x)] += PowerWeight(x, u);
  table.betti.assign(top + 1, 0);
  for (int i = 0; i <= top; ++i) {
    for (int j = i; j <= top; ++j) table.betti[i] += table.gamma[j] * Binomial(j, i);
  }
  table.regularity = star_points.n;
  return table;
}

std::vector<QVector> IntegerBasisRows(const QMatrix& basis) {
  std::vector<QVector> rows;
  for (size_t r = 0; r < basis.rows(); ++r) {
    std::vector<BigInt> prim = PrimitiveIntegerVector(basis.Row(r));
    rows.emplace_back(prim.begin(), prim.end());
  }
  return rows;
}

// All products of `k` polynomials chosen with repetition from `factors`.
std::vector<SparsePoly> MultisetProducts(const std::vector<SparsePoly>& factors, int k,
                                         size_t num_vars) {
  std::vector<SparsePoly> out;
  std::vector<size_t> pick(k, 0);
  if (k == 0) return {SparsePoly::Constant(num_vars, 1)};
  while (true) {
    SparsePoly prod = factors[pick[0]];
    for (int j = 1; j < k; ++j) prod = prod * factors[pick[j]];
    out.push_back(std::move(prod));
    int j = k - 1;
    while (j >= 0 && pick[j] + 1 == factors.size()) --j;
    if (j < 0) return out;
    ++pick[j];
    for (int l = j + 1; l < k; ++l) pick[l] = pick[j];
  }
}

int SDegree(const Monomial& m, size_t first_s) {
  int deg = 0;
  for (size_t v = first_s; v < m.size(); ++v) deg += m[v];
  return deg;
}

// Rows are the linear functionals on S_t (in the monomial basis) whose common
// kernel is (I_U^m)_t, U spanned by `u_rows`.
std::vector<QVector> PowerConstraints(std::span<const QVector> u_rows, int m, int t,
                                      size_t d) {
  const MonomialBasis& basis = GetMonomialBasis(d, t);
  const size_t r = u_rows.size();
  if (m <= 0) return {};
  QMatrix u_matrix = QMatrix::FromRows(u_rows, d);
  std::vector<QVector> w = KernelBasis(u_matrix);
  for (QVector& v : w) {
    std::vector<BigInt> prim = PrimitiveIntegerVector(v);
    v.assign(prim.begin(), prim.end());
  }
  // Complete w to a basis of Q^d with standard vectors.
  EchelonBasis echelon(d);
  for (const QVector& v : w) echelon.Insert(v);
  std::vector<QVector> z;
  for (size_t v = 0; v < d && z.size() < r; ++v) {
    QVector e(d, 0);
    e[v] = 1;
    if (echelon.Insert(e)) z.push_back(std::move(e));
  }
  if (w.size() + z.size() != d) throw TheoremViolation("coordinate change is not a basis");
  // New coordinates: c_1..c_{d-r} (along w) then s_1..s_r (along z).
  std::vector<SparsePoly> image_of_var;
  for (size_t v = 0; v < d; ++v) {
    QVector coeffs(d, 0);
    for (size_t k = 0; k < w.size(); ++k) coeffs[k] = w[k][v];
    for (size_t j = 0; j < z.size(); ++j) coeffs[w.size() + j] = z[j][v];
    image_of_var.push_back(SparsePoly::Linear(coeffs));
  }
  const size_t first_s = w.size();
  // Images of all monomials, built up one degree at a time.
  std::vector<SparsePoly> images = {SparsePoly::Constant(d, 1)};
  for (int deg = 1; deg <= t; ++deg) {
    const MonomialBasis& prev = GetMonomialBasis(d, deg - 1);
    const MonomialBasis& cur = GetMonomialBasis(d, deg);
    std::vector<SparsePoly> next(cur.size(), SparsePoly(d));
    std::vector<bool> done(cur.size(), false);
    for (size_t i = 0; i < prev.size(); ++i) {
      for (size_t v = 0; v < d; ++v) {
        const size_t target = prev.times_variable[i][v];
        if (done[target]) continue;
        next[target] = images[i] * image_of_var[v];
        done[target] = true;
      }
    }
    images = std::move(next);
  }
  std::map<size_t, QVector> functionals;  // y-monomial index -> row
  for (size_t a = 0; a < basis.size(); ++a) {
    for (const auto& [mono, coeff] : images[a].terms()) {
      if (SDegree(mono, first_s) >= m) continue;
      const size_t row = basis.index.at(mono);
      auto it = functionals.find(row);
      if (it == functionals.end()) it = functionals.emplace(row, QVector(basis.size(), 0)).first;
      it->second[a] = coeff;
    }
  }
  std::vector<QVector> out;
  for (auto& [row, vec] : functionals) out.push_back(std::move(vec));
  return out;
}

std::vector<QVector> StackedConstraints(const Arrangement& arr,
                                        std::span<const PrimaryComponent> components, int t) {
  std::vector<QVector> rows;
  for (const PrimaryComponent& comp : components) {
    std::vector<QVector> u_rows = SubspaceSumBasis(arr, comp.b);
    std::vector<QVector> part =
        PowerConstraints(u_rows, comp.multiplicity, t, static_cast<size_t>(arr.ambient_dim));
    for (QVector& v : part) rows.push_back(std::move(v));
  }
  return rows;
}

std::optional<std::vector<uint32_t>> Residues(const QVector& v, uint32_t p) {
  std::vector<uint32_t> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    std::optional<uint32_t> r = ResidueModPrime(v[i], p);
    if (!r) return std::nullopt;
    out[i] = *r;
  }
  return out;
}

}  // namespace

BettiTable BettiFromGamma(std::span<const int64_t> gamma, int n) {
  BettiTable table;
  table.gamma.assign(gamma.begin(), gamma.end());
  table.betti.assign(gamma.size(), 0);
  for (size_t i = 0; i < gamma.size(); ++i) {
    for (size_t j = i; j < gamma.size(); ++j) table.betti[i] += gamma[j] * Binomial(j, i);
  }
  table.regularity = n;
  return table;
}

ProjectiveDimension ComputeProjectiveDimension(const TruncatedRank& trunc) {
  const Subset full = FullSet(trunc.n);
  return {trunc(full), trunc.witness_partitions[full]};
}

std::vector<Subset> AssociatedPrimeSets(const RankFunction& rk, const TruncatedRank& trunc,
                                        std::span<const Subset> flats) {
  std::vector<Subset> out;
  for (Subset b : flats) {
    if (b != 0 && trunc(b) == rk(b) - 1) out.push_back(b);
  }
  std::sort(out.begin(), out.end(), [](Subset x, Subset y) {
    if (Cardinality(x) != Cardinality(y)) return Cardinality(x) < Cardinality(y);
    return x < y;
  });
  return out;
}

std::vector<AssociatedPrime> AssociatedPrimes(const Arrangement& arr, const RankFunction& rk,
                                              const TruncatedRank& trunc,
                                              std::span<const Subset> flats) {
  std::vector<AssociatedPrime> out;
  for (Subset b : AssociatedPrimeSets(rk, trunc, flats)) {
    out.push_back({b, SubspaceSumBasis(arr, b)});
  }
  return out;
}

std::vector<int> DecompositionMode::Exponents(int n) const {
  switch (kind) {
    case Kind::kSingle:
      return std::vector<int>(n, 1);
    case Kind::kPower:
      if (nu < 1) throw InputError("power must be at least 1");
      return std::vector<int>(n, nu);
    case Kind::kProductOfPowers:
      CheckLength(u, n);
      for (int e : u) {
        if (e < 1) throw InputError("product-of-powers exponents must be positive");
      }
      return u;
  }
  return {};
}

PrimaryDecomposition ComputePrimaryDecomposition(const RankFunction& rk,
                                                 const TruncatedRank& trunc,
                                                 std::span<const Subset> flats,
                                                 const DecompositionMode& mode) {
  const std::vector<int> e = mode.Exponents(rk.n());
  PrimaryDecomposition out;
  for (Subset b : AssociatedPrimeSets(rk, trunc, flats)) {
    int mult = 0;
    for (int i : Elements(b)) mult += e[i];
    out.components.push_back({b, mult});
  }
  return out;
}

BettiTable ProductPowersBetti(const LatticePointSet& star_points, std::span<const int> u) {
  CheckLength(u, star_points.n);
  for (int e : u) {
    if (e < 1) throw InputError("product-of-powers exponents must be positive");
  }
  return WeightedBetti(star_points, u);
}

PowersInvariants ComputePowersInvariants(const RankFunction& rk, const TruncatedRank& trunc,
                                         std::span<const Subset> flats,
                                         const LatticePointSet& star_points, int nu) {
  if (nu < 1) throw InputError("power must be at least 1");
  PowersInvariants out;
  out.pd = trunc(FullSet(trunc.n));
  out.associated = AssociatedPrimeSets(rk, trunc, flats);
  const std::vector<int> u(star_points.n, nu);
  out.betti = WeightedBetti(star_points, u);
  return out;
}

int64_t MultiviewHilbert(const LatticePointSet& star_points, std::span<const int> u) {
  CheckLength(u, star_points.n);
  for (int e : u) {
    if (e < 0) throw InputError("multidegree entries must be nonnegative");
  }
  int64_t total = 0;
  for (const Point& x : star_points.points) total += PowerWeight(x, u);
  return total;
}

std::vector<SparsePoly> ProductOfPowersGenerators(const Arrangement& arr,
                                                  std::span<const int> u) {
  CheckLength(u, arr.n());
  const size_t d = arr.ambient_dim;
  std::vector<SparsePoly> gens = {SparsePoly::Constant(d, 1)};
  for (int i = 0; i < arr.n(); ++i) {
    if (u[i] < 0) throw InputError("multidegree entries must be nonnegative");
    if (u[i] == 0) continue;
    std::vector<SparsePoly> forms;
    for (const QVector& row : IntegerBasisRows(arr.subspaces[i])) {
      forms.push_back(SparsePoly::Linear(row));
    }
    std::vector<SparsePoly> factor = MultisetProducts(forms, u[i], d);
    std::vector<SparsePoly> next;
    next.reserve(gens.size() * factor.size());
    for (const SparsePoly& g : gens) {
      for (const SparsePoly& h : factor) next.push_back(g * h);
    }
    gens = std::move(next);
  }
  return gens;
}

size_t MultiviewHilbertOracle(const Arrangement& arr, std::span<const int> u) {
  CheckLength(u, arr.n());
  const size_t d = arr.ambient_dim;
  // Span of V_1^{u_1} ... V_i^{u_i}, reduced to a basis after every factor.
  std::vector<SparsePoly> span = {SparsePoly::Constant(d, 1)};
  int degree = 0;
  for (int i = 0; i < arr.n(); ++i) {
    if (u[i] < 0) throw InputError("multidegree entries must be nonnegative");
    if (u[i] == 0) continue;
    std::vector<SparsePoly> forms;
    for (const QVector& row : IntegerBasisRows(arr.subspaces[i])) {
      forms.push_back(SparsePoly::Linear(row));
    }
    degree += u[i];
    const MonomialBasis& basis = GetMonomialBasis(d, degree);
    EchelonBasis echelon(basis.size());
    std::vector<SparsePoly> next;
    for (const SparsePoly& h : MultisetProducts(forms, u[i], d)) {
      for (const SparsePoly& g : span) {
        SparsePoly prod = g * h;
        if (echelon.Insert(CoefficientVector(prod, basis))) next.push_back(std::move(prod));
        if (echelon.rank() == basis.size()) break;
      }
      if (echelon.rank() == basis.size()) break;
    }
    span = std::move(next);
  }
  return span.size();
}

size_t ComponentIntersectionDim(const Arrangement& arr,
                                std::span<const PrimaryComponent> components, int t) {
  if (t < 0) return 0;
  const size_t dim = GetMonomialBasis(arr.ambient_dim, t).size();
  std::vector<QVector> rows = StackedConstraints(arr, components, t);
  if (rows.empty()) return dim;
  return dim - Rank(QMatrix::FromRows(rows, dim));
}

std::vector<DegreeComparison> CompareDegreewise(const Arrangement& arr,
                                                std::span<const int> exponents,
                                                std::span<const PrimaryComponent> components,
                                                std::span<const int> degrees) {
  CheckLength(exponents, arr.n());
  const size_t d = arr.ambient_dim;
  const int g = std::accumulate(exponents.begin(), exponents.end(), 0);
  const std::vector<SparsePoly> gens = ProductOfPowersGenerators(arr, exponents);
  const std::vector<int> gen_degrees(gens.size(), g);
  int t_max = 0;
  for (int t : degrees) {
    if (t < 0) throw InputError("degree must be nonnegative");
    t_max = std::max(t_max, t);
  }
  const uint32_t p = DefaultPrime();
  std::optional<std::vector<size_t>> ideal_lb = GradedRanksModPrime(gens, g, t_max, d, p);

  std::vector<DegreeComparison> out(degrees.size());
  ParallelFor(degrees.size(), [&](size_t k) {
    const int t = degrees[k];
    const size_t dim = GetMonomialBasis(d, t).size();
    DegreeComparison& cmp = out[k];
    cmp.t = t;
    const std::vector<QVector> rows = StackedConstraints(arr, components, t);
    // dim J_t <= dim (intersection)_t holds because every factor lies in the
    // component primes, so lower bounds meeting in the middle pin both.
    if (ideal_lb) {
      const size_t ideal = t < g ? 0 : (*ideal_lb)[t - g];
      std::optional<size_t> constraint_lb = 0;
      if (!rows.empty()) {
        ModularEchelon echelon(dim, p);
        for (const QVector& row : rows) {
          std::optional<std::vector<uint32_t>> res = Residues(row, p);
          if (!res) {
            constraint_lb.reset();
            break;
          }
          echelon.Insert(std::move(*res));
          if (echelon.rank() == dim) break;
        }
        if (constraint_lb) constraint_lb = echelon.rank();
      }
      if (constraint_lb && ideal + *constraint_lb == dim) {
        cmp.ideal_dim = ideal;
        cmp.intersection_dim = ideal;
        cmp.equal = true;
        cmp.method = "modular";
        return;
      }
    }
    cmp.ideal_dim = t < g ? 0 : Rank(GradedComponentSpan(gens, gen_degrees, t, d));
    cmp.intersection_dim = rows.empty() ? dim : dim - Rank(QMatrix::FromRows(rows, dim));
    cmp.equal = cmp.ideal_dim == cmp.intersection_dim;
    cmp.method = "exact";
  });
  return out;
}

std::vector<PrimaryComponent> IntersectionOfFactors(int n) {
  std::vector<PrimaryComponent> out;
  for (int i = 0; i < n; ++i) out.push_back({Subset{1} << i, 1});
  return out;
}

}  // namespace sarr
