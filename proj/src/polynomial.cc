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

#include "sarr/polynomial.h"

#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "sarr/errors.h"

namespace sarr {
namespace {

void AppendMonomials(size_t num_vars, size_t var, int remaining, Monomial& current,
                     std::vector<Monomial>& out) {
  if (var + 1 == num_vars) {
    current[var] = remaining;
    out.push_back(current);
    current[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    AppendMonomials(num_vars, var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

struct BasisCache {
  std::mutex mu;
  std::map<std::pair<size_t, int>, std::unique_ptr<MonomialBasis>> bases;
};

BasisCache& Cache() {
  static BasisCache* cache = new BasisCache;
  return *cache;
}

std::unique_ptr<MonomialBasis> BuildBasis(size_t num_vars, int degree) {
  auto basis = std::make_unique<MonomialBasis>();
  basis->num_vars = num_vars;
  basis->degree = degree;
  if (num_vars == 0) {
    if (degree == 0) basis->monomials.push_back({});
  } else if (degree >= 0) {
    Monomial current(num_vars, 0);
    AppendMonomials(num_vars, 0, degree, current, basis->monomials);
  }
  for (size_t i = 0; i < basis->monomials.size(); ++i) {
    basis->index.emplace(basis->monomials[i], i);
  }
  return basis;
}

}  // namespace

int TotalDegree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = TotalDegree(a);
  const int db = TotalDegree(b);
  if (da != db) return da > db;
  return a > b;
}

SparsePoly SparsePoly::Constant(size_t num_vars, const Rat& c) {
  SparsePoly p(num_vars);
  p.AddTerm(Monomial(num_vars, 0), c);
  return p;
}

SparsePoly SparsePoly::Variable(size_t num_vars, size_t v) {
  SparsePoly p(num_vars);
  Monomial m(num_vars, 0);
  m[v] = 1;
  p.AddTerm(m, 1);
  return p;
}

SparsePoly SparsePoly::Linear(std::span<const Rat> coefficients) {
  SparsePoly p(coefficients.size());
  Monomial m(coefficients.size(), 0);
  for (size_t v = 0; v < coefficients.size(); ++v) {
    m[v] = 1;
    p.AddTerm(m, coefficients[v]);
    m[v] = 0;
  }
  return p;
}

std::optional<int> SparsePoly::HomogeneousDegree() const {
  if (terms_.empty()) return std::nullopt;
  const int deg = TotalDegree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (TotalDegree(m) != deg) return std::nullopt;
  }
  return deg;
}

int SparsePoly::Degree() const {
  return terms_.empty() ? -1 : TotalDegree(terms_.begin()->first);
}

void SparsePoly::AddTerm(const Monomial& m, const Rat& c) {
  if (m.size() != num_vars_) throw InputError("monomial has wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePoly::CheckCompatible(const SparsePoly& other) const {
  if (num_vars_ != other.num_vars_) {
    throw InputError("polynomials in " + std::to_string(num_vars_) + " and " +
                     std::to_string(other.num_vars_) + " variables");
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  CheckCompatible(other);
  for (const auto& [m, c] : other.terms_) AddTerm(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  CheckCompatible(other);
  for (const auto& [m, c] : other.terms_) AddTerm(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.CheckCompatible(b);
  SparsePoly out(a.num_vars_);
  Monomial m(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (size_t v = 0; v < m.size(); ++v) m[v] = ma[v] + mb[v];
      out.AddTerm(m, ca * cb);
    }
  }
  return out;
}

const MonomialBasis& GetMonomialBasis(size_t num_vars, int degree) {
  BasisCache& cache = Cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& slot = cache.bases[{num_vars, degree}];
  if (!slot) slot = BuildBasis(num_vars, degree);
  if (slot->times_variable.empty() && !slot->monomials.empty() && num_vars > 0) {
    auto& next = cache.bases[{num_vars, degree + 1}];
    if (!next) next = BuildBasis(num_vars, degree + 1);
    slot->times_variable.assign(slot->size(), std::vector<uint32_t>(num_vars));
    for (size_t i = 0; i < slot->size(); ++i) {
      Monomial m = slot->monomials[i];
      for (size_t v = 0; v < num_vars; ++v) {
        ++m[v];
        slot->times_variable[i][v] = static_cast<uint32_t>(next->index.at(m));
        --m[v];
      }
    }
  }
  return *slot;
}

QVector CoefficientVector(const SparsePoly& p, const MonomialBasis& basis) {
  if (p.num_vars() != basis.num_vars) throw InputError("variable count mismatch");
  QVector out(basis.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = basis.index.find(m);
    if (it == basis.index.end()) {
      throw InputError("polynomial is not homogeneous of degree " +
                       std::to_string(basis.degree));
    }
    out[it->second] = c;
  }
  return out;
}

QMatrix GradedComponentSpan(std::span<const SparsePoly> generators,
                            std::span<const int> gen_degrees, int t,
                            size_t num_vars) {
  if (generators.size() != gen_degrees.size()) {
    throw InputError("generator and degree lists differ in length");
  }
  const MonomialBasis& target = GetMonomialBasis(num_vars, t);
  QMatrix out(0, target.size());
  for (size_t g = 0; g < generators.size(); ++g) {
    const SparsePoly& gen = generators[g];
    if (gen.num_vars() != num_vars) throw InputError("generator has wrong variable count");
    if (!gen.IsZero() && gen.HomogeneousDegree() != gen_degrees[g]) {
      throw InputError("generator " + std::to_string(g) + " is not homogeneous of degree " +
                       std::to_string(gen_degrees[g]));
    }
    if (gen_degrees[g] > t || gen.IsZero()) continue;
    const MonomialBasis& multipliers = GetMonomialBasis(num_vars, t - gen_degrees[g]);
    QVector row(target.size());
    Monomial prod(num_vars);
    for (const Monomial& m : multipliers.monomials) {
      for (Rat& x : row) x = 0;
      for (const auto& [gm, c] : gen.terms()) {
        for (size_t v = 0; v < num_vars; ++v) prod[v] = m[v] + gm[v];
        row[target.index.at(prod)] = c;
      }
      out.AppendRow(row);
    }
  }
  return out;
}

size_t DegreeTDimIntersection(std::span<const SparsePoly> gens_a,
                              std::span<const int> degrees_a,
                              std::span<const SparsePoly> gens_b,
                              std::span<const int> degrees_b, int t,
                              size_t num_vars) {
  const QMatrix a = GradedComponentSpan(gens_a, degrees_a, t, num_vars);
  const QMatrix b = GradedComponentSpan(gens_b, degrees_b, t, num_vars);
  QMatrix stacked = a;
  for (size_t r = 0; r < b.rows(); ++r) stacked.AppendRow(b.Row(r));
  return Rank(a) + Rank(b) - Rank(stacked);
}

uint64_t NumMonomials(size_t num_vars, int degree) {
  if (degree < 0) return 0;
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  // C(degree + num_vars - 1, num_vars - 1), built incrementally.
  uint64_t result = 1;
  for (uint64_t k = 1; k < num_vars; ++k) {
    result = result * (static_cast<uint64_t>(degree) + k) / k;
  }
  return result;
}

std::optional<std::vector<size_t>> GradedRanksModPrime(std::span<const SparsePoly> gens, int g,
                                                     int t_max, size_t d, uint32_t p) {
  std::vector<size_t> ranks;
  if (t_max < g) return ranks;
  const MonomialBasis& base = GetMonomialBasis(d, g);
  ModularEchelon echelon(base.size(), p);
  for (const SparsePoly& gen : gens) {
    std::vector<uint32_t> res(base.size(), 0);
    for (const auto& [mono, coeff] : gen.terms()) {
      if (TotalDegree(mono) != g) throw InputError("generator is not homogeneous of degree " + std::to_string(g));
      std::optional<uint32_t> r = ResidueModPrime(coeff, p);
      if (!r) return std::nullopt;
      res[base.index.at(mono)] = *r;
    }
    echelon.Insert(std::move(res));
    if (echelon.rank() == base.size()) break;
  }
  ranks.push_back(echelon.rank());
  for (int t = g + 1; t <= t_max; ++t) {
    const MonomialBasis& prev = GetMonomialBasis(d, t - 1);
    const MonomialBasis& cur = GetMonomialBasis(d, t);
    ModularEchelon next(cur.size(), p);
    for (const std::vector<uint32_t>& row : echelon.rows()) {
      for (size_t v = 0; v < d && next.rank() < cur.size(); ++v) {
        std::vector<uint32_t> shifted(cur.size(), 0);
        for (size_t i = 0; i < prev.size(); ++i) {
          if (row[i] != 0) shifted[prev.times_variable[i][v]] = row[i];
        }
        next.Insert(std::move(shifted));
      }
    }
    echelon = std::move(next);
    ranks.push_back(echelon.rank());
  }
  return ranks;
}

}  // namespace sarr
