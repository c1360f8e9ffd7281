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

#include "sarr/resolution.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "sarr/errors.h"
#include "sarr/parallel.h"

namespace sarr {
namespace {

std::string PolyToString(const SparsePoly& p) {
  if (p.IsZero()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += FormatRat(coeff);
    for (size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      out += "*x" + std::to_string(v + 1);
      if (mono[v] > 1) out += "^" + std::to_string(mono[v]);
    }
  }
  return out;
}

// Ring map sending variable v to images[v].
SparsePoly Substitute(const SparsePoly& p, const std::vector<SparsePoly>& images,
                      size_t num_vars) {
  SparsePoly out(num_vars);
  for (const auto& [mono, coeff] : p.terms()) {
    SparsePoly term = SparsePoly::Constant(num_vars, coeff);
    for (size_t v = 0; v < mono.size(); ++v) {
      for (int e = 0; e < mono[v]; ++e) term = term * images[v];
    }
    out += term;
  }
  return out;
}

// Coefficients of a linear form; throws unless every term has degree one.
std::vector<std::pair<size_t, Rat>> LinearCoefficients(const SparsePoly& p) {
  std::vector<std::pair<size_t, Rat>> out;
  for (const auto& [mono, coeff] : p.terms()) {
    if (TotalDegree(mono) != 1) {
      throw InputError("differential entry " + PolyToString(p) + " is not a linear form");
    }
    const size_t v = std::find(mono.begin(), mono.end(), 1) - mono.begin();
    out.emplace_back(v, coeff);
  }
  return out;
}

ChainCheck SquareZeroImpl(const FreeComplex& complex) {
  ChainCheck check;
  const int len = complex.length();
  // eps d_1
  if (len >= 1) {
    const auto& d1 = complex.differentials[1];
    for (size_t c = 0; c < d1.size(); ++c) {
      SparsePoly acc(complex.num_vars);
      for (const auto& [r, entry] : d1[c]) acc += complex.augmentation[r] * entry;
      if (!acc.IsZero()) {
        check = {false, 1, complex.modules[1][c].ToString(), "augmentation",
                 PolyToString(acc)};
        return check;
      }
    }
  }
  for (int k = 2; k <= len; ++k) {
    const auto& dk = complex.differentials[k];
    const auto& dk1 = complex.differentials[k - 1];
    for (size_t c = 0; c < dk.size(); ++c) {
      std::map<size_t, SparsePoly> acc;
      for (const auto& [r, entry] : dk[c]) {
        for (const auto& [r2, entry2] : dk1[r]) {
          auto it = acc.try_emplace(r2, complex.num_vars).first;
          it->second += entry2 * entry;
        }
      }
      for (const auto& [r2, value] : acc) {
        if (!value.IsZero()) {
          check = {false, k, complex.modules[k][c].ToString(),
                   complex.modules[k - 2][r2].ToString(), PolyToString(value)};
          return check;
        }
      }
    }
  }
  return check;
}

// Matrix of d_k on the degree t strand: rows are (column label, monomial of
// degree t - n - k), columns are (row label, monomial of degree t - n - k + 1).
SparseQMatrix StrandMatrix(const FreeComplex& complex, int k, int t) {
  const int e = t - complex.n() - k;
  const size_t num_cols_labels = complex.modules[k - 1].size();
  if (e < 0) return SparseQMatrix(0, 0);
  const MonomialBasis& src = GetMonomialBasis(complex.num_vars, e);
  const MonomialBasis& dst = GetMonomialBasis(complex.num_vars, e + 1);
  const auto& dk = complex.differentials[k];
  SparseQMatrix m(dk.size() * src.size(), num_cols_labels * dst.size());
  for (size_t c = 0; c < dk.size(); ++c) {
    std::vector<std::pair<size_t, std::vector<std::pair<size_t, Rat>>>> entries;
    for (const auto& [r, entry] : dk[c]) entries.emplace_back(r, LinearCoefficients(entry));
    for (size_t mu = 0; mu < src.size(); ++mu) {
      SparseQMatrix::Row row;
      for (const auto& [r, coeffs] : entries) {
        for (const auto& [v, coeff] : coeffs) {
          row.emplace_back(r * dst.size() + src.times_variable[mu][v], coeff);
        }
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      m.SetRow(c * src.size() + mu, std::move(row));
    }
  }
  return m;
}

StrandReport StrandImpl(const FreeComplex& complex, int t) {
  const int n = complex.n();
  const int len = complex.length();
  StrandReport report;
  report.t = t;
  if (len < 0) {
    report.exact = true;
    report.method = "exact";
    return report;
  }
  report.dims.assign(len + 1, 0);
  for (int k = 0; k <= len; ++k) {
    const int e = t - n - k;
    if (e >= 0) report.dims[k] = complex.modules[k].size() * NumMonomials(complex.num_vars, e);
  }
  std::vector<SparseQMatrix> mats;
  mats.emplace_back(0, 0);
  for (int k = 1; k <= len; ++k) mats.push_back(StrandMatrix(complex, k, t));
  const std::vector<int> degrees(complex.augmentation.size(), n);

  auto holds = [&](const std::vector<size_t>& ranks, size_t ideal) -> std::optional<int> {
    if (report.dims[0] != ranks[1] + ideal) return 0;
    for (int k = 1; k <= len; ++k) {
      if (ranks[k] + ranks[k + 1] != report.dims[k]) return k;
    }
    return std::nullopt;
  };

  // Lower bounds first. With d^2 = 0 and eps d_1 = 0 already checked,
  // r_k + r_{k+1} <= dim C_k and r_1 <= dim C_0 - dim J_t, so bounds that
  // meet these with equality are the true values.
  std::vector<size_t> ranks(len + 2, 0);
  for (int k = 1; k <= len; ++k) ranks[k] = RankLowerBound(mats[k]);
  size_t ideal = 0;
  bool have_ideal = false;
  if (auto lb = GradedRanksModPrime(complex.augmentation, n, t, complex.num_vars,
                                    DefaultPrime())) {
    ideal = lb->at(t - n);
    have_ideal = true;
  }
  if (have_ideal && !holds(ranks, ideal)) {
    report.ranks = std::vector<size_t>(ranks.begin(), ranks.begin() + len + 1);
    report.ideal_dim = ideal;
    report.exact = true;
    report.method = "modular";
    return report;
  }
  for (int k = 1; k <= len; ++k) ranks[k] = Rank(mats[k]);
  ideal = Rank(GradedComponentSpan(complex.augmentation, degrees, t, complex.num_vars));
  report.ranks = std::vector<size_t>(ranks.begin(), ranks.begin() + len + 1);
  report.ideal_dim = ideal;
  report.method = "exact";
  if (std::optional<int> k = holds(ranks, ideal)) {
    throw TheoremViolation("strand not exact at homological degree " + std::to_string(*k) +
                           ", internal degree " + std::to_string(t));
  }
  report.exact = true;
  return report;
}

void CheckStrandInput(const FreeComplex& complex, int t) {
  if (!complex.specialized) throw InputError("strand checks need a complex over S");
  if (t < complex.n()) {
    throw InputError("strand degree " + std::to_string(t) + " is below n = " +
                     std::to_string(complex.n()));
  }
}

void RequireSquareZero(const FreeComplex& complex) {
  ChainCheck sq = SquareZeroImpl(complex);
  if (!sq.ok) {
    throw TheoremViolation("d^2 != 0 at degree " + std::to_string(*sq.degree) + " on " +
                           sq.column + ": " + sq.value);
  }
  ChainCheck lin = VerifyMinimality(complex);
  if (!lin.ok) {
    throw TheoremViolation("non-minimal entry at degree " + std::to_string(*lin.degree) +
                           " on " + lin.column + ": " + lin.value);
  }
}

}  // namespace

int BasisLabel::HomologicalDegree() const {
  int k = 0;
  for (const auto& a : parts) k += static_cast<int>(a.size()) - 1;
  return k;
}

Point BasisLabel::MaxTuple() const {
  Point out;
  for (const auto& a : parts) out.push_back(a.back());
  return out;
}

std::string BasisLabel::ToString() const {
  std::string out = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ",";
    out += "{";
    for (size_t j = 0; j < parts[i].size(); ++j) {
      if (j > 0) out += ",";
      out += std::to_string(parts[i][j]);
    }
    out += "}";
  }
  return out + ")";
}

size_t GenericVariable(std::span<const int> dims, int i, int j) {
  size_t offset = 0;
  for (int l = 0; l < i; ++l) offset += dims[l];
  return offset + j - 1;
}

FreeComplex BuildGenericComplex(const PosetIdeal& p) {
  FreeComplex complex;
  complex.dims = p.dims;
  complex.poset = p;
  complex.num_vars = std::accumulate(p.dims.begin(), p.dims.end(), size_t{0});
  const int n = static_cast<int>(p.dims.size());

  std::vector<std::vector<BasisLabel>> buckets;
  for (const Point& a : p.members) {
    // A_i = {a_i} plus any subset of [a_i - 1].
    std::vector<uint32_t> masks(n, 0);
    while (true) {
      BasisLabel label;
      for (int i = 0; i < n; ++i) {
        std::vector<int> part;
        for (int b = 1; b < a[i]; ++b) {
          if ((masks[i] >> (b - 1)) & 1u) part.push_back(b);
        }
        part.push_back(a[i]);
        label.parts.push_back(std::move(part));
      }
      const size_t k = label.HomologicalDegree();
      if (buckets.size() <= k) buckets.resize(k + 1);
      buckets[k].push_back(std::move(label));
      int i = n - 1;
      while (i >= 0 && masks[i] + 1 == (1u << (a[i] - 1))) masks[i--] = 0;
      if (i < 0) break;
      ++masks[i];
    }
  }
  for (auto& bucket : buckets) std::sort(bucket.begin(), bucket.end());
  complex.modules = std::move(buckets);

  const size_t len = complex.modules.size();
  complex.differentials.assign(len, {});
  for (size_t k = 1; k < len; ++k) {
    std::map<BasisLabel, size_t> row_index;
    for (size_t r = 0; r < complex.modules[k - 1].size(); ++r) {
      row_index.emplace(complex.modules[k - 1][r], r);
    }
    for (const BasisLabel& label : complex.modules[k]) {
      DifferentialColumn column;
      int sigma_base = 0;
      for (int i = 0; i < n; ++i) {
        const auto& part = label.parts[i];
        if (part.size() > 1) {
          for (size_t pos = 0; pos < part.size(); ++pos) {
            BasisLabel target = label;
            target.parts[i].erase(target.parts[i].begin() + pos);
            auto it = row_index.find(target);
            if (it == row_index.end()) {
              throw TheoremViolation("boundary label " + target.ToString() + " missing from K_P");
            }
            const Rat sign = (sigma_base + pos) % 2 == 0 ? 1 : -1;
            SparsePoly entry =
                SparsePoly::Variable(complex.num_vars, GenericVariable(p.dims, i, part[pos])) *
                sign;
            column.emplace_back(it->second, std::move(entry));
          }
        }
        sigma_base += static_cast<int>(part.size()) - 1;
      }
      std::sort(column.begin(), column.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      complex.differentials[k].push_back(std::move(column));
    }
  }
  if (len > 0) {
    for (const BasisLabel& label : complex.modules[0]) {
      SparsePoly mono = SparsePoly::Constant(complex.num_vars, 1);
      for (int i = 0; i < n; ++i) {
        mono = mono *
               SparsePoly::Variable(complex.num_vars, GenericVariable(p.dims, i, label.parts[i][0]));
      }
      complex.augmentation.push_back(std::move(mono));
    }
  }
  return complex;
}

FreeComplex Specialize(const FreeComplex& generic, const GenericBases& f,
                       const LatticePointSet& dv) {
  if (generic.specialized) throw InputError("complex is already specialized");
  if (!f.certified) throw InputError("generic bases are not certified");
  if (f.f.size() != generic.dims.size()) throw InputError("bases do not match the complex");
  for (const Point& a : generic.poset.members) {
    if (!dv.Contains(a)) {
      throw InputError("poset ideal is not inside D_V: contains " + PointToString(a));
    }
  }
  const size_t d = f.f.empty() || f.f[0].empty() ? 0 : f.f[0][0].size();
  std::vector<SparsePoly> images;
  for (size_t i = 0; i < generic.dims.size(); ++i) {
    if (static_cast<int>(f.f[i].size()) != generic.dims[i]) {
      throw InputError("basis size does not match the complex");
    }
    for (const QVector& v : f.f[i]) images.push_back(SparsePoly::Linear(v));
  }
  FreeComplex out = generic;
  out.num_vars = d;
  out.specialized = true;
  for (auto& degree : out.differentials) {
    for (auto& column : degree) {
      for (auto& [r, entry] : column) entry = Substitute(entry, images, d);
    }
  }
  for (SparsePoly& g : out.augmentation) g = Substitute(g, images, d);
  return out;
}

ChainCheck VerifySquareZero(const FreeComplex& complex) { return SquareZeroImpl(complex); }

ChainCheck VerifyMinimality(const FreeComplex& complex) {
  for (size_t k = 1; k < complex.differentials.size(); ++k) {
    for (size_t c = 0; c < complex.differentials[k].size(); ++c) {
      for (const auto& [r, entry] : complex.differentials[k][c]) {
        for (const auto& [mono, coeff] : entry.terms()) {
          if (TotalDegree(mono) != 1) {
            return {false, static_cast<int>(k), complex.modules[k][c].ToString(),
                    complex.modules[k - 1][r].ToString(), PolyToString(entry)};
          }
        }
      }
    }
  }
  return {};
}

StrandReport VerifyStrandExactness(const FreeComplex& complex, int t) {
  CheckStrandInput(complex, t);
  RequireSquareZero(complex);
  return StrandImpl(complex, t);
}

std::vector<StrandReport> VerifyStrands(const FreeComplex& complex, std::span<const int> ts) {
  for (int t : ts) CheckStrandInput(complex, t);
  RequireSquareZero(complex);
  std::vector<StrandReport> out(ts.size());
  ParallelFor(ts.size(), [&](size_t i) { out[i] = StrandImpl(complex, ts[i]); });
  return out;
}

std::vector<int64_t> BettiCensus(const FreeComplex& complex) {
  std::vector<int64_t> out;
  for (const auto& m : complex.modules) out.push_back(static_cast<int64_t>(m.size()));
  return out;
}

nlohmann::json ExportComplexJson(const FreeComplex& complex) {
  using nlohmann::json;
  json doc;
  doc["ring"] = complex.specialized ? "S" : "T";
  doc["num_vars"] = complex.num_vars;
  doc["dims"] = complex.dims;
  json modules = json::array();
  for (const auto& m : complex.modules) {
    json labels = json::array();
    for (const BasisLabel& label : m) labels.push_back(label.parts);
    modules.push_back(labels);
  }
  doc["modules"] = modules;
  json diffs = json::array();
  for (size_t k = 1; k < complex.differentials.size(); ++k) {
    json entries = json::array();
    for (size_t c = 0; c < complex.differentials[k].size(); ++c) {
      for (const auto& [r, entry] : complex.differentials[k][c]) {
        std::vector<std::string> coeffs(complex.num_vars, "0");
        for (const auto& [mono, coeff] : entry.terms()) {
          if (TotalDegree(mono) != 1) throw InputError("cannot export a non-linear entry");
          coeffs[std::find(mono.begin(), mono.end(), 1) - mono.begin()] = FormatRat(coeff);
        }
        entries.push_back({{"row", r}, {"col", c}, {"coefficients", coeffs}});
      }
    }
    diffs.push_back({{"degree", k}, {"entries", entries}});
  }
  doc["differentials"] = diffs;
  json aug = json::array();
  for (const SparsePoly& g : complex.augmentation) {
    json terms = json::array();
    for (const auto& [mono, coeff] : g.terms()) {
      terms.push_back({{"exponents", mono}, {"coefficient", FormatRat(coeff)}});
    }
    aug.push_back(terms);
  }
  doc["augmentation"] = aug;
  return doc;
}

}  // namespace sarr
