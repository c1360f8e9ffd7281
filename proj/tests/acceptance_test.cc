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

// Acceptance driver. Prints one PASS/FAIL line per criterion.
//   acceptance_test                 runs every criterion
//   acceptance_test --criterion N   runs criterion N only

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sarr/arrangement.h"
#include "sarr/errors.h"
#include "sarr/ideals.h"
#include "sarr/invariants.h"
#include "sarr/polymatroid.h"
#include "sarr/polynomial.h"
#include "sarr/resolution.h"
#include "test_support.h"

namespace sarr {
namespace {

using testing::Describe;
using testing::FromIntegers;
using testing::OracleBinomial;
using testing::OracleRank;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first failure; later ones only bump the count.
class Tally {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome Finish(const std::string& summary) const {
    std::ostringstream out;
    out << summary << "; " << checks_ << " checks";
    if (failures_ > 0) out << ", " << failures_ << " failed, first: " << first_;
    return {failures_ == 0, out.str()};
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string first_;
};

template <typename T>
std::string Str(const std::vector<T>& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

struct Pipeline {
  Arrangement arr;
  RankFunction rk;
  TruncatedRank trunc;
  std::vector<Subset> flats;
  LatticePointSet star;
  LatticePointSet dv;
  GenericBases f;
};

Pipeline Run(Arrangement arr) {
  Pipeline p{std::move(arr), {}, {}, {}, {}, {}, {}};
  p.rk = ComputeRankFunction(p.arr);
  p.trunc = DilworthTruncation(p.rk);
  p.flats = Flats(p.rk);
  p.star = EnumeratePoints(p.rk.values(), p.arr.n(), true);
  p.dv = BoxIdealDV(p.arr.dims, p.star);
  p.f = SampleGenericBases(p.arr, p.arr.seed.value_or(0));
  return p;
}

FreeComplex Resolve(const Pipeline& p) {
  return Specialize(BuildGenericComplex(MakePosetIdeal(p.arr.dims, p.dv.points)), p.f, p.dv);
}

// gamma from the oracle point scan, independent of the library enumerator.
std::vector<int64_t> OracleGamma(const Arrangement& arr) {
  std::vector<int64_t> gamma;
  for (const auto& x : testing::OraclePoints(testing::OracleRankFunction(arr), arr.n(), 1)) {
    const size_t s = std::accumulate(x.begin(), x.end(), size_t{0});
    if (gamma.size() <= s) gamma.resize(s + 1, 0);
    ++gamma[s];
  }
  return gamma;
}

// beta_i = sum_j gamma_j C(j, i), evaluated here from scratch.
std::vector<int64_t> OracleBetti(const std::vector<int64_t>& gamma) {
  std::vector<int64_t> beta(gamma.size(), 0);
  for (size_t j = 0; j < gamma.size(); ++j) {
    for (size_t i = 0; i <= j; ++i) beta[i] += gamma[j] * OracleBinomial(j, i);
  }
  while (beta.size() > 1 && beta.back() == 0) beta.pop_back();
  return beta;
}

// Ass by flats and partition minima, from the oracle rank table.
std::vector<Subset> OracleAssociated(const Arrangement& arr) {
  const std::vector<int> f = testing::OracleRankFunction(arr);
  const int n = arr.n();
  std::vector<Subset> out;
  for (Subset b = 1; b < (Subset{1} << n); ++b) {
    bool flat = true;
    for (int i = 0; i < n && flat; ++i) {
      if (!Contains(b, i)) flat = f[b | (Subset{1} << i)] > f[b];
    }
    if (flat && testing::OraclePartitionMinimum(f, b) == f[b] - 1) out.push_back(b);
  }
  std::sort(out.begin(), out.end(), [](Subset x, Subset y) {
    return Cardinality(x) != Cardinality(y) ? Cardinality(x) < Cardinality(y) : x < y;
  });
  return out;
}

bool StrandsExact(const FreeComplex& c, int t_lo, int t_hi, std::string* why) {
  std::vector<int> ts;
  for (int t = t_lo; t <= t_hi; ++t) ts.push_back(t);
  try {
    for (const StrandReport& r : VerifyStrands(c, ts)) {
      if (!r.exact) {
        *why = "strand t=" + std::to_string(r.t);
        return false;
      }
    }
  } catch (const TheoremViolation& e) {
    *why = e.what();
    return false;
  }
  return true;
}

// Span-rank dimension of a set of homogeneous polynomials of one degree.
size_t OracleSpanDim(const std::vector<SparsePoly>& polys) {
  std::map<Monomial, size_t> index;
  for (const SparsePoly& p : polys) {
    for (const auto& [m, c] : p.terms()) index.emplace(m, index.size());
  }
  std::vector<QVector> rows;
  for (const SparsePoly& p : polys) {
    QVector row(index.size(), Rat(0));
    for (const auto& [m, c] : p.terms()) row[index[m]] = c;
    rows.push_back(std::move(row));
  }
  return rows.empty() || index.empty() ? 0 : static_cast<size_t>(OracleRank(rows));
}

// All products of k forms chosen with repetition from `forms`.
std::vector<SparsePoly> SymmetricProducts(const std::vector<SparsePoly>& forms, int k,
                                          size_t num_vars) {
  std::vector<SparsePoly> out;
  std::function<void(size_t, int, SparsePoly)> rec = [&](size_t start, int left, SparsePoly acc) {
    if (left == 0) {
      out.push_back(std::move(acc));
      return;
    }
    for (size_t i = start; i < forms.size(); ++i) rec(i, left - 1, acc * forms[i]);
  };
  rec(0, k, SparsePoly::Constant(num_vars, Rat(1)));
  return out;
}

std::vector<SparsePoly> LinearForms(const std::vector<QVector>& rows) {
  std::vector<SparsePoly> out;
  for (const QVector& r : rows) out.push_back(SparsePoly::Linear(r));
  return out;
}

Arrangement Transversal() {
  Arrangement a =
      FromIntegers(4, {{{1, 0, 0, 0}, {0, 1, 0, 0}}, {{0, 0, 1, 0}, {0, 0, 0, 1}}});
  a.seed = 42;
  return a;
}

Arrangement DoubledPlane() {
  Arrangement a = FromIntegers(2, {{{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}});
  a.seed = 7;
  return a;
}

Outcome Criterion1() {
  Tally tally;
  Pipeline p = Run(Transversal());
  const std::vector<int64_t> gamma = GammaVector(p.star);
  const std::vector<int64_t> koszul = testing::TensorKoszulBetti({2, 2});
  tally.Expect(gamma == OracleGamma(p.arr), "gamma vs oracle scan");
  tally.Expect(gamma == std::vector<int64_t>{1, 2, 1}, "gamma = (1,2,1)");
  const BettiTable beta = BettiFromGamma(gamma, 2);
  tally.Expect(beta.betti == koszul, "beta vs tensor Koszul " + Str(beta.betti));
  const int pd = ComputeProjectiveDimension(p.trunc).pd;
  tally.Expect(pd == static_cast<int>(koszul.size()) - 1, "pd vs Koszul length");
  tally.Expect(pd == testing::OraclePartitionMinimum(testing::OracleRankFunction(p.arr), 0b11),
               "pd vs partition enumeration");
  const std::vector<Subset> ass = AssociatedPrimeSets(p.rk, p.trunc, p.flats);
  tally.Expect(ass == OracleAssociated(p.arr), "Ass vs oracle");
  tally.Expect(ass == std::vector<Subset>{0b01, 0b10}, "Ass = {I1, I2}");
  PrimaryDecomposition dec =
      ComputePrimaryDecomposition(p.rk, p.trunc, p.flats, DecompositionMode::Single());
  tally.Expect(dec.components.size() == 2 && dec.components[0].b == 0b01 &&
                   dec.components[0].multiplicity == 1 && dec.components[1].b == 0b10 &&
                   dec.components[1].multiplicity == 1,
               "decomposition I1 cap I2");
  std::vector<int> ts = {1, 2, 3, 4, 5, 6};
  for (const DegreeComparison& c : CompareDegreewise(p.arr, std::vector<int>{1, 1}, dec.components, ts)) {
    tally.Expect(c.equal, "J vs I1 cap I2 at t=" + std::to_string(c.t));
  }
  FreeComplex c = Resolve(p);
  tally.Expect(BettiCensus(c) == koszul, "census vs tensor Koszul");
  tally.Expect(c.length() == pd, "length = pd");
  tally.Expect(VerifySquareZero(c).ok, "square zero");
  tally.Expect(VerifyMinimality(c).ok, "minimality");
  std::string why;
  tally.Expect(StrandsExact(c, 2, 6, &why), why);
  return tally.Finish("beta=" + Str(beta.betti) + " pd=" + std::to_string(pd) +
                      ", strands t=2..6");
}

Outcome Criterion2() {
  Tally tally;
  Pipeline p = Run(DoubledPlane());
  tally.Expect(p.dv.points == std::vector<Point>{{1, 1}, {1, 2}, {2, 1}}, "D_V");
  const BettiTable beta = BettiFromGamma(GammaVector(p.star), 2);
  tally.Expect(beta.betti == OracleBetti(OracleGamma(p.arr)), "beta vs oracle gamma");
  tally.Expect(beta.betti == std::vector<int64_t>{3, 2}, "beta = (3,2)");
  tally.Expect(ComputeProjectiveDimension(p.trunc).pd == 1, "pd = 1");
  tally.Expect(AssociatedPrimeSets(p.rk, p.trunc, p.flats) == std::vector<Subset>{0b11},
               "Ass = {m}");
  auto dec = ComputePrimaryDecomposition(p.rk, p.trunc, p.flats, DecompositionMode::Single());
  tally.Expect(dec.components.size() == 1 && dec.components[0].b == 0b11 &&
                   dec.components[0].multiplicity == 2,
               "decomposition m^2");
  auto cube = ComputePrimaryDecomposition(p.rk, p.trunc, p.flats, DecompositionMode::Power(3));
  tally.Expect(cube.components.size() == 1 && cube.components[0].b == 0b11 &&
                   cube.components[0].multiplicity == 6,
               "nu=3 decomposition m^6");

  // Binomial sum over P(V)* = {(0,0),(1,0),(0,1)}.
  const std::vector<std::vector<int>> pstar = {{0, 0}, {1, 0}, {0, 1}};
  std::vector<int64_t> binomial_sum(2, 0);
  for (int i = 0; i < 2; ++i) {
    for (const auto& x : pstar) {
      int64_t w = OracleBinomial(x[0] + x[1], i);
      for (int xj : x) w *= OracleBinomial(3 + xj - 1, xj);
      binomial_sum[i] += w;
    }
  }
  // Truncated Koszul count for m^6 in two variables:
  // beta_i = C(6 + 1, 6 + i) C(6 + i - 1, i).
  std::vector<int64_t> truncated = {OracleBinomial(7, 6) * OracleBinomial(5, 0),
                                    OracleBinomial(7, 7) * OracleBinomial(6, 1)};
  PowersInvariants pw = ComputePowersInvariants(p.rk, p.trunc, p.flats, p.star, 3);
  tally.Expect(pw.betti.betti == binomial_sum, "beta(J^3) vs binomial sum");
  tally.Expect(pw.betti.betti == truncated, "beta(J^3) vs truncated Koszul");
  tally.Expect(pw.betti.betti == std::vector<int64_t>{7, 6}, "beta(J^3) = (7,6)");
  FreeComplex c = Resolve(p);
  tally.Expect(BettiCensus(c) == beta.betti, "census");
  std::string why;
  tally.Expect(StrandsExact(c, 2, 5, &why), why);
  return tally.Finish("beta=" + Str(beta.betti) + " beta(J^3)=" + Str(pw.betti.betti));
}

Outcome Criterion3() {
  Tally tally;
  const std::vector<Arrangement> suite = testing::MixedSuite();
  int repeated = 0, nested = 0;
  for (const Arrangement& arr : suite) {
    tally.Expect(arr.n() <= 4 && arr.ambient_dim <= 6, "suite bounds " + Describe(arr));
    for (int d : arr.dims) tally.Expect(d <= 3, "d_i <= 3 " + Describe(arr));
    const std::vector<int> f = testing::OracleRankFunction(arr);
    bool has_repeat = false, has_nest = false;
    for (int i = 0; i < arr.n(); ++i) {
      for (int j = 0; j < arr.n(); ++j) {
        if (i == j) continue;
        const Subset both = (Subset{1} << i) | (Subset{1} << j);
        if (f[both] == f[Subset{1} << j]) {
          (arr.dims[i] == arr.dims[j] ? has_repeat : has_nest) = true;
        }
      }
    }
    repeated += has_repeat;
    nested += has_nest;

    Pipeline p = Run(arr);
    const int n = arr.n();
    const std::vector<int64_t> formula = BettiFromGamma(GammaVector(p.star), n).betti;
    const std::vector<int64_t> recursion =
        PosetBetti(MakePosetIdeal(arr.dims, p.dv.points), p.dv);
    FreeComplex c = Resolve(p);
    const std::vector<int64_t> census = BettiCensus(c);
    const std::string tag = Describe(arr);
    tally.Expect(formula == OracleBetti(OracleGamma(arr)), "formula vs oracle " + tag);
    tally.Expect(formula == recursion, "formula vs recursion " + tag);
    tally.Expect(formula == census, "formula vs census " + tag);
    tally.Expect(ComputeProjectiveDimension(p.trunc).pd == c.length(), "pd vs length " + tag);
    tally.Expect(c.length() == testing::OraclePartitionMinimum(f, FullSet(n)),
                 "length vs partition oracle " + tag);
  }
  tally.Expect(suite.size() >= 20, "suite size");
  tally.Expect(repeated > 0 && nested > 0, "suite has repeated and nested subspaces");
  return tally.Finish(std::to_string(suite.size()) + " arrangements (" +
                      std::to_string(repeated) + " with repeats, " + std::to_string(nested) +
                      " with nesting)");
}

Outcome Criterion4() {
  Tally tally;
  const int kFunctions = 1000;
  for (int k = 0; k < kFunctions; ++k) {
    const int n = 1 + k % 6;
    const std::vector<int> f = testing::RandomSubmodular(5000 + k, n);
    TruncatedRank t = DilworthTruncation(RankFunction(n, f));
    for (Subset a = 0; a < (Subset{1} << n); ++a) {
      const int expected = a == 0 ? 0 : testing::OraclePartitionMinimum(f, a);
      tally.Expect(t(a) == expected,
                   "function " + std::to_string(k) + " subset " + SubsetToString(a));
    }
  }
  return tally.Finish(std::to_string(kFunctions) + " functions, n=1..6");
}

Outcome Criterion5() {
  Tally tally;
  int arrangements = 0, points = 0;
  std::vector<Arrangement> suite = testing::MixedSuite();
  suite.push_back(Transversal());
  suite.push_back(DoubledPlane());
  for (const Arrangement& arr : suite) {
    const int n = arr.n();
    const std::vector<int> f = testing::OracleRankFunction(arr);
    const auto star = testing::OraclePoints(f, n, 1);
    const auto full = testing::OraclePoints(f, n, 0);
    GenericBases g = SampleGenericBases(arr, arr.seed.value_or(0));
    tally.Expect(g.certified && CertifyAssumption(arr, g), "certified " + Describe(arr));
    ++arrangements;
    std::vector<int> a(n, 0);
    while (true) {
      std::vector<QVector> w;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < a[i]; ++j) w.push_back(g.f[i][j]);
      }
      const int dim_w = w.empty() ? 0 : OracleRank(w);
      bool none_inside = true;
      for (int i = 0; i < n && none_inside; ++i) {
        std::vector<QVector> both = w;
        for (const QVector& v : arr.subspaces[i].RowList()) both.push_back(v);
        none_inside = OracleRank(both) > dim_w;
      }
      const bool in_star = std::binary_search(star.begin(), star.end(), a);
      const bool in_full = std::binary_search(full.begin(), full.end(), a);
      const int size = std::accumulate(a.begin(), a.end(), 0);
      const std::string tag = Describe(arr) + " a=" + Str(a);
      tally.Expect(none_inside == in_star, "notsub " + tag);
      tally.Expect((size == dim_w) == in_full, "corollary " + tag);
      ++points;
      int i = n - 1;
      while (i >= 0 && a[i] == arr.dims[i]) a[i--] = 0;
      if (i < 0) break;
      ++a[i];
    }
  }
  return tally.Finish(std::to_string(arrangements) + " arrangements, " + std::to_string(points) +
                      " points of the closed box");
}

Outcome Criterion6() {
  Tally tally;
  std::mt19937_64 rng(2024);
  int traces = 0;
  for (const Arrangement& arr : testing::MixedSuite()) {
    Pipeline p = Run(arr);
    PosetIdeal poset = MakePosetIdeal(arr.dims, p.dv.points);
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<Point> order = RandomLinearExtension(poset, rng);
      const std::string tag = Describe(arr) + " extension " + std::to_string(rep);
      tally.Expect(IsLinearExtension(poset, order), "linear extension " + tag);
      try {
        LinearQuotientsReport r = VerifyLinearQuotients(poset, p.dv, p.f, order);
        for (const QuotientStep& s : r.steps) {
          tally.Expect(s.w_in_colon && s.colon_dim == s.w_dim,
                       "colon = W_b at " + PointToString(s.a) + " " + tag);
          tally.Expect(s.outside_previous, "f_a outside (J_Q)_n at " + PointToString(s.a) + " " + tag);
        }
      } catch (const TheoremViolation& e) {
        tally.Expect(false, tag + ": " + e.what());
      }
      ++traces;
    }
  }
  return tally.Finish(std::to_string(traces) + " traces");
}

Outcome Criterion7() {
  Tally tally;
  int cases = 0;
  for (const Arrangement& arr : testing::MixedSuite()) {
    if (arr.n() > 3) continue;
    Pipeline p = Run(arr);
    for (int nu = 2; nu <= 3; ++nu) {
      std::vector<std::vector<QVector>> gens;
      for (int i = 0; i < arr.n(); ++i) {
        for (int c = 0; c < nu; ++c) gens.push_back(arr.subspaces[i].RowList());
      }
      Arrangement repeated = MakeArrangement(arr.ambient_dim, gens);
      RankFunction rk = ComputeRankFunction(repeated);
      LatticePointSet star = EnumeratePoints(rk.values(), repeated.n(), true);
      const std::vector<int64_t> base = BettiFromGamma(GammaVector(star), repeated.n()).betti;
      PowersInvariants pw = ComputePowersInvariants(p.rk, p.trunc, p.flats, p.star, nu);
      const std::string tag = Describe(arr) + " nu=" + std::to_string(nu);
      tally.Expect(pw.betti.betti == base, "beta " + tag + " " + Str(pw.betti.betti) +
                                               " vs " + Str(base));
      tally.Expect(pw.pd == DilworthTruncation(rk)(FullSet(repeated.n())), "pd " + tag);
      ++cases;
    }
  }
  return tally.Finish(std::to_string(cases) + " (arrangement, nu) pairs");
}

Outcome Criterion8() {
  Tally tally;
  int cases = 0;
  for (const Arrangement& arr : testing::MixedSuite()) {
    if (arr.n() > 3) continue;
    Pipeline p = Run(arr);
    const int n = arr.n();
    std::vector<int> u(n, 0);
    while (true) {
      // V_1^{u_1} ... V_n^{u_n}: products of u_i forms from each V_i.
      std::vector<SparsePoly> products = {
          SparsePoly::Constant(arr.ambient_dim, Rat(1))};
      for (int i = 0; i < n; ++i) {
        std::vector<SparsePoly> next;
        for (const SparsePoly& q :
             SymmetricProducts(LinearForms(arr.subspaces[i].RowList()), u[i], arr.ambient_dim)) {
          for (const SparsePoly& acc : products) next.push_back(acc * q);
        }
        products = std::move(next);
      }
      const size_t oracle = OracleSpanDim(products);
      const int64_t value = MultiviewHilbert(p.star, u);
      tally.Expect(value == static_cast<int64_t>(oracle),
                   Describe(arr) + " u=" + Str(u) + ": " + std::to_string(value) + " vs " +
                       std::to_string(oracle));
      ++cases;
      int i = n - 1;
      while (i >= 0 && u[i] == 2) u[i--] = 0;
      if (i < 0) break;
      ++u[i];
    }
  }
  return tally.Finish(std::to_string(cases) + " (arrangement, u) pairs");
}

struct GeneralCase {
  int d;
  std::vector<int> dims;
  uint64_t seed;
};

const std::vector<GeneralCase>& GeneralCases() {
  static const std::vector<GeneralCase> cases = {
      {3, {2, 2}, 1},       {4, {2, 2}, 2},       {4, {3, 2}, 3},    {4, {2, 2, 2}, 4},
      {5, {2, 2, 2}, 5},    {5, {3, 3}, 6},       {6, {3, 2, 2}, 7}, {4, {1, 1, 1, 1}, 8},
      {4, {2, 1, 1, 1}, 9}, {5, {2, 2, 1, 1}, 10}, {6, {4, 3}, 11},  {6, {5, 2}, 12}};
  return cases;
}

// Degreewise comparison of J with the intersection of the I_i over
// t = lo..n+2; returns whether every degree agreed.
bool AgreesOnWindow(const Arrangement& arr, int lo, Tally& cross) {
  const int n = arr.n();
  std::vector<int> ts;
  for (int t = lo; t <= n + 2; ++t) ts.push_back(t);
  bool all = true;
  for (const DegreeComparison& c :
       CompareDegreewise(arr, std::vector<int>(n, 1), IntersectionOfFactors(n), ts)) {
    all = all && c.equal;
    if (n == 2) {
      // Independent intersection for two factors.
      std::vector<SparsePoly> a = LinearForms(arr.subspaces[0].RowList());
      std::vector<SparsePoly> b = LinearForms(arr.subspaces[1].RowList());
      std::vector<int> da(a.size(), 1), db(b.size(), 1);
      cross.Expect(c.intersection_dim ==
                       DegreeTDimIntersection(a, da, b, db, c.t, arr.ambient_dim),
                   "intersection cross-check " + Describe(arr) + " t=" + std::to_string(c.t));
    }
  }
  return all;
}

Outcome GeneralCriterion(bool supplementary) {
  Tally tally;
  int predicted_equal = 0;
  for (const GeneralCase& gc : GeneralCases()) {
    Arrangement arr = SampleLinearlyGeneral(gc.d, gc.dims, gc.seed);
    const int n = arr.n();
    const int sum = std::accumulate(gc.dims.begin(), gc.dims.end(), 0);
    const bool predicted = sum < gc.d + n - 1;
    predicted_equal += predicted;
    const bool observed = AgreesOnWindow(arr, supplementary ? 1 : n, tally);
    tally.Expect(observed == predicted, "d=" + std::to_string(gc.d) + " dims=" + Str(gc.dims) +
                                            " predicted " + (predicted ? "equal" : "unequal") +
                                            ", observed " + (observed ? "equal" : "unequal"));
  }
  std::ostringstream summary;
  summary << GeneralCases().size() << " linearly general arrangements (" << predicted_equal
          << " predicted equal), t=" << (supplementary ? "1" : "n") << "..n+2, evidence to degree n+2";
  return tally.Finish(summary.str());
}

Outcome Criterion9() { return GeneralCriterion(false); }

Outcome Criterion10() {
  Tally tally;
  int arrangements = 0, degrees = 0;
  for (const Arrangement& arr : testing::MixedSuite()) {
    const int n = arr.n();
    if (n > 3) continue;
    Pipeline p = Run(arr);
    PrimaryDecomposition dec =
        ComputePrimaryDecomposition(p.rk, p.trunc, p.flats, DecompositionMode::Single());
    std::vector<int> ts;
    for (int t = 1; t <= n + 2; ++t) ts.push_back(t);
    for (const DegreeComparison& c :
         CompareDegreewise(arr, std::vector<int>(n, 1), dec.components, ts)) {
      tally.Expect(c.equal, Describe(arr) + " t=" + std::to_string(c.t) + ": " +
                                std::to_string(c.ideal_dim) + " vs " +
                                std::to_string(c.intersection_dim));
      ++degrees;
      if (dec.components.size() != 2) continue;
      // Graded-span intersection of the two components from explicit
      // generators: products of m linear forms of each I_B.
      std::vector<std::vector<SparsePoly>> gens;
      std::vector<std::vector<int>> degs;
      for (const PrimaryComponent& comp : dec.components) {
        gens.push_back(SymmetricProducts(LinearForms(SubspaceSumBasis(arr, comp.b)),
                                         comp.multiplicity, arr.ambient_dim));
        degs.emplace_back(gens.back().size(), comp.multiplicity);
      }
      const size_t span_dim = DegreeTDimIntersection(gens[0], degs[0], gens[1], degs[1], c.t,
                                                     arr.ambient_dim);
      tally.Expect(span_dim == c.intersection_dim,
                   "graded-span intersection " + Describe(arr) + " t=" + std::to_string(c.t));
    }
    ++arrangements;
  }
  return tally.Finish(std::to_string(arrangements) + " arrangements, " + std::to_string(degrees) +
                      " degrees");
}

Outcome Criterion11() {
  Tally tally;
  std::ostringstream witnesses;
  Pipeline p = Run(Transversal());
  FreeComplex good = Resolve(p);

  FreeComplex flipped = good;
  for (auto& column : flipped.differentials.back()) {
    if (!column.empty()) {
      column.front().second *= Rat(-1);
      break;
    }
  }
  ChainCheck sq = VerifySquareZero(flipped);
  tally.Expect(!sq.ok, "corrupted sign passed square zero");
  tally.Expect(sq.degree.has_value() && !sq.column.empty() && !sq.value.empty(),
               "square-zero witness missing");
  witnesses << "sign: degree " << sq.degree.value_or(-1) << " column " << sq.column;

  FreeComplex constant = good;
  constant.differentials[1][0].front().second += SparsePoly::Constant(constant.num_vars, Rat(1));
  ChainCheck mc = VerifyMinimality(constant);
  tally.Expect(!mc.ok, "constant entry passed minimality");
  tally.Expect(mc.degree.has_value() && !mc.column.empty() && !mc.row.empty(),
               "minimality witness missing");
  witnesses << "; constant: degree " << mc.degree.value_or(-1) << " entry " << mc.value;

  Arrangement plane = DoubledPlane();
  CertificationResult cert = CertifyAssumptionDetailed(plane, InputBases(plane));
  tally.Expect(!cert.certified, "identical bases passed certification");
  tally.Expect(cert.witness.has_value() && cert.witness_dim < cert.witness_bound,
               "certification witness missing");
  if (cert.witness) {
    witnesses << "; basis: a=" << PointToString(*cert.witness) << " dim " << cert.witness_dim
              << " < " << cert.witness_bound;
  }
  tally.Expect(VerifySquareZero(good).ok && VerifyMinimality(good).ok, "unmodified complex");
  return tally.Finish(witnesses.str());
}

struct Criterion {
  int id;
  std::function<Outcome()> run;
  double limit_seconds;  // 0: no pinned limit
};

}  // namespace
}  // namespace sarr

int main(int argc, char** argv) {
  using sarr::Outcome;
  const std::vector<sarr::Criterion> criteria = {
      {1, sarr::Criterion1, 1.0},   {2, sarr::Criterion2, 1.0},   {3, sarr::Criterion3, 120.0},
      {4, sarr::Criterion4, 60.0},  {5, sarr::Criterion5, 0.0},   {6, sarr::Criterion6, 0.0},
      {7, sarr::Criterion7, 120.0}, {8, sarr::Criterion8, 0.0},   {9, sarr::Criterion9, 0.0},
      {10, sarr::Criterion10, 0.0}, {11, sarr::Criterion11, 0.0}};
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--criterion N]\n";
      return 1;
    }
  }
  bool all_pass = true;
  bool ran = false;
  for (const sarr::Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      out.pass = false;
      out.detail += "; over the " + std::to_string(c.limit_seconds) + " s limit";
    }
    std::printf("CRITERION %d: %s [%.3f s] %s\n", c.id, out.pass ? "PASS" : "FAIL", secs,
                out.detail.c_str());
    if (c.id == 9) {
      // Same arrangements over t = 1..n+2, where the two ideals can differ.
      const Outcome extra = sarr::GeneralCriterion(true);
      std::printf("CRITERION 9 (supplementary, not the stated window): %s %s\n",
                  extra.pass ? "PASS" : "FAIL", extra.detail.c_str());
    }
    all_pass = all_pass && out.pass;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 1;
  }
  return all_pass ? 0 : 1;
}
