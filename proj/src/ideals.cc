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

#include "sarr/ideals.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "sarr/binomial.h"
#include "sarr/errors.h"

namespace sarr {
namespace {

int PointSize(const Point& p) { return std::accumulate(p.begin(), p.end(), 0); }

void CheckInBox(std::span<const int> dims, const Point& p) {
  if (p.size() != dims.size()) throw InputError("point " + PointToString(p) + " has wrong length");
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1 || p[i] > dims[i]) {
      throw InputError("point " + PointToString(p) + " lies outside the box D");
    }
  }
}

std::vector<Point> BoxPoints(std::span<const int> dims) {
  std::vector<Point> out;
  Point a(dims.size(), 1);
  if (std::any_of(dims.begin(), dims.end(), [](int d) { return d < 1; })) return out;
  while (true) {
    out.push_back(a);
    size_t i = a.size();
    while (i > 0 && a[i - 1] == dims[i - 1]) a[--i] = 1;
    if (i == 0) return out;
    ++a[i - 1];
  }
}

PosetIdeal FromMembers(std::span<const int> dims, std::vector<Point> members) {
  PosetIdeal p;
  p.dims.assign(dims.begin(), dims.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  p.members = std::move(members);
  for (const Point& m : p.members) {
    bool maximal = true;
    Point up = m;
    for (size_t i = 0; i < up.size() && maximal; ++i) {
      ++up[i];
      if (p.Contains(up)) maximal = false;
      --up[i];
    }
    if (maximal) p.maximal_elements.push_back(m);
  }
  return p;
}

bool LessEq(const Point& a, const Point& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

void CheckInsideDV(const PosetIdeal& p, const LatticePointSet& dv) {
  for (const Point& a : p.members) {
    if (!dv.Contains(a)) {
      throw InputError("poset ideal is not contained in D_V: " + PointToString(a));
    }
  }
}

std::string QSummary(std::span<const Point> order, size_t upto) {
  std::string out = "[";
  for (size_t k = 0; k < upto; ++k) {
    if (k) out += ",";
    out += PointToString(order[k]);
  }
  return out + "]";
}

}  // namespace

std::string PointToString(const Point& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

bool PosetIdeal::Contains(const Point& p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

PosetIdeal MakePosetIdeal(std::span<const int> dims, std::span<const Point> generators) {
  for (const Point& g : generators) CheckInBox(dims, g);
  std::vector<Point> members;
  for (const Point& b : BoxPoints(dims)) {
    for (const Point& g : generators) {
      if (LessEq(b, g)) {
        members.push_back(b);
        break;
      }
    }
  }
  return FromMembers(dims, std::move(members));
}

PosetIdeal FullBox(std::span<const int> dims) { return FromMembers(dims, BoxPoints(dims)); }

std::pair<PosetIdeal, PosetIdeal> MeetJoin(const PosetIdeal& p1, const PosetIdeal& p2) {
  if (p1.dims != p2.dims) throw InputError("poset ideals live in different boxes");
  std::vector<Point> meet, join;
  std::set_intersection(p1.members.begin(), p1.members.end(), p2.members.begin(),
                        p2.members.end(), std::back_inserter(meet));
  std::set_union(p1.members.begin(), p1.members.end(), p2.members.begin(), p2.members.end(),
                 std::back_inserter(join));
  return {FromMembers(p1.dims, std::move(meet)), FromMembers(p1.dims, std::move(join))};
}

PosetIdeal ReduceToDV(const PosetIdeal& p, const LatticePointSet& dv) {
  std::vector<Point> kept;
  for (const Point& a : p.members) {
    if (dv.Contains(a)) kept.push_back(a);
  }
  return FromMembers(p.dims, std::move(kept));
}

SparsePoly ProductForm(const GenericBases& f, const Point& a) {
  if (a.size() != f.f.size()) throw InputError("point has wrong number of coordinates");
  if (f.f.empty()) throw InputError("empty collection of bases");
  const size_t num_vars = f.f.front().front().size();
  SparsePoly out = SparsePoly::Constant(num_vars, 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || a[i] > static_cast<int>(f.f[i].size())) {
      throw InputError("point " + PointToString(a) + " lies outside the box D");
    }
    out = out * SparsePoly::Linear(f.f[i][a[i] - 1]);
  }
  return out;
}

std::vector<SparsePoly> GeneratorFamily::Polys() const {
  std::vector<SparsePoly> out;
  for (const auto& [a, p] : entries) out.push_back(p);
  return out;
}

std::vector<int> GeneratorFamily::Degrees() const {
  return std::vector<int>(entries.size(), degree);
}

GeneratorFamily MakeGeneratorFamily(const PosetIdeal& p, const GenericBases& f) {
  if (!f.certified) throw InputError("bases are not certified generic");
  GeneratorFamily family;
  family.degree = static_cast<int>(f.f.size());
  for (const Point& a : p.members) family.entries.emplace_back(a, ProductForm(f, a));
  return family;
}

ReductionCheck VerifyReduction(const PosetIdeal& original, const PosetIdeal& reduced,
                               const GenericBases& f) {
  const GeneratorFamily full = MakeGeneratorFamily(original, f);
  const GeneratorFamily small = MakeGeneratorFamily(reduced, f);
  const size_t num_vars = f.f.front().front().size();
  const std::vector<SparsePoly> full_polys = full.Polys();
  const std::vector<SparsePoly> small_polys = small.Polys();
  const std::vector<int> full_deg = full.Degrees();
  const std::vector<int> small_deg = small.Degrees();
  ReductionCheck check;
  check.rank_original =
      Rank(GradedComponentSpan(full_polys, full_deg, full.degree, num_vars));
  check.rank_reduced =
      Rank(GradedComponentSpan(small_polys, small_deg, full.degree, num_vars));
  // J_{P'} is inside J_P, so equal dimensions in the generating degree
  // mean equal ideals.
  check.equal = check.rank_original == check.rank_reduced;
  return check;
}

std::vector<Point> DefaultLinearExtension(const PosetIdeal& p) {
  std::vector<Point> order = p.members;
  std::stable_sort(order.begin(), order.end(), [](const Point& a, const Point& b) {
    const int sa = PointSize(a), sb = PointSize(b);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return order;
}

std::vector<Point> RandomLinearExtension(const PosetIdeal& p, std::mt19937_64& rng) {
  // Repeatedly pick a uniformly random minimal element of what is left.
  std::vector<Point> remaining = p.members;
  std::vector<Point> order;
  while (!remaining.empty()) {
    std::vector<size_t> minimal;
    for (size_t i = 0; i < remaining.size(); ++i) {
      bool is_min = true;
      for (size_t j = 0; j < remaining.size() && is_min; ++j) {
        if (j != i && LessEq(remaining[j], remaining[i])) is_min = false;
      }
      if (is_min) minimal.push_back(i);
    }
    std::uniform_int_distribution<size_t> pick(0, minimal.size() - 1);
    const size_t chosen = minimal[pick(rng)];
    order.push_back(remaining[chosen]);
    remaining.erase(remaining.begin() + chosen);
  }
  return order;
}

bool IsLinearExtension(const PosetIdeal& p, std::span<const Point> order) {
  if (order.size() != p.size()) return false;
  std::set<Point> seen;
  for (const Point& a : order) {
    if (!p.Contains(a) || seen.count(a)) return false;
    for (const Point& b : p.members) {
      if (b != a && LessEq(b, a) && !seen.count(b)) return false;
    }
    seen.insert(a);
  }
  return true;
}

LinearQuotientsReport VerifyLinearQuotients(const PosetIdeal& p, const LatticePointSet& dv,
                                            const GenericBases& f,
                                            std::span<const Point> order) {
  CheckInsideDV(p, dv);
  if (!IsLinearExtension(p, order)) {
    throw InputError("order is not a linear extension of the poset ideal");
  }
  LinearQuotientsReport report;
  if (p.empty()) return report;

  const int n = static_cast<int>(f.f.size());
  const size_t num_vars = f.f.front().front().size();
  const MonomialBasis& deg_n = GetMonomialBasis(num_vars, n);
  const MonomialBasis& deg_n1 = GetMonomialBasis(num_vars, n + 1);
  EchelonBasis previous_n(deg_n.size());
  EchelonBasis previous_n1(deg_n1.size());

  for (size_t k = 0; k < order.size(); ++k) {
    const Point& a = order[k];
    QuotientStep step;
    step.a = a;
    step.b = a;
    for (int& x : step.b) --x;

    const SparsePoly fa = ProductForm(f, a);
    step.outside_previous = previous_n.Insert(CoefficientVector(fa, deg_n));

    std::vector<QVector> shifted;  // x_v f_a in degree n + 1
    for (size_t v = 0; v < num_vars; ++v) {
      shifted.push_back(CoefficientVector(SparsePoly::Variable(num_vars, v) * fa, deg_n1));
    }

    const std::vector<QVector> w = WSpace(f, step.b);
    step.w_dim = static_cast<int>(SpanDim(w));
    step.w_in_colon = true;
    for (const QVector& ell : w) {
      QVector combo(deg_n1.size());
      for (size_t v = 0; v < num_vars; ++v) {
        if (ell[v] == 0) continue;
        for (size_t c = 0; c < combo.size(); ++c) {
          if (shifted[v][c] != 0) combo[c] += ell[v] * shifted[v][c];
        }
      }
      if (!previous_n1.Contains(combo)) {
        step.w_in_colon = false;
        break;
      }
    }

    // Each independent x_v f_a raises the rank by one; the rest is the colon.
    int inserted = 0;
    for (const QVector& s : shifted) inserted += previous_n1.Insert(s) ? 1 : 0;
    step.colon_dim = static_cast<int>(num_vars) - inserted;

    if (!step.outside_previous || !step.w_in_colon || step.colon_dim != step.w_dim) {
      std::ostringstream msg;
      msg << "linear quotients failed at a=" << PointToString(a)
          << " b=" << PointToString(step.b) << " Q=" << QSummary(order, k)
          << " f_a_new=" << step.outside_previous << " W_b_in_colon=" << step.w_in_colon
          << " dim_colon=" << step.colon_dim << " dim_W_b=" << step.w_dim;
      throw TheoremViolation(msg.str());
    }
    report.steps.push_back(std::move(step));
  }
  return report;
}

std::vector<int64_t> PosetBetti(const PosetIdeal& p, const LatticePointSet& dv) {
  CheckInsideDV(p, dv);
  const int n = static_cast<int>(p.dims.size());
  std::vector<int64_t> betti;
  for (const Point& a : p.members) {
    const int top = PointSize(a) - n;
    if (static_cast<int>(betti.size()) <= top) betti.resize(top + 1, 0);
    for (int i = 0; i <= top; ++i) betti[i] += Binomial(top, i);
  }
  return betti;
}

}  // namespace sarr
