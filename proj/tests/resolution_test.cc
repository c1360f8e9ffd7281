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

#include <random>

#include "gtest/gtest.h"
#include "sarr/errors.h"
#include "test_support.h"

namespace sarr {
namespace {

using testing::FromIntegers;

struct Instance {
  Arrangement arr;
  RankFunction rk;
  LatticePointSet dv;
  GenericBases f;
  FreeComplex complex;
};

Instance Make(Arrangement arr, uint64_t seed = 1) {
  Instance s{std::move(arr), {}, {}, {}, {}};
  s.rk = ComputeRankFunction(s.arr);
  s.dv = BoxIdealDV(s.arr.dims, EnumeratePoints(s.rk.values(), s.arr.n(), true));
  s.f = SampleGenericBases(s.arr, seed);
  s.complex = Specialize(BuildGenericComplex(MakePosetIdeal(s.arr.dims, s.dv.points)), s.f, s.dv);
  return s;
}

Arrangement Transversal() {
  return FromIntegers(4, {{{1, 0, 0, 0}, {0, 1, 0, 0}}, {{0, 0, 1, 0}, {0, 0, 0, 1}}});
}
Arrangement DoubledPlane() { return FromIntegers(2, {{{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}}); }

std::vector<int64_t> Ranks(const FreeComplex& c) {
  std::vector<int64_t> out;
  for (const auto& m : c.modules) out.push_back(static_cast<int64_t>(m.size()));
  return out;
}

// Negates the first entry of the top differential.
void FlipSign(FreeComplex& c) {
  for (auto& column : c.differentials.back()) {
    if (!column.empty()) {
      column.front().second *= Rat(-1);
      return;
    }
  }
}

TEST(GenericComplexTest, KoszulAndTensorRanks) {
  for (int d = 1; d <= 5; ++d) {
    std::vector<int> dims = {d};
    FreeComplex c = BuildGenericComplex(FullBox(dims));
    EXPECT_EQ(Ranks(c), testing::TensorKoszulBetti(dims));
    EXPECT_TRUE(VerifySquareZero(c).ok);
    EXPECT_TRUE(VerifyMinimality(c).ok);
  }
  for (std::vector<int> dims : std::vector<std::vector<int>>{{2, 2}, {2, 2, 2}, {1, 3}, {3, 2}}) {
    FreeComplex c = BuildGenericComplex(FullBox(dims));
    EXPECT_EQ(Ranks(c), testing::TensorKoszulBetti(dims));
    EXPECT_EQ(BettiCensus(c), testing::TensorKoszulBetti(dims));
    EXPECT_TRUE(VerifySquareZero(c).ok);
    EXPECT_EQ(c.augmentation.size(), c.modules[0].size());
  }
}

TEST(GenericComplexTest, Labels) {
  std::vector<int> dims = {2, 2};
  FreeComplex c = BuildGenericComplex(FullBox(dims));
  for (size_t k = 0; k < c.modules.size(); ++k) {
    EXPECT_TRUE(std::is_sorted(c.modules[k].begin(), c.modules[k].end()));
    for (const BasisLabel& l : c.modules[k]) EXPECT_EQ(l.HomologicalDegree(), static_cast<int>(k));
  }
  EXPECT_EQ(c.modules[2].front().MaxTuple(), (Point{2, 2}));
  EXPECT_EQ(GenericVariable(dims, 0, 1), 0u);
  EXPECT_EQ(GenericVariable(dims, 1, 2), 3u);
}

TEST(GenericComplexTest, RandomPosetsAreComplexesAndCensusIsAdditive) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> dims = {1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3),
                             1 + static_cast<int>(rng() % 2)};
    auto random_ideal = [&] {
      std::vector<Point> gens;
      for (int g = 0; g < 2; ++g) {
        Point a;
        for (int d : dims) a.push_back(1 + static_cast<int>(rng() % d));
        gens.push_back(a);
      }
      return MakePosetIdeal(dims, gens);
    };
    PosetIdeal p1 = random_ideal(), p2 = random_ideal();
    auto [meet, join] = MeetJoin(p1, p2);
    auto census = [](const PosetIdeal& p) {
      return p.empty() ? std::vector<int64_t>{} : BettiCensus(BuildGenericComplex(p));
    };
    std::vector<int64_t> a = census(p1), b = census(p2), m = census(meet), j = census(join);
    for (size_t k = 0; k < j.size(); ++k) {
      auto at = [k](const std::vector<int64_t>& v) { return k < v.size() ? v[k] : 0; };
      EXPECT_EQ(at(a) + at(b), at(m) + at(j));
    }
    FreeComplex c = BuildGenericComplex(p1);
    EXPECT_TRUE(VerifySquareZero(c).ok);
    EXPECT_TRUE(VerifyMinimality(c).ok);
  }
}

TEST(SpecializeTest, Examples) {
  Instance p = Make(DoubledPlane());
  EXPECT_TRUE(p.complex.specialized);
  EXPECT_EQ(BettiCensus(p.complex), (std::vector<int64_t>{3, 2}));
  EXPECT_TRUE(VerifySquareZero(p.complex).ok);
  EXPECT_TRUE(VerifyMinimality(p.complex).ok);

  Instance t = Make(Transversal());
  EXPECT_EQ(BettiCensus(t.complex), (std::vector<int64_t>{4, 4, 1}));
  EXPECT_EQ(t.complex.length(), 2);
  EXPECT_TRUE(VerifySquareZero(t.complex).ok);
}

TEST(SpecializeTest, Rejections) {
  Instance p = Make(DoubledPlane());
  std::vector<int> dims = {2, 2};
  FreeComplex full = BuildGenericComplex(FullBox(dims));
  EXPECT_THROW(Specialize(full, p.f, p.dv), InputError);
  FreeComplex ok = BuildGenericComplex(MakePosetIdeal(dims, p.dv.points));
  EXPECT_THROW(Specialize(p.complex, p.f, p.dv), InputError);
  EXPECT_THROW(Specialize(ok, InputBases(p.arr), p.dv), InputError);
}

TEST(MinimalityTest, NegativeControls) {
  Instance t = Make(Transversal());
  FreeComplex flipped = t.complex;
  FlipSign(flipped);
  ChainCheck sq = VerifySquareZero(flipped);
  EXPECT_FALSE(sq.ok);
  EXPECT_TRUE(sq.degree.has_value());
  EXPECT_FALSE(sq.value.empty());

  FreeComplex constant = t.complex;
  constant.differentials[1][0].front().second += SparsePoly::Constant(constant.num_vars, 1);
  ChainCheck mc = VerifyMinimality(constant);
  EXPECT_FALSE(mc.ok);
  EXPECT_EQ(mc.degree, 1);
  EXPECT_FALSE(mc.column.empty());

  // A zero differential is a complex but not exact.
  Instance p = Make(DoubledPlane());
  FreeComplex zero = p.complex;
  for (auto& col : zero.differentials[1]) col.clear();
  EXPECT_TRUE(VerifySquareZero(zero).ok);
  EXPECT_THROW(VerifyStrandExactness(zero, 3), TheoremViolation);
  EXPECT_THROW(VerifyStrandExactness(flipped, 3), TheoremViolation);
}

TEST(StrandTest, Examples) {
  Instance p = Make(DoubledPlane());
  StrandReport r = VerifyStrandExactness(p.complex, 3);
  EXPECT_TRUE(r.exact);
  // (m^2)_3 in two variables is all cubics; C_0(3) = 3 * 2, C_1(3) = 2 * 1.
  EXPECT_EQ(r.ideal_dim, 4u);
  EXPECT_EQ(r.dims, (std::vector<size_t>{6, 2}));
  EXPECT_EQ(r.ranks, (std::vector<size_t>{0, 2}));
  EXPECT_THROW(VerifyStrandExactness(p.complex, 1), InputError);
  EXPECT_THROW(VerifyStrandExactness(BuildGenericComplex(FullBox(std::vector<int>{2})), 2),
               InputError);

  Instance t = Make(Transversal());
  std::vector<int> ts = {2, 3, 4, 5, 6};
  for (const StrandReport& s : VerifyStrands(t.complex, ts)) {
    EXPECT_TRUE(s.exact) << s.t;
    // Euler characteristic of an exact strand.
    int64_t chi = 0;
    for (size_t k = 0; k < s.dims.size(); ++k) {
      chi += (k % 2 ? -1 : 1) * static_cast<int64_t>(s.dims[k]);
    }
    EXPECT_EQ(chi, static_cast<int64_t>(s.ideal_dim));
    GeneratorFamily gf = MakeGeneratorFamily(MakePosetIdeal(t.arr.dims, t.dv.points), t.f);
    std::vector<SparsePoly> polys = gf.Polys();
    std::vector<int> degs = gf.Degrees();
    EXPECT_EQ(s.ideal_dim, Rank(GradedComponentSpan(polys, degs, s.t, 4)));
  }
}

TEST(StrandTest, SuiteCensusAndExactness) {
  for (const Arrangement& arr : testing::MixedSuite()) {
    Instance s = Make(arr);
    const int n = arr.n();
    PosetIdeal p = MakePosetIdeal(arr.dims, s.dv.points);
    EXPECT_EQ(BettiCensus(s.complex), PosetBetti(p, s.dv)) << testing::Describe(arr);
    EXPECT_EQ(s.complex.length(), DilworthTruncation(s.rk)(FullSet(n)));
    EXPECT_TRUE(VerifySquareZero(s.complex).ok) << testing::Describe(arr);
    EXPECT_TRUE(VerifyMinimality(s.complex).ok);
    if (n > 3 || arr.ambient_dim > 5) continue;
    std::vector<int> ts = {n, n + 1, n + 2};
    for (const StrandReport& r : VerifyStrands(s.complex, ts)) {
      EXPECT_TRUE(r.exact) << testing::Describe(arr) << " t=" << r.t;
    }
  }
}

TEST(ExportTest, Structure) {
  Instance t = Make(Transversal());
  nlohmann::json j = ExportComplexJson(t.complex);
  EXPECT_EQ(j["num_vars"], 4);
  EXPECT_EQ(j["dims"], (std::vector<int>{2, 2}));
  ASSERT_EQ(j["modules"].size(), 3u);
  EXPECT_EQ(j["modules"][0].size(), 4u);
  EXPECT_EQ(j["augmentation"].size(), 4u);
  ASSERT_EQ(j["differentials"].size(), 2u);
  EXPECT_EQ(j["differentials"][0]["degree"], 1);
  const auto& entry = j["differentials"][0]["entries"][0];
  EXPECT_TRUE(entry.contains("row"));
  EXPECT_TRUE(entry.contains("col"));
  EXPECT_EQ(entry["coefficients"].size(), 4u);
  EXPECT_EQ(j["augmentation"][0][0]["exponents"].size(), 4u);
  EXPECT_EQ(ExportComplexJson(t.complex).dump(), j.dump());
}

}  // namespace
}  // namespace sarr
