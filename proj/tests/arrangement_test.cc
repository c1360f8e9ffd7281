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

#include "sarr/arrangement.h"

#include <numeric>

#include "gtest/gtest.h"
#include "json.hpp"
#include "sarr/errors.h"
#include "sarr/polymatroid.h"
#include "test_support.h"

namespace sarr {
namespace {

using nlohmann::json;
using testing::FromIntegers;

Arrangement Transversal() {
  return FromIntegers(4, {{{1, 0, 0, 0}, {0, 1, 0, 0}}, {{0, 0, 1, 0}, {0, 0, 0, 1}}});
}

Arrangement DoubledPlane() { return FromIntegers(2, {{{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}}); }

std::vector<Point> ClosedBox(const std::vector<int>& dims) {
  std::vector<Point> out;
  Point a(dims.size(), 0);
  while (true) {
    out.push_back(a);
    int i = static_cast<int>(a.size()) - 1;
    while (i >= 0 && a[i] == dims[i]) a[i--] = 0;
    if (i < 0) return out;
    ++a[i];
  }
}

TEST(LoadArrangementTest, CoordinatePlanes) {
  json doc = json::parse(R"({"ambient_dim": 4, "subspaces": [
      [["1","0","0","0"],["0","1","0","0"]], [["0","0","1","0"],["0","0","0","1"]]],
      "seed": 42})");
  Arrangement arr = LoadArrangement(doc);
  EXPECT_EQ(arr.n(), 2);
  EXPECT_EQ(arr.dims, (std::vector<int>{2, 2}));
  EXPECT_EQ(arr.seed, 42u);
  EXPECT_EQ(LoadArrangement(doc, 7).seed, 7u);
}

TEST(LoadArrangementTest, RedundantRowsAreDropped) {
  json doc = json::parse(R"({"ambient_dim": 3, "subspaces": [
      [["1","2","0"],["0","1","1/2"],["1","3","0.5"]]]})");
  Arrangement arr = LoadArrangement(doc);
  EXPECT_EQ(arr.dims, (std::vector<int>{2}));
  EXPECT_EQ(arr.subspaces[0].rows(), 2u);
}

TEST(LoadArrangementTest, Errors) {
  EXPECT_THROW(LoadArrangement(json::parse(R"({"ambient_dim": 2, "subspaces": []})")),
               InputError);
  EXPECT_THROW(LoadArrangement(json::parse(R"({"ambient_dim": 2, "subspaces": [[["0","0"]]]})")),
               InputError);
  EXPECT_THROW(
      LoadArrangement(json::parse(R"({"ambient_dim": 2, "subspaces": [[["1","0"],["1"]]]})")),
      InputError);
  EXPECT_THROW(LoadArrangement(json::parse(R"({"ambient_dim": 2, "subspaces": [[["x","0"]]]})")),
               ParseError);
  EXPECT_THROW(LoadArrangement(json::parse(R"({"ambient_dim": 2, "subspaces": [[[0.5, 1]]]})")),
               ParseError);
  EXPECT_THROW(LoadArrangement(json::parse(R"({"subspaces": [[["1","0"]]]})")), InputError);
}

TEST(LoadArrangementTest, GenericShorthandIsLinearlyGeneral) {
  json doc = json::parse(R"({"generic": {"ambient_dim": 5, "dims": [2, 3, 2]}, "seed": 9})");
  Arrangement arr = LoadArrangement(doc);
  EXPECT_EQ(arr.dims, (std::vector<int>{2, 3, 2}));
  RankFunction rk = ComputeRankFunction(arr);
  for (Subset a = 0; a < 8; ++a) {
    int sum = 0;
    for (int i : Elements(a)) sum += arr.dims[i];
    EXPECT_EQ(rk(a), std::min(sum, 5));
  }
  // Same seed, same arrangement.
  Arrangement again = LoadArrangement(doc);
  EXPECT_EQ(again.subspaces[1].RowList(), arr.subspaces[1].RowList());
}

TEST(RankFunctionTest, Examples) {
  RankFunction t = ComputeRankFunction(Transversal());
  EXPECT_EQ(t(0b01), 2);
  EXPECT_EQ(t(0b10), 2);
  EXPECT_EQ(t(0b11), 4);
  RankFunction p = ComputeRankFunction(DoubledPlane());
  EXPECT_EQ(p(0b01), 2);
  EXPECT_EQ(p(0b11), 2);
  RankFunction lines = ComputeRankFunction(FromIntegers(2, {{{1, 0}}, {{0, 1}}, {{1, 1}}}));
  EXPECT_EQ(lines(0b011), 2);
  EXPECT_EQ(lines(0b101), 2);
  EXPECT_EQ(lines(0b110), 2);
  EXPECT_EQ(lines(0b111), 2);
}

TEST(RankFunctionTest, PolymatroidAxiomsOnRandomArrangements) {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    const int n = 1 + seed % 6;
    Arrangement arr = testing::RandomArrangement(seed, n, 2 + seed % 5, 3);
    RankFunction rk = ComputeRankFunction(arr);
    EXPECT_EQ(rk.values(), testing::OracleRankFunction(arr));
    EXPECT_EQ(rk(0), 0);
    const Subset full = FullSet(n);
    for (Subset a = 0; a <= full; ++a) {
      for (Subset b = 0; b <= full; ++b) {
        if ((a & b) == a) {
          EXPECT_LE(rk(a), rk(b));
        }
        EXPECT_GE(rk(a) + rk(b), rk(a | b) + rk(a & b));
      }
    }
  }
}

TEST(GenericBasesTest, SingleSubspaceAlwaysCertifies) {
  Arrangement arr = FromIntegers(3, {{{1, 2, 3}, {0, 1, 1}}});
  EXPECT_TRUE(CertifyAssumption(arr, InputBases(arr)));
  GenericBases f = SampleGenericBases(arr, 3);
  EXPECT_TRUE(f.certified);
  EXPECT_EQ(f.attempts, 1);
}

TEST(GenericBasesTest, CoordinateBasesOfTransversalCertify) {
  Arrangement arr = Transversal();
  EXPECT_TRUE(CertifyAssumption(arr, InputBases(arr)));
}

TEST(GenericBasesTest, DoubledPlaneNeedsMutuallyGenericBases) {
  Arrangement arr = DoubledPlane();
  // Identical coordinate bases: f_11 = f_21 so W_(1,1) is a line.
  CertificationResult bad = CertifyAssumptionDetailed(arr, InputBases(arr));
  EXPECT_FALSE(bad.certified);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(*bad.witness, (Point{1, 1}));
  EXPECT_EQ(bad.witness_dim, 1);
  EXPECT_EQ(bad.witness_bound, 2);
  GenericBases f = SampleGenericBases(arr, 17);
  EXPECT_TRUE(f.certified);
  EXPECT_EQ(SpanDim(WSpace(f, {1, 1})), 2u);
}

TEST(GenericBasesTest, ForeignVectorIsInputError) {
  Arrangement arr = Transversal();
  GenericBases f = InputBases(arr);
  f.f[0][0] = {0, 0, 1, 0};
  EXPECT_THROW(CertifyAssumption(arr, f), InputError);
  GenericBases g = InputBases(arr);
  g.f[1].pop_back();
  EXPECT_THROW(CertifyAssumption(arr, g), InputError);
}

TEST(GenericBasesTest, SamplingIsDeterministic) {
  Arrangement arr = testing::RandomArrangement(77, 3, 4, 3);
  GenericBases a = SampleGenericBases(arr, 5), b = SampleGenericBases(arr, 5);
  EXPECT_EQ(a.f, b.f);
  for (size_t i = 0; i < a.f.size(); ++i) {
    EXPECT_EQ(a.f[i].size(), static_cast<size_t>(arr.dims[i]));
    EXPECT_EQ(SpanDim(a.f[i]), static_cast<size_t>(arr.dims[i]));
  }
}

TEST(WSpaceTest, Examples) {
  Arrangement arr = Transversal();
  GenericBases f = InputBases(arr);
  EXPECT_TRUE(WSpace(f, {0, 0}).empty());
  EXPECT_EQ(SpanDim(WSpace(f, {2, 2})), 4u);
  EXPECT_THROW(WSpace(f, {3, 0}), InputError);
}

TEST(ContainedSubspacesTest, Examples) {
  Arrangement arr = DoubledPlane();
  GenericBases f = SampleGenericBases(arr, 1);
  EXPECT_EQ(ContainedSubspaces(arr, f, {0, 0}), 0u);
  EXPECT_EQ(ContainedSubspaces(arr, f, {2, 0}), 0b11u);
  EXPECT_EQ(ContainedSubspaces(arr, f, {1, 0}), 0u);
}

TEST(FlatsTest, Examples) {
  EXPECT_EQ(Flats(ComputeRankFunction(Transversal())), (std::vector<Subset>{0, 1, 2, 3}));
  EXPECT_EQ(Flats(ComputeRankFunction(DoubledPlane())), (std::vector<Subset>{0, 3}));
  Arrangement one = FromIntegers(2, {{{1, 1}}});
  EXPECT_EQ(Flats(ComputeRankFunction(one)), (std::vector<Subset>{0, 1}));
}

// W_a dimension splits along the contained subspaces, and the two
// characterizations of the lattice-point sets hold on the whole box.
TEST(WSpaceTest, StructureOnMixedSuite) {
  for (const Arrangement& arr : testing::MixedSuite()) {
    RankFunction rk = ComputeRankFunction(arr);
    GenericBases f = SampleGenericBases(arr, *arr.seed);
    ASSERT_TRUE(f.certified);
    const std::vector<int>& rv = rk.values();
    auto points = testing::OraclePoints(rv, arr.n(), 0);
    auto star = testing::OraclePoints(rv, arr.n(), 1);
    for (const Point& a : ClosedBox(arr.dims)) {
      const Subset t = ContainedSubspaces(arr, f, a);
      int expected = rk(t);
      for (int i = 0; i < arr.n(); ++i) {
        if (!Contains(t, i)) expected += a[i];
      }
      const int w = static_cast<int>(SpanDim(WSpace(f, a)));
      EXPECT_EQ(w, expected) << testing::Describe(arr);
      const int size = std::accumulate(a.begin(), a.end(), 0);
      const bool in_p = std::binary_search(points.begin(), points.end(), a);
      const bool in_star = std::binary_search(star.begin(), star.end(), a);
      EXPECT_EQ(w == size, in_p) << testing::Describe(arr);
      EXPECT_EQ(t == 0, in_star) << testing::Describe(arr);
    }
  }
}

}  // namespace
}  // namespace sarr
