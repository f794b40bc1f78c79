// Copyright 2026 The qmat Authors.
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

#include "qmat/construct.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qmat/error.hpp"
#include "test_util.hpp"

namespace qmat {
namespace {

using testing::F2;
using testing::Indices;
using testing::MixedDiamond;

std::vector<QMatroid> SmallCatalogue() {
  return {Uniform(F2(), 0, 0), Uniform(F2(), 0, 1), Uniform(F2(), 1, 1), Uniform(F2(), 0, 2),
          MixedDiamond("10"),  Uniform(F2(), 1, 2), Uniform(F2(), 2, 2)};
}

// Every labelled q-matroid on F_2^2: three uniform ones and three mixed diamonds.
std::vector<QMatroid> AllOnPlane() {
  return {Uniform(F2(), 0, 2), Uniform(F2(), 1, 2), Uniform(F2(), 2, 2),
          MixedDiamond("10"),  MixedDiamond("01"),  MixedDiamond("11")};
}

// Positive combinations of q-matroid ranks and dim, optionally truncated.
SubmodularFn RandomSubmodular(int n, std::mt19937_64& rng) {
  LatticePtr lat = Lattice::Get(F2(), n);
  std::uniform_int_distribution<int> coef(0, 2), terms(1, 3), coin(0, 1);
  std::vector<int> f(lat->size(), 0);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    QMatroid m = testing::RandomQMatroid(n, rng);
    const int c = coef(rng) + 1;
    for (int a = 0; a < lat->size(); ++a) f[a] += c * m.rank(a);
  }
  const int d = coef(rng);
  for (int a = 0; a < lat->size(); ++a) f[a] += d * lat->dim(a);
  if (coin(rng)) {
    std::uniform_int_distribution<int> cut(0, f.back());
    const int c = cut(rng);
    for (int& v : f) v = std::min(v, c);
  }
  return SubmodularFn(lat, f);
}

TEST(UniformTest, Basics) {
  QMatroid u01 = Uniform(F2(), 0, 1);
  EXPECT_EQ(Derive(u01).loops, std::vector<int>{1});
  QMatroid u23 = Uniform(F2(), 2, 3);
  EXPECT_EQ(Derive(u23).bases, u23.lattice().bucket(2));
  EXPECT_THROW(Uniform(F2(), 3, 2), Error);
}

TEST(SubmodularTest, Flags) {
  LatticePtr lat = Lattice::Get(F2(), 2);
  SubmodularFn dim(lat, {0, 1, 1, 1, 2});
  EXPECT_TRUE(dim.nonneg() && dim.increasing() && dim.submodular() && dim.zero_at_zero());
  SubmodularFn shifted(lat, {1, 2, 2, 2, 3});
  EXPECT_FALSE(shifted.zero_at_zero());
  EXPECT_NO_THROW(CircuitsFromSubmodular(shifted));
  EXPECT_THROW(MatroidFromSubmodular(shifted), Error);
  SubmodularFn super(lat, {0, 0, 0, 0, 2});
  EXPECT_FALSE(super.submodular());
  EXPECT_THROW(CircuitsFromSubmodular(super), Error);
  SubmodularFn dec(lat, {1, 0, 0, 0, 0});
  EXPECT_FALSE(dec.increasing());
}

TEST(SubmodularTest, Circuits) {
  LatticePtr lat = Lattice::Get(F2(), 2);
  std::vector<int> dim(lat->size());
  for (int a = 0; a < lat->size(); ++a) dim[a] = lat->dim(a);
  EXPECT_TRUE(CircuitsFromSubmodular(SubmodularFn(lat, dim)).empty());
  QMatroid u12 = Uniform(F2(), 1, 2);
  EXPECT_EQ(CircuitsFromSubmodular(SubmodularFn(lat, u12.ranks())), std::vector<int>{lat->top()});
  std::vector<int> twice(lat->size());
  for (int a = 0; a < lat->size(); ++a) twice[a] = 2 * u12.rank(a);
  EXPECT_TRUE(CircuitsFromSubmodular(SubmodularFn(lat, twice)).empty());
}

TEST(SubmodularTest, Rank) {
  for (int n = 1; n <= 3; ++n) {
    LatticePtr lat = Lattice::Get(F2(), n);
    std::vector<int> dim(lat->size()), zero(lat->size(), 0);
    for (int a = 0; a < lat->size(); ++a) dim[a] = lat->dim(a);
    EXPECT_EQ(MatroidFromSubmodular(SubmodularFn(lat, dim)), Uniform(F2(), n, n));
    EXPECT_EQ(MatroidFromSubmodular(SubmodularFn(lat, zero)), Uniform(F2(), 0, n));
  }
  // Two mixed diamonds sharing the loop ℓ = ⟨10⟩.
  QMatroid m = MixedDiamond("10");
  const Lattice& lat = m.lattice();
  std::vector<int> f(lat.size());
  for (int a = 0; a < lat.size(); ++a) f[a] = 2 * m.rank(a);
  QMatroid r = MatroidFromSubmodular(SubmodularFn(m.lattice_ptr(), f));
  EXPECT_EQ(r.rank(), 1);
  const int l = lat.parse("10");
  EXPECT_EQ(f[l] + lat.dim(lat.top()) - lat.dim(l), 1);
}

TEST(SubmodularTest, RankAndCircuitPathwaysAgree) {
  std::mt19937_64 rng(41);
  int tested = 0;
  while (tested < 200) {
    SubmodularFn f = RandomSubmodular(3, rng);
    if (!(f.nonneg() && f.increasing() && f.submodular() && f.zero_at_zero())) continue;
    ++tested;
    QMatroid m = MatroidFromSubmodular(f);
    ASSERT_TRUE(CheckRankAxioms(m).ok());
    const std::vector<int> circuits = CircuitsFromSubmodular(f);
    ASSERT_TRUE(CheckCircuitAxioms(f.lattice(), circuits).ok());
    EXPECT_EQ(FromCircuits(f.lattice_ptr(), circuits), m);
    EXPECT_EQ(MatroidFromSubmodular(f, true), m);
  }
}

TEST(UnionTest, Identities) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 30; ++t) {
    QMatroid m = testing::RandomQMatroid(3, rng);
    EXPECT_EQ(Union(m, Uniform(F2(), 0, 3)), m);
    EXPECT_EQ(Intersection(m, Uniform(F2(), 3, 3)), m);
  }
  EXPECT_THROW(Union(Uniform(F2(), 1, 2), Uniform(F2(), 1, 3)), Error);
}

TEST(UnionTest, CoordinateSensitivity) {
  EXPECT_EQ(Union(MixedDiamond("10"), MixedDiamond("10")).rank(), 1);
  EXPECT_EQ(Union(MixedDiamond("10"), MixedDiamond("01")).rank(), 2);
}

TEST(UnionTest, IndependentsMatchOracleOnPlane) {
  for (const QMatroid& a : AllOnPlane()) {
    for (const QMatroid& b : AllOnPlane()) {
      QMatroid u = Union(a, b);
      ASSERT_TRUE(CheckRankAxioms(u).ok());
      EXPECT_EQ(UnionIndependentsOracle(a, b), Derive(u).independent);
      // Independent in both implies independent in the union.
      for (int i = 0; i < u.size(); ++i) {
        const int d = u.lattice().dim(i);
        if (a.rank(i) == d && b.rank(i) == d) EXPECT_EQ(u.rank(i), d);
      }
    }
  }
  QMatroid m = MixedDiamond("10");
  auto oracle = UnionIndependentsOracle(m, m);
  EXPECT_EQ(std::count(oracle.begin(), oracle.end(), m.lattice().parse("10")), 0);
}

TEST(UnionTest, IndependentsMatchOracleOnRandomSpace) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    QMatroid a = testing::RandomQMatroid(3, rng);
    QMatroid b = testing::RandomQMatroid(3, rng);
    EXPECT_EQ(UnionIndependentsOracle(a, b), Derive(Union(a, b)).independent);
  }
}

// Spanning spaces of the intersection are pairwise intersections of spanning
// spaces. The converse fails: {S1 ∩ S2} need not be closed upwards.
TEST(IntersectionTest, SpanningSpacesArePairwiseIntersections) {
  int strict = 0;
  for (const QMatroid& a : AllOnPlane()) {
    for (const QMatroid& b : AllOnPlane()) {
      QMatroid m = Intersection(a, b);
      ASSERT_TRUE(CheckRankAxioms(m).ok());
      const Lattice& lat = m.lattice();
      std::set<int> meets;
      for (int s1 : Derive(a).spanning)
        for (int s2 : Derive(b).spanning) meets.insert(lat.meet(s1, s2));
      std::set<int> complements;
      for (int i : Derive(Union(Dual(a), Dual(b))).independent) complements.insert(lat.perp(i));
      const auto got = Derive(m).spanning;
      EXPECT_EQ(std::set<int>(got.begin(), got.end()), complements);
      for (int s : got) EXPECT_TRUE(meets.count(s));
      strict += meets.size() != got.size();
    }
  }
  RecordProperty("pairs_with_extra_meets", strict);

  QMatroid m = MixedDiamond("10");
  const Lattice& lat = m.lattice();
  std::set<int> meets;
  for (int s1 : Derive(m).spanning)
    for (int s2 : Derive(m).spanning) meets.insert(lat.meet(s1, s2));
  EXPECT_TRUE(meets.count(lat.zero()));
  EXPECT_FALSE(meets.count(lat.parse("10")));
  EXPECT_EQ(Intersection(m, m), m);
}

TEST(IntersectionTest, MinorsDistribute) {
  std::mt19937_64 rng(44);
  std::vector<std::pair<QMatroid, QMatroid>> pairs;
  for (const QMatroid& a : AllOnPlane())
    for (const QMatroid& b : AllOnPlane()) pairs.emplace_back(a, b);
  for (int t = 0; t < 20; ++t)
    pairs.emplace_back(testing::RandomQMatroid(3, rng), testing::RandomQMatroid(3, rng));
  for (const auto& [a, b] : pairs) {
    const QMatroid u = Union(a, b), i = Intersection(a, b);
    for (int x = 0; x < a.size(); ++x) {
      EXPECT_EQ(Restrict(u, x), Union(Restrict(a, x), Restrict(b, x)));
      EXPECT_TRUE(IsIsomorphic(Contract(i, x), Intersection(Contract(a, x), Contract(b, x))));
    }
  }
}

TEST(AddLoopTest, Examples) {
  EXPECT_EQ(AddLoop(Uniform(F2(), 1, 1)), MixedDiamond("01"));
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(AddLoop(Uniform(F2(), 0, n)), Uniform(F2(), 0, n + 1));
  QMatroid m = AddLoop(Uniform(F2(), 1, 2));
  EXPECT_TRUE(CheckRankAxioms(m).ok());
  EXPECT_EQ(m.rank(), 1);
  EXPECT_TRUE(IsIsomorphic(m, testing::P1()));
  std::mt19937_64 rng(45);
  for (int t = 0; t < 30; ++t) {
    QMatroid r = testing::RandomQMatroid(3, rng);
    QMatroid l = AddLoop(r);
    EXPECT_TRUE(CheckRankAxioms(l).ok());
    EXPECT_EQ(l.rank(), r.rank());
    EXPECT_EQ(l.rank(l.lattice().parse("0001")), 0);
  }
}

TEST(DirectSumTest, Examples) {
  EXPECT_EQ(DirectSum(Uniform(F2(), 0, 1), Uniform(F2(), 0, 1)), Uniform(F2(), 0, 2));
  EXPECT_EQ(DirectSum(Uniform(F2(), 1, 1), Uniform(F2(), 1, 1)), Uniform(F2(), 2, 2));
  EXPECT_TRUE(IsIsomorphic(DirectSum(Uniform(F2(), 1, 2), Uniform(F2(), 1, 1)),
                           Dual(testing::P1())));
  QMatroid s = DirectSum(Uniform(F2(), 1, 2), Uniform(F2(), 1, 2));
  EXPECT_EQ(s.rank(), 2);
  const Lattice& lat = s.lattice();
  std::vector<int> dependent;
  for (int a : lat.bucket(2))
    if (s.rank(a) < 2) dependent.push_back(a);
  EXPECT_EQ(dependent, Indices(lat, {"1000,0100", "0010,0001"}));
  EXPECT_TRUE(IsIsomorphic(Dual(s), s));
  EXPECT_THROW(DirectSum(Uniform(F2(), 1, 1), Uniform(Field::FromOrder(3), 1, 1)), Error);
}

TEST(DirectSumTest, ContextEmbeddings) {
  for (const QMatroid& m1 : SmallCatalogue()) {
    for (const QMatroid& m2 : SmallCatalogue()) {
      DirectSumContext ctx = MakeDirectSumContext(m1, m2);
      const Lattice& lat = ctx.m1_ext.lattice();
      EXPECT_EQ(lat.perp(ctx.e1), ctx.e2);
      EXPECT_EQ(Restrict(ctx.m1_ext, ctx.e1), m1);
      EXPECT_EQ(Restrict(ctx.m1_ext, ctx.e2), Uniform(F2(), 0, m2.n()));
      EXPECT_EQ(Restrict(ctx.m2_ext, ctx.e2), m2);
      EXPECT_EQ(Restrict(ctx.m2_ext, ctx.e1), Uniform(F2(), 0, m1.n()));
    }
  }
}

TEST(DirectSumTest, RankAdditivityAndSplitRanks) {
  for (const QMatroid& m1 : SmallCatalogue()) {
    for (const QMatroid& m2 : SmallCatalogue()) {
      QMatroid s = DirectSum(m1, m2);
      ASSERT_TRUE(CheckRankAxioms(s).ok());
      EXPECT_EQ(s.rank(), m1.rank() + m2.rank());
      for (int a1 = 0; a1 < m1.size(); ++a1)
        for (int a2 = 0; a2 < m2.size(); ++a2)
          EXPECT_EQ(s.rank(SplitSubspace(s.field(), m1.lattice().space(a1), m2.lattice().space(a2))),
                    m1.rank(a1) + m2.rank(a2));
    }
  }
}

TEST(DirectSumTest, FourMinorProperty) {
  for (const QMatroid& m1 : SmallCatalogue()) {
    for (const QMatroid& m2 : SmallCatalogue()) {
      DirectSumContext ctx = MakeDirectSumContext(m1, m2);
      QMatroid s = DirectSum(m1, m2);
      EXPECT_TRUE(IsIsomorphic(Restrict(s, ctx.e1), m1));
      EXPECT_TRUE(IsIsomorphic(Contract(s, ctx.e2), m1));
      EXPECT_TRUE(IsIsomorphic(Restrict(s, ctx.e2), m2));
      EXPECT_TRUE(IsIsomorphic(Contract(s, ctx.e1), m2));
    }
  }
}

TEST(DirectSumTest, DualOfSumIsSumOfDuals) {
  auto cat = SmallCatalogue();
  for (const QMatroid& m1 : cat)
    for (const QMatroid& m2 : cat)
      EXPECT_EQ(Dual(DirectSum(m1, m2)), DirectSum(Dual(m1), Dual(m2)));
  QMatroid u12 = Uniform(F2(), 1, 2);
  EXPECT_EQ(Dual(DirectSum(u12, u12)), DirectSum(Dual(u12), Dual(u12)));
}

TEST(DirectSumTest, CoordinateInvariance) {
  std::mt19937_64 rng(46);
  const std::vector<std::pair<QMatroid, QMatroid>> pairs = {
      {Uniform(F2(), 1, 2), Uniform(F2(), 1, 1)},
      {MixedDiamond("10"), Uniform(F2(), 1, 2)},
      {testing::P1(), Uniform(F2(), 0, 1)}};
  for (const auto& [m1, m2] : pairs) {
    QMatroid canonical = DirectSum(m1, m2);
    for (int t = 0; t < 10; ++t) {
      QMatroid a = Transform(m1, LatticeIso::Random(F2(), m1.n(), rng));
      QMatroid b = Transform(m2, LatticeIso::Random(F2(), m2.n(), rng));
      EXPECT_TRUE(IsIsomorphic(DirectSum(a, b), canonical));
    }
  }
}

TEST(DirectSumTest, LoopsAndColoops) {
  auto cat = SmallCatalogue();
  for (const QMatroid& m1 : cat) {
    for (const QMatroid& m2 : cat) {
      DirectSumContext ctx = MakeDirectSumContext(m1, m2);
      QMatroid s = Union(ctx.m1_ext, ctx.m2_ext);
      const DerivedFamilies d1 = Derive(m1), d2 = Derive(m2), ds = Derive(s);
      if (d1.loops.empty() && d2.loops.empty()) EXPECT_TRUE(ds.loops.empty());
      const bool coloops1 = Derive(Dual(m1)).loops.empty();
      const bool coloops2 = Derive(Dual(m2)).loops.empty();
      if (coloops1 && coloops2) EXPECT_TRUE(Derive(Dual(s)).loops.empty());
      const Subspace expect = SplitSubspace(s.field(), m1.lattice().space(d1.loopspace),
                                            m2.lattice().space(d2.loopspace));
      EXPECT_EQ(s.lattice().space(ds.loopspace), expect);
    }
  }
}

TEST(DirectSumTest, AssociativityReport) {
  // Reported only: the sum is not claimed to be associative.
  const std::vector<QMatroid> ones = {Uniform(F2(), 0, 1), Uniform(F2(), 1, 1)};
  int agree = 0, total = 0;
  for (const auto& a : ones)
    for (const auto& b : ones)
      for (const auto& c : ones) {
        ++total;
        agree += IsIsomorphic(DirectSum(DirectSum(a, b), c), DirectSum(a, DirectSum(b, c)));
      }
  RecordProperty("associative_triples", std::to_string(agree) + "/" + std::to_string(total));
  SUCCEED();
}

}  // namespace
}  // namespace qmat
