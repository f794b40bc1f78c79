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

#include "qmat/core.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qmat/construct.hpp"
#include "qmat/error.hpp"
#include "test_util.hpp"

namespace qmat {
namespace {

using testing::F2;
using testing::Indices;
using testing::Names;
using testing::P1;
using testing::P2;
using V = std::vector<std::string>;

std::vector<QMatroid> SmallZoo() {
  std::vector<QMatroid> out;
  for (int k = 0; k <= 3; ++k) out.push_back(Uniform(F2(), k, 3));
  out.push_back(P1());
  out.push_back(P2());
  out.push_back(Dual(P1()));
  out.push_back(Dual(P2()));
  return out;
}

TEST(AxiomTest, UniformPasses) {
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_TRUE(CheckRankAxioms(Uniform(F2(), k, n)).ok());
}

TEST(AxiomTest, ViolationsAreLocated) {
  QMatroid u = Uniform(F2(), 2, 3);
  std::vector<int> bad = u.ranks();
  bad[0] = 1;
  AxiomReport rep = CheckRankAxioms(u.lattice(), bad);
  ASSERT_EQ(rep.r1.size(), 1u);
  EXPECT_EQ(rep.r1[0], std::vector<int>{0});
  EXPECT_FALSE(rep.ok());
  EXPECT_THROW(QMatroid::Checked(u.lattice_ptr(), bad), Error);
  EXPECT_THROW(QMatroid(u.lattice_ptr(), std::vector<int>(3, 0)), Error);

  // Rank 2 on a single 2-space only breaks submodularity.
  std::vector<int> sub(u.size(), 0);
  const Lattice& lat = u.lattice();
  for (int a = 0; a < lat.size(); ++a) sub[a] = lat.leq(lat.parse("100,010"), a) ? 2 : 0;
  rep = CheckRankAxioms(lat, sub);
  EXPECT_TRUE(rep.r1.empty());
  EXPECT_FALSE(rep.r3.empty());
}

TEST(AxiomTest, CircuitAxioms) {
  const Lattice& lat = *Lattice::Get(F2(), 3);
  EXPECT_TRUE(CheckCircuitAxioms(lat, lat.bucket(2)).ok());
  AxiomReport rep = CheckCircuitAxioms(lat, Indices(lat, {"100", "100,010"}));
  EXPECT_FALSE(rep.c2.empty());
  EXPECT_FALSE(CheckCircuitAxioms(lat, {0}).c1.empty());
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    QMatroid m = testing::RandomQMatroid(3, rng);
    EXPECT_TRUE(CheckCircuitAxioms(lat, Derive(m).circuits).ok());
  }
}

TEST(FamiliesTest, P1) {
  QMatroid m = P1();
  const Lattice& lat = m.lattice();
  DerivedFamilies d = Derive(m);
  EXPECT_EQ(d.circuits, Indices(lat, {"100", "010,001", "101,010", "101,011", "110,001"}));
  EXPECT_EQ(Names(lat, d.hyperplanes), V{"100"});
  EXPECT_EQ(lat.format(d.loopspace), "100");
  EXPECT_EQ(Names(lat, Cocircuits(m)), Names(lat, Indices(lat, {"010,001"})));
}

TEST(FamiliesTest, UniformAndP2) {
  QMatroid u33 = Uniform(F2(), 3, 3);
  DerivedFamilies d = Derive(u33);
  EXPECT_TRUE(d.circuits.empty());
  EXPECT_EQ(d.bases, std::vector<int>{u33.lattice().top()});
  QMatroid p2 = P2();
  EXPECT_EQ(Names(p2.lattice(), Derive(p2).hyperplanes), V{"100,010"});
  EXPECT_EQ(Names(p2.lattice(), Derive(p2).circuits), (V{"010", "100", "110"}));
  QMatroid u13 = Uniform(F2(), 1, 3);
  EXPECT_EQ(Derive(u13).circuits, u13.lattice().bucket(2));
  EXPECT_EQ(Derive(u13).hyperplanes, std::vector<int>{0});
}

TEST(FamiliesTest, FromCircuitsRoundTrip) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    QMatroid m = testing::RandomQMatroid(3, rng);
    EXPECT_EQ(FromCircuits(m.lattice_ptr(), Derive(m).circuits), m);
  }
}

TEST(FamiliesTest, LoopsFormASubspace) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    QMatroid m = testing::RandomQMatroid(3, rng);
    DerivedFamilies d = Derive(m);
    const Lattice& lat = m.lattice();
    for (int x : lat.bucket(1)) EXPECT_EQ(lat.leq(x, d.loopspace), m.rank(x) == 0);
  }
}

TEST(FamiliesTest, AllRedOnTopIsAnUpInterval) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    QMatroid m = testing::RandomQMatroid(3, rng);
    const Lattice& lat = m.lattice();
    std::vector<int> s;
    for (int a = 0; a < lat.size(); ++a)
      if (m.rank() - m.rank(a) == lat.n() - lat.dim(a)) s.push_back(a);
    auto in = [&](int a) { return std::find(s.begin(), s.end(), a) != s.end(); };
    for (int a : s) {
      for (int b : s) EXPECT_TRUE(in(lat.meet(a, b)));
      for (int u : lat.covers_up(a)) EXPECT_TRUE(in(u));
    }
  }
}

TEST(DualTest, UniformDuals) {
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(Dual(Uniform(F2(), k, n)), Uniform(F2(), n - k, n));
}

TEST(DualTest, InvolutionAndBasisComplements) {
  std::mt19937_64 rng(5);
  std::vector<QMatroid> ms = SmallZoo();
  for (int t = 0; t < 100; ++t) ms.push_back(testing::RandomQMatroid(3, rng));
  for (const QMatroid& m : ms) {
    QMatroid d = Dual(m);
    EXPECT_TRUE(CheckRankAxioms(d).ok());
    EXPECT_EQ(Dual(d), m);
    const Lattice& lat = m.lattice();
    std::vector<int> perp_bases;
    for (int b : Derive(m).bases) perp_bases.push_back(lat.perp(b));
    std::sort(perp_bases.begin(), perp_bases.end());
    EXPECT_EQ(perp_bases, Derive(d).bases);
  }
}

TEST(MinorTest, Trivial) {
  for (const QMatroid& m : SmallZoo()) {
    EXPECT_EQ(Restrict(m, m.lattice().top()), m);
    EXPECT_EQ(Contract(m, 0), m);
  }
}

TEST(MinorTest, RestrictionKeepsRanks) {
  QMatroid m = P1();
  const Lattice& lat = m.lattice();
  QMatroid r = Restrict(m, lat.parse("100,010"));
  EXPECT_EQ(r.n(), 2);
  EXPECT_EQ(r.rank(r.lattice().parse("10")), 0);
  EXPECT_EQ(r.rank(r.lattice().parse("01")), 1);
  QMatroid c = Contract(m, lat.parse("100"));
  EXPECT_EQ(c, Uniform(F2(), 1, 2));
}

TEST(MinorTest, MinorDuality) {
  std::vector<QMatroid> ms = SmallZoo();
  std::mt19937_64 rng(6);
  for (int t = 0; t < 10; ++t) ms.push_back(testing::RandomQMatroid(3, rng));
  for (const QMatroid& m : ms) {
    const Lattice& lat = m.lattice();
    QMatroid d = Dual(m);
    for (int x = 0; x < lat.size(); ++x) {
      EXPECT_TRUE(CheckRankAxioms(Restrict(m, x)).ok());
      EXPECT_TRUE(CheckRankAxioms(Contract(m, x)).ok());
      EXPECT_TRUE(IsIsomorphic(Dual(Contract(m, x)), Restrict(d, lat.perp(x))));
      EXPECT_TRUE(IsIsomorphic(Dual(Restrict(m, x)), Contract(d, lat.perp(x))));
    }
  }
}

TEST(IsoTest, Witnesses) {
  QMatroid a = testing::MixedDiamond("10");
  QMatroid b = testing::MixedDiamond("01");
  auto t = FindIsomorphism(a, b);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(Transform(a, *t), b);
  EXPECT_FALSE(IsIsomorphic(Uniform(F2(), 1, 2), a));
  auto self = FindIsomorphism(P1(), P1());
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(Transform(P1(), *self), P1());
  EXPECT_FALSE(IsIsomorphic(P1(), P2()));
  EXPECT_FALSE(IsIsomorphic(Uniform(F2(), 1, 2), Uniform(F2(), 1, 3)));
}

TEST(IsoTest, RandomTransformsAreFound) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    QMatroid m = testing::RandomQMatroid(4, rng);
    QMatroid g = Transform(m, LatticeIso::Random(F2(), 4, rng));
    auto w = FindIsomorphism(m, g);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(Transform(m, *w), g);
  }
}

TEST(IsoTest, CapIsEnforced) {
  QMatroid m = Uniform(Field::FromOrder(4), 1, 4);
  EXPECT_THROW(FindIsomorphism(m, m), Error);
}

TEST(BicolourTest, Extremes) {
  for (const auto& c : Bicolour(Uniform(F2(), 3, 3))) EXPECT_TRUE(c.red);
  for (const auto& c : Bicolour(Uniform(F2(), 0, 3))) EXPECT_FALSE(c.red);
  QMatroid p1 = P1();
  const Lattice& lat = p1.lattice();
  for (const auto& c : Bicolour(p1)) {
    if (c.lower != 0) continue;
    if (c.upper == lat.parse("100")) EXPECT_FALSE(c.red);
    if (c.upper == lat.parse("010")) EXPECT_TRUE(c.red);
  }
}

TEST(BicolourTest, RedCountAlongEveryChainIsTheRank) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    QMatroid m = testing::RandomQMatroid(3, rng);
    const Lattice& lat = m.lattice();
    // Set of red counts reachable at each subspace by chains from 0.
    std::vector<std::set<int>> reach(lat.size());
    reach[0].insert(0);
    for (const auto& c : Bicolour(m))
      for (int r : reach[c.lower]) reach[c.upper].insert(r + (c.red ? 1 : 0));
    EXPECT_EQ(reach[lat.top()], std::set<int>{m.rank()});
  }
}

}  // namespace
}  // namespace qmat
