#include <gtest/gtest.h>

#include <random>

#include "krtree/oracle.hpp"

using namespace krtree;

namespace {

RootSystem make(const char* name) { return RootSystem(AlgebraId::parse(name)); }

// p(n) by the coin-change recurrence over part sizes.
std::vector<BigInt> partition_numbers(int up_to) {
  std::vector<BigInt> p(up_to + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= up_to; ++part)
    for (int n = part; n <= up_to; ++n) p[n] += p[n - part];
  return p;
}

PartitionTuple ones(const std::vector<Coord>& counts) {
  PartitionTuple t;
  for (Coord c : counts) t.parts.emplace_back(c, 1);
  return t;
}

}  // namespace

TEST(Partitions, SmallCounts) {
  ASSERT_EQ(partitions_of(0).size(), 1u);
  EXPECT_TRUE(partitions_of(0)[0].empty());
  EXPECT_EQ(partitions_of(4).size(), 5u);
  EXPECT_EQ(partitions_of(20).size(), 627u);
}

TEST(Partitions, CountsAgreeWithRecurrence) {
  const auto p = partition_numbers(30);
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(BigInt(partitions_of(n).size()), p[n]) << n;
}

TEST(Partitions, ShapeAndOrder) {
  const auto parts = partitions_of(6);
  EXPECT_EQ(parts.front(), Partition{6});
  EXPECT_EQ(parts.back(), Partition(6, 1));
  for (const auto& pt : parts) {
    Coord s = 0;
    for (std::size_t i = 0; i < pt.size(); ++i) {
      s += pt[i];
      if (i) EXPECT_LE(pt[i], pt[i - 1]);
    }
    EXPECT_EQ(s, 6);
  }
  for (std::size_t i = 1; i < parts.size(); ++i) EXPECT_GT(parts[i - 1], parts[i]);
}

TEST(PartitionTuple, CountsAndColumns) {
  PartitionTuple t;
  t.parts = {{3, 1, 1}, {}, {2, 2}};
  EXPECT_EQ(t.count(0, 1), 2);
  EXPECT_EQ(t.count(0, 3), 1);
  EXPECT_EQ(t.count(1, 1), 0);
  EXPECT_EQ(t.columns(0, 1), 3);
  EXPECT_EQ(t.columns(0, 2), 4);
  EXPECT_EQ(t.columns(0, 9), 5);
  EXPECT_EQ(t.columns(2, 1), 2);
  EXPECT_EQ(t.largest_part(), 3);
}

TEST(PValue, EmptyTupleGivesLevelOnTheNode) {
  const auto rs = make("E6");
  MultiplicityQuery q{4, 3, std::vector<Coord>(6, 0)};
  const PartitionTuple empty = ones(std::vector<Coord>(6, 0));
  for (Coord n = 1; n <= 3; ++n) EXPECT_EQ(p_value(rs, q, empty, 4, n), n);
  EXPECT_EQ(p_value(rs, q, empty, 4, 7), 3);
  EXPECT_EQ(p_value(rs, q, empty, 1, 2), 0);
}

TEST(PValue, ChildWithOmegaTwo) {
  const auto rs = make("E6");
  const std::vector<Coord> counts{1, 1, 2, 3, 2, 1};
  MultiplicityQuery q{4, 2, counts};
  const PartitionTuple nu = ones(counts);
  const std::vector<Coord> expected{0, 1, 0, 0, 0, 0};
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(p_value(rs, q, nu, k, 1), expected[k - 1]) << k;
}

TEST(PValue, LargeNRecoversWeightCoordinates) {
  const auto rs = make("D5");
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> size(0, 4), part(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    PartitionTuple nu;
    std::vector<Coord> n(5, 0);
    for (int i = 0; i < 5; ++i) {
      Partition p;
      for (int j = size(gen); j > 0; --j) p.push_back(part(gen));
      std::sort(p.rbegin(), p.rend());
      for (Coord x : p) n[i] += x;
      nu.parts.push_back(p);
    }
    const int ell = 1 + trial % 5;
    const Coord level = 1 + trial % 3;
    const MultiplicityQuery q{ell, level, n};
    const Weight lambda = Weight::fundamental(5, ell, level) - rs.to_omega(RootVector(n));
    const Coord big = std::max<Coord>(nu.largest_part(), level) + 1;
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(p_value(rs, q, nu, k, big), lambda[k - 1]);
  }
}

TEST(TupleCount, ProductOfPartitionNumbers) {
  const auto p = partition_numbers(12);
  MultiplicityQuery q{4, 2, {4, 6, 8, 12, 8, 4}};
  EXPECT_EQ(tuple_count(q), p[4] * p[6] * p[8] * p[12] * p[8] * p[4]);
  EXPECT_EQ(tuple_count(q), 10'248'700);
}

TEST(ZMultiplicity, HighestWeightOccursOnce) {
  for (const char* name : {"A3", "D5", "E7"}) {
    const auto rs = make(name);
    EXPECT_EQ(z_multiplicity(rs, {2, 3, std::vector<Coord>(rs.rank(), 0)}), 1) << name;
  }
}

TEST(ZMultiplicity, E6NodeFourLevelTwo) {
  const auto rs = make("E6");
  EXPECT_EQ(z_multiplicity(rs, {4, 2, {1, 1, 2, 3, 2, 1}}), 2);
  EXPECT_EQ(z_multiplicity(rs, {4, 2, {2, 3, 4, 6, 4, 2}}), 2);
  EXPECT_EQ(z_multiplicity(rs, {4, 2, {0, 1, 1, 2, 1, 0}}), 1);
  EXPECT_EQ(z_multiplicity(rs, {4, 2, {2, 2, 4, 6, 4, 2}}), 3);
}

TEST(ZMultiplicity, Guard) {
  const auto rs = make("E6");
  const MultiplicityQuery q{4, 2, {4, 6, 8, 12, 8, 4}};
  EXPECT_THROW(z_multiplicity(rs, q), OracleScaleExceeded);
  try {
    z_multiplicity(rs, q, {1000});
  } catch (const OracleScaleExceeded& e) {
    EXPECT_EQ(e.tuples(), 10'248'700);
  }
  EXPECT_EQ(z_multiplicity(rs, q, {20'000'000}), 1);
}

TEST(FullOracle, Examples) {
  EXPECT_EQ(full_decomposition_oracle(make("A2"), 1, 2), (std::map<Weight, BigInt>{{Weight({2, 0}), 1}}));
  EXPECT_EQ(full_decomposition_oracle(make("E6"), 2, 1),
            (std::map<Weight, BigInt>{{Weight::fundamental(6, 2), 1}, {Weight::zero(6), 1}}));
  EXPECT_EQ(full_decomposition_oracle(make("D4"), 2, 1),
            (std::map<Weight, BigInt>{{Weight::fundamental(4, 2), 1}, {Weight::zero(4), 1}}));
  EXPECT_EQ(full_decomposition_oracle(make("D4"), 2, 2),
            (std::map<Weight, BigInt>{
                {Weight::fundamental(4, 2, 2), 1}, {Weight::fundamental(4, 2), 1}, {Weight::zero(4), 1}}));
}

TEST(FullOracle, ClosedFormForEvenDNode) {
  // W_m(2) for D_n: V_{k omega_2} for k = 0..m, each once.
  const auto rs = make("D6");
  for (Coord m = 1; m <= 3; ++m) {
    std::map<Weight, BigInt> expected;
    for (Coord k = 0; k <= m; ++k) expected[Weight::fundamental(6, 2, k)] = 1;
    EXPECT_EQ(full_decomposition_oracle(rs, 2, m), expected) << m;
  }
}

TEST(FullOracle, LevelZeroIsTrivial) {
  EXPECT_EQ(full_decomposition_oracle(make("E6"), 4, 0), (std::map<Weight, BigInt>{{Weight::zero(6), 1}}));
}
