#include <gtest/gtest.h>

#include <map>
#include <set>

#include "krtree/rootsys.hpp"

using namespace krtree;

namespace {

RootSystem make(const char* name) { return RootSystem(AlgebraId::parse(name)); }

// Symmetric form on weights in omega-coordinates: (x, y) = x^T C^{-1} y.
Rational form(const RootSystem& rs, const Weight& x, const Weight& y) {
  Rational s = 0;
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) s += Rational(x[i]) * rs.inverse_cartan()[i][j] * Rational(y[j]);
  return s;
}

// Dimension of V_lambda by Freudenthal's multiplicity formula, walking the
// weight diagram down from lambda one simple root at a time.
BigInt freudenthal_dimension(const RootSystem& rs, const Weight& lambda) {
  const int r = rs.rank();
  std::map<Weight, BigInt> mult;
  mult[lambda] = 1;
  std::vector<Weight> layer{lambda};
  const Weight lr = lambda + rs.rho();
  const Rational top = form(rs, lr, lr);
  std::vector<Weight> roots;
  for (const auto& a : rs.positive_roots()) roots.push_back(rs.to_omega(a));
  std::vector<Weight> simple;
  for (int i = 1; i <= r; ++i) simple.push_back(rs.to_omega(RootVector::simple(r, i)));

  while (!layer.empty()) {
    std::set<Weight> next;
    for (const Weight& mu : layer)
      for (int i = 0; i < r; ++i) {
        Coord p = 0;
        while (mult.contains(mu + (p + 1) * simple[i])) ++p;
        if (p + mu[i] >= 1) next.insert(mu - simple[i]);
      }
    layer.assign(next.begin(), next.end());
    for (const Weight& mu : layer) {
      Rational acc = 0;
      for (const Weight& a : roots)
        for (Coord k = 1;; ++k) {
          const auto it = mult.find(mu + k * a);
          if (it == mult.end()) break;
          acc += Rational(it->second) * form(rs, mu + k * a, a);
        }
      const Weight mr = mu + rs.rho();
      const Rational m = 2 * acc / (top - form(rs, mr, mr));
      EXPECT_EQ(denominator(m), 1);
      mult[mu] = numerator(m);
    }
  }
  BigInt total = 0;
  for (const auto& [_, m] : mult) total += m;
  return total;
}

}  // namespace

TEST(AlgebraId, ParsesFamilies) {
  EXPECT_EQ(AlgebraId::parse("E6").name(), "E6");
  EXPECT_EQ(AlgebraId::parse("D4").rank, 4);
  EXPECT_EQ(AlgebraId::parse("A1").family, Family::A);
  EXPECT_THROW(AlgebraId::parse("E9"), InputError);
  EXPECT_THROW(AlgebraId::parse("D2"), InputError);
  EXPECT_EQ(AlgebraId::parse("D3").rank, 3);
  EXPECT_THROW(AlgebraId::parse("B3"), InputError);
  EXPECT_THROW(AlgebraId::parse(""), InputError);
}

TEST(Cartan, RankOne) {
  const auto rs = make("A1");
  EXPECT_EQ(rs.cartan_matrix(), (std::vector<std::vector<int>>{{2}}));
  ASSERT_EQ(rs.positive_roots().size(), 1u);
  EXPECT_EQ(rs.positive_roots()[0], RootVector({1}));
}

TEST(Cartan, E6NodeTwoMeetsNodeFour) {
  const auto rs = make("E6");
  EXPECT_EQ(rs.cartan(1, 3), -1);
  EXPECT_EQ(rs.cartan(3, 1), -1);
  EXPECT_EQ(rs.cartan(1, 2), 0);
}

TEST(Cartan, SymmetricWithUnitDeterminantBehaviour) {
  for (const char* name : {"A5", "D6", "E6", "E7", "E8"}) {
    const auto rs = make(name);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        EXPECT_EQ(rs.cartan(i, j), rs.cartan(j, i));
        Rational s = 0;
        for (int k = 0; k < rs.rank(); ++k) s += rs.cartan(i, k) * rs.inverse_cartan()[k][j];
        EXPECT_EQ(s, i == j ? 1 : 0) << name;
      }
  }
}

TEST(PositiveRoots, CountsMatchClassicalFormulas) {
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(make(("A" + std::to_string(n)).c_str()).positive_roots().size(),
              static_cast<std::size_t>(n * (n + 1) / 2));
  for (int n = 4; n <= 8; ++n)
    EXPECT_EQ(make(("D" + std::to_string(n)).c_str()).positive_roots().size(),
              static_cast<std::size_t>(n * (n - 1)));
  EXPECT_EQ(make("E6").positive_roots().size(), 36u);
  EXPECT_EQ(make("E7").positive_roots().size(), 63u);
  EXPECT_EQ(make("E8").positive_roots().size(), 120u);
}

TEST(PositiveRoots, AllHaveNormTwo) {
  for (const char* name : {"D5", "E6", "E8"}) {
    const auto rs = make(name);
    std::set<RootVector> seen;
    for (const auto& a : rs.positive_roots()) {
      EXPECT_TRUE(is_positive(a));
      EXPECT_EQ(inner(rs.to_omega(a), a), 2) << to_string(a);
      EXPECT_TRUE(seen.insert(a).second);
    }
  }
}

TEST(Conversions, SimpleRootIsColumnOfCartan) {
  const auto rs = make("E6");
  EXPECT_EQ(rs.to_omega(RootVector::simple(6, 2)), Weight({0, 2, 0, -1, 0, 0}));
  EXPECT_EQ(rs.to_omega(RootVector::zero(6)), Weight::zero(6));
  EXPECT_EQ(rs.to_omega(RootVector({2, 3, 4, 6, 4, 2})), Weight::fundamental(6, 4));
}

TEST(Conversions, FundamentalWeightsInRootCoordinates) {
  const auto e6 = make("E6");
  const auto w4 = e6.to_alpha(Weight::fundamental(6, 4));
  ASSERT_TRUE(w4.integral());
  EXPECT_EQ(w4.to_integral(), RootVector({2, 3, 4, 6, 4, 2}));
  EXPECT_EQ(height(w4), 21);
  EXPECT_EQ(e6.to_alpha(Weight::zero(6)).to_integral(), RootVector::zero(6));

  const auto e7 = make("E7");
  const auto w5 = e7.fundamental_alpha(5);
  EXPECT_FALSE(w5.integral());
  EXPECT_EQ(height(w5), Rational(75, 2));
  EXPECT_EQ(2 * height(w5) - 63, 12);
  EXPECT_THROW(w5.to_integral(), InputError);
}

TEST(Conversions, RoundTrip) {
  for (const char* name : {"A4", "D5", "E7"}) {
    const auto rs = make(name);
    for (const auto& a : rs.positive_roots()) EXPECT_EQ(rs.to_alpha(rs.to_omega(a)).to_integral(), a);
    for (int k = 1; k <= rs.rank(); ++k) {
      const Weight w = Weight::fundamental(rs.rank(), k, 3);
      std::vector<Rational> back = rs.to_omega(rs.to_alpha(w));
      for (int i = 0; i < rs.rank(); ++i) EXPECT_EQ(back[i], Rational(w[i]));
    }
  }
}

TEST(Predicates, DominanceAndInner) {
  EXPECT_TRUE(is_dominant(Weight({1, 0, 0, 0, 0, 1})));
  EXPECT_FALSE(is_dominant(Weight({0, 2, 0, -1, 0, 0})));
  EXPECT_EQ(inner(Weight::fundamental(4, 2), RootVector({1, 2, 1, 1})), 2);
  EXPECT_TRUE(below_or_equal(RootVector({0, 1, 0}), RootVector({1, 1, 0})));
  EXPECT_TRUE(strictly_below(RootVector({0, 1, 0}), RootVector({1, 1, 0})));
  EXPECT_FALSE(strictly_below(RootVector({1, 1, 0}), RootVector({1, 1, 0})));
  EXPECT_FALSE(below_or_equal(RootVector({0, 2, 0}), RootVector({1, 1, 0})));
}

TEST(Predicates, RhoPairsToHeight) {
  for (const char* name : {"A6", "D7", "E8"}) {
    const auto rs = make(name);
    for (const auto& a : rs.positive_roots()) EXPECT_EQ(inner(rs.rho(), a), height(a));
  }
}

TEST(WeylDimension, TrivialCases) {
  EXPECT_EQ(make("E8").weyl_dimension(Weight::zero(8)), 1);
  const auto a1 = make("A1");
  for (Coord m = 0; m < 10; ++m) EXPECT_EQ(a1.weyl_dimension(Weight({m})), m + 1);
}

TEST(WeylDimension, AgreesWithFreudenthal) {
  struct Case {
    const char* algebra;
    Weight w;
  };
  const std::vector<Case> cases = {
      {"A2", {1, 1}},         {"A3", {0, 2, 0}},       {"A3", {1, 0, 2}},         {"D4", {0, 1, 0, 0}},
      {"D4", {1, 0, 1, 1}},   {"D5", {0, 0, 1, 0, 0}}, {"E6", {1, 0, 0, 0, 0, 0}}, {"E6", {0, 1, 0, 0, 0, 0}},
      {"E6", {1, 0, 0, 0, 0, 1}}, {"E7", {0, 0, 0, 0, 0, 0, 1}},
  };
  for (const auto& c : cases) {
    const auto rs = make(c.algebra);
    EXPECT_EQ(rs.weyl_dimension(c.w), freudenthal_dimension(rs, c.w)) << c.algebra << ' ' << to_string(c.w);
  }
}

TEST(WeylDimension, KnownSmallModules) {
  const auto e6 = make("E6");
  EXPECT_EQ(e6.weyl_dimension(Weight::fundamental(6, 1)), 27);
  EXPECT_EQ(e6.weyl_dimension(Weight::fundamental(6, 2)), 78);
  EXPECT_EQ(make("E8").weyl_dimension(Weight::fundamental(8, 8)), 248);
  EXPECT_EQ(make("E7").weyl_dimension(Weight::fundamental(7, 7)), 56);
}

TEST(WeylDimension, MonotoneAlongMultiples) {
  const auto rs = make("D5");
  for (int k = 1; k <= 5; ++k) {
    BigInt prev = 0;
    for (Coord m = 0; m < 6; ++m) {
      const BigInt d = rs.weyl_dimension(Weight::fundamental(5, k, m));
      EXPECT_GT(d, prev);
      prev = d;
    }
  }
}

TEST(DominantBelow, Examples) {
  const auto a1 = make("A1");
  EXPECT_EQ(a1.dominant_weights_below(Weight({2})), (std::vector<Weight>{Weight({0}), Weight({2})}));

  const auto e6 = make("E6");
  const auto below = e6.dominant_weights_below(Weight::fundamental(6, 4));
  const std::set<Weight> s(below.begin(), below.end());
  EXPECT_TRUE(s.contains(Weight::fundamental(6, 4)));
  EXPECT_TRUE(s.contains(Weight::fundamental(6, 2)));
  EXPECT_TRUE(s.contains(Weight::zero(6)));
  EXPECT_TRUE(s.contains(Weight({1, 0, 0, 0, 0, 1})));
  EXPECT_EQ(s.size(), 4u);

  const auto d4 = make("D4");
  EXPECT_EQ(d4.dominant_weights_below(Weight::fundamental(4, 1)),
            std::vector<Weight>{Weight::fundamental(4, 1)});
}

TEST(DominantBelow, MatchesBoxEnumeration) {
  // Every dominant mu with lambda - mu a nonnegative combination of simple
  // roots, found by scanning the box of root-lattice points under lambda.
  for (const auto& [name, lambda] : std::vector<std::pair<const char*, Weight>>{
           {"A3", {1, 1, 1}}, {"D4", {0, 2, 0, 0}}, {"E6", {0, 1, 0, 0, 0, 1}}}) {
    const auto rs = make(name);
    // Dominant weights have nonnegative alpha-coordinates, so the box is
    // bounded by the floor of lambda's.
    RootVector box = RootVector::zero(rs.rank());
    const auto a = rs.to_alpha(lambda);
    for (int i = 0; i < rs.rank(); ++i) box[i] = static_cast<Coord>(numerator(a.alpha[i]) / denominator(a.alpha[i]));
    std::set<Weight> expected;
    RootVector v = RootVector::zero(rs.rank());
    while (true) {
      const Weight mu = lambda - rs.to_omega(v);
      if (is_dominant(mu)) expected.insert(mu);
      int i = 0;
      while (i < rs.rank() && v[i] == box[i]) v[i++] = 0;
      if (i == rs.rank()) break;
      ++v[i];
    }
    const auto got = rs.dominant_weights_below(lambda);
    EXPECT_EQ(std::set<Weight>(got.begin(), got.end()), expected) << name;
  }
}

TEST(Binomial, Convention) {
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}
