#include <gtest/gtest.h>

#include "krtree/cli/fixture.hpp"

using namespace krtree;
using namespace krtree::cli;

namespace {

std::vector<Fixture> load(const char* file) {
  return load_fixture_file(std::filesystem::path(KRTREE_FIXTURE_DIR) / file);
}

const Fixture& find(const std::vector<Fixture>& all, int ell, Coord level) {
  for (const auto& f : all)
    if (f.ell == ell && f.level == level) return f;
  throw std::runtime_error("fixture not found");
}

}  // namespace

TEST(FixtureFormat, ParsesBlocks) {
  const auto fx = parse_fixtures(
      "# comment\n"
      "W E6 4 1 source=t\n"
      "V_{ω4}\n"
      "⊕₁ V_{ω1+ω6}   # trailing comment\n"
      "⊕₁ 2V_{ω2}\n"
      "⊕₁ V_0\n"
      "W E7 4 3 source=count nodes=836\n");
  ASSERT_EQ(fx.size(), 2u);
  EXPECT_EQ(fx[0].name(), "E6 W_1(4)");
  EXPECT_EQ(fx[0].entries.size(), 4u);
  EXPECT_EQ(fx[0].source, "t");
  EXPECT_FALSE(fx[0].expected_nodes);
  EXPECT_TRUE(fx[1].entries.empty());
  EXPECT_EQ(fx[1].expected_nodes, 836u);
}

TEST(FixtureFormat, Errors) {
  EXPECT_THROW(parse_fixtures("V_0\n"), FixtureFileError);
  EXPECT_THROW(parse_fixtures("W E6 4 1\nV_{ω4}\n"), FixtureFileError);
  EXPECT_THROW(parse_fixtures("W E6 4 1 source=x\n"), FixtureFileError);
  EXPECT_THROW(parse_fixtures("W E6 4 1 source=x colour=red\nV_{ω4}\n"), FixtureFileError);
  EXPECT_THROW(parse_fixtures("W Z6 4 1 source=x\nV_{ω4}\n"), FixtureFileError);
  EXPECT_THROW(parse_fixtures("W E6 4 1 source=x\nV_{ω4} ⊕₁ V_{ω9}\n"), FixtureFileError);
  EXPECT_THROW(load_fixture_file("/nonexistent/fixture.txt"), FixtureFileError);
}

TEST(Records, ParentsFromLevels) {
  const RootSystem rs(AlgebraId::parse("E6"));
  const auto entries = parse_flat("V_{2ω4} ⊕₁ 2V_{ω2+ω4} ⊕₂ 3V_{2ω2} ⊕₃ V_{ω4}", 6);
  const auto recs = records_from_entries(rs, entries);
  ASSERT_EQ(recs.size(), 4u);
  const NodeRecord* deepest = nullptr;
  for (const auto& r : recs)
    if (r.parent_path.size() == 2) deepest = &r;
  ASSERT_TRUE(deepest);
  EXPECT_EQ(deepest->increment, RootVector({0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(deepest->parent_path[0], RootVector({1, 1, 2, 3, 2, 1}));
  EXPECT_EQ(deepest->parent_path[1], RootVector({1, 1, 2, 3, 2, 1}));

  EXPECT_THROW(records_from_entries(rs, parse_flat("V_{ω4} ⊕₂ V_0", 6)), InputError);
  EXPECT_THROW(records_from_entries(rs, parse_flat("V_{ω1} ⊕₁ V_{ω4}", 6)), InputError);
}

TEST(Fixtures, AllPublishedTablesPass) {
  std::size_t count = 0;
  for (const char* file : {"e6.txt", "e7.txt", "e8.txt"}) {
    for (const auto& f : load(file)) {
      const auto res = check_fixture(f);
      EXPECT_TRUE(res.pass) << res.name << (res.problems.empty() ? "" : ": " + res.problems.front());
      EXPECT_TRUE(res.order_matches) << res.name;
      ++count;
    }
  }
  EXPECT_EQ(count, 18u + 15u + 8u);
}

TEST(Fixtures, Coverage) {
  const auto e6 = load("e6.txt");
  for (int ell = 1; ell <= 6; ++ell)
    for (Coord m = 1; m <= 3; ++m) EXPECT_NO_THROW(find(e6, ell, m));
  const auto e7 = load("e7.txt");
  for (int ell = 1; ell <= 7; ++ell)
    for (Coord m = 1; m <= 2; ++m) EXPECT_NO_THROW(find(e7, ell, m));
  EXPECT_EQ(find(e7, 4, 3).expected_nodes, 836u);
  const auto e8 = load("e8.txt");
  for (int ell = 1; ell <= 8; ++ell) EXPECT_NO_THROW(find(e8, ell, 1));
  EXPECT_EQ(find(e8, 4, 1).entries.size(), 87u);
}

TEST(Fixtures, DetectsTampering) {
  auto f = find(load("e6.txt"), 4, 2);
  f.entries[3].multiplicity = 5;
  auto res = check_fixture(f);
  EXPECT_FALSE(res.pass);
  EXPECT_EQ(res.problems.size(), 2u);

  f = find(load("e6.txt"), 4, 2);
  f.entries.pop_back();
  EXPECT_FALSE(check_fixture(f).pass);

  f = find(load("e7.txt"), 4, 3);
  f.expected_nodes = 835;
  EXPECT_FALSE(check_fixture(f).pass);
}

TEST(Fixtures, OrderInsensitive) {
  auto f = find(load("e6.txt"), 4, 1);
  std::swap(f.entries[1], f.entries[2]);
  const auto res = check_fixture(f);
  EXPECT_TRUE(res.pass);
  EXPECT_FALSE(res.order_matches);
}
