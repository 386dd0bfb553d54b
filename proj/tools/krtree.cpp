// Command-line front end: decompose, verify, growth, fixtures.
//
// Exit codes: 0 pass, 1 mismatch, 2 invalid input, 3 resource limit.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "krtree/cli/fixture.hpp"
#include "krtree/cli/render.hpp"
#include "krtree/growth.hpp"
#include "krtree/oracle.hpp"
#include "krtree/tree.hpp"

#ifndef KRTREE_FIXTURE_DIR
#define KRTREE_FIXTURE_DIR "fixtures"
#endif

namespace {

using namespace krtree;

enum Exit : int { kPass = 0, kMismatch = 1, kInvalid = 2, kResource = 3 };

struct Common {
  std::string algebra;
  int node = 1;
  Coord level = 0;
  std::size_t node_limit = TreeOptions{}.node_limit;
};

int run_decompose(const Common& c, const std::string& format, bool dims) {
  const RootSystem rs(AlgebraId::parse(c.algebra));
  const auto tree = build_tree(rs, c.node, c.level, TreeOptions{c.node_limit});
  if (format == "tree") {
    std::cout << cli::render_tree_text(rs, tree, dims);
  } else if (format == "flat") {
    std::cout << cli::render_flat(tree) << '\n';
    if (dims) {
      std::cout << "node dimensions:";
      for (const auto& e : cli::flatten(tree)) std::cout << ' ' << rs.weyl_dimension(e.weight);
      std::cout << "\ntotal dimension: " << total_dimension(rs, tree) << '\n';
    }
  } else {
    std::cout << cli::tree_to_json(tree, dims ? &rs : nullptr).dump(2) << '\n';
  }
  return kPass;
}

int run_verify(const Common& c, std::uint64_t oracle_limit) {
  const RootSystem rs(AlgebraId::parse(c.algebra));
  const auto tree = build_tree(rs, c.node, c.level, TreeOptions{c.node_limit});
  bool ok = true;

  std::cout << "tree: " << tree.node_count << " nodes, " << summand_count(tree) << " summands\n";
  std::cout << "aggregate:";
  for (auto it = tree.aggregate.rbegin(); it != tree.aggregate.rend(); ++it)
    std::cout << ' ' << cli::format_summand(it->second, it->first);
  std::cout << '\n';

  std::set<Label> labels;
  for_each_node(tree.root, [&](const TreeNode& n, std::size_t) { labels.insert(n.label); });
  std::size_t prefix_failures = 0;
  for (const auto& l : labels) {
    Label prefix = l;
    while (!prefix.increments.empty()) {
      prefix.increments.pop_back();
      if (!labels.contains(prefix)) ++prefix_failures;
    }
  }
  std::cout << "prefix closure: " << (prefix_failures ? "FAIL" : "pass") << '\n';
  ok = ok && prefix_failures == 0;

  try {
    const auto oracle = full_decomposition_oracle(rs, c.node, c.level, OracleOptions{oracle_limit});
    bool same = oracle == tree.aggregate;
    std::cout << "oracle: " << (same ? "pass" : "FAIL") << '\n';
    if (!same) {
      std::set<Weight> keys;
      for (const auto& [w, _] : oracle) keys.insert(w);
      for (const auto& [w, _] : tree.aggregate) keys.insert(w);
      for (const auto& w : keys) {
        const BigInt a = tree.aggregate.contains(w) ? tree.aggregate.at(w) : BigInt(0);
        const BigInt b = oracle.contains(w) ? oracle.at(w) : BigInt(0);
        if (a != b)
          std::cout << "  " << cli::format_summand(1, w) << ": tree " << a << ", oracle " << b << '\n';
      }
    }
    ok = ok && same;
  } catch (const OracleScaleExceeded& e) {
    std::cout << "oracle: not run (" << e.what() << ")\n";
    std::cerr << e.what() << '\n';
    return kResource;
  }

  const auto lift = check_lift(rs, c.node, c.level, c.level + 1, TreeOptions{c.node_limit});
  std::cout << "lift to level " << c.level + 1 << ": " << (lift.pass ? "pass" : "FAIL");
  if (!lift.pass) std::cout << " (" << lift.discrepancy << ')';
  std::cout << '\n';
  ok = ok && lift.pass;

  std::cout << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kPass : kMismatch;
}

int run_growth(const std::string& algebra, int node, const std::string& mode, std::uint64_t budget) {
  const RootSystem rs(AlgebraId::parse(algebra));
  GrowthOptions opts;
  opts.budget = budget;
  opts.mode = mode == "search"    ? GrowthMode::search
              : mode == "fixture" ? GrowthMode::fixture
                                  : GrowthMode::automatic;
  const GrowthReport rep = growth_degree(rs, node, opts);

  std::cout << rs.id().name() << " node " << node << '\n';
  std::cout << "g = " << rep.g << '\n';
  std::cout << "half_orbit_dim = " << rep.half_orbit_dim << '\n';
  std::cout << "degree = " << rep.degree << '\n';
  std::cout << "source: "
            << (rep.fixture_derived ? std::string("fixture-derived")
                                    : "search (" + std::to_string(rep.states_explored) + " states)")
            << '\n';
  std::cout << "path-type (t = " << rep.best_path_type.length() << "):";
  if (rep.best_path_type.deltas.empty()) std::cout << " empty";
  std::cout << '\n';
  for (const auto& d : rep.best_path_type.deltas) std::cout << "  " << to_string(d) << '\n';
  if (!rep.fixture_derived) {
    std::cout << "cross-check: ";
    switch (rep.cross_check) {
      case CrossCheck::agrees: std::cout << "agrees"; break;
      case CrossCheck::discrepancy:
        std::cout << "DISCREPANCY, max g+half_orbit_dim = " << *rep.cross_degree;
        break;
      case CrossCheck::not_evaluated: std::cout << "not evaluated (budget)"; break;
    }
    std::cout << '\n';
  }
  const HeightRelation hr = height_relation_check(rs, node, opts);
  if (hr.applicable)
    std::cout << "height relation: 2*ht(ω" << node << ") - " << hr.c << " = "
              << to_string(Rational(2 * hr.height - hr.c)) << (hr.holds ? " = g, holds" : " != g, FAILS")
              << '\n';
  else
    std::cout << "height relation: not applicable (" << hr.reason << ")\n";
  return hr.applicable && !hr.holds ? kMismatch : kPass;
}

int run_fixtures(std::vector<std::string> files, bool all, const std::string& dir,
                 std::size_t node_limit) {
  if (all || files.empty()) {
    std::vector<std::string> found;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
      if (entry.path().extension() == ".txt") found.push_back(entry.path().string());
    if (ec) {
      std::cerr << "cannot read fixture directory " << dir << ": " << ec.message() << '\n';
      return kInvalid;
    }
    std::sort(found.begin(), found.end());
    files.insert(files.end(), found.begin(), found.end());
  }
  std::size_t passed = 0, failed = 0;
  for (const auto& file : files) {
    const auto fixtures = cli::load_fixture_file(file);
    for (const auto& f : fixtures) {
      const auto res = cli::check_fixture(f, TreeOptions{node_limit});
      std::cout << (res.pass ? "pass " : "FAIL ") << res.name << "  (" << res.actual_nodes
                << " nodes, source " << f.source << ")\n";
      for (const auto& p : res.problems) std::cout << "    " << p << '\n';
      if (res.pass && !res.order_matches) std::cout << "    note: listing order differs from depth-first output\n";
      res.pass ? ++passed : ++failed;
    }
  }
  std::cout << passed << " passed, " << failed << " failed\n";
  return failed ? kMismatch : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompositions of Kirillov-Reshetikhin modules W_m(l) for simply-laced g"};
  app.require_subcommand(1);

  Common dec;
  std::string format = "tree";
  bool dims = false;
  auto* decompose = app.add_subcommand("decompose", "Tree decomposition of W_m(l)");
  decompose->add_option("algebra", dec.algebra, "A<n>, D<n>, E6, E7 or E8")->required();
  decompose->add_option("node", dec.node, "Dynkin node l (Bourbaki numbering)")->required();
  decompose->add_option("level", dec.level, "Level m")->required();
  decompose->add_option("--format", format)->check(CLI::IsMember({"tree", "flat", "json"}));
  decompose->add_flag("--dims", dims, "Append Weyl dimensions");
  decompose->add_option("--node-limit", dec.node_limit);

  Common ver;
  // Slightly above the library default so that W_2(4) of E6 (10.2M tuples at
  // lambda = 0) is checked without an override.
  std::uint64_t oracle_limit = 50'000'000;
  auto* verify = app.add_subcommand("verify", "Check the tree against the brute-force multiplicity formula");
  verify->add_option("algebra", ver.algebra)->required();
  verify->add_option("node", ver.node)->required();
  verify->add_option("level", ver.level)->required();
  verify->add_option("--oracle-limit", oracle_limit);
  verify->add_option("--node-limit", ver.node_limit);

  std::string g_algebra;
  int g_node = 1;
  std::string mode = "auto";
  std::uint64_t budget = GrowthOptions{}.budget;
  auto* growth = app.add_subcommand("growth", "Degree of polynomial growth of dim W_m(l)");
  growth->add_option("algebra", g_algebra)->required();
  growth->add_option("node", g_node)->required();
  growth->add_option("--mode", mode)->check(CLI::IsMember({"auto", "search", "fixture"}));
  growth->add_option("--budget", budget);

  std::vector<std::string> files;
  bool all = false;
  std::string dir = KRTREE_FIXTURE_DIR;
  std::size_t fx_limit = TreeOptions{}.node_limit;
  auto* fixtures = app.add_subcommand("fixtures", "Regression against the published tables");
  fixtures->add_option("files", files, "Fixture files");
  fixtures->add_flag("--all", all, "Run every fixture file in --dir");
  fixtures->add_option("--dir", dir);
  fixtures->add_option("--node-limit", fx_limit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }

  try {
    if (*decompose) return run_decompose(dec, format, dims);
    if (*verify) return run_verify(ver, oracle_limit);
    if (*growth) return run_growth(g_algebra, g_node, mode, budget);
    if (*fixtures) return run_fixtures(files, all, dir, fx_limit);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const cli::FixtureFileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const FixtureUnavailable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const TreeScaleExceeded& e) {
    std::cerr << "error: " << e.what() << " (" << e.partial_count() << " nodes built)\n";
    return kResource;
  } catch (const OracleScaleExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const SearchBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  }
  return kInvalid;
}
