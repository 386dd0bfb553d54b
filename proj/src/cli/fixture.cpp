#include "krtree/cli/fixture.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace krtree::cli {

std::string Fixture::name() const {
  return algebra.name() + " W_" + std::to_string(level) + "(" + std::to_string(ell) + ")";
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

Fixture parse_header(const std::string& line, std::size_t lineno) {
  std::istringstream in(line);
  std::string tag, algebra;
  Fixture f;
  if (!(in >> tag >> algebra >> f.ell >> f.level) || tag != "W")
    throw FixtureFileError("line " + std::to_string(lineno) + ": malformed header '" + line + "'");
  try {
    f.algebra = AlgebraId::parse(algebra);
  } catch (const InputError& e) {
    throw FixtureFileError("line " + std::to_string(lineno) + ": " + e.what());
  }
  std::string attr;
  while (in >> attr) {
    const auto eq = attr.find('=');
    if (eq == std::string::npos)
      throw FixtureFileError("line " + std::to_string(lineno) + ": bad attribute '" + attr + "'");
    const std::string key = attr.substr(0, eq);
    const std::string value = attr.substr(eq + 1);
    if (key == "source")
      f.source = value;
    else if (key == "nodes")
      f.expected_nodes = std::stoul(value);
    else
      throw FixtureFileError("line " + std::to_string(lineno) + ": unknown attribute '" + key + "'");
  }
  if (f.source.empty())
    throw FixtureFileError("line " + std::to_string(lineno) + ": fixture without source tag");
  return f;
}

}  // namespace

std::vector<Fixture> parse_fixtures(std::string_view text) {
  std::vector<Fixture> out;
  std::string body;
  std::optional<Fixture> current;
  auto flush = [&]() {
    if (!current) return;
    try {
      current->entries = parse_flat(body, current->algebra.rank);
    } catch (const InputError& e) {
      throw FixtureFileError(current->name() + ": " + e.what());
    }
    if (current->entries.empty() && !current->expected_nodes)
      throw FixtureFileError(current->name() + ": neither listing nor node count");
    out.push_back(std::move(*current));
    current.reset();
    body.clear();
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.rfind("W ", 0) == 0) {
      flush();
      current = parse_header(line, lineno);
      continue;
    }
    if (!current)
      throw FixtureFileError("line " + std::to_string(lineno) + ": listing outside a fixture block");
    body += line;
    body += ' ';
  }
  flush();
  return out;
}

std::vector<Fixture> load_fixture_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureFileError("cannot open fixture file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fixtures(ss.str());
}

std::vector<NodeRecord> records_from_entries(const RootSystem& rs,
                                             const std::vector<FlatEntry>& entries) {
  std::vector<NodeRecord> out;
  // Path of (highest weight, increments) for the current ancestor chain.
  std::vector<Weight> chain_weights;
  std::vector<RootVector> chain_increments;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const FlatEntry& e = entries[i];
    if (i == 0 && e.level != 0) throw InputError("listing must start with the root");
    if (i > 0 && (e.level == 0 || e.level > chain_weights.size()))
      throw InputError("summand " + std::to_string(i) + " has no parent at level " +
                       std::to_string(e.level - 1));
    chain_weights.resize(e.level);
    chain_increments.resize(e.level > 0 ? e.level - 1 : 0);
    NodeRecord rec;
    rec.parent_path = chain_increments;
    rec.multiplicity = e.multiplicity;
    rec.highest_weight = e.weight;
    if (e.level > 0) {
      auto inc = rs.to_alpha(chain_weights.back() - e.weight);
      if (!in_positive_root_lattice(inc))
        throw InputError("summand " + format_summand(e.multiplicity, e.weight) +
                         " is not below its parent in the root lattice");
      rec.increment = inc.to_integral();
      chain_increments.push_back(rec.increment);
    }
    chain_weights.push_back(e.weight);
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeRecord> records_from_tree(const DecompositionTree& tree) {
  std::vector<NodeRecord> out;
  for_each_node(tree.root, [&](const TreeNode& node, std::size_t) {
    NodeRecord rec;
    const auto& incs = node.label.increments;
    if (!incs.empty()) {
      rec.parent_path.assign(incs.begin(), incs.end() - 1);
      rec.increment = incs.back();
    }
    rec.multiplicity = node.multiplicity;
    rec.highest_weight = node.highest_weight;
    out.push_back(std::move(rec));
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string describe(const NodeRecord& r) {
  std::string s = format_summand(r.multiplicity, r.highest_weight) + " via ";
  if (r.increment.alpha.empty()) return s + "root";
  for (const auto& p : r.parent_path) s += to_string(p) + " ";
  return s + to_string(r.increment);
}

}  // namespace

FixtureResult check_fixture(const Fixture& fixture, const TreeOptions& opts) {
  FixtureResult res;
  res.name = fixture.name();
  const RootSystem rs(fixture.algebra);
  const DecompositionTree tree = build_tree(rs, fixture.ell, fixture.level, opts);
  res.actual_nodes = tree.node_count;

  if (fixture.expected_nodes && *fixture.expected_nodes != tree.node_count) {
    res.pass = false;
    res.problems.push_back("expected " + std::to_string(*fixture.expected_nodes) + " nodes, built " +
                           std::to_string(tree.node_count));
  }
  if (fixture.entries.empty()) return res;

  const auto expected = records_from_entries(rs, fixture.entries);
  const auto actual = records_from_tree(tree);
  std::vector<NodeRecord> missing, extra;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  for (const auto& m : missing) res.problems.push_back("missing " + describe(m));
  for (const auto& x : extra) res.problems.push_back("unexpected " + describe(x));
  if (!missing.empty() || !extra.empty()) res.pass = false;
  res.order_matches = flatten(tree) == fixture.entries;
  return res;
}

}  // namespace krtree::cli
