#pragma once

#include <compare>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "krtree/cli/render.hpp"

namespace krtree::cli {

/// A published decomposition. Files hold blocks of the form
///
///   W E6 4 2 source=<tag> [nodes=<count>]
///   V_{2ω4}
///   ⊕₁ V_{ω1+ω4+ω6}
///   ...
///
/// terminated by a blank line or the next header; '#' starts a comment.
/// A block may carry only a node count and no listing.
struct Fixture {
  AlgebraId algebra;
  int ell = 1;
  Coord level = 0;
  std::string source;
  std::vector<FlatEntry> entries;
  std::optional<std::size_t> expected_nodes;

  std::string name() const;
};

class FixtureFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Fixture> parse_fixtures(std::string_view text);
std::vector<Fixture> load_fixture_file(const std::filesystem::path& path);

/// One tree node keyed by the increments on its path from the root.
struct NodeRecord {
  std::vector<RootVector> parent_path;
  RootVector increment;  // empty coordinates for the root
  BigInt multiplicity;
  Weight highest_weight;

  std::weak_ordering operator<=>(const NodeRecord&) const = default;
  bool operator==(const NodeRecord&) const = default;
};

/// Rebuilds parents from levels (a level-k entry hangs under the latest
/// level k-1 entry) and increments from highest-weight differences. Sorted.
std::vector<NodeRecord> records_from_entries(const RootSystem& rs, const std::vector<FlatEntry>& entries);
std::vector<NodeRecord> records_from_tree(const DecompositionTree& tree);

struct FixtureResult {
  std::string name;
  bool pass = true;
  std::size_t actual_nodes = 0;
  /// Whether the listing order also matches the depth-first output order.
  bool order_matches = true;
  std::vector<std::string> problems;
};

FixtureResult check_fixture(const Fixture& fixture, const TreeOptions& opts = {});

}  // namespace krtree::cli
