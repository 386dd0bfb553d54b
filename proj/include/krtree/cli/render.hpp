#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "krtree/tree.hpp"

namespace krtree::cli {

/// "ω1+ω4+ω6", "2ω2", "0".
std::string format_weight(const Weight& w);
/// "2V_{ω2+ω4}", "V_0".
std::string format_summand(const BigInt& multiplicity, const Weight& w);
/// "⊕₁₂"
std::string level_marker(std::size_t level);

/// Indented tree, one node per line, edge increments in parentheses.
std::string render_tree_text(const RootSystem& rs, const DecompositionTree& tree, bool dims);

/// Depth-first listing in the ⊕_k notation on a single line.
std::string render_flat(const DecompositionTree& tree);

/// One summand of a flat listing.
struct FlatEntry {
  std::size_t level = 0;
  BigInt multiplicity = 1;
  Weight weight;

  bool operator==(const FlatEntry&) const = default;
};

/// Parses the ⊕_k notation. The first summand carries no marker; later
/// summands are introduced by "⊕" followed by the level in subscript or
/// ASCII digits. Weights accept "ω" or "w".
std::vector<FlatEntry> parse_flat(std::string_view text, int rank);

std::vector<FlatEntry> flatten(const DecompositionTree& tree);

nlohmann::json tree_to_json(const DecompositionTree& tree, const RootSystem* dims_from = nullptr);
/// Rebuilds labels from the edge increments and recomputes the aggregate.
DecompositionTree tree_from_json(const nlohmann::json& doc);

}  // namespace krtree::cli
