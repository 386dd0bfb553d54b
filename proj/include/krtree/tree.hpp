#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "krtree/rootsys.hpp"

namespace krtree {

/// Chain label 0 = d_0 < d_1 < ... < d_s, stored as its increments
/// delta_1 >= delta_2 >= ... >= delta_s.
struct Label {
  std::vector<RootVector> increments;

  std::size_t length() const { return increments.size(); }
  /// d_n, the sum of the first n increments.
  RootVector partial_sum(std::size_t n, int rank) const;
  auto operator<=>(const Label&) const = default;
};

struct TreeNode {
  Label label;
  Weight highest_weight;
  BigInt multiplicity = 1;
  std::vector<TreeNode> children;

  /// Increment on the edge from the parent; empty for the root.
  const RootVector* increment() const {
    return label.increments.empty() ? nullptr : &label.increments.back();
  }
};

class TreeScaleExceeded : public std::runtime_error {
 public:
  TreeScaleExceeded(const std::string& what, std::size_t partial)
      : std::runtime_error(what), partial_(partial) {}
  std::size_t partial_count() const { return partial_; }

 private:
  std::size_t partial_;
};

struct TreeOptions {
  std::size_t node_limit = 5'000'000;
};

struct DecompositionTree {
  AlgebraId algebra;
  int ell = 1;
  Coord level = 0;
  TreeNode root;
  std::size_t node_count = 0;
  std::map<Weight, BigInt> aggregate;
};

/// True when the label satisfies the chain, dominance and monotonicity conditions.
bool is_valid_label(const RootSystem& rs, int ell, Coord level, const Label& label);

/// The weights min(n, level)*omega_ell - d_n for n = 0..s.
std::vector<Weight> label_weights(const RootSystem& rs, int ell, Coord level, const Label& label);

/// Increments delta_{s+1} that extend a valid label, by ascending height,
/// ties broken by descending lexicographic order (the published listing order).
std::vector<RootVector> valid_extensions(const RootSystem& rs, int ell, Coord level,
                                         const Label& label);

BigInt node_multiplicity(const RootSystem& rs, int ell, Coord level, const Label& label);

/// Depth-first construction; children in the order of valid_extensions.
DecompositionTree build_tree(const RootSystem& rs, int ell, Coord level,
                             const TreeOptions& opts = {});

std::map<Weight, BigInt> aggregate_multiplicities(const DecompositionTree& tree);

BigInt total_dimension(const RootSystem& rs, const DecompositionTree& tree);

/// Total of the node multiplicities.
BigInt summand_count(const DecompositionTree& tree);

/// Visits nodes in depth-first order with their depth.
template <typename F>
void for_each_node(const TreeNode& node, F&& fn, std::size_t depth = 0) {
  fn(node, depth);
  for (const auto& child : node.children) for_each_node(child, fn, depth + 1);
}

struct LiftReport {
  bool pass = true;
  std::size_t rows_compared = 0;
  std::size_t nodes_compared = 0;
  std::string discrepancy;
};

/// Compares rows 0..level of the trees for level and higher_level.
LiftReport check_lift(const RootSystem& rs, int ell, Coord level, Coord higher_level,
                      const TreeOptions& opts = {});

}  // namespace krtree
