#include "krtree/tree.hpp"

#include <algorithm>
#include <deque>

namespace krtree {

RootVector Label::partial_sum(std::size_t n, int rank) const {
  RootVector d = RootVector::zero(rank);
  for (std::size_t i = 0; i < n && i < increments.size(); ++i) d += increments[i];
  return d;
}

namespace {

void check_args(const RootSystem& rs, int ell, Coord level) {
  check_node(rs, ell);
  if (level < 0) throw InputError("level must be nonnegative");
}

// Enumerates every delta with 0 <= delta <= upper and
// (C delta)_k <= bound_k for all k, pruning on partial assignments.
class BoxEnumerator {
 public:
  BoxEnumerator(const RootSystem& rs, const RootVector& upper, const Weight& bound)
      : rs_(rs), upper_(upper), bound_(bound), current_(RootVector::zero(rs.rank())),
        assigned_(rs.rank(), false) {
    // Dynkin BFS order closes constraints early.
    std::vector<bool> seen(rs.rank(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      order_.push_back(i);
      for (int j : rs.neighbors(i))
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
    }
  }

  std::vector<RootVector> run() {
    recurse(0);
    return std::move(found_);
  }

 private:
  // Smallest value (C delta)_k can still take.
  Coord lower_bound(int k) const {
    Coord v = assigned_[k] ? 2 * current_[k] : 0;
    for (int j : rs_.neighbors(k)) v -= assigned_[j] ? current_[j] : upper_[j];
    return v;
  }

  bool feasible_after(int i) const {
    if (lower_bound(i) > bound_[i]) return false;
    for (int k : rs_.neighbors(i))
      if (lower_bound(k) > bound_[k]) return false;
    return true;
  }

  void recurse(std::size_t depth) {
    if (depth == order_.size()) {
      if (!current_.is_zero()) found_.push_back(current_);
      return;
    }
    const int i = order_[depth];
    assigned_[i] = true;
    for (Coord v = 0; v <= upper_[i]; ++v) {
      current_[i] = v;
      if (lower_bound(i) > bound_[i]) break;  // only grows with v
      if (feasible_after(i)) recurse(depth + 1);
    }
    current_[i] = 0;
    assigned_[i] = false;
  }

  const RootSystem& rs_;
  const RootVector& upper_;
  const Weight& bound_;
  RootVector current_;
  std::vector<bool> assigned_;
  std::vector<int> order_;
  std::vector<RootVector> found_;
};

// delta_n - delta_{n+1} with delta_{s+1} = 0.
RootVector drop(const Label& label, std::size_t n) {
  RootVector d = label.increments[n - 1];
  if (n < label.length()) d -= label.increments[n];
  return d;
}

}  // namespace

std::vector<Weight> label_weights(const RootSystem& rs, int ell, Coord level, const Label& label) {
  check_args(rs, ell, level);
  std::vector<Weight> out;
  out.reserve(label.length() + 1);
  RootVector d = RootVector::zero(rs.rank());
  out.push_back(Weight::zero(rs.rank()));
  for (std::size_t n = 1; n <= label.length(); ++n) {
    d += label.increments[n - 1];
    const Coord step = std::min<Coord>(static_cast<Coord>(n), level);
    out.push_back(Weight::fundamental(rs.rank(), ell, step) - rs.to_omega(d));
  }
  return out;
}

bool is_valid_label(const RootSystem& rs, int ell, Coord level, const Label& label) {
  for (std::size_t i = 0; i < label.length(); ++i) {
    if (label.increments[i].rank() != static_cast<std::size_t>(rs.rank())) return false;
    if (!is_positive(label.increments[i])) return false;
    if (i > 0 && !below_or_equal(label.increments[i], label.increments[i - 1])) return false;
  }
  const auto weights = label_weights(rs, ell, level, label);
  return std::all_of(weights.begin(), weights.end(), [](const Weight& w) { return is_dominant(w); });
}

std::vector<RootVector> valid_extensions(const RootSystem& rs, int ell, Coord level,
                                         const Label& label) {
  check_args(rs, ell, level);
  const int r = rs.rank();
  const std::size_t s = label.length();
  std::vector<RootVector> out;
  if (s == 0) {
    // omega_ell - delta_1 dominant (or -delta_1 dominant at level 0).
    const Weight top = Weight::fundamental(r, ell, std::min<Coord>(1, level));
    for (const Weight& mu : rs.dominant_weights_below(top)) {
      RootVector delta = rs.to_alpha(top - mu).to_integral();
      if (!delta.is_zero()) out.push_back(std::move(delta));
    }
  } else {
    const Coord next = static_cast<Coord>(s) + 1;
    const Weight target = Weight::fundamental(r, ell, std::min(next, level)) -
                          rs.to_omega(label.partial_sum(s, r));
    out = BoxEnumerator(rs, label.increments.back(), target).run();
  }
  std::sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
    const Coord ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : b < a;
  });
  return out;
}

BigInt node_multiplicity(const RootSystem& rs, int ell, Coord level, const Label& label) {
  const auto weights = label_weights(rs, ell, level, label);
  BigInt product = 1;
  for (std::size_t n = 1; n <= label.length(); ++n) {
    const RootVector d = drop(label, n);
    for (int k = 0; k < rs.rank(); ++k) {
      if (d[k] == 0) continue;
      product *= binomial(weights[n][k] + d[k], d[k]);
      if (product == 0) return product;
    }
  }
  return product;
}

namespace {

struct Builder {
  const RootSystem& rs;
  int ell;
  Coord level;
  const TreeOptions& opts;
  DecompositionTree& tree;

  void expand(TreeNode& node) {
    if (++tree.node_count > opts.node_limit)
      throw TreeScaleExceeded("tree scale exceeded: more than " +
                                  std::to_string(opts.node_limit) + " nodes",
                              tree.node_count - 1);
    tree.aggregate[node.highest_weight] += node.multiplicity;
    for (auto& delta : valid_extensions(rs, ell, level, node.label)) {
      TreeNode child;
      child.label = node.label;
      child.highest_weight = node.highest_weight - rs.to_omega(delta);
      child.label.increments.push_back(std::move(delta));
      child.multiplicity = node_multiplicity(rs, ell, level, child.label);
      node.children.push_back(std::move(child));
    }
    for (auto& child : node.children) expand(child);
  }
};

}  // namespace

DecompositionTree build_tree(const RootSystem& rs, int ell, Coord level, const TreeOptions& opts) {
  check_args(rs, ell, level);
  DecompositionTree tree;
  tree.algebra = rs.id();
  tree.ell = ell;
  tree.level = level;
  tree.root.highest_weight = Weight::fundamental(rs.rank(), ell, level);
  Builder{rs, ell, level, opts, tree}.expand(tree.root);
  return tree;
}

std::map<Weight, BigInt> aggregate_multiplicities(const DecompositionTree& tree) {
  std::map<Weight, BigInt> out;
  for_each_node(tree.root, [&](const TreeNode& node, std::size_t) {
    out[node.highest_weight] += node.multiplicity;
  });
  return out;
}

BigInt total_dimension(const RootSystem& rs, const DecompositionTree& tree) {
  BigInt total = 0;
  for (const auto& [weight, mult] : tree.aggregate) total += mult * rs.weyl_dimension(weight);
  return total;
}

BigInt summand_count(const DecompositionTree& tree) {
  BigInt total = 0;
  for_each_node(tree.root, [&](const TreeNode& node, std::size_t) { total += node.multiplicity; });
  return total;
}

LiftReport check_lift(const RootSystem& rs, int ell, Coord level, Coord higher_level,
                      const TreeOptions& opts) {
  check_args(rs, ell, level);
  if (higher_level <= level) throw InputError("check_lift needs a strictly higher level");
  const auto low = build_tree(rs, ell, level, opts);
  const auto high = build_tree(rs, ell, higher_level, opts);
  const Weight shift = Weight::fundamental(rs.rank(), ell, higher_level - level);
  const auto rows = static_cast<std::size_t>(level);

  std::map<Label, const TreeNode*> high_nodes;
  for_each_node(high.root, [&](const TreeNode& node, std::size_t depth) {
    if (depth <= rows) high_nodes.emplace(node.label, &node);
  });

  LiftReport report;
  report.rows_compared = rows + 1;
  auto fail = [&](std::string why) {
    if (report.pass) {
      report.pass = false;
      report.discrepancy = std::move(why);
    }
  };
  std::size_t low_count = 0;
  for_each_node(low.root, [&](const TreeNode& node, std::size_t depth) {
    if (depth > rows || !report.pass) return;
    ++low_count;
    auto it = high_nodes.find(node.label);
    const std::string where = "label of length " + std::to_string(depth) + " ending " +
                              (node.increment() ? to_string(*node.increment()) : "at root");
    if (it == high_nodes.end()) return fail(where + " missing at level " + std::to_string(higher_level));
    const TreeNode& lifted = *it->second;
    if (lifted.multiplicity != node.multiplicity)
      return fail(where + ": multiplicity " + node.multiplicity.str() + " vs " +
                  lifted.multiplicity.str());
    if (lifted.highest_weight != node.highest_weight + shift)
      return fail(where + ": highest weight " + to_string(node.highest_weight) + " lifts to " +
                  to_string(lifted.highest_weight));
  });
  report.nodes_compared = low_count;
  if (report.pass && low_count != high_nodes.size())
    fail("rows 0.." + std::to_string(rows) + " hold " + std::to_string(low_count) + " nodes at level " +
         std::to_string(level) + " but " + std::to_string(high_nodes.size()) + " at level " +
         std::to_string(higher_level));
  return report;
}

}  // namespace krtree
