#include "krtree/growth.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <unordered_map>

namespace krtree {

namespace {

using Mask = std::uint32_t;
constexpr int kMaxSearchRank = 24;

Weight gap(const RootSystem& rs, int ell, const RootVector& delta) {
  return Weight::fundamental(rs.rank(), ell) - rs.to_omega(delta);
}

Mask provided_by(const Weight& w) {
  Mask m = 0;
  for (std::size_t k = 0; k < w.rank(); ++k)
    if (w[k] > 0) m |= Mask{1} << k;
  return m;
}

Mask required_by(const Weight& w) {
  Mask m = 0;
  for (std::size_t k = 0; k < w.rank(); ++k)
    if (w[k] < 0) m |= Mask{1} << k;
  return m;
}

Mask full_mask(int rank) { return rank >= 32 ? ~Mask{0} : (Mask{1} << rank) - 1; }

Coord floor_div2(Coord v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

RootVector from_weight_expression(const RootSystem& rs, const Weight& w) {
  return rs.to_alpha(w).to_integral();
}

// omega-combination helper: {{node, coeff}, ...}
Weight combo(int rank, std::initializer_list<std::pair<int, Coord>> terms) {
  Weight w = Weight::zero(rank);
  for (auto [node, c] : terms) w[node - 1] += c;
  return w;
}

// Path-type search state: the last Delta and the set of provided weights.
// The best continuation only ever steps to a maximal element of the set of
// admissible next Deltas, since inserting an admissible Delta into a chain
// adds one to t without lowering any provision term.
class PathSearch {
 public:
  PathSearch(const RootSystem& rs, int ell, std::uint64_t budget)
      : rs_(rs), ell_(ell), r_(rs.rank()), all_(full_mask(rs.rank())), budget_(budget) {
    if (r_ > kMaxSearchRank)
      throw InputError("path-type search supports rank up to " + std::to_string(kMaxSearchRank));
  }

  // Greatest delta <= upper with (C delta)_k <= [k == ell] for every k
  // outside `provided`. The admissible set is closed under coordinatewise
  // max, so the greatest element is the limit of lowering violators.
  std::optional<RootVector> greatest_admissible(RootVector upper, Mask provided) const {
    for (Coord c : upper.alpha)
      if (c < 0) return std::nullopt;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int k = 0; k < r_; ++k) {
        if (provided & (Mask{1} << k)) continue;
        Coord rhs = (k == ell_ - 1) ? 1 : 0;
        for (int j : rs_.neighbors(k)) rhs += upper[j];
        const Coord limit = floor_div2(rhs);
        if (upper[k] > limit) {
          if (limit < 0) return std::nullopt;
          upper[k] = limit;
          changed = true;
        }
      }
    }
    return upper;
  }

  std::optional<RootVector> first_delta() const {
    const auto top = rs_.fundamental_alpha(ell_);
    RootVector upper = RootVector::zero(r_);
    for (int k = 0; k < r_; ++k) {
      const auto& c = top.alpha[k];
      upper[k] = static_cast<Coord>(numerator(c) / denominator(c));
    }
    auto d = greatest_admissible(upper, 0);
    if (!d || d->is_zero()) return std::nullopt;
    return d;
  }

  // Maximal admissible Deltas strictly below `last`.
  std::vector<RootVector> maximal_next(const RootVector& last, Mask provided) const {
    std::vector<RootVector> cands;
    for (int j = 0; j < r_; ++j) {
      if (last[j] == 0) continue;
      RootVector upper = last;
      upper[j] -= 1;
      auto d = greatest_admissible(std::move(upper), provided);
      if (d && !d->is_zero()) cands.push_back(std::move(*d));
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<RootVector> out;
    for (const auto& c : cands) {
      const bool dominated = std::any_of(cands.begin(), cands.end(), [&](const RootVector& o) {
        return strictly_below(c, o);
      });
      if (!dominated) out.push_back(c);
    }
    return out;
  }

  // 1 + the provision terms of stepping to `next`.
  Coord step_gain(const RootVector& next, Mask provided, Mask& after) const {
    const Mask fresh = provided_by(gap(rs_, ell_, next)) & ~provided;
    after = provided | fresh;
    Coord gain = 1;
    for (int k = 0; k < r_; ++k)
      if (fresh & (Mask{1} << k)) gain += next[k];
    return gain;
  }

  // Admissible bound on value(): remaining length plus every unclaimed coordinate.
  Coord upper_bound(const RootVector& last, Mask provided) const {
    Coord b = height(last) - 1;
    for (int k = 0; k < r_; ++k)
      if (!(provided & (Mask{1} << k))) b += last[k];
    return b;
  }

  // Best extra g obtainable after `last`.
  Coord value(const RootVector& last, Mask provided) {
    if (provided == all_) return height(last) - 1;
    const Key key = make_key(last, provided);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (memo_.size() >= budget_)
      throw SearchBudgetExceeded("search exceeded budget of " + std::to_string(budget_) + " states",
                                 memo_.size());

    struct Child {
      RootVector delta;
      Mask after;
      Coord gain;
      Coord bound;
    };
    std::vector<Child> children;
    for (auto& d : maximal_next(last, provided)) {
      Mask after = 0;
      const Coord gain = step_gain(d, provided, after);
      const Coord bound = gain + upper_bound(d, after);
      children.push_back({std::move(d), after, gain, bound});
    }
    std::sort(children.begin(), children.end(),
              [](const Child& a, const Child& b) { return a.bound > b.bound; });
    Coord best = 0;
    for (const auto& c : children) {
      if (c.bound <= best) break;
      best = std::max(best, c.gain + value(c.delta, c.after));
    }
    memo_.emplace(key, best);
    return best;
  }

  std::uint64_t states() const { return memo_.size(); }

  // Lexicographically greatest g-maximising maximal path-type.
  PathType best_path(Coord& g) {
    PathType pt;
    g = 0;
    auto first = first_delta();
    if (!first) return pt;
    Mask provided = 0;
    g = step_gain(*first, 0, provided);
    g += value(*first, provided);
    pt.deltas.push_back(*first);
    while (true) {
      const RootVector& last = pt.deltas.back();
      if (provided == all_) {
        // Every step is admissible; peel the highest-index simple root.
        RootVector cur = last;
        while (height(cur) > 1) {
          int j = r_ - 1;
          while (cur[j] == 0) --j;
          cur[j] -= 1;
          pt.deltas.push_back(cur);
        }
        break;
      }
      auto next = maximal_next(last, provided);
      if (next.empty()) break;
      std::optional<Coord> best;
      const RootVector* pick = nullptr;
      Mask pick_after = 0;
      for (const auto& d : next) {  // ascending, so >= keeps the lex greatest tie
        Mask after = 0;
        const Coord v = step_gain(d, provided, after) + value(d, after);
        if (!best || v >= *best) {
          best = v;
          pick = &d;
          pick_after = after;
        }
      }
      pt.deltas.push_back(*pick);
      provided = pick_after;
    }
    return pt;
  }

 private:
  struct Key {
    std::array<std::uint8_t, kMaxSearchRank> coords{};
    Mask provided = 0;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = k.provided * 0x9e3779b97f4a7c15ULL;
      for (auto c : k.coords) h = (h ^ c) * 0x100000001b3ULL;
      return h;
    }
  };

  Key make_key(const RootVector& v, Mask provided) const {
    Key k;
    for (int i = 0; i < r_; ++i) {
      if (v[i] < 0 || v[i] > 255) throw InputError("coordinate out of search range");
      k.coords[i] = static_cast<std::uint8_t>(v[i]);
    }
    k.provided = provided;
    return k;
  }

  const RootSystem& rs_;
  int ell_;
  int r_;
  Mask all_;
  std::uint64_t budget_;
  std::unordered_map<Key, Coord, KeyHash> memo_;
};

// Positive roots orthogonal to a weight, as a bitmap over positive_roots().
std::vector<bool> orthogonal_roots(const RootSystem& rs, const Weight& w) {
  const auto& roots = rs.positive_roots();
  std::vector<bool> out(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) out[i] = inner(w, roots[i]) == 0;
  return out;
}

// Maximises g + half_orbit_dim over maximal path-types by branch and bound,
// seeded with the g-maximiser's degree.
class CrossSearch {
 public:
  CrossSearch(const RootSystem& rs, int ell, PathSearch& search, std::uint64_t budget, Coord seed)
      : rs_(rs), ell_(ell), search_(search), budget_(budget), best_(seed),
        roots_(static_cast<Coord>(rs.positive_roots().size())) {}

  std::optional<Coord> run() {
    auto first = search_.first_delta();
    if (!first) return best_;
    Mask provided = 0;
    const Coord g = search_.step_gain(*first, 0, provided);
    auto orth = orthogonal_roots(rs_, Weight::fundamental(rs_.rank(), ell_));
    intersect(orth, gap(rs_, ell_, *first));
    try {
      visit(*first, provided, g, orth);
    } catch (const SearchBudgetExceeded&) {
      return std::nullopt;
    }
    return best_;
  }

 private:
  void intersect(std::vector<bool>& orth, const Weight& w) const {
    const auto& roots = rs_.positive_roots();
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (orth[i] && inner(w, roots[i]) != 0) orth[i] = false;
  }

  void visit(const RootVector& last, Mask provided, Coord g, const std::vector<bool>& orth) {
    if (++visited_ > budget_) throw SearchBudgetExceeded("cross-check budget", visited_);
    const Coord remaining = search_.value(last, provided);
    const Coord orth_count = static_cast<Coord>(std::count(orth.begin(), orth.end(), true));
    const Coord hod = roots_ - orth_count;
    if (orth_count == 0) {
      best_ = std::max(best_, g + remaining + hod);
      return;
    }
    if (g + remaining + roots_ <= best_) return;
    auto next = search_.maximal_next(last, provided);
    if (next.empty()) {
      best_ = std::max(best_, g + hod);
      return;
    }
    for (const auto& d : next) {
      Mask after = 0;
      const Coord gain = search_.step_gain(d, provided, after);
      auto child_orth = orth;
      intersect(child_orth, gap(rs_, ell_, d));
      visit(d, after, g + gain, child_orth);
    }
  }

  const RootSystem& rs_;
  int ell_;
  PathSearch& search_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  Coord best_;
  Coord roots_;
};

bool is_e8_interior(const RootSystem& rs, int ell) {
  return rs.id().family == Family::E && rs.rank() == 8 && ell >= 2 && ell <= 6;
}

GrowthReport report_for(const RootSystem& rs, int ell, PathType pt, bool fixture) {
  GrowthReport rep;
  rep.g = pt.deltas.empty() ? 0 : g_value(rs, ell, pt);
  rep.half_orbit_dim = half_orbit_dim(rs, ell, pt);
  rep.degree = rep.g + rep.half_orbit_dim;
  rep.best_path_type = std::move(pt);
  rep.fixture_derived = fixture;
  return rep;
}

GrowthReport run_search(const RootSystem& rs, int ell, const GrowthOptions& opts) {
  PathSearch search(rs, ell, opts.budget);
  Coord g = 0;
  PathType pt = search.best_path(g);
  GrowthReport rep = report_for(rs, ell, std::move(pt), false);
  if (rep.g != g) throw std::logic_error("path-type reconstruction disagrees with search value");
  rep.states_explored = search.states();
  CrossSearch cross(rs, ell, search, opts.cross_check_budget, rep.degree);
  rep.cross_degree = cross.run();
  if (!rep.cross_degree)
    rep.cross_check = CrossCheck::not_evaluated;
  else
    rep.cross_check = *rep.cross_degree == rep.degree ? CrossCheck::agrees : CrossCheck::discrepancy;
  return rep;
}

}  // namespace

std::vector<Role> classify(const RootSystem& rs, int ell, const RootVector& delta) {
  check_node(rs, ell);
  const Weight w = gap(rs, ell, delta);
  std::vector<Role> out(rs.rank(), Role::neutral);
  for (int k = 0; k < rs.rank(); ++k) {
    if (w[k] > 0) out[k] = Role::provides;
    if (w[k] < 0) out[k] = Role::demands;
  }
  return out;
}

bool is_valid_path_type(const RootSystem& rs, int ell, const PathType& pt) {
  check_node(rs, ell);
  if (pt.deltas.empty() || rs.rank() > 32) return false;
  Mask provided = 0;
  for (std::size_t i = 0; i < pt.length(); ++i) {
    const RootVector& d = pt.deltas[i];
    if (d.rank() != static_cast<std::size_t>(rs.rank()) || !is_positive(d)) return false;
    if (i > 0 && !strictly_below(d, pt.deltas[i - 1])) return false;
    const Weight w = gap(rs, ell, d);
    if (required_by(w) & ~provided) return false;
    provided |= provided_by(w);
  }
  return true;
}

Coord g_value(const RootSystem& rs, int ell, const PathType& pt) {
  check_node(rs, ell);
  Coord g = static_cast<Coord>(pt.length());
  Mask provided = 0;
  for (const auto& d : pt.deltas) {
    const Mask fresh = provided_by(gap(rs, ell, d)) & ~provided;
    for (int k = 0; k < rs.rank(); ++k)
      if (fresh & (Mask{1} << k)) g += d[k];
    provided |= fresh;
  }
  return g;
}

int half_orbit_dim(const RootSystem& rs, int ell, const PathType& pt) {
  check_node(rs, ell);
  auto orth = orthogonal_roots(rs, Weight::fundamental(rs.rank(), ell));
  for (const auto& d : pt.deltas) {
    const Weight w = gap(rs, ell, d);
    const auto& roots = rs.positive_roots();
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (orth[i] && inner(w, roots[i]) != 0) orth[i] = false;
  }
  return static_cast<int>(std::count(orth.begin(), orth.end(), false));
}

RootVector e8_threshold() { return RootVector{4, 8, 10, 14, 12, 8, 6, 2}; }

std::optional<PathType> known_maximal_path_type(const RootSystem& rs, int ell) {
  check_node(rs, ell);
  const int r = rs.rank();
  const Family fam = rs.id().family;
  const Weight top = Weight::fundamental(r, ell);
  auto chain = [&](std::vector<Weight> weights) {
    PathType pt;
    for (const auto& w : weights) pt.deltas.push_back(from_weight_expression(rs, w));
    return pt;
  };
  std::optional<PathType> out;

  if (fam == Family::D && ell >= 2 && ell <= r - 2) {
    std::vector<Weight> ws;
    if (ell % 2 == 0) ws.push_back(top);
    for (int j = (ell % 2 == 0) ? 2 : 1; j <= ell - 2; j += 2) ws.push_back(top - Weight::fundamental(r, j));
    out = chain(ws);
  } else if (fam == Family::E && r == 6 && ell == 4) {
    out = chain({top, combo(6, {{4, 1}, {2, -1}}), combo(6, {{4, 1}, {1, -1}, {6, -1}}),
                 combo(6, {{2, 1}, {4, 1}, {3, -1}, {5, -1}}), combo(6, {{2, 2}, {4, -1}})});
  } else if (fam == Family::E && r == 7 && ell == 3) {
    out = chain({top, combo(7, {{3, 1}, {1, -1}}), combo(7, {{3, 1}, {6, -1}}),
                 combo(7, {{1, 1}, {6, 1}, {4, -1}}), combo(7, {{1, 2}, {3, -1}})});
  } else if (fam == Family::E && r == 7 && ell == 6) {
    out = chain({top, combo(7, {{6, 1}, {1, -1}})});
  } else if (fam == Family::E && r == 7 && (ell == 4 || ell == 5)) {
    return std::nullopt;  // only the opening steps are known in closed form
  } else if (fam == Family::E && r == 8 && ell == 1) {
    out = chain({top, combo(8, {{1, 1}, {8, -1}})});
  } else if (fam == Family::E && r == 8 && ell == 7) {
    out = chain({top, combo(8, {{7, 1}, {8, -1}}), combo(8, {{7, 1}, {1, -1}}),
                 combo(8, {{7, 1}, {8, 1}, {6, -1}}), combo(8, {{8, 2}, {7, -1}})});
  } else if (fam == Family::E && r == 8 && ell == 8) {
    out = chain({top});
  } else if (is_e8_interior(rs, ell)) {
    PathType pt = chain({top, top - combo(8, {{8, 1}}), top - combo(8, {{1, 1}}),
                         top + combo(8, {{6, -1}, {8, 1}}),
                         top + combo(8, {{1, 1}, {4, -1}, {8, 1}})});
    // omega_2, omega_3, omega_5, omega_7 are still unprovided but all their
    // neighbours are, so one simple-root step each provides them.
    for (int j : {2, 3, 5, 7}) {
      RootVector next = pt.deltas.back();
      next[j - 1] -= 1;
      pt.deltas.push_back(next);
    }
    RootVector cur = pt.deltas.back();
    while (height(cur) > 1) {
      int j = r - 1;
      while (cur[j] == 0) --j;
      cur[j] -= 1;
      pt.deltas.push_back(cur);
    }
    out = std::move(pt);
  } else {
    // Nodes whose chamber below omega_ell holds at most one lattice point.
    std::vector<RootVector> points;
    for (const Weight& mu : rs.dominant_weights_below(top)) {
      auto v = rs.to_alpha(top - mu);
      if (v.integral() && !v.to_integral().is_zero()) points.push_back(v.to_integral());
    }
    if (points.size() > 1) return std::nullopt;
    out = PathType{points};
  }

  if (!out->deltas.empty() && !is_valid_path_type(rs, ell, *out))
    throw std::logic_error("hand-built path-type for " + rs.id().name() + " node " +
                           std::to_string(ell) + " is not admissible");
  return out;
}

GrowthReport growth_degree(const RootSystem& rs, int ell, const GrowthOptions& opts) {
  check_node(rs, ell);
  auto from_fixture = [&]() {
    auto pt = known_maximal_path_type(rs, ell);
    if (!pt)
      throw FixtureUnavailable("no hand-built maximal path-type for " + rs.id().name() + " node " +
                               std::to_string(ell));
    return report_for(rs, ell, std::move(*pt), true);
  };
  switch (opts.mode) {
    case GrowthMode::fixture:
      return from_fixture();
    case GrowthMode::search:
      return run_search(rs, ell, opts);
    case GrowthMode::automatic:
      if (is_e8_interior(rs, ell)) return from_fixture();
      try {
        return run_search(rs, ell, opts);
      } catch (const SearchBudgetExceeded&) {
        if (!known_maximal_path_type(rs, ell)) throw;
        return from_fixture();
      }
  }
  throw std::logic_error("unknown growth mode");
}

HeightRelation height_relation_check(const RootSystem& rs, int ell, const GrowthOptions& opts) {
  check_node(rs, ell);
  HeightRelation hr;
  hr.height = height(rs.fundamental_alpha(ell));
  hr.c = static_cast<Coord>(rs.positive_roots().size());
  const GrowthReport rep = growth_degree(rs, ell, opts);
  hr.g = rep.g;

  Mask provided = 0;
  for (const auto& d : rep.best_path_type.deltas) provided |= provided_by(gap(rs, ell, d));
  if (provided != full_mask(rs.rank())) {
    hr.reason = "maximal path-type leaves some fundamental weight unprovided";
    return hr;
  }
  if (rs.id().family == Family::E && rs.rank() == 8) {
    const auto top = rs.fundamental_alpha(ell);
    const RootVector xi = e8_threshold();
    for (int k = 0; k < 8; ++k)
      if (top.alpha[k] < xi[k]) {
        hr.reason = "omega_ell lies below the E8 threshold";
        return hr;
      }
  }
  hr.applicable = true;
  hr.holds = Rational(hr.g) == 2 * hr.height - hr.c;
  return hr;
}

}  // namespace krtree
