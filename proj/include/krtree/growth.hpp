#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "krtree/rootsys.hpp"

namespace krtree {

/// Strictly decreasing chain Delta_1 > ... > Delta_t of root-lattice points.
struct PathType {
  std::vector<RootVector> deltas;

  std::size_t length() const { return deltas.size(); }
  bool operator==(const PathType&) const = default;
};

enum class Role { neutral, provides, demands };

/// Sign of each omega_k-coordinate of omega_ell - delta.
std::vector<Role> classify(const RootSystem& rs, int ell, const RootVector& delta);

/// Strictly decreasing positive chain with omega_ell - Delta_1 dominant, and
/// every omega_i required by some Delta_n provided by an earlier Delta_k.
bool is_valid_path_type(const RootSystem& rs, int ell, const PathType& pt);

/// t plus, for each omega_k, the alpha_k-coordinate of the first Delta
/// providing it.
Coord g_value(const RootSystem& rs, int ell, const PathType& pt);

/// Positive roots not orthogonal to omega_ell or to some omega_ell - Delta_i.
int half_orbit_dim(const RootSystem& rs, int ell, const PathType& pt);

/// The hand-built maximal path-types: the explicit chains for D_n and the
/// listed exceptional nodes, the incomplete E8 chain completed by simple-root
/// steps, and the single-point or empty cases.
std::optional<PathType> known_maximal_path_type(const RootSystem& rs, int ell);

enum class GrowthMode {
  automatic,  ///< fixture for E8 nodes 2..6, search otherwise
  search,
  fixture,
};

struct GrowthOptions {
  GrowthMode mode = GrowthMode::automatic;
  /// Search states the g-maximisation may expand.
  std::uint64_t budget = 20'000'000;
  /// Nodes the separate (g + half_orbit_dim) cross-check may visit.
  std::uint64_t cross_check_budget = 2'000'000;
};

enum class CrossCheck { agrees, discrepancy, not_evaluated };

struct GrowthReport {
  PathType best_path_type;
  Coord g = 0;
  int half_orbit_dim = 0;
  Coord degree = 0;
  bool fixture_derived = false;
  std::uint64_t states_explored = 0;
  CrossCheck cross_check = CrossCheck::not_evaluated;
  /// Largest g + half_orbit_dim over maximal path-types, when evaluated.
  std::optional<Coord> cross_degree;
};

class SearchBudgetExceeded : public std::runtime_error {
 public:
  SearchBudgetExceeded(const std::string& what, std::uint64_t explored)
      : std::runtime_error(what), explored_(explored) {}
  std::uint64_t explored() const { return explored_; }

 private:
  std::uint64_t explored_;
};

class FixtureUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GrowthReport growth_degree(const RootSystem& rs, int ell, const GrowthOptions& opts = {});

struct HeightRelation {
  bool applicable = false;
  bool holds = false;
  Coord g = 0;
  Rational height;   ///< ht(omega_ell)
  Coord c = 0;       ///< number of positive roots
  std::string reason;  ///< why not applicable
};

/// Checks g = 2 ht(omega_ell) - |positive roots| for nodes whose maximal
/// path-type provides every fundamental weight.
HeightRelation height_relation_check(const RootSystem& rs, int ell, const GrowthOptions& opts = {});

/// The E8 threshold (4,8,10,14,12,8,6,2) in simple-root coordinates.
RootVector e8_threshold();

}  // namespace krtree
