#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "krtree/numeric.hpp"

namespace krtree {

/// Raised for malformed user input: bad algebra names, out-of-range nodes,
/// non-dominant weights where a dominant one is required.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { A, D, E };

struct AlgebraId {
  Family family = Family::A;
  int rank = 1;

  /// Accepts "A3", "D5", "E8" (case-insensitive family letter).
  static AlgebraId parse(std::string_view text);
  std::string name() const;
  void validate() const;

  auto operator<=>(const AlgebraId&) const = default;
};

/// Weight in the fundamental-weight basis.
struct Weight {
  std::vector<Coord> omega;

  Weight() = default;
  explicit Weight(std::vector<Coord> coords) : omega(std::move(coords)) {}
  Weight(std::initializer_list<Coord> coords) : omega(coords) {}

  static Weight zero(int rank) { return Weight(std::vector<Coord>(rank, 0)); }
  static Weight fundamental(int rank, int node, Coord multiple = 1);

  std::size_t rank() const { return omega.size(); }
  Coord operator[](std::size_t k) const { return omega[k]; }
  Coord& operator[](std::size_t k) { return omega[k]; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Coord s, Weight w) {
    for (auto& c : w.omega) c *= s;
    return w;
  }

  auto operator<=>(const Weight&) const = default;
};

/// Element of the root lattice, integral coordinates in the simple-root basis.
struct RootVector {
  std::vector<Coord> alpha;

  RootVector() = default;
  explicit RootVector(std::vector<Coord> coords) : alpha(std::move(coords)) {}
  RootVector(std::initializer_list<Coord> coords) : alpha(coords) {}

  static RootVector zero(int rank) { return RootVector(std::vector<Coord>(rank, 0)); }
  static RootVector simple(int rank, int node);

  std::size_t rank() const { return alpha.size(); }
  Coord operator[](std::size_t k) const { return alpha[k]; }
  Coord& operator[](std::size_t k) { return alpha[k]; }
  bool is_zero() const;

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }

  auto operator<=>(const RootVector&) const = default;
};

/// Simple-root coordinates that may be fractional (weights off the root lattice).
struct RationalRootVector {
  std::vector<Rational> alpha;

  std::size_t rank() const { return alpha.size(); }
  bool integral() const;
  /// Throws InputError when some coordinate is fractional.
  RootVector to_integral() const;
  bool operator==(const RationalRootVector&) const = default;
};

bool is_dominant(const Weight& w);
bool in_positive_root_lattice(const RationalRootVector& v);
Coord height(const RootVector& v);
Rational height(const RationalRootVector& v);
/// Pairing <w, v> with <omega_i, alpha_j> = delta_ij.
Coord inner(const Weight& w, const RootVector& v);
Rational inner(const Weight& w, const RationalRootVector& v);

/// a ⪯ b coordinatewise.
bool below_or_equal(const RootVector& a, const RootVector& b);
/// a ⪯ b and a != b.
bool strictly_below(const RootVector& a, const RootVector& b);
/// Nonzero with all coordinates nonnegative.
bool is_positive(const RootVector& v);

struct RootVectorHash {
  std::size_t operator()(const RootVector& v) const noexcept;
};
struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Simply-laced Dynkin datum in Bourbaki numbering. Immutable once built.
class RootSystem {
 public:
  explicit RootSystem(AlgebraId id);

  const AlgebraId& id() const { return id_; }
  int rank() const { return id_.rank; }
  /// Zero-based entry c_{ij}.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<std::vector<Rational>>& inverse_cartan() const { return inv_cartan_; }
  /// Zero-based neighbors of zero-based node i in the Dynkin diagram.
  const std::vector<int>& neighbors(int i) const { return neighbors_[i]; }
  /// Sorted by height, then lexicographically.
  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
  Weight rho() const { return Weight(std::vector<Coord>(rank(), 1)); }

  /// C·v: simple-root coordinates to fundamental-weight coordinates.
  Weight to_omega(const RootVector& v) const;
  std::vector<Rational> to_omega(const RationalRootVector& v) const;
  /// C^{-1}·w.
  RationalRootVector to_alpha(const Weight& w) const;
  /// Simple-root coordinates of the fundamental weight of one-based node.
  RationalRootVector fundamental_alpha(int node) const;

  /// Exact Weyl dimension of the irreducible module of dominant weight w.
  BigInt weyl_dimension(const Weight& w) const;

  /// Every dominant mu with w - mu in the positive root lattice, including w,
  /// in ascending lexicographic order of omega-coordinates.
  std::vector<Weight> dominant_weights_below(const Weight& w) const;

 private:
  void check_rank(std::size_t n) const;

  AlgebraId id_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> inv_cartan_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<RootVector> positive_roots_;
};

/// One-based node check; throws InputError.
void check_node(const RootSystem& rs, int node);

std::string to_string(const RootVector& v);
std::string to_string(const Weight& w);

}  // namespace krtree
