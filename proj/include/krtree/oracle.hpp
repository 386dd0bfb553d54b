#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "krtree/rootsys.hpp"

namespace krtree {

/// Parts in nonincreasing order.
using Partition = std::vector<Coord>;

/// All partitions of n, in reverse lexicographic order ({n} first).
/// partitions_of(0) holds only the empty partition.
std::vector<Partition> partitions_of(Coord n);

/// One partition per simple root.
struct PartitionTuple {
  std::vector<Partition> parts;

  /// nu^{(k)}_h, zero-based k: number of parts of size h in partition k.
  Coord count(int k, Coord h) const;
  /// Number of boxes in the first n columns of partition k.
  Coord columns(int k, Coord n) const;
  Coord largest_part() const;
};

/// Multiplicity of lambda = level*omega_ell - sum n_i alpha_i in W_level(ell).
struct MultiplicityQuery {
  int ell = 1;
  Coord level = 0;
  std::vector<Coord> n;
};

class OracleScaleExceeded : public std::runtime_error {
 public:
  OracleScaleExceeded(const std::string& what, BigInt tuples)
      : std::runtime_error(what), tuples_(std::move(tuples)) {}
  const BigInt& tuples() const { return tuples_; }

 private:
  BigInt tuples_;
};

struct OracleOptions {
  /// Refuse queries whose partition-tuple count exceeds this.
  std::uint64_t tuple_limit = 10'000'000;
};

/// P^{(k)}_n(nu) for one-based k and n >= 1.
Coord p_value(const RootSystem& rs, const MultiplicityQuery& q, const PartitionTuple& nu, int k,
              Coord n);

/// Product over the partition sizes p(n_1) ... p(n_r).
BigInt tuple_count(const MultiplicityQuery& q);

/// Brute-force fermionic sum over every partition tuple.
BigInt z_multiplicity(const RootSystem& rs, const MultiplicityQuery& q,
                      const OracleOptions& opts = {});

/// Multiplicity of every dominant weight below level*omega_ell; zero entries omitted.
std::map<Weight, BigInt> full_decomposition_oracle(const RootSystem& rs, int ell, Coord level,
                                                   const OracleOptions& opts = {});

}  // namespace krtree
