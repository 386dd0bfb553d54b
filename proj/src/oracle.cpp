#include "krtree/oracle.hpp"

#include <algorithm>
#include <string>

namespace krtree {

std::vector<Partition> partitions_of(Coord n) {
  if (n < 0) throw InputError("partitions_of needs n >= 0");
  std::vector<Partition> out;
  Partition cur;
  // Largest-part-first recursion gives reverse lexicographic order.
  auto rec = [&](auto&& self, Coord remaining, Coord max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (Coord p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Coord PartitionTuple::count(int k, Coord h) const {
  const auto& p = parts[k];
  return std::count(p.begin(), p.end(), h);
}

Coord PartitionTuple::columns(int k, Coord n) const {
  Coord s = 0;
  for (Coord part : parts[k]) s += std::min(n, part);
  return s;
}

Coord PartitionTuple::largest_part() const {
  Coord best = 0;
  for (const auto& p : parts)
    if (!p.empty()) best = std::max(best, p.front());
  return best;
}

Coord p_value(const RootSystem& rs, const MultiplicityQuery& q, const PartitionTuple& nu, int k,
              Coord n) {
  check_node(rs, k);
  Coord value = (k == q.ell) ? std::min(n, q.level) : 0;
  for (int j = 0; j < rs.rank(); ++j) {
    const int c = rs.cartan(j, k - 1);
    if (c != 0) value -= c * nu.columns(j, n);
  }
  return value;
}

namespace {

void check_query(const RootSystem& rs, const MultiplicityQuery& q) {
  check_node(rs, q.ell);
  if (q.level < 0) throw InputError("level must be nonnegative");
  if (q.n.size() != static_cast<std::size_t>(rs.rank()))
    throw InputError("query length does not match rank");
  for (Coord v : q.n)
    if (v < 0) throw InputError("query coordinates must be nonnegative");
}

// Partition data flattened for the inner loop.
struct PreparedPartition {
  Coord largest = 0;
  Coord size = 0;
  std::vector<Coord> counts;   // counts[h], h in [0, largest]
  std::vector<Coord> columns;  // columns[n], n in [0, largest]

  explicit PreparedPartition(const Partition& p) {
    largest = p.empty() ? 0 : p.front();
    counts.assign(largest + 1, 0);
    for (Coord part : p) {
      ++counts[part];
      size += part;
    }
    columns.assign(largest + 1, 0);
    for (Coord n = 1; n <= largest; ++n) {
      Coord s = 0;
      for (Coord part : p) s += std::min(n, part);
      columns[n] = s;
    }
  }

  Coord count(Coord h) const { return h <= largest ? counts[h] : 0; }
  Coord cols(Coord n) const { return n <= largest ? columns[n] : size; }
};

BigInt partition_number(Coord n) {
  // Euler's pentagonal recurrence.
  std::vector<BigInt> p(n + 1, 0);
  p[0] = 1;
  for (Coord i = 1; i <= n; ++i) {
    for (Coord k = 1;; ++k) {
      const Coord g1 = k * (3 * k - 1) / 2;
      if (g1 > i) break;
      const bool add = (k % 2) == 1;
      add ? p[i] += p[i - g1] : p[i] -= p[i - g1];
      const Coord g2 = k * (3 * k + 1) / 2;
      if (g2 <= i) add ? p[i] += p[i - g2] : p[i] -= p[i - g2];
    }
  }
  return p[n];
}

}  // namespace

BigInt tuple_count(const MultiplicityQuery& q) {
  BigInt total = 1;
  for (Coord v : q.n) total *= partition_number(v);
  return total;
}

BigInt z_multiplicity(const RootSystem& rs, const MultiplicityQuery& q, const OracleOptions& opts) {
  check_query(rs, q);
  const BigInt tuples = tuple_count(q);
  if (tuples > opts.tuple_limit)
    throw OracleScaleExceeded("oracle scale exceeded: " + tuples.str() + " partition tuples",
                              tuples);

  const int r = rs.rank();
  std::vector<std::vector<PreparedPartition>> choices(r);
  for (int k = 0; k < r; ++k)
    for (const auto& p : partitions_of(q.n[k])) choices[k].emplace_back(p);

  std::vector<std::size_t> index(r, 0);
  std::vector<const PreparedPartition*> tuple(r);
  BigInt total = 0;
  while (true) {
    Coord largest = 0;
    for (int k = 0; k < r; ++k) {
      tuple[k] = &choices[k][index[k]];
      largest = std::max(largest, tuple[k]->largest);
    }

    BigInt term = 1;
    for (Coord n = 1; n <= largest && term != 0; ++n) {
      for (int k = 0; k < r; ++k) {
        const Coord parts = tuple[k]->count(n);
        if (parts == 0) continue;
        Coord p = (k == q.ell - 1) ? std::min(n, q.level) : 0;
        for (int j = 0; j < r; ++j) {
          const int c = rs.cartan(j, k);
          if (c != 0) p -= c * tuple[j]->cols(n);
        }
        if (p < 0) {
          term = 0;
          break;
        }
        term *= binomial(p + parts, parts);
      }
    }
    total += term;

    int k = r - 1;
    while (k >= 0 && ++index[k] == choices[k].size()) {
      index[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return total;
}

std::map<Weight, BigInt> full_decomposition_oracle(const RootSystem& rs, int ell, Coord level,
                                                   const OracleOptions& opts) {
  check_node(rs, ell);
  if (level < 0) throw InputError("level must be nonnegative");
  const Weight top = Weight::fundamental(rs.rank(), ell, level);
  std::vector<MultiplicityQuery> queries;
  for (const Weight& lambda : rs.dominant_weights_below(top)) {
    MultiplicityQuery q{ell, level, rs.to_alpha(top - lambda).to_integral().alpha};
    const BigInt tuples = tuple_count(q);
    if (tuples > opts.tuple_limit)
      throw OracleScaleExceeded("oracle scale exceeded at " + to_string(lambda) + ": " +
                                    tuples.str() + " partition tuples",
                                tuples);
    queries.push_back(std::move(q));
  }
  std::map<Weight, BigInt> out;
  for (const auto& q : queries) {
    BigInt z = z_multiplicity(rs, q, opts);
    if (z == 0) continue;
    Weight lambda = top - rs.to_omega(RootVector(q.n));
    out.emplace(std::move(lambda), std::move(z));
  }
  return out;
}

}  // namespace krtree
