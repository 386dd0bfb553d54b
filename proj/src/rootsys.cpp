#include "krtree/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>
#include <unordered_set>
#include <utility>

namespace krtree {

BigInt binomial(Coord top, Coord bottom) {
  if (bottom == 0) return 1;
  if (bottom < 0 || top < bottom) return 0;
  if (bottom > top - bottom) bottom = top - bottom;
  BigInt result = 1;
  for (Coord i = 1; i <= bottom; ++i) {
    result *= top - bottom + i;
    result /= i;
  }
  return result;
}

std::string to_string(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

// ---------------------------------------------------------------------------
// AlgebraId

AlgebraId AlgebraId::parse(std::string_view text) {
  if (text.size() < 2) throw InputError("invalid algebra '" + std::string(text) + "'");
  AlgebraId id;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': id.family = Family::A; break;
    case 'D': id.family = Family::D; break;
    case 'E': id.family = Family::E; break;
    default: throw InputError("unsupported family in '" + std::string(text) + "'");
  }
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw InputError("invalid rank in '" + std::string(text) + "'");
  id.validate();
  return id;
}

std::string AlgebraId::name() const {
  const char letter = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
  return letter + std::to_string(rank);
}

void AlgebraId::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
  }
  if (!ok) throw InputError("no simply-laced algebra " + name());
}

// ---------------------------------------------------------------------------
// Vector types

Weight Weight::fundamental(int rank, int node, Coord multiple) {
  Weight w = zero(rank);
  w[node - 1] = multiple;
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t k = 0; k < omega.size(); ++k) omega[k] += o.omega[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t k = 0; k < omega.size(); ++k) omega[k] -= o.omega[k];
  return *this;
}

RootVector RootVector::simple(int rank, int node) {
  RootVector v = zero(rank);
  v[node - 1] = 1;
  return v;
}

bool RootVector::is_zero() const {
  return std::all_of(alpha.begin(), alpha.end(), [](Coord c) { return c == 0; });
}

RootVector& RootVector::operator+=(const RootVector& o) {
  for (std::size_t k = 0; k < alpha.size(); ++k) alpha[k] += o.alpha[k];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  for (std::size_t k = 0; k < alpha.size(); ++k) alpha[k] -= o.alpha[k];
  return *this;
}

bool RationalRootVector::integral() const {
  return std::all_of(alpha.begin(), alpha.end(),
                     [](const Rational& c) { return denominator(c) == 1; });
}

RootVector RationalRootVector::to_integral() const {
  RootVector v;
  v.alpha.reserve(alpha.size());
  for (const auto& c : alpha) {
    if (denominator(c) != 1) throw InputError("vector is not in the root lattice");
    v.alpha.push_back(static_cast<Coord>(numerator(c)));
  }
  return v;
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.omega.begin(), w.omega.end(), [](Coord c) { return c >= 0; });
}

bool in_positive_root_lattice(const RationalRootVector& v) {
  return std::all_of(v.alpha.begin(), v.alpha.end(), [](const Rational& c) {
    return denominator(c) == 1 && c >= 0;
  });
}

Coord height(const RootVector& v) {
  Coord h = 0;
  for (Coord c : v.alpha) h += c;
  return h;
}

Rational height(const RationalRootVector& v) {
  Rational h = 0;
  for (const auto& c : v.alpha) h += c;
  return h;
}

Coord inner(const Weight& w, const RootVector& v) {
  if (w.rank() != v.rank()) throw InputError("rank mismatch in pairing");
  Coord s = 0;
  for (std::size_t k = 0; k < w.rank(); ++k) s += w[k] * v[k];
  return s;
}

Rational inner(const Weight& w, const RationalRootVector& v) {
  if (w.rank() != v.rank()) throw InputError("rank mismatch in pairing");
  Rational s = 0;
  for (std::size_t k = 0; k < w.rank(); ++k) s += w[k] * v.alpha[k];
  return s;
}

bool below_or_equal(const RootVector& a, const RootVector& b) {
  for (std::size_t k = 0; k < a.rank(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

bool strictly_below(const RootVector& a, const RootVector& b) {
  return below_or_equal(a, b) && a != b;
}

bool is_positive(const RootVector& v) {
  bool nonzero = false;
  for (Coord c : v.alpha) {
    if (c < 0) return false;
    nonzero = nonzero || c != 0;
  }
  return nonzero;
}

namespace {
std::size_t hash_coords(const std::vector<Coord>& coords) {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Coord c : coords) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
}  // namespace

std::size_t RootVectorHash::operator()(const RootVector& v) const noexcept {
  return hash_coords(v.alpha);
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  return hash_coords(w.omega);
}

std::string to_string(const RootVector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.rank(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s + ")";
}

std::string to_string(const Weight& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.rank(); ++k) {
    if (k) s += ',';
    s += std::to_string(w[k]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// RootSystem

namespace {

// Bourbaki edges, one-based.
std::vector<std::pair<int, int>> dynkin_edges(const AlgebraId& id) {
  std::vector<std::pair<int, int>> edges;
  const int r = id.rank;
  switch (id.family) {
    case Family::A:
      for (int i = 1; i < r; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i < r - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(r - 2, r);
      break;
    case Family::E:
      edges.emplace_back(1, 3);
      edges.emplace_back(2, 4);
      for (int i = 3; i < r; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular Cartan matrix");
    std::swap(a[pivot], a[col]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

RootSystem::RootSystem(AlgebraId id) : id_(id) {
  id_.validate();
  const int r = id_.rank;
  cartan_.assign(r, std::vector<int>(r, 0));
  neighbors_.assign(r, {});
  for (int i = 0; i < r; ++i) cartan_[i][i] = 2;
  for (auto [a, b] : dynkin_edges(id_)) {
    cartan_[a - 1][b - 1] = cartan_[b - 1][a - 1] = -1;
    neighbors_[a - 1].push_back(b - 1);
    neighbors_[b - 1].push_back(a - 1);
  }
  for (auto& n : neighbors_) std::sort(n.begin(), n.end());
  inv_cartan_ = invert(cartan_);

  // Closure from the simple roots, one height at a time. For a root a and a
  // simple root alpha_j, the alpha_j-string through a runs from a - p alpha_j
  // to a + q alpha_j with p - q = <a, alpha_j>.
  std::set<RootVector> known;
  std::vector<RootVector> layer;
  for (int j = 1; j <= r; ++j) layer.push_back(RootVector::simple(r, j));
  while (!layer.empty()) {
    known.insert(layer.begin(), layer.end());
    positive_roots_.insert(positive_roots_.end(), layer.begin(), layer.end());
    std::set<RootVector> next;
    for (const auto& a : layer) {
      const Weight pairing = to_omega(a);
      for (int j = 0; j < r; ++j) {
        int p = 0;
        RootVector down = a;
        while (true) {
          down[j] -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        const Coord q = p - pairing[j];
        if (q > 0) {
          RootVector up = a;
          up[j] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
  }
}

void RootSystem::check_rank(std::size_t n) const {
  if (n != static_cast<std::size_t>(rank()))
    throw InputError("vector length " + std::to_string(n) + " does not match rank " +
                     std::to_string(rank()));
}

Weight RootSystem::to_omega(const RootVector& v) const {
  check_rank(v.rank());
  Weight w = Weight::zero(rank());
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) w[i] += cartan_[i][j] * v[j];
  return w;
}

std::vector<Rational> RootSystem::to_omega(const RationalRootVector& v) const {
  check_rank(v.rank());
  std::vector<Rational> w(rank(), Rational(0));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) w[i] += cartan_[i][j] * v.alpha[j];
  return w;
}

RationalRootVector RootSystem::to_alpha(const Weight& w) const {
  check_rank(w.rank());
  RationalRootVector v;
  v.alpha.assign(rank(), Rational(0));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) v.alpha[i] += inv_cartan_[i][j] * w[j];
  return v;
}

RationalRootVector RootSystem::fundamental_alpha(int node) const {
  check_node(*this, node);
  return to_alpha(Weight::fundamental(rank(), node));
}

BigInt RootSystem::weyl_dimension(const Weight& w) const {
  check_rank(w.rank());
  if (!is_dominant(w)) throw InputError("weyl_dimension needs a dominant weight, got " + to_string(w));
  BigInt num = 1;
  BigInt den = 1;
  const Weight shifted = w + rho();
  for (const auto& a : positive_roots_) {
    num *= inner(shifted, a);
    den *= height(a);
  }
  return num / den;
}

std::vector<Weight> RootSystem::dominant_weights_below(const Weight& w) const {
  check_rank(w.rank());
  if (!is_dominant(w)) throw InputError("dominant_weights_below needs a dominant weight");
  // Any two comparable dominant weights are joined by a chain of dominant
  // weights whose steps are positive roots, so the search may stay inside
  // the dominant chamber.
  std::vector<Weight> root_weights;
  root_weights.reserve(positive_roots_.size());
  for (const auto& a : positive_roots_) root_weights.push_back(to_omega(a));

  std::unordered_set<Weight, WeightHash> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : root_weights) {
      Weight next = cur - a;
      if (!is_dominant(next)) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

void check_node(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank())
    throw InputError("node " + std::to_string(node) + " out of range for " + rs.id().name());
}

}  // namespace krtree
