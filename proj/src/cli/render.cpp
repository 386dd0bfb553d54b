#include "krtree/cli/render.hpp"

#include <cctype>
#include <charconv>

namespace krtree::cli {

namespace {

constexpr std::string_view kOmega = "ω";
constexpr std::string_view kOplus = "⊕";
constexpr std::string_view kSubscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};

}  // namespace

std::string format_weight(const Weight& w) {
  std::string s;
  for (std::size_t k = 0; k < w.rank(); ++k) {
    const Coord c = w[k];
    if (c == 0) continue;
    if (c < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    if (c != 1 && c != -1) s += std::to_string(c < 0 ? -c : c);
    s += kOmega;
    s += std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

std::string format_summand(const BigInt& multiplicity, const Weight& w) {
  std::string s = multiplicity == 1 ? "" : multiplicity.str();
  const std::string body = format_weight(w);
  return s + (body == "0" ? "V_0" : "V_{" + body + "}");
}

std::string level_marker(std::size_t level) {
  std::string s(kOplus);
  for (char c : std::to_string(level)) s += kSubscripts[c - '0'];
  return s;
}

std::string render_tree_text(const RootSystem& rs, const DecompositionTree& tree, bool dims) {
  std::string out;
  for_each_node(tree.root, [&](const TreeNode& node, std::size_t depth) {
    out.append(2 * depth, ' ');
    if (const RootVector* inc = node.increment()) out += to_string(*inc) + " ";
    out += format_summand(node.multiplicity, node.highest_weight);
    if (dims) out += "  [dim " + rs.weyl_dimension(node.highest_weight).str() + "]";
    out += '\n';
  });
  if (dims) out += "total dimension: " + total_dimension(rs, tree).str() + '\n';
  return out;
}

std::vector<FlatEntry> flatten(const DecompositionTree& tree) {
  std::vector<FlatEntry> out;
  for_each_node(tree.root, [&](const TreeNode& node, std::size_t depth) {
    out.push_back({depth, node.multiplicity, node.highest_weight});
  });
  return out;
}

std::string render_flat(const DecompositionTree& tree) {
  std::string out;
  for (const auto& e : flatten(tree)) {
    if (!out.empty()) out += ' ' + level_marker(e.level) + ' ';
    out += format_summand(e.multiplicity, e.weight);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  bool peek_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  std::string digits() {
    std::string d;
    while (peek_digit()) d += text_[pos_++];
    return d;
  }
  std::string subscript_digits() {
    std::string d;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i = 0; i < 10; ++i)
        if (accept(kSubscripts[i])) {
          d += static_cast<char>('0' + i);
          progress = true;
        }
    }
    return d;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("flat notation, offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Coord to_coord(const std::string& d, const Scanner& sc) {
  Coord v = 0;
  auto [p, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
  if (ec != std::errc()) sc.fail("bad number '" + d + "'");
  return v;
}

Weight parse_weight_body(Scanner& sc, int rank) {
  Weight w = Weight::zero(rank);
  if (sc.accept("0")) return w;
  bool first = true;
  while (true) {
    Coord sign = 1;
    if (!first) {
      if (sc.accept("+")) {
      } else if (sc.accept("-")) {
        sign = -1;
      } else {
        break;
      }
    } else if (sc.accept("-")) {
      sign = -1;
    }
    first = false;
    const std::string coeff = sc.digits();
    if (!sc.accept(kOmega) && !sc.accept("w")) sc.fail("expected ω");
    const std::string node = sc.digits();
    if (node.empty()) sc.fail("expected node index");
    const Coord k = to_coord(node, sc);
    if (k < 1 || k > rank) sc.fail("node index " + node + " out of range");
    w[k - 1] += sign * (coeff.empty() ? 1 : to_coord(coeff, sc));
  }
  return w;
}

FlatEntry parse_summand(Scanner& sc, int rank, std::size_t level) {
  FlatEntry e;
  e.level = level;
  sc.skip_space();
  const std::string mult = sc.digits();
  if (!mult.empty()) e.multiplicity = BigInt(mult);
  sc.skip_space();
  sc.expect("V");
  sc.expect("_");
  if (sc.accept("{")) {
    e.weight = parse_weight_body(sc, rank);
    sc.expect("}");
  } else {
    e.weight = parse_weight_body(sc, rank);
  }
  return e;
}

}  // namespace

std::vector<FlatEntry> parse_flat(std::string_view text, int rank) {
  Scanner sc(text);
  std::vector<FlatEntry> out;
  if (sc.done()) return out;
  out.push_back(parse_summand(sc, rank, 0));
  while (!sc.done()) {
    sc.expect(kOplus);
    std::string level = sc.subscript_digits();
    if (level.empty()) level = sc.digits();
    if (level.empty()) sc.fail("missing level after ⊕");
    out.push_back(parse_summand(sc, rank, static_cast<std::size_t>(to_coord(level, sc))));
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json node_to_json(const TreeNode& node, const RootSystem* rs) {
  nlohmann::json j;
  j["delta"] = node.increment() ? nlohmann::json(node.increment()->alpha) : nlohmann::json(nullptr);
  j["hw_omega"] = node.highest_weight.omega;
  j["multiplicity"] = node.multiplicity.str();
  if (rs) j["dim"] = rs->weyl_dimension(node.highest_weight).str();
  j["children"] = nlohmann::json::array();
  for (const auto& c : node.children) j["children"].push_back(node_to_json(c, rs));
  return j;
}

void node_from_json(const nlohmann::json& j, TreeNode& node, const Label& parent,
                    DecompositionTree& tree) {
  node.label = parent;
  if (!j.at("delta").is_null())
    node.label.increments.push_back(RootVector(j.at("delta").get<std::vector<Coord>>()));
  node.highest_weight = Weight(j.at("hw_omega").get<std::vector<Coord>>());
  node.multiplicity = BigInt(j.at("multiplicity").get<std::string>());
  ++tree.node_count;
  tree.aggregate[node.highest_weight] += node.multiplicity;
  for (const auto& cj : j.at("children")) {
    node.children.emplace_back();
    node_from_json(cj, node.children.back(), node.label, tree);
  }
}

}  // namespace

nlohmann::json tree_to_json(const DecompositionTree& tree, const RootSystem* dims_from) {
  nlohmann::json doc;
  doc["algebra"] = tree.algebra.name();
  doc["node"] = tree.ell;
  doc["level"] = tree.level;
  doc["tree"] = node_to_json(tree.root, dims_from);
  if (dims_from) doc["total_dimension"] = total_dimension(*dims_from, tree).str();
  return doc;
}

DecompositionTree tree_from_json(const nlohmann::json& doc) {
  DecompositionTree tree;
  try {
    tree.algebra = AlgebraId::parse(doc.at("algebra").get<std::string>());
    tree.ell = doc.at("node").get<int>();
    tree.level = doc.at("level").get<Coord>();
    node_from_json(doc.at("tree"), tree.root, Label{}, tree);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed tree document: ") + e.what());
  }
  return tree;
}

}  // namespace krtree::cli
