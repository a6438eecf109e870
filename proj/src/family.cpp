#include "zir/family.hpp"

#include <cctype>
#include <map>
#include <functional>

#include "zir/errors.hpp"
#include "zir/graph6.hpp"

namespace zir {

namespace {

void require(bool ok, const std::string& constraint) {
  if (!ok) throw InvalidSpec("invalid family parameter: requires " + constraint);
}

void require_order(long n) {
  if (n > kMaxOrder) throw SizeLimitError("family instance order " + std::to_string(n) + " exceeds 64");
}

std::vector<std::string> numbered(const std::string& stem, int count, int first = 1) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(stem + std::to_string(first + i));
  return out;
}

}  // namespace

Graph empty_graph(int n) {
  require(n >= 1, "n >= 1 for empty");
  require_order(n);
  return Graph::from_edges(n, {});
}

Graph complete_graph(int n) {
  require(n >= 1, "n >= 1 for complete");
  require_order(n);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1, "n >= 1 for path");
  require_order(n);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "n >= 3 for cycle");
  require_order(n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(int q, int p) {
  require(q >= 1 && p >= 1, "q >= 1 and p >= 1 for complete_bipartite");
  require_order(static_cast<long>(q) + p);
  std::vector<Edge> edges;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < p; ++j) edges.emplace_back(i, q + j);
  auto labels = numbered("u", q);
  for (auto& w : numbered("w", p)) labels.push_back(w);
  return Graph::from_edges(q + p, edges, labels);
}

Graph star_graph(int p) {
  require(p >= 1, "p >= 1 for star");
  require_order(p + 1L);
  std::vector<Edge> edges;
  for (int j = 1; j <= p; ++j) edges.emplace_back(0, j);
  return Graph::from_edges(p + 1, edges);
}

Graph friendship_graph(int k) {
  require(k >= 2, "k >= 2 for friendship");
  require_order(2L * k + 1);
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(0, 2 * i - 1);
    edges.emplace_back(0, 2 * i);
    edges.emplace_back(2 * i - 1, 2 * i);
  }
  return Graph::from_edges(2 * k + 1, edges, numbered("v", 2 * k + 1, 0));
}

Graph wheel_graph(int r) {
  require(r >= 3, "r >= 3 for wheel");
  require_order(r + 1L);
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i) {
    edges.emplace_back(i, (i + 1) % r);
    edges.emplace_back(i, r);
  }
  return Graph::from_edges(r + 1, edges);
}

Graph necklace_graph(int k) {
  require(k >= 2, "k >= 2 for necklace");
  require_order(4L * k);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    const int a = 4 * i, b = a + 1, c = a + 2, d = a + 3;
    edges.insert(edges.end(), {{a, b}, {a, d}, {b, c}, {b, d}, {c, d}});
    edges.emplace_back(c, 4 * ((i + 1) % k));
    for (const char* stem : {"a", "b", "c", "d"}) labels.push_back(stem + std::to_string(i + 1));
  }
  return Graph::from_edges(4 * k, edges, labels);
}

Graph h_rs_graph(int r, int s) {
  require(r >= 2, "r >= 2 for h_rs");
  require(s >= 3 && s % 2 == 1, "odd s >= 3 for h_rs");
  require_order(1L + r + s);
  const int u = 0;
  const int y_s = r + s;
  std::vector<Edge> edges;
  for (int j = 1; j <= r; ++j) {
    edges.emplace_back(u, j);
    edges.emplace_back(j, y_s);
  }
  for (int i = r + 1; i < y_s; ++i) edges.emplace_back(i, i + 1);
  std::vector<std::string> labels{"u"};
  for (auto& w : numbered("w", r)) labels.push_back(w);
  for (auto& y : numbered("y", s)) labels.push_back(y);
  return Graph::from_edges(1 + r + s, edges, labels);
}

Graph h_chain_graph(int k) {
  require(k >= 3, "k >= 3 for h_chain");
  require_order(5L * k);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    const int base = 5 * i;
    for (int j = 0; j < 5; ++j) {
      edges.emplace_back(base + j, base + (j + 1) % 5);
      labels.push_back("v" + std::to_string(i + 1) + "," + std::to_string(j + 1));
    }
    edges.emplace_back(base + 2, 5 * ((i + 1) % k));
  }
  return Graph::from_edges(5 * k, edges, labels);
}

namespace {

// Edge lists below use the 1-based vertex names of the drawings.
Graph from_one_based(int n, std::initializer_list<Edge> one_based, std::vector<std::string> labels = {}) {
  std::vector<Edge> edges;
  for (auto [u, v] : one_based) edges.emplace_back(u - 1, v - 1);
  if (labels.empty()) labels = numbered("v", n);
  return Graph::from_edges(n, edges, std::move(labels));
}

}  // namespace

Graph fig3_graph() {
  return from_one_based(6, {{4, 3}, {3, 1}, {1, 2}, {2, 4}, {4, 5}, {5, 6}, {6, 4}});
}

Graph fig5_graph() {
  // u1 u2 u3 x1 y1 x2 y2
  std::vector<Edge> edges;
  for (int u = 0; u < 3; ++u)
    for (int w = 3; w < 7; ++w) edges.emplace_back(u, w);
  edges.emplace_back(3, 4);
  edges.emplace_back(5, 6);
  return Graph::from_edges(7, edges, {"u1", "u2", "u3", "x1", "y1", "x2", "y2"});
}

Graph fig6_graph() {
  return from_one_based(8, {{1, 2}, {2, 3}, {3, 4}, {4, 6}, {6, 5}, {5, 1}, {1, 7}, {7, 8}, {8, 4},
                            {2, 5}, {5, 3}, {3, 6}, {6, 2}, {3, 7}, {7, 6}, {2, 8}, {8, 5}});
}

Graph fig7_graph() {
  return from_one_based(7, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}});
}

Graph pentasun_graph() { return corona(cycle_graph(5), empty_graph(1)); }

// ---------------------------------------------------------------------------

FamilySpec FamilySpec::named(std::string family, std::vector<int> params) {
  FamilySpec s;
  s.kind = Kind::Named;
  s.family = std::move(family);
  s.params = std::move(params);
  return s;
}

FamilySpec FamilySpec::product(ProductOp op, std::vector<FamilySpec> operands) {
  FamilySpec s;
  s.kind = Kind::Product;
  s.op = op;
  s.operands = std::move(operands);
  return s;
}

FamilySpec FamilySpec::literal(std::string graph6) {
  FamilySpec s;
  s.kind = Kind::Literal;
  s.graph6 = std::move(graph6);
  return s;
}

namespace {

const char* op_name(ProductOp op) {
  switch (op) {
    case ProductOp::Union: return "union";
    case ProductOp::Join: return "join";
    case ProductOp::Corona: return "corona";
  }
  return "?";
}

struct FamilyInfo {
  int arity;
  std::function<Graph(const std::vector<int>&)> make;
};

const std::map<std::string, FamilyInfo>& registry() {
  static const std::map<std::string, FamilyInfo> table{
      {"empty", {1, [](auto& p) { return empty_graph(p[0]); }}},
      {"complete", {1, [](auto& p) { return complete_graph(p[0]); }}},
      {"path", {1, [](auto& p) { return path_graph(p[0]); }}},
      {"cycle", {1, [](auto& p) { return cycle_graph(p[0]); }}},
      {"complete_bipartite", {2, [](auto& p) { return complete_bipartite_graph(p[0], p[1]); }}},
      {"star", {1, [](auto& p) { return star_graph(p[0]); }}},
      {"friendship", {1, [](auto& p) { return friendship_graph(p[0]); }}},
      {"wheel", {1, [](auto& p) { return wheel_graph(p[0]); }}},
      {"necklace", {1, [](auto& p) { return necklace_graph(p[0]); }}},
      {"h_rs", {2, [](auto& p) { return h_rs_graph(p[0], p[1]); }}},
      {"h_chain", {1, [](auto& p) { return h_chain_graph(p[0]); }}},
      {"fig3", {0, [](auto&) { return fig3_graph(); }}},
      {"fig5", {0, [](auto&) { return fig5_graph(); }}},
      {"fig6", {0, [](auto&) { return fig6_graph(); }}},
      {"fig7", {0, [](auto&) { return fig7_graph(); }}},
      {"pentasun", {0, [](auto&) { return pentasun_graph(); }}},
  };
  return table;
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("family expression: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a family name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ - start == 1 && text_[start] == '-')) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  FamilySpec expr() {
    const std::string name = identifier();
    if (name == "union" || name == "join" || name == "corona") {
      const ProductOp op = name == "union" ? ProductOp::Union
                           : name == "join" ? ProductOp::Join
                                            : ProductOp::Corona;
      if (!eat('(')) fail("expected '(' after " + name);
      std::vector<FamilySpec> operands{expr()};
      while (eat(',')) operands.push_back(expr());
      if (!eat(')')) fail("expected ')'");
      if (operands.size() < 2) fail(name + " needs at least two operands");
      return FamilySpec::product(op, std::move(operands));
    }
    if (name == "graph6") {
      if (!eat(':')) fail("expected ':' after graph6");
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] >= 63 && text_[pos_] <= 126) ++pos_;
      if (start == pos_) fail("empty graph6 literal");
      return FamilySpec::literal(std::string(text_.substr(start, pos_ - start)));
    }
    const auto& reg = registry();
    const auto it = reg.find(name);
    if (it == reg.end()) throw InvalidSpec("unknown family '" + name + "'");
    std::vector<int> params;
    if (eat(':')) {
      params.push_back(integer());
      while (true) {
        // A comma followed by a digit continues the parameter list; otherwise
        // it separates product operands.
        const std::size_t save = pos_;
        if (!eat(',')) break;
        skip_space();
        if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
          params.push_back(integer());
        } else {
          pos_ = save;
          break;
        }
      }
    }
    if (static_cast<int>(params.size()) != it->second.arity) {
      throw InvalidSpec("family '" + name + "' takes " + std::to_string(it->second.arity) +
                        " parameter(s), got " + std::to_string(params.size()));
    }
    return FamilySpec::named(name, std::move(params));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string FamilySpec::to_string() const {
  switch (kind) {
    case Kind::Named: {
      std::string out = family;
      for (std::size_t i = 0; i < params.size(); ++i) {
        out += (i == 0 ? ':' : ',');
        out += std::to_string(params[i]);
      }
      return out;
    }
    case Kind::Literal:
      return "graph6:" + graph6;
    case Kind::Product: {
      std::string out = std::string(op_name(op)) + "(";
      for (std::size_t i = 0; i < operands.size(); ++i) {
        if (i > 0) out += ',';
        out += operands[i].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

FamilySpec parse_family(std::string_view text) { return SpecParser(text).parse(); }

Graph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::Literal:
      return parse_graph6(spec.graph6);
    case FamilySpec::Kind::Named: {
      const auto& reg = registry();
      const auto it = reg.find(spec.family);
      if (it == reg.end()) throw InvalidSpec("unknown family '" + spec.family + "'");
      if (static_cast<int>(spec.params.size()) != it->second.arity) {
        throw InvalidSpec("family '" + spec.family + "' has wrong parameter count");
      }
      return it->second.make(spec.params);
    }
    case FamilySpec::Kind::Product: {
      if (spec.operands.size() < 2) throw InvalidSpec("product needs at least two operands");
      Graph acc = generate(spec.operands[0]);
      for (std::size_t i = 1; i < spec.operands.size(); ++i) {
        const Graph rhs = generate(spec.operands[i]);
        switch (spec.op) {
          case ProductOp::Union: acc = disjoint_union(acc, rhs); break;
          case ProductOp::Join: acc = join(acc, rhs); break;
          case ProductOp::Corona: acc = corona(acc, rhs); break;
        }
      }
      return acc;
    }
  }
  throw InvalidSpec("malformed family spec");
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [name, info] : registry()) out.push_back(name);
  return out;
}

}  // namespace zir
