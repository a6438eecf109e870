#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zir/graph.hpp"

namespace zir {

// Generators. Vertex numbering is fixed so witnesses in regression output are
// stable:
//   path/cycle        v0..v{n-1} in path/cycle order
//   complete_bipartite  the q-side first, then the p-side
//   star p            center 0, leaves 1..p
//   friendship k      center 0, triangles {0, 2i-1, 2i}
//   wheel r           rim 0..r-1 in cycle order, hub r  (order r+1)
//   necklace k        block i is a_i, b_i, c_i, d_i at 4i..4i+3; a_i c_i is
//                     the missing diamond edge, c_i a_{i+1} links blocks
//   h_rs r s          u = 0, w_1..w_r = 1..r, y_1..y_s = r+1..r+s; the K_{2,r}
//                     side {u, y_s} is attached to the path y_1..y_s at y_s
//   h_chain k         5-cycle i is v_{i,1..5} at 5i..5i+4, linked v_{i,3} v_{i+1,1}
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite_graph(int q, int p);
Graph star_graph(int p);
Graph friendship_graph(int k);
Graph wheel_graph(int r);
Graph necklace_graph(int k);
Graph h_rs_graph(int r, int s);
Graph h_chain_graph(int k);

/// Figure graphs, hard-coded edge lists, v1.. mapped to 0..
Graph fig3_graph();     ///< 6 vertices; its upper ZIR set {v1,v4,v5} abandons {v2,v3}
Graph fig5_graph();     ///< K_{3,4} plus x1y1, x2y2; order u1 u2 u3 x1 y1 x2 y2
Graph fig6_graph();     ///< 8 vertices, 17 edges, lower ZIr number 4
Graph fig7_graph();     ///< 7-vertex tree with a lower zir set that is not power dominating
Graph pentasun_graph(); ///< C_5 with a pendant at each cycle vertex

enum class ProductOp { Union, Join, Corona };

/// Symbolic graph description parsed from the mini-language
///
///   expr    := name [':' int {',' int}]
///            | 'graph6:' <graph6 string>
///            | ('union' | 'join' | 'corona') '(' expr ',' expr {',' expr} ')'
///
/// e.g. `corona(cycle:5,empty:1)`. Products with more than two operands fold
/// left.
struct FamilySpec {
  enum class Kind { Named, Product, Literal };

  Kind kind = Kind::Named;
  std::string family;       // Named
  std::vector<int> params;  // Named
  ProductOp op = ProductOp::Union;
  std::vector<FamilySpec> operands;  // Product
  std::string graph6;                // Literal

  static FamilySpec named(std::string family, std::vector<int> params);
  static FamilySpec product(ProductOp op, std::vector<FamilySpec> operands);
  static FamilySpec literal(std::string graph6);

  bool is_named(std::string_view name) const { return kind == Kind::Named && family == name; }

  /// Canonical text; parse_family(to_string()) reproduces the spec.
  std::string to_string() const;
  bool operator==(const FamilySpec&) const = default;
};

/// Throws ParseError on grammar errors and InvalidSpec on unknown families or
/// wrong parameter counts.
FamilySpec parse_family(std::string_view text);

/// Throws InvalidSpec naming the violated constraint, SizeLimitError above 64
/// vertices.
Graph generate(const FamilySpec& spec);

std::vector<std::string> family_names();

}  // namespace zir
