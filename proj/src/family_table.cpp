#include <algorithm>
#include <thread>

#include "zir/verify.hpp"

namespace zir {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct Collector {
  std::vector<ExpectedValue> out;
  void add(Param p, int v, const std::string& source) { out.push_back({p, v, source}); }
  void all4(int zir, int z, int zbar, int upper, const std::string& source) {
    add(Param::zir, zir, source);
    add(Param::Z, z, source);
    add(Param::Zbar, zbar, source);
    add(Param::ZIR, upper, source);
  }
};

bool is_complete(const Graph& g) { return g.edge_count() == g.order() * (g.order() - 1) / 2; }

void named_values(const FamilySpec& s, Collector& c) {
  const auto& a = s.params;
  auto arg = [&](std::size_t i) { return i < a.size() ? a[i] : 0; };
  if (s.family == "empty") {
    const int n = arg(0);
    c.all4(n, n, n, n, "edgeless graph");
  } else if (s.family == "complete") {
    const int n = arg(0);
    if (n >= 2) {
      c.all4(n - 1, n - 1, n - 1, n - 1, "complete graph");
      c.add(Param::alpha, 1, "complete graph");
    }
  } else if (s.family == "complete_bipartite") {
    const int q = std::min(arg(0), arg(1)), p = std::max(arg(0), arg(1));
    if (q >= 1 && p >= 2) c.all4(q, q + p - 2, q + p - 2, q + p - 2, "complete bipartite graph");
  } else if (s.family == "star") {
    const int p = arg(0);
    if (p >= 2) c.all4(1, p - 1, p - 1, p - 1, "star");
  } else if (s.family == "path") {
    const int n = arg(0);
    c.add(Param::zir, 1, "path");
    c.add(Param::Z, 1, "path");
    if (n >= 4) c.add(Param::Zbar, 2, "path");
    if (n >= 5) c.add(Param::ZIR, (n - 1) / 2, "path, n >= 5");
    if (n == 2 || n == 3) c.add(Param::ZIR, 1, "short path");
    if (n == 4) c.add(Param::ZIR, 2, "path on 4 vertices (computational)");
  } else if (s.family == "cycle") {
    const int n = arg(0);
    if (n >= 4) c.all4(2, 2, 2, n / 2, "cycle");
  } else if (s.family == "friendship") {
    const int k = arg(0);
    c.all4(k + 1, k + 1, k + 1, k + 1, "friendship graph");
  } else if (s.family == "h_rs") {
    const int r = arg(0), t = arg(1);
    c.all4(2, r, t >= 5 ? r + 1 : r, r + (t - 1) / 2, "K_{2,r} with a pendant path");
  } else if (s.family == "necklace") {
    const int k = arg(0);
    c.add(Param::Z, k + 2, "necklace");
    c.add(Param::Zbar, k + 2, "necklace");
    c.add(Param::ZIR, 2 * k, "necklace");
  } else if (s.family == "h_chain") {
    const int k = arg(0);
    c.add(Param::Z, k + 2, "chain of 5-cycles");
    c.add(Param::ZIR, 2 * k, "chain of 5-cycles");
    c.add(Param::gamma2, 3 * k, "chain of 5-cycles");
  } else if (s.family == "wheel") {
    const int r = arg(0);
    if (r >= 5) {
      c.all4(3, 3, 3, r - ceil_div(r, 3), "wheel, rim >= 5");
    }
  } else if (s.family == "fig5") {
    c.add(Param::ZIR, 5, "K_{3,4} plus two matching edges");
    c.add(Param::gamma2, 3, "K_{3,4} plus two matching edges");
  } else if (s.family == "fig6") {
    c.add(Param::zir, 4, "8-vertex graph with zir 4");
  } else if (s.family == "fig7") {
    c.add(Param::zir, 2, "7-vertex tree");
    c.add(Param::gammaP, 2, "7-vertex tree");
  } else if (s.family == "pentasun") {
    c.add(Param::zir, 3, "pentasun");
  }
}

/// rK2 written as a union of r copies of complete:2.
int copies_of_k2(const FamilySpec& s) {
  if (s.is_named("complete") && s.params == std::vector<int>{2}) return 1;
  if (s.kind != FamilySpec::Kind::Product || s.op != ProductOp::Union) return 0;
  int total = 0;
  for (const auto& o : s.operands) {
    const int k = copies_of_k2(o);
    if (k == 0) return 0;
    total += k;
  }
  return total;
}

void product_values(const FamilySpec& s, Collector& c) {
  if (s.operands.size() != 2) return;
  const FamilySpec& left = s.operands[0];
  const FamilySpec& right = s.operands[1];
  if (s.op == ProductOp::Corona) {
    const Graph g = generate(left);
    const int ng = g.order();
    if (right.is_named("empty") && right.params == std::vector<int>{2} && left.is_named("cycle") &&
        left.params[0] >= 3) {
      const int r = left.params[0];
      c.add(Param::Z, r, "cycle corona 2K1");
      c.add(Param::Zbar, r, "cycle corona 2K1");
      c.add(Param::ZIR, r, "cycle corona 2K1");
      c.add(Param::alpha, 2 * r, "cycle corona 2K1");
    } else if (right.is_named("empty") && right.params == std::vector<int>{1}) {
      c.add(Param::ZIR, ng, "corona with K1");
    } else if (right.is_named("cycle") && right.params[0] >= 5) {
      const int r = right.params[0];
      c.add(Param::ZIR, ng * (r - ceil_div(r, 3)), "corona with a cycle");
    } else if (right.is_named("wheel") && right.params[0] >= 4) {
      c.add(Param::ZIR, ng * right.params[0], "corona with a wheel");
    }
    return;
  }
  if (s.op == ProductOp::Join) {
    for (int side = 0; side < 2; ++side) {
      const FamilySpec& h = side == 0 ? left : right;
      const FamilySpec& pair = side == 0 ? right : left;
      const bool two_vertices = (pair.is_named("empty") || pair.is_named("complete")) &&
                                pair.params == std::vector<int>{2};
      if (!two_vertices) continue;
      const Graph hg = generate(h);
      if (!is_complete(hg)) c.add(Param::ZIR, hg.order(), "graph joined with two vertices");
      const int r = copies_of_k2(h);
      if (pair.is_named("empty") && r >= 3) c.add(Param::Z, r + 2, "rK2 joined with 2K1");
      if (pair.is_named("complete") && !hg.has_isolated_vertex()) {
        c.add(Param::Z, zero_forcing_number(hg).value + 2, "graph joined with K2");
        c.add(Param::Zbar, upper_zero_forcing_number(hg).value + 2, "graph joined with K2");
      }
      return;
    }
    if (left.is_named("path") && right.is_named("path") && left.params[0] >= 7 && right.params[0] >= 7) {
      c.add(Param::ZIR, left.params[0] + right.params[0] - 4, "join of two long paths");
    }
  }
}

}  // namespace

std::vector<ExpectedValue> expected_values(const FamilySpec& spec) {
  Collector c;
  if (spec.kind == FamilySpec::Kind::Named) named_values(spec, c);
  if (spec.kind == FamilySpec::Kind::Product) product_values(spec, c);
  // One expected value per parameter; the first formula listed wins.
  std::vector<ExpectedValue> out;
  for (auto& e : c.out) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const ExpectedValue& o) { return o.param == e.param; });
    if (!seen) out.push_back(std::move(e));
  }
  return out;
}

bool FamilyTable::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.match; });
}

std::vector<FamilySpec> builtin_table_specs() {
  static const char* const kSpecs[] = {
      "empty:5",
      "complete:5",
      "complete_bipartite:2,3",
      "star:4",
      "path:4",
      "path:7",
      "cycle:6",
      "cycle:7",
      "friendship:2",
      "friendship:3",
      "h_rs:2,3",
      "h_rs:3,5",
      "necklace:3",
      "h_chain:3",
      "wheel:5",
      "wheel:7",
      "corona(cycle:4,empty:2)",
      "corona(cycle:4,empty:1)",
      "corona(complete:2,cycle:5)",
      "corona(path:2,wheel:4)",
      "join(union(complete:2,complete:2,complete:2),empty:2)",
      "join(path:4,empty:2)",
      "join(cycle:5,complete:2)",
      "join(path:7,path:7)",
      "fig5",
      "fig6",
      "fig7",
      "pentasun",
  };
  std::vector<FamilySpec> out;
  for (const char* s : kSpecs) out.push_back(parse_family(s));
  return out;
}

namespace {

std::vector<TableRow> table_rows(const FamilySpec& spec, int max_order, bool& unmatched) {
  const auto expected = expected_values(spec);
  unmatched = expected.empty();
  if (expected.empty()) return {};
  ProfileOptions options;
  options.params.clear();
  options.max_order = max_order;
  for (const auto& e : expected) options.params.push_back(e.param);
  const ParamProfile p = parameter_profile(spec, options);
  std::vector<TableRow> rows;
  for (const auto& e : expected) {
    TableRow row{spec.to_string(), p.n, e.param, e.value, p.value(e.param), e.source, false};
    row.match = row.computed && *row.computed == row.expected;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

FamilyTable family_table(std::span<const FamilySpec> specs, int threads, int max_order) {
  const std::size_t count = specs.size();
  std::vector<std::vector<TableRow>> per_spec(count);
  std::vector<char> unmatched(count, 0);
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  auto work = [&](int w) {
    for (std::size_t i = w; i < count; i += workers) {
      bool none = false;
      per_spec[i] = table_rows(specs[i], max_order, none);
      unmatched[i] = none;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  FamilyTable table;
  for (std::size_t i = 0; i < count; ++i) {
    if (unmatched[i]) table.unmatched.push_back(specs[i].to_string());
    for (auto& row : per_spec[i]) table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace zir
