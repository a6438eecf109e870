#pragma once

// Brute-force reference implementations, written straight from the
// definitions over 32-bit masks. Nothing here calls the library's solvers;
// only the adjacency matrix is read from zir::Graph.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "zir/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

struct Brute {
  int n = 0;
  std::vector<Mask> nbr;

  explicit Brute(const zir::Graph& g) : n(g.order()) {
    if (n > 16) throw std::invalid_argument("oracle limited to 16 vertices");
    nbr.assign(n, 0);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && g.has_edge(u, v)) nbr[u] |= Mask{1} << v;
      }
    }
  }

  Mask all() const { return (Mask{1} << n) - 1; }
  bool in(Mask s, int v) const { return (s >> v) & 1U; }

  /// Apply the color-change rule until nothing changes.
  Mask color(Mask blue) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int u = 0; u < n; ++u) {
        if (!in(blue, u)) continue;
        const Mask white = nbr[u] & ~blue;
        if (popcount(white) == 1) {
          blue |= white;
          changed = true;
        }
      }
    }
    return blue;
  }

  bool forces_all(Mask s) const { return color(s) == all(); }

  bool fort(Mask f) const {
    if (f == 0) return false;
    for (int v = 0; v < n; ++v) {
      if (!in(f, v) && popcount(nbr[v] & f) == 1) return false;
    }
    return true;
  }

  std::vector<Mask> forts() const {
    std::vector<Mask> out;
    for (Mask f = 1; f <= all(); ++f) {
      if (fort(f)) out.push_back(f);
    }
    return out;
  }

  std::vector<Mask> minimal_forts() const {
    const auto fs = forts();
    std::vector<Mask> out;
    for (Mask f : fs) {
      bool minimal = true;
      for (Mask g : fs) {
        if (g != f && (g & ~f) == 0) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(f);
    }
    return out;
  }

  bool dominating(Mask d, int k) const {
    for (int v = 0; v < n; ++v) {
      if (!in(d, v) && popcount(nbr[v] & d) < k) return false;
    }
    return true;
  }

  bool independent(Mask s) const {
    for (int v = 0; v < n; ++v) {
      if (in(s, v) && (nbr[v] & s)) return false;
    }
    return true;
  }

  Mask closed_nbhd(Mask s) const {
    Mask out = s;
    for (int v = 0; v < n; ++v) {
      if (in(s, v)) out |= nbr[v];
    }
    return out;
  }
};

/// Every fort-derived quantity for one graph, from one pass over all subsets.
struct Tables {
  const Brute& b;
  std::vector<Mask> fort_list;
  std::vector<char> zir;      // every member owns a private fort
  std::vector<char> maximal;  // zir and no strict superset is zir

  explicit Tables(const Brute& brute) : b(brute), fort_list(brute.forts()) {
    const Mask full = b.all();
    zir.assign(std::size_t{full} + 1, 0);
    maximal.assign(std::size_t{full} + 1, 0);
    for (Mask s = 0; s <= full; ++s) {
      bool ok = true;
      for (int x = 0; x < b.n && ok; ++x) {
        if (b.in(s, x)) ok = private_fort(s, x);
      }
      zir[s] = ok;
    }
    for (Mask s = 0; s <= full; ++s) {
      if (!zir[s]) continue;
      bool top = true;
      const Mask rest = full & ~s;
      for (Mask add = rest; add != 0 && top; add = (add - 1) & rest) {
        if (zir[s | add]) top = false;
      }
      maximal[s] = top;
    }
  }

  bool private_fort(Mask s, int x) const {
    const Mask want = Mask{1} << x;
    for (Mask f : fort_list) {
      if ((f & s) == want) return true;
    }
    return false;
  }
};

struct Values {
  int zir = 0, Z = 0, Zbar = 0, ZIR = 0;
  int gamma = 0, gamma2 = 0, alpha = 0, gammaP = 0;
};

inline Values values(const zir::Graph& g) {
  const Brute b(g);
  const Tables t(b);
  const Mask full = b.all();
  Values v;
  v.zir = b.n + 1;
  v.Z = b.n + 1;
  v.gamma = v.gamma2 = v.gammaP = b.n + 1;
  for (Mask s = 0; s <= full; ++s) {
    const int k = popcount(s);
    if (t.maximal[s]) {
      v.zir = std::min(v.zir, k);
      v.ZIR = std::max(v.ZIR, k);
    }
    if (b.forces_all(s)) {
      v.Z = std::min(v.Z, k);
      bool minimal = true;
      for (int x = 0; x < b.n && minimal; ++x) {
        if (b.in(s, x) && b.forces_all(s & ~(Mask{1} << x))) minimal = false;
      }
      if (minimal) v.Zbar = std::max(v.Zbar, k);
    }
    if (b.dominating(s, 1)) v.gamma = std::min(v.gamma, k);
    if (b.dominating(s, 2)) v.gamma2 = std::min(v.gamma2, k);
    if (b.independent(s)) v.alpha = std::max(v.alpha, k);
    if (b.color(b.closed_nbhd(s)) == full) v.gammaP = std::min(v.gammaP, k);
  }
  return v;
}

/// Erdos-Renyi graph with edge probability p.
inline zir::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<zir::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return zir::Graph::from_edges(n, edges);
}

}  // namespace oracle
