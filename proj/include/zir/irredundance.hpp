#pragma once

#include <optional>
#include <vector>

#include "zir/forcing.hpp"

namespace zir {

/// A fort whose intersection with `relative_to` is exactly {owner}.
struct PrivateFortCertificate {
  int owner = -1;
  VertexSet fort;
  VertexSet relative_to;
  bool operator==(const PrivateFortCertificate&) const = default;
};

/// A ZIr-set with one certificate per member, in ascending member order.
struct ZirWitness {
  VertexSet set;
  std::vector<PrivateFortCertificate> certificates;
  bool maximal = false;
  bool operator==(const ZirWitness&) const = default;
};

struct ZirValue {
  int value = 0;
  ZirWitness witness;
};

/// Private fort of x relative to s, if one exists. Returns the largest one,
/// V \ closure(s \ {x}): every fort missing s \ {x} lies inside it, so a
/// private fort exists iff x is in it. Throws PreconditionError if x is not
/// in s.
std::optional<PrivateFortCertificate> has_private_fort(const Graph& g, VertexSet s, int x);

/// An inclusion-minimal private fort of x relative to s.
std::optional<FortSet> minimal_private_fort(const Graph& g, VertexSet s, int x);

bool is_zir_set(const Graph& g, VertexSet s);
bool is_maximal_zir_set(const Graph& g, VertexSet s);

/// Certificates for every member, or nullopt if s is not a ZIr-set.
std::optional<ZirWitness> certify(const Graph& g, VertexSet s);

/// ZIR(g) by branch and bound over vertices in index order.
ZirValue upper_zir_number(const Graph& g, SearchLimits limits = {});

/// Largest ZIr-set using only vertices of `pool`.
ZirValue max_zir_set_within(const Graph& g, VertexSet pool, SearchLimits limits = {});

/// zir(g): the first maximal ZIr-set in (size, lexicographic) order.
ZirValue lower_zir_number(const Graph& g, SearchLimits limits = {});

/// Every ZIr-set of exactly `size` members, lexicographic order.
std::vector<VertexSet> zir_sets_of_size(const Graph& g, int size, SearchLimits limits = {});

/// The largest fort disjoint from the maximal ZIr-set s, present iff s is not
/// a zero forcing set. Throws PreconditionError if s is not a maximal ZIr-set.
std::optional<FortSet> abandons_fort(const Graph& g, VertexSet s);

struct AbandonResult {
  bool abandons = false;
  std::optional<ZirWitness> upper_set;
  std::optional<FortSet> fort;
};

/// Whether some upper ZIR set is not a zero forcing set. The witness is the
/// first such set in lexicographic order.
AbandonResult graph_abandons_fort(const Graph& g, SearchLimits limits = {});

}  // namespace zir
