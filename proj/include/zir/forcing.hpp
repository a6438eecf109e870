#pragma once

#include <optional>
#include <vector>

#include "zir/graph.hpp"

namespace zir {

/// Order caps for the exponential searches. Exceeding one raises BudgetExceeded
/// rather than running for hours.
struct SearchLimits {
  int max_order = 24;
};

inline constexpr int kFortEnumerationMaxOrder = 20;

struct ForceStep {
  int forcer;
  int forced;
  int step;
  bool operator==(const ForceStep&) const = default;
};

/// A nonempty set F such that every vertex outside F has 0 or at least 2
/// neighbors in F. Construct through make_fort, which checks.
class FortSet {
 public:
  VertexSet members() const { return members_; }
  bool operator==(const FortSet&) const = default;

 private:
  explicit FortSet(VertexSet m) : members_(m) {}
  VertexSet members_;
  friend std::optional<FortSet> make_fort(const Graph&, VertexSet);
};

/// Final coloring of `blue` under the color-change rule.
VertexSet closure(const Graph& g, VertexSet blue);
/// Same, recording each force. Scans forcers in ascending index order, one
/// force per scan position, so the chronicle is reproducible.
VertexSet closure(const Graph& g, VertexSet blue, std::vector<ForceStep>& chronicle);

bool is_zero_forcing_set(const Graph& g, VertexSet b);
bool is_fort(const Graph& g, VertexSet f);
std::optional<FortSet> make_fort(const Graph& g, VertexSet f);

/// V \ closure(a) if nonempty. This is a fort, and it contains every fort
/// disjoint from a.
std::optional<FortSet> max_fort_avoiding(const Graph& g, VertexSet a);

/// Largest fort contained in `region` (the union of all such forts), if any.
std::optional<FortSet> max_fort_within(const Graph& g, VertexSet region);

struct SetValue {
  int value = 0;
  VertexSet witness;
  bool operator==(const SetValue&) const = default;
};

/// Z(g). The witness is the first zero forcing set in (size, lexicographic) order.
SetValue zero_forcing_number(const Graph& g, SearchLimits limits = {});

/// b is a zero forcing set and no b \ {x} is.
bool is_minimal_zfs(const Graph& g, VertexSet b);

/// Maximum size of a minimal zero forcing set. The witness is lexicographically
/// least among minimal zero forcing sets of that size.
SetValue upper_zero_forcing_number(const Graph& g, SearchLimits limits = {});

/// All inclusion-minimal forts, ascending by (size, lexicographic). Throws
/// BudgetExceeded above kFortEnumerationMaxOrder vertices.
std::vector<FortSet> enumerate_minimal_forts(const Graph& g);

/// v lies in no minimal fort (equivalently, in no minimal zero forcing set).
bool is_z_irrelevant(const Graph& g, int v);

}  // namespace zir
