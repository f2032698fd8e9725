#pragma once

// Reduction from vertex cover on graphs of maximum degree 3 to dominating
// set on EPG representations. Each input vertex i becomes five paths: a
// horizontal and a vertical long path (Gh, Gv), a big connector C touching
// both, and two small connectors S1, S2. Each input edge (i, j) becomes two
// short paths E1, E2, each adjacent to exactly Gv(i) and Gh(j). The optimum
// dominating set then has size n plus the minimum vertex cover.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "b1grid/geometry.hpp"
#include "b1grid/graph.hpp"

namespace b1grid {

enum class RoleKind { Gh, Gv, C, S1, S2, E1, E2 };

struct Role {
  RoleKind kind = RoleKind::C;
  std::size_t i = 0;  // vertex, or smaller endpoint for E1/E2
  std::size_t j = 0;  // larger endpoint for E1/E2, unused otherwise

  friend bool operator==(const Role&, const Role&) = default;
};

// "Gh(3)", "E1(0,2)".
std::string to_token(const Role& role);
std::optional<Role> parse_role(const std::string& token);

struct ReductionInstance {
  Representation rep;
  std::map<PathId, Role> labels;

  friend bool operator==(const ReductionInstance&, const ReductionInstance&) = default;
};

// Path ids used by both the gadget graph and the emitted instance: vertex i
// owns 5i..5i+4 in the order Gh, Gv, C, S1, S2; edge number e (in sorted
// edge order) owns 5n+2e (E1) and 5n+2e+1 (E2).
PathId gadget_id(const SimpleGraph& g, const Role& role);

// Throws DegreeTooHigh, or PreconditionError for a malformed graph.
IntersectionGraph gadget_graph(const SimpleGraph& g);

// Throws DegreeTooHigh, and LayoutFailure if the emitted paths do not realize
// gadget_graph(g).
ReductionInstance reduce_vc_to_mds(const SimpleGraph& g);

// Small connectors become their big connector; a lone E path becomes Gv(i),
// both E paths of an edge become Gv(i) and Gh(j). Returns the vertices whose
// Gh or Gv survives, ascending. Throws NotDominating.
std::vector<std::size_t> map_back(const IdSet& d, const ReductionInstance& inst, const SimpleGraph& g);

// Largest 5n + 2m for which verify_reduction runs the exact solvers.
inline constexpr std::size_t kVerifyExactLimit = 24;

// Checks label isomorphism with the gadget graph, bend types, and weak
// general position. On small inputs also checks that the optimum equals
// n + minimum cover, and (for graphs without isolated vertices) that it is
// at most 5 times the minimum cover. On failure the reason goes to
// `diagnostic`.
bool verify_reduction(const ReductionInstance& inst, const SimpleGraph& g, std::string* diagnostic = nullptr);

}  // namespace b1grid
