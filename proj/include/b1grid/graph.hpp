#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace b1grid {

using PathId = std::int64_t;
using IdSet = std::vector<PathId>;  // kept sorted and duplicate-free

// Abstract graph derived from a representation. Vertex k stands for path
// ids[k]; ids are ascending so the graph does not depend on input order.
// The stored relation is irreflexive; closed neighbourhoods are formed on
// demand.
struct IntersectionGraph {
  std::vector<PathId> ids;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t size() const { return ids.size(); }
  std::size_t edge_count() const;
  bool has_edge(std::size_t u, std::size_t v) const;
  std::optional<std::size_t> index_of(PathId id) const;
  // Throws UnknownId.
  std::size_t require_index(PathId id) const;

  std::vector<std::size_t> indices_of(const IdSet& set) const;
  IdSet ids_of(const std::vector<std::size_t>& indices) const;

  // Plain graph on vertices 0..n-1 whose ids equal the indices.
  static IntersectionGraph from_edges(
      std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  friend bool operator==(const IntersectionGraph&, const IntersectionGraph&) = default;
};

IdSet normalize(IdSet set);

bool is_independent(const IntersectionGraph& g, const IdSet& set);
bool is_dominating(const IntersectionGraph& g, const IdSet& set);
// Vertices (as ids) not dominated by `set`.
IdSet undominated(const IntersectionGraph& g, const IdSet& set);
IntersectionGraph induced_subgraph(const IntersectionGraph& g, const std::vector<std::size_t>& keep);

// Input graph for the vertex-cover reduction.
struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j

  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const;
  // No self-loops, no duplicates, endpoints in range, i < j.
  bool well_formed() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

bool is_vertex_cover(const SimpleGraph& g, const std::vector<std::size_t>& cover);

}  // namespace b1grid
