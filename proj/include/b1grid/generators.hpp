#pragma once

// Seeded instance generators. Output depends only on the arguments.

#include <cstddef>
#include <cstdint>

#include "b1grid/geometry.hpp"
#include "b1grid/graph.hpp"

namespace b1grid {

// Paths of all four types whose corner and tip coordinates are pairwise
// distinct on each axis, so no two paths touch or overlap. With one_string
// set, a path that would cross an earlier one twice is redrawn. Throws
// GenerationExhausted.
Representation gen_vpg(std::size_t n, std::uint64_t seed, bool one_string);

// LL paths that all cross the vertical line and the horizontal line stored
// in the representation, corners in weak general position.
Representation gen_epg_double_crossing(std::size_t n, std::uint64_t seed);

// LL paths that all cross the stored vertical line, in weak general position
// and with no vertical part containing an edge-sharing neighbour's.
Representation gen_epg_vertical_crossing(std::size_t n, std::uint64_t seed);

// Simple graph with exactly m edges and maximum degree 3. Throws Infeasible
// when no such graph exists and GenerationExhausted when sampling gives up.
SimpleGraph gen_degree3_graph(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace b1grid
