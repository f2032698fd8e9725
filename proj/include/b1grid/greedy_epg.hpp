#pragma once

// Greedy dominating set for EPG representations: scan paths bottom to top,
// then left to right, by corner; take every path not yet dominated and
// discard its closed neighbourhood. Always dominating. Within a factor 2 of
// optimal when every path crosses a fixed vertical and horizontal line, and
// 3 when every path crosses a vertical line and no vertical part contains an
// edge-sharing neighbour's.
//
// "Crosses" is strict: a path crosses x = ell when its horizontal part
// contains the unit edge ending at ell from the left, i.e. cx < ell <= hx
// for an LL path. Likewise cy < L <= vy for the horizontal line.

#include <optional>
#include <vector>

#include "b1grid/geometry.hpp"

namespace b1grid {

// Sorted by corner y, then corner x. Throws GeneralPositionViolation.
std::vector<GridPath> order_paths(const std::vector<GridPath>& paths);

// Throws WrongMode and GeneralPositionViolation.
IdSet greedy_line_mds(const Representation& rep);

// Lowest integer x met by every horizontal part (closed intervals), or
// nullopt when they share none or there are no paths.
std::optional<Coord> detect_vertical_line(const Representation& rep);

bool crosses_vertical(const GridPath& p, Coord ell);
bool crosses_horizontal(const GridPath& p, Coord L);

// Every path LL, crossing x = ell and y = L; the corner then lies strictly
// below and left of the lines' intersection.
bool is_double_crossing(const Representation& rep, Coord L, Coord ell);

// Every path LL and crossing x = ell.
bool is_vertical_crossing(const Representation& rep, Coord ell);

// No vertical part contains the vertical part of a path it shares a vertical
// edge with.
bool check_non_containment(const Representation& rep);

}  // namespace b1grid
