#pragma once

// Exact integer geometry of single-bend grid paths. A path is stored as its
// corner plus the two tips; the horizontal part runs along the corner's row
// and the vertical part along the corner's column. Grid edges have unit
// length and every public coordinate is an integer.

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "b1grid/graph.hpp"

namespace b1grid {

using Coord = std::int64_t;

struct GridPoint {
  Coord x = 0;
  Coord y = 0;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Bend shape named after the corner position in the path's bounding box.
//   LL: arms right and up     UL: arms right and down
//   LR: arms left and up      UR: arms left and down
// Paths with a zero-length part (|, -, a single point) are LL.
enum class PathType { LL, UL, LR, UR };

std::string_view to_string(PathType t);

struct Interval {
  Coord lo = 0;
  Coord hi = 0;

  Coord length() const { return hi - lo; }
  bool contains(Coord v) const { return lo <= v && v <= hi; }
  bool strictly_contains(Coord v) const { return lo < v && v < hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct GridPath {
  PathId id = 0;
  GridPoint corner;
  GridPoint h_tip;
  GridPoint v_tip;

  static GridPath make(PathId id, Coord cx, Coord cy, Coord hx, Coord vy) {
    return GridPath{id, {cx, cy}, {hx, cy}, {cx, vy}};
  }

  // h_tip on the corner's row and v_tip on the corner's column.
  bool valid() const { return h_tip.y == corner.y && v_tip.x == corner.x; }

  Interval h_span() const;  // x-range of the horizontal part
  Interval v_span() const;  // y-range of the vertical part
  bool has_h_arm() const { return h_tip.x != corner.x; }
  bool has_v_arm() const { return v_tip.y != corner.y; }

  // Closed point-set test.
  bool contains(GridPoint p) const;

  friend bool operator==(const GridPath&, const GridPath&) = default;
};

enum class Mode { VPG, EPG };

std::string_view to_string(Mode m);

struct Representation {
  Mode mode = Mode::VPG;
  std::vector<GridPath> paths;
  std::optional<Coord> vline;  // x = vline
  std::optional<Coord> hline;  // y = hline

  const GridPath& path(PathId id) const;  // throws UnknownId

  friend bool operator==(const Representation&, const Representation&) = default;
};

// Throws DuplicateId on repeated ids and PreconditionError on a malformed path.
void validate(const Representation& rep);

PathType classify_type(const GridPath& path);

// Mirror through the y-axis (flip_x) and/or the x-axis (flip_y).
GridPath reflect(const GridPath& path, bool flip_x, bool flip_y);

// A path with a zero-length part re-anchored so its corner is the lower/left
// endpoint. Point set and id are unchanged; bent paths are returned as-is.
GridPath normalized(const GridPath& path);

// VPG adjacency: a proper transversal crossing (interior to both segments)
// or a collinear overlap covering at least two grid nodes. Touching at an
// endpoint, a corner lying on the other path, and T-junctions do not count.
bool vpg_adjacent(const GridPath& a, const GridPath& b);

// EPG adjacency: the paths share at least one unit grid edge.
bool epg_adjacent(const GridPath& a, const GridPath& b);

struct Crossings {
  std::vector<GridPoint> points;  // proper crossings, lexicographic order
  bool overlap = false;           // some collinear parts share >= 2 nodes
};

Crossings crossing_points(const GridPath& a, const GridPath& b);

// True if a corner or tip of one path lies on the other path. These contacts
// are the places where the VPG touch rule and the cross construction used for
// dominating sets can disagree.
bool has_touch_contact(const GridPath& a, const GridPath& b);

bool weak_general_position(const Representation& rep);

// Pairwise O(n^2) scan with the mode's adjacency predicate. Throws
// GeneralPositionViolation in EPG mode when two corners coincide.
IntersectionGraph build_graph(const Representation& rep);

// Throws WrongMode unless the representation is VPG.
bool is_one_string(const Representation& rep);

struct NeighborSplit {
  IdSet h_neighbors;
  IdSet v_neighbors;
};

// Neighbours sharing an edge with the horizontal (resp. vertical) part of `id`.
NeighborSplit split_neighbors(const Representation& rep, PathId id);

}  // namespace b1grid
