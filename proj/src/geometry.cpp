#include "b1grid/geometry.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "b1grid/errors.hpp"

namespace b1grid {

namespace {

// One axis-parallel part of a path: horizontal parts sit on row `fixed` and
// span x; vertical parts sit on column `fixed` and span y.
struct Part {
  bool horizontal;
  Coord fixed;
  Interval span;
};

std::array<Part, 2> parts_of(const GridPath& p) {
  return {Part{true, p.corner.y, p.h_span()}, Part{false, p.corner.x, p.v_span()}};
}

Coord collinear_overlap(const Part& a, const Part& b) {
  if (a.horizontal != b.horizontal || a.fixed != b.fixed) return -1;
  return std::min(a.span.hi, b.span.hi) - std::max(a.span.lo, b.span.lo);
}

// Proper crossing point of two perpendicular parts, if any.
std::optional<GridPoint> proper_crossing(const Part& a, const Part& b) {
  if (a.horizontal == b.horizontal) return std::nullopt;
  const Part& h = a.horizontal ? a : b;
  const Part& v = a.horizontal ? b : a;
  if (h.span.strictly_contains(v.fixed) && v.span.strictly_contains(h.fixed))
    return GridPoint{v.fixed, h.fixed};
  return std::nullopt;
}

}  // namespace

std::string_view to_string(PathType t) {
  switch (t) {
    case PathType::LL: return "LL";
    case PathType::UL: return "UL";
    case PathType::LR: return "LR";
    case PathType::UR: return "UR";
  }
  return "?";
}

std::string_view to_string(Mode m) { return m == Mode::VPG ? "vpg" : "epg"; }

Interval GridPath::h_span() const {
  return {std::min(corner.x, h_tip.x), std::max(corner.x, h_tip.x)};
}

Interval GridPath::v_span() const {
  return {std::min(corner.y, v_tip.y), std::max(corner.y, v_tip.y)};
}

bool GridPath::contains(GridPoint p) const {
  return (p.y == corner.y && h_span().contains(p.x)) || (p.x == corner.x && v_span().contains(p.y));
}

const GridPath& Representation::path(PathId id) const {
  for (const auto& p : paths)
    if (p.id == id) return p;
  throw UnknownId("unknown path id " + std::to_string(id));
}

void validate(const Representation& rep) {
  std::set<PathId> seen;
  for (const auto& p : rep.paths) {
    if (!seen.insert(p.id).second) throw DuplicateId("duplicate path id " + std::to_string(p.id));
    if (!p.valid()) throw PreconditionError("path " + std::to_string(p.id) + " is not a single-bend grid path");
  }
}

PathType classify_type(const GridPath& path) {
  if (!path.has_h_arm() || !path.has_v_arm()) return PathType::LL;
  const bool right = path.h_tip.x > path.corner.x;
  const bool up = path.v_tip.y > path.corner.y;
  if (right) return up ? PathType::LL : PathType::UL;
  return up ? PathType::LR : PathType::UR;
}

GridPath reflect(const GridPath& path, bool flip_x, bool flip_y) {
  auto map = [&](GridPoint p) {
    return GridPoint{flip_x ? -p.x : p.x, flip_y ? -p.y : p.y};
  };
  return GridPath{path.id, map(path.corner), map(path.h_tip), map(path.v_tip)};
}

GridPath normalized(const GridPath& path) {
  if (path.has_h_arm() && path.has_v_arm()) return path;
  if (path.has_h_arm()) {
    const Interval s = path.h_span();
    return GridPath::make(path.id, s.lo, path.corner.y, s.hi, path.corner.y);
  }
  if (path.has_v_arm()) {
    const Interval s = path.v_span();
    return GridPath::make(path.id, path.corner.x, s.lo, path.corner.x, s.hi);
  }
  return path;
}

bool vpg_adjacent(const GridPath& a, const GridPath& b) {
  for (const Part& pa : parts_of(a))
    for (const Part& pb : parts_of(b)) {
      if (proper_crossing(pa, pb)) return true;
      if (collinear_overlap(pa, pb) >= 1) return true;
    }
  return false;
}

bool epg_adjacent(const GridPath& a, const GridPath& b) {
  for (const Part& pa : parts_of(a))
    for (const Part& pb : parts_of(b))
      if (collinear_overlap(pa, pb) >= 1) return true;
  return false;
}

Crossings crossing_points(const GridPath& a, const GridPath& b) {
  Crossings out;
  for (const Part& pa : parts_of(a))
    for (const Part& pb : parts_of(b)) {
      if (auto p = proper_crossing(pa, pb)) out.points.push_back(*p);
      if (collinear_overlap(pa, pb) >= 1) out.overlap = true;
    }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

bool has_touch_contact(const GridPath& a, const GridPath& b) {
  for (GridPoint p : {a.corner, a.h_tip, a.v_tip})
    if (b.contains(p)) return true;
  for (GridPoint p : {b.corner, b.h_tip, b.v_tip})
    if (a.contains(p)) return true;
  return false;
}

bool weak_general_position(const Representation& rep) {
  std::vector<GridPoint> corners;
  corners.reserve(rep.paths.size());
  for (const auto& p : rep.paths) corners.push_back(p.corner);
  std::sort(corners.begin(), corners.end());
  return std::adjacent_find(corners.begin(), corners.end()) == corners.end();
}

IntersectionGraph build_graph(const Representation& rep) {
  validate(rep);
  if (rep.mode == Mode::EPG && !weak_general_position(rep))
    throw GeneralPositionViolation("two EPG paths share a corner");

  std::vector<const GridPath*> order;
  order.reserve(rep.paths.size());
  for (const auto& p : rep.paths) order.push_back(&p);
  std::sort(order.begin(), order.end(), [](auto* l, auto* r) { return l->id < r->id; });

  IntersectionGraph g;
  g.ids.reserve(order.size());
  for (auto* p : order) g.ids.push_back(p->id);
  g.adjacency.assign(order.size(), {});

  const auto adjacent = rep.mode == Mode::VPG ? vpg_adjacent : epg_adjacent;
  for (std::size_t u = 0; u < order.size(); ++u)
    for (std::size_t v = u + 1; v < order.size(); ++v)
      if (adjacent(*order[u], *order[v])) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
      }
  for (auto& row : g.adjacency) std::sort(row.begin(), row.end());
  return g;
}

bool is_one_string(const Representation& rep) {
  if (rep.mode != Mode::VPG) throw WrongMode("one-string check needs a VPG representation");
  for (std::size_t u = 0; u < rep.paths.size(); ++u)
    for (std::size_t v = u + 1; v < rep.paths.size(); ++v) {
      const Crossings c = crossing_points(rep.paths[u], rep.paths[v]);
      if (c.overlap || c.points.size() > 1) return false;
    }
  return true;
}

NeighborSplit split_neighbors(const Representation& rep, PathId id) {
  if (rep.mode != Mode::EPG) throw WrongMode("neighbour split needs an EPG representation");
  if (!weak_general_position(rep)) throw GeneralPositionViolation("two EPG paths share a corner");
  const GridPath& p = rep.path(id);
  const auto [ph, pv] = parts_of(p);

  NeighborSplit out;
  for (const auto& q : rep.paths) {
    if (q.id == p.id) continue;
    const auto [qh, qv] = parts_of(q);
    if (collinear_overlap(ph, qh) >= 1) out.h_neighbors.push_back(q.id);
    if (collinear_overlap(pv, qv) >= 1) out.v_neighbors.push_back(q.id);
  }
  out.h_neighbors = normalize(std::move(out.h_neighbors));
  out.v_neighbors = normalize(std::move(out.v_neighbors));
  return out;
}

}  // namespace b1grid
