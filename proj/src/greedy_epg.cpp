#include "b1grid/greedy_epg.hpp"

#include <algorithm>
#include <limits>

#include "b1grid/errors.hpp"

namespace b1grid {

std::vector<GridPath> order_paths(const std::vector<GridPath>& paths) {
  std::vector<GridPath> out = paths;
  std::sort(out.begin(), out.end(), [](const GridPath& a, const GridPath& b) {
    if (a.corner.y != b.corner.y) return a.corner.y < b.corner.y;
    return a.corner.x < b.corner.x;
  });
  for (std::size_t k = 1; k < out.size(); ++k)
    if (out[k].corner == out[k - 1].corner) throw GeneralPositionViolation("two paths share a corner");
  return out;
}

IdSet greedy_line_mds(const Representation& rep) {
  if (rep.mode != Mode::EPG) throw WrongMode("greedy dominating set needs an EPG representation");
  const IntersectionGraph g = build_graph(rep);

  std::vector<char> present(g.size(), 1);
  IdSet chosen;
  for (const GridPath& p : order_paths(rep.paths)) {
    const std::size_t v = g.require_index(p.id);
    if (!present[v]) continue;
    chosen.push_back(p.id);
    present[v] = 0;
    for (std::size_t u : g.adjacency[v]) present[u] = 0;
  }
  return normalize(std::move(chosen));
}

std::optional<Coord> detect_vertical_line(const Representation& rep) {
  if (rep.paths.empty()) return std::nullopt;
  Coord lo = std::numeric_limits<Coord>::min();
  Coord hi = std::numeric_limits<Coord>::max();
  for (const auto& p : rep.paths) {
    const Interval s = p.h_span();
    lo = std::max(lo, s.lo);
    hi = std::min(hi, s.hi);
  }
  if (lo > hi) return std::nullopt;
  return lo;
}

bool crosses_vertical(const GridPath& p, Coord ell) {
  const GridPath q = normalized(p);
  return classify_type(q) == PathType::LL && q.corner.x < ell && ell <= q.h_tip.x;
}

bool crosses_horizontal(const GridPath& p, Coord L) {
  const GridPath q = normalized(p);
  return classify_type(q) == PathType::LL && q.corner.y < L && L <= q.v_tip.y;
}

bool is_double_crossing(const Representation& rep, Coord L, Coord ell) {
  return std::all_of(rep.paths.begin(), rep.paths.end(),
                     [&](const GridPath& p) { return crosses_vertical(p, ell) && crosses_horizontal(p, L); });
}

bool is_vertical_crossing(const Representation& rep, Coord ell) {
  return std::all_of(rep.paths.begin(), rep.paths.end(),
                     [&](const GridPath& p) { return crosses_vertical(p, ell); });
}

bool check_non_containment(const Representation& rep) {
  for (std::size_t u = 0; u < rep.paths.size(); ++u)
    for (std::size_t v = u + 1; v < rep.paths.size(); ++v) {
      const GridPath& a = rep.paths[u];
      const GridPath& b = rep.paths[v];
      if (a.corner.x != b.corner.x) continue;
      const Interval sa = a.v_span(), sb = b.v_span();
      if (std::min(sa.hi, sb.hi) - std::max(sa.lo, sb.lo) < 1) continue;
      if ((sa.lo <= sb.lo && sb.hi <= sa.hi) || (sb.lo <= sa.lo && sa.hi <= sb.hi)) return false;
    }
  return true;
}

}  // namespace b1grid
