#include "b1grid/generators.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "b1grid/errors.hpp"
#include "b1grid/rng.hpp"

namespace b1grid {

namespace {

constexpr std::size_t kAttemptsPerPath = 400;

Coord ceil_sqrt(std::size_t n) {
  auto k = static_cast<Coord>(std::sqrt(static_cast<double>(n)));
  while (k * k < static_cast<Coord>(n)) ++k;
  return k;
}

[[noreturn]] void exhausted(const char* what, std::size_t n, std::uint64_t seed) {
  throw GenerationExhausted(std::string(what) + ": gave up at n=" + std::to_string(n) + " seed=" +
                            std::to_string(seed));
}

}  // namespace

Representation gen_vpg(std::size_t n, std::uint64_t seed, bool one_string) {
  Rng rng(seed);
  Representation rep;
  rep.mode = Mode::VPG;

  const auto window = static_cast<Coord>(3 * n + 6);
  const Coord reach = std::max<Coord>(2, window / 3);
  std::vector<Coord> free_x, free_y;  // ascending unused coordinates
  for (Coord v = 0; v < window; ++v) free_x.push_back(v), free_y.push_back(v);

  // An unused corner coordinate and an unused tip coordinate within reach.
  auto draw_arm = [&](const std::vector<Coord>& free) -> std::optional<std::pair<Coord, Coord>> {
    const Coord c = free[rng.below(free.size())];
    std::vector<Coord> tips;
    for (Coord v : free)
      if (v != c && v >= c - reach && v <= c + reach) tips.push_back(v);
    if (tips.empty()) return std::nullopt;
    return std::make_pair(c, tips[rng.below(tips.size())]);
  };
  auto erase = [](std::vector<Coord>& free, Coord v) { free.erase(std::find(free.begin(), free.end(), v)); };

  for (std::size_t k = 0; k < n; ++k) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kAttemptsPerPath && !placed; ++attempt) {
      const auto h = draw_arm(free_x);
      const auto v = draw_arm(free_y);
      if (!h || !v) continue;
      const GridPath p = GridPath::make(static_cast<PathId>(k), h->first, v->first, h->second, v->second);
      if (one_string &&
          std::any_of(rep.paths.begin(), rep.paths.end(),
                      [&](const GridPath& q) { return crossing_points(p, q).points.size() > 1; }))
        continue;

      erase(free_x, h->first);
      erase(free_x, h->second);
      erase(free_y, v->first);
      erase(free_y, v->second);
      rep.paths.push_back(p);
      placed = true;
    }
    if (!placed) exhausted("gen_vpg", n, seed);
  }
  return rep;
}

Representation gen_epg_double_crossing(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const Coord k = ceil_sqrt(n) + 1;
  Representation rep;
  rep.mode = Mode::EPG;
  rep.vline = k;
  rep.hline = k;

  // Corners in the k x k block strictly below and left of the crossing of the
  // two lines; tips at or beyond the lines.
  std::vector<GridPoint> cells;
  for (Coord x = 0; x < k; ++x)
    for (Coord y = 0; y < k; ++y) cells.push_back({x, y});
  rng.shuffle(cells);

  for (std::size_t i = 0; i < n; ++i) {
    const GridPoint c = cells[i];
    const Coord hx = k + rng.between(0, k);
    const Coord vy = k + rng.between(0, k);
    rep.paths.push_back(GridPath::make(static_cast<PathId>(i), c.x, c.y, hx, vy));
  }
  return rep;
}

Representation gen_epg_vertical_crossing(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const Coord k = ceil_sqrt(n) + 1;
  const auto height = static_cast<Coord>(ceil_sqrt(n) + 2);
  Representation rep;
  rep.mode = Mode::EPG;
  rep.vline = k;

  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kAttemptsPerPath && !placed; ++attempt) {
      const Coord cx = rng.between(0, k - 1);
      const Coord cy = rng.between(0, height - 1);
      const Coord hx = k + rng.between(0, k);
      const Coord vy = cy + rng.between(0, height / 2);
      const GridPath p = GridPath::make(static_cast<PathId>(i), cx, cy, hx, vy);

      const bool clash = std::any_of(rep.paths.begin(), rep.paths.end(), [&](const GridPath& q) {
        if (q.corner == p.corner) return true;
        if (q.corner.x != p.corner.x) return false;
        const Interval a = p.v_span(), b = q.v_span();
        const bool share_edge = std::min(a.hi, b.hi) - std::max(a.lo, b.lo) >= 1;
        const bool nested = (a.lo <= b.lo && b.hi <= a.hi) || (b.lo <= a.lo && a.hi <= b.hi);
        return share_edge && nested;
      });
      if (clash) continue;
      rep.paths.push_back(p);
      placed = true;
    }
    if (!placed) exhausted("gen_epg_vertical_crossing", n, seed);
  }
  return rep;
}

SimpleGraph gen_degree3_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (2 * m > 3 * n || m > pairs)
    throw Infeasible("no simple graph with " + std::to_string(n) + " vertices, " + std::to_string(m) +
                     " edges and maximum degree 3");

  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(i, j);

  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < 2000; ++attempt) {
    rng.shuffle(all);
    std::vector<std::size_t> deg(n, 0);
    SimpleGraph g;
    g.n = n;
    for (const auto& [i, j] : all) {
      if (g.edges.size() == m) break;
      if (deg[i] < 3 && deg[j] < 3) {
        ++deg[i];
        ++deg[j];
        g.edges.emplace_back(i, j);
      }
    }
    if (g.edges.size() == m) {
      std::sort(g.edges.begin(), g.edges.end());
      return g;
    }
  }
  exhausted("gen_degree3_graph", n, seed);
}

}  // namespace b1grid
