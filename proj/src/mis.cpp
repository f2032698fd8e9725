#include "b1grid/mis.hpp"

#include <algorithm>

#include "b1grid/errors.hpp"
#include "b1grid/exact.hpp"

namespace b1grid {

namespace {

IdSet exact_on(const std::vector<GridPath>& paths) {
  Representation sub;
  sub.mode = Mode::VPG;
  sub.paths = paths;
  return max_independent_set(build_graph(sub));
}

IdSet recurse(std::vector<GridPath> paths, std::size_t depth, MisTrace& trace) {
  trace.max_depth = std::max(trace.max_depth, depth);
  if (paths.size() <= 2) {
    ++trace.exact_calls;
    return exact_on(paths);
  }
  std::sort(paths.begin(), paths.end(), [](const GridPath& a, const GridPath& b) {
    if (a.corner.x != b.corner.x) return a.corner.x < b.corner.x;
    if (a.corner.y != b.corner.y) return a.corner.y < b.corner.y;
    return a.id < b.id;
  });

  StripPartition parts = partition_LMR(paths, compute_xmed(paths));
  IdSet sides = recurse(std::move(parts.left), depth + 1, trace);
  IdSet right = recurse(std::move(parts.right), depth + 1, trace);
  sides.insert(sides.end(), right.begin(), right.end());
  ++trace.exact_calls;
  IdSet middle = exact_on(parts.middle);

  return middle.size() > sides.size() ? middle : normalize(std::move(sides));
}

}  // namespace

TypeBuckets split_by_type(const Representation& rep) {
  TypeBuckets buckets;
  for (const auto& p : rep.paths) buckets[static_cast<std::size_t>(classify_type(p))].push_back(p);
  return buckets;
}

HalfCoord compute_xmed(const std::vector<GridPath>& paths) {
  if (paths.size() < 2) throw TooFewPaths("median column needs at least two paths");
  std::vector<Coord> xs;
  xs.reserve(paths.size());
  for (const auto& p : paths) xs.push_back(p.corner.x);
  std::sort(xs.begin(), xs.end());
  const std::size_t k = xs.size() / 2;  // 1-based position k is xs[k-1]
  return HalfCoord{xs[k - 1] + xs[k]};
}

StripPartition partition_LMR(const std::vector<GridPath>& paths, HalfCoord xmed) {
  StripPartition out;
  for (const auto& p : paths) {
    const Coord lo = std::min(p.corner.x, p.h_tip.x);
    const Coord hi = std::max(p.corner.x, p.h_tip.x);
    if (2 * hi < xmed.twice)
      out.left.push_back(p);
    else if (2 * lo > xmed.twice)
      out.right.push_back(p);
    else
      out.middle.push_back(p);
  }
  return out;
}

IdSet approx_mis_single_type(const std::vector<GridPath>& paths, MisTrace* trace) {
  MisTrace local;
  MisTrace& t = trace ? *trace : local;
  t = {};
  return recurse(paths, 0, t);
}

IdSet approx_mis(const Representation& rep) {
  if (rep.mode != Mode::VPG) throw WrongMode("independent set approximation needs a VPG representation");
  validate(rep);

  const TypeBuckets buckets = split_by_type(rep);
  IdSet best;
  for (PathType type : {PathType::LL, PathType::UL, PathType::LR, PathType::UR}) {
    const bool flip_x = type == PathType::LR || type == PathType::UR;
    const bool flip_y = type == PathType::UL || type == PathType::UR;
    std::vector<GridPath> frame;
    for (const auto& p : buckets[static_cast<std::size_t>(type)]) frame.push_back(reflect(p, flip_x, flip_y));
    IdSet s = approx_mis_single_type(frame);
    if (s.size() > best.size()) best = std::move(s);
  }
  return best;
}

}  // namespace b1grid
