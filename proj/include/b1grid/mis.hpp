#pragma once

// Independent set approximation on single-bend VPG representations: divide
// at the median corner column, solve the paths meeting the dividing line
// exactly, recurse on both sides, keep the better answer. Run once per bend
// type; the best of the four is within 4 log2 n of optimal.

#include <array>
#include <cstddef>
#include <vector>

#include "b1grid/geometry.hpp"

namespace b1grid {

using TypeBuckets = std::array<std::vector<GridPath>, 4>;  // indexed by PathType

TypeBuckets split_by_type(const Representation& rep);

// A coordinate that may fall halfway between grid lines, stored doubled.
struct HalfCoord {
  Coord twice = 0;

  friend bool operator==(const HalfCoord&, const HalfCoord&) = default;
};

// Midpoint of the corner columns at sorted positions floor(n/2) and
// floor(n/2)+1 (1-based). Throws TooFewPaths when n < 2.
HalfCoord compute_xmed(const std::vector<GridPath>& paths);

struct StripPartition {
  std::vector<GridPath> left;    // entirely left of the line
  std::vector<GridPath> middle;  // touching or crossing the line
  std::vector<GridPath> right;   // entirely right of the line
};

StripPartition partition_LMR(const std::vector<GridPath>& paths, HalfCoord xmed);

struct MisTrace {
  std::size_t max_depth = 0;  // recursion depth reached, root = 0
  std::size_t exact_calls = 0;
};

// Paths must all be LL in their own frame. Ties between the side union and
// the middle strip go to the side union.
IdSet approx_mis_single_type(const std::vector<GridPath>& paths, MisTrace* trace = nullptr);

// Each bucket is reflected into the LL frame first. Ties between buckets go
// to the earlier type in LL, UL, LR, UR order. Throws WrongMode.
IdSet approx_mis(const Representation& rep);

}  // namespace b1grid
