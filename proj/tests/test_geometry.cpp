#include <gtest/gtest.h>

#include <algorithm>

#include "b1grid/errors.hpp"
#include "b1grid/geometry.hpp"
#include "naive.hpp"

using namespace b1grid;

namespace {

GridPath P(PathId id, Coord cx, Coord cy, Coord hx, Coord vy) { return GridPath::make(id, cx, cy, hx, vy); }

Representation vpg(std::vector<GridPath> paths) { return {Mode::VPG, std::move(paths), {}, {}}; }
Representation epg(std::vector<GridPath> paths) { return {Mode::EPG, std::move(paths), {}, {}}; }

}  // namespace

TEST(ClassifyType, SignRule) {
  EXPECT_EQ(classify_type(P(0, 0, 0, 3, 2)), PathType::LL);
  EXPECT_EQ(classify_type(P(0, 0, 0, 3, -2)), PathType::UL);
  EXPECT_EQ(classify_type(P(0, 0, 0, -3, 2)), PathType::LR);
  EXPECT_EQ(classify_type(P(0, 0, 0, -3, -2)), PathType::UR);
}

TEST(ClassifyType, ZeroLengthPartsAreLL) {
  EXPECT_EQ(classify_type(P(0, 5, 5, 5, 5)), PathType::LL);
  EXPECT_EQ(classify_type(P(0, 5, 5, 1, 5)), PathType::LL);
  EXPECT_EQ(classify_type(P(0, 5, 5, 5, 0)), PathType::LL);
}

TEST(Reflect, MapsEachTypeToLL) {
  EXPECT_EQ(classify_type(reflect(P(0, 0, 0, 3, -2), false, true)), PathType::LL);
  EXPECT_EQ(classify_type(reflect(P(0, 0, 0, -3, 2), true, false)), PathType::LL);
  EXPECT_EQ(classify_type(reflect(P(0, 0, 0, -3, -2), true, true)), PathType::LL);
}

TEST(Normalized, KeepsPointSetOfStraightPaths) {
  const GridPath down = P(3, 2, 9, 2, 4);
  const GridPath n = normalized(down);
  EXPECT_EQ(n.corner, (GridPoint{2, 4}));
  EXPECT_EQ(n.v_tip, (GridPoint{2, 9}));
  EXPECT_EQ(n.v_span(), down.v_span());
  EXPECT_EQ(n.id, 3);
}

TEST(VpgAdjacent, ProperCrossing) {
  EXPECT_TRUE(vpg_adjacent(P(0, 0, 0, 2, 2), P(1, 1, -1, 3, 1)));
}

TEST(VpgAdjacent, EndpointTouchIsNotAdjacency) {
  EXPECT_FALSE(vpg_adjacent(P(0, 0, 0, 2, 2), P(1, 2, 0, 4, 2)));
}

TEST(VpgAdjacent, CollinearOverlap) {
  EXPECT_TRUE(vpg_adjacent(P(0, 0, 0, 4, 1), P(1, 2, 0, 6, -1)));
}

TEST(VpgAdjacent, CornerOnSegmentIsATouch) {
  // Corner of b lies in the middle of a's horizontal part.
  EXPECT_FALSE(vpg_adjacent(P(0, 0, 0, 4, 3), P(1, 2, 0, 2, -3)));
  // T-junction: b's vertical part ends on a's horizontal part.
  EXPECT_FALSE(vpg_adjacent(P(0, 0, 0, 4, 3), P(1, 2, 2, 3, 0)));
}

TEST(EpgAdjacent, SharedEdge) {
  EXPECT_TRUE(epg_adjacent(P(0, 0, 0, 6, 0), P(1, 2, 0, 6, 0)));
}

TEST(EpgAdjacent, SingleSharedNodeIsNotAdjacency) {
  EXPECT_FALSE(epg_adjacent(P(0, 0, 0, 2, 0), P(1, 2, 0, 5, 0)));
  // Perpendicular paths through a common node.
  EXPECT_FALSE(epg_adjacent(P(0, 0, 0, 4, 0), P(1, 2, -2, 2, 2)));
}

TEST(CrossingPoints, SingleCrossing) {
  const Crossings c = crossing_points(P(0, 0, 0, 2, 2), P(1, 1, -1, 3, 1));
  EXPECT_EQ(c.points, (std::vector<GridPoint>{{1, 0}}));
  EXPECT_FALSE(c.overlap);
}

TEST(CrossingPoints, DisjointPaths) {
  const Crossings c = crossing_points(P(0, 0, 0, 2, 2), P(1, 10, 10, 12, 12));
  EXPECT_TRUE(c.points.empty());
  EXPECT_FALSE(c.overlap);
}

TEST(CrossingPoints, LeftDownPathCrossesRightUpPathTwice) {
  const GridPath a = P(0, 0, 0, 4, 4);
  const GridPath b = P(1, 2, 2, -2, -2);
  ASSERT_EQ(classify_type(b), PathType::UR);
  // Hand enumeration of the four part pairs: a.h x b.v meet at (2,0), a.v x
  // b.h at (0,2), the two parallel pairs are on distinct lines.
  EXPECT_EQ(crossing_points(a, b).points, (std::vector<GridPoint>{{0, 2}, {2, 0}}));
}

TEST(CrossingPoints, OverlapIsFlaggedNotEnumerated) {
  const Crossings c = crossing_points(P(0, 0, 0, 4, 1), P(1, 2, 0, 6, -1));
  EXPECT_TRUE(c.overlap);
  EXPECT_TRUE(c.points.empty());
}

TEST(BuildGraph, Empty) {
  EXPECT_EQ(build_graph(vpg({})).size(), 0U);
}

TEST(BuildGraph, NodeSharingPairDependsOnMode) {
  const std::vector<GridPath> paths = {P(0, 0, 0, 4, 0), P(1, 2, -2, 2, 2)};
  EXPECT_EQ(build_graph(vpg(paths)).edge_count(), 1U);
  EXPECT_EQ(build_graph(epg(paths)).edge_count(), 0U);
}

TEST(BuildGraph, ThreeMutuallyCrossingPathsFormATriangle) {
  const std::vector<GridPath> paths = {P(0, 0, 0, 6, 6), P(1, 3, -1, 7, 5), P(2, -1, 3, 5, 7)};
  const IntersectionGraph g = build_graph(vpg(paths));
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = u + 1; v < 3; ++v) {
      EXPECT_EQ(g.has_edge(u, v), naive::vpg_adjacent(paths[u], paths[v]));
      EXPECT_TRUE(g.has_edge(u, v));
    }
}

TEST(BuildGraph, RejectsSharedCornersInEpgMode) {
  EXPECT_THROW(build_graph(epg({P(0, 0, 0, 2, 2), P(1, 0, 0, 3, 1)})), GeneralPositionViolation);
  EXPECT_NO_THROW(build_graph(vpg({P(0, 0, 0, 2, 2), P(1, 0, 0, 3, 1)})));
}

TEST(BuildGraph, RejectsDuplicateIds) {
  EXPECT_THROW(build_graph(vpg({P(4, 0, 0, 2, 2), P(4, 5, 5, 6, 6)})), DuplicateId);
}

TEST(IsOneString, Cases) {
  EXPECT_TRUE(is_one_string(vpg({P(0, 0, 0, 2, 2)})));
  EXPECT_TRUE(is_one_string(vpg({P(0, 0, 0, 2, 2), P(1, 1, -1, 3, 1)})));
  EXPECT_FALSE(is_one_string(vpg({P(0, 0, 0, 4, 4), P(1, 2, 2, -2, -2)})));
  EXPECT_THROW(is_one_string(epg({})), WrongMode);
}

TEST(WeakGeneralPosition, Cases) {
  EXPECT_TRUE(weak_general_position(epg({P(0, 0, 0, 1, 1), P(1, 0, 1, 1, 2)})));
  EXPECT_FALSE(weak_general_position(epg({P(0, 0, 0, 1, 1), P(1, 0, 0, 2, 3)})));
  EXPECT_TRUE(weak_general_position(epg({})));
}

TEST(SplitNeighbors, Cases) {
  // 0 shares its horizontal part with 1 and its vertical part with 2.
  const Representation rep = epg({P(0, 0, 0, 5, 5), P(1, 2, 0, 8, 2), P(2, 0, 3, 3, 8), P(3, 20, 20, 21, 21)});
  const NeighborSplit s0 = split_neighbors(rep, 0);
  EXPECT_EQ(s0.h_neighbors, (IdSet{1}));
  EXPECT_EQ(s0.v_neighbors, (IdSet{2}));
  const NeighborSplit s1 = split_neighbors(rep, 1);
  EXPECT_EQ(s1.h_neighbors, (IdSet{0}));
  EXPECT_TRUE(s1.v_neighbors.empty());
  const NeighborSplit s3 = split_neighbors(rep, 3);
  EXPECT_TRUE(s3.h_neighbors.empty() && s3.v_neighbors.empty());
  EXPECT_THROW(split_neighbors(rep, 99), UnknownId);
  EXPECT_THROW(split_neighbors(vpg({}), 0), WrongMode);
}

TEST(GeometryProperties, AdjacencyMatchesNodeRasterization) {
  Rng rng(11);
  for (int k = 0; k < 20000; ++k) {
    const GridPath a = naive::random_path(rng, 0, 8, 5);
    const GridPath b = naive::random_path(rng, 1, 8, 5);
    ASSERT_EQ(vpg_adjacent(a, b), naive::vpg_adjacent(a, b)) << k;
    ASSERT_EQ(epg_adjacent(a, b), naive::epg_adjacent(a, b)) << k;
    ASSERT_EQ(vpg_adjacent(a, b), vpg_adjacent(b, a));
    ASSERT_EQ(epg_adjacent(a, b), epg_adjacent(b, a));
    if (vpg_adjacent(a, b)) {
      const Crossings c = crossing_points(a, b);
      ASSERT_TRUE(c.overlap || !c.points.empty());
    }
  }
}

TEST(GeometryProperties, GraphIndependentOfInputOrder) {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<GridPath> paths;
    for (PathId id = 0; id < 12; ++id) paths.push_back(naive::random_path(rng, id * 3 + 1, 10, 6));
    const IntersectionGraph g = build_graph(vpg(paths));
    rng.shuffle(paths);
    EXPECT_EQ(build_graph(vpg(paths)), g);
  }
}

TEST(GeometryProperties, SplitNeighborsPartitionsTheNeighbourhood) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Representation rep = epg({});
    for (PathId id = 0; id < 10; ++id) {
      GridPath p = naive::random_path(rng, id, 6, 4);
      const bool clash = std::any_of(rep.paths.begin(), rep.paths.end(),
                                     [&](const GridPath& q) { return q.corner == p.corner; });
      if (!clash) rep.paths.push_back(p);
    }
    const IntersectionGraph g = build_graph(rep);
    for (std::size_t v = 0; v < g.size(); ++v) {
      const NeighborSplit s = split_neighbors(rep, g.ids[v]);
      IdSet both = s.h_neighbors;
      both.insert(both.end(), s.v_neighbors.begin(), s.v_neighbors.end());
      EXPECT_EQ(both.size(), s.h_neighbors.size() + s.v_neighbors.size());
      EXPECT_EQ(normalize(both), g.ids_of(g.adjacency[v]));
    }
  }
}
