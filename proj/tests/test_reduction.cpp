#include <gtest/gtest.h>

#include <algorithm>

#include "b1grid/errors.hpp"
#include "b1grid/exact.hpp"
#include "b1grid/reduction.hpp"
#include "naive.hpp"

using namespace b1grid;

namespace {

SimpleGraph graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) { return {n, std::move(edges)}; }

PathId id(const SimpleGraph& g, RoleKind kind, std::size_t i, std::size_t j = 0) { return gadget_id(g, {kind, i, j}); }

SimpleGraph triangle() { return graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

// Every simple graph on n vertices with maximum degree 3.
std::vector<SimpleGraph> all_degree3_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<SimpleGraph> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    SimpleGraph g{n, {}};
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1U) g.edges.push_back(pairs[k]);
    if (g.max_degree() <= 3) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(RoleToken, RoundTrip) {
  EXPECT_EQ(to_token({RoleKind::Gh, 3, 0}), "Gh(3)");
  EXPECT_EQ(to_token({RoleKind::E1, 0, 2}), "E1(0,2)");
  for (const Role& r : {Role{RoleKind::Gv, 7, 0}, Role{RoleKind::S2, 0, 0}, Role{RoleKind::E2, 4, 11}})
    EXPECT_EQ(parse_role(to_token(r)), std::optional<Role>(r));
  EXPECT_EQ(parse_role("Q(1)"), std::nullopt);
  EXPECT_EQ(parse_role("E1(1)"), std::nullopt);
  EXPECT_EQ(parse_role("C(1,2)"), std::nullopt);
}

TEST(GadgetGraph, PathCounts) {
  const SimpleGraph path5 = graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(gadget_graph(path5).size(), 33U);
  EXPECT_EQ(reduce_vc_to_mds(path5).rep.paths.size(), 33U);

  // Two disjoint copies of K4 plus four more vertices on a 12-edge set.
  SimpleGraph g12{12, {}};
  for (std::size_t base : {0U, 4U})
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) g12.edges.emplace_back(base + i, base + j);
  ASSERT_EQ(g12.edges.size(), 12U);
  EXPECT_EQ(reduce_vc_to_mds(g12).rep.paths.size(), 84U);

  // Cubic graph on 16 vertices has 24 edges; add 5 isolated vertices.
  SimpleGraph cubic{21, {}};
  for (std::size_t i = 0; i < 16; ++i) {
    const std::size_t next = (i + 1) % 16;
    cubic.edges.emplace_back(std::min(i, next), std::max(i, next));
  }
  for (std::size_t i = 0; i < 8; ++i) cubic.edges.emplace_back(i, i + 8);
  std::sort(cubic.edges.begin(), cubic.edges.end());
  ASSERT_EQ(cubic.max_degree(), 3U);
  const ReductionInstance inst = reduce_vc_to_mds(cubic);
  EXPECT_EQ(inst.rep.paths.size(), 153U);
  EXPECT_EQ(inst.labels.size(), 153U);
  EXPECT_TRUE(verify_reduction(inst, cubic));
}

TEST(GadgetGraph, RejectsHighDegree) {
  const SimpleGraph star4 = graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_THROW(gadget_graph(star4), DegreeTooHigh);
  EXPECT_THROW(reduce_vc_to_mds(star4), DegreeTooHigh);
  EXPECT_THROW(gadget_graph(graph(2, {{0, 5}})), PreconditionError);
}

TEST(Reduction, SmallOptima) {
  EXPECT_EQ(brute_mds(build_graph(reduce_vc_to_mds(graph(1, {})).rep)).size(), 1U);
  EXPECT_EQ(brute_mds(build_graph(reduce_vc_to_mds(graph(2, {{0, 1}})).rep)).size(), 3U);
  EXPECT_EQ(brute_mds(build_graph(reduce_vc_to_mds(triangle()).rep)).size(), 5U);
}

TEST(Reduction, EmptyGraph) {
  const ReductionInstance inst = reduce_vc_to_mds(graph(0, {}));
  EXPECT_TRUE(inst.rep.paths.empty());
  EXPECT_TRUE(verify_reduction(inst, graph(0, {})));
}

TEST(Reduction, LabelsAndTypes) {
  const SimpleGraph g = triangle();
  const ReductionInstance inst = reduce_vc_to_mds(g);
  EXPECT_EQ(inst.rep.mode, Mode::EPG);
  for (const auto& p : inst.rep.paths) {
    const PathType t = classify_type(p);
    EXPECT_TRUE(t == PathType::UL || t == PathType::LR) << p.id;
    ASSERT_TRUE(inst.labels.count(p.id));
    EXPECT_EQ(gadget_id(g, inst.labels.at(p.id)), p.id);
  }
  EXPECT_TRUE(weak_general_position(inst.rep));
}

TEST(MapBack, Examples) {
  const SimpleGraph g = graph(2, {{0, 1}});
  const ReductionInstance inst = reduce_vc_to_mds(g);

  IdSet d = normalize({id(g, RoleKind::C, 0), id(g, RoleKind::C, 1), id(g, RoleKind::Gv, 0)});
  EXPECT_EQ(map_back(d, inst, g), (std::vector<std::size_t>{0}));

  // Small connectors stand for their big one.
  d = normalize({id(g, RoleKind::S1, 0), id(g, RoleKind::S2, 0), id(g, RoleKind::C, 1), id(g, RoleKind::Gv, 0)});
  ASSERT_TRUE(is_dominating(build_graph(inst.rep), d));
  EXPECT_EQ(map_back(d, inst, g), (std::vector<std::size_t>{0}));

  // Both E paths of an edge stand for both endpoints.
  d = normalize({id(g, RoleKind::C, 0), id(g, RoleKind::C, 1), id(g, RoleKind::E1, 0, 1), id(g, RoleKind::E2, 0, 1)});
  ASSERT_TRUE(is_dominating(build_graph(inst.rep), d));
  EXPECT_EQ(map_back(d, inst, g), (std::vector<std::size_t>{0, 1}));

  EXPECT_THROW(map_back({id(g, RoleKind::C, 0)}, inst, g), NotDominating);
}

TEST(MapBack, OptimaMapToMinimumCovers) {
  for (const SimpleGraph& g : {triangle(), graph(4, {{0, 1}, {1, 2}, {2, 3}}), graph(4, {{0, 1}, {0, 2}, {0, 3}})}) {
    const ReductionInstance inst = reduce_vc_to_mds(g);
    const IdSet d = brute_mds(build_graph(inst.rep), caps::kReductionMds);
    const auto cover = map_back(d, inst, g);
    EXPECT_TRUE(is_vertex_cover(g, cover));
    EXPECT_EQ(cover.size(), naive::vc_size(g));
  }
}

TEST(VerifyReduction, AcceptsBuiltInstance) {
  const SimpleGraph g = triangle();
  std::string why;
  EXPECT_TRUE(verify_reduction(reduce_vc_to_mds(g), g, &why)) << why;
}

TEST(VerifyReduction, RejectsDeletedEdgePath) {
  const SimpleGraph g = triangle();
  ReductionInstance inst = reduce_vc_to_mds(g);
  const PathId gone = id(g, RoleKind::E2, 0, 2);
  std::erase_if(inst.rep.paths, [&](const GridPath& p) { return p.id == gone; });
  inst.labels.erase(gone);
  std::string why;
  EXPECT_FALSE(verify_reduction(inst, g, &why));
  EXPECT_FALSE(why.empty());
}

TEST(VerifyReduction, RejectsMovedPathAndWrongGraph) {
  const SimpleGraph g = triangle();
  ReductionInstance inst = reduce_vc_to_mds(g);
  for (auto& p : inst.rep.paths)
    if (p.id == id(g, RoleKind::C, 1)) p = GridPath::make(p.id, 1000, 1000, 1002, 998);
  std::string why;
  EXPECT_FALSE(verify_reduction(inst, g, &why));
  EXPECT_NE(why.find("adjacen"), std::string::npos) << why;

  EXPECT_FALSE(verify_reduction(reduce_vc_to_mds(g), graph(3, {{0, 1}, {1, 2}})));
}

TEST(ReductionProperties, ExhaustiveSmallGraphs) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const SimpleGraph& g : all_degree3_graphs(n)) {
      const ReductionInstance inst = reduce_vc_to_mds(g);
      const IntersectionGraph built = build_graph(inst.rep);
      EXPECT_EQ(built, gadget_graph(g));
      std::string why;
      EXPECT_TRUE(verify_reduction(inst, g, &why)) << why;
      const std::size_t mds = brute_mds(built, caps::kReductionMds).size();
      EXPECT_EQ(mds, n + naive::vc_size(g));
    }
  }
}
