#include <gtest/gtest.h>

#include <algorithm>

#include "b1grid/errors.hpp"
#include "b1grid/exact.hpp"
#include "b1grid/generators.hpp"
#include "naive.hpp"

using namespace b1grid;

namespace {

IntersectionGraph cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return IntersectionGraph::from_edges(n, e);
}

IntersectionGraph complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return IntersectionGraph::from_edges(n, e);
}

IntersectionGraph star(std::size_t leaves) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return IntersectionGraph::from_edges(leaves + 1, e);
}

}  // namespace

TEST(BruteMis, Examples) {
  EXPECT_EQ(brute_mis(IntersectionGraph::from_edges(3, {})), (IdSet{0, 1, 2}));
  EXPECT_EQ(brute_mis(complete(3)).size(), 1U);
  EXPECT_EQ(brute_mis(cycle(5)).size(), 2U);
  EXPECT_EQ(brute_mis(star(4)), (IdSet{1, 2, 3, 4}));
  EXPECT_TRUE(brute_mis(IntersectionGraph{}).empty());
}

TEST(BruteMds, Examples) {
  EXPECT_EQ(brute_mds(IntersectionGraph::from_edges(3, {})), (IdSet{0, 1, 2}));
  EXPECT_EQ(brute_mds(complete(3)).size(), 1U);
  EXPECT_EQ(brute_mds(cycle(5)).size(), 2U);
  EXPECT_EQ(brute_mds(star(4)), (IdSet{0}));
}

TEST(MinDominatingSet, ForbiddenVertices) {
  EXPECT_EQ(min_dominating_set(star(4), {0}), std::optional<IdSet>(IdSet{1, 2, 3, 4}));
  EXPECT_EQ(min_dominating_set(IntersectionGraph::from_edges(1, {}), {0}), std::nullopt);
}

TEST(BruteHs, Examples) {
  EXPECT_EQ(min_hitting_set(3, {{0, 1}, {1, 2}}), std::optional<std::vector<std::size_t>>(std::vector<std::size_t>{1}));
  EXPECT_EQ(min_hitting_set(4, {{0}, {1}, {2, 3}})->size(), 3U);
  EXPECT_EQ(min_hitting_set(2, {}), std::optional<std::vector<std::size_t>>(std::vector<std::size_t>{}));
  EXPECT_EQ(min_hitting_set(3, {{0, 1}}, {0, 0, 1}), std::nullopt);

  Representation rep;
  rep.paths = {GridPath::make(0, 0, 0, 2, 2), GridPath::make(1, 1, -1, 3, 1)};
  const SetSystem sys = build_set_system(rep);
  const ElementSet hs = brute_hs(sys);
  EXPECT_EQ(hs.size(), 1U);
  EXPECT_EQ(verify_hitting(sys, hs), std::nullopt);
}

TEST(BruteVc, Examples) {
  EXPECT_EQ(brute_vc({2, {{0, 1}}}).size(), 1U);
  EXPECT_EQ(brute_vc({3, {{0, 1}, {0, 2}, {1, 2}}}).size(), 2U);
  EXPECT_EQ(brute_vc({3, {{0, 1}, {1, 2}}}), (std::vector<std::size_t>{1}));
  EXPECT_TRUE(brute_vc({4, {}}).empty());
}

TEST(Caps, TooLarge) {
  EXPECT_THROW(brute_mis(IntersectionGraph::from_edges(caps::kMis + 1, {})), TooLarge);
  EXPECT_THROW(brute_mds(IntersectionGraph::from_edges(caps::kMds + 1, {})), TooLarge);
  EXPECT_THROW(brute_vc({caps::kVc + 1, {}}), TooLarge);
  EXPECT_NO_THROW(brute_mis(IntersectionGraph::from_edges(caps::kMis, {})));

  SetSystem sys;
  for (std::size_t k = 0; k < caps::kHsSets + 1; ++k) {
    sys.path_ids.push_back(static_cast<PathId>(k));
    sys.sets.push_back({2 * k});
  }
  sys.universe.resize(2 * sys.sets.size());
  sys.weights.assign(sys.universe.size(), 1);
  EXPECT_THROW(brute_hs(sys), TooLarge);
}

TEST(OracleProperties, AgreeWithSubsetEnumeration) {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 10));
    const IntersectionGraph g = naive::random_graph(rng, n, static_cast<int>(rng.between(10, 70)));
    const IdSet mis = brute_mis(g);
    const IdSet mds = brute_mds(g);
    EXPECT_TRUE(is_independent(g, mis));
    EXPECT_TRUE(is_dominating(g, mds));
    EXPECT_EQ(mis.size(), naive::mis_size(g));
    EXPECT_EQ(max_independent_set(g).size(), mis.size());
    EXPECT_EQ(mds.size(), naive::mds_size(g));

    SimpleGraph sg{n, {}};
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u : g.adjacency[v])
        if (v < u) sg.edges.emplace_back(v, u);
    const auto vc = brute_vc(sg);
    EXPECT_TRUE(is_vertex_cover(sg, vc));
    EXPECT_EQ(vc.size(), naive::vc_size(sg));

    const std::size_t universe = static_cast<std::size_t>(rng.between(1, 10));
    std::vector<std::vector<std::size_t>> sets(static_cast<std::size_t>(rng.between(0, 8)));
    for (auto& s : sets) {
      for (std::size_t e = 0; e < universe; ++e)
        if (rng.between(0, 3) == 0) s.push_back(e);
      if (s.empty()) s.push_back(static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(universe) - 1)));
    }
    const auto hs = min_hitting_set(universe, sets);
    ASSERT_TRUE(hs.has_value());
    EXPECT_EQ(hs->size(), naive::hs_size(universe, sets));
  }
}

TEST(OracleProperties, HittingSetOfCrossSystemMatchesDominatingSet) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Representation rep = gen_vpg(8, 3000 + seed, true);
    const SetSystem sys = build_set_system(rep);
    const IntersectionGraph g = build_graph(rep);
    std::vector<std::vector<std::size_t>> sets = sys.sets;
    EXPECT_EQ(brute_hs(sys).size(), naive::hs_size(sys.universe.size(), sets));
    EXPECT_LE(brute_hs(sys).size(), naive::mds_size(g) * 2);
  }
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(gen_vpg(15, 9, true), gen_vpg(15, 9, true));
  EXPECT_EQ(gen_vpg(15, 9, false), gen_vpg(15, 9, false));
  EXPECT_NE(gen_vpg(15, 9, false), gen_vpg(15, 10, false));
  EXPECT_EQ(gen_epg_double_crossing(10, 4), gen_epg_double_crossing(10, 4));
  EXPECT_EQ(gen_epg_vertical_crossing(10, 4), gen_epg_vertical_crossing(10, 4));
  EXPECT_EQ(gen_degree3_graph(10, 12, 4), gen_degree3_graph(10, 12, 4));
}

TEST(Generators, VpgShape) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Representation rep = gen_vpg(20, seed, true);
    EXPECT_EQ(rep.paths.size(), 20U);
    EXPECT_EQ(rep.mode, Mode::VPG);
    EXPECT_TRUE(is_one_string(rep));
  }
  EXPECT_TRUE(gen_vpg(0, 1, true).paths.empty());
}

TEST(Generators, Degree3Graph) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const std::size_t n = 2 + seed % 12;
    const std::size_t m = seed % (3 * n / 2 + 1);
    if (m > n * (n - 1) / 2) continue;
    const SimpleGraph g = gen_degree3_graph(n, m, seed);
    EXPECT_TRUE(g.well_formed());
    EXPECT_EQ(g.n, n);
    EXPECT_EQ(g.edges.size(), m);
    EXPECT_LE(g.max_degree(), 3U);
  }
  EXPECT_THROW(gen_degree3_graph(4, 7, 1), Infeasible);
  EXPECT_THROW(gen_degree3_graph(3, 4, 1), Infeasible);
}
