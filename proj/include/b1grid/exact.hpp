#pragma once

// Exact solvers used as optimum oracles. All are exponential; the size caps
// mark where "desk scale" ends and are enforced with TooLarge.

#include <cstddef>
#include <optional>
#include <vector>

#include "b1grid/graph.hpp"
#include "b1grid/hitting_set.hpp"

namespace b1grid {

namespace caps {
inline constexpr std::size_t kMis = 25;
inline constexpr std::size_t kMds = 25;
inline constexpr std::size_t kHsUniverse = 50;
inline constexpr std::size_t kHsSets = 25;
inline constexpr std::size_t kVc = 20;
// Gadget instances for graphs with up to 8 vertices and 12 edges.
inline constexpr std::size_t kReductionMds = 64;
}  // namespace caps

// Maximum independent set by branch and bound, no size cap. Used for the
// middle strip of the independent set approximation.
IdSet max_independent_set(const IntersectionGraph& g);

IdSet brute_mis(const IntersectionGraph& g, std::size_t cap = caps::kMis);

// Minimum dominating set. Candidates in `forbidden` are never chosen; the
// result is nullopt when no dominating set avoids them.
std::optional<IdSet> min_dominating_set(const IntersectionGraph& g, const IdSet& forbidden = {});

IdSet brute_mds(const IntersectionGraph& g, std::size_t cap = caps::kMds);

// Minimum hitting set of an explicit set system over elements 0..universe-1.
// nullopt when some set has no allowed element.
std::optional<std::vector<std::size_t>> min_hitting_set(std::size_t universe,
                                                        const std::vector<std::vector<std::size_t>>& sets,
                                                        const std::vector<char>& allowed = {});

ElementSet brute_hs(const SetSystem& system);

std::vector<std::size_t> brute_vc(const SimpleGraph& g, std::size_t cap = caps::kVc);

}  // namespace b1grid
