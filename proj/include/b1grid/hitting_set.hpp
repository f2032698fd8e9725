#pragma once

// Dominating set on one-string VPG representations via a hitting-set
// formulation. Each path gets a cross: two supporting segments shifted off
// the grid by a quarter unit at the corner end and pulled back by three
// quarters at the tips. Two crosses meet exactly when the paths cross, so a
// dominating set is a hitting set of "segments meeting cross c" and back.
//
// All cross coordinates are in quarter units (grid coordinate * 4).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "b1grid/geometry.hpp"
#include "b1grid/rng.hpp"

namespace b1grid {

enum class Axis { H, V };

struct Segment {
  Axis axis = Axis::H;
  Coord anchor = 0;  // row (H) or column (V)
  Coord lo = 0;
  Coord hi = 0;
  PathId owner = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Closed point-set intersection.
bool segments_intersect(const Segment& a, const Segment& b);

struct Cross {
  PathId owner = 0;
  Segment h_support;
  Segment v_support;
  // Set when an arm has zero length; that support collapses to the point
  // just outside the corner.
  bool degenerate = false;
};

Cross build_cross(const GridPath& path);
bool crosses_intersect(const Cross& a, const Cross& b);

struct SetSystem {
  std::vector<PathId> path_ids;    // ascending; path k owns elements 2k (H) and 2k+1 (V)
  std::vector<Segment> universe;
  std::vector<std::vector<std::size_t>> sets;  // sets[k]: elements hitting cross k, sorted
  std::vector<std::int64_t> weights;           // one per element, >= 1

  std::size_t path_index(PathId id) const;  // throws UnknownId
};

using ElementSet = std::vector<std::size_t>;  // sorted element indices

// Throws WrongMode for EPG input and NotOneString when some adjacent pair
// crosses more than once or overlaps.
SetSystem build_set_system(const Representation& rep);

// Both supports of every path in `ds`. Throws NotDominating.
ElementSet ds_to_hs(const IntersectionGraph& g, const IdSet& ds, const SetSystem& system);

// Owners of the chosen supports. Throws NotHitting.
IdSet hs_to_ds(const ElementSet& hs, const SetSystem& system);

// Lowest-index set missed by `candidate`, or nullopt if it hits every set.
std::optional<std::size_t> verify_hitting(const SetSystem& system, const ElementSet& candidate);

struct Ratio {
  std::int64_t num = 1;
  std::int64_t den = 1;
};

struct NetParams {
  Ratio sample_constant{1, 1};
  std::size_t max_resamples = 8;
  std::uint64_t rng_seed = 1;
};

// ceil(c * (1/eps) * ln(1/eps + 2))
std::size_t net_sample_size(Ratio eps, Ratio sample_constant);

// Sum of the weights of the elements of `set` lying on `axis`.
std::int64_t axis_mass(const SetSystem& system, std::size_t set, Axis axis);
std::int64_t axis_weight(const SetSystem& system, Axis axis);

// Elements of one axis hitting every set whose weight on that axis is at
// least eps times the axis total. Draws weighted samples one at a time and
// stops at the first prefix that covers every such set; gives up after the
// sample budget and retries up to max_resamples times before throwing
// NetFailure.
ElementSet axis_net(const SetSystem& system, Axis axis, Ratio eps, const NetParams& params, Rng& rng);
ElementSet axis_net(const SetSystem& system, Axis axis, Ratio eps, const NetParams& params);

// Union of the two (eps/2) axis nets; hits every set of total weight at
// least eps times the total.
ElementSet combined_net(const SetSystem& system, Ratio eps, const NetParams& params, Rng& rng);
ElementSet combined_net(const SetSystem& system, Ratio eps, const NetParams& params);

struct HittingSetTrace {
  std::int64_t final_guess = 0;  // r at which the net verified
  std::size_t doublings = 0;     // weight doublings over all guesses
  std::size_t net_calls = 0;
  std::size_t fallbacks = 0;     // axis nets replaced by the whole axis
};

// Iterative doubling over the guess r = 1, 2, 4, ...; each guess resets the
// weights, then alternates nets with eps = 1/(2r) and doubling the weight of
// the first unhit set, for at most ceil(4r log2(|U|/r + 2)) doublings.
ElementSet bg_hitting_set(SetSystem system, const NetParams& params, HittingSetTrace* trace = nullptr);

// Set system, hitting set, owners. Throws NotOneString.
IdSet approx_mds_one_string(const Representation& rep, const NetParams& params = {});

}  // namespace b1grid
