#include "b1grid/hitting_set.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "b1grid/errors.hpp"

namespace b1grid {

namespace {

constexpr Coord kQuarter = 4;

// Support of one arm along its own axis. The corner end is pushed out by
// one quarter, the tip end pulled in by three quarters; a leftward or
// downward arm is the mirror image.
std::pair<Coord, Coord> support_span(Coord corner, Coord tip, bool& degenerate) {
  if (tip >= corner) {
    const Coord lo = kQuarter * corner - 1;
    const Coord hi = kQuarter * tip - 3;
    if (hi < lo) {
      degenerate = true;
      return {lo, lo};
    }
    return {lo, hi};
  }
  return {kQuarter * tip + 3, kQuarter * corner + 1};
}

__extension__ using Wide = __int128;

}  // namespace

bool segments_intersect(const Segment& a, const Segment& b) {
  if (a.axis == b.axis) return a.anchor == b.anchor && a.lo <= b.hi && b.lo <= a.hi;
  return a.lo <= b.anchor && b.anchor <= a.hi && b.lo <= a.anchor && a.anchor <= b.hi;
}

Cross build_cross(const GridPath& path) {
  Cross c;
  c.owner = path.id;
  auto [hlo, hhi] = support_span(path.corner.x, path.h_tip.x, c.degenerate);
  auto [vlo, vhi] = support_span(path.corner.y, path.v_tip.y, c.degenerate);
  c.h_support = Segment{Axis::H, kQuarter * path.corner.y, hlo, hhi, path.id};
  c.v_support = Segment{Axis::V, kQuarter * path.corner.x, vlo, vhi, path.id};
  return c;
}

bool crosses_intersect(const Cross& a, const Cross& b) {
  for (const Segment* s : {&a.h_support, &a.v_support})
    for (const Segment* t : {&b.h_support, &b.v_support})
      if (segments_intersect(*s, *t)) return true;
  return false;
}

std::size_t SetSystem::path_index(PathId id) const {
  auto it = std::lower_bound(path_ids.begin(), path_ids.end(), id);
  if (it == path_ids.end() || *it != id) throw UnknownId("unknown path id " + std::to_string(id));
  return static_cast<std::size_t>(it - path_ids.begin());
}

SetSystem build_set_system(const Representation& rep) {
  if (rep.mode != Mode::VPG) throw WrongMode("set system needs a VPG representation");
  validate(rep);
  if (!is_one_string(rep)) throw NotOneString("representation is not one-string");

  std::vector<GridPath> paths = rep.paths;
  std::sort(paths.begin(), paths.end(), [](const auto& l, const auto& r) { return l.id < r.id; });

  SetSystem sys;
  std::vector<Cross> crosses;
  crosses.reserve(paths.size());
  for (const auto& p : paths) {
    sys.path_ids.push_back(p.id);
    crosses.push_back(build_cross(p));
    sys.universe.push_back(crosses.back().h_support);
    sys.universe.push_back(crosses.back().v_support);
  }
  sys.weights.assign(sys.universe.size(), 1);

  sys.sets.resize(crosses.size());
  for (std::size_t k = 0; k < crosses.size(); ++k) {
    auto& set = sys.sets[k];
    for (std::size_t e = 0; e < sys.universe.size(); ++e) {
      const bool own = e / 2 == k;
      if (own || segments_intersect(sys.universe[e], crosses[k].h_support) ||
          segments_intersect(sys.universe[e], crosses[k].v_support))
        set.push_back(e);
    }
  }
  return sys;
}

ElementSet ds_to_hs(const IntersectionGraph& g, const IdSet& ds, const SetSystem& system) {
  if (!is_dominating(g, ds)) throw NotDominating("input is not a dominating set");
  ElementSet hs;
  for (PathId id : normalize(ds)) {
    const std::size_t k = system.path_index(id);
    hs.push_back(2 * k);
    hs.push_back(2 * k + 1);
  }
  std::sort(hs.begin(), hs.end());
  return hs;
}

IdSet hs_to_ds(const ElementSet& hs, const SetSystem& system) {
  if (verify_hitting(system, hs)) throw NotHitting("input is not a hitting set");
  IdSet ds;
  for (std::size_t e : hs) ds.push_back(system.universe.at(e).owner);
  return normalize(std::move(ds));
}

std::optional<std::size_t> verify_hitting(const SetSystem& system, const ElementSet& candidate) {
  std::vector<char> chosen(system.universe.size(), 0);
  for (std::size_t e : candidate) chosen.at(e) = 1;
  for (std::size_t s = 0; s < system.sets.size(); ++s) {
    const auto& set = system.sets[s];
    if (std::none_of(set.begin(), set.end(), [&](std::size_t e) { return chosen[e]; })) return s;
  }
  return std::nullopt;
}

std::size_t net_sample_size(Ratio eps, Ratio sample_constant) {
  const double inv = static_cast<double>(eps.den) / static_cast<double>(eps.num);
  const double c = static_cast<double>(sample_constant.num) / static_cast<double>(sample_constant.den);
  return static_cast<std::size_t>(std::ceil(c * inv * std::log(inv + 2.0)));
}

std::int64_t axis_mass(const SetSystem& system, std::size_t set, Axis axis) {
  std::int64_t mass = 0;
  for (std::size_t e : system.sets.at(set))
    if (system.universe[e].axis == axis) mass += system.weights[e];
  return mass;
}

std::int64_t axis_weight(const SetSystem& system, Axis axis) {
  std::int64_t total = 0;
  for (std::size_t e = 0; e < system.universe.size(); ++e)
    if (system.universe[e].axis == axis) total += system.weights[e];
  return total;
}

ElementSet axis_net(const SetSystem& system, Axis axis, Ratio eps, const NetParams& params, Rng& rng) {
  const std::int64_t total = axis_weight(system, axis);

  // Sets that must be hit, and for each axis element the heavy sets it hits.
  std::vector<std::size_t> heavy;
  for (std::size_t s = 0; s < system.sets.size(); ++s)
    if (Wide{axis_mass(system, s, axis)} * eps.den >= Wide{eps.num} * total) heavy.push_back(s);
  if (heavy.empty()) return {};

  std::vector<std::size_t> elements;
  std::vector<std::int64_t> prefix;  // cumulative weight over `elements`
  std::int64_t running = 0;
  for (std::size_t e = 0; e < system.universe.size(); ++e)
    if (system.universe[e].axis == axis) {
      elements.push_back(e);
      running += system.weights[e];
      prefix.push_back(running);
    }

  std::vector<std::vector<std::size_t>> hits(system.universe.size());
  for (std::size_t h = 0; h < heavy.size(); ++h)
    for (std::size_t e : system.sets[heavy[h]])
      if (system.universe[e].axis == axis) hits[e].push_back(h);

  const std::size_t budget = std::max<std::size_t>(1, net_sample_size(eps, params.sample_constant));
  for (std::size_t attempt = 0; attempt <= params.max_resamples; ++attempt) {
    std::vector<char> hit(heavy.size(), 0), taken(system.universe.size(), 0);
    std::size_t remaining = heavy.size();
    ElementSet net;
    for (std::size_t draw = 0; draw < budget && remaining > 0; ++draw) {
      const auto r = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total)));
      const auto pos = std::upper_bound(prefix.begin(), prefix.end(), r) - prefix.begin();
      const std::size_t e = elements[static_cast<std::size_t>(pos)];
      if (taken[e]) continue;
      taken[e] = 1;
      net.push_back(e);
      for (std::size_t h : hits[e])
        if (!hit[h]) {
          hit[h] = 1;
          --remaining;
        }
    }
    if (remaining == 0) {
      std::sort(net.begin(), net.end());
      return net;
    }
  }
  throw NetFailure("no verified net within " + std::to_string(params.max_resamples + 1) + " attempts");
}

ElementSet axis_net(const SetSystem& system, Axis axis, Ratio eps, const NetParams& params) {
  Rng rng(params.rng_seed);
  return axis_net(system, axis, eps, params, rng);
}

ElementSet combined_net(const SetSystem& system, Ratio eps, const NetParams& params, Rng& rng) {
  const Ratio half{eps.num, eps.den * 2};
  ElementSet net = axis_net(system, Axis::H, half, params, rng);
  ElementSet v = axis_net(system, Axis::V, half, params, rng);
  net.insert(net.end(), v.begin(), v.end());
  std::sort(net.begin(), net.end());
  return net;
}

ElementSet combined_net(const SetSystem& system, Ratio eps, const NetParams& params) {
  Rng rng(params.rng_seed);
  return combined_net(system, eps, params, rng);
}

ElementSet bg_hitting_set(SetSystem system, const NetParams& params, HittingSetTrace* trace) {
  HittingSetTrace local;
  HittingSetTrace& t = trace ? *trace : local;
  t = {};
  if (system.sets.empty()) return {};

  Rng rng(params.rng_seed);
  const auto universe = static_cast<std::int64_t>(system.universe.size());

  auto net_or_whole_axis = [&](Axis axis, Ratio eps) {
    try {
      return axis_net(system, axis, eps, params, rng);
    } catch (const NetFailure&) {
      ++t.fallbacks;
      ElementSet all;
      for (std::size_t e = 0; e < system.universe.size(); ++e)
        if (system.universe[e].axis == axis) all.push_back(e);
      return all;
    }
  };

  for (std::int64_t r = 1;; r *= 2) {
    std::fill(system.weights.begin(), system.weights.end(), 1);
    const double ratio = static_cast<double>(universe) / static_cast<double>(r) + 2.0;
    const auto budget = static_cast<std::size_t>(std::ceil(4.0 * static_cast<double>(r) * std::log2(ratio)));
    const Ratio half_eps{1, 4 * r};

    for (std::size_t doublings = 0;;) {
      ++t.net_calls;
      ElementSet net = net_or_whole_axis(Axis::H, half_eps);
      ElementSet v = net_or_whole_axis(Axis::V, half_eps);
      net.insert(net.end(), v.begin(), v.end());
      std::sort(net.begin(), net.end());

      const auto miss = verify_hitting(system, net);
      if (!miss) {
        t.final_guess = r;
        return net;
      }
      std::int64_t mass = 0, total = 0;
      for (std::size_t e : system.sets[*miss]) mass += system.weights[e];
      for (std::int64_t w : system.weights) total += w;
      if (doublings >= budget || Wide{mass} * 2 * r > Wide{total}) break;
      for (std::size_t e : system.sets[*miss]) system.weights[e] *= 2;
      ++doublings;
      ++t.doublings;
    }

    if (r >= universe) {
      // Unreachable with a sound net finder: once 8r >= |U| every set is
      // heavy on some axis right after the weight reset.
      ElementSet all(system.universe.size());
      for (std::size_t e = 0; e < all.size(); ++e) all[e] = e;
      t.final_guess = r;
      return all;
    }
  }
}

IdSet approx_mds_one_string(const Representation& rep, const NetParams& params) {
  const SetSystem system = build_set_system(rep);
  IdSet ds = hs_to_ds(bg_hitting_set(system, params), system);

  // A support can meet a cross where the paths merely touch (a corner or
  // tip lying on the other path); such hits dominate nothing in the graph.
  const IntersectionGraph g = build_graph(rep);
  IdSet missing = undominated(g, ds);
  ds.insert(ds.end(), missing.begin(), missing.end());
  return normalize(std::move(ds));
}

}  // namespace b1grid
