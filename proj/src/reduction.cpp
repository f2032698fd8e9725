#include "b1grid/reduction.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "b1grid/errors.hpp"
#include "b1grid/exact.hpp"

namespace b1grid {

namespace {

constexpr std::size_t kPerVertex = 5;
constexpr Coord kBlock = 8;

std::vector<std::pair<std::size_t, std::size_t>> sorted_edges(const SimpleGraph& g) {
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  return edges;
}

void require_input(const SimpleGraph& g) {
  if (!g.well_formed()) throw PreconditionError("graph has a loop, a repeated edge, or an endpoint out of range");
  if (g.max_degree() > 3) throw DegreeTooHigh("graph has a vertex of degree " + std::to_string(g.max_degree()));
}

const char* kind_name(RoleKind k) {
  switch (k) {
    case RoleKind::Gh: return "Gh";
    case RoleKind::Gv: return "Gv";
    case RoleKind::C: return "C";
    case RoleKind::S1: return "S1";
    case RoleKind::S2: return "S2";
    case RoleKind::E1: return "E1";
    case RoleKind::E2: return "E2";
  }
  return "?";
}

// Roles in id order.
std::vector<Role> all_roles(const SimpleGraph& g) {
  std::vector<Role> roles;
  for (std::size_t i = 0; i < g.n; ++i)
    for (RoleKind k : {RoleKind::Gh, RoleKind::Gv, RoleKind::C, RoleKind::S1, RoleKind::S2})
      roles.push_back({k, i, 0});
  for (const auto& [i, j] : sorted_edges(g)) {
    roles.push_back({RoleKind::E1, i, j});
    roles.push_back({RoleKind::E2, i, j});
  }
  return roles;
}

}  // namespace

std::string to_token(const Role& role) {
  std::string s = kind_name(role.kind);
  s += "(" + std::to_string(role.i);
  if (role.kind == RoleKind::E1 || role.kind == RoleKind::E2) s += "," + std::to_string(role.j);
  return s + ")";
}

std::optional<Role> parse_role(const std::string& token) {
  static const std::regex vertex_re(R"((Gh|Gv|C|S1|S2)\((\d+)\))");
  static const std::regex edge_re(R"((E1|E2)\((\d+),(\d+)\))");
  std::smatch m;
  auto kind_of = [](const std::string& name) {
    for (RoleKind k : {RoleKind::Gh, RoleKind::Gv, RoleKind::C, RoleKind::S1, RoleKind::S2, RoleKind::E1,
                       RoleKind::E2})
      if (name == kind_name(k)) return k;
    return RoleKind::C;
  };
  try {
    if (std::regex_match(token, m, vertex_re)) return Role{kind_of(m[1]), std::stoull(m[2]), 0};
    if (std::regex_match(token, m, edge_re)) return Role{kind_of(m[1]), std::stoull(m[2]), std::stoull(m[3])};
  } catch (const std::out_of_range&) {
  }
  return std::nullopt;
}

PathId gadget_id(const SimpleGraph& g, const Role& role) {
  if (role.kind == RoleKind::E1 || role.kind == RoleKind::E2) {
    const auto edges = sorted_edges(g);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(role.i, role.j));
    if (it == edges.end() || *it != std::make_pair(role.i, role.j))
      throw UnknownId("no edge for role " + to_token(role));
    const auto e = static_cast<std::size_t>(it - edges.begin());
    return static_cast<PathId>(kPerVertex * g.n + 2 * e + (role.kind == RoleKind::E2 ? 1 : 0));
  }
  if (role.i >= g.n) throw UnknownId("no vertex for role " + to_token(role));
  return static_cast<PathId>(kPerVertex * role.i + static_cast<std::size_t>(role.kind));
}

IntersectionGraph gadget_graph(const SimpleGraph& g) {
  require_input(g);
  auto id = [&](RoleKind k, std::size_t i, std::size_t j = 0) {
    return static_cast<std::size_t>(gadget_id(g, {k, i, j}));
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < g.n; ++i) {
    const std::size_t gh = id(RoleKind::Gh, i), gv = id(RoleKind::Gv, i), c = id(RoleKind::C, i);
    const std::size_t s1 = id(RoleKind::S1, i), s2 = id(RoleKind::S2, i);
    edges.insert(edges.end(), {{gh, c}, {gv, c}, {gh, s1}, {c, s1}, {gv, s2}, {c, s2}});
  }
  for (const auto& [i, j] : sorted_edges(g))
    for (RoleKind k : {RoleKind::E1, RoleKind::E2}) {
      edges.emplace_back(id(RoleKind::Gv, i), id(k, i, j));
      edges.emplace_back(id(RoleKind::Gh, j), id(k, i, j));
    }
  return IntersectionGraph::from_edges(kPerVertex * g.n + 2 * g.edges.size(), edges);
}

ReductionInstance reduce_vc_to_mds(const SimpleGraph& g) {
  require_input(g);
  const auto n = static_cast<Coord>(g.n);

  // Vertex i sits at block position p = i + 1 on a descending diagonal. The
  // long vertical path of p runs from above its own block down past the last
  // block, and the long horizontal path of q runs from the left margin to
  // just past its own block, so the column of Gv(p) meets the row of Gh(q)
  // for every q > p. Gv columns are multiples of 8, Gh columns are 3 mod 8,
  // Gh rows are multiples of 8 and Gv rows are 4 mod 8: the long paths never
  // share an edge with each other.
  auto X = [](Coord p) { return kBlock * p; };
  auto K = [&](Coord p) { return X(p) + 3; };
  auto Y = [&](Coord p) { return kBlock * (n + 1 - p); };
  auto T = [&](Coord p) { return Y(p) + 4; };
  const Coord bottom = Y(n) - 2;
  const Coord top = T(1) + 1;
  const Coord left = kBlock - 1;
  const Coord right = K(n) + 1;

  ReductionInstance inst;
  inst.rep.mode = Mode::EPG;
  auto add = [&](const Role& role, Coord cx, Coord cy, Coord hx, Coord vy) {
    const PathId pid = gadget_id(g, role);
    inst.rep.paths.push_back(GridPath::make(pid, cx, cy, hx, vy));
    inst.labels[pid] = role;
  };

  for (std::size_t i = 0; i < g.n; ++i) {
    const auto p = static_cast<Coord>(i + 1);
    add({RoleKind::Gh, i, 0}, K(p), Y(p), left, top);
    add({RoleKind::Gv, i, 0}, X(p), T(p), right, bottom);
    add({RoleKind::C, i, 0}, X(p), Y(p), X(p) + 2, Y(p) - 2);
    add({RoleKind::S1, i, 0}, X(p) + 1, Y(p), X(p) + 2, Y(p) - 1);
    add({RoleKind::S2, i, 0}, X(p), Y(p) - 1, X(p) + 1, Y(p) - 2);
  }
  // Each edge pair sits at the crossing of column Gv(i) with row Gh(j) (E1)
  // and at the crossing of row Gv(i) with column Gh(j) (E2).
  for (const auto& [i, j] : sorted_edges(g)) {
    const auto p = static_cast<Coord>(i + 1), q = static_cast<Coord>(j + 1);
    add({RoleKind::E1, i, j}, X(p), Y(q), X(p) + 1, Y(q) - 1);
    add({RoleKind::E2, i, j}, K(q), T(p), K(q) - 1, T(p) + 1);
  }
  std::sort(inst.rep.paths.begin(), inst.rep.paths.end(),
            [](const GridPath& a, const GridPath& b) { return a.id < b.id; });

  if (!weak_general_position(inst.rep) || !(build_graph(inst.rep) == gadget_graph(g)))
    throw LayoutFailure("emitted paths do not realize the gadget graph");
  return inst;
}

std::vector<std::size_t> map_back(const IdSet& d, const ReductionInstance& inst, const SimpleGraph& g) {
  const IntersectionGraph graph = build_graph(inst.rep);
  if (!is_dominating(graph, d)) throw NotDominating("input is not a dominating set of the instance");

  std::set<PathId> normalized;
  std::map<std::pair<std::size_t, std::size_t>, int> edge_paths;
  for (PathId pid : d) {
    auto it = inst.labels.find(pid);
    if (it == inst.labels.end()) throw UnknownId("path " + std::to_string(pid) + " has no label");
    const Role& r = it->second;
    switch (r.kind) {
      case RoleKind::Gh:
      case RoleKind::Gv:
      case RoleKind::C: normalized.insert(gadget_id(g, r)); break;
      case RoleKind::S1:
      case RoleKind::S2: normalized.insert(gadget_id(g, {RoleKind::C, r.i, 0})); break;
      case RoleKind::E1:
      case RoleKind::E2: ++edge_paths[{r.i, r.j}]; break;
    }
  }
  for (const auto& [edge, count] : edge_paths) {
    normalized.insert(gadget_id(g, {RoleKind::Gv, edge.first, 0}));
    if (count >= 2) normalized.insert(gadget_id(g, {RoleKind::Gh, edge.second, 0}));
  }

  std::vector<std::size_t> cover;
  for (std::size_t i = 0; i < g.n; ++i)
    if (normalized.count(gadget_id(g, {RoleKind::Gh, i, 0})) || normalized.count(gadget_id(g, {RoleKind::Gv, i, 0})))
      cover.push_back(i);
  return cover;
}

bool verify_reduction(const ReductionInstance& inst, const SimpleGraph& g, std::string* diagnostic) {
  auto fail = [&](const std::string& why) {
    if (diagnostic) *diagnostic = why;
    return false;
  };
  try {
    require_input(g);
  } catch (const Error& e) {
    return fail(e.what());
  }

  const std::vector<Role> roles = all_roles(g);
  if (inst.rep.paths.size() != roles.size() || inst.labels.size() != roles.size())
    return fail("expected " + std::to_string(roles.size()) + " labelled paths, found " +
                std::to_string(inst.rep.paths.size()) + " paths and " + std::to_string(inst.labels.size()) +
                " labels");

  // Relabel every path by its role's gadget id; the roles must be exactly
  // the gadget's roles.
  std::map<PathId, PathId> to_gadget;
  std::set<PathId> hit;
  for (const auto& p : inst.rep.paths) {
    auto it = inst.labels.find(p.id);
    if (it == inst.labels.end()) return fail("path " + std::to_string(p.id) + " has no label");
    PathId target;
    try {
      target = gadget_id(g, it->second);
    } catch (const Error&) {
      return fail("label " + to_token(it->second) + " does not belong to the input graph");
    }
    if (!hit.insert(target).second) return fail("label " + to_token(it->second) + " used twice");
    to_gadget[p.id] = target;
  }

  for (const auto& p : inst.rep.paths) {
    const PathType t = classify_type(p);
    if (t != PathType::UL && t != PathType::LR)
      return fail("path " + std::to_string(p.id) + " has type " + std::string(to_string(t)));
  }
  if (!weak_general_position(inst.rep)) return fail("two paths share a corner");

  IntersectionGraph built;
  try {
    built = build_graph(inst.rep);
  } catch (const Error& e) {
    return fail(e.what());
  }
  const IntersectionGraph target = gadget_graph(g);
  std::set<std::pair<PathId, PathId>> have, want;
  for (std::size_t u = 0; u < built.size(); ++u)
    for (std::size_t v : built.adjacency[u]) have.emplace(to_gadget[built.ids[u]], to_gadget[built.ids[v]]);
  for (std::size_t u = 0; u < target.size(); ++u)
    for (std::size_t v : target.adjacency[u]) want.emplace(target.ids[u], target.ids[v]);
  if (have != want) {
    for (const auto& [a, b] : want)
      if (!have.count({a, b}))
        return fail("missing adjacency " + to_token(roles[static_cast<std::size_t>(a)]) + " - " +
                    to_token(roles[static_cast<std::size_t>(b)]));
    for (const auto& [a, b] : have)
      if (!want.count({a, b}))
        return fail("extra adjacency " + to_token(roles[static_cast<std::size_t>(a)]) + " - " +
                    to_token(roles[static_cast<std::size_t>(b)]));
  }

  if (roles.size() <= kVerifyExactLimit) {
    const std::size_t mds = brute_mds(built, caps::kReductionMds).size();
    const std::size_t vc = brute_vc(g).size();
    if (mds != g.n + vc)
      return fail("optimum " + std::to_string(mds) + " differs from n + cover = " + std::to_string(g.n + vc));
    const auto deg = g.degrees();
    const bool no_isolated = std::none_of(deg.begin(), deg.end(), [](std::size_t x) { return x == 0; });
    if (no_isolated && mds > 5 * vc)
      return fail("optimum " + std::to_string(mds) + " exceeds 5 x cover " + std::to_string(vc));
  }
  if (diagnostic) diagnostic->clear();
  return true;
}

}  // namespace b1grid
