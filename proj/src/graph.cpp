#include "b1grid/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "b1grid/errors.hpp"

namespace b1grid {

std::size_t IntersectionGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency) twice += row.size();
  return twice / 2;
}

bool IntersectionGraph::has_edge(std::size_t u, std::size_t v) const {
  const auto& row = adjacency.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::optional<std::size_t> IntersectionGraph::index_of(PathId id) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids.begin());
}

std::size_t IntersectionGraph::require_index(PathId id) const {
  auto idx = index_of(id);
  if (!idx) throw UnknownId("unknown path id " + std::to_string(id));
  return *idx;
}

std::vector<std::size_t> IntersectionGraph::indices_of(const IdSet& set) const {
  std::vector<std::size_t> out;
  out.reserve(set.size());
  for (PathId id : set) out.push_back(require_index(id));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IdSet IntersectionGraph::ids_of(const std::vector<std::size_t>& indices) const {
  IdSet out;
  out.reserve(indices.size());
  for (std::size_t k : indices) out.push_back(ids.at(k));
  return normalize(std::move(out));
}

IntersectionGraph IntersectionGraph::from_edges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  IntersectionGraph g;
  g.ids.resize(n);
  for (std::size_t k = 0; k < n; ++k) g.ids[k] = static_cast<PathId>(k);
  g.adjacency.assign(n, {});
  for (auto [u, v] : edges) {
    if (u == v) continue;
    g.adjacency.at(u).push_back(v);
    g.adjacency.at(v).push_back(u);
  }
  for (auto& row : g.adjacency) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return g;
}

IdSet normalize(IdSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

bool is_independent(const IntersectionGraph& g, const IdSet& set) {
  auto idx = g.indices_of(set);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (g.has_edge(idx[a], idx[b])) return false;
  return true;
}

IdSet undominated(const IntersectionGraph& g, const IdSet& set) {
  std::vector<char> covered(g.size(), 0);
  for (std::size_t k : g.indices_of(set)) {
    covered[k] = 1;
    for (std::size_t w : g.adjacency[k]) covered[w] = 1;
  }
  IdSet out;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (!covered[k]) out.push_back(g.ids[k]);
  return out;
}

bool is_dominating(const IntersectionGraph& g, const IdSet& set) {
  return undominated(g, set).empty();
}

IntersectionGraph induced_subgraph(const IntersectionGraph& g, const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::ptrdiff_t> remap(g.size(), -1);
  for (std::size_t k = 0; k < sorted.size(); ++k) remap[sorted[k]] = static_cast<std::ptrdiff_t>(k);

  IntersectionGraph sub;
  sub.ids.reserve(sorted.size());
  sub.adjacency.assign(sorted.size(), {});
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    sub.ids.push_back(g.ids[sorted[k]]);
    for (std::size_t w : g.adjacency[sorted[k]])
      if (remap[w] >= 0) sub.adjacency[k].push_back(static_cast<std::size_t>(remap[w]));
  }
  return sub;
}

std::vector<std::size_t> SimpleGraph::degrees() const {
  std::vector<std::size_t> deg(n, 0);
  for (auto [i, j] : edges) {
    ++deg.at(i);
    ++deg.at(j);
  }
  return deg;
}

std::size_t SimpleGraph::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool SimpleGraph::well_formed() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto e : edges) {
    if (e.first >= e.second || e.second >= n) return false;
    if (!seen.insert(e).second) return false;
  }
  return true;
}

bool is_vertex_cover(const SimpleGraph& g, const std::vector<std::size_t>& cover) {
  std::vector<char> in(g.n, 0);
  for (std::size_t v : cover) {
    if (v >= g.n) return false;
    in[v] = 1;
  }
  for (auto [i, j] : g.edges)
    if (!in[i] && !in[j]) return false;
  return true;
}

}  // namespace b1grid
