#include "b1grid/exact.hpp"

#include <algorithm>
#include <string>

#include "b1grid/bitset.hpp"
#include "b1grid/errors.hpp"

namespace b1grid {

namespace {

void require_cap(std::size_t size, std::size_t cap, const char* what) {
  if (size > cap)
    throw TooLarge(std::string(what) + " of size " + std::to_string(size) + " exceeds cap " + std::to_string(cap));
}

std::vector<Bits> neighbor_bits(const IntersectionGraph& g) {
  std::vector<Bits> nb(g.size(), Bits(g.size()));
  for (std::size_t v = 0; v < g.size(); ++v)
    for (std::size_t u : g.adjacency[v]) nb[v].set(u);
  return nb;
}

class MisSearch {
 public:
  explicit MisSearch(const IntersectionGraph& g) : nb_(neighbor_bits(g)), n_(g.size()) {}

  std::vector<std::size_t> run() {
    Bits cand(n_);
    cand.set_all();
    std::vector<std::size_t> cur;
    search(cand, cur);
    return best_;
  }

 private:
  void search(Bits cand, std::vector<std::size_t>& cur) {
    const std::size_t mark = cur.size();
    // Vertices of degree <= 1 in the candidate graph are always safe to take.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t v = cand.first(); v < n_; v = cand.next(v)) {
        if (nb_[v].count_and(cand) <= 1) {
          cur.push_back(v);
          cand.reset(v);
          cand.subtract(nb_[v]);
          changed = true;
        }
      }
    }

    const std::size_t left = cand.count();
    if (left == 0) {
      if (cur.size() > best_.size()) best_ = cur;
    } else if (cur.size() + left > best_.size()) {
      std::size_t pivot = n_, pivot_deg = 0;
      for (std::size_t v = cand.first(); v < n_; v = cand.next(v)) {
        const std::size_t d = nb_[v].count_and(cand);
        if (pivot == n_ || d > pivot_deg) pivot = v, pivot_deg = d;
      }
      Bits take = cand;
      take.reset(pivot);
      take.subtract(nb_[pivot]);
      cur.push_back(pivot);
      search(take, cur);
      cur.pop_back();

      cand.reset(pivot);
      search(cand, cur);
    }
    cur.resize(mark);
  }

  std::vector<Bits> nb_;
  std::size_t n_;
  std::vector<std::size_t> best_;
};

class HittingSearch {
 public:
  HittingSearch(std::size_t universe, const std::vector<std::vector<std::size_t>>& sets,
                const std::vector<char>& allowed)
      : u_(universe), m_(sets.size()), members_(sets.size(), Bits(universe)), hits_(universe, Bits(sets.size())),
        usable_(universe) {
    for (std::size_t e = 0; e < u_; ++e)
      if (allowed.empty() || allowed[e]) usable_.set(e);
    for (std::size_t s = 0; s < m_; ++s)
      for (std::size_t e : sets[s]) {
        members_[s].set(e);
        hits_[e].set(s);
      }
  }

  std::optional<std::vector<std::size_t>> run() {
    for (const auto& set : members_)
      if (!set.intersects(usable_)) return std::nullopt;
    best_ = greedy();
    Bits unhit(m_);
    unhit.set_all();
    std::vector<std::size_t> cur;
    search(unhit, usable_, cur);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  std::vector<std::size_t> greedy() const {
    Bits unhit(m_);
    unhit.set_all();
    std::vector<std::size_t> pick;
    while (unhit.any()) {
      std::size_t best = u_, gain = 0;
      for (std::size_t e = usable_.first(); e < u_; e = usable_.next(e)) {
        const std::size_t g = hits_[e].count_and(unhit);
        if (g > gain) best = e, gain = g;
      }
      pick.push_back(best);
      unhit.subtract(hits_[best]);
    }
    return pick;
  }

  // Sets pairwise sharing no usable element each need their own hitter.
  std::size_t packing_bound(const Bits& unhit, const Bits& usable) const {
    Bits used(u_);
    std::size_t bound = 0;
    for (std::size_t s = unhit.first(); s < m_; s = unhit.next(s)) {
      Bits c = members_[s] & usable;
      if (!c.intersects(used)) {
        used |= c;
        ++bound;
      }
    }
    return bound;
  }

  void search(const Bits& unhit, Bits usable, std::vector<std::size_t>& cur) {
    if (unhit.none()) {
      if (cur.size() < best_.size()) best_ = cur;
      return;
    }
    if (cur.size() + packing_bound(unhit, usable) >= best_.size()) return;

    std::size_t branch = m_, fewest = 0;
    for (std::size_t s = unhit.first(); s < m_; s = unhit.next(s)) {
      const std::size_t c = members_[s].count_and(usable);
      if (c == 0) return;
      if (branch == m_ || c < fewest) branch = s, fewest = c;
    }

    std::vector<std::pair<std::size_t, std::size_t>> order;  // (-gain, element)
    const Bits options = members_[branch] & usable;
    for (std::size_t e = options.first(); e < u_; e = options.next(e))
      order.emplace_back(hits_[e].count_and(unhit), e);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    for (const auto& [gain, e] : order) {
      Bits rest = unhit;
      rest.subtract(hits_[e]);
      cur.push_back(e);
      search(rest, usable, cur);
      cur.pop_back();
      // Later siblings never use an element already tried here.
      usable.reset(e);
    }
  }

  std::size_t u_, m_;
  std::vector<Bits> members_;
  std::vector<Bits> hits_;
  Bits usable_;
  std::vector<std::size_t> best_;
};

}  // namespace

IdSet max_independent_set(const IntersectionGraph& g) {
  IdSet out = normalize(g.ids_of(MisSearch(g).run()));
  if (!is_independent(g, out)) throw Error("independent set search returned a dependent set");
  return out;
}

IdSet brute_mis(const IntersectionGraph& g, std::size_t cap) {
  require_cap(g.size(), cap, "graph");
  return max_independent_set(g);
}

std::optional<IdSet> min_dominating_set(const IntersectionGraph& g, const IdSet& forbidden) {
  std::vector<std::vector<std::size_t>> closed(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    closed[v] = g.adjacency[v];
    closed[v].push_back(v);
  }
  std::vector<char> allowed(g.size(), 1);
  for (PathId id : forbidden)
    if (auto k = g.index_of(id)) allowed[*k] = 0;

  auto pick = min_hitting_set(g.size(), closed, allowed);
  if (!pick) return std::nullopt;
  IdSet out = normalize(g.ids_of(*pick));
  if (!is_dominating(g, out)) throw Error("dominating set search returned a non-dominating set");
  return out;
}

IdSet brute_mds(const IntersectionGraph& g, std::size_t cap) {
  require_cap(g.size(), cap, "graph");
  return *min_dominating_set(g);
}

std::optional<std::vector<std::size_t>> min_hitting_set(std::size_t universe,
                                                        const std::vector<std::vector<std::size_t>>& sets,
                                                        const std::vector<char>& allowed) {
  return HittingSearch(universe, sets, allowed).run();
}

ElementSet brute_hs(const SetSystem& system) {
  require_cap(system.universe.size(), caps::kHsUniverse, "universe");
  require_cap(system.sets.size(), caps::kHsSets, "set family");
  ElementSet out = *min_hitting_set(system.universe.size(), system.sets);
  if (verify_hitting(system, out)) throw Error("hitting set search missed a set");
  return out;
}

std::vector<std::size_t> brute_vc(const SimpleGraph& g, std::size_t cap) {
  require_cap(g.n, cap, "graph");
  const IntersectionGraph ig = IntersectionGraph::from_edges(g.n, g.edges);
  const IdSet independent = max_independent_set(ig);
  std::vector<std::size_t> cover;
  for (std::size_t v = 0; v < g.n; ++v)
    if (!std::binary_search(independent.begin(), independent.end(), static_cast<PathId>(v))) cover.push_back(v);
  if (!is_vertex_cover(g, cover)) throw Error("vertex cover search returned a non-cover");
  return cover;
}

}  // namespace b1grid
