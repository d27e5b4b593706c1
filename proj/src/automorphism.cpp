#include "zdg/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

namespace zdg {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

// Ordered partition in the nauty style: cells are contiguous ranges of lab.
struct Partition {
  std::vector<Vertex> lab;
  std::vector<std::uint32_t> pos;    // vertex -> index in lab
  std::vector<std::uint32_t> start;  // vertex -> first index of its cell
  std::vector<std::uint32_t> end;    // cell start -> one past its last index
  std::size_t cells = 0;

  bool discrete() const { return cells == lab.size(); }
  bool is_cell_start(std::uint32_t s) const { return s < lab.size() && start[lab[s]] == s; }
};

class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g), count_(g.vertex_count(), 0), cell_marked_(g.vertex_count(), 0), in_queue_(g.vertex_count(), 0) {}

  // Fixed vertices become leading singletons in the given order; the rest
  // are grouped by degree.
  Partition initial(std::span<const Vertex> fixed, std::uint64_t& trace) {
    const std::size_t n = g_.vertex_count();
    Partition p;
    p.pos.resize(n);
    p.start.resize(n);
    p.end.assign(n, 0);
    std::vector<bool> is_fixed(n, false);
    for (Vertex v : fixed) {
      if (v >= n) throw std::out_of_range("fixed vertex out of range");
      if (is_fixed[v]) continue;
      is_fixed[v] = true;
      p.lab.push_back(v);
    }
    const std::size_t fixed_count = p.lab.size();
    for (Vertex v = 0; v < n; ++v)
      if (!is_fixed[v]) p.lab.push_back(v);
    std::stable_sort(p.lab.begin() + static_cast<std::ptrdiff_t>(fixed_count), p.lab.end(),
                     [&](Vertex a, Vertex b) { return g_.degree(a) < g_.degree(b); });
    std::vector<std::uint32_t> starts;
    for (std::uint32_t i = 0; i < n; ++i) {
      const bool new_cell = i < fixed_count + 1 || i == 0 ||
                            g_.degree(p.lab[i]) != g_.degree(p.lab[i - 1]);
      if (new_cell) starts.push_back(i);
    }
    for (std::size_t c = 0; c < starts.size(); ++c) {
      const std::uint32_t s = starts[c];
      const std::uint32_t e = c + 1 < starts.size() ? starts[c + 1] : static_cast<std::uint32_t>(n);
      p.end[s] = e;
      for (std::uint32_t i = s; i < e; ++i) {
        p.start[p.lab[i]] = s;
        p.pos[p.lab[i]] = i;
      }
    }
    p.cells = starts.size();
    trace = refine(p, starts);
    for (std::uint32_t s : starts) trace = mix(trace, p.end[s] - s);
    return p;
  }

  std::uint64_t individualize(Partition& p, Vertex v) {
    const std::uint32_t s = p.start[v];
    const std::uint32_t e = p.end[s];
    const std::uint32_t at = p.pos[v];
    const Vertex first = p.lab[s];
    p.lab[s] = v;
    p.lab[at] = first;
    p.pos[v] = s;
    p.pos[first] = at;
    p.end[s] = s + 1;
    p.end[s + 1] = e;
    for (std::uint32_t i = s + 1; i < e; ++i) p.start[p.lab[i]] = s + 1;
    ++p.cells;
    return mix(refine(p, {s}), s);
  }

  std::uint64_t refine(Partition& p, std::vector<std::uint32_t> splitters) {
    std::deque<std::uint32_t> queue;
    for (std::uint32_t s : splitters) {
      queue.push_back(s);
      in_queue_[s] = 1;
    }
    std::uint64_t trace = 0x2545f4914f6cdd1dULL;
    std::vector<Vertex> members;
    while (!queue.empty()) {
      const std::uint32_t w = queue.front();
      queue.pop_front();
      in_queue_[w] = 0;
      if (p.discrete()) continue;
      members.assign(p.lab.begin() + w, p.lab.begin() + p.end[w]);
      touched_.clear();
      for (Vertex m : members)
        for (Vertex u : g_.neighbors(m))
          if (count_[u]++ == 0) touched_.push_back(u);
      touched_cells_.clear();
      for (Vertex u : touched_) {
        const std::uint32_t s = p.start[u];
        if (!cell_marked_[s]) {
          cell_marked_[s] = 1;
          touched_cells_.push_back(s);
        }
      }
      std::sort(touched_cells_.begin(), touched_cells_.end());
      trace = mix(trace, w);
      trace = mix(trace, members.size());
      for (std::uint32_t s : touched_cells_) {
        cell_marked_[s] = 0;
        const std::uint32_t e = p.end[s];
        auto first = p.lab.begin() + s;
        auto last = p.lab.begin() + e;
        auto [lo, hi] = std::minmax_element(first, last, [&](Vertex a, Vertex b) { return count_[a] < count_[b]; });
        trace = mix(trace, s);
        if (count_[*lo] == count_[*hi]) {
          trace = mix(trace, count_[*lo]);
          continue;
        }
        std::stable_sort(first, last, [&](Vertex a, Vertex b) { return count_[a] < count_[b]; });
        std::uint32_t fs = s;
        for (std::uint32_t i = s; i <= e; ++i) {
          if (i < e && (i == s || count_[p.lab[i]] == count_[p.lab[i - 1]])) continue;
          // Close fragment [fs, i).
          p.end[fs] = i;
          for (std::uint32_t j = fs; j < i; ++j) {
            p.start[p.lab[j]] = fs;
            p.pos[p.lab[j]] = j;
          }
          trace = mix(trace, count_[p.lab[fs]]);
          trace = mix(trace, i - fs);
          if (fs != s) ++p.cells;
          if (!in_queue_[fs]) {
            in_queue_[fs] = 1;
            queue.push_back(fs);
          }
          fs = i;
        }
      }
      for (Vertex u : touched_) count_[u] = 0;
    }
    return trace;
  }

 private:
  const Graph& g_;
  std::vector<std::uint32_t> count_;
  std::vector<char> cell_marked_;
  std::vector<char> in_queue_;
  std::vector<Vertex> touched_;
  std::vector<std::uint32_t> touched_cells_;
};

struct LevelInfo {
  std::uint32_t target = 0;       // start of the target cell
  std::uint32_t target_size = 0;
  Vertex chosen = 0;              // vertex individualized on the first path
  std::uint64_t trace_after = 0;  // trace of the refinement after individualizing
  std::size_t cells_after = 0;
};

std::uint32_t choose_target(const Partition& p) {
  std::uint32_t best = 0, best_size = 0;
  for (std::uint32_t s = 0; s < p.lab.size(); s = p.end[s]) {
    const std::uint32_t size = p.end[s] - s;
    if (size > 1 && (best_size == 0 || size < best_size)) {
      best = s;
      best_size = size;
    }
  }
  return best;
}

// Individualization-refinement search tree rooted at the (optionally
// pre-individualized) equitable partition of the graph.
class Search {
 public:
  Search(const Graph& g, std::span<const Vertex> fixed) : g_(g), refiner_(g), fixed_(fixed.begin(), fixed.end()) {
    if (g.vertex_count() > kMaxSearchVertices) throw std::invalid_argument("automorphism search: vertex bound exceeded");
    Partition p = refiner_.initial(fixed_, root_trace_);
    root_cells_ = p.cells;
    while (!p.discrete()) {
      LevelInfo info;
      info.target = choose_target(p);
      info.target_size = p.end[info.target] - info.target;
      info.chosen = p.lab[info.target];
      info.trace_after = refiner_.individualize(p, info.chosen);
      info.cells_after = p.cells;
      levels_.push_back(info);
    }
    first_leaf_ = p.lab;
  }

  std::size_t depth() const { return levels_.size(); }
  const LevelInfo& level(std::size_t i) const { return levels_[i]; }

  VertexSet base() const {
    VertexSet out;
    for (const auto& l : levels_) out.push_back(l.chosen);
    return out;
  }

  Partition node_at(std::size_t depth) {
    std::uint64_t trace = 0;
    Partition p = refiner_.initial(fixed_, trace);
    for (std::size_t i = 0; i < depth; ++i) refiner_.individualize(p, levels_[i].chosen);
    return p;
  }

  static VertexSet cell_members(const Partition& p, std::uint32_t s) {
    VertexSet out(p.lab.begin() + s, p.lab.begin() + p.end[s]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // An automorphism fixing the first-path vertices above `depth` and mapping
  // the chosen vertex at `depth` to v, if one exists.
  std::optional<Permutation> find_mapping(const Partition& node, std::size_t depth, Vertex v) {
    Partition q = node;
    if (!descend(q, depth, v)) return std::nullopt;
    return dfs(q, depth + 1);
  }

 private:
  bool descend(Partition& q, std::size_t depth, Vertex v) {
    const LevelInfo& info = levels_[depth];
    if (!q.is_cell_start(info.target) || q.end[info.target] - info.target != info.target_size) return false;
    if (q.start[v] != info.target) return false;
    const std::uint64_t trace = refiner_.individualize(q, v);
    return trace == info.trace_after && q.cells == info.cells_after;
  }

  std::optional<Permutation> dfs(Partition& p, std::size_t depth) {
    if (depth == levels_.size()) {
      if (!p.discrete()) return std::nullopt;
      std::vector<Vertex> image(p.lab.size());
      for (std::size_t i = 0; i < p.lab.size(); ++i) image[first_leaf_[i]] = p.lab[i];
      Permutation candidate(std::move(image));
      if (is_automorphism(g_, candidate)) return candidate;
      return std::nullopt;
    }
    const LevelInfo& info = levels_[depth];
    if (!p.is_cell_start(info.target) || p.end[info.target] - info.target != info.target_size) return std::nullopt;
    for (Vertex x : cell_members(p, info.target)) {
      Partition q = p;
      if (!descend(q, depth, x)) continue;
      if (auto found = dfs(q, depth + 1)) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
  Refiner refiner_;
  VertexSet fixed_;
  std::uint64_t root_trace_ = 0;
  std::size_t root_cells_ = 0;
  std::vector<LevelInfo> levels_;
  std::vector<Vertex> first_leaf_;
};

VertexSet orbit_of(Vertex v, const std::vector<Permutation>& gens, std::size_t n) {
  std::vector<bool> seen(n, false);
  VertexSet orbit{v};
  seen[v] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const auto& g : gens) {
      const Vertex w = g[orbit[head]];
      if (!seen[w]) {
        seen[w] = true;
        orbit.push_back(w);
      }
    }
  return orbit;
}

}  // namespace

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p[u], p[v])) return false;
  return true;
}

AutGroup automorphism_group(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Search search(g, {});
  AutGroup out;
  out.search_base = search.base();
  for (std::size_t i = search.depth(); i-- > 0;) {
    const LevelInfo& info = search.level(i);
    const Partition node = search.node_at(i);
    std::vector<bool> covered(n, false);
    auto cover = [&](Vertex v) {
      for (Vertex w : orbit_of(v, out.generators, n)) covered[w] = true;
    };
    cover(info.chosen);
    std::vector<bool> rejected(n, false);
    for (Vertex v : Search::cell_members(node, info.target)) {
      if (covered[v] || rejected[v]) continue;
      if (auto gamma = search.find_mapping(node, i, v)) {
        out.generators.push_back(std::move(*gamma));
        cover(info.chosen);
      } else {
        for (Vertex w : orbit_of(v, out.generators, n)) rejected[w] = true;
      }
    }
    out.search_order *= orbit_of(info.chosen, out.generators, n).size();
  }
  out.orbits = orbit_partition(n, out.generators);
  out.order = StabilizerChain(n, out.generators).order();
  return out;
}

bool has_nontrivial_fixing_automorphism(const Graph& g, std::span<const Vertex> fixed) {
  for (Vertex v : fixed)
    if (v >= g.vertex_count()) throw std::out_of_range("fixed vertex out of range");
  Search search(g, fixed);
  for (std::size_t i = search.depth(); i-- > 0;) {
    const LevelInfo& info = search.level(i);
    const Partition node = search.node_at(i);
    for (Vertex v : Search::cell_members(node, info.target)) {
      if (v == info.chosen) continue;
      if (search.find_mapping(node, i, v)) return true;
    }
  }
  return false;
}

const std::vector<VertexSet>& orbits(const AutGroup& group) { return group.orbits; }

VertexSet search_base(const Graph& g, std::span<const Vertex> fixed) { return Search(g, fixed).base(); }

}  // namespace zdg
