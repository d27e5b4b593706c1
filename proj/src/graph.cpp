#include "zdg/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zdg {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : adjacency_(vertex_count), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != vertex_count)
    throw std::invalid_argument("label count does not match vertex count");
  for (auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  if (vertex_count <= kDenseLimit) {
    words_per_row_ = (vertex_count + 63) / 64;
    bits_.assign(words_per_row_ * vertex_count, 0);
    for (auto [u, v] : edges_) {
      bits_[u * words_per_row_ + v / 64] |= std::uint64_t{1} << (v % 64);
      bits_[v * words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!bits_.empty()) return (bits_[u * words_per_row_ + v / 64] >> (v % 64)) & 1u;
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::string Graph::label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

Graph Graph::induced_subgraph(std::span<const Vertex> vertices) const {
  std::vector<std::int64_t> position(vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) position[vertices[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (has_labels()) labels.push_back(labels_[vertices[i]]);
    for (Vertex w : adjacency_[vertices[i]])
      if (position[w] > static_cast<std::int64_t>(i))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(position[w]));
  }
  return Graph(vertices.size(), std::move(edges), std::move(labels));
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  return Graph(vertex_count(), edges_, std::move(labels));
}

std::uint32_t DistanceMatrix::max_finite() const {
  std::uint32_t best = 0;
  for (auto d : dist_)
    if (d != kInf) best = std::max(best, d);
  return best;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix dm(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::size_t head = 0, tail = 0;
    dm.at(s, s) = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      const std::uint32_t du = dm(s, u);
      for (Vertex w : g.neighbors(u)) {
        if (dm(s, w) != DistanceMatrix::kInf) continue;
        dm.at(s, w) = du + 1;
        queue[tail++] = w;
      }
    }
  }
  return dm;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dm = all_pairs_distances(g);
  for (auto d : dm.row(0))
    if (d == DistanceMatrix::kInf) return false;
  return true;
}

Graph standard_graph(StandardKind kind, std::size_t n) {
  if (n < 1) throw std::invalid_argument("standard_graph: n must be >= 1");
  std::vector<Edge> edges;
  switch (kind) {
    case StandardKind::Complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case StandardKind::Empty:
      break;
    case StandardKind::Path:
      for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
      break;
    case StandardKind::Cycle:
      if (n < 3) throw std::invalid_argument("standard_graph: cycle needs n >= 3");
      for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, static_cast<Vertex>((u + 1) % n));
      break;
  }
  return Graph(n, std::move(edges));
}

std::vector<Vertex> join_offsets(const JoinSpec& spec) {
  std::vector<Vertex> offsets(spec.parts.size() + 1, 0);
  for (std::size_t i = 0; i < spec.parts.size(); ++i)
    offsets[i + 1] = offsets[i] + static_cast<Vertex>(spec.parts[i].vertex_count());
  return offsets;
}

Graph generalized_join(const JoinSpec& spec) {
  if (spec.parts.size() != spec.base.vertex_count())
    throw std::invalid_argument("generalized_join: need one part per base vertex");
  for (const Graph& part : spec.parts)
    if (part.vertex_count() == 0) throw std::invalid_argument("generalized_join: empty part");
  const auto offsets = join_offsets(spec);
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < spec.parts.size(); ++x)
    for (auto [a, b] : spec.parts[x].edges()) edges.emplace_back(offsets[x] + a, offsets[x] + b);
  for (auto [x, y] : spec.base.edges())
    for (Vertex a = offsets[x]; a < offsets[x + 1]; ++a)
      for (Vertex b = offsets[y]; b < offsets[y + 1]; ++b) edges.emplace_back(a, b);

  std::vector<std::string> labels;
  if (spec.base.has_labels() || std::any_of(spec.parts.begin(), spec.parts.end(),
                                            [](const Graph& p) { return p.has_labels(); })) {
    for (std::size_t x = 0; x < spec.parts.size(); ++x)
      for (Vertex y = 0; y < spec.parts[x].vertex_count(); ++y)
        labels.push_back(spec.base.label(static_cast<Vertex>(x)) + ":" + spec.parts[x].label(y));
  }
  return Graph(offsets.back(), std::move(edges), std::move(labels));
}

bool verify_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> map) {
  const std::size_t n = g.vertex_count();
  if (map.size() != n || h.vertex_count() != n)
    throw std::invalid_argument("verify_isomorphism: map is not a bijection");
  std::vector<bool> hit(n, false);
  for (Vertex v : map) {
    if (v >= n || hit[v]) throw std::invalid_argument("verify_isomorphism: map is not a bijection");
    hit[v] = true;
  }
  if (g.edge_count() != h.edge_count()) return false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
  return true;
}

bool are_twins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  std::size_t i = 0, j = 0;
  while (true) {
    while (i < nu.size() && nu[i] == v) ++i;
    while (j < nv.size() && nv[j] == u) ++j;
    if (i == nu.size() || j == nv.size()) return i == nu.size() && j == nv.size();
    if (nu[i] != nv[j]) return false;
    ++i;
    ++j;
  }
}

TwinPartition twin_classes(const Graph& g) {
  // Twins are either nonadjacent with N(u) = N(v) or adjacent with
  // N[u] = N[v]; no vertex has twins of both kinds, so bucketing by open and
  // closed neighborhoods yields the classes directly.
  const std::size_t n = g.vertex_count();
  std::map<std::vector<Vertex>, std::vector<Vertex>> open, closed;
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    open[std::vector<Vertex>(nb.begin(), nb.end())].push_back(v);
    std::vector<Vertex> cl(nb.begin(), nb.end());
    cl.insert(std::upper_bound(cl.begin(), cl.end(), v), v);
    closed[std::move(cl)].push_back(v);
  }
  std::vector<std::int64_t> owner(n, -1);
  std::vector<VertexSet> classes;
  auto absorb = [&](const std::vector<Vertex>& bucket) {
    if (bucket.size() < 2) return;
    classes.push_back(bucket);
    for (Vertex v : bucket) owner[v] = static_cast<std::int64_t>(classes.size() - 1);
  };
  for (const auto& [key, bucket] : open) absorb(bucket);
  for (const auto& [key, bucket] : closed) absorb(bucket);
  for (Vertex v = 0; v < n; ++v)
    if (owner[v] < 0) classes.push_back({v});
  std::sort(classes.begin(), classes.end(), [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
  return TwinPartition{std::move(classes)};
}

Graph boutin_gap_graph(std::size_t k) {
  if (k < 1) throw std::invalid_argument("boutin_gap_graph: k must be >= 1");
  const std::size_t path = 2 * k + 1;
  const Vertex hub = static_cast<Vertex>(path);
  const Vertex pendant = hub + 1;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex i = 0; i < path; ++i) {
    labels.push_back("v" + std::to_string(static_cast<long>(i) - static_cast<long>(k)));
    if (i + 1 < path) edges.emplace_back(i, i + 1);
    edges.emplace_back(i, hub);
  }
  edges.emplace_back(gap_path_vertex(k, 0), pendant);
  labels.push_back("u");
  labels.push_back("w");
  return Graph(path + 2, std::move(edges), std::move(labels));
}

}  // namespace zdg
