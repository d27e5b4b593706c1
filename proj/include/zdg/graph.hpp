#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zdg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

/// Largest vertex count for which a dense adjacency bit matrix is kept.
inline constexpr std::size_t kDenseLimit = 1u << 12;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Edges may be given in any order and orientation; duplicates are merged.
  /// Self-loops and out-of-range endpoints throw std::invalid_argument.
  Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  /// Sorted, u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Stored label, or the decimal vertex id when unlabeled.
  std::string label(Vertex v) const;

  Graph induced_subgraph(std::span<const Vertex> vertices) const;
  Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> bits_;  // dense rows when vertex_count <= kDenseLimit
  std::size_t words_per_row_ = 0;
};

class DistanceMatrix {
 public:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, kInf) {}

  std::size_t size() const { return n_; }
  std::uint32_t operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  std::uint32_t& at(Vertex u, Vertex v) { return dist_[u * n_ + v]; }
  std::span<const std::uint32_t> row(Vertex u) const { return {dist_.data() + u * n_, n_}; }
  /// Largest finite entry.
  std::uint32_t max_finite() const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> dist_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

enum class StandardKind { Complete, Empty, Path, Cycle };

Graph standard_graph(StandardKind kind, std::size_t n);

struct JoinSpec {
  Graph base;
  std::vector<Graph> parts;
};

/// Sabidussi generalized join: (x,y) ~ (x',y') iff x ~ x' in the base, or
/// x = x' and y ~ y' in part x. Vertices are the parts concatenated in base
/// order with part-internal order kept.
Graph generalized_join(const JoinSpec& spec);

/// Offset of each part's first vertex inside the joined graph, followed by
/// the total vertex count.
std::vector<Vertex> join_offsets(const JoinSpec& spec);

/// True iff `map` is an adjacency-preserving bijection V(g) -> V(h).
/// Throws std::invalid_argument when `map` is not a bijection.
bool verify_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> map);

struct TwinPartition {
  std::vector<VertexSet> classes;  // ordered by least member, members ascending
};

/// Maximal classes under N(u)\{v} = N(v)\{u}.
TwinPartition twin_classes(const Graph& g);

/// Pairwise check of the twin relation.
bool are_twins(const Graph& g, Vertex u, Vertex v);

/// Path v_{-k}..v_k, a hub u adjacent to every v_i and a pendant w on v_0.
/// Vertex order: v_{-k}..v_k (ids 0..2k), then u (2k+1), then w (2k+2).
Graph boutin_gap_graph(std::size_t k);

/// Id of v_i in boutin_gap_graph(k).
inline Vertex gap_path_vertex(std::size_t k, long i) { return static_cast<Vertex>(static_cast<long>(k) + i); }

bool is_connected(const Graph& g);

}  // namespace zdg
