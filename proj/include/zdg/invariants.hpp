#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

namespace zdg {

inline constexpr std::uint64_t kDefaultExhaustiveLimit = 5'000'000;

/// Default budget, overridable through ZDG_EXHAUSTIVE_LIMIT.
std::uint64_t default_exhaustive_limit();

enum class InvariantKind { Det, MetricDim };

/// Two-sided bound on Det or dim_M with a certificate achieving `upper`.
struct InvariantResult {
  InvariantKind kind = InvariantKind::Det;
  std::size_t lower = 0;
  std::size_t upper = 0;
  VertexSet certificate;
  bool exact = false;
  std::string method;
};

/// Distances from `v` to each vertex of `reference`, in order.
using MetricVector = std::vector<std::uint32_t>;

MetricVector metric_vector(const DistanceMatrix& dist, Vertex v, std::span<const Vertex> reference);

/// All vertices have pairwise distinct metric vectors. Unreachable pairs
/// contribute DistanceMatrix::kInf as an ordinary coordinate value.
bool is_resolving_set(const DistanceMatrix& dist, std::span<const Vertex> set);

/// Sum of (|class| - 1) over twin classes; bounds both invariants below.
std::size_t twin_lower_bound(const Graph& g);

/// Smallest m with m + D^m >= n for diameter D; a lower bound on dim_M of a
/// connected graph.
std::size_t diameter_lower_bound(const Graph& g, const DistanceMatrix& dist);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct SearchOptions {
  std::uint64_t exhaustive_limit = kDefaultExhaustiveLimit;
  /// Extra certificate candidates (e.g. the closed-form constructions);
  /// each is verified before use.
  std::vector<VertexSet> hints;
};

InvariantResult determining_number(const Graph& g, const SearchOptions& options);
InvariantResult determining_number(const Graph& g, std::uint64_t exhaustive_limit = kDefaultExhaustiveLimit);

InvariantResult metric_dimension(const Graph& g, const SearchOptions& options);
InvariantResult metric_dimension(const Graph& g, std::uint64_t exhaustive_limit = kDefaultExhaustiveLimit);

/// Plain ascending-size subset searches with no bounds or filters, used as
/// oracles. Empty when some size exceeds the budget before a set is found.
std::optional<VertexSet> exhaustive_determining_set(const Graph& g, std::uint64_t exhaustive_limit);
std::optional<VertexSet> exhaustive_resolving_set(const Graph& g, std::uint64_t exhaustive_limit);

/// Union over Aut(G)-orbits of determining sets of the orbit-induced
/// subgraphs, if that union fixes G.
std::optional<VertexSet> orbit_union_set(const Graph& g);

/// Greedy resolving set: repeatedly add the vertex separating the most
/// still-unseparated pairs, then drop redundant vertices.
VertexSet greedy_resolving_set(const DistanceMatrix& dist);

// Closed forms and constructions for zero-divisor graphs. Canonical sets are
// returned as ring elements; map them with vertices_of().

/// n - phi(n) - tau(n) - 1, the common value of Det and dim_M of Gamma(Z_n).
std::uint32_t det_dim_zn(std::uint32_t n);

/// Every Omega_d minus its least element.
std::vector<Element> zn_canonical_set(std::uint32_t n);

/// |Z(R)| - 2^k + 2 for a product of k >= 2 fields, not all F_2.
std::uint32_t det_dim_semisimple(const Ring& ring);

/// Every ideal core I' minus its least element.
std::vector<Element> semisimple_canonical_set(const Ring& ring);

/// u_1..u_{floor(n/2)} in Z_2^n, u_i having zeros exactly at coordinates
/// 2i-1, 2i, 2i+1 (1-based, wrapping past n), for n >= 5.
std::vector<Element> boolean_canonical_set(std::uint32_t n);

/// sum(partSizes) - k for joins of complete/empty parts with distinct
/// cross-block degrees.
std::size_t join_det_distinct_degrees(std::span<const std::size_t> part_sizes);

/// sum(partDets) for joins whose parts are vertex orbits.
std::size_t join_det_vertex_transitive(std::span<const std::size_t> part_dets);

std::string to_string(InvariantKind kind);

}  // namespace zdg
