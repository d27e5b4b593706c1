#pragma once

#include <span>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/permutation.hpp"

namespace zdg {

/// Search bound for automorphism computations.
inline constexpr std::size_t kMaxSearchVertices = 1u << 12;

struct AutGroup {
  std::vector<Permutation> generators;
  /// Exact order from the Schreier-Sims chain built on the generators.
  BigInt order = 1;
  /// Exact order from the search itself (product of basic orbit lengths
  /// along the search base); must agree with `order`.
  BigInt search_order = 1;
  std::vector<VertexSet> orbits;
  /// Individualized vertices along the first search path.
  VertexSet search_base;
};

/// Generators of Aut(G) by equitable refinement (initial colors = degree)
/// with individualization and backtracking.
AutGroup automorphism_group(const Graph& g);

/// True iff some non-identity automorphism of G fixes every vertex of `fixed`.
bool has_nontrivial_fixing_automorphism(const Graph& g, std::span<const Vertex> fixed);

inline bool is_fixing_set(const Graph& g, std::span<const Vertex> s) {
  return !has_nontrivial_fixing_automorphism(g, s);
}

const std::vector<VertexSet>& orbits(const AutGroup& group);

bool is_automorphism(const Graph& g, const Permutation& p);

/// Individualized vertices along the first path of the refinement search
/// started from `fixed`; together with `fixed` they always form a fixing set.
VertexSet search_base(const Graph& g, std::span<const Vertex> fixed = {});

}  // namespace zdg
