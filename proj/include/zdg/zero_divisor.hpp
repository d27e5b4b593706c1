#pragma once

#include <cstdint>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

namespace zdg {

/// Gamma(R): vertices are zero_divisors(R) in ascending order, x ~ y iff
/// x != y and xy = 0. Labels are element renderings.
Graph zero_divisor_graph(const Ring& ring);

/// Vertex ids of Gamma(R) for the given zero-divisors.
VertexSet vertices_of(const Ring& ring, std::span<const Element> elements);

/// The classes Omega_d = {x : gcd(x, n) = d} for each proper divisor d.
struct OmegaPartition {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> divisors;          // ascending
  std::vector<std::vector<Element>> classes;   // classes[i] = Omega_{divisors[i]}, ascending
};

OmegaPartition omega_partition(std::uint32_t n);

enum class OmegaNature { Clique, Independent };

OmegaNature omega_nature(std::uint32_t n, std::uint32_t d);

/// Degree of every vertex of Omega_d in Gamma(Z_n): d-2 if n | d^2, else d-1.
std::uint32_t zn_vertex_degree(std::uint32_t n, std::uint32_t d);

struct CompressedGraph {
  Graph graph;
  /// class_of[i] is the class of the i-th zero-divisor (vertex i of Gamma(R)).
  std::vector<std::uint32_t> class_of;
  /// Members of each class as Gamma(R) vertex ids; classes ordered by least member.
  std::vector<VertexSet> classes;
};

/// Gamma_E(R): zero-divisors modulo equal annihilators.
CompressedGraph compressed_graph(const Ring& ring);

/// Gamma_Ann(R) for Z_n (vertices <d>, d a proper divisor, ascending) or a
/// product of k >= 2 fields (vertices are the 2^k - 2 proper ideals, ordered
/// by the integer value of their support bit pattern, bit i = component i).
Graph annihilating_ideal_graph(const Ring& ring);

/// Support bit patterns of the proper nonzero ideals of a field product, in
/// the vertex order of annihilating_ideal_graph.
std::vector<std::uint32_t> ideal_supports(const Ring& ring);

struct JoinDecomposition {
  JoinSpec spec;
  /// psi[v] = joined-graph vertex for vertex v of Gamma(R).
  std::vector<Vertex> psi;
};

JoinDecomposition zn_join_decomposition(std::uint32_t n);
JoinDecomposition semisimple_join_decomposition(const Ring& ring);

/// Zero coordinates of an element of a product ring, as a bit pattern
/// (bit i = component i), with the element it describes.
struct ThetaMask {
  Element subject = 0;
  std::uint32_t mask = 0;
  /// 1-based coordinate positions of the mask.
  std::vector<std::uint32_t> positions() const;
};

ThetaMask theta_mask(const Ring& ring, Element x);

/// Support bit pattern (nonzero coordinates) of a product-ring element.
std::uint32_t support_mask(const Ring& ring, Element x);

/// I' = {x in I : Theta_x = Theta_I} for an ideal of a field product.
struct IdealCore {
  std::uint32_t support = 0;
  std::vector<Element> core;  // ascending
};

/// Cores of the proper nonzero ideals, in ideal_supports order.
std::vector<IdealCore> ideal_cores(const Ring& ring);

}  // namespace zdg
