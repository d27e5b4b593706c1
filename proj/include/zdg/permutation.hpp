#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

using BigInt = boost::multiprecision::cpp_int;

/// Bijection of 0..n-1 stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::size_t n);
  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<Vertex> image);

  std::size_t size() const { return image_.size(); }
  Vertex operator[](Vertex x) const { return image_[x]; }
  const std::vector<Vertex>& image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Vertex> image, Unchecked) : image_(std::move(image)) {}
  std::vector<Vertex> image_;
};

/// Orbits of the group generated by `generators`, each ascending, ordered by
/// least member.
std::vector<VertexSet> orbit_partition(std::size_t degree, std::span<const Permutation> generators);

/// Schreier-Sims stabilizer chain over a full base of all points.
///
/// Base points are ordered by decreasing orbit size under the generators
/// (ties by point id), so the largest orbits sit at the top of the chain.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const { return degree_; }
  BigInt order() const;
  /// Base points whose transversal is nontrivial, top level first.
  std::vector<Vertex> base() const;
  /// Basic orbit lengths matching base().
  std::vector<std::size_t> transversal_sizes() const;
  bool contains(const Permutation& g) const;

 private:
  struct Level {
    Vertex point = 0;
    std::vector<std::size_t> strong;   // indices into pool_
    std::vector<std::int32_t> rep;     // point -> pool_ index of coset rep, -1 undefined
    std::vector<Vertex> orbit;         // points with defined rep, in discovery order
  };

  void add_generator(std::size_t level, const Permutation& g);
  void extend(std::size_t level, const Permutation& g);
  bool sifts_to_identity(std::size_t level, Permutation g) const;
  std::size_t store(Permutation p);

  std::size_t degree_;
  std::vector<Level> levels_;
  std::vector<Permutation> pool_;
  std::vector<Permutation> pool_inverse_;
};

}  // namespace zdg
