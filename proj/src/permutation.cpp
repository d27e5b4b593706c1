#include "zdg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zdg {

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  return Permutation(std::move(image), Unchecked{});
}

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Vertex v : image_) {
    if (v >= image_.size() || hit[v]) throw std::invalid_argument("permutation image is not a bijection");
    hit[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<Vertex>(i);
  return Permutation(std::move(inv), Unchecked{});
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<Vertex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.image_[b.image_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

std::vector<VertexSet> orbit_partition(std::size_t degree, std::span<const Permutation> generators) {
  std::vector<std::int64_t> owner(degree, -1);
  std::vector<VertexSet> orbits;
  for (Vertex start = 0; start < degree; ++start) {
    if (owner[start] >= 0) continue;
    const auto id = static_cast<std::int64_t>(orbits.size());
    VertexSet orbit{start};
    owner[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const Permutation& g : generators) {
        const Vertex w = g[orbit[head]];
        if (owner[w] < 0) {
          owner[w] = id;
          orbit.push_back(w);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  for (const Permutation& g : generators)
    if (g.size() != degree) throw std::invalid_argument("generator degree mismatch");

  std::vector<std::size_t> orbit_size(degree, 1);
  for (const auto& orbit : orbit_partition(degree, generators))
    for (Vertex v : orbit) orbit_size[v] = orbit.size();
  std::vector<Vertex> order(degree);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return orbit_size[a] > orbit_size[b]; });

  levels_.resize(degree);
  for (std::size_t l = 0; l < degree; ++l) levels_[l].point = order[l];
  store(Permutation::identity(degree));
  for (const Permutation& g : generators)
    if (degree > 0 && !sifts_to_identity(0, g)) add_generator(0, g);
}

std::size_t StabilizerChain::store(Permutation p) {
  pool_inverse_.push_back(p.inverse());
  pool_.push_back(std::move(p));
  return pool_.size() - 1;
}

void StabilizerChain::add_generator(std::size_t level, const Permutation& g) {
  Level& lv = levels_[level];
  if (lv.rep.empty()) {
    lv.rep.assign(degree_, -1);
    lv.rep[lv.point] = 0;
    lv.orbit.push_back(lv.point);
  }
  const std::size_t gi = store(g);
  levels_[level].strong.push_back(gi);
  const std::vector<Vertex> known = levels_[level].orbit;
  for (Vertex j : known) {
    const auto r = static_cast<std::size_t>(levels_[level].rep[j]);
    extend(level, pool_[gi] * pool_[r]);
  }
}

void StabilizerChain::extend(std::size_t level, const Permutation& g) {
  const Vertex j = g[levels_[level].point];
  if (levels_[level].rep[j] < 0) {
    const std::size_t gi = store(g);
    levels_[level].rep[j] = static_cast<std::int32_t>(gi);
    levels_[level].orbit.push_back(j);
    for (std::size_t s = 0; s < levels_[level].strong.size(); ++s) {
      const std::size_t si = levels_[level].strong[s];
      extend(level, pool_[si] * pool_[gi]);
    }
    return;
  }
  Permutation residue = pool_inverse_[static_cast<std::size_t>(levels_[level].rep[j])] * g;
  if (level + 1 < degree_ && !sifts_to_identity(level + 1, residue)) add_generator(level + 1, residue);
}

bool StabilizerChain::sifts_to_identity(std::size_t level, Permutation g) const {
  for (std::size_t l = level; l < degree_; ++l) {
    const Level& lv = levels_[l];
    const Vertex j = g[lv.point];
    if (j == lv.point) continue;
    if (lv.rep.empty() || lv.rep[j] < 0) return false;
    g = pool_inverse_[static_cast<std::size_t>(lv.rep[j])] * g;
  }
  return true;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.size() != degree_) return false;
  return sifts_to_identity(0, g);
}

BigInt StabilizerChain::order() const {
  BigInt out = 1;
  for (const Level& lv : levels_)
    if (!lv.orbit.empty()) out *= lv.orbit.size();
  return out;
}

std::vector<Vertex> StabilizerChain::base() const {
  std::vector<Vertex> out;
  for (const Level& lv : levels_)
    if (lv.orbit.size() > 1) out.push_back(lv.point);
  return out;
}

std::vector<std::size_t> StabilizerChain::transversal_sizes() const {
  std::vector<std::size_t> out;
  for (const Level& lv : levels_)
    if (lv.orbit.size() > 1) out.push_back(lv.orbit.size());
  return out;
}

}  // namespace zdg
