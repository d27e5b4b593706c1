#include "zdg/zero_divisor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zdg {

namespace {

constexpr std::size_t kMaxZeroDivisorVertices = 1u << 14;

void require_field_product(const Ring& ring, const char* what) {
  if (!ring.is_field_product()) throw std::invalid_argument(std::string(what) + ": ring is not a product of fields");
}

void require_proper_divisor(std::uint32_t n, std::uint32_t d) {
  if (d <= 1 || d >= n || n % d != 0) throw std::invalid_argument("d is not a proper divisor of n");
}

std::size_t index_of(const std::vector<Element>& sorted, Element x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x) throw std::invalid_argument("element is not a nonzero zero-divisor");
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

Graph zero_divisor_graph(const Ring& ring) {
  const auto zd = zero_divisors(ring);
  if (zd.empty()) throw std::invalid_argument("zero_divisor_graph: ring has no nonzero zero-divisors");
  if (zd.size() > kMaxZeroDivisorVertices) throw std::invalid_argument("zero_divisor_graph: too many zero-divisors");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(zd.size());
  for (std::size_t i = 0; i < zd.size(); ++i) {
    labels.push_back(ring.render(zd[i]));
    for (std::size_t j = i + 1; j < zd.size(); ++j)
      if (ring.mul(zd[i], zd[j]) == 0) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph(zd.size(), std::move(edges), std::move(labels));
}

VertexSet vertices_of(const Ring& ring, std::span<const Element> elements) {
  const auto zd = zero_divisors(ring);
  VertexSet out;
  out.reserve(elements.size());
  for (Element x : elements) out.push_back(static_cast<Vertex>(index_of(zd, x)));
  std::sort(out.begin(), out.end());
  return out;
}

OmegaPartition omega_partition(std::uint32_t n) {
  if (n < 4 || is_prime(n)) throw std::invalid_argument("omega_partition: n must be composite");
  const auto ctx = zn_context(n);
  OmegaPartition out;
  out.n = n;
  out.divisors = ctx.proper_divisors;
  out.classes.resize(out.divisors.size());
  for (Element x = 1; x < n; ++x) {
    const std::uint32_t g = gcd(x, n);
    if (g == 1) continue;
    auto it = std::lower_bound(out.divisors.begin(), out.divisors.end(), g);
    out.classes[static_cast<std::size_t>(it - out.divisors.begin())].push_back(x);
  }
  return out;
}

OmegaNature omega_nature(std::uint32_t n, std::uint32_t d) {
  require_proper_divisor(n, d);
  return (static_cast<std::uint64_t>(d) * d) % n == 0 ? OmegaNature::Clique : OmegaNature::Independent;
}

std::uint32_t zn_vertex_degree(std::uint32_t n, std::uint32_t d) {
  return omega_nature(n, d) == OmegaNature::Clique ? d - 2 : d - 1;
}

CompressedGraph compressed_graph(const Ring& ring) {
  const auto zd = zero_divisors(ring);
  if (zd.empty()) throw std::invalid_argument("compressed_graph: ring has no nonzero zero-divisors");
  CompressedGraph out;
  std::map<std::vector<Element>, std::uint32_t> by_annihilator;
  std::vector<Element> representative;
  for (std::size_t i = 0; i < zd.size(); ++i) {
    auto members = annihilator(ring, zd[i]).members;
    auto [it, inserted] = by_annihilator.try_emplace(std::move(members), static_cast<std::uint32_t>(out.classes.size()));
    if (inserted) {
      out.classes.emplace_back();
      representative.push_back(zd[i]);
    }
    out.class_of.push_back(it->second);
    out.classes[it->second].push_back(static_cast<Vertex>(i));
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < representative.size(); ++a) {
    labels.push_back("[" + ring.render(representative[a]) + "]");
    for (std::size_t b = a + 1; b < representative.size(); ++b)
      if (ring.mul(representative[a], representative[b]) == 0)
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  out.graph = Graph(representative.size(), std::move(edges), std::move(labels));
  return out;
}

std::vector<std::uint32_t> ideal_supports(const Ring& ring) {
  require_field_product(ring, "ideal_supports");
  const std::size_t k = ring.components().size();
  if (k < 2) throw std::invalid_argument("ideal_supports: need at least two components");
  std::vector<std::uint32_t> out;
  const std::uint32_t full = (1u << k) - 1;
  for (std::uint32_t s = 1; s < full; ++s) out.push_back(s);
  return out;
}

Graph annihilating_ideal_graph(const Ring& ring) {
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  if (ring.kind() == RingKind::Zn) {
    const std::uint32_t n = ring.order();
    if (n < 4 || is_prime(n)) throw std::invalid_argument("annihilating_ideal_graph: n must be composite");
    const auto divs = zn_context(n).proper_divisors;
    for (std::size_t i = 0; i < divs.size(); ++i) {
      labels.push_back("<" + std::to_string(divs[i]) + ">");
      for (std::size_t j = i + 1; j < divs.size(); ++j)
        if ((static_cast<std::uint64_t>(divs[i]) * divs[j]) % n == 0)
          edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return Graph(divs.size(), std::move(edges), std::move(labels));
  }
  if (!ring.is_field_product() || ring.components().size() < 2)
    throw std::invalid_argument("annihilating_ideal_graph: unsupported ring kind");
  const auto supports = ideal_supports(ring);
  const std::size_t k = ring.components().size();
  for (std::size_t i = 0; i < supports.size(); ++i) {
    std::string label = "I{";
    bool first = true;
    for (std::size_t c = 0; c < k; ++c)
      if (supports[i] >> c & 1u) {
        label += (first ? "" : ",") + std::to_string(c + 1);
        first = false;
      }
    labels.push_back(label + "}");
    for (std::size_t j = i + 1; j < supports.size(); ++j)
      if ((supports[i] & supports[j]) == 0) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph(supports.size(), std::move(edges), std::move(labels));
}

JoinDecomposition zn_join_decomposition(std::uint32_t n) {
  const auto omega = omega_partition(n);
  JoinDecomposition out;
  out.spec.base = annihilating_ideal_graph(Ring::zn(n));
  for (std::size_t i = 0; i < omega.divisors.size(); ++i) {
    const std::size_t size = omega.classes[i].size();
    const bool clique = omega_nature(n, omega.divisors[i]) == OmegaNature::Clique;
    out.spec.parts.push_back(standard_graph(clique ? StandardKind::Complete : StandardKind::Empty, size));
  }
  const auto offsets = join_offsets(out.spec);
  // Vertex of x in Gamma(Z_n) is its rank among gcd(x,n) > 1 elements.
  std::vector<Vertex> vertex_of_element(n, 0);
  Vertex next = 0;
  for (Element x = 1; x < n; ++x)
    if (gcd(x, n) > 1) vertex_of_element[x] = next++;
  out.psi.assign(next, 0);
  for (std::size_t i = 0; i < omega.classes.size(); ++i)
    for (std::size_t r = 0; r < omega.classes[i].size(); ++r)
      out.psi[vertex_of_element[omega.classes[i][r]]] = offsets[i] + static_cast<Vertex>(r);
  return out;
}

std::uint32_t support_mask(const Ring& ring, Element x) {
  if (ring.kind() != RingKind::Product) throw std::invalid_argument("support_mask: not a product ring");
  auto coords = ring.decompose(x);
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) mask |= 1u << i;
  return mask;
}

std::vector<std::uint32_t> ThetaMask::positions() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < 32; ++i)
    if (mask >> i & 1u) out.push_back(i + 1);
  return out;
}

ThetaMask theta_mask(const Ring& ring, Element x) {
  require_field_product(ring, "theta_mask");
  if (x >= ring.order()) throw std::out_of_range("theta_mask: element out of range");
  const std::uint32_t full = (1u << ring.components().size()) - 1;
  const std::uint32_t mask = full & ~support_mask(ring, x);
  if (mask == 0 || mask == full) throw std::invalid_argument("theta_mask: element is not a zero-divisor");
  return ThetaMask{x, mask};
}

std::vector<IdealCore> ideal_cores(const Ring& ring) {
  const auto supports = ideal_supports(ring);
  std::vector<IdealCore> out(supports.size());
  for (std::size_t i = 0; i < supports.size(); ++i) out[i].support = supports[i];
  // Supports are 1..2^k-2 in order, so the ideal index is support - 1.
  for (Element x = 1; x < ring.order(); ++x) {
    const std::uint32_t s = support_mask(ring, x);
    if (s == 0 || s == (1u << ring.components().size()) - 1) continue;
    out[s - 1].core.push_back(x);
  }
  return out;
}

JoinDecomposition semisimple_join_decomposition(const Ring& ring) {
  require_field_product(ring, "semisimple_join_decomposition");
  const auto cores = ideal_cores(ring);
  JoinDecomposition out;
  out.spec.base = annihilating_ideal_graph(ring);
  for (const auto& c : cores) out.spec.parts.push_back(standard_graph(StandardKind::Empty, c.core.size()));
  const auto offsets = join_offsets(out.spec);
  const auto zd = zero_divisors(ring);
  out.psi.assign(zd.size(), 0);
  for (std::size_t i = 0; i < cores.size(); ++i)
    for (std::size_t r = 0; r < cores[i].core.size(); ++r)
      out.psi[index_of(zd, cores[i].core[r])] = offsets[i] + static_cast<Vertex>(r);
  return out;
}

}  // namespace zdg
