#pragma once
// Brute-force reference implementations. Deliberately naive and independent
// of the library's search code; only the Graph container is shared.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "zdg/graph.hpp"

namespace oracle {

using zdg::Graph;
using zdg::Vertex;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> a(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

/// Every automorphism, by trying all n! permutations (n <= 9).
inline std::vector<std::vector<Vertex>> all_automorphisms(const Graph& g) {
  const auto a = adjacency(g);
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::vector<std::vector<Vertex>> out;
  do {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if (a[u][v] != a[p[u]][p[v]]) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Definition via pairs: any two automorphisms agreeing on S are equal.
inline bool determining_by_pairs(const std::vector<std::vector<Vertex>>& group, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = i + 1; j < group.size(); ++j) {
      bool agree = true;
      for (Vertex x : s) agree = agree && group[i][x] == group[j][x];
      if (agree) return false;
    }
  return true;
}

inline std::vector<std::vector<Vertex>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<Vertex> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(static_cast<Vertex>(i));
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

inline std::size_t determining_number(const Graph& g, const std::vector<std::vector<Vertex>>& group) {
  for (std::size_t k = 0;; ++k)
    for (const auto& s : subsets(g.vertex_count(), k))
      if (determining_by_pairs(group, s)) return k;
}

inline std::size_t determining_number(const Graph& g) { return determining_number(g, all_automorphisms(g)); }

inline std::vector<std::vector<std::uint32_t>> distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto a = adjacency(g);
  const std::uint32_t inf = UINT32_MAX;
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    d[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (std::size_t v = 0; v < n; ++v)
        if (a[u][v] && d[s][v] == inf) {
          d[s][v] = d[s][u] + 1;
          q.push(v);
        }
    }
  }
  return d;
}

inline bool resolving(const std::vector<std::vector<std::uint32_t>>& d, const std::vector<Vertex>& s) {
  std::set<std::vector<std::uint32_t>> seen;
  for (std::size_t v = 0; v < d.size(); ++v) {
    std::vector<std::uint32_t> code;
    for (Vertex w : s) code.push_back(d[v][w]);
    if (!seen.insert(code).second) return false;
  }
  return true;
}

inline std::size_t metric_dimension(const Graph& g) {
  const auto d = distances(g);
  for (std::size_t k = 0;; ++k)
    for (const auto& s : subsets(g.vertex_count(), k))
      if (resolving(d, s)) return k;
}

inline std::uint32_t gcd(std::uint32_t a, std::uint32_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

inline std::uint32_t phi(std::uint32_t n) {
  std::uint32_t c = 0;
  for (std::uint32_t x = 1; x <= n; ++x) c += gcd(x, n) == 1;
  return c;
}

inline std::uint32_t proper_divisor_count(std::uint32_t n) {
  std::uint32_t c = 0;
  for (std::uint32_t d = 2; d < n; ++d) c += n % d == 0;
  return c;
}

/// Deterministic graphs for property sweeps: every graph on n <= 5
/// vertices given by the bits of `code`.
inline Graph graph_from_code(std::size_t n, std::uint32_t code) {
  std::vector<zdg::Edge> edges;
  std::uint32_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace oracle
