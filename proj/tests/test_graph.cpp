#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "zdg/graph.hpp"
#include "zdg/ring.hpp"
#include "zdg/zero_divisor.hpp"

using namespace zdg;

namespace {

std::vector<Vertex> identity_map(std::size_t n) {
  std::vector<Vertex> m(n);
  std::iota(m.begin(), m.end(), Vertex{0});
  return m;
}

std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint32_t code = 0; code < (1u << (n * (n - 1) / 2)); code += (n == 5 ? 7 : 1))
      out.push_back(oracle::graph_from_code(n, code));
  for (std::size_t n = 3; n <= 10; ++n) {
    out.push_back(standard_graph(StandardKind::Cycle, n));
    out.push_back(standard_graph(StandardKind::Path, n));
  }
  for (std::uint32_t n : {4u, 6u, 8u, 9u, 10u, 12u}) out.push_back(zero_divisor_graph(Ring::zn(n)));
  out.push_back(boutin_gap_graph(3));
  return out;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("construction normalizes edges") {
    const Graph g(4, {{2, 1}, {1, 2}, {0, 3}});
    CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(g.label(3) == "3");
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {}, {"a"}), std::invalid_argument);
    const Graph empty(0, {});
    CHECK(empty.vertex_count() == 0);
  }

  TEST_CASE("large graphs use adjacency lists") {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < 5000; ++v) edges.emplace_back(v, v + 1);
    const Graph p(5000, edges);
    CHECK(p.adjacent(4998, 4999));
    CHECK_FALSE(p.adjacent(0, 4999));
    CHECK(all_pairs_distances(Graph(5, {{0, 1}})).max_finite() == 1);
  }

  TEST_CASE("standard graphs") {
    CHECK(standard_graph(StandardKind::Complete, 4).edge_count() == 6);
    CHECK(standard_graph(StandardKind::Empty, 5).edge_count() == 0);
    CHECK(standard_graph(StandardKind::Cycle, 3) == standard_graph(StandardKind::Complete, 3));
    CHECK(standard_graph(StandardKind::Path, 1).vertex_count() == 1);
    CHECK_THROWS_AS(standard_graph(StandardKind::Cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(standard_graph(StandardKind::Complete, 0), std::invalid_argument);
  }

  TEST_CASE("generalized join") {
    const Graph k2 = standard_graph(StandardKind::Complete, 2);
    const Graph star = generalized_join({k2, {standard_graph(StandardKind::Empty, 1), standard_graph(StandardKind::Empty, 3)}});
    CHECK(star == Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(generalized_join({k2, {k2, k2}}) == standard_graph(StandardKind::Complete, 4));
    CHECK(join_offsets({k2, {k2, standard_graph(StandardKind::Cycle, 5)}}) == std::vector<Vertex>{0, 2, 7});
    CHECK_THROWS_AS(generalized_join({k2, {k2}}), std::invalid_argument);
    CHECK_THROWS_AS(generalized_join({k2, {k2, Graph(0, {})}}), std::invalid_argument);

    // Gamma(Z_12) from its divisor-lattice base.
    const Graph base = annihilating_ideal_graph(Ring::zn(12));
    const Graph e2 = standard_graph(StandardKind::Empty, 2);
    const Graph joined = generalized_join({base, {e2, e2, e2, standard_graph(StandardKind::Complete, 1)}});
    // psi: 2,3,4,6,8,9,10 -> blocks <2>={2,10}, <3>={3,9}, <4>={4,8}, <6>={6}
    const std::vector<Vertex> psi = {0, 2, 4, 6, 5, 3, 1};
    CHECK(verify_isomorphism(zero_divisor_graph(Ring::zn(12)), joined, psi));
  }

  TEST_CASE("join edge count over K_2") {
    const Graph k2 = standard_graph(StandardKind::Complete, 2);
    for (std::size_t a = 1; a <= 4; ++a)
      for (std::uint32_t ca = 0; ca < (1u << (a * (a - 1) / 2)); ca += 3)
        for (std::size_t b = 1; b <= 8; b += 3)
          for (std::uint32_t cb = 0; cb < (1u << (b * (b - 1) / 2)); cb += 1 + (1u << (b * (b - 1) / 2)) / 5) {
            const Graph l1 = oracle::graph_from_code(a, ca);
            const Graph l2 = b <= 5 ? oracle::graph_from_code(b, cb) : standard_graph(StandardKind::Cycle, b);
            const Graph j = generalized_join({k2, {l1, l2}});
            CHECK(j.edge_count() == l1.edge_count() + l2.edge_count() + a * b);
          }
  }

  TEST_CASE("distances") {
    const auto p3 = all_pairs_distances(standard_graph(StandardKind::Path, 3));
    CHECK(p3(0, 2) == 2);
    CHECK(all_pairs_distances(standard_graph(StandardKind::Empty, 2))(0, 1) == DistanceMatrix::kInf);
    CHECK(all_pairs_distances(zero_divisor_graph(Ring::zn(315))).max_finite() == 3);

    for (const auto& g : small_corpus()) {
      const auto d = all_pairs_distances(g);
      const auto want = oracle::distances(g);
      bool ok = true;
      const std::size_t n = g.vertex_count();
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
          ok = ok && d(u, v) == want[u][v] && d(u, v) == d(v, u);
          for (Vertex w = 0; w < n; ++w)
            if (d(u, w) != DistanceMatrix::kInf && d(w, v) != DistanceMatrix::kInf) ok = ok && d(u, v) <= d(u, w) + d(w, v);
        }
      CHECK(ok);
    }
  }

  TEST_CASE("verify_isomorphism") {
    const Graph k3 = standard_graph(StandardKind::Complete, 3);
    CHECK(verify_isomorphism(k3, k3, identity_map(3)));
    const Graph p3 = standard_graph(StandardKind::Path, 3);
    std::vector<Vertex> m = identity_map(3);
    do {
      CHECK_FALSE(verify_isomorphism(p3, k3, m));
    } while (std::next_permutation(m.begin(), m.end()));
    CHECK_THROWS_AS(verify_isomorphism(k3, k3, std::vector<Vertex>{0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(verify_isomorphism(k3, k3, std::vector<Vertex>{0, 1}), std::invalid_argument);
  }

  TEST_CASE("twin classes") {
    CHECK(twin_classes(standard_graph(StandardKind::Complete, 5)).classes.size() == 1);
    CHECK(twin_classes(standard_graph(StandardKind::Path, 4)).classes.size() == 4);
    const auto z12 = twin_classes(zero_divisor_graph(Ring::zn(12)));
    // vertices 2,3,4,6,8,9,10 -> {2,10}, {3,9}, {4,8}, {6}
    CHECK(z12.classes == std::vector<VertexSet>{{0, 6}, {1, 5}, {2, 4}, {3}});

    for (const auto& g : small_corpus()) {
      const auto classes = twin_classes(g).classes;
      std::vector<int> seen(g.vertex_count(), 0);
      bool ok = true;
      for (const auto& c : classes) {
        for (Vertex u : c) {
          ++seen[u];
          for (Vertex v : c) ok = ok && (u == v || are_twins(g, u, v));
        }
        // a twin transposition is an automorphism
        if (c.size() >= 2 && g.vertex_count() <= 10) {
          auto m = identity_map(g.vertex_count());
          std::swap(m[c[0]], m[c[1]]);
          ok = ok && verify_isomorphism(g, g, m);
        }
      }
      // maximality: no twins across classes
      for (std::size_t a = 0; a < classes.size(); ++a)
        for (std::size_t b = a + 1; b < classes.size(); ++b) ok = ok && !are_twins(g, classes[a][0], classes[b][0]);
      CHECK(ok);
      CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    }
  }

  TEST_CASE("gap family") {
    const Graph g1 = boutin_gap_graph(1);
    CHECK(g1.vertex_count() == 5);
    CHECK(g1.degree(3) == 3);                     // u
    CHECK(g1.degree(gap_path_vertex(1, 0)) == 4);  // v_0
    CHECK(g1.degree(4) == 1);                     // w
    CHECK(g1.label(0) == "v-1");
    CHECK(g1.label(4) == "w");
    const Graph g = boutin_gap_graph(5);
    CHECK(g.vertex_count() == 13);
    CHECK_FALSE(g.adjacent(11, 12));  // u and w
    CHECK(oracle::all_automorphisms(boutin_gap_graph(2)).size() == 2);
    CHECK_THROWS_AS(boutin_gap_graph(0), std::invalid_argument);
  }

  TEST_CASE("induced subgraphs and labels") {
    const Graph c5 = standard_graph(StandardKind::Cycle, 5);
    const Graph sub = c5.induced_subgraph(std::vector<Vertex>{0, 1, 2});
    CHECK(sub == standard_graph(StandardKind::Path, 3));
    CHECK(c5.with_labels({"a", "b", "c", "d", "e"}).label(4) == "e");
    CHECK(is_connected(c5));
    CHECK_FALSE(is_connected(standard_graph(StandardKind::Empty, 2)));
  }
}
