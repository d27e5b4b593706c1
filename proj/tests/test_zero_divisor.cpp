#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "zdg/export.hpp"
#include "zdg/zero_divisor.hpp"

using namespace zdg;

namespace {

// Gamma(R) straight from the multiplication table.
Graph gamma_by_definition(const Ring& r) {
  std::vector<Element> zd;
  for (Element x = 1; x < r.order(); ++x)
    for (Element y = 1; y < r.order(); ++y)
      if (r.mul(x, y) == 0) {
        zd.push_back(x);
        break;
      }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < zd.size(); ++i)
    for (Vertex j = i + 1; j < zd.size(); ++j)
      if (r.mul(zd[i], zd[j]) == 0) edges.emplace_back(i, j);
  return Graph(zd.size(), edges);
}

}  // namespace

TEST_SUITE("zero_divisor") {
  TEST_CASE("small zero-divisor graphs") {
    const Graph z4 = zero_divisor_graph(Ring::zn(4));
    CHECK(z4.vertex_count() == 1);
    CHECK(z4.label(0) == "2");
    CHECK(zero_divisor_graph(make_ring("bool:2")) == standard_graph(StandardKind::Complete, 2));
    const Graph b3 = zero_divisor_graph(make_ring("bool:3"));
    CHECK(b3.vertex_count() == 6);
    CHECK(b3.edge_count() == 6);
    const Graph z12 = zero_divisor_graph(Ring::zn(12));
    CHECK(z12.vertex_count() == 7);
    CHECK(z12.edge_count() == 8);
    CHECK_THROWS_AS(zero_divisor_graph(Ring::zn(7)), std::invalid_argument);
    CHECK_THROWS_AS(zero_divisor_graph(Ring::field(9)), std::invalid_argument);
    for (const char* s : {"zn:30", "zn:64", "prod:f3,f4", "bool:4", "prod:f2,f2,f3", "zn:2", "prod:f5,f7"}) {
      const Ring r = make_ring(s);
      if (zero_divisors(r).empty()) continue;
      CAPTURE(s);
      CHECK(zero_divisor_graph(r) == gamma_by_definition(r));
    }
  }

  TEST_CASE("omega partition") {
    const auto o12 = omega_partition(12);
    CHECK(o12.divisors == std::vector<std::uint32_t>{2, 3, 4, 6});
    CHECK(o12.classes == std::vector<std::vector<Element>>{{2, 10}, {3, 9}, {4, 8}, {6}});
    const auto o315 = omega_partition(315);
    std::map<std::uint32_t, std::size_t> sizes;
    for (std::size_t i = 0; i < o315.divisors.size(); ++i) sizes[o315.divisors[i]] = o315.classes[i].size();
    CHECK(sizes == std::map<std::uint32_t, std::size_t>{
                       {3, 48}, {5, 36}, {7, 24}, {9, 24}, {15, 12}, {21, 8}, {35, 6}, {45, 6}, {63, 4}, {105, 2}});
    CHECK_THROWS_AS(omega_partition(7), std::invalid_argument);
    CHECK_THROWS_AS(omega_partition(3), std::invalid_argument);
  }

  TEST_CASE("omega sweep up to 512") {
    for (std::uint32_t n = 4; n <= 512; ++n) {
      if (is_prime(n)) continue;
      CAPTURE(n);
      const Ring ring = Ring::zn(n);
      const Graph g = zero_divisor_graph(ring);
      const auto zd = zero_divisors(ring);
      const auto omega = omega_partition(n);
      std::vector<Element> cover;
      bool ok = true;
      std::map<std::size_t, std::size_t> degree_owner;
      for (std::size_t i = 0; i < omega.divisors.size(); ++i) {
        const std::uint32_t d = omega.divisors[i];
        ok = ok && !omega.classes[i].empty() && omega.classes[i].size() == oracle::phi(n / d);
        for (Element x : omega.classes[i]) {
          ok = ok && oracle::gcd(x, n) == d;
          cover.push_back(x);
        }
        for (Vertex v : vertices_of(ring, omega.classes[i])) {
          ok = ok && g.degree(v) == zn_vertex_degree(n, d);
          auto [it, fresh] = degree_owner.emplace(g.degree(v), i);
          ok = ok && (fresh || it->second == i);
        }
        // clique iff n | d^2, matched against the induced subgraph
        const Graph induced = g.induced_subgraph(vertices_of(ring, omega.classes[i]));
        const std::size_t m = induced.vertex_count();
        const bool clique = induced.edge_count() == m * (m - 1) / 2;
        const bool independent = induced.edge_count() == 0;
        ok = ok && (omega_nature(n, d) == OmegaNature::Clique ? clique : independent) &&
             ((d * d) % n == 0) == (omega_nature(n, d) == OmegaNature::Clique);
      }
      std::sort(cover.begin(), cover.end());
      CHECK(ok);
      CHECK(cover == zd);
    }
  }

  TEST_CASE("omega nature and degrees") {
    CHECK(omega_nature(12, 6) == OmegaNature::Clique);
    CHECK(omega_nature(12, 2) == OmegaNature::Independent);
    CHECK(omega_nature(16, 4) == OmegaNature::Clique);
    CHECK(zn_vertex_degree(12, 6) == 4);
    CHECK(zn_vertex_degree(12, 2) == 1);
    CHECK(zn_vertex_degree(16, 4) == 2);
    CHECK_THROWS_AS(omega_nature(12, 5), std::invalid_argument);
    CHECK_THROWS_AS(zn_vertex_degree(12, 12), std::invalid_argument);
  }

  TEST_CASE("compressed graphs") {
    const auto c12 = compressed_graph(Ring::zn(12));
    CHECK(c12.graph.vertex_count() == 4);
    CHECK(c12.classes == std::vector<VertexSet>{{0, 6}, {1, 5}, {2, 4}, {3}});
    CHECK(c12.class_of == std::vector<std::uint32_t>{0, 1, 2, 3, 2, 1, 0});
    const Ring b4 = make_ring("bool:4");
    CHECK(compressed_graph(b4).graph == zero_divisor_graph(b4));
    CHECK(compressed_graph(Ring::zn(4)).graph.vertex_count() == 1);
    CHECK(to_json(c12).find("\"classMap\"") != std::string::npos);
    // classes are exactly the annihilator classes
    for (const char* s : {"zn:72", "prod:f4,f3", "prod:f2,f2,f3"}) {
      const Ring r = make_ring(s);
      const auto ce = compressed_graph(r);
      const auto zd = zero_divisors(r);
      bool ok = true;
      for (std::size_t a = 0; a < zd.size(); ++a)
        for (std::size_t b = 0; b < zd.size(); ++b)
          ok = ok && ((ce.class_of[a] == ce.class_of[b]) == (annihilator(r, zd[a]).members == annihilator(r, zd[b]).members));
      CHECK(ok);
    }
  }

  TEST_CASE("annihilating-ideal graphs") {
    const Graph a12 = annihilating_ideal_graph(Ring::zn(12));
    CHECK(a12.vertex_count() == 4);
    CHECK(a12.edges() == std::vector<Edge>{{0, 3}, {1, 2}, {2, 3}});  // <2><6>, <3><4>, <4><6>
    CHECK(a12.label(0) == "<2>");
    const Graph a23 = annihilating_ideal_graph(make_ring("prod:f2,f3"));
    CHECK(a23 == standard_graph(StandardKind::Complete, 2));
    CHECK(a23.label(0) == "I{1}");
    CHECK(ideal_supports(make_ring("bool:3")) == std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(annihilating_ideal_graph(Ring::field(8)), std::invalid_argument);
    CHECK_THROWS_AS(annihilating_ideal_graph(make_ring("prod:f2")), std::invalid_argument);
  }

  TEST_CASE("join decompositions") {
    const auto j12 = zn_join_decomposition(12);
    std::vector<std::size_t> sizes, edges;
    for (const auto& p : j12.spec.parts) {
      sizes.push_back(p.vertex_count());
      edges.push_back(p.edge_count());
    }
    CHECK(sizes == std::vector<std::size_t>{2, 2, 2, 1});
    CHECK(edges == std::vector<std::size_t>{0, 0, 0, 0});  // 12 does not divide 16: Omega_4 is independent
    CHECK(verify_isomorphism(zero_divisor_graph(Ring::zn(12)), generalized_join(j12.spec), j12.psi));

    const auto j49 = zn_join_decomposition(49);
    CHECK(j49.spec.base.vertex_count() == 1);
    CHECK(j49.spec.parts[0] == standard_graph(StandardKind::Complete, 6));

    // 315 | 105^2, so Omega_105 = {105, 210} is the only clique part
    std::vector<std::size_t> e315;
    for (const auto& p : zn_join_decomposition(315).spec.parts) e315.push_back(p.edge_count());
    CHECK(e315 == std::vector<std::size_t>{0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(zn_join_decomposition(13), std::invalid_argument);

    const auto s23 = semisimple_join_decomposition(make_ring("prod:f2,f3"));
    CHECK(s23.spec.parts.size() == 2);
    CHECK(generalized_join(s23.spec).edge_count() == 2);
    for (const auto& p : semisimple_join_decomposition(make_ring("bool:3")).spec.parts) CHECK(p.vertex_count() == 1);
    const auto s33 = semisimple_join_decomposition(make_ring("prod:f3,f3"));
    CHECK(generalized_join(s33.spec) == Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    CHECK_THROWS_AS(semisimple_join_decomposition(Ring::zn(12)), std::invalid_argument);
  }

  TEST_CASE("theta masks and ideal cores") {
    const Ring b3 = make_ring("bool:3");
    CHECK(theta_mask(b3, b3.compose({1, 0, 0})).positions() == std::vector<std::uint32_t>{2, 3});
    const Ring r24 = make_ring("prod:f2,f4");
    CHECK(theta_mask(r24, r24.compose({0, 2})).positions() == std::vector<std::uint32_t>{1});
    const auto a = theta_mask(b3, b3.compose({1, 0, 1}));
    const auto b = theta_mask(b3, b3.compose({0, 1, 0}));
    CHECK(a.positions() == std::vector<std::uint32_t>{2});
    CHECK(b.positions() == std::vector<std::uint32_t>{1, 3});
    CHECK_THROWS_AS(theta_mask(b3, 0), std::invalid_argument);
    CHECK_THROWS_AS(theta_mask(b3, b3.one()), std::invalid_argument);
    CHECK_THROWS_AS(theta_mask(Ring::zn(12), 2), std::invalid_argument);

    for (const char* s : {"prod:f3,f4,f5", "prod:f2,f9", "bool:4"}) {
      const Ring r = make_ring(s);
      const Graph g = zero_divisor_graph(r);
      const auto zd = zero_divisors(r);
      bool ok = true;
      for (Vertex i = 0; i < zd.size(); ++i)
        for (Vertex j = 0; j < zd.size(); ++j) {
          if (i == j) continue;
          const auto ti = theta_mask(r, zd[i]).mask, tj = theta_mask(r, zd[j]).mask;
          const bool law = (support_mask(r, zd[i]) & ~tj) == 0 && (support_mask(r, zd[j]) & ~ti) == 0;
          ok = ok && law == g.adjacent(i, j);
        }
      CHECK(ok);
      for (const auto& core : ideal_cores(r)) {
        std::size_t want = 1;
        for (std::size_t c = 0; c < r.components().size(); ++c)
          if (core.support >> c & 1) want *= r.components()[c].order() - 1;
        CHECK(core.core.size() == want);
      }
      // twin classes of Gamma(R) are the cores
      std::set<std::vector<Vertex>> twins, cores;
      for (const auto& c : twin_classes(g).classes) twins.insert(c);
      for (const auto& core : ideal_cores(r)) cores.insert(vertices_of(r, core.core));
      CHECK(twins == cores);
    }
  }

  TEST_CASE("semisimple isomorphisms up to order 200") {
    for (std::uint32_t a : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
      for (std::uint32_t b : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 16u, 25u}) {
        if (a * b > 200) continue;
        const Ring r = Ring::product({Ring::field(a), Ring::field(b)});
        const auto jd = semisimple_join_decomposition(r);
        CHECK(verify_isomorphism(zero_divisor_graph(r), generalized_join(jd.spec), jd.psi));
      }
  }
}
