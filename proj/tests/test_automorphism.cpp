#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "zdg/automorphism.hpp"
#include "zdg/export.hpp"
#include "zdg/invariants.hpp"
#include "zdg/zero_divisor.hpp"

using namespace zdg;

namespace {

BigInt factorial(std::uint32_t n) {
  BigInt r = 1;
  for (std::uint32_t i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<Graph> corpus() {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint32_t code = 0; code < (1u << (n * (n - 1) / 2)); code += (n == 5 ? 5 : 1))
      out.push_back(oracle::graph_from_code(n, code));
  // a few 6..9 vertex graphs with varied symmetry
  for (std::size_t n = 6; n <= 9; ++n) {
    out.push_back(standard_graph(StandardKind::Cycle, n));
    out.push_back(standard_graph(StandardKind::Path, n));
  }
  out.push_back(zero_divisor_graph(Ring::zn(12)));
  out.push_back(zero_divisor_graph(make_ring("prod:f2,f4")));
  out.push_back(zero_divisor_graph(make_ring("prod:f3,f3")));
  out.push_back(boutin_gap_graph(3));
  out.push_back(generalized_join({standard_graph(StandardKind::Path, 3),
                                  {standard_graph(StandardKind::Empty, 2), standard_graph(StandardKind::Complete, 2),
                                   standard_graph(StandardKind::Cycle, 4)}}));
  out.push_back(Graph(9, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {6, 7}, {7, 8}, {8, 6}}));
  out.push_back(Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}}));
  return out;
}

}  // namespace

TEST_SUITE("automorphism") {
  TEST_CASE("permutations") {
    const Permutation a(std::vector<Vertex>{1, 2, 0});
    const Permutation b(std::vector<Vertex>{1, 0, 2});
    CHECK((a * b)[0] == a[b[0]]);
    CHECK((a * a.inverse()).is_identity());
    CHECK_THROWS_AS(Permutation(std::vector<Vertex>{0, 0}), std::invalid_argument);
    StabilizerChain chain(3, std::vector<Permutation>{a, b});
    CHECK(chain.order() == 6);
    CHECK(chain.contains(a * b));
  }

  TEST_CASE("known groups") {
    CHECK(automorphism_group(standard_graph(StandardKind::Complete, 3)).order == 6);
    CHECK(automorphism_group(zero_divisor_graph(Ring::zn(12))).order == 8);
    const auto p4 = automorphism_group(standard_graph(StandardKind::Path, 4));
    CHECK(p4.order == 2);
    CHECK(p4.orbits == std::vector<VertexSet>{{0, 3}, {1, 2}});
    CHECK(automorphism_group(standard_graph(StandardKind::Empty, 5)).orbits == std::vector<VertexSet>{{0, 1, 2, 3, 4}});
    CHECK(automorphism_group(standard_graph(StandardKind::Cycle, 10)).order == 20);
    CHECK(automorphism_group(zero_divisor_graph(make_ring("bool:5"))).order == 120);
    CHECK(automorphism_group(standard_graph(StandardKind::Empty, 30)).order == factorial(30));

    const auto z12 = automorphism_group(zero_divisor_graph(Ring::zn(12)));
    CHECK(z12.orbits == std::vector<VertexSet>{{0, 6}, {1, 5}, {2, 4}, {3}});
    const Graph gap2 = boutin_gap_graph(2);
    // v-2..v2 = 0..4, u = 5, w = 6
    CHECK(automorphism_group(gap2).orbits == std::vector<VertexSet>{{0, 4}, {1, 3}, {2}, {5}, {6}});
  }

  TEST_CASE("group order against brute force") {
    for (const auto& g : corpus()) {
      const auto group = automorphism_group(g);
      const auto all = oracle::all_automorphisms(g);
      CHECK(group.order == all.size());
      CHECK(group.search_order == group.order);
      for (const auto& p : group.generators) CHECK(is_automorphism(g, p));
      // orbits from the enumerated group
      std::set<VertexSet> want;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::set<Vertex> orbit;
        for (const auto& s : all) orbit.insert(s[v]);
        want.insert(VertexSet(orbit.begin(), orbit.end()));
      }
      CHECK(std::set<VertexSet>(group.orbits.begin(), group.orbits.end()) == want);
      // twin classes sit inside orbits
      for (const auto& c : twin_classes(g).classes) {
        bool inside = false;
        for (const auto& o : group.orbits) inside = inside || std::includes(o.begin(), o.end(), c.begin(), c.end());
        CHECK(inside);
      }
    }
  }

  TEST_CASE("fixing sets agree with the two-automorphism definition") {
    for (const auto& g : corpus()) {
      const std::size_t n = g.vertex_count();
      if (n > 9) continue;
      const auto all = oracle::all_automorphisms(g);
      for (std::size_t k = 0; k <= std::min<std::size_t>(n, 3); ++k)
        for (const auto& s : oracle::subsets(n, k)) CHECK(is_fixing_set(g, s) == oracle::determining_by_pairs(all, s));
    }
  }

  TEST_CASE("fixing examples") {
    const Graph k3 = standard_graph(StandardKind::Complete, 3);
    CHECK_FALSE(has_nontrivial_fixing_automorphism(k3, std::vector<Vertex>{0, 1}));
    CHECK(has_nontrivial_fixing_automorphism(k3, std::vector<Vertex>{0}));
    const Ring z12 = Ring::zn(12);
    CHECK_FALSE(has_nontrivial_fixing_automorphism(zero_divisor_graph(z12), vertices_of(z12, zn_canonical_set(12))));
    CHECK_THROWS_AS(has_nontrivial_fixing_automorphism(k3, std::vector<Vertex>{3}), std::out_of_range);
    // search base always fixes
    for (const auto& g : corpus()) CHECK(is_fixing_set(g, search_base(g)));
  }

  TEST_CASE("automorphism order of Gamma(Z_n) up to 100") {
    for (std::uint32_t n = 4; n <= 100; ++n) {
      if (is_prime(n)) continue;
      CAPTURE(n);
      BigInt want = 1;
      for (std::uint32_t d : zn_context(n).proper_divisors) want *= factorial(oracle::phi(n / d));
      const auto group = automorphism_group(zero_divisor_graph(Ring::zn(n)));
      CHECK(group.order == want);
      CHECK(group.search_order == want);
    }
  }

  TEST_CASE("generator export") {
    const auto text = to_json(automorphism_group(standard_graph(StandardKind::Path, 4)));
    CHECK(text.find("\"order\": \"2\"") != std::string::npos);
    CHECK(text.find("[\n      3,\n      2,\n      1,\n      0\n    ]") != std::string::npos);
  }
}
