#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "pathsat/constructions.hpp"
#include "pathsat/permutation.hpp"

using namespace pathsat;
using pathsat::testing::gn;
using pathsat::testing::preserves_adjacency;

TEST_CASE("GnVertex indexing is a bijection with true-mod normalization") {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 0; i < 8 * n; ++i) CHECK(gn_index(gn_vertex(i, n), n) == i);
  }
  CHECK(gn_index({1, 0, 5}, 3) == 2 * 6 + 5);
  CHECK(gn_normalize({0, 1, -1}, 3) == GnVertex{0, 1, 5});
  CHECK(gn_normalize({0, 1, 13}, 3) == GnVertex{0, 1, 1});
  CHECK(gn_label({1, 0, 4}, 3) == "(10,4)");
}

TEST_CASE("gn_neighbors") {
  const auto nb = gn_neighbors({0, 0, 0}, 3);
  std::vector<GnVertex> got(nb.begin(), nb.end());
  for (GnVertex w : {GnVertex{1, 1, 0}, GnVertex{0, 1, 0}, GnVertex{0, 0, 5}, GnVertex{0, 0, 1}, GnVertex{1, 0, 2}}) {
    CHECK(std::find(got.begin(), got.end(), w) != got.end());
  }
  for (int n = 2; n <= 8; ++n) {
    const auto n11 = gn_neighbors({1, 1, 1}, n);
    CHECK(std::find(n11.begin(), n11.end(), GnVertex{0, 0, 1}) != n11.end());
    CHECK(std::find(n11.begin(), n11.end(), GnVertex{1, 0, 1}) != n11.end());
  }
  CHECK_THROWS_AS(gn_neighbors({0, 0, 0}, 1), GraphError);
}

TEST_CASE("gn_neighbors is symmetric and gives five distinct vertices") {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 0; i < 8 * n; ++i) {
      const GnVertex v = gn_vertex(i, n);
      const auto nb = gn_neighbors(v, n);
      std::vector<int> idx;
      for (const GnVertex& w : nb) idx.push_back(gn_index(w, n));
      std::sort(idx.begin(), idx.end());
      CHECK(std::adjacent_find(idx.begin(), idx.end()) == idx.end());
      for (const GnVertex& w : nb) {
        const auto back = gn_neighbors(w, n);
        CHECK(std::find(back.begin(), back.end(), v) != back.end());
      }
    }
  }
}

TEST_CASE("build_gn") {
  for (int n = 2; n <= 8; ++n) {
    const Graph g = build_gn(n);
    CHECK(g.order() == 8 * n);
    CHECK(is_regular(g, 5));
    CHECK(g.edge_count() == 20 * n);
    CHECK(g.label(gn(0, 1, 1, n)) == "(01,1)");
  }
  CHECK(build_gn(3).edge_count() == 60);
  CHECK_THROWS_AS(build_gn(1), GraphError);
  CHECK_THROWS_AS(build_gn(17), GraphError);
}

TEST_CASE("build_kneser") {
  const Graph k5 = build_kneser(5);
  CHECK(k5.order() == 10);
  CHECK(is_regular(k5, 3));
  CHECK(is_regular(build_kneser(4), 1));
  const Graph k7 = build_kneser(7);
  CHECK(k7.order() == 21);
  CHECK(is_regular(k7, 10));
  CHECK(k7.label(kneser_index(7, {3, 1})) == "{1,3}");
  CHECK(kneser_index(7, {1, 2}) == 0);
  CHECK_THROWS_AS(build_kneser(3), GraphError);
  CHECK(build_kneser(6, 3).order() == 20);
}

TEST_CASE("build_generalized_petersen") {
  const Graph p = build_generalized_petersen(5, 2);
  const auto w = are_isomorphic(p, build_kneser(5));
  REQUIRE(w);
  CHECK(preserves_adjacency(p, build_kneser(5), *w));
  const Graph g = build_generalized_petersen(10, 3);
  CHECK(g.order() == 20);
  CHECK(g.edge_count() == 30);
  CHECK(build_generalized_petersen(17, 6).order() == 34);
  CHECK(is_regular(build_generalized_petersen(17, 3), 3));
  CHECK_THROWS_AS(build_generalized_petersen(10, 5), GraphError);
  CHECK_THROWS_AS(build_generalized_petersen(10, 0), GraphError);
  CHECK_THROWS_AS(build_generalized_petersen(2, 1), GraphError);
}

TEST_CASE("named graphs") {
  const Graph h = build_named(NamedGraph::kHeawood);
  CHECK(h.order() == 14);
  CHECK(is_regular(h, 3));
  CHECK(girth(h) == 6);
  CHECK(is_bipartite(h));

  const Graph c = build_named(NamedGraph::kCoxeter);
  CHECK(c.order() == 28);
  CHECK(is_regular(c, 3));
  CHECK(girth(c) == 7);

  const Graph d = build_named(NamedGraph::kDyck);
  CHECK(d.order() == 32);
  CHECK(is_regular(d, 3));
  CHECK(is_bipartite(d));
  CHECK(girth(d) == 6);
  CHECK(to_string(NamedGraph::kDyck) == "dyck");
}

TEST_CASE("build_hypercube_diag") {
  CHECK(build_hypercube_diag(2) == build_complete(4));
  const Graph q4 = build_hypercube_diag(4);
  CHECK(q4.order() == 16);
  CHECK(is_regular(q4, 5));
  const auto w = are_isomorphic(q4, build_gn(2));
  REQUIRE(w);
  CHECK(preserves_adjacency(q4, build_gn(2), *w));
  const Graph q5 = build_hypercube_diag(5);
  CHECK(q5.order() == 32);
  CHECK(is_regular(q5, 6));
  CHECK_THROWS_AS(build_hypercube_diag(1), GraphError);
  CHECK_THROWS_AS(build_hypercube_diag(8), GraphError);
}

TEST_CASE("F16 arithmetic and the Raty graph") {
  constexpr F16 a = F16::alpha();
  static_assert(a.pow(4) == F16(0b0011));  // α⁴ = α + 1
  static_assert(a.pow(15) == F16(1));
  std::vector<int> cubes;
  for (const F16& x : f16_cubic_residues()) cubes.push_back(x.bits());
  CHECK(cubes == std::vector<int>{1, 8, 10, 12, 15});
  const Graph r = build_raty();
  CHECK(r.order() == 16);
  CHECK(is_regular(r, 5));
}

TEST_CASE("disjoint_union") {
  const Graph g2 = build_gn(2);
  CHECK(disjoint_union(g2, 1) == g2);
  const Graph two = disjoint_union(g2, 2);
  CHECK(two.order() == 32);
  CHECK(two.edge_count() == 80);
  CHECK_FALSE(two.adjacent(0, 16));
  CHECK(two.label(17) == "1:" + g2.label(1));
  CHECK_THROWS_AS(disjoint_union(g2, 9), GraphError);
  CHECK_THROWS_AS(disjoint_union(g2, 0), GraphError);
}

TEST_CASE("small helpers") {
  CHECK(girth(build_path(5)) == -1);
  CHECK(girth(build_cycle(9)) == 9);
  CHECK(is_bipartite(build_cycle(6)));
  CHECK_FALSE(is_bipartite(build_cycle(5)));
  CHECK(build_complete(5).edge_count() == 10);
}
