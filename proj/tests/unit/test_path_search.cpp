#include <doctest.h>

#include "helpers.hpp"
#include "pathsat/constructions.hpp"
#include "pathsat/path_search.hpp"

using namespace pathsat;
using pathsat::testing::random_graph;

namespace {

int longest_len(const Graph& g, const SearchOptions& opt = {}) {
  const SearchOutcome out = longest_induced_path(g, opt);
  REQUIRE(out.status == SearchStatus::kExhausted);
  REQUIRE(out.best);
  REQUIRE(is_induced_path(g, *out.best));
  return static_cast<int>(out.best->size());
}

}  // namespace

TEST_CASE("has_induced_path on G_2") {
  const Graph g2 = build_gn(2);
  const SearchOutcome six = has_induced_path(g2, 6);
  CHECK(six.status == SearchStatus::kExhausted);
  CHECK_FALSE(six.best);
  const SearchOutcome five = has_induced_path(g2, 5);
  REQUIRE(five.status == SearchStatus::kFound);
  CHECK(five.best->size() == 5);
  CHECK(is_induced_path(g2, *five.best));
  CHECK(has_induced_path(g2, 17).status == SearchStatus::kExhausted);
  CHECK_THROWS_AS(has_induced_path(g2, 0), GraphError);
}

TEST_CASE("Kneser graphs have no induced P6") {
  for (int n = 5; n <= 7; ++n) {
    CHECK(has_induced_path(build_kneser(n), 6).status == SearchStatus::kExhausted);
    CHECK(has_induced_path(build_kneser(n), 5).status == SearchStatus::kFound);
  }
}

TEST_CASE("a path graph contains itself") {
  const Graph p5 = build_path(5);
  const SearchOutcome out = has_induced_path(p5, 5);
  REQUIRE(out.status == SearchStatus::kFound);
  CHECK(*out.best == PathCertificate{0, 1, 2, 3, 4});
}

TEST_CASE("longest induced paths of small fixtures") {
  CHECK(longest_len(build_cycle(6)) == 5);
  CHECK(longest_len(build_cycle(5)) == 4);
  CHECK(longest_len(build_complete(5)) == 2);
  CHECK(longest_len(build_complete(2)) == 2);
  CHECK(longest_len(new_graph(3)) == 1);
  CHECK(longest_len(build_generalized_petersen(5, 2)) == 5);
  CHECK(longest_len(build_named(NamedGraph::kHeawood)) == 7);
}

TEST_CASE("longest induced path of G_n is 3n-1") {
  for (int n = 2; n <= 4; ++n) {
    const GeneratorSet gens = gn_generators(n);
    SearchOptions opt;
    opt.generators = &gens;
    CHECK(longest_len(build_gn(n), opt) == 3 * n - 1);
    CHECK(longest_len(build_gn(n)) == 3 * n - 1);
  }
}

TEST_CASE("usable_vertices") {
  const Graph p4 = build_path(4);
  CHECK(usable_vertices(p4, {}) == VertexSet::first_n(4));
  const std::vector<Vertex> one{1};
  CHECK(usable_vertices(p4, one).to_vector() == std::vector<Vertex>{0, 2, 3});
  const std::vector<Vertex> two{0, 1};
  CHECK(usable_vertices(p4, two).to_vector() == std::vector<Vertex>{2, 3});
  const std::vector<Vertex> three{0, 1, 2};
  CHECK(usable_vertices(p4, three).to_vector() == std::vector<Vertex>{3});
}

TEST_CASE("brute_force_longest") {
  CHECK(brute_force_longest(build_complete(3)) == 2);
  CHECK(brute_force_longest(build_generalized_petersen(5, 2)) == 5);
  CHECK(brute_force_longest(build_cycle(6)) == 5);
  CHECK_THROWS_AS(brute_force_longest(build_cycle(13)), GraphError);
}

TEST_CASE("search agrees with brute force on random graphs") {
  const double densities[] = {0.2, 0.5, 0.8};
  for (int seed = 0; seed < 60; ++seed) {
    const int order = 4 + seed % 9;
    const Graph g = random_graph(order, densities[seed % 3], 1000 + seed);
    const int truth = brute_force_longest(g);
    CHECK(longest_len(g) == truth);
    SearchOptions conn;
    conn.connectivity_bound = true;
    CHECK(longest_len(g, conn) == truth);
    CHECK(has_induced_path(g, truth).status == SearchStatus::kFound);
    CHECK(has_induced_path(g, truth + 1).status == SearchStatus::kExhausted);
  }
}

TEST_CASE("symmetry reduction does not change has_induced_path status") {
  for (int n = 2; n <= 3; ++n) {
    const Graph g = build_gn(n);
    const GeneratorSet gens = gn_generators(n);
    SearchOptions reduced;
    reduced.generators = &gens;
    for (int k = 1; k <= 10; ++k) {
      CHECK(has_induced_path(g, k).status == has_induced_path(g, k, reduced).status);
    }
  }
}

TEST_CASE("monotonicity in k") {
  const Graph g = build_named(NamedGraph::kHeawood);
  for (int k = 2; k <= 10; ++k) {
    if (has_induced_path(g, k).status == SearchStatus::kFound) {
      CHECK(has_induced_path(g, k - 1).status == SearchStatus::kFound);
    }
  }
}

TEST_CASE("certificates are deterministic across runs and job counts") {
  const Graph g = build_gn(4);
  const GeneratorSet gens = gn_generators(4);
  SearchOptions one;
  SearchOptions four;
  four.jobs = 4;
  const auto a = longest_induced_path(g, one);
  const auto b = longest_induced_path(g, one);
  const auto c = longest_induced_path(g, four);
  CHECK(*a.best == *b.best);
  CHECK(*a.best == *c.best);
  CHECK(*has_induced_path(g, 11, one).best == *has_induced_path(g, 11, four).best);

  const Graph q = build_hypercube_diag(5);
  CHECK(*longest_induced_path(q, one).best == *longest_induced_path(q, four).best);
  SearchOptions reduced = four;
  reduced.generators = &gens;
  CHECK(longest_induced_path(g, reduced).best->size() == 11);
}

TEST_CASE("budgets stop the search and keep the best path") {
  const Graph g = build_gn(6);
  SearchOptions opt;
  opt.budget.node_limit = 5000;
  const SearchOutcome out = longest_induced_path(g, opt);
  CHECK(out.status == SearchStatus::kBudgetExceeded);
  REQUIRE(out.best);
  CHECK(is_induced_path(g, *out.best));
  CHECK(out.nodes_expanded < 5000 + 4096 * 2);

  const SearchOutcome none = has_induced_path(g, 18, opt);
  CHECK(none.status == SearchStatus::kBudgetExceeded);
  CHECK(to_string(SearchStatus::kBudgetExceeded) == "budget_exceeded");
}

TEST_CASE("anchored search matches plain search on perturbations of P_k-free graphs") {
  struct Case {
    Graph g;
    int k;
  };
  std::vector<Case> cases{{build_gn(2), 6}, {build_kneser(5), 6}, {build_cycle(6), 6}, {build_named(NamedGraph::kHeawood), 8}};
  for (int seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(9, 0.35, 77 + seed);
    cases.push_back({g, brute_force_longest(g) + 1});
  }
  for (const auto& [g, k] : cases) {
    REQUIRE(has_induced_path(g, k).status == SearchStatus::kExhausted);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        const Graph h = toggle_edge(g, u, v, !g.adjacent(u, v));
        const SearchOutcome plain = has_induced_path(h, k);
        const SearchOutcome anchored = find_induced_path_through(h, k, u, v);
        CHECK(plain.status == anchored.status);
        if (anchored.best) {
          CHECK(is_induced_path(h, *anchored.best));
          CHECK(static_cast<int>(anchored.best->size()) == k);
          CHECK(std::find(anchored.best->begin(), anchored.best->end(), u) != anchored.best->end());
          CHECK(std::find(anchored.best->begin(), anchored.best->end(), v) != anchored.best->end());
        }
      }
    }
  }
}

TEST_CASE("anchored search finds paths with the anchor anywhere") {
  const Graph p6 = build_path(6);
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex r = 0; r < 6; ++r) {
      const SearchOutcome out = find_induced_path_through(p6, 6, a, r);
      REQUIRE(out.status == SearchStatus::kFound);
      CHECK(is_induced_path(p6, *out.best));
    }
  }
  CHECK(find_induced_path_through(p6, 7, 0, 5).status == SearchStatus::kExhausted);
  CHECK_THROWS_AS(find_induced_path_through(p6, 3, 0, 6), GraphError);
}
