#include <doctest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "pathsat/constructions.hpp"
#include "pathsat/saturation.hpp"
#include "pathsat/symmetry.hpp"

using namespace pathsat;

namespace {

int edge_count(const Graph& g) { return static_cast<int>(g.edges().size()); }
int nonedge_count(const Graph& g) { return g.order() * (g.order() - 1) / 2 - edge_count(g); }

// Every verdict's witness is an induced path of order k in the graph with
// that one pair toggled, and it uses both endpoints of the pair.
void check_witnesses(const Graph& g, const SaturationReport& rep) {
  for (const auto& v : rep.verdicts) {
    if (v.status != VerdictStatus::kOk) continue;
    REQUIRE(v.witness);
    const bool add = v.kind == Perturbation::kNonEdgeAdded;
    CHECK(g.adjacent(v.pair.first, v.pair.second) != add);
    const Graph h = toggle_edge(g, v.pair.first, v.pair.second, add);
    CHECK(is_induced_path(h, *v.witness));
    CHECK(static_cast<int>(v.witness->size()) == rep.k);
    const auto has = [&](Vertex x) { return std::find(v.witness->begin(), v.witness->end(), x) != v.witness->end(); };
    CHECK(has(v.pair.first));
    CHECK(has(v.pair.second));
  }
}

}  // namespace

TEST_CASE("G_2 and G_3 are saturated without reduction") {
  for (int n = 2; n <= 3; ++n) {
    const Graph g = build_gn(n);
    const SaturationReport rep = verify_induced_saturated(g, 3 * n);
    CHECK(rep.summary == SaturationSummary::kSaturated);
    CHECK(rep.base_free);
    CHECK_FALSE(rep.reduced);
    CHECK(rep.checked_edges);
    CHECK(rep.checked_nonedges);
    CHECK(static_cast<int>(rep.verdicts.size()) == edge_count(g) + nonedge_count(g));
    CHECK(rep.count(VerdictStatus::kOk) == static_cast<int>(rep.verdicts.size()));
    check_witnesses(g, rep);
  }
}

TEST_CASE("verdicts list edges first, each half ascending") {
  const SaturationReport rep = verify_induced_saturated(build_gn(2), 6);
  const auto key = [](const PerturbationVerdict& v) { return std::make_pair(static_cast<int>(v.kind), v.pair); };
  CHECK(std::is_sorted(rep.verdicts.begin(), rep.verdicts.end(),
                       [&](const auto& a, const auto& b) { return key(a) < key(b); }));
}

TEST_CASE("Kneser graphs are P6-saturated") {
  for (int n = 5; n <= 7; ++n) {
    const Graph g = build_kneser(n);
    const SaturationReport rep = verify_induced_saturated(g, 6);
    CHECK(rep.saturated());
    check_witnesses(g, rep);
  }
}

TEST_CASE("disjoint copies of G_2 stay saturated") {
  for (int c = 2; c <= 3; ++c) {
    const Graph g = disjoint_union(build_gn(2), c);
    const SaturationReport rep = verify_induced_saturated(g, 6);
    CHECK(rep.saturated());
    CHECK(static_cast<int>(rep.verdicts.size()) == edge_count(g) + nonedge_count(g));
  }
}

TEST_CASE("graphs containing P_k are not free and skip the sweep") {
  const Graph c5 = build_cycle(5);
  const SaturationReport rep = verify_induced_saturated(c5, 4);
  CHECK(rep.summary == SaturationSummary::kNotFree);
  CHECK_FALSE(rep.base_free);
  REQUIRE(rep.base_witness);
  CHECK(is_induced_path(c5, *rep.base_witness));
  CHECK(rep.verdicts.empty());
  CHECK(to_string(rep.summary) == "not_free");
}

TEST_CASE("missing witnesses are reported") {
  // P_5 is P_6-free, but deleting an edge leaves nothing of order 6.
  const Graph p5 = build_path(5);
  const SaturationReport rep = verify_induced_saturated(p5, 6);
  CHECK(rep.summary == SaturationSummary::kMissingWitness);
  CHECK(rep.count(VerdictStatus::kFail) == static_cast<int>(rep.verdicts.size()));
  for (const auto& v : rep.verdicts) CHECK_FALSE(v.witness);

  // C_6 with k = 6: deleting an edge leaves P_6, adding a chord does not.
  const SaturationReport c6 = verify_induced_saturated(build_cycle(6), 6);
  CHECK(c6.summary == SaturationSummary::kMissingWitness);
  for (const auto& v : c6.verdicts) {
    CHECK((v.status == VerdictStatus::kOk) == (v.kind == Perturbation::kEdgeDeleted));
  }
}

TEST_CASE("budget hits make the summary inconclusive") {
  SaturationOptions opt;
  opt.base_budget.node_limit = 10;
  const SaturationReport base = verify_induced_saturated(build_gn(4), 12, opt);
  CHECK(base.summary == SaturationSummary::kInconclusive);
  CHECK(base.base_status == SearchStatus::kBudgetExceeded);
  CHECK(base.verdicts.empty());

  SaturationOptions witness;
  witness.witness_budget.node_limit = 1;
  const SaturationReport rep = verify_induced_saturated(build_gn(2), 6, witness);
  CHECK(rep.summary == SaturationSummary::kInconclusive);
  CHECK(rep.count(VerdictStatus::kBudget) > 0);
  CHECK(rep.count(VerdictStatus::kFail) == 0);
}

TEST_CASE("reduced and unreduced runs agree") {
  struct Case {
    Graph g;
    GeneratorSet gens;
    int k;
  };
  std::vector<Case> cases;
  cases.push_back({build_gn(2), gn_generators(2), 6});
  cases.push_back({build_gn(3), gn_generators(3), 9});
  cases.push_back({build_kneser(5), kneser_generators(5), 6});
  cases.push_back({build_kneser(6), kneser_generators(6), 6});
  for (const auto& c : cases) {
    SaturationOptions opt;
    opt.generators = &c.gens;
    const SaturationReport full = verify_induced_saturated(c.g, c.k);
    const SaturationReport red = verify_induced_saturated(c.g, c.k, opt);
    CHECK(red.reduced);
    CHECK(red.summary == full.summary);
    REQUIRE(red.verdicts.size() == full.verdicts.size());
    int reps = 0;
    for (size_t i = 0; i < red.verdicts.size(); ++i) {
      CHECK(red.verdicts[i].pair == full.verdicts[i].pair);
      CHECK(red.verdicts[i].kind == full.verdicts[i].kind);
      CHECK(red.verdicts[i].status == full.verdicts[i].status);
      if (!red.verdicts[i].implied) {
        ++reps;
        CHECK(red.verdicts[i].transport == "id");
        CHECK(red.verdicts[i].representative == red.verdicts[i].pair);
      }
    }
    CHECK(reps == red.edge_orbits + red.nonedge_orbits);
    CHECK(red.generator_names == c.gens.names());
    check_witnesses(c.g, red);
  }
}

TEST_CASE("reduced G_n orbit counts") {
  const std::map<int, std::pair<int, int>> expected{{2, {2, 3}}, {3, {2, 4}}, {4, {2, 5}}};
  for (const auto& [n, counts] : expected) {
    const GeneratorSet gens = gn_generators(n);
    SaturationOptions opt;
    opt.generators = &gens;
    const SaturationReport rep = verify_induced_saturated(build_gn(n), 3 * n, opt);
    CHECK(rep.saturated());
    CHECK(rep.edge_orbits == counts.first);
    CHECK(rep.nonedge_orbits == counts.second);
  }
}

TEST_CASE("implied verdicts carry orbit sizes and transport words") {
  const Graph g = build_gn(3);
  const GeneratorSet gens = gn_generators(3);
  SaturationOptions opt;
  opt.generators = &gens;
  const SaturationReport rep = verify_induced_saturated(g, 9, opt);
  int covered = 0;
  int spot = 0;
  for (const auto& v : rep.verdicts) {
    if (!v.implied) {
      covered += v.orbit_size;
      continue;
    }
    CHECK(v.transport != "id");
    CHECK_FALSE(v.transport.empty());
    if (spot++ < 50) {
      // Re-validate the transported witness independently.
      const bool add = v.kind == Perturbation::kNonEdgeAdded;
      REQUIRE(v.witness);
      CHECK(is_induced_path(toggle_edge(g, v.pair.first, v.pair.second, add), *v.witness));
    }
  }
  CHECK(spot >= 50);
  CHECK(covered == static_cast<int>(rep.verdicts.size()));
}

TEST_CASE("generator sets must be verified for the graph under test") {
  const GeneratorSet g2 = gn_generators(2);
  SaturationOptions opt;
  opt.generators = &g2;
  CHECK_THROWS_AS(verify_induced_saturated(build_gn(3), 9, opt), SymmetryError);
  CHECK_THROWS_AS(verify_induced_saturated(build_gn(2), 1), GraphError);
}

TEST_CASE("side checks cover one half each") {
  const Graph g = build_gn(2);
  const SaturationReport del = verify_deletion_side(g, 6);
  const SaturationReport add = verify_addition_side(g, 6);
  CHECK(del.checked_edges);
  CHECK_FALSE(del.checked_nonedges);
  CHECK(add.checked_nonedges);
  CHECK_FALSE(add.checked_edges);
  CHECK(static_cast<int>(del.verdicts.size()) == edge_count(g));
  CHECK(static_cast<int>(add.verdicts.size()) == nonedge_count(g));
  CHECK(del.saturated());
  CHECK(add.saturated());

  // C_6 fails only on the addition side.
  CHECK(verify_deletion_side(build_cycle(6), 6).saturated());
  CHECK(verify_addition_side(build_cycle(6), 6).summary == SaturationSummary::kMissingWitness);
}

TEST_CASE("parallel runs give identical reports") {
  const Graph g = build_kneser(6);
  const GeneratorSet gens = kneser_generators(6);
  SaturationOptions one;
  SaturationOptions many;
  many.jobs = 3;
  many.generators = &gens;
  one.generators = &gens;
  const SaturationReport a = verify_induced_saturated(g, 6, one);
  const SaturationReport b = verify_induced_saturated(g, 6, many);
  REQUIRE(a.verdicts.size() == b.verdicts.size());
  for (size_t i = 0; i < a.verdicts.size(); ++i) {
    CHECK(a.verdicts[i].witness == b.verdicts[i].witness);
    CHECK(a.verdicts[i].transport == b.verdicts[i].transport);
  }
}
