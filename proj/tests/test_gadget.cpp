#include <doctest.h>

#include <algorithm>

#include "cyclelab/adjuster.hpp"
#include "cyclelab/core_paths.hpp"
#include "cyclelab/exact_path.hpp"
#include "cyclelab/expansion.hpp"
#include "cyclelab/families.hpp"
#include "oracles.hpp"

using namespace cyclelab;

namespace {

VertexExpansion ball_expansion(const Graph& g, int center, int radius) {
  VertexExpansion f;
  f.center = center;
  f.members = ball(g, {center}, radius);
  f.radius_bound = radius;
  return f;
}

}  // namespace

TEST_CASE("trim_expansion") {
  std::vector<std::pair<int, int>> star_edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
  Graph star = Graph::from_edges(star_edges);
  VertexExpansion f = ball_expansion(star, 0, 1);
  CHECK(f.size() == 6);
  auto t = trim_expansion(star, f, 3);
  CHECK(t.size() == 3);
  CHECK(t.center == 0);
  CHECK(validate_expansion(star, t));

  CHECK(trim_expansion(star, f, 6).members == f.members);
  CHECK_THROWS_AS(trim_expansion(star, f, 0), DomainError);
  CHECK_THROWS_AS(trim_expansion(star, f, 7), DomainError);

  // path c-a-b: (3,2)-expansion of c; trimming drops the far endpoint
  Graph p3 = path_graph(3);
  VertexExpansion pf = ball_expansion(p3, 0, 2);
  auto pt = trim_expansion(p3, pf, 2);
  CHECK(pt.members == VertexSet{0, 1});
}

TEST_CASE("trimming keeps validity at every size") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_gnp(rng.uniform_int(6, 18), 0.35, rng.next_u64());
    int center = rng.uniform_int(0, g.order() - 1);
    VertexExpansion f = ball_expansion(g, center, 2);
    for (int d = 1; d <= f.size(); ++d) {
      auto t = trim_expansion(g, f, d);
      CHECK(t.size() == d);
      CHECK(validate_expansion(g, t));
    }
  }
}

TEST_CASE("shortest cycles and girth") {
  CHECK(girth_or_zero(cycle_graph(6)) == 6);
  CHECK(girth_or_zero(petersen_graph()) == 5);
  CHECK(girth_or_zero(path_graph(5)) == 0);
  CHECK(girth_or_zero(complete_bipartite(3, 3)) == 4);

  auto c = shortest_cycle(petersen_graph(), {});
  REQUIRE(c.has_value());
  CHECK(validate_cycle(petersen_graph(), *c));
  CHECK(c->length() == 5);

  auto cands = shortest_cycle_candidates(complete_bipartite(3, 3), {}, 10);
  CHECK(cands.size() >= 2);
  for (const auto& cyc : cands) {
    CHECK(validate_cycle(complete_bipartite(3, 3), cyc));
    CHECK(cyc.length() == 4);
  }

  // avoiding vertices changes the answer
  auto avoiding = shortest_cycle(complete_bipartite(3, 3), {0});
  REQUIRE(avoiding.has_value());
  for (int v : avoiding->vertices) CHECK(v != 0);
}

TEST_CASE("find_vertex_expansions claims disjointly") {
  auto k88 = complete_bipartite(8, 8);
  auto c = shortest_cycle(k88, {});
  REQUIRE(c.has_value());
  VertexSet on_c = as_vertex_set(c->vertices);
  std::vector<int> off;
  for (int v = 0; v < 16 && off.size() < 2; ++v) {
    if (!set_contains(on_c, v)) off.push_back(v);
  }
  auto found = find_vertex_expansions(k88, c, {{off[0], 3}, {off[1], 3}}, 16);
  REQUIRE(found.expansions.has_value());
  auto& exp = *found.expansions;
  CHECK(exp[0].size() == 3);
  CHECK(exp[1].size() == 3);
  CHECK(validate_expansion(k88, exp[0]));
  CHECK(validate_expansion(k88, exp[1]));
  CHECK(sets_disjoint(exp[0].members, exp[1].members));
  for (int i = 0; i < 2; ++i) {
    auto clash = set_intersection_of(exp[i].members, on_c);
    CHECK(clash.empty());
  }

  auto singles = find_vertex_expansions(k88, c, {{off[0], 1}}, 16);
  REQUIRE(singles.expansions.has_value());
  CHECK((*singles.expansions)[0].members == VertexSet{off[0]});

  // a 6-vertex path cannot host two disjoint size-5 expansions
  auto p6 = path_graph(6);
  auto fail = find_vertex_expansions(p6, std::nullopt, {{2, 5}, {3, 5}}, 6);
  CHECK(!fail.expansions.has_value());
  CHECK(fail.blocking_center >= 0);

  // C precondition: a non-shortest cycle is rejected on small graphs
  auto k33 = complete_bipartite(3, 3);
  Cycle six{{0, 3, 1, 4, 2, 5}};
  REQUIRE(validate_cycle(k33, six));
  CHECK_THROWS_AS(find_vertex_expansions(k33, six, {{0, 1}}, 6), DomainError);
}

TEST_CASE("enlarge_expansions") {
  auto k20 = complete_bipartite(20, 20);
  VertexExpansion small1{0, {0, 20, 21, 22, 23}, 1};
  VertexExpansion small2{1, {1, 24, 25, 26, 27}, 1};
  REQUIRE(validate_expansion(k20, small1));
  REQUIRE(validate_expansion(k20, small2));
  REQUIRE(sets_disjoint(small1.members, small2.members));

  auto grown = enlarge_expansions(k20, {}, {small1, small2}, 15);
  REQUIRE(grown.has_value());
  CHECK((*grown)[0].size() == 15);
  CHECK((*grown)[1].size() == 15);
  CHECK((*grown)[0].center == 0);
  CHECK((*grown)[1].center == 1);
  CHECK(sets_disjoint((*grown)[0].members, (*grown)[1].members));
  CHECK(validate_expansion(k20, (*grown)[0]));
  CHECK(validate_expansion(k20, (*grown)[1]));

  // target below current size trims
  auto shrunk = enlarge_expansions(k20, {}, {small1}, 3);
  REQUIRE(shrunk.has_value());
  CHECK((*shrunk)[0].size() == 3);

  // counting obstruction
  CHECK(!enlarge_expansions(k20, {}, {small1, small2}, 25).has_value());
}

TEST_CASE("core path engine: subset-DP and DFS agree") {
  Rng rng(61);
  CoreQuerySettings dp_mode;
  CoreQuerySettings dfs_mode;
  dfs_mode.maskdp_cap = 0;  // force the fallback
  for (int trial = 0; trial < 25; ++trial) {
    int n = rng.uniform_int(4, 10);
    Graph g = random_gnp(n, 0.45, rng.next_u64());
    int s = 0;
    int t = n - 1;
    VertexSet core;
    for (int v = 0; v < n; ++v) core.push_back(v);
    auto a = simple_path_lengths(g, core, s, t, n, dp_mode);
    auto b = simple_path_lengths(g, core, s, t, n, dfs_mode);
    CHECK(a.exhaustive);
    CHECK(b.exhaustive);
    CHECK(a.lengths == b.lengths);
    // and both agree with the independent enumeration oracle
    auto oracle = oracles::all_path_lengths(g, s, t);
    CHECK(a.lengths == std::vector<int>(oracle.begin(), oracle.end()));
    for (int len : a.lengths) {
      auto p = simple_path_with_length(g, core, s, t, len, dp_mode);
      REQUIRE(p.has_value());
      CHECK(validate_path(g, *p));
      CHECK(p->length() == len);
      CHECK(p->front() == s);
      CHECK(p->back() == t);
    }
  }
}

TEST_CASE("build_simple_adjuster on a complete bipartite host") {
  auto k12 = complete_bipartite(12, 12);
  auto c = shortest_cycle(k12, {});
  REQUIRE(c.has_value());
  VertexSet on_c = as_vertex_set(c->vertices);
  std::vector<int> off;
  for (int v = 0; v < 24 && off.size() < 2; ++v) {
    if (!set_contains(on_c, v)) off.push_back(v);
  }
  AdjusterSearchSettings settings;
  settings.d = 2;
  auto adj = build_simple_adjuster(k12, *c, off[0], off[1], settings);
  REQUIRE(adj.has_value());
  CHECK(adj->v1() == off[0]);
  CHECK(adj->v2() == off[1]);
  // the whole cycle sits inside the core
  for (int v : c->vertices) CHECK(set_contains(adj->core, v));
  auto report = validate_adjuster(k12, *adj);
  CHECK(report.ok());

  // tampering: move a core vertex into F1 breaks A1
  Adjuster bad = *adj;
  bad.f1.members = set_union_of(bad.f1.members, VertexSet{bad.core[0]});
  auto r1 = validate_adjuster(k12, bad);
  CHECK(!r1.a1_disjoint);

  // overstating the capacity breaks A4 at the top rung
  Adjuster over = *adj;
  over.capacity = 40;
  auto r2 = validate_adjuster(k12, over);
  CHECK(!r2.a4_ladder);
}

TEST_CASE("find_adjuster_avoiding") {
  auto k20 = complete_bipartite(20, 20);
  VertexSet u{0, 1, 20, 21, 22};
  auto adj = find_adjuster_avoiding(k20, u, {});
  REQUIRE(adj.has_value());
  CHECK(validate_adjuster(k20, *adj).ok());
  CHECK(sets_disjoint(adj->all(), u));

  CHECK(!find_adjuster_avoiding(path_graph(8), {}, {}).has_value());

  VertexSet all;
  for (int v = 0; v < 40; ++v) all.push_back(v);
  CHECK(!find_adjuster_avoiding(k20, all, {}).has_value());

  // whole-graph C6 leaves no anchors off the cycle
  CHECK(!find_adjuster_avoiding(cycle_graph(6), {}, {}).has_value());
}

TEST_CASE("chain_adjusters builds larger capacities") {
  auto k = complete_bipartite(20, 20);
  AdjusterSearchSettings settings;
  settings.d = 2;
  auto chained = chain_adjusters(k, {}, 2, settings);
  REQUIRE(chained.adjuster.has_value());
  const auto& adj = *chained.adjuster;
  CHECK(adj.capacity == 2);
  auto report = validate_adjuster(k, adj);
  CHECK(report.ok());

  // all rungs materialize as real paths, stepping by exactly 2
  VertexSet core_plus = set_union_of(adj.core, as_vertex_set({adj.v1(), adj.v2()}));
  for (int i = 0; i <= adj.capacity; ++i) {
    auto rung = simple_path_with_length(k, core_plus, adj.v1(), adj.v2(),
                                        adj.base_length + 2 * i);
    REQUIRE(rung.has_value());
    CHECK(validate_path(k, *rung));
    CHECK(rung->length() == adj.base_length + 2 * i);
  }

  // r = 1 delegates to the simple search
  auto single = chain_adjusters(k, {}, 1, settings);
  CHECK(single.adjuster.has_value());
  CHECK(single.adjuster->capacity == 1);

  // a host with exactly one cycle cannot reach capacity 2
  std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}};
  Graph one_cycle = Graph::from_edges(6, e);
  auto partial = chain_adjusters(one_cycle, {}, 2, settings);
  CHECK(!partial.adjuster.has_value());
  CHECK(partial.achieved_capacity <= 1);
}

TEST_CASE("simple adjusters validate across random bipartite hosts") {
  Rng rng(909);
  int successes = 0;
  for (int seed = 0; seed < 60; ++seed) {
    int left = rng.uniform_int(6, 30);
    int right = rng.uniform_int(6, 30);
    Graph g;
    {
      std::vector<std::pair<int, int>> edges;
      double p = 0.25 + 0.5 * rng.uniform01();
      for (int i = 0; i < left; ++i) {
        for (int j = 0; j < right; ++j) {
          if (rng.uniform01() < p) edges.emplace_back(i, left + j);
        }
      }
      g = Graph::from_edges(left + right, edges);
    }
    AdjusterSearchSettings settings;
    settings.d = 1 + seed % 3;
    auto adj = find_adjuster_avoiding(g, {}, settings);
    if (!adj) continue;
    ++successes;
    auto report = validate_adjuster(g, *adj);
    CHECK(report.ok());
    if (!report.ok()) {
      for (const auto& f : report.failures) MESSAGE(f);
    }
  }
  CHECK(successes > 30);  // most random hosts admit one
}
