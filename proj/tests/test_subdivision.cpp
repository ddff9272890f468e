#include <doctest.h>

#include "cyclelab/families.hpp"
#include "cyclelab/subdivision.hpp"
#include "oracles.hpp"

using namespace cyclelab;

namespace {

Graph octahedron() {
  // K_{2,2,2}: classes {0,1}, {2,3}, {4,5}
  std::vector<std::pair<int, int>> e;
  for (int a : {0, 1}) {
    for (int b : {2, 3}) e.emplace_back(a, b);
    for (int c : {4, 5}) e.emplace_back(a, c);
  }
  for (int b : {2, 3}) {
    for (int c : {4, 5}) e.emplace_back(b, c);
  }
  return Graph::from_edges(6, e);
}

}  // namespace

TEST_CASE("skewed TK2 construction") {
  auto k39 = complete_bipartite(3, 9);
  VertexSet w{0, 1, 2};
  VertexSet u{3, 4, 5, 6, 7, 8, 9, 10, 11};
  auto sub = find_tk2_skewed(k39, u, w, 3);
  CHECK(sub.k == 3);
  CHECK(sub.ell == 2);
  auto report = validate_subdivision(k39, sub);
  CHECK(report.ok);
  for (int b : sub.branch_vertices) CHECK(set_contains(w, b));
  for (const auto& bp : sub.paths) {
    REQUIRE(bp.path.vertices.size() == 3);
    CHECK(set_contains(u, bp.path.vertices[1]));
  }

  // two branch vertices, four common neighbours
  auto k24 = complete_bipartite(2, 4);
  auto small = find_tk2_skewed(k24, {2, 3, 4, 5}, {0, 1}, 2);
  CHECK(small.paths.size() == 1);
  CHECK(small.paths[0].path.length() == 2);
  CHECK(validate_subdivision(k24, small).ok);

  // |U| = |W|^2 - 1 violates the skew precondition
  CHECK_THROWS_AS(find_tk2_skewed(k39, {3, 4, 5, 6, 7, 8, 9, 10}, w, 3), DomainError);
  // a degree-deficient vertex is reported
  Graph sparse = Graph::from_edges(6, {{0, 2}, {0, 3}, {1, 2}, {2, 3}, {4, 2}, {5, 3}});
  CHECK_THROWS_AS(find_tk2_skewed(sparse, {2, 3, 4, 5}, {0, 1}, 2), DomainError);
  CHECK_THROWS_AS(find_tk2_skewed(k39, u, set_union_of(w, VertexSet{3}), 3), DomainError);
}

TEST_CASE("skewed TK2 on random qualifying instances") {
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    int wsize = rng.uniform_int(2, 5);
    int usize = wsize * wsize + rng.uniform_int(0, 4);
    int d = rng.uniform_int(2, wsize);
    // W side fully joined to U side guarantees the degree hypothesis
    Graph g = complete_bipartite(wsize, usize);
    VertexSet w, u;
    for (int i = 0; i < wsize; ++i) w.push_back(i);
    for (int i = 0; i < usize; ++i) u.push_back(wsize + i);
    auto sub = find_tk2_skewed(g, u, w, d);
    CHECK(sub.k == d);
    CHECK(validate_subdivision(g, sub).ok);
    for (int b : sub.branch_vertices) CHECK(set_contains(w, b));
    for (const auto& bp : sub.paths) CHECK(set_contains(u, bp.path.vertices[1]));
  }
}

TEST_CASE("balanced subdivision search on named graphs") {
  auto k4 = find_balanced_subdivision(complete_graph(4), 4, 1, 2);
  REQUIRE(k4.status == SearchStatus::found);
  CHECK(k4.subdivision->ell == 1);
  CHECK(validate_subdivision(complete_graph(4), *k4.subdivision).ok);

  auto c6 = find_balanced_subdivision(cycle_graph(6), 3, 1, 3);
  REQUIRE(c6.status == SearchStatus::found);
  CHECK(c6.subdivision->ell == 2);
  CHECK(validate_subdivision(cycle_graph(6), *c6.subdivision).ok);

  // the octahedron K_{2,2,2} is K4-free (max clique 3), so no TK_4^(1)
  CHECK(oracles::naive_max_clique(octahedron()) == 3);
  auto oct = find_balanced_subdivision(octahedron(), 4, 1, 1);
  CHECK(oct.status == SearchStatus::not_found_proved);
  // and TK_3^(1) (a triangle) is there
  auto oct3 = find_balanced_subdivision(octahedron(), 3, 1, 1);
  REQUIRE(oct3.status == SearchStatus::found);
  CHECK(validate_subdivision(octahedron(), *oct3.subdivision).ok);

  CHECK_THROWS_AS(find_balanced_subdivision(complete_graph(4), 2, 1, 1), DomainError);
}

TEST_CASE("search matches the naive enumerator on the small cross-product") {
  Rng rng(27);
  std::vector<Graph> corpus = {complete_graph(4),       complete_graph(5),
                               cycle_graph(6),          cycle_graph(9),
                               complete_bipartite(3, 3), complete_bipartite(2, 4),
                               petersen_graph(),         grid_graph(3, 3),
                               octahedron(),             path_graph(8)};
  for (int i = 0; i < 8; ++i) {
    corpus.push_back(random_gnp(rng.uniform_int(5, 9), 0.3 + 0.4 * rng.uniform01(),
                                rng.next_u64()));
  }
  for (const auto& g : corpus) {
    if (g.order() > 10) continue;
    for (int ell = 1; ell <= 3; ++ell) {
      auto mine = find_balanced_subdivision(g, 3, ell, ell);
      bool truth = oracles::naive_balanced_subdivision_exists(g, 3, ell);
      REQUIRE(mine.status != SearchStatus::unknown);
      CHECK((mine.status == SearchStatus::found) == truth);
      if (mine.subdivision) {
        CHECK(validate_subdivision(g, *mine.subdivision).ok);
      }
    }
  }
}

TEST_CASE("expander-pipeline construction on complete bipartite hosts") {
  auto k30 = complete_bipartite(30, 30);
  ConstructSettings settings;
  settings.path.adjuster.d = 1;
  bool found_even = false;
  for (int ell : {2, 4, 6}) {
    auto res = construct_balanced_subdivision_expander(k30, 3, ell, settings);
    if (res.subdivision) {
      found_even = true;
      CHECK(res.subdivision->ell == ell);
      auto report = validate_subdivision(k30, *res.subdivision);
      CHECK(report.ok);
      break;
    }
  }
  CHECK(found_even);

  // degenerate pair count
  auto pair_only = construct_balanced_subdivision_expander(k30, 2, 2, settings);
  REQUIRE(pair_only.subdivision.has_value());
  CHECK(pair_only.subdivision->paths.size() == 1);
  CHECK(pair_only.subdivision->paths[0].path.length() == 2);

  // parity obstruction: same-class branch vertices cannot take odd ell
  CHECK_THROWS_AS(construct_balanced_subdivision_expander(k30, 3, 3, settings), DomainError);
  CHECK_THROWS_AS(construct_balanced_subdivision_expander(complete_graph(5), 3, 2, settings),
                  DomainError);
}

TEST_CASE("validator flags constructed violations") {
  auto k4 = complete_graph(4);
  auto found = find_balanced_subdivision(k4, 4, 1, 1);
  REQUIRE(found.subdivision.has_value());
  auto good = *found.subdivision;
  CHECK(validate_subdivision(k4, good).ok);

  auto wrong_len = good;
  wrong_len.ell = 2;
  CHECK(!validate_subdivision(k4, wrong_len).ok);

  // shared interior vertex across two paths
  auto c6 = cycle_graph(6);
  auto sub6 = find_balanced_subdivision(c6, 3, 2, 2);
  REQUIRE(sub6.subdivision.has_value());
  auto tampered = *sub6.subdivision;
  tampered.paths[1].path.vertices[1] = tampered.paths[0].path.vertices[1];
  CHECK(!validate_subdivision(c6, tampered).ok);
}
