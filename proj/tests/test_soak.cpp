#include <doctest.h>

#include "cyclelab/adjuster.hpp"
#include "cyclelab/exact_path.hpp"
#include "cyclelab/families.hpp"
#include "cyclelab/spectrum.hpp"
#include "oracles.hpp"

using namespace cyclelab;

namespace {

Graph random_connected_bipartite(Rng& rng, int n) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    int left = rng.uniform_int(1, n - 1);
    double p = 0.25 + 0.5 * rng.uniform01();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < left; ++i) {
      for (int j = left; j < n; ++j) {
        if (rng.uniform01() < p) edges.emplace_back(i, j);
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g) && g.edge_count() >= 2) return g;
  }
  return complete_bipartite(n / 2, n - n / 2);
}

}  // namespace

TEST_CASE("exact-length backends stay consistent on sparse random hosts") {
  Rng rng(7321);
  ExactPathSettings settings;
  settings.adjuster.d = 1;
  settings.capacity_schedule = {4, 2, 1};
  int contradictions = 0;
  int found = 0;
  for (int host = 0; host < 40; ++host) {
    Graph g = random_connected_bipartite(rng, rng.uniform_int(8, 18));
    for (int reps = 0; reps < 6; ++reps) {
      int x = rng.uniform_int(0, g.order() - 1);
      int y = rng.uniform_int(0, g.order() - 1);
      if (x == y) continue;
      int pi = parity_pi(g, x, y);
      int ell = rng.uniform_int(1, std::min(13, g.order() - 1));
      if (ell % 2 != pi % 2) ++ell;
      if (ell >= g.order()) continue;
      VertexExpansion f1{x, {x}, 1};
      VertexExpansion f2{y, {y}, 1};
      auto mine = exact_length_path(g, {}, f1, f2, ell, settings);
      if (!mine) continue;
      ++found;
      CHECK(validate_path(g, *mine));
      CHECK(mine->length() == ell);
      auto oracle = exact_length_path_oracle(g, x, y, ell);
      if (oracle.status == OracleStatus::not_found_proved) ++contradictions;
    }
  }
  CHECK(contradictions == 0);
  CHECK(found > 60);  // the soak actually exercised the pipeline
}

TEST_CASE("longer adjuster chains keep every axiom") {
  for (int half : {16, 24}) {
    Graph g = complete_bipartite(half, half);
    AdjusterSearchSettings settings;
    settings.d = 2;
    for (int r : {4, 5}) {
      auto chained = chain_adjusters(g, {0}, r, settings);
      const Adjuster* adj = nullptr;
      if (chained.adjuster) adj = &*chained.adjuster;
      else if (chained.partial) adj = &*chained.partial;
      REQUIRE(adj != nullptr);
      CHECK(adj->capacity == chained.achieved_capacity);
      auto report = validate_adjuster(g, *adj);
      CHECK(report.ok());
      CHECK(sets_disjoint(adj->all(), {0}));
    }
  }
}

TEST_CASE("spectra across components") {
  // two disjoint triangles
  Graph two_tri = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(cycle_spectrum_exact(two_tri).lengths == std::vector<int>{3});

  // triangle plus a five-cycle
  Graph mixed = Graph::from_edges(
      8, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 3}});
  CHECK(cycle_spectrum_exact(mixed).lengths == std::vector<int>{3, 5});
  CHECK(oracles::naive_cycle_lengths(mixed) == std::set<int>{3, 5});

  // isolated vertices are harmless
  Graph iso = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(cycle_spectrum_exact(iso).lengths == std::vector<int>{3});
}
