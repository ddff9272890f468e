#include <doctest.h>

#include <cmath>

#include "cyclelab/expander.hpp"
#include "cyclelab/families.hpp"
#include "oracles.hpp"

using namespace cyclelab;

TEST_CASE("expansion function") {
  ExpansionParams p(0.5, 2.0);
  CHECK(epsilon(p.k / 6.0, p) == 0.0);
  CHECK(epsilon(2.0, p) == doctest::Approx(0.5 / std::pow(std::log(15.0), 2)).epsilon(1e-9));
  CHECK(epsilon(2.0, p) == doctest::Approx(0.06818).epsilon(1e-3));
  // boundary x = k/5 uses the positive branch
  CHECK(epsilon(p.k / 5.0, p) ==
        doctest::Approx(0.5 / std::pow(std::log(3.0), 2)).epsilon(1e-9));

  CHECK_THROWS_AS(ExpansionParams(1.5, 1.0), DomainError);
  CHECK_THROWS_AS(ExpansionParams(0.5, 0.0), DomainError);
}

TEST_CASE("epsilon monotonicity over a log-spaced grid") {
  ExpansionParams p(0.7, 3.0);
  double prev_eps = -1.0;
  double prev_xeps = -1.0;
  for (double x = p.k / 5.0; x < p.k * 1e6; x *= 1.17) {
    double e = epsilon(x, p);
    if (prev_eps >= 0.0) CHECK(e <= prev_eps + 1e-15);
    prev_eps = e;
    if (x >= p.k / 2.0) {
      double xe = x * e;
      if (prev_xeps >= 0.0) CHECK(xe >= prev_xeps - 1e-12);
      prev_xeps = xe;
    }
  }
}

TEST_CASE("diameter bound formula") {
  ExpansionParams unit(0.999999999, 4.0);
  // eps1 -> 1, n = k
  CHECK(diameter_bound(4.0, unit) == doctest::Approx(2.0 * std::pow(std::log(15.0), 3)).epsilon(1e-6));
  CHECK(diameter_bound(4.0, unit) == doctest::Approx(39.74).epsilon(1e-3));
  ExpansionParams half(0.5, 1.0);
  CHECK(diameter_bound(15.0, half) ==
        doctest::Approx(4.0 * std::pow(std::log(225.0), 3)).epsilon(1e-9));
  CHECK_THROWS_AS(diameter_bound(0.5, half), DomainError);
}

TEST_CASE("exhaustive expander checks on decided instances") {
  // C8 with eps1 = 0.9, k = 4: every X of size 2..4 has boundary >= 2,
  // comfortably above eps(|X|)|X| < 0.5
  auto c8 = cycle_graph(8);
  ExpansionParams pc8(0.9, 4.0);
  auto v = check_expander(c8, pc8);
  CHECK(std::holds_alternative<ExpanderCertificate>(v));
  CHECK(std::get<ExpanderCertificate>(v).mode == ExpanderCertificate::Mode::exhaustive);

  auto k66 = complete_bipartite(6, 6);
  ExpansionParams pk(0.1, 3.0);
  CHECK(std::holds_alternative<ExpanderCertificate>(check_expander(k66, pk)));

  Graph edgeless = Graph::from_edges(10, {});
  ExpansionParams pe(0.5, 2.0);
  auto w = check_expander(edgeless, pe);
  REQUIRE(std::holds_alternative<NonExpansionWitness>(w));
  CHECK(revalidate_witness(edgeless, pe, std::get<NonExpansionWitness>(w)));

  CHECK_THROWS_AS(check_expander(random_gnp(30, 0.2, 1), pe), CapacityError);
}

TEST_CASE("exhaustive checker agrees with the independent subset oracle") {
  Rng rng(17);
  std::vector<Graph> corpus = {cycle_graph(8),  complete_graph(6), complete_bipartite(4, 4),
                               petersen_graph(), path_graph(7),    hypercube_graph(3)};
  // two K5s joined by one edge expand badly
  {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        e.emplace_back(i, j);
        e.emplace_back(5 + i, 5 + j);
      }
    e.emplace_back(0, 5);
    corpus.push_back(Graph::from_edges(10, e));
  }
  for (int i = 0; i < 8; ++i) {
    corpus.push_back(random_gnp(rng.uniform_int(5, 14), 0.2 + 0.5 * rng.uniform01(),
                                rng.next_u64()));
  }
  for (const auto& g : corpus) {
    for (auto [eps1, k] : {std::pair{0.5, 2.0}, {0.9, 4.0}, {0.2, 1.0}}) {
      ExpansionParams p(eps1, k);
      auto mine = check_expander(g, p);
      auto oracle = oracles::naive_non_expansion_witness(g, p);
      CHECK(std::holds_alternative<NonExpansionWitness>(mine) == oracle.has_value());
      if (std::holds_alternative<NonExpansionWitness>(mine)) {
        CHECK(revalidate_witness(g, p, std::get<NonExpansionWitness>(mine)));
      }
    }
  }
}

TEST_CASE("sampled mode finds the two-clique bottleneck and revalidates") {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      e.emplace_back(i, j);
      e.emplace_back(6 + i, 6 + j);
    }
  e.emplace_back(0, 6);
  Graph g = Graph::from_edges(12, e);
  // k = 12 restricts X to one clique's worth of vertices, whose single
  // bridge neighbour falls short of eps(6)*6 > 1
  ExpansionParams p(0.9, 12.0);
  REQUIRE(std::holds_alternative<NonExpansionWitness>(check_expander(g, p)));

  CheckSettings s;
  s.mode = CheckSettings::Mode::sampled;
  s.budget = 3000;
  s.seed = 42;
  auto v = check_expander(g, p, s);
  REQUIRE(std::holds_alternative<NonExpansionWitness>(v));
  CHECK(revalidate_witness(g, p, std::get<NonExpansionWitness>(v)));

  // determinism: same seed, same witness
  auto v2 = check_expander(g, p, s);
  CHECK(std::get<NonExpansionWitness>(v2).x == std::get<NonExpansionWitness>(v).x);
}

TEST_CASE("extract_expander guarantees both degree bounds") {
  ExpansionParams p(0.5, 2.0);
  auto res = extract_expander(complete_graph(5), p);
  CHECK(res.subgraph.order() == 5);
  CHECK(res.subgraph.edge_count() == 10);

  // two K5s plus a bridge: extraction settles on a dense core
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      e.emplace_back(i, j);
      e.emplace_back(5 + i, 5 + j);
    }
  e.emplace_back(0, 5);
  Graph g = Graph::from_edges(10, e);
  auto r2 = extract_expander(g, p);
  auto dg = degrees(g);
  auto dh = degrees(r2.subgraph);
  CHECK(dh.avg >= dg.avg * Rational(1, 2));
  CHECK(Rational(dh.min) >= dh.avg * Rational(1, 2));

  Graph single_edge = Graph::from_edges(2, {{0, 1}});
  ExpansionParams p1(0.5, 1.0);
  auto r3 = extract_expander(single_edge, p1);
  CHECK(r3.subgraph.order() == 2);
  CHECK(r3.subgraph.edge_count() == 1);
}

TEST_CASE("extraction degree bounds hold on random instances, exactly") {
  Rng rng(7);
  ExpansionParams p(0.5, 3.0);
  CheckSettings s;
  s.budget = 300;
  for (int trial = 0; trial < 12; ++trial) {
    int n = rng.uniform_int(8, 60);
    Graph g = random_gnp(n, 0.1 + 0.4 * rng.uniform01(), rng.next_u64());
    if (g.edge_count() == 0) continue;
    s.seed = trial;
    auto res = extract_expander(g, p, s);
    auto dg = degrees(g);
    auto dh = degrees(res.subgraph);
    CHECK(dh.avg >= dg.avg * Rational(1, 2));
    CHECK(Rational(dh.min) >= dh.avg * Rational(1, 2));
    if (res.residual_witness) {
      CHECK(revalidate_witness(res.subgraph, p, *res.residual_witness));
    }
  }
}

TEST_CASE("bipartite extraction reaches the local-search fixed point") {
  Graph k4 = complete_graph(4);
  Graph b = extract_bipartite(k4, 1);
  CHECK(b.edge_count() >= 3);  // >= e/2
  CHECK(std::holds_alternative<BipartitionLabel>(bipartition(b)));

  Graph c6 = cycle_graph(6);
  CHECK(extract_bipartite(c6, 5).edge_count() == 6);

  Graph tri = complete_graph(3);
  CHECK(extract_bipartite(tri, 2).edge_count() == 2);

  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_gnp(rng.uniform_int(5, 40), 0.4, rng.next_u64());
    Graph h = extract_bipartite(g, trial);
    CHECK(2 * h.edge_count() >= g.edge_count());
    // per-vertex: cross degree at least half of the original degree
    for (int v = 0; v < g.order(); ++v) {
      CHECK(2 * h.degree(v) >= g.degree(v));
    }
  }
}

TEST_CASE("bipartite expander extraction") {
  auto res = extract_bipartite_expander(complete_bipartite(16, 16), 0.5, 0.5, 2);
  CHECK(degrees(res.subgraph).min >= 2);
  CHECK(std::holds_alternative<BipartitionLabel>(bipartition(res.subgraph)));

  CHECK_THROWS_AS(extract_bipartite_expander(cycle_graph(4), 0.5, 0.5, 1), DomainError);

  auto r9 = extract_bipartite_expander(complete_bipartite(9, 9), 0.5, 0.5, 1);
  CHECK(degrees(r9.subgraph).min >= 1);
}

TEST_CASE("exhaustive verdicts are independent of the thread count") {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      e.emplace_back(i, j);
      e.emplace_back(6 + i, 6 + j);
    }
  e.emplace_back(0, 6);
  Graph g = Graph::from_edges(12, e);
  ExpansionParams p(0.9, 12.0);
  CheckSettings one;
  one.threads = 1;
  CheckSettings four;
  four.threads = 4;
  auto a = check_expander(g, p, one);
  auto b = check_expander(g, p, four);
  REQUIRE(std::holds_alternative<NonExpansionWitness>(a));
  REQUIRE(std::holds_alternative<NonExpansionWitness>(b));
  CHECK(std::get<NonExpansionWitness>(a).x == std::get<NonExpansionWitness>(b).x);

  // certificates agree too, including the subset count
  auto c8 = cycle_graph(8);
  ExpansionParams pc(0.9, 4.0);
  auto ca = check_expander(c8, pc, one);
  auto cb = check_expander(c8, pc, four);
  CHECK(std::get<ExpanderCertificate>(ca).subsets_checked ==
        std::get<ExpanderCertificate>(cb).subsets_checked);
}
