#include "cyclelab/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cyclelab/expansion.hpp"

namespace cyclelab {

SubdivisionReport validate_subdivision(const Graph& g, const BalancedSubdivision& s) {
  SubdivisionReport report;
  auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };

  if (s.k < 2) fail("k must be at least 2");
  if (static_cast<int>(s.branch_vertices.size()) != s.k) fail("branch vertex count != k");
  VertexSet branch = as_vertex_set(s.branch_vertices);
  if (static_cast<int>(branch.size()) != s.k) fail("branch vertices are not distinct");

  std::size_t expected_pairs = static_cast<std::size_t>(s.k) * (s.k - 1) / 2;
  if (s.paths.size() != expected_pairs) fail("path count != C(k,2)");

  std::map<std::pair<int, int>, int> pair_seen;
  std::vector<char> interior_used(g.order(), 0);
  for (const auto& bp : s.paths) {
    auto key = std::minmax(bp.a, bp.b);
    ++pair_seen[{key.first, key.second}];
    if (!set_contains(branch, bp.a) || !set_contains(branch, bp.b) || bp.a == bp.b) {
      fail("path endpoints are not a branch pair");
      continue;
    }
    if (!validate_path(g, bp.path)) {
      fail("path fails graph validation");
      continue;
    }
    if (bp.path.front() != bp.a || bp.path.back() != bp.b) {
      if (bp.path.front() != bp.b || bp.path.back() != bp.a) {
        fail("path does not join its pair");
        continue;
      }
    }
    if (bp.path.length() != s.ell) {
      fail("path for (" + std::to_string(bp.a) + "," + std::to_string(bp.b) +
           ") has length " + std::to_string(bp.path.length()) + " != " +
           std::to_string(s.ell));
    }
    for (std::size_t i = 1; i + 1 < bp.path.vertices.size(); ++i) {
      int v = bp.path.vertices[i];
      if (set_contains(branch, v)) fail("interior vertex is a branch vertex");
      if (interior_used[v]) fail("interior vertex shared by two paths");
      interior_used[v] = 1;
    }
  }
  for (const auto& [key, count] : pair_seen) {
    if (count > 1) fail("duplicate path for one branch pair");
  }
  if (pair_seen.size() != expected_pairs && s.paths.size() == expected_pairs) {
    fail("paths do not cover every branch pair");
  }
  // parity cross-check: a TK_k^(ell) with k >= 3 contains a 3*ell cycle,
  // which must be even in a bipartite host
  if (s.k >= 3 && s.ell % 2 == 1 &&
      std::holds_alternative<BipartitionLabel>(bipartition(g))) {
    fail("odd ell with k >= 3 is impossible in a bipartite host");
  }
  report.ok = report.violations.empty();
  return report;
}

BalancedSubdivision find_tk2_skewed(const Graph& g, const VertexSet& u, const VertexSet& w,
                                    int d) {
  if (d < 1) throw DomainError("find_tk2_skewed: d must be >= 1");
  if (!sets_disjoint(u, w)) throw DomainError("find_tk2_skewed: U and W must be disjoint");
  if (static_cast<long long>(u.size()) < static_cast<long long>(w.size()) * w.size()) {
    throw DomainError("find_tk2_skewed: |U| >= |W|^2 violated");
  }
  for (int uu : u) {
    int into_w = 0;
    for (int nb : g.neighbors(uu)) {
      if (set_contains(w, nb)) ++into_w;
    }
    if (into_w < d) {
      throw DomainError("find_tk2_skewed: vertex " + std::to_string(uu) +
                        " has fewer than d neighbours in W");
    }
  }

  // greedy maximal system of distinct representatives over W pairs
  std::map<std::pair<int, int>, int> rep;
  std::vector<char> used(g.order(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      int x = w[i];
      int y = w[j];
      for (int cand : u) {
        if (!used[cand] && g.has_edge(cand, x) && g.has_edge(cand, y)) {
          rep[{x, y}] = cand;
          used[cand] = 1;
          break;
        }
      }
    }
  }
  int leftover = -1;
  for (int cand : u) {
    if (!used[cand]) {
      leftover = cand;
      break;
    }
  }
  if (leftover == -1) {
    // |U| >= |W|^2 > C(|W|,2) makes this unreachable
    throw DomainError("find_tk2_skewed: no unused vertex left in U");
  }
  VertexSet a;
  for (int nb : g.neighbors(leftover)) {
    if (set_contains(w, nb)) a.push_back(nb);
  }
  a.resize(d);  // neighbors are sorted; take the d smallest

  BalancedSubdivision out;
  out.k = d;
  out.ell = 2;
  out.branch_vertices = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      auto it = rep.find({a[i], a[j]});
      if (it == rep.end()) {
        // maximality of the representative system guarantees every pair
        // inside N(leftover) has a representative
        throw DomainError("find_tk2_skewed: representative missing for a branch pair");
      }
      BalancedSubdivision::BranchPath bp;
      bp.a = a[i];
      bp.b = a[j];
      bp.path.vertices = {a[i], it->second, a[j]};
      out.paths.push_back(std::move(bp));
    }
  }
  return out;
}

namespace {

struct SubdivisionSearch {
  const Graph& g;
  int k;
  int ell;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<char> claimed;
  std::vector<std::pair<int, int>> pair_order;
  std::vector<Path> routed;
  std::vector<int> branch;

  SubdivisionSearch(const Graph& graph, int kk, int len, std::uint64_t b)
      : g(graph), k(kk), ell(len), budget(b), claimed(graph.order(), 0) {}

  bool tick() {
    if (++nodes > budget) exhausted = true;
    return exhausted;
  }

  // enumerate simple a->b paths of exact length over unclaimed vertices
  bool route(std::size_t pair_idx) {
    if (pair_idx == pair_order.size()) return true;
    auto [a, b] = pair_order[pair_idx];
    std::vector<int> stack{a};
    return extend(pair_idx, a, b, stack);
  }

  bool extend(std::size_t pair_idx, int at, int target, std::vector<int>& stack) {
    if (tick()) return false;
    int depth = static_cast<int>(stack.size()) - 1;
    if (depth == ell) {
      if (at != target) return false;
      routed.push_back(Path{stack});
      for (std::size_t i = 1; i + 1 < stack.size(); ++i) claimed[stack[i]] = 1;
      if (route(pair_idx + 1)) return true;
      for (std::size_t i = 1; i + 1 < stack.size(); ++i) claimed[stack[i]] = 0;
      routed.pop_back();
      return false;
    }
    for (int v : g.neighbors(at)) {
      if (exhausted) return false;
      int rem = ell - depth - 1;
      if (v == target) {
        if (rem != 0) continue;
      } else {
        if (rem == 0 || claimed[v]) continue;
        bool on_stack = std::find(stack.begin(), stack.end(), v) != stack.end();
        if (on_stack) continue;
      }
      stack.push_back(v);
      if (extend(pair_idx, v, target, stack)) return true;
      stack.pop_back();
    }
    return false;
  }
};

}  // namespace

SubdivisionSearchResult find_balanced_subdivision(const Graph& g, int k, int ell_min,
                                                  int ell_max, std::uint64_t budget) {
  if (k < 3) throw DomainError("find_balanced_subdivision: k must be >= 3");
  if (ell_min < 1 || ell_max < ell_min) {
    throw DomainError("find_balanced_subdivision: bad ell range");
  }
  SubdivisionSearchResult result;
  int n = g.order();
  std::uint64_t nodes_total = 0;
  bool any_exhausted = false;

  for (int ell = ell_min; ell <= ell_max; ++ell) {
    if (static_cast<long long>(k) + static_cast<long long>(k) * (k - 1) / 2 * (ell - 1) > n) {
      continue;  // not enough vertices for the branch set plus interiors
    }
    // branch candidates need k-1 internally disjoint departures
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) >= k - 1) candidates.push_back(v);
    }
    if (static_cast<int>(candidates.size()) < k) continue;

    std::vector<int> pick;
    std::vector<std::vector<int>> dist(n);

    auto feasible_pair = [&](int a, int b) {
      if (dist[a].empty()) dist[a] = bfs_distances(g, {a}, {});
      int d = dist[a][b];
      return d != -1 && d <= ell && (ell == 1 ? g.has_edge(a, b) : true);
    };

    // lexicographic branch tuples with distance pruning
    std::vector<int> idx(k, -1);
    int level = 0;
    idx[0] = -1;
    while (level >= 0) {
      if (nodes_total > budget) {
        any_exhausted = true;
        break;
      }
      ++idx[level];
      if (idx[level] >= static_cast<int>(candidates.size())) {
        --level;
        continue;
      }
      int v = candidates[idx[level]];
      bool ok = true;
      for (int j = 0; j < level; ++j) {
        if (!feasible_pair(candidates[idx[j]], v)) {
          ok = false;
          break;
        }
      }
      ++nodes_total;
      if (!ok) continue;
      if (level + 1 < k) {
        ++level;
        idx[level] = idx[level - 1];
        continue;
      }

      // full branch tuple: route all pairs with backtracking
      SubdivisionSearch search(g, k, ell, budget - std::min(budget, nodes_total));
      for (int j = 0; j < k; ++j) search.branch.push_back(candidates[idx[j]]);
      for (int x : search.branch) search.claimed[x] = 1;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          search.pair_order.emplace_back(search.branch[i], search.branch[j]);
        }
      }
      // hardest pairs first: larger current distance routed earlier
      std::stable_sort(search.pair_order.begin(), search.pair_order.end(),
                       [&](const auto& p1, const auto& p2) {
                         if (dist[p1.first].empty()) dist[p1.first] = bfs_distances(g, {p1.first}, {});
                         if (dist[p2.first].empty()) dist[p2.first] = bfs_distances(g, {p2.first}, {});
                         return dist[p1.first][p1.second] > dist[p2.first][p2.second];
                       });
      bool found = search.route(0);
      nodes_total += search.nodes;
      if (found) {
        BalancedSubdivision sub;
        sub.k = k;
        sub.ell = ell;
        sub.branch_vertices = as_vertex_set(search.branch);
        for (std::size_t t = 0; t < search.pair_order.size(); ++t) {
          BalancedSubdivision::BranchPath bp;
          bp.a = search.pair_order[t].first;
          bp.b = search.pair_order[t].second;
          bp.path = search.routed[t];
          sub.paths.push_back(std::move(bp));
        }
        result.status = SearchStatus::found;
        result.subdivision = std::move(sub);
        result.nodes = nodes_total;
        return result;
      }
      if (search.exhausted) {
        any_exhausted = true;
        break;
      }
    }
    if (any_exhausted) break;
  }
  result.nodes = nodes_total;
  result.status = any_exhausted ? SearchStatus::unknown : SearchStatus::not_found_proved;
  return result;
}

ConstructResult construct_balanced_subdivision_expander(const Graph& h, int k, int ell,
                                                        const ConstructSettings& settings) {
  ConstructResult result;
  if (k < 2) throw DomainError("construct_balanced_subdivision_expander: k must be >= 2");
  if (ell < 1) throw DomainError("construct_balanced_subdivision_expander: ell must be >= 1");
  if (!is_connected_bipartite(h)) {
    throw DomainError("construct_balanced_subdivision_expander: host must be connected bipartite");
  }

  VertexSet branch = settings.branch_override;
  if (branch.empty()) {
    auto bip = std::get<BipartitionLabel>(bipartition(h));
    int zeros = static_cast<int>(std::count(bip.side.begin(), bip.side.end(), 0));
    int side = zeros * 2 >= h.order() ? 0 : 1;
    for (int v = 0; v < h.order() && static_cast<int>(branch.size()) < k; ++v) {
      if (bip.side[v] == side) branch.push_back(v);
    }
  }
  if (static_cast<int>(branch.size()) != k) {
    throw DomainError("construct_balanced_subdivision_expander: not enough same-class vertices");
  }
  branch = as_vertex_set(branch);
  // same-class pairs force even path lengths in a bipartite host
  if (parity_pi(h, branch[0], branch[1]) % 2 != ell % 2) {
    throw DomainError("construct_balanced_subdivision_expander: ell parity mismatch for "
                      "same-class branch vertices");
  }

  int bigk = k * (k - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(branch[i], branch[j]);
  }

  // geometric reservation sizes, later pairs smaller
  std::vector<ExpansionRequest> requests;
  std::vector<int> sizes(bigk);
  for (int t = 0; t < bigk; ++t) {
    double raw = std::pow(settings.alpha, bigk - t) * h.order() / (4.0 * bigk);
    sizes[t] = std::max(1, static_cast<int>(std::floor(raw)));
  }
  for (int t = 0; t < bigk; ++t) {
    requests.push_back({pairs[t].first, sizes[t]});
    requests.push_back({pairs[t].second, sizes[t]});
  }
  auto cycle = shortest_cycle(h, {});
  auto found = find_vertex_expansions(h, cycle, requests, h.order(), {});
  if (!found.expansions) {
    result.failed_pair = pairs[0];
    return result;
  }
  auto& exps = *found.expansions;

  BalancedSubdivision sub;
  sub.k = k;
  sub.ell = ell;
  sub.branch_vertices = branch;

  std::vector<Path> routed;
  for (int t = 0; t < bigk; ++t) {
    auto [va, vb] = pairs[t];
    // everything still reserved or already used, minus this pair's ends
    VertexSet avoid = branch;
    for (int t2 = t + 1; t2 < bigk; ++t2) {
      avoid = set_union_of(avoid, exps[2 * t2].members);
      avoid = set_union_of(avoid, exps[2 * t2 + 1].members);
    }
    for (const auto& p : routed) avoid = set_union_of(avoid, as_vertex_set(p.vertices));
    avoid = set_difference_of(avoid, VertexSet{std::min(va, vb), std::max(va, vb)});

    auto path = exact_length_path(h, avoid, exps[2 * t], exps[2 * t + 1], ell, settings.path);
    if (!path) {
      result.failed_pair = pairs[t];
      return result;
    }
    routed.push_back(*path);
    BalancedSubdivision::BranchPath bp;
    bp.a = va;
    bp.b = vb;
    bp.path = *path;
    sub.paths.push_back(std::move(bp));
  }
  result.subdivision = std::move(sub);
  return result;
}

}  // namespace cyclelab
