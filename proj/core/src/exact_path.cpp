#include "cyclelab/exact_path.hpp"

#include <algorithm>
#include <deque>

#include "cyclelab/connect.hpp"
#include "cyclelab/core_paths.hpp"

namespace cyclelab {

namespace {

std::vector<int> path_within_members(const Graph& g, const VertexSet& members, int from,
                                     int to) {
  std::vector<char> inside(g.order(), 0);
  for (int v : members) inside[v] = 1;
  if (!inside[from] || !inside[to]) return {};
  std::vector<int> parent(g.order(), -2);
  std::deque<int> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (int v : g.neighbors(u)) {
      if (inside[v] && parent[v] == -2) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  if (parent[to] == -2) return {};
  std::vector<int> out;
  for (int v = to; v != -1; v = parent[v]) out.push_back(v);
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<Path> shortest_path_avoiding(const Graph& g, int from, int to,
                                           const VertexSet& w) {
  auto blocked = mask_of(g, w);
  if (blocked[from] || blocked[to]) return std::nullopt;
  std::vector<int> parent(g.order(), -2);
  std::deque<int> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (int v : g.neighbors(u)) {
      if (!blocked[v] && parent[v] == -2) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  if (parent[to] == -2) return std::nullopt;
  Path p;
  for (int v = to; v != -1; v = parent[v]) p.vertices.push_back(v);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

// attach trunk (a set-to-set connector) to expansion interiors on both
// sides, producing a center-to-center path
std::optional<Path> stitch(const Graph& g, const VertexExpansion& fa,
                           const VertexExpansion& fb, const Path& trunk) {
  int a_end = trunk.front();
  int b_end = trunk.back();
  bool fwd = set_contains(fa.members, a_end);
  if (!fwd) std::swap(a_end, b_end);
  auto head = path_within_members(g, fa.members, fa.center, a_end);
  auto tail = path_within_members(g, fb.members, b_end, fb.center);
  if (head.empty() || tail.empty()) return std::nullopt;
  std::vector<int> joined = head;
  if (fwd) {
    joined.insert(joined.end(), trunk.vertices.begin() + 1, trunk.vertices.end());
  } else {
    joined.insert(joined.end(), trunk.vertices.rbegin() + 1, trunk.vertices.rend());
  }
  joined.insert(joined.end(), tail.begin() + 1, tail.end());
  Path p{joined};
  if (!validate_path(g, p)) return std::nullopt;
  return p;
}

}  // namespace

std::optional<Path> path_in_window(const Graph& g, const VertexSet& w,
                                   const VertexExpansion& f1, const VertexExpansion& f2,
                                   int ell, int slack, const WindowSettings& settings) {
  if (ell < 0 || slack < 0) throw DomainError("path_in_window: negative window");
  if (!sets_disjoint(f1.members, f2.members)) {
    throw DomainError("path_in_window: expansions overlap");
  }
  if (!sets_disjoint(w, set_union_of(f1.members, f2.members))) {
    throw DomainError("path_in_window: W intersects the expansions");
  }
  if (ell >= g.order()) return std::nullopt;  // simple paths cannot be this long

  int v1 = f1.center;
  int v2 = f2.center;
  if (auto direct = shortest_path_avoiding(g, v1, v2, w)) {
    if (direct->length() >= ell && direct->length() <= ell + slack) return direct;
    if (direct->length() > ell + slack) return std::nullopt;  // even the shortest overshoots
  } else {
    return std::nullopt;
  }

  std::vector<int> pool_sizes;
  if (settings.core_target > 0) {
    pool_sizes.push_back(settings.core_target);
  } else {
    pool_sizes = {3, 2};
  }

  for (int core_target : pool_sizes) {
    // lengthening loop state, two partial paths with expansions at the tips
    Path p1{{v1}};
    Path p2{{v2}};
    VertexExpansion f3 = f1;
    VertexExpansion f4 = f2;

    auto occupied = [&]() {
      VertexSet occ = w;
      occ = set_union_of(occ, as_vertex_set(p1.vertices));
      occ = set_union_of(occ, as_vertex_set(p2.vertices));
      occ = set_union_of(occ, f3.members);
      occ = set_union_of(occ, f4.members);
      return occ;
    };

    // closing the two tips is attempted at every granularity step
    auto try_close = [&]() -> std::optional<Path> {
      VertexSet keep_out = set_union_of(w, as_vertex_set(p1.vertices));
      keep_out = set_union_of(keep_out, as_vertex_set(p2.vertices));
      keep_out = set_difference_of(keep_out, VertexSet{std::min(f3.center, f4.center),
                                                       std::max(f3.center, f4.center)});
      auto closing = connect_avoiding(g, f3.members, f4.members,
                                      set_difference_of(keep_out,
                                                        set_union_of(f3.members, f4.members)));
      if (!closing) return std::nullopt;
      int r1 = closing->front();
      int r2 = closing->back();
      if (!set_contains(f3.members, r1)) std::swap(r1, r2);
      auto q1 = path_within_members(g, f3.members, f3.center, r1);
      auto q2 = path_within_members(g, f4.members, r2, f4.center);
      if (q1.empty() || q2.empty()) return std::nullopt;

      std::vector<int> full = p1.vertices;
      full.insert(full.end(), q1.begin() + 1, q1.end());
      if (closing->vertices.front() == r1) {
        full.insert(full.end(), closing->vertices.begin() + 1, closing->vertices.end());
      } else {
        full.insert(full.end(), closing->vertices.rbegin() + 1, closing->vertices.rend());
      }
      full.insert(full.end(), q2.begin() + 1, q2.end());
      full.insert(full.end(), p2.vertices.rbegin() + 1, p2.vertices.rend());
      Path result{full};
      if (!validate_path(g, result)) return std::nullopt;
      if (result.length() < ell || result.length() > ell + slack) return std::nullopt;
      for (int v : result.vertices) {
        if (set_contains(w, v)) return std::nullopt;
      }
      return result;
    };

    int guard = 2 * ell + 8;
    while (guard-- > 0) {
      if (auto closed = try_close()) return closed;
      if (p1.length() + p2.length() > ell + slack) break;  // irrecoverable overshoot

      CoreSettings cs;
      cs.target = core_target;
      cs.params = settings.params;
      auto pool = low_diameter_core(g, occupied(), cs);
      if (!pool) break;
      // minimal-radius balls overshoot on dense hosts; claim only what the
      // detour needs
      VertexExpansion pool_exp;
      pool_exp.center = pool->center;
      pool_exp.members = pool->members;
      pool_exp.radius_bound = std::max(1, pool->radius);
      if (pool_exp.size() > core_target) pool_exp = trim_expansion(g, pool_exp, core_target);

      VertexSet tips = set_union_of(f3.members, f4.members);
      VertexSet keep_out = set_union_of(w, as_vertex_set(p1.vertices));
      keep_out = set_union_of(keep_out, as_vertex_set(p2.vertices));
      keep_out = set_difference_of(keep_out, VertexSet{std::min(f3.center, f4.center),
                                                       std::max(f3.center, f4.center)});
      auto trunk = connect_avoiding(g, pool_exp.members, tips,
                                    set_difference_of(keep_out,
                                                      set_union_of(pool_exp.members, tips)));
      if (!trunk) break;

      int pool_end = trunk->front();
      int tip_end = trunk->back();
      if (!set_contains(pool_exp.members, pool_end)) std::swap(pool_end, tip_end);
      bool side1 = set_contains(f3.members, tip_end);
      VertexExpansion& tip_exp = side1 ? f3 : f4;
      Path& grown = side1 ? p1 : p2;

      auto inner = path_within_members(g, tip_exp.members, tip_exp.center, tip_end);
      if (inner.empty()) break;
      std::vector<int> ext = inner;
      if (trunk->vertices.front() == tip_end) {
        ext.insert(ext.end(), trunk->vertices.begin() + 1, trunk->vertices.end());
      } else {
        ext.insert(ext.end(), trunk->vertices.rbegin() + 1, trunk->vertices.rend());
      }
      // splice the detour onto the grown side
      std::vector<int> joined = grown.vertices;
      joined.insert(joined.end(), ext.begin() + 1, ext.end());
      grown.vertices = joined;
      if (!validate_path(g, grown)) break;

      // re-root the tip expansion inside the fresh pool
      VertexExpansion fresh;
      fresh.center = pool_end;
      fresh.members = pool_exp.members;
      auto dist_in = bfs_distances(induced(g, pool_exp.members),
                                   {static_cast<int>(std::lower_bound(pool_exp.members.begin(),
                                                                      pool_exp.members.end(),
                                                                      pool_end) -
                                                     pool_exp.members.begin())},
                                   {});
      int radius = 0;
      for (int d : dist_in) radius = std::max(radius, d);
      fresh.radius_bound = std::max(1, radius);
      tip_exp = fresh;
    }
  }
  return std::nullopt;
}

std::optional<TwoPaths> two_paths_in_window(const Graph& g, const VertexSet& a_avoid,
                                            const std::vector<VertexExpansion>& ends,
                                            int ell, int slack,
                                            const WindowSettings& settings) {
  if (ends.size() != 4) throw DomainError("two_paths_in_window: need exactly four expansions");
  for (std::size_t i = 0; i < 4; ++i) {
    if (!sets_disjoint(ends[i].members, a_avoid)) {
      throw DomainError("two_paths_in_window: expansion intersects avoid set");
    }
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (!sets_disjoint(ends[i].members, ends[j].members)) {
        throw DomainError("two_paths_in_window: expansions overlap");
      }
    }
  }

  // Two passes: first with the ends as given, then once more with the
  // ends enlarged through low-diameter pools (the proof's composition),
  // which can rescue sparse hosts where the small ends cannot be reached.
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<VertexExpansion> work = ends;
    if (pass == 1) {
      int target = std::min(g.order() / 8,
                            4 * std::max({ends[0].size(), ends[1].size(), ends[2].size(),
                                          ends[3].size()}));
      if (target <= std::max({ends[0].size(), ends[1].size(), ends[2].size(),
                              ends[3].size()})) {
        break;
      }
      auto grown = enlarge_expansions(g, a_avoid, ends, target, settings.params);
      if (!grown) break;
      work = *grown;
    }

    // route the short path P first: {v1,v2} side to {v3,v4} side
    VertexSet left = set_union_of(work[0].members, work[1].members);
    VertexSet right = set_union_of(work[2].members, work[3].members);
    auto trunk = connect_avoiding(g, left, right,
                                  set_difference_of(a_avoid, set_union_of(left, right)));
    if (!trunk) continue;
    int l_end = trunk->front();
    int r_end = trunk->back();
    if (!set_contains(left, l_end)) std::swap(l_end, r_end);
    int li = set_contains(work[0].members, l_end) ? 0 : 1;
    int ri = set_contains(work[2].members, r_end) ? 2 : 3;
    auto p = stitch(g, work[li], work[ri], *trunk);
    if (!p) continue;

    const VertexExpansion& fq1 = work[li == 0 ? 1 : 0];
    const VertexExpansion& fq2 = work[ri == 2 ? 3 : 2];

    int ell_q = std::max(0, ell - p->length());
    int slack_q = ell + slack - p->length() - ell_q;
    if (slack_q < 0) continue;  // P alone already overshoots

    VertexSet wq = set_union_of(a_avoid, as_vertex_set(p->vertices));
    auto q = path_in_window(g, wq, fq1, fq2, ell_q, slack_q, settings);
    if (!q) continue;

    TwoPaths out;
    out.p = *p;
    out.q = *q;
    return out;
  }
  return std::nullopt;
}

std::optional<Path> exact_length_path(const Graph& g, const VertexSet& u,
                                      const VertexExpansion& f1, const VertexExpansion& f2,
                                      int ell, const ExactPathSettings& settings) {
  if (!is_connected_bipartite(g)) {
    throw DomainError("exact_length_path: host must be connected bipartite");
  }
  int v1 = f1.center;
  int v2 = f2.center;
  if (v1 == v2) throw DomainError("exact_length_path: endpoints must differ");
  if (ell % 2 != parity_pi(g, v1, v2) % 2) {
    throw DomainError("exact_length_path: ell has the wrong parity for the endpoints");
  }
  if (!sets_disjoint(f1.members, f2.members) || !sets_disjoint(u, f1.members) ||
      !sets_disjoint(u, f2.members)) {
    throw DomainError("exact_length_path: expansions must be disjoint from U and each other");
  }
  if (ell >= g.order()) return std::nullopt;

  auto direct = shortest_path_avoiding(g, v1, v2, u);
  if (!direct) return std::nullopt;
  if (direct->length() == ell) return direct;
  if (direct->length() > ell) return std::nullopt;  // ell below the G-U distance

  VertexSet base_avoid = set_union_of(u, set_union_of(f1.members, f2.members));
  for (int r : settings.capacity_schedule) {
    auto chained = chain_adjusters(g, base_avoid, r, settings.adjuster);
    const Adjuster* adj = nullptr;
    if (chained.adjuster) {
      adj = &*chained.adjuster;
    } else if (chained.partial) {
      adj = &*chained.partial;  // smaller capacity still adjusts a window
    } else {
      continue;
    }
    int capacity = adj->capacity;
    int base = adj->base_length;
    if (ell - base < 0) continue;
    int ell_pq = std::max(0, ell - base - 2 * capacity);
    int slack_pq = (ell - base) - ell_pq;

    std::vector<VertexExpansion> ends = {f1, f2, adj->f1, adj->f2};
    auto pq = two_paths_in_window(g, set_union_of(u, adj->core), ends, ell_pq, slack_pq,
                                  settings.window);
    if (!pq) continue;

    int need = ell - pq->p.length() - pq->q.length() - base;
    if (need < 0 || need % 2 != 0 || need / 2 > capacity) continue;
    int rung_len = base + need;

    VertexSet core_plus = set_union_of(adj->core, as_vertex_set({adj->v1(), adj->v2()}));
    auto rung = simple_path_with_length(g, core_plus, adj->v1(), adj->v2(), rung_len,
                                        settings.adjuster.core);
    if (!rung) continue;

    // orient: p runs {v1,v2} -> {v3,v4}; q covers the complementary pair
    Path p = pq->p;
    Path q = pq->q;
    if (p.front() != v1 && p.back() != v1) std::swap(p, q);
    if (p.back() == v1) std::reverse(p.vertices.begin(), p.vertices.end());
    if (q.back() == v2) std::reverse(q.vertices.begin(), q.vertices.end());
    // now p: v1 -> {v3,v4}, q: v2 -> {v3,v4}
    Path mid = *rung;
    if (mid.front() != p.back()) std::reverse(mid.vertices.begin(), mid.vertices.end());
    if (mid.front() != p.back() || mid.back() != q.back()) continue;

    std::vector<int> full = p.vertices;
    full.insert(full.end(), mid.vertices.begin() + 1, mid.vertices.end());
    full.insert(full.end(), q.vertices.rbegin() + 1, q.vertices.rend());
    Path result{full};
    if (!validate_path(g, result)) continue;
    if (result.length() != ell) continue;
    bool clean = true;
    for (int v : result.vertices) {
      if (set_contains(u, v)) clean = false;
    }
    if (!clean) continue;
    return result;
  }

  // short targets the gadget route cannot reach (it needs ell at least
  // the adjuster base plus two): bounded direct search
  if (ell <= settings.fallback_length_cap) {
    auto direct_exact =
        exact_length_path_oracle(g, v1, v2, ell, u, settings.fallback_budget);
    if (direct_exact.status == OracleStatus::found) return direct_exact.path;
  }
  return std::nullopt;
}

namespace {

struct OracleSearch {
  const Graph& g;
  const std::vector<char>& blocked;
  std::vector<int> dist_to_target;
  bool bipartite_host;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  int target;
  int want;
  std::vector<char> visited;
  std::vector<int> stack;

  bool dfs(int u, int depth) {
    if (++nodes > budget) {
      exhausted = true;
      return true;
    }
    if (u == target) return depth == want;
    int rem = want - depth;
    for (int v : g.neighbors(u)) {
      if (blocked[v] || visited[v]) continue;
      if (dist_to_target[v] == -1 || dist_to_target[v] > rem - 1) continue;
      if (bipartite_host && ((rem - 1 - dist_to_target[v]) % 2 != 0)) continue;
      visited[v] = 1;
      stack.push_back(v);
      if (dfs(v, depth + 1)) return true;
      stack.pop_back();
      visited[v] = 0;
    }
    return false;
  }
};

}  // namespace

OracleResult exact_length_path_oracle(const Graph& g, int x, int y, int ell,
                                      const VertexSet& avoid, std::uint64_t budget) {
  OracleResult result;
  if (x < 0 || x >= g.order() || y < 0 || y >= g.order()) {
    throw DomainError("oracle endpoints out of range");
  }
  if (ell < 0 || set_contains(avoid, x) || set_contains(avoid, y)) {
    result.status = OracleStatus::not_found_proved;
    return result;
  }
  if (x == y) {
    result.status = ell == 0 ? OracleStatus::found : OracleStatus::not_found_proved;
    if (ell == 0) result.path = Path{{x}};
    return result;
  }
  if (ell == 0 || ell >= g.order()) {
    result.status = OracleStatus::not_found_proved;
    return result;
  }

  auto blocked = mask_of(g, avoid);
  auto dist = bfs_distances(g, {y}, blocked);
  OracleSearch search{g,
                      blocked,
                      dist,
                      std::holds_alternative<BipartitionLabel>(bipartition(g)),
                      budget,
                      0,
                      false,
                      y,
                      ell,
                      std::vector<char>(g.order(), 0),
                      {}};
  if (dist[x] == -1 || dist[x] > ell ||
      (search.bipartite_host && (ell - dist[x]) % 2 != 0)) {
    result.status = OracleStatus::not_found_proved;
    result.nodes_visited = 0;
    return result;
  }
  search.visited[x] = 1;
  search.stack.push_back(x);
  bool hit = search.dfs(x, 0);
  result.nodes_visited = search.nodes;
  if (hit && !search.exhausted) {
    result.status = OracleStatus::found;
    result.path = Path{search.stack};
    return result;
  }
  result.status = search.exhausted ? OracleStatus::unknown : OracleStatus::not_found_proved;
  return result;
}

}  // namespace cyclelab
