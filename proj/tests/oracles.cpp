#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace oracles {

using cyclelab::Graph;

namespace {

void cycle_dfs(const Graph& g, int anchor, int at, std::vector<char>& on_path, int depth,
               std::set<int>& lengths) {
  for (int next : g.neighbors(at)) {
    if (next == anchor && depth >= 2) lengths.insert(depth + 1);
    if (next <= anchor || on_path[next]) continue;
    on_path[next] = 1;
    cycle_dfs(g, anchor, next, on_path, depth + 1, lengths);
    on_path[next] = 0;
  }
}

}  // namespace

std::set<int> naive_cycle_lengths(const Graph& g) {
  std::set<int> lengths;
  for (int anchor = 0; anchor < g.order(); ++anchor) {
    std::vector<char> on_path(g.order(), 0);
    on_path[anchor] = 1;
    cycle_dfs(g, anchor, anchor, on_path, 0, lengths);
  }
  return lengths;
}

namespace {

std::optional<std::vector<int>> subset_scan(const Graph& g, const cyclelab::ExpansionParams& p,
                                            std::vector<int>& chosen, int from, int lo,
                                            int hi) {
  int size = static_cast<int>(chosen.size());
  if (size >= lo && size <= hi) {
    std::set<int> members(chosen.begin(), chosen.end());
    std::set<int> boundary;
    for (int v : chosen) {
      for (int w : g.neighbors(v)) {
        if (!members.count(w)) boundary.insert(w);
      }
    }
    double required = cyclelab::epsilon(size, p) * size;
    if (static_cast<double>(boundary.size()) < required - 1e-9) return chosen;
  }
  if (size == hi) return std::nullopt;
  for (int v = from; v < g.order(); ++v) {
    chosen.push_back(v);
    if (auto hit = subset_scan(g, p, chosen, v + 1, lo, hi)) return hit;
    chosen.pop_back();
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> naive_non_expansion_witness(const Graph& g,
                                                            const cyclelab::ExpansionParams& p) {
  int lo = std::max(1, static_cast<int>(std::ceil(p.k / 2.0 - 1e-12)));
  int hi = g.order() / 2;
  if (lo > hi) return std::nullopt;
  std::vector<int> chosen;
  return subset_scan(g, p, chosen, 0, lo, hi);
}

namespace {

void path_dfs(const Graph& g, int at, int target, std::vector<char>& on_path, int depth,
              std::set<int>& lengths) {
  if (at == target) {
    lengths.insert(depth);
    return;
  }
  for (int next : g.neighbors(at)) {
    if (on_path[next]) continue;
    on_path[next] = 1;
    path_dfs(g, next, target, on_path, depth + 1, lengths);
    on_path[next] = 0;
  }
}

}  // namespace

std::set<int> all_path_lengths(const Graph& g, int u, int v) {
  std::set<int> lengths;
  std::vector<char> on_path(g.order(), 0);
  on_path[u] = 1;
  path_dfs(g, u, v, on_path, 0, lengths);
  return lengths;
}

int setpair_distance_matrix_power(const Graph& g, const std::vector<int>& a,
                                  const std::vector<int>& b, const std::vector<int>& w) {
  int n = g.order();
  std::set<int> in_a(a.begin(), a.end());
  std::set<int> in_b(b.begin(), b.end());
  std::set<int> in_w(w.begin(), w.end());
  // frontier vector times adjacency matrix, with interior restrictions
  std::vector<char> reached(n, 0);
  std::vector<char> frontier(n, 0);
  for (int v : a) {
    if (!in_w.count(v)) frontier[v] = reached[v] = 1;
  }
  for (int steps = 1; steps <= n; ++steps) {
    std::vector<char> next(n, 0);
    for (int u = 0; u < n; ++u) {
      if (!frontier[u]) continue;
      if (steps > 1 && (in_a.count(u) || in_b.count(u))) continue;  // interiors only
      for (int v : g.neighbors(u)) {
        if (in_w.count(v) || reached[v]) continue;
        next[v] = 1;
      }
    }
    for (int v = 0; v < n; ++v) {
      if (next[v] && in_b.count(v)) return steps;
    }
    bool moved = false;
    for (int v = 0; v < n; ++v) {
      if (next[v]) {
        reached[v] = 1;
        moved = true;
      }
    }
    if (!moved) break;
    frontier = next;
  }
  return -1;
}

namespace {

bool assign_paths(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                  std::size_t idx, int ell, std::set<int>& used,
                  const std::set<int>& branch) {
  if (idx == pairs.size()) return true;
  int from = pairs[idx].first;
  int to = pairs[idx].second;
  std::vector<int> stack{from};
  std::function<bool(int)> extend = [&](int at) -> bool {
    int depth = static_cast<int>(stack.size()) - 1;
    if (depth == ell) {
      if (at != to) return false;
      std::vector<int> interior(stack.begin() + 1, stack.end() - 1);
      for (int v : interior) used.insert(v);
      if (assign_paths(g, pairs, idx + 1, ell, used, branch)) return true;
      for (int v : interior) used.erase(v);
      return false;
    }
    for (int next : g.neighbors(at)) {
      if (next == to) {
        if (depth + 1 != ell) continue;
      } else {
        if (used.count(next) || branch.count(next)) continue;
        if (std::find(stack.begin(), stack.end(), next) != stack.end()) continue;
      }
      stack.push_back(next);
      if (extend(next)) return true;
      stack.pop_back();
    }
    return false;
  };
  return extend(from);
}

}  // namespace

bool naive_balanced_subdivision_exists(const Graph& g, int k, int ell) {
  int n = g.order();
  std::vector<int> tuple;
  std::function<bool(int)> choose = [&](int from) -> bool {
    if (static_cast<int>(tuple.size()) == k) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) pairs.emplace_back(tuple[i], tuple[j]);
      }
      std::set<int> used;
      std::set<int> branch(tuple.begin(), tuple.end());
      return assign_paths(g, pairs, 0, ell, used, branch);
    }
    for (int v = from; v < n; ++v) {
      tuple.push_back(v);
      if (choose(v + 1)) return true;
      tuple.pop_back();
    }
    return false;
  };
  return choose(0);
}

int naive_max_clique(const Graph& g) {
  int best = 0;
  std::vector<int> clique;
  std::function<void(int)> grow = [&](int from) {
    best = std::max(best, static_cast<int>(clique.size()));
    for (int v = from; v < g.order(); ++v) {
      bool joined = true;
      for (int u : clique) {
        if (!g.has_edge(u, v)) {
          joined = false;
          break;
        }
      }
      if (joined) {
        clique.push_back(v);
        grow(v + 1);
        clique.pop_back();
      }
    }
  };
  grow(0);
  return best;
}

}  // namespace oracles
