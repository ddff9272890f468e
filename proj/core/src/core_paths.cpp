#include "cyclelab/core_paths.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

namespace cyclelab {

namespace {

struct LocalCore {
  std::vector<int> verts;          // local -> global, sorted
  std::vector<std::uint32_t> adj;  // local adjacency bitmasks (c <= 32)
  std::vector<std::vector<int>> nb;
  int c = 0;
  int s = -1;
  int t = -1;

  LocalCore(const Graph& g, const VertexSet& core, int s_global, int t_global) {
    verts = core;
    c = static_cast<int>(verts.size());
    std::vector<int> local_of(g.order(), -1);
    for (int i = 0; i < c; ++i) local_of[verts[i]] = i;
    s = local_of[s_global];
    t = local_of[t_global];
    if (s < 0 || t < 0) throw DomainError("core query endpoints must lie in the core");
    nb.assign(c, {});
    if (c <= 32) adj.assign(c, 0);
    for (int i = 0; i < c; ++i) {
      for (int w : g.neighbors(verts[i])) {
        int j = local_of[w];
        if (j >= 0) {
          nb[i].push_back(j);
          if (c <= 32) adj[i] |= std::uint32_t{1} << j;
        }
      }
    }
  }
};

// BFS distances to t inside the core, used as an admissible DFS bound.
std::vector<int> local_dist_to(const LocalCore& lc, int target) {
  std::vector<int> dist(lc.c, -1);
  std::deque<int> queue{target};
  dist[target] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : lc.nb[u]) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

struct DfsSweep {
  const LocalCore& lc;
  std::vector<int> dist_t;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  int max_len;
  std::set<int> lengths;
  std::vector<char> visited;
  std::vector<int> stack;
  int want_len = -1;          // when >= 0, stop at first path of this length
  std::vector<int> want_path;

  DfsSweep(const LocalCore& core, int max_len_in, std::uint64_t budget_in)
      : lc(core), dist_t(local_dist_to(core, core.t)), budget(budget_in),
        max_len(max_len_in), visited(core.c, 0) {}

  bool run(int u, int depth) {  // returns true to stop early
    if (++nodes > budget) {
      exhausted = true;
      return true;
    }
    if (u == lc.t) {
      if (want_len >= 0) {
        if (depth == want_len) {
          want_path = stack;
          return true;
        }
      } else {
        lengths.insert(depth);
      }
      // t may be an interior vertex of no path; simple paths end here
      return false;
    }
    if (depth >= max_len) return false;
    for (int v : lc.nb[u]) {
      if (visited[v]) continue;
      int rem = (want_len >= 0 ? want_len : max_len) - (depth + 1);
      if (dist_t[v] == -1 || dist_t[v] > rem) continue;
      visited[v] = 1;
      stack.push_back(v);
      bool stop = run(v, depth + 1);
      stack.pop_back();
      visited[v] = 0;
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

CoreLengths simple_path_lengths(const Graph& g, const VertexSet& core, int s, int t,
                                int max_len, const CoreQuerySettings& settings) {
  if (s == t) throw DomainError("simple_path_lengths: s == t");
  LocalCore lc(g, core, s, t);
  CoreLengths out;

  if (lc.c <= settings.maskdp_cap && lc.c <= 24) {
    std::vector<std::uint32_t> dp(std::size_t{1} << lc.c, 0);
    std::uint32_t smask = std::uint32_t{1} << lc.s;
    dp[smask] = smask;
    std::set<int> lens;
    std::uint32_t full = lc.c == 32 ? 0xffffffffu : ((std::uint32_t{1} << lc.c) - 1);
    for (std::uint32_t mask = smask; mask <= full; ++mask) {
      std::uint32_t ends = dp[mask];
      if (!ends || !(mask & smask)) continue;
      int pc = std::popcount(mask);
      if ((ends >> lc.t) & 1) lens.insert(pc - 1);
      if (pc > max_len) continue;
      std::uint32_t rest = ends;
      while (rest) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        if (u == lc.t) continue;  // paths may not pass through t
        std::uint32_t nxt = lc.adj[u] & ~mask;
        while (nxt) {
          int w = std::countr_zero(nxt);
          nxt &= nxt - 1;
          dp[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
        }
      }
    }
    for (int len : lens) {
      if (len <= max_len) out.lengths.push_back(len);
    }
    out.exhaustive = true;
    out.used_subset_dp = true;
    return out;
  }

  DfsSweep sweep(lc, max_len, settings.dfs_budget);
  sweep.visited[lc.s] = 1;
  sweep.stack.push_back(lc.s);
  sweep.run(lc.s, 0);
  out.lengths.assign(sweep.lengths.begin(), sweep.lengths.end());
  out.exhaustive = !sweep.exhausted;
  out.used_subset_dp = false;
  return out;
}

std::optional<Path> simple_path_with_length(const Graph& g, const VertexSet& core, int s,
                                            int t, int len,
                                            const CoreQuerySettings& settings) {
  if (s == t) {
    if (len == 0) return Path{{s}};
    return std::nullopt;
  }
  if (len <= 0) return std::nullopt;
  LocalCore lc(g, core, s, t);

  if (lc.c <= settings.maskdp_cap && lc.c <= 24) {
    std::vector<std::uint32_t> dp(std::size_t{1} << lc.c, 0);
    std::uint32_t smask = std::uint32_t{1} << lc.s;
    dp[smask] = smask;
    std::uint32_t full = lc.c == 32 ? 0xffffffffu : ((std::uint32_t{1} << lc.c) - 1);
    std::uint32_t hit_mask = 0;
    for (std::uint32_t mask = smask; mask <= full; ++mask) {
      std::uint32_t ends = dp[mask];
      if (!ends || !(mask & smask)) continue;
      int pc = std::popcount(mask);
      if (pc == len + 1 && ((ends >> lc.t) & 1)) {
        hit_mask = mask;
        break;
      }
      if (pc > len) continue;
      std::uint32_t rest = ends;
      while (rest) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        if (u == lc.t) continue;
        std::uint32_t nxt = lc.adj[u] & ~mask;
        while (nxt) {
          int w = std::countr_zero(nxt);
          nxt &= nxt - 1;
          dp[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
        }
      }
    }
    if (!hit_mask) return std::nullopt;
    // walk the witness backwards through shrinking masks
    std::vector<int> rev{lc.t};
    std::uint32_t mask = hit_mask;
    int cur = lc.t;
    while (mask != smask) {
      std::uint32_t prev = mask & ~(std::uint32_t{1} << cur);
      std::uint32_t cands = dp[prev] & lc.adj[cur];
      if (!cands) return std::nullopt;  // cannot happen for a DP-certified mask
      int u = std::countr_zero(cands);
      rev.push_back(u);
      mask = prev;
      cur = u;
    }
    std::reverse(rev.begin(), rev.end());
    Path p;
    for (int v : rev) p.vertices.push_back(lc.verts[v]);
    return p;
  }

  DfsSweep sweep(lc, len, settings.dfs_budget);
  sweep.want_len = len;
  sweep.visited[lc.s] = 1;
  sweep.stack.push_back(lc.s);
  sweep.run(lc.s, 0);
  if (sweep.want_path.empty()) return std::nullopt;
  Path p;
  for (int v : sweep.want_path) p.vertices.push_back(lc.verts[v]);
  return p;
}

}  // namespace cyclelab
