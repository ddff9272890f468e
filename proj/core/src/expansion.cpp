#include "cyclelab/expansion.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace cyclelab {

namespace {

// BFS distances from `center` restricted to `members`; -1 outside/unreached.
std::vector<int> distances_within(const Graph& g, const VertexSet& members, int center) {
  std::vector<char> inside(g.order(), 0);
  for (int v : members) inside[v] = 1;
  std::vector<int> dist(g.order(), -1);
  if (center < 0 || center >= g.order() || !inside[center]) return dist;
  std::deque<int> queue{center};
  dist[center] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (inside[v] && dist[v] == -1) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

bool validate_expansion(const Graph& g, const VertexExpansion& f) {
  if (f.members.empty() || !set_contains(f.members, f.center)) return false;
  for (int v : f.members) {
    if (v < 0 || v >= g.order()) return false;
  }
  auto dist = distances_within(g, f.members, f.center);
  for (int v : f.members) {
    if (dist[v] < 0 || dist[v] > f.radius_bound) return false;
  }
  return true;
}

VertexExpansion trim_expansion(const Graph& g, const VertexExpansion& f, int d_new) {
  if (d_new < 1 || d_new > f.size()) {
    throw DomainError("trim_expansion: target size out of range");
  }
  auto dist = distances_within(g, f.members, f.center);
  // deletion order is (distance desc, id desc); keeping the first d_new of
  // the reverse order never changes the survivors' distances
  std::vector<int> order = f.members;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (dist[a] != dist[b]) return dist[a] < dist[b];
    return a < b;
  });
  VertexExpansion out;
  out.center = f.center;
  out.radius_bound = f.radius_bound;
  out.members.assign(order.begin(), order.begin() + d_new);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

namespace {

std::vector<int> canonical_cycle(const std::vector<int>& cyc) {
  int n = static_cast<int>(cyc.size());
  int at = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
  std::vector<int> fwd(n), bwd(n);
  for (int i = 0; i < n; ++i) {
    fwd[i] = cyc[(at + i) % n];
    bwd[i] = cyc[(at - i % n + n) % n];
  }
  return std::min(fwd, bwd);
}

}  // namespace

std::vector<Cycle> shortest_cycle_candidates(const Graph& g, const VertexSet& avoid,
                                             std::size_t max_count) {
  auto blocked = mask_of(g, avoid);
  std::map<std::vector<int>, int> seen;  // canonical form -> length
  std::vector<std::pair<int, std::vector<int>>> found;

  for (int root = 0; root < g.order(); ++root) {
    if (blocked[root]) continue;
    std::vector<int> dist(g.order(), -1);
    std::vector<int> parent(g.order(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (blocked[v]) continue;
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    for (int v = 0; v < g.order(); ++v) {
      if (blocked[v] || dist[v] == -1) continue;
      for (int w : g.neighbors(v)) {
        if (blocked[w] || w <= v || dist[w] == -1) continue;
        if (parent[v] == w || parent[w] == v) continue;
        // trim the two parent chains to their deepest common vertex so the
        // closed walk becomes a simple cycle
        std::vector<char> on_v(g.order(), 0);
        std::vector<int> chain_v;
        for (int x = v;; x = parent[x]) {
          chain_v.push_back(x);
          on_v[x] = 1;
          if (x == root) break;
        }
        int meet = -1;
        std::vector<int> chain_w;
        for (int x = w;; x = parent[x]) {
          if (on_v[x]) {
            meet = x;
            break;
          }
          chain_w.push_back(x);
          if (x == root) break;
        }
        if (meet == -1) continue;
        std::vector<int> cyc;
        for (int x : chain_v) {
          cyc.push_back(x);
          if (x == meet) break;
        }
        std::reverse(cyc.begin(), cyc.end());  // meet .. v
        // then v-w edge, then w back up to just below the meet vertex
        cyc.insert(cyc.end(), chain_w.begin(), chain_w.end());
        if (cyc.size() < 3) continue;
        auto canon = canonical_cycle(cyc);
        if (seen.emplace(canon, static_cast<int>(cyc.size())).second) {
          found.emplace_back(static_cast<int>(cyc.size()), canon);
        }
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<Cycle> out;
  for (const auto& [len, seq] : found) {
    Cycle c{seq};
    if (validate_cycle(g, c)) out.push_back(std::move(c));
    if (out.size() >= max_count) break;
  }
  return out;
}

std::optional<Cycle> shortest_cycle(const Graph& g, const VertexSet& avoid) {
  auto cycles = shortest_cycle_candidates(g, avoid, 1);
  if (cycles.empty()) return std::nullopt;
  return cycles.front();
}

int girth_or_zero(const Graph& g) {
  auto c = shortest_cycle(g, {});
  return c ? c->length() : 0;
}

FindExpansionsResult find_vertex_expansions(const Graph& g, const std::optional<Cycle>& cycle,
                                            const std::vector<ExpansionRequest>& requests,
                                            int radius_budget, const VertexSet& avoid,
                                            int girth_validate_cap) {
  FindExpansionsResult result;
  if (requests.empty()) {
    result.expansions = std::vector<VertexExpansion>{};
    return result;
  }
  for (const auto& req : requests) {
    if (req.center < 0 || req.center >= g.order()) {
      throw DomainError("find_vertex_expansions: center out of range");
    }
    if (req.size < 1) throw DomainError("find_vertex_expansions: size must be >= 1");
  }
  if (cycle) {
    if (!validate_cycle(g, *cycle)) {
      throw DomainError("find_vertex_expansions: C is not a cycle of G");
    }
    for (int v : cycle->vertices) {
      if (set_contains(avoid, v)) {
        throw DomainError("find_vertex_expansions: C intersects the avoid set");
      }
    }
    if (g.order() <= girth_validate_cap) {
      // no chord may create a shorter cycle
      int len = cycle->length();
      for (int i = 0; i < len; ++i) {
        for (int j = i + 2; j < len; ++j) {
          if (i == 0 && j == len - 1) continue;  // the closing edge
          if (g.has_edge(cycle->vertices[i], cycle->vertices[j])) {
            throw DomainError("find_vertex_expansions: C has a chord, not a shortest cycle");
          }
        }
      }
    }
  }

  std::vector<char> claimed(g.order(), 0);
  for (int v : avoid) claimed[v] = 1;
  if (cycle) {
    for (int v : cycle->vertices) claimed[v] = 1;
  }
  for (const auto& req : requests) claimed[req.center] = 1;

  struct State {
    int index;  // original request index
    int center;
    int need;
    std::vector<int> members;
    std::vector<int> frontier;
    int depth = 0;
  };
  std::vector<State> states;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    State s;
    s.index = static_cast<int>(i);
    s.center = requests[i].center;
    s.need = requests[i].size - 1;
    s.members = {s.center};
    s.frontier = {s.center};
    states.push_back(std::move(s));
  }
  // larger requests claim first
  std::sort(states.begin(), states.end(), [](const State& a, const State& b) {
    if (a.need != b.need) return a.need > b.need;
    if (a.center != b.center) return a.center < b.center;
    return a.index < b.index;
  });

  bool progress = true;
  while (progress) {
    progress = false;
    bool all_done = true;
    for (auto& s : states) {
      if (s.need == 0) continue;
      all_done = false;
      if (s.depth >= radius_budget || s.frontier.empty()) {
        result.blocking_center = s.center;
        return result;
      }
      std::vector<int> next;
      for (int u : s.frontier) {
        for (int v : g.neighbors(u)) {
          if (claimed[v] || s.need == 0) continue;
          claimed[v] = 1;
          s.members.push_back(v);
          next.push_back(v);
          --s.need;
        }
        if (s.need == 0) break;
      }
      ++s.depth;
      s.frontier = std::move(next);
      progress = true;
    }
    if (all_done) break;
  }
  for (const auto& s : states) {
    if (s.need > 0) {
      result.blocking_center = s.center;
      return result;
    }
  }

  std::vector<VertexExpansion> out(requests.size());
  for (const auto& s : states) {
    VertexExpansion f;
    f.center = s.center;
    f.members = as_vertex_set(s.members);
    f.radius_bound = std::max(1, s.depth);
    out[s.index] = std::move(f);
  }
  result.expansions = std::move(out);
  return result;
}

std::optional<std::vector<VertexExpansion>> enlarge_expansions(
    const Graph& g, const VertexSet& a_avoid, const std::vector<VertexExpansion>& expansions,
    int target, const std::optional<ExpansionParams>& params) {
  if (target < 1) throw DomainError("enlarge_expansions: target must be >= 1");
  for (std::size_t i = 0; i < expansions.size(); ++i) {
    if (!sets_disjoint(expansions[i].members, a_avoid)) {
      throw DomainError("enlarge_expansions: expansion intersects avoid set");
    }
    for (std::size_t j = i + 1; j < expansions.size(); ++j) {
      if (!sets_disjoint(expansions[i].members, expansions[j].members)) {
        throw DomainError("enlarge_expansions: expansions overlap");
      }
    }
  }
  if (static_cast<long long>(expansions.size()) * target > g.order()) return std::nullopt;

  VertexSet used = a_avoid;
  for (const auto& f : expansions) used = set_union_of(used, f.members);

  std::vector<VertexExpansion> out;
  for (const auto& f : expansions) {
    if (f.size() >= target) {
      out.push_back(trim_expansion(g, f, target));
      continue;
    }
    CoreSettings cs;
    cs.target = target;
    cs.params = params;
    auto core = low_diameter_core(g, used, cs);
    if (!core) return std::nullopt;
    auto trunk = connect_avoiding(g, f.members, core->members,
                                  set_difference_of(used, f.members));
    if (!trunk) return std::nullopt;
    VertexExpansion big;
    big.center = f.center;
    big.members = set_union_of(set_union_of(f.members, as_vertex_set(trunk->vertices)),
                               core->members);
    auto dist = distances_within(g, big.members, big.center);
    int radius = 0;
    for (int v : big.members) radius = std::max(radius, dist[v]);
    big.radius_bound = radius;
    big = trim_expansion(g, big, target);
    dist = distances_within(g, big.members, big.center);
    radius = 0;
    for (int v : big.members) radius = std::max(radius, dist[v]);
    big.radius_bound = radius;
    used = set_union_of(used, big.members);
    out.push_back(std::move(big));
  }
  return out;
}

}  // namespace cyclelab
