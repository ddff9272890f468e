#include "cyclelab/connect.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace cyclelab {

ContactProfile contact_profile(const Graph& g, const VertexSet& a, const VertexSet& z,
                               int depth) {
  if (!sets_disjoint(a, z)) throw DomainError("contact_profile: A and Z overlap");
  if (depth < 0) throw DomainError("contact_profile: negative depth");
  auto dist = bfs_distances(g, a, mask_of(g, z));  // ball of A grown inside G-Z
  // z joins the count at level i once some G-neighbor sits in B^{i-1}
  std::vector<int> first_level(z.size(), -1);
  for (std::size_t zi = 0; zi < z.size(); ++zi) {
    int best = -1;
    for (int w : g.neighbors(z[zi])) {
      if (dist[w] >= 0 && (best == -1 || dist[w] < best)) best = dist[w];
    }
    if (best != -1) first_level[zi] = best + 1;
  }
  ContactProfile profile;
  profile.per_level.assign(depth, 0);
  for (int i = 1; i <= depth; ++i) {
    int count = 0;
    for (int fl : first_level) {
      if (fl != -1 && fl <= i) ++count;
    }
    profile.per_level[i - 1] = count;
  }
  for (int i = 1; i <= depth; ++i) {
    int count = profile.per_level[i - 1];
    profile.minimal_k = std::max(profile.minimal_k, (count + i - 1) / i);
  }
  return profile;
}

GrowthTrace grow_avoiding(const Graph& g, const VertexSet& a, const VertexSet& x,
                          const VertexSet& y, const VertexSet& z, int max_depth,
                          const std::optional<GrowthHypotheses>& hypotheses) {
  for (const VertexSet* role : {&x, &y, &z}) {
    if (!sets_disjoint(a, *role)) throw DomainError("grow_avoiding: role set intersects A");
  }
  if (max_depth < 0) throw DomainError("grow_avoiding: negative depth");

  VertexSet removed = set_union_of(set_union_of(x, y), z);
  auto avoid = mask_of(g, removed);
  auto dist = bfs_distances(g, a, avoid);

  GrowthTrace trace;
  std::size_t n = static_cast<std::size_t>(g.order());
  std::vector<std::size_t> count_at;
  int maxd = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (dist[v] >= 0) maxd = std::max(maxd, dist[v]);
  }
  count_at.assign(maxd + 1, 0);
  for (int v = 0; v < g.order(); ++v) {
    if (dist[v] >= 0) ++count_at[dist[v]];
  }
  int limit = std::min(maxd, max_depth);
  std::size_t running = 0;
  for (int i = 0; i <= limit; ++i) {
    running += count_at[i];
    trace.levels.push_back(running);
  }
  trace.halted_at = limit;
  if (2 * trace.levels.back() > n) {
    trace.reason = GrowthTrace::Reason::reached_half_n;
  } else if (limit == maxd) {
    trace.reason = GrowthTrace::Reason::stalled;  // the ball cannot grow further
  } else {
    trace.reason = GrowthTrace::Reason::depth_exhausted;
  }

  if (hypotheses) {
    GrowthDiagnostics diag;
    const auto& hyp = *hypotheses;
    double logn = std::log(std::max(3, g.order()));
    diag.m = (16.0 / hyp.params.eps1) * logn * logn * logn;
    double loglog = std::log(std::max(1.001, logn));
    diag.ell0 = std::max(1.0, std::pow(loglog, 5));

    double asz = static_cast<double>(a.size());
    diag.hyp_x_small = static_cast<double>(x.size()) <= asz * epsilon(asz, hyp.params) / 4.0;

    // B^{ell0}_{G-X-Z}(A) cap Y empty, |Y| <= m^{300k} (compared in logs)
    auto dist_xz = bfs_distances(g, a, mask_of(g, set_union_of(x, z)));
    bool y_far = true;
    for (int v : y) {
      if (dist_xz[v] >= 0 && dist_xz[v] <= diag.ell0) y_far = false;
    }
    bool y_bounded = y.empty() || std::log(static_cast<double>(y.size())) <=
                                      300.0 * hyp.contact_k * std::log(std::max(2.0, diag.m));
    diag.hyp_y_far_and_bounded = y_far && y_bounded;

    auto profile = contact_profile(g, a, z, std::max(1, std::min(g.order(), max_depth)));
    diag.hyp_z_limited = profile.minimal_k <= hyp.contact_k;

    int ell0_idx = std::min<int>(static_cast<int>(diag.ell0), trace.halted_at);
    double log_ball = trace.levels[ell0_idx] > 0
                          ? std::log(static_cast<double>(trace.levels[ell0_idx]))
                          : -1.0;
    diag.concl_ball_ell0 =
        log_ball > 400.0 * hyp.contact_k * std::log(std::max(2.0, diag.m));
    int m_idx = std::min<int>(static_cast<int>(diag.m), trace.halted_at);
    diag.concl_half_n = 2 * trace.levels[m_idx] > n;
    trace.diagnostics = diag;
  }
  return trace;
}

std::optional<Path> connect_avoiding(const Graph& g, const VertexSet& a, const VertexSet& b,
                                     const VertexSet& w) {
  if (a.empty() || b.empty()) throw DomainError("connect_avoiding: empty endpoint set");
  if (!sets_disjoint(a, b)) throw DomainError("connect_avoiding: A and B overlap");
  if (!sets_disjoint(w, set_union_of(a, b))) {
    throw DomainError("connect_avoiding: W intersects A u B");
  }
  int n = g.order();
  auto in_a = mask_of(g, a);
  auto in_b = mask_of(g, b);
  auto blocked = mask_of(g, w);

  // Backward BFS from B, with interior vertices restricted to V - A - B - W.
  std::vector<int> dist(n, -1);
  std::deque<int> queue;
  for (int v : b) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (in_a[u]) continue;  // endpoints in A never expand
    for (int v : g.neighbors(u)) {
      if (dist[v] != -1 || blocked[v] || in_b[v]) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }

  int best_len = -1;
  int start = -1;
  for (int v : a) {
    if (dist[v] != -1 && (best_len == -1 || dist[v] < best_len ||
                          (dist[v] == best_len && v < start))) {
      best_len = dist[v];
      start = v;
    }
  }
  if (best_len == -1) return std::nullopt;

  // Forward greedy: at each step take the smallest vertex that keeps a
  // shortest completion, which yields the lexicographically least sequence.
  Path path;
  path.vertices.push_back(start);
  int cur = start;
  for (int remaining = best_len; remaining > 0; --remaining) {
    int next = -1;
    for (int v : g.neighbors(cur)) {
      if (blocked[v] || dist[v] != remaining - 1) continue;
      if (remaining - 1 == 0) {
        if (!in_b[v]) continue;
      } else {
        if (in_a[v] || in_b[v]) continue;
      }
      if (next == -1 || v < next) next = v;
    }
    if (next == -1) throw std::logic_error("connect_avoiding: reconstruction failed");
    path.vertices.push_back(next);
    cur = next;
  }
  return path;
}

namespace {

// Minimal radius whose ball from `center` (inside G-W) holds >= target
// vertices; -1 if unreachable within the budget.
int radius_to_target(const std::vector<int>& dist, int target, int depth_budget,
                     std::size_t* size_out) {
  int maxd = 0;
  for (int d : dist) maxd = std::max(maxd, d);
  std::vector<std::size_t> count(maxd + 1, 0);
  for (int d : dist) {
    if (d >= 0) ++count[d];
  }
  std::size_t running = 0;
  for (int r = 0; r <= std::min(maxd, depth_budget); ++r) {
    running += count[r];
    if (running >= static_cast<std::size_t>(target)) {
      if (size_out) *size_out = running;
      return r;
    }
  }
  return -1;
}

}  // namespace

std::optional<LowDiameterCore> low_diameter_core(const Graph& g, const VertexSet& w,
                                                 const CoreSettings& settings) {
  int n = g.order();
  if (n == 0) return std::nullopt;
  int target = settings.target > 0 ? settings.target : (n + 24) / 25;
  int depth_budget = settings.depth_budget > 0 ? settings.depth_budget : n;
  int step = settings.step;
  if (step <= 0 && settings.params) {
    double logn = std::log(std::max(3, n));
    step = static_cast<int>(std::ceil((50.0 / settings.params->eps1) * logn * logn));
  }
  if (step <= 0) step = depth_budget;
  step = std::min(step, depth_budget);

  auto avoid = mask_of(g, w);
  VertexSet candidates;
  for (int v = 0; v < n; ++v) {
    if (!avoid[v]) candidates.push_back(v);
  }
  if (candidates.empty()) return std::nullopt;

  // Refinement: keep the best-covering 1/12 chunk until one center remains.
  VertexSet current = candidates;
  int rounds = 1;
  while (current.size() > 1) {
    std::size_t chunk = (current.size() + 11) / 12;
    std::size_t best_cover = 0;
    VertexSet best;
    for (std::size_t at = 0; at < current.size(); at += chunk) {
      VertexSet part(current.begin() + at,
                     current.begin() + std::min(current.size(), at + chunk));
      auto dist = bfs_distances(g, part, avoid);
      int radius = std::min(depth_budget, rounds * step);
      std::size_t cover = 0;
      for (int d : dist) {
        if (d >= 0 && d <= radius) ++cover;
      }
      if (cover > best_cover) {  // ties keep the earlier (smallest-id) chunk
        best_cover = cover;
        best = std::move(part);
      }
    }
    if (best.empty()) break;
    current = std::move(best);
    ++rounds;
  }

  auto finish = [&](int center) -> std::optional<LowDiameterCore> {
    auto dist = bfs_distances(g, {center}, avoid);
    std::size_t size = 0;
    int radius = radius_to_target(dist, target, depth_budget, &size);
    if (radius < 0) return std::nullopt;
    LowDiameterCore core;
    core.center = center;
    core.radius = radius;
    for (int v = 0; v < n; ++v) {
      if (dist[v] >= 0 && dist[v] <= radius) core.members.push_back(v);
    }
    return core;
  };

  if (current.size() == 1) {
    if (auto core = finish(current[0])) return core;
  }

  // Fallback scan: smallest achieving radius, ties by center id.
  int best_center = -1;
  int best_radius = -1;
  for (int v : candidates) {
    auto dist = bfs_distances(g, {v}, avoid);
    int radius = radius_to_target(dist, target, depth_budget, nullptr);
    if (radius >= 0 && (best_radius == -1 || radius < best_radius)) {
      best_radius = radius;
      best_center = v;
    }
  }
  if (best_center == -1) return std::nullopt;
  return finish(best_center);
}

}  // namespace cyclelab
