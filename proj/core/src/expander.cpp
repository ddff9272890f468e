#include "cyclelab/expander.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "cyclelab/families.hpp"

namespace cyclelab {

namespace {

constexpr double kWitnessSlack = 1e-9;

// binomial counts for deterministic subsets_checked reporting
std::uint64_t subsets_in_range(int n, int lo, int hi) {
  std::uint64_t total = 0;
  for (int s = lo; s <= hi; ++s) {
    // C(n, s) without overflow for n <= 24
    std::uint64_t c = 1;
    for (int i = 0; i < s; ++i) c = c * (n - i) / (i + 1);
    total += c;
  }
  return total;
}

struct SizeBounds {
  int lo;
  int hi;
};

SizeBounds witness_size_bounds(int n, const ExpansionParams& params) {
  int lo = std::max(1, static_cast<int>(std::ceil(params.k / 2.0 - 1e-12)));
  int hi = n / 2;
  return {lo, hi};
}

}  // namespace

double epsilon(double x, const ExpansionParams& params) {
  if (x < 0.0) throw DomainError("epsilon: negative x");
  if (x < params.k / 5.0) return 0.0;
  double lg = std::log(15.0 * x / params.k);
  return params.eps1 / (lg * lg);
}

double diameter_bound(double n, const ExpansionParams& params) {
  if (n < params.k) throw DomainError("diameter_bound needs n >= k");
  double lg = std::log(15.0 * n / params.k);
  return (2.0 / params.eps1) * lg * lg * lg;
}

bool revalidate_witness(const Graph& g, const ExpansionParams& params,
                        const NonExpansionWitness& w) {
  int n = g.order();
  auto [lo, hi] = witness_size_bounds(n, params);
  int s = static_cast<int>(w.x.size());
  if (s < lo || s > hi) return false;
  int boundary = static_cast<int>(neighborhood(g, w.x).size());
  double required = epsilon(s, params) * s;
  return boundary == w.boundary && boundary < required - kWitnessSlack;
}

namespace {

ExpanderVerdict check_exhaustive(const Graph& g, const ExpansionParams& params,
                                 const CheckSettings& settings) {
  int n = g.order();
  if (n > settings.exhaustive_cap || n > 32) {
    throw CapacityError("exhaustive expander check capped at n <= " +
                        std::to_string(std::min(settings.exhaustive_cap, 32)));
  }
  auto bounds = witness_size_bounds(n, params);
  int lo = bounds.lo;
  int hi = bounds.hi;
  if (lo > hi || n == 0) {
    return ExpanderCertificate{ExpanderCertificate::Mode::exhaustive, 0};
  }

  std::vector<std::uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) adj[v] |= std::uint32_t{1} << w;
  }
  std::vector<double> threshold(n + 1, 0.0);
  for (int s = lo; s <= hi; ++s) threshold[s] = epsilon(s, params) * s - kWitnessSlack;

  std::uint32_t end = n >= 32 ? 0xffffffffu : (std::uint32_t{1} << n);
  int nthreads = std::max(1, settings.threads);
  std::vector<std::uint32_t> found(nthreads, 0);  // 0 = none (mask 0 never qualifies)
  auto scan = [&](int t) {
    std::uint64_t chunk = (static_cast<std::uint64_t>(end) + nthreads - 1) / nthreads;
    std::uint64_t begin = 1 + t * chunk;
    std::uint64_t stop = std::min<std::uint64_t>(end, begin + chunk);
    for (std::uint64_t m = begin; m < stop; ++m) {
      auto mask = static_cast<std::uint32_t>(m);
      int pc = std::popcount(mask);
      if (pc < lo || pc > hi) continue;
      std::uint32_t nb = 0;
      std::uint32_t rest = mask;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        nb |= adj[v];
      }
      int boundary = std::popcount(nb & ~mask);
      if (boundary < threshold[pc]) {
        found[t] = mask;
        return;  // the smallest violating mask in this chunk
      }
    }
  };
  if (nthreads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(scan, t);
    for (auto& th : pool) th.join();
  }

  std::uint32_t best = 0;
  for (auto m : found) {
    if (m != 0 && (best == 0 || m < best)) best = m;
  }
  if (best == 0) {
    return ExpanderCertificate{ExpanderCertificate::Mode::exhaustive,
                               subsets_in_range(n, lo, hi)};
  }
  NonExpansionWitness w;
  for (int v = 0; v < n; ++v) {
    if (best & (std::uint32_t{1} << v)) w.x.push_back(v);
  }
  w.boundary = static_cast<int>(neighborhood(g, w.x).size());
  w.required = epsilon(static_cast<int>(w.x.size()), params) * static_cast<double>(w.x.size());
  return w;
}

ExpanderVerdict check_sampled(const Graph& g, const ExpansionParams& params,
                              const CheckSettings& settings) {
  int n = g.order();
  auto [lo, hi] = witness_size_bounds(n, params);
  if (lo > hi || n == 0) {
    return ExpanderCertificate{ExpanderCertificate::Mode::sampled, 0};
  }
  Rng rng(settings.seed);
  std::vector<char> in_x(n, 0);
  std::vector<int> cnt(n, 0);  // neighbors inside X

  auto boundary_size = [&]() {
    int b = 0;
    for (int v = 0; v < n; ++v) {
      if (!in_x[v] && cnt[v] > 0) ++b;
    }
    return b;
  };

  for (std::uint64_t trial = 0; trial < settings.budget; ++trial) {
    std::fill(in_x.begin(), in_x.end(), 0);
    std::fill(cnt.begin(), cnt.end(), 0);
    int size = 0;
    int target = rng.uniform_int(lo, hi);
    int start = rng.uniform_int(0, n - 1);
    auto add = [&](int v) {
      in_x[v] = 1;
      ++size;
      for (int w : g.neighbors(v)) ++cnt[w];
    };
    auto remove = [&](int v) {
      in_x[v] = 0;
      --size;
      for (int w : g.neighbors(v)) --cnt[w];
    };
    add(start);
    while (size < target) {
      std::vector<int> frontier;
      for (int v = 0; v < n; ++v) {
        if (!in_x[v] && cnt[v] > 0) frontier.push_back(v);
      }
      if (frontier.empty()) break;
      add(frontier[rng.uniform_int(0, static_cast<int>(frontier.size()) - 1)]);
    }
    if (size < lo) continue;

    // greedy boundary-shrinking walk over single-vertex moves
    int boundary = boundary_size();
    double slack = boundary - epsilon(size, params) * size;
    for (int step = 0; step < 4 * n; ++step) {
      if (slack < -kWitnessSlack) break;
      int v = rng.uniform_int(0, n - 1);
      bool can_add = !in_x[v] && size < hi;
      bool can_remove = in_x[v] && size > lo;
      if (!can_add && !can_remove) continue;
      if (can_add) {
        add(v);
      } else {
        remove(v);
      }
      int nb = boundary_size();
      double ns = nb - epsilon(size, params) * size;
      if (ns <= slack) {
        boundary = nb;
        slack = ns;
      } else {  // undo
        if (can_add) {
          remove(v);
        } else {
          add(v);
        }
      }
    }
    if (slack < -kWitnessSlack) {
      NonExpansionWitness w;
      for (int v = 0; v < n; ++v) {
        if (in_x[v]) w.x.push_back(v);
      }
      w.boundary = static_cast<int>(neighborhood(g, w.x).size());
      w.required = epsilon(static_cast<int>(w.x.size()), params) * static_cast<double>(w.x.size());
      if (revalidate_witness(g, params, w)) return w;
    }
  }
  return ExpanderCertificate{ExpanderCertificate::Mode::sampled, settings.budget};
}

}  // namespace

ExpanderVerdict check_expander(const Graph& g, const ExpansionParams& params,
                               const CheckSettings& settings) {
  if (settings.mode == CheckSettings::Mode::exhaustive) {
    return check_exhaustive(g, params, settings);
  }
  return check_sampled(g, params, settings);
}

namespace {

// Removes vertices while delta(H) < d(H)/2 or delta(H) < deg_floor.
// The first condition compares min_deg * n < e exactly; such removals
// never decrease the average degree.
Graph peel(const Graph& g, int deg_floor) {
  int n = g.order();
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  std::int64_t e = static_cast<std::int64_t>(g.edge_count());
  int remaining = n;
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  while (remaining > 0) {
    int victim = -1;
    for (int v = 0; v < n; ++v) {
      if (alive[v] && (victim == -1 || deg[v] < deg[victim])) victim = v;
    }
    bool below_half = static_cast<std::int64_t>(deg[victim]) * remaining < e;
    bool below_floor = deg[victim] < deg_floor;
    if (!below_half && !below_floor) break;
    alive[victim] = 0;
    --remaining;
    e -= deg[victim];
    for (int w : g.neighbors(victim)) {
      if (alive[w]) --deg[w];
    }
  }
  VertexSet keep;
  for (int v = 0; v < n; ++v) {
    if (alive[v]) keep.push_back(v);
  }
  return induced(g, keep);
}

Rational avg_degree(const Graph& g) {
  if (g.order() == 0) return Rational(0);
  return Rational(2 * static_cast<std::int64_t>(g.edge_count()), g.order());
}

ExtractResult repair_to_expander(Graph h, const ExpansionParams& params,
                                 const CheckSettings& settings, const Rational& avg_floor,
                                 int deg_floor) {
  ExtractResult result;
  h = peel(h, deg_floor);
  CheckSettings local = settings;
  for (int iter = 0; iter <= h.order() + 1; ++iter) {
    local.mode = h.order() <= settings.exhaustive_cap ? CheckSettings::Mode::exhaustive
                                                      : CheckSettings::Mode::sampled;
    local.seed = settings.seed + iter;
    auto verdict = check_expander(h, params, local);
    if (std::holds_alternative<ExpanderCertificate>(verdict)) {
      result.certificate_mode = std::get<ExpanderCertificate>(verdict).mode;
      break;
    }
    const auto& w = std::get<NonExpansionWitness>(verdict);
    VertexSet bx = set_union_of(w.x, neighborhood(h, w.x));
    Graph inside = peel(induced(h, bx), deg_floor);
    Graph outside = peel(minus(h, w.x), deg_floor);
    Rational da = avg_degree(inside);
    Rational db = avg_degree(outside);
    const Graph& pick = da >= db ? inside : outside;
    Rational best = da >= db ? da : db;
    if (pick.order() == 0 || best < avg_floor) {
      result.residual_witness = w;
      result.certificate_mode = local.mode == CheckSettings::Mode::exhaustive
                                    ? ExpanderCertificate::Mode::exhaustive
                                    : ExpanderCertificate::Mode::sampled;
      break;
    }
    h = pick;
    ++result.repair_steps;
  }
  result.subgraph = std::move(h);
  return result;
}

}  // namespace

ExtractResult extract_expander(const Graph& g, const ExpansionParams& params,
                               const CheckSettings& settings) {
  if (g.order() == 0) throw DomainError("extract_expander on the empty graph");
  return repair_to_expander(g, params, settings, avg_degree(g) * Rational(1, 2), 0);
}

Graph extract_bipartite(const Graph& g, std::uint64_t seed) {
  int n = g.order();
  Rng rng(seed);
  std::vector<std::int8_t> side(n);
  for (int v = 0; v < n; ++v) side[v] = static_cast<std::int8_t>(rng.uniform_int(0, 1));
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < n; ++v) {
      int same = 0;
      for (int w : g.neighbors(v)) {
        if (side[w] == side[v]) ++same;
      }
      if (2 * same > g.degree(v)) {  // more same-side than cross-side
        side[v] = static_cast<std::int8_t>(1 - side[v]);
        moved = true;
      }
    }
  }
  std::vector<std::pair<int, int>> cross;
  for (auto [u, v] : g.edges()) {
    if (side[u] != side[v]) cross.emplace_back(g.label(u), g.label(v));
  }
  return Graph::from_edges_labeled(g.labels(), cross);
}

ExtractResult extract_bipartite_expander(const Graph& g, double eps1, double eps2, int d,
                                         const CheckSettings& settings) {
  if (d <= 0) throw DomainError("extract_bipartite_expander: d must be positive");
  // d(G) >= 8d exactly: 2e >= 8dn
  if (static_cast<std::int64_t>(g.edge_count()) * 2 <
      static_cast<std::int64_t>(8) * d * g.order()) {
    throw DomainError("extract_bipartite_expander requires d(G) >= 8d");
  }
  Graph b = extract_bipartite(g, settings.seed);
  auto params = ExpansionParams::bipartite_form(eps1, eps2, d);
  ExtractResult res = repair_to_expander(b, params, settings, Rational(0), d);
  if (res.subgraph.order() == 0) {
    throw CapacityError("bipartite expander extraction emptied the graph at desk scale");
  }
  return res;
}

}  // namespace cyclelab
