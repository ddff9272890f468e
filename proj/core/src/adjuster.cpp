#include "cyclelab/adjuster.hpp"

#include <algorithm>
#include <deque>

namespace cyclelab {

namespace {

// Shortest from->to path using only `members`; empty when disconnected.
std::vector<int> path_within(const Graph& g, const VertexSet& members, int from, int to) {
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
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// ladder base: least L with {L, L+2, ..., L+2k} all realizable
int minimal_ladder_base(const std::vector<int>& lengths, int k) {
  for (int base : lengths) {
    bool full = true;
    for (int i = 0; i <= k; ++i) {
      if (!std::binary_search(lengths.begin(), lengths.end(), base + 2 * i)) {
        full = false;
        break;
      }
    }
    if (full) return base;
  }
  return -1;
}

}  // namespace

AdjusterReport validate_adjuster(const Graph& g, const Adjuster& adj,
                                 const CoreQuerySettings& settings) {
  AdjusterReport report;
  if (adj.capacity < 1) {
    report.failures.push_back("capacity must be at least 1");
    return report;
  }

  report.a1_disjoint = sets_disjoint(adj.core, adj.f1.members) &&
                       sets_disjoint(adj.core, adj.f2.members) &&
                       sets_disjoint(adj.f1.members, adj.f2.members);
  if (!report.a1_disjoint) report.failures.push_back("A1: core and ends are not pairwise disjoint");

  bool f1_ok = validate_expansion(g, adj.f1) && adj.f1.size() == adj.declared_d &&
               adj.f1.radius_bound <= adj.declared_m;
  bool f2_ok = validate_expansion(g, adj.f2) && adj.f2.size() == adj.declared_d &&
               adj.f2.radius_bound <= adj.declared_m;
  report.a2_expansions = f1_ok && f2_ok;
  if (!report.a2_expansions) report.failures.push_back("A2: ends are not valid (D,m)-expansions");

  report.a3_core_size =
      static_cast<long long>(adj.core.size()) <= 10LL * adj.declared_m * adj.capacity;
  if (!report.a3_core_size) report.failures.push_back("A3: |A| exceeds 10mk");

  VertexSet core_plus = set_union_of(adj.core, VertexSet{adj.v1(), adj.v2()});
  core_plus = as_vertex_set(core_plus);
  int max_len = static_cast<int>(adj.core.size()) + 1;
  auto lengths = simple_path_lengths(g, core_plus, adj.v1(), adj.v2(), max_len, settings);
  report.exhaustive = lengths.exhaustive;
  if (!lengths.exhaustive) report.failures.push_back("A4: core search budget exhausted");

  report.verified_base = minimal_ladder_base(lengths.lengths, adj.capacity);
  report.a4_ladder = report.verified_base >= 0;
  if (!report.a4_ladder) {
    report.failures.push_back("A4: no full ladder of lengths exists in the core");
  }
  report.base_minimal = report.a4_ladder && report.verified_base == adj.base_length;
  if (report.a4_ladder && !report.base_minimal) {
    report.failures.push_back("declared base length " + std::to_string(adj.base_length) +
                              " is not the minimal ladder base " +
                              std::to_string(report.verified_base));
  }
  return report;
}

std::optional<Adjuster> build_simple_adjuster(const Graph& g, const Cycle& c, int x1, int x2,
                                              const AdjusterSearchSettings& settings,
                                              const VertexSet& avoid) {
  if (x1 == x2) throw DomainError("build_simple_adjuster: anchors must be distinct");
  if (!validate_cycle(g, c)) throw DomainError("build_simple_adjuster: C is not a cycle");
  if (c.length() % 2 != 0) {
    throw DomainError("build_simple_adjuster: C must have even length");
  }
  for (int x : {x1, x2}) {
    if (set_contains(as_vertex_set(c.vertices), x)) {
      throw DomainError("build_simple_adjuster: anchors must avoid V(C)");
    }
    if (set_contains(avoid, x)) return std::nullopt;
  }

  int d = std::max(1, settings.d);
  int radius_budget = settings.radius_budget > 0 ? settings.radius_budget : g.order();
  int half = c.length() / 2;
  VertexSet cycle_set = as_vertex_set(c.vertices);

  // pad size schedule: big connect-pads first, degrading gracefully
  std::vector<int> pads;
  int pad0 = settings.pad_size > 0 ? settings.pad_size : std::max(4 * d, 8);
  for (int p : {pad0, 2 * d, d, 1}) {
    if (p >= 1 && (pads.empty() || p < pads.back())) pads.push_back(p);
  }

  // x3, x4 at distance half-1 along C, so the two arcs differ by exactly 2
  for (int i = 0; i < c.length(); ++i) {
    int x3 = c.vertices[i];
    int x4 = c.vertices[(i + half - 1) % c.length()];
    if (x3 > x4) continue;  // each unordered pair once

    for (int pad : pads) {
      std::vector<ExpansionRequest> requests = {
          {x1, d}, {x2, d}, {x1, pad}, {x3, pad}, {x2, pad}, {x4, pad}};
      auto found = find_vertex_expansions(g, c, requests, radius_budget, avoid);
      if (!found.expansions) continue;
      auto& exp = *found.expansions;
      const auto& f11 = exp[0];
      const auto& f21 = exp[1];
      const auto& f12 = exp[2];
      const auto& f31 = exp[3];
      const auto& f22 = exp[4];
      const auto& f41 = exp[5];

      // connector P: x1 -> x3 through the pads, avoiding everything else
      VertexSet keep_out = set_union_of(
          set_union_of(cycle_set, avoid),
          set_union_of(set_union_of(f11.members, f21.members),
                       set_union_of(f22.members, f41.members)));
      VertexSet pa = f12.members;
      VertexSet pb = f31.members;
      auto trunk_p = connect_avoiding(g, pa, pb,
                                      set_difference_of(keep_out, set_union_of(pa, pb)));
      if (!trunk_p) continue;
      int a_end = trunk_p->front();
      int b_end = trunk_p->back();
      if (!set_contains(pa, a_end)) std::swap(a_end, b_end);
      auto head = path_within(g, f12.members, x1, a_end);
      auto tail = path_within(g, f31.members, b_end, x3);
      if (head.empty() || tail.empty()) continue;
      std::vector<int> p_path = head;
      const auto& tp = trunk_p->vertices;
      if (tp.front() == a_end) {
        p_path.insert(p_path.end(), tp.begin() + 1, tp.end());
      } else {
        p_path.insert(p_path.end(), tp.rbegin() + 1, tp.rend());
      }
      p_path.insert(p_path.end(), tail.begin() + 1, tail.end());
      Path p{p_path};
      if (!validate_path(g, p)) continue;

      // connector Q: x2 -> x4, additionally avoiding P
      VertexSet q_keep_out = set_union_of(
          set_union_of(cycle_set, avoid),
          set_union_of(set_union_of(f11.members, f21.members), as_vertex_set(p.vertices)));
      VertexSet qa = f22.members;
      VertexSet qb = f41.members;
      auto trunk_q = connect_avoiding(g, qa, qb,
                                      set_difference_of(q_keep_out, set_union_of(qa, qb)));
      if (!trunk_q) continue;
      int qa_end = trunk_q->front();
      int qb_end = trunk_q->back();
      if (!set_contains(qa, qa_end)) std::swap(qa_end, qb_end);
      auto qhead = path_within(g, f22.members, x2, qa_end);
      auto qtail = path_within(g, f41.members, qb_end, x4);
      if (qhead.empty() || qtail.empty()) continue;
      std::vector<int> q_path = qhead;
      const auto& tq = trunk_q->vertices;
      if (tq.front() == qa_end) {
        q_path.insert(q_path.end(), tq.begin() + 1, tq.end());
      } else {
        q_path.insert(q_path.end(), tq.rbegin() + 1, tq.rend());
      }
      q_path.insert(q_path.end(), qtail.begin() + 1, qtail.end());
      Path q{q_path};
      if (!validate_path(g, q)) continue;
      if (!sets_disjoint(as_vertex_set(p.vertices), as_vertex_set(q.vertices))) continue;

      Adjuster adj;
      adj.f1 = f11;
      adj.f2 = f21;
      adj.declared_d = d;
      adj.declared_m = settings.declared_m > 0 ? settings.declared_m : g.order();
      adj.capacity = 1;
      VertexSet core = set_union_of(set_union_of(as_vertex_set(p.vertices),
                                                 as_vertex_set(q.vertices)),
                                    cycle_set);
      adj.core = set_difference_of(core, VertexSet{std::min(x1, x2), std::max(x1, x2)});
      adj.base_length = p.length() + q.length() + (half - 1);

      auto report = validate_adjuster(g, adj, settings.core);
      if (report.a4_ladder && report.exhaustive) {
        adj.base_length = report.verified_base;  // minimal base from the core search
        report = validate_adjuster(g, adj, settings.core);
        if (report.ok()) return adj;
      }
    }
  }
  return std::nullopt;
}

std::optional<Adjuster> find_adjuster_avoiding(const Graph& g, const VertexSet& u,
                                               const AdjusterSearchSettings& settings) {
  auto cycles = shortest_cycle_candidates(g, u, settings.cycle_retries);
  for (const auto& c : cycles) {
    if (c.length() % 2 != 0) continue;
    VertexSet on_c = as_vertex_set(c.vertices);
    VertexSet blocked = set_union_of(on_c, u);
    std::vector<int> anchors;
    for (int v = 0; v < g.order(); ++v) {
      if (!set_contains(blocked, v)) anchors.push_back(v);
    }
    int tried = 0;
    for (std::size_t i = 0; i < anchors.size() && tried < settings.anchor_pairs; ++i) {
      for (std::size_t j = i + 1; j < anchors.size() && tried < settings.anchor_pairs; ++j) {
        ++tried;
        try {
          auto adj = build_simple_adjuster(g, c, anchors[i], anchors[j], settings, u);
          if (adj) return adj;
        } catch (const DomainError&) {
          break;  // this retry cycle is unusable (e.g. chorded); next one
        }
      }
    }
  }
  return std::nullopt;
}

ChainResult chain_adjusters(const Graph& g, const VertexSet& u, int r,
                            const AdjusterSearchSettings& settings) {
  if (r < 1) throw DomainError("chain_adjusters: r must be >= 1");
  ChainResult result;
  auto first = find_adjuster_avoiding(g, u, settings);
  if (!first) {
    result.failure = "no simple adjuster found";
    return result;
  }
  Adjuster current = *first;
  result.achieved_capacity = 1;

  while (current.capacity < r) {
    VertexSet used = set_union_of(u, current.all());
    auto fresh = find_adjuster_avoiding(g, used, settings);
    if (!fresh) {
      result.failure = "no fresh adjuster at capacity " + std::to_string(current.capacity + 1);
      result.partial = current;
      return result;
    }

    // connect one end of the current gadget to one end of the fresh one
    VertexSet from = set_union_of(current.f1.members, current.f2.members);
    VertexSet to = set_union_of(fresh->f1.members, fresh->f2.members);
    VertexSet w = set_union_of(set_union_of(u, current.core), fresh->core);
    auto link = connect_avoiding(g, from, to, set_difference_of(w, set_union_of(from, to)));
    if (!link) {
      result.failure = "ends of consecutive adjusters cannot be linked";
      result.partial = current;
      return result;
    }
    int from_end = link->front();
    int to_end = link->back();
    if (!set_contains(from, from_end)) std::swap(from_end, to_end);
    bool use_cur_f1 = set_contains(current.f1.members, from_end);
    bool use_fresh_f1 = set_contains(fresh->f1.members, to_end);
    const VertexExpansion& cur_used = use_cur_f1 ? current.f1 : current.f2;
    const VertexExpansion& cur_kept = use_cur_f1 ? current.f2 : current.f1;
    const VertexExpansion& fresh_used = use_fresh_f1 ? fresh->f1 : fresh->f2;
    const VertexExpansion& fresh_kept = use_fresh_f1 ? fresh->f2 : fresh->f1;

    auto head = path_within(g, cur_used.members, cur_used.center, from_end);
    auto tail = path_within(g, fresh_used.members, to_end, fresh_used.center);
    if (head.empty() || tail.empty()) {
      result.failure = "link extension inside an end failed";
      result.partial = current;
      return result;
    }
    std::vector<int> bridge = head;
    const auto& lv = link->vertices;
    if (lv.front() == from_end) {
      bridge.insert(bridge.end(), lv.begin() + 1, lv.end());
    } else {
      bridge.insert(bridge.end(), lv.rbegin() + 1, lv.rend());
    }
    bridge.insert(bridge.end(), tail.begin() + 1, tail.end());
    Path bridge_path{bridge};
    if (!validate_path(g, bridge_path)) {
      result.failure = "bridge path failed validation";
      result.partial = current;
      return result;
    }

    Adjuster merged;
    merged.f1 = cur_kept;
    merged.f2 = fresh_kept;
    merged.declared_d = std::min(current.declared_d, fresh->declared_d);
    merged.declared_m = std::max(current.declared_m, fresh->declared_m);
    merged.capacity = current.capacity + 1;
    VertexSet core = set_union_of(current.core, fresh->core);
    core = set_union_of(core, as_vertex_set(bridge));
    merged.core = set_difference_of(
        core, as_vertex_set({merged.v1(), merged.v2()}));
    merged.base_length = current.base_length + fresh->base_length + bridge_path.length();

    auto report = validate_adjuster(g, merged, settings.core);
    if (report.a4_ladder && report.exhaustive && !report.base_minimal) {
      merged.base_length = report.verified_base;
      report = validate_adjuster(g, merged, settings.core);
    }
    if (!report.ok()) {
      result.failure = "merged adjuster failed validation: " +
                       (report.failures.empty() ? std::string("unknown") : report.failures[0]);
      result.partial = current;
      return result;
    }
    current = std::move(merged);
    result.achieved_capacity = current.capacity;
  }
  result.adjuster = current;
  return result;
}

}  // namespace cyclelab
