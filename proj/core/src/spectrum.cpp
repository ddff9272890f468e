#include "cyclelab/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "cyclelab/families.hpp"

namespace cyclelab {

bool CycleSpectrum::contains(int len) const {
  return std::binary_search(lengths.begin(), lengths.end(), len);
}

CycleSpectrum cycle_spectrum_exact(const Graph& g, int dp_cap, bool keep_witnesses) {
  int n = g.order();
  // the endpoint table is 4 * 2^n bytes; 26 is already a gigabyte
  if (n > dp_cap || n > 26) {
    throw CapacityError("cycle_spectrum_exact capped at n <= " +
                        std::to_string(std::min(dp_cap, 26)) +
                        "; use cycle_spectrum_lower for larger graphs");
  }
  CycleSpectrum out;
  out.n = n;
  out.exact = true;
  out.method = "subset-dp";
  if (n < 3) return out;

  std::vector<std::uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) adj[v] |= std::uint32_t{1} << w;
  }

  // dp[mask] = endpoints u of simple paths that start at the least vertex
  // of mask and span exactly mask
  std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
  std::map<int, std::pair<std::uint32_t, int>> witness_state;  // length -> (mask, endpoint)
  for (int v = 0; v < n; ++v) dp[std::uint32_t{1} << v] = std::uint32_t{1} << v;

  std::uint32_t full = (n == 32) ? 0xffffffffu : ((std::uint32_t{1} << n) - 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = dp[mask];
    if (!ends) continue;
    int anchor = std::countr_zero(mask);
    int pc = std::popcount(mask);
    if (pc >= 3) {
      std::uint32_t closing = ends & adj[anchor] & ~(std::uint32_t{1} << anchor);
      if (closing) {
        if (!witness_state.count(pc)) {
          witness_state[pc] = {mask, std::countr_zero(closing)};
        }
      }
    }
    std::uint32_t rest = ends;
    while (rest) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint32_t nxt = adj[u] & ~mask;
      nxt &= ~((std::uint32_t{1} << anchor) - 1);  // keep the anchor minimal
      while (nxt) {
        int w = std::countr_zero(nxt);
        nxt &= nxt - 1;
        dp[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }

  for (const auto& [len, state] : witness_state) {
    out.lengths.push_back(len);
    if (!keep_witnesses) continue;
    auto [mask, endpoint] = state;
    // walk the path backwards through shrinking masks
    std::vector<int> rev{endpoint};
    int cur = endpoint;
    std::uint32_t m = mask;
    while (std::popcount(m) > 1) {
      std::uint32_t prev = m & ~(std::uint32_t{1} << cur);
      std::uint32_t cands = dp[prev] & adj[cur];
      int u = std::countr_zero(cands);
      rev.push_back(u);
      m = prev;
      cur = u;
    }
    std::reverse(rev.begin(), rev.end());
    Cycle c{rev};
    out.witnesses[len] = std::move(c);
  }
  return out;
}

namespace {

void record_cycle(CycleSpectrum& out, const Graph& g, std::vector<int> cyc) {
  Cycle c{std::move(cyc)};
  if (!validate_cycle(g, c)) return;
  int len = c.length();
  if (!out.contains(len)) {
    out.lengths.insert(std::lower_bound(out.lengths.begin(), out.lengths.end(), len), len);
    out.witnesses.emplace(len, std::move(c));
  }
}

// one randomized DFS pass; every back edge certifies a cycle length
void dfs_cycle_sample(const Graph& g, Rng& rng, CycleSpectrum& out) {
  int n = g.order();
  std::vector<int> depth(n, -1);
  std::vector<int> stack_pos(n, -1);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> frames;  // (vertex, next neighbor index)
  std::vector<std::vector<int>> order(n);

  int root = rng.uniform_int(0, n - 1);
  frames.emplace_back(root, 0);
  depth[root] = 0;
  stack_pos[root] = 0;
  stack.push_back(root);
  order[root] = g.neighbors(root);
  rng.shuffle(order[root]);

  while (!frames.empty()) {
    auto& [u, idx] = frames.back();
    if (idx >= order[u].size()) {
      stack_pos[u] = -1;
      stack.pop_back();
      frames.pop_back();
      continue;
    }
    int v = order[u][idx++];
    if (depth[v] == -1) {
      depth[v] = depth[u] + 1;
      stack_pos[v] = static_cast<int>(stack.size());
      stack.push_back(v);
      order[v] = g.neighbors(v);
      rng.shuffle(order[v]);
      frames.emplace_back(v, 0);
    } else if (stack_pos[v] != -1 && depth[u] - depth[v] + 1 >= 3) {
      record_cycle(out, g,
                   std::vector<int>(stack.begin() + stack_pos[v], stack.end()));
    }
  }
}

// colorful-cycle detection for one target length; detection only
bool color_coding_round(const Graph& g, int target, Rng& rng, CycleSpectrum& out) {
  int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = rng.uniform_int(0, target - 1);

  // anchors limited to color 0 keeps each round near 2^L * m / L work
  for (int s = 0; s < n; ++s) {
    if (color[s] != 0) continue;
    std::uint32_t cfull = (std::uint32_t{1} << target) - 1;
    std::vector<std::vector<std::uint32_t>> reach(
        std::size_t{1} << target, std::vector<std::uint32_t>((n + 31) / 32, 0));
    auto set_bit = [&](std::vector<std::uint32_t>& row, int v) {
      row[v / 32] |= std::uint32_t{1} << (v % 32);
    };
    auto get_bit = [&](const std::vector<std::uint32_t>& row, int v) {
      return (row[v / 32] >> (v % 32)) & 1u;
    };
    set_bit(reach[1u << 0], s);
    for (std::uint32_t mask = 1; mask <= cfull; ++mask) {
      if (!(mask & 1)) continue;  // anchor color always used
      for (int v = 0; v < n; ++v) {
        if (!get_bit(reach[mask], v)) continue;
        for (int w : g.neighbors(v)) {
          std::uint32_t cw = std::uint32_t{1} << color[w];
          if (mask & cw) continue;
          set_bit(reach[mask | cw], w);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (v != s && get_bit(reach[cfull], v) && g.has_edge(v, s)) {
        // reconstruct the colorful path s -> v, then close the cycle
        std::vector<int> rev{v};
        std::uint32_t mask = cfull;
        int cur = v;
        bool good = true;
        while (cur != s) {
          std::uint32_t prev = mask & ~(std::uint32_t{1} << color[cur]);
          int parent = -1;
          for (int w : g.neighbors(cur)) {
            if (get_bit(reach[prev], w)) {
              parent = w;
              break;
            }
          }
          if (parent == -1) {
            good = false;
            break;
          }
          rev.push_back(parent);
          mask = prev;
          cur = parent;
        }
        if (!good) continue;
        std::reverse(rev.begin(), rev.end());
        record_cycle(out, g, rev);
        if (out.contains(target)) return true;
      }
    }
  }
  return out.contains(target);
}

}  // namespace

CycleSpectrum cycle_spectrum_lower(const Graph& g, std::uint64_t budget, std::uint64_t seed,
                                   int cc_cap) {
  CycleSpectrum out;
  out.n = g.order();
  out.exact = false;
  out.method = "sampled-dfs+color-coding";
  out.budget = budget;
  if (g.order() < 3 || g.edge_count() < 3) return out;

  Rng rng(seed);
  std::uint64_t dfs_rounds = std::max<std::uint64_t>(8, budget);
  for (std::uint64_t i = 0; i < dfs_rounds; ++i) dfs_cycle_sample(g, rng, out);

  // color-coded sweep for each small target length not yet witnessed;
  // repetitions aim for 99% per-length confidence within a work cap
  double work_cap = 2e7 + static_cast<double>(budget) * 1e4;
  for (int target = 3; target <= std::min({cc_cap, g.order()}); ++target) {
    if (out.contains(target)) continue;
    double logp = std::lgamma(target + 1) - target * std::log(target);
    double p = std::exp(logp);  // probability one fixed cycle is colorful
    double per_round = std::pow(2.0, target) * static_cast<double>(g.edge_count());
    std::uint64_t want = static_cast<std::uint64_t>(std::ceil(std::log(100.0) / p));
    std::uint64_t affordable =
        static_cast<std::uint64_t>(std::max(1.0, work_cap / std::max(1.0, per_round)));
    std::uint64_t rounds = std::min(want, affordable);
    for (std::uint64_t i = 0; i < rounds; ++i) {
      if (color_coding_round(g, target, rng, out)) break;
    }
  }
  return out;
}

std::vector<int> residue_spectrum(const CycleSpectrum& s, int a, int b) {
  if (b < 1) throw DomainError("residue_spectrum: modulus must be >= 1");
  int residue = ((a % b) + b) % b;
  std::vector<int> out;
  for (int len : s.lengths) {
    if (len % b == residue) out.push_back(len);
  }
  return out;
}

double harmonic_sum(const std::vector<int>& lengths) {
  double sum = 0.0;
  double compensation = 0.0;
  for (int len : lengths) {
    if (len < 3) throw DomainError("harmonic_sum: cycle lengths must be >= 3");
    double term = 1.0 / static_cast<double>(len);
    double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

EvenIntervalReport even_interval_report(const CycleSpectrum& s,
                                        std::optional<double> avg_degree) {
  EvenIntervalReport report;
  report.one_sided = !s.exact;
  if (avg_degree && *avg_degree > 1.0) {
    double d = *avg_degree;
    double lg = std::log(d);
    report.degree_guarantee = d / (10.0 * std::pow(lg, 12.0));
    report.degree_guarantee_vacuous = *report.degree_guarantee < 4.0;
  }
  if (s.lengths.empty()) return report;
  int top = s.lengths.back();
  for (int ell = 4; ell <= top; ell += 2) {
    double lower_raw = std::pow(std::log(static_cast<double>(ell)), 8.0);
    bool degenerate = lower_raw > ell;
    int lower = degenerate ? 4 : std::max(4, 2 * static_cast<int>(std::ceil(lower_raw / 2.0)));
    bool all_present = true;
    for (int t = lower; t <= ell; t += 2) {
      if (!s.contains(t)) {
        all_present = false;
        break;
      }
    }
    if (all_present) {
      report.best_ell = ell;
      report.holds = true;
      report.degenerate_regime = degenerate;
    }
  }
  for (int t = 4; t <= top; t += 2) {
    if (!s.contains(t)) report.missing.push_back(t);
  }
  return report;
}

OddIntervalReport odd_interval_report(const CycleSpectrum& s) {
  OddIntervalReport report;
  report.one_sided = !s.exact;
  std::vector<int> odds;
  for (int len : s.lengths) {
    if (len % 2 == 1) odds.push_back(len);
  }
  if (odds.empty()) return report;
  report.empty = false;
  report.ell = odds[0];
  report.ratio = 1.0;
  for (std::size_t i = 0; i < odds.size(); ++i) {
    int start = odds[i];
    int end = start;
    std::size_t j = i;
    while (j + 1 < odds.size() && odds[j + 1] == end + 2) {
      end = odds[++j];
    }
    double ratio = static_cast<double>(end) / start;
    if (ratio > report.ratio) {
      report.ratio = ratio;
      report.ell = start;
    }
  }
  return report;
}

std::vector<long long> SequenceSpec::enumerate(long long up_to) const {
  if (kind == Kind::explicit_list) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      if (values[i] >= values[i + 1]) {
        throw DomainError("sequence is not strictly increasing");
      }
    }
  }
  std::vector<long long> out;
  switch (kind) {
    case Kind::powers_of_two:
      for (long long v = 1; v <= up_to && v > 0; v *= 2) out.push_back(v);
      break;
    case Kind::arithmetic: {
      if (step <= 0) throw DomainError("arithmetic sequence needs positive difference");
      for (long long v = first; v <= up_to; v += step) out.push_back(v);
      break;
    }
    case Kind::explicit_list:
      for (long long v : values) {
        if (v <= up_to) out.push_back(v);
      }
      break;
    case Kind::geometric: {
      if (growth <= 1.0) throw DomainError("geometric sequence needs growth > 1");
      double v = static_cast<double>(first);
      while (v <= static_cast<double>(up_to) && out.size() < 100000) {
        auto iv = static_cast<long long>(v);
        if (out.empty() || iv > out.back()) out.push_back(iv);
        v *= growth;
      }
      break;
    }
  }
  if (parity) {
    std::erase_if(out, [&](long long v) { return ((v % 2) + 2) % 2 != *parity; });
  }
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    if (out[i] >= out[i + 1]) throw DomainError("sequence is not strictly increasing");
  }
  return out;
}

SequenceSpec SequenceSpec::powers_of_two_spec() {
  return SequenceSpec{};
}
SequenceSpec SequenceSpec::arithmetic_spec(long long a, long long d) {
  SequenceSpec s;
  s.kind = Kind::arithmetic;
  s.first = a;
  s.step = d;
  return s;
}
SequenceSpec SequenceSpec::explicit_spec(std::vector<long long> v) {
  SequenceSpec s;
  s.kind = Kind::explicit_list;
  s.values = std::move(v);
  return s;
}
SequenceSpec SequenceSpec::geometric_spec(long long first, double c) {
  SequenceSpec s;
  s.kind = Kind::geometric;
  s.first = first;
  s.growth = c;
  return s;
}

SequenceHit hits_sequence(const CycleSpectrum& s, const SequenceSpec& seq) {
  SequenceHit hit;
  long long top = s.lengths.empty() ? 2 : s.lengths.back();
  auto members = seq.enumerate(std::max<long long>(top, 2));
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    double x = static_cast<double>(members[i]);
    double bound = std::exp(std::pow(x, 0.1));
    if (static_cast<double>(members[i + 1]) > bound) hit.growth.within_exp_tenth_root = false;
    hit.growth.witnessed_ratio_bound =
        std::max(hit.growth.witnessed_ratio_bound,
                 static_cast<double>(members[i + 1]) / static_cast<double>(members[i]));
  }
  for (long long v : members) {
    if (v >= 3 && v <= top && s.contains(static_cast<int>(v))) {
      hit.first_hit = v;
      break;
    }
  }
  if (!hit.first_hit) hit.exactness_caveat = !s.exact;
  return hit;
}

PropertyPReport property_p_check(const Graph& h, int ell, int upper, int cap) {
  int n = h.order();
  if (n > cap || n > 20) {
    throw CapacityError("property_p_check capped at n <= " +
                        std::to_string(std::min(cap, 20)));
  }
  if (!is_connected_bipartite(h)) {
    throw DomainError("property_p_check: host must be connected bipartite");
  }
  PropertyPReport report;
  report.holds = true;
  if (upper < ell) return report;  // vacuous

  std::vector<std::uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : h.neighbors(v)) adj[v] |= std::uint32_t{1} << w;
  }

  for (int u = 0; u < n && report.holds; ++u) {
    // all realizable path lengths from u to every v in one subset sweep
    std::vector<std::uint32_t> length_bits(n, 0);  // v -> bitset of lengths
    std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
    dp[std::uint32_t{1} << u] = std::uint32_t{1} << u;
    std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      std::uint32_t ends = dp[mask];
      if (!ends || !(mask & (std::uint32_t{1} << u))) continue;
      int len = std::popcount(mask) - 1;
      std::uint32_t rest = ends;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (len >= 1 && len < 32) length_bits[v] |= std::uint32_t{1} << len;
        std::uint32_t nxt = adj[v] & ~mask;
        while (nxt) {
          int w = std::countr_zero(nxt);
          nxt &= nxt - 1;
          dp[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
        }
      }
    }
    for (int v = 0; v < n && report.holds; ++v) {
      if (v == u) continue;
      int pi = parity_pi(h, u, v);
      for (int t = ell; t <= upper; ++t) {
        if (t % 2 != pi % 2) continue;
        ++report.pairs_checked;
        bool present = t >= 1 && t < 32 && ((length_bits[v] >> t) & 1);
        if (!present) {
          report.holds = false;
          report.counterexample = {u, v, t};
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace cyclelab
