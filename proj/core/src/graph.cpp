#include "cyclelab/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace cyclelab {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a < 0 ? -a : a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = gcd64(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}
bool operator<(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}

Graph Graph::from_edges(std::span<const std::pair<int, int>> edges) {
  std::vector<int> labels;
  labels.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0) throw DomainError("negative vertex label");
    labels.push_back(u);
    labels.push_back(v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return from_edges_labeled(std::move(labels), edges);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw DomainError("negative vertex count");
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return from_edges_labeled(std::move(labels), edges);
}

Graph Graph::from_edges_labeled(std::vector<int> labels,
                                std::span<const std::pair<int, int>> edges) {
  Graph g;
  g.n_ = static_cast<int>(labels.size());
  g.labels_ = std::move(labels);
  std::map<int, int> id;
  for (int i = 0; i < g.n_; ++i) {
    if (!id.emplace(g.labels_[i], i).second) throw DomainError("duplicate vertex label");
  }

  g.adj_.assign(g.n_, {});
  for (const auto& [a, b] : edges) {
    if (a == b) {
      throw DomainError("loop rejected at vertex (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
    }
    auto ia = id.find(a);
    auto ib = id.find(b);
    if (ia == id.end() || ib == id.end()) throw DomainError("edge endpoint outside vertex set");
    g.adj_[ia->second].push_back(ib->second);
    g.adj_[ib->second].push_back(ia->second);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  g.edge_count_ = 0;
  for (const auto& nb : g.adj_) g.edge_count_ += nb.size();
  g.edge_count_ /= 2;

  g.words_ = g.n_ == 0 ? 0 : (g.n_ + 63) / 64;
  g.bits_.assign(static_cast<std::size_t>(g.n_) * g.words_, 0);
  for (int v = 0; v < g.n_; ++v) {
    for (int w : g.adj_[v]) {
      g.bits_[static_cast<std::size_t>(v) * g.words_ + w / 64] |= std::uint64_t{1} << (w % 64);
    }
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  check(u);
  check(v);
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::id_of_label(int label) const {
  for (int i = 0; i < n_; ++i) {
    if (labels_[i] == label) return i;
  }
  throw DomainError("unknown vertex label " + std::to_string(label));
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int v = 0; v < n_; ++v) {
    for (int w : adj_[v]) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

DegreeSummary degrees(const Graph& g) {
  DegreeSummary s;
  if (g.order() == 0) return s;
  s.min = g.degree(0);
  s.max = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    s.min = std::min(s.min, g.degree(v));
    s.max = std::max(s.max, g.degree(v));
  }
  s.avg = Rational(2 * static_cast<std::int64_t>(g.edge_count()), g.order());
  return s;
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources,
                               const std::vector<char>& avoid) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue;
  for (int s : sources) {
    if (s < 0 || s >= g.order()) throw DomainError("BFS source out of range");
    if (!avoid.empty() && avoid[s]) continue;
    if (dist[s] == -1) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] != -1) continue;
      if (!avoid.empty() && avoid[w]) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

VertexSet ball(const Graph& g, const VertexSet& w, int r) {
  if (r < 0) throw DomainError("negative ball radius");
  for (int v : w) {
    if (v < 0 || v >= g.order()) throw DomainError("ball seed outside V(G)");
  }
  auto dist = bfs_distances(g, w, {});
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (dist[v] != -1 && dist[v] <= r) out.push_back(v);
  }
  return out;
}

VertexSet sphere(const Graph& g, const VertexSet& w, int r) {
  if (r < 0) throw DomainError("negative sphere radius");
  for (int v : w) {
    if (v < 0 || v >= g.order()) throw DomainError("sphere seed outside V(G)");
  }
  auto dist = bfs_distances(g, w, {});
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (dist[v] == r) out.push_back(v);
  }
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& w) {
  return sphere(g, w, 1);
}

std::optional<int> distance(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) {
    throw DomainError("distance endpoint out of range");
  }
  auto dist = bfs_distances(g, {u}, {});
  if (dist[v] == -1) return std::nullopt;
  return dist[v];
}

Graph induced(const Graph& g, const VertexSet& s) {
  std::vector<int> keep = s;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> pos(g.order(), -1);
  std::vector<int> labels;
  labels.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= g.order()) throw DomainError("induced set outside V(G)");
    pos[v] = static_cast<int>(i);
    labels.push_back(g.label(v));
  }
  std::vector<std::pair<int, int>> edges;
  for (int v : keep) {
    for (int w : g.neighbors(v)) {
      if (v < w && pos[w] != -1) edges.emplace_back(g.label(v), g.label(w));
    }
  }
  return Graph::from_edges_labeled(std::move(labels), edges);
}

Graph minus(const Graph& g, const VertexSet& s) {
  std::vector<char> drop(g.order(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.order()) throw DomainError("removal set outside V(G)");
    drop[v] = 1;
  }
  VertexSet keep;
  for (int v = 0; v < g.order(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced(g, keep);
}

Graph union_graphs(const Graph& g, const Graph& h) {
  std::vector<int> labels = g.labels();
  labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(g.label(u), g.label(v));
  for (auto [u, v] : h.edges()) edges.emplace_back(h.label(u), h.label(v));
  return Graph::from_edges_labeled(std::move(labels), edges);
}

Graph minus_edges(const Graph& g, const Graph& h) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int lu = g.label(u);
    int lv = g.label(v);
    bool in_h = false;
    bool have_u = std::find(h.labels().begin(), h.labels().end(), lu) != h.labels().end();
    bool have_v = std::find(h.labels().begin(), h.labels().end(), lv) != h.labels().end();
    if (have_u && have_v) in_h = h.has_edge(h.id_of_label(lu), h.id_of_label(lv));
    if (!in_h) edges.emplace_back(lu, lv);
  }
  return Graph::from_edges_labeled(g.labels(), edges);
}

std::variant<BipartitionLabel, Cycle> bipartition(const Graph& g) {
  BipartitionLabel out;
  out.side.assign(g.order(), -1);
  std::vector<int> parent(g.order(), -1);
  std::vector<int> depth(g.order(), 0);
  for (int root = 0; root < g.order(); ++root) {
    if (out.side[root] != -1) continue;
    out.side[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (out.side[w] == -1) {
          out.side[w] = static_cast<std::int8_t>(1 - out.side[u]);
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (out.side[w] == out.side[u]) {
          // Odd cycle: join u and w to their lowest common BFS ancestor.
          std::vector<int> up_u{u};
          std::vector<int> up_w{w};
          int a = u;
          int b = w;
          while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
          while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
          while (a != b) {
            up_u.push_back(a = parent[a]);
            up_w.push_back(b = parent[b]);
          }
          Cycle cycle;
          cycle.vertices.assign(up_u.begin(), up_u.end());  // u .. lca
          for (auto it = up_w.rbegin(); it != up_w.rend(); ++it) {
            if (*it != a) cycle.vertices.push_back(*it);  // below lca .. w
          }
          return cycle;
        }
      }
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, {0}, {});
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == -1; });
}

bool is_connected_bipartite(const Graph& h) {
  return is_connected(h) && std::holds_alternative<BipartitionLabel>(bipartition(h));
}

int parity_pi(const Graph& h, int u, int v) {
  if (u < 0 || u >= h.order() || v < 0 || v >= h.order()) {
    throw DomainError("parity endpoint out of range");
  }
  if (!is_connected(h)) throw DomainError("parity is defined on connected graphs only");
  auto bip = bipartition(h);
  if (!std::holds_alternative<BipartitionLabel>(bip)) {
    throw DomainError("parity is defined on bipartite graphs only");
  }
  if (u == v) return 0;
  const auto& side = std::get<BipartitionLabel>(bip).side;
  return side[u] == side[v] ? 2 : 1;
}

int parity_triple(const Graph& h, int a1, int a2, int a3) {
  if (a1 == a2 || a1 == a3 || a2 == a3) {
    throw DomainError("parity_triple requires distinct vertices");
  }
  return parity_pi(h, a1, a3) + parity_pi(h, a2, a3) - parity_pi(h, a1, a2);
}

bool validate_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  for (int v : p.vertices) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    if (!g.has_edge(p.vertices[i], p.vertices[i + 1])) return false;
  }
  return true;
}

bool validate_cycle(const Graph& g, const Cycle& c) {
  if (c.vertices.size() < 3) return false;
  Path as_path{c.vertices};
  return validate_path(g, as_path) && g.has_edge(c.vertices.back(), c.vertices.front());
}

VertexSet set_union_of(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference_of(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection_of(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return false;
    if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return true;
}

bool set_contains(const VertexSet& a, int v) {
  return std::binary_search(a.begin(), a.end(), v);
}

VertexSet as_vertex_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<char> mask_of(const Graph& g, const VertexSet& s) {
  std::vector<char> mask(g.order(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.order()) throw DomainError("mask vertex out of range");
    mask[v] = 1;
  }
  return mask;
}

}  // namespace cyclelab
