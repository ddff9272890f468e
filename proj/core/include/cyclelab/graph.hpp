#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cyclelab {

/// Violated precondition or malformed input (maps to CLI exit code 2).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Instance exceeds an exhaustive-method cap (maps to CLI exit code 3).
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Vertex sets are sorted vectors of distinct dense ids.
using VertexSet = std::vector<int>;

/// Exact rational with int64 numerator/denominator, always normalized.
/// Degree thresholds like d(H) >= d(G)/2 must never go through doubles.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

 private:
  std::int64_t num_;
  std::int64_t den_;  // > 0
};

/// Immutable simple undirected graph over dense ids 0..n-1.
///
/// Two adjacency views are kept: sorted neighbor lists for iteration and
/// per-vertex bitmask rows for O(1) membership and word-parallel set ops.
/// External labels survive relabeling (induced subgraphs, unions) so
/// witnesses can always be reported against the caller's vertex names.
class Graph {
 public:
  Graph() = default;

  /// Build from raw pairs over arbitrary non-negative labels. Duplicate
  /// edges collapse; a loop raises DomainError naming the pair.
  static Graph from_edges(std::span<const std::pair<int, int>> edges);

  /// Build with an explicit vertex count (ids 0..n-1, labels identical);
  /// allows isolated vertices.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  static Graph from_edges(std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  /// As above but keeps the given external labels (size n).
  static Graph from_edges_labeled(std::vector<int> labels,
                                  std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return n_ == 0; }

  const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }
  bool has_edge(int u, int v) const;

  int label(int v) const { return labels_[check(v)]; }
  const std::vector<int>& labels() const { return labels_; }
  /// Dense id for an external label; DomainError if absent.
  int id_of_label(int label) const;

  /// Bitmask adjacency row, ceil(n/64) words per vertex.
  std::span<const std::uint64_t> row(int v) const {
    check(v);
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  int words() const { return words_; }

  std::vector<std::pair<int, int>> edges() const;

 private:
  int check(int v) const {
    if (v < 0 || v >= n_) throw DomainError("vertex id out of range: " + std::to_string(v));
    return v;
  }

  int n_ = 0;
  std::size_t edge_count_ = 0;
  int words_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<int> labels_;
  std::vector<std::uint64_t> bits_;
};

/// Path as an ordered vertex sequence; length = edge count. A single
/// vertex is a valid path of length 0.
struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
};

/// Cycle stored open: vertices.front() -- ... -- vertices.back() -- front().
struct Cycle {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
};

/// Per-vertex side labels in {0,1}, valid per connected component.
struct BipartitionLabel {
  std::vector<std::int8_t> side;
};

struct DegreeSummary {
  int min = 0;
  Rational avg;
  int max = 0;
};

DegreeSummary degrees(const Graph& g);

/// B^r_G(W): all vertices within distance r of W. ball(g, W, 0) == W.
VertexSet ball(const Graph& g, const VertexSet& w, int r);

/// N^r_G(W): exactly-distance-r sphere; N^0 = W.
VertexSet sphere(const Graph& g, const VertexSet& w, int r);

/// External neighborhood N_G(W).
VertexSet neighborhood(const Graph& g, const VertexSet& w);

std::optional<int> distance(const Graph& g, int u, int v);

/// G[S]: induced subgraph, ids remapped dense, labels carried over.
Graph induced(const Graph& g, const VertexSet& s);

/// G - S.
Graph minus(const Graph& g, const VertexSet& s);

/// Union by external labels: V(G) u V(H), E(G) u E(H).
Graph union_graphs(const Graph& g, const Graph& h);

/// G \ H: vertex set V(G), edge set E(G) \ E(H), matched by labels.
Graph minus_edges(const Graph& g, const Graph& h);

/// Two-coloring per component, or an odd cycle witnessing non-bipartiteness.
std::variant<BipartitionLabel, Cycle> bipartition(const Graph& g);

/// pi(u,v,H) for connected bipartite H: 0 iff u==v, 1 iff opposite
/// classes, 2 iff same class and distinct. Every u,v-path length is
/// congruent to pi(u,v,H) mod 2.
int parity_pi(const Graph& h, int u, int v);

/// pi(a1,a3)+pi(a2,a3)-pi(a1,a2) for distinct vertices; always 0 or 2.
int parity_triple(const Graph& h, int a1, int a2, int a3);

/// True when `h` is connected and 2-colorable (n == 0 counts as connected).
bool is_connected_bipartite(const Graph& h);

bool is_connected(const Graph& g);

/// Multi-source BFS distances in g minus `avoid` (size n, nonzero = removed).
/// Sources inside `avoid` are ignored. -1 marks unreachable.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources,
                               const std::vector<char>& avoid);

bool validate_path(const Graph& g, const Path& p);
bool validate_cycle(const Graph& g, const Cycle& c);

// -- sorted-vector set helpers used across the toolkit --
VertexSet set_union_of(const VertexSet& a, const VertexSet& b);
VertexSet set_difference_of(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection_of(const VertexSet& a, const VertexSet& b);
bool sets_disjoint(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, int v);
/// Normalizes arbitrary int lists into a VertexSet (sort + unique).
VertexSet as_vertex_set(std::vector<int> v);
std::vector<char> mask_of(const Graph& g, const VertexSet& s);

}  // namespace cyclelab
