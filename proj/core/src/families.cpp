#include "cyclelab/families.hpp"

#include <algorithm>
#include <cmath>

namespace cyclelab {

std::uint64_t Rng::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw DomainError("uniform_int with empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  // rejection sampling keeps the draw unbiased
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Rng Rng::fork(std::uint64_t index) const {
  Rng child(state_ ^ (0x5851f42d4c957f2dULL * (index + 1)));
  child.next_u64();
  return child;
}

Graph complete_graph(int n) {
  if (n < 0) throw DomainError("complete_graph: negative n");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw DomainError("complete_bipartite: negative side size");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph::from_edges(a + b, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle_graph needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw DomainError("path_graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw DomainError("grid_graph needs positive dimensions");
  std::vector<std::pair<int, int>> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph hypercube_graph(int dim) {
  if (dim < 0 || dim > 20) throw DomainError("hypercube dimension out of range");
  int n = 1 << dim;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < dim; ++b) {
      int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);        // outer 5-cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);              // spokes
  }
  return Graph::from_edges(10, edges);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw DomainError("random_gnp: negative n");
  if (p < 0.0 || p > 1.0) throw DomainError("random_gnp: p outside [0,1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform01() < p) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_regular(int n, int d, std::uint64_t seed) {
  if (n <= 0 || d < 0 || d >= n) throw DomainError("random_regular: bad (n,d)");
  if ((static_cast<long long>(n) * d) % 2 != 0) {
    throw DomainError("random_regular: n*d must be even");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v) {
      for (int i = 0; i < d; ++i) stubs.push_back(v);
    }
    rng.shuffle(stubs);
    std::vector<std::pair<int, int>> edges;
    bool simple = true;
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i];
      int v = stubs[i + 1];
      if (u == v || seen[u][v]) {
        simple = false;
        break;
      }
      seen[u][v] = seen[v][u] = 1;
      edges.emplace_back(u, v);
    }
    if (simple) return Graph::from_edges(n, edges);
  }
  throw DomainError("random_regular: pairing model failed to produce a simple graph");
}

Graph erdos_girth_stub(int n, int min_girth, std::uint64_t seed) {
  if (n < 3 || min_girth < 3) throw DomainError("erdos_girth_stub: need n >= 3, girth >= 3");
  Rng rng(seed);
  double p = std::min(1.0, 2.5 / std::max(1, n - 1));
  Graph g = random_gnp(n, p, rng.next_u64());
  // break every short cycle by deleting one of its edges
  for (int rounds = 0; rounds < n * n; ++rounds) {
    std::vector<int> cyc;
    // BFS from each vertex, stop at first cycle shorter than min_girth
    bool found = false;
    for (int root = 0; root < g.order() && !found; ++root) {
      auto dist = bfs_distances(g, {root}, {});
      std::vector<int> parent(g.order(), -1);
      // reconstruct parents by one more sweep
      for (int v = 0; v < g.order(); ++v) {
        if (dist[v] <= 0) continue;
        for (int w : g.neighbors(v)) {
          if (dist[w] == dist[v] - 1) {
            parent[v] = w;
            break;
          }
        }
      }
      for (int v = 0; v < g.order() && !found; ++v) {
        if (dist[v] == -1) continue;
        for (int w : g.neighbors(v)) {
          if (w <= v || dist[w] == -1 || parent[v] == w || parent[w] == v) continue;
          int len = dist[v] + dist[w] + 1;
          if (len < min_girth) {
            cyc = {v, w};
            found = true;
            break;
          }
        }
      }
    }
    if (!found) break;
    auto edges = g.edges();
    std::erase_if(edges, [&](const std::pair<int, int>& e) {
      return (e.first == cyc[0] && e.second == cyc[1]) || (e.first == cyc[1] && e.second == cyc[0]);
    });
    g = Graph::from_edges(g.order(), edges);
  }
  return g;
}

Graph make_family(const std::string& name, const std::vector<double>& params,
                  std::uint64_t seed) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw DomainError("family '" + name + "' expects " + std::to_string(k) + " parameter(s)");
    }
  };
  auto as_int = [](double x) { return static_cast<int>(std::llround(x)); };
  if (name == "complete") {
    need(1);
    return complete_graph(as_int(params[0]));
  }
  if (name == "complete_bipartite") {
    need(2);
    return complete_bipartite(as_int(params[0]), as_int(params[1]));
  }
  if (name == "cycle") {
    need(1);
    return cycle_graph(as_int(params[0]));
  }
  if (name == "path") {
    need(1);
    return path_graph(as_int(params[0]));
  }
  if (name == "grid") {
    need(2);
    return grid_graph(as_int(params[0]), as_int(params[1]));
  }
  if (name == "hypercube") {
    need(1);
    return hypercube_graph(as_int(params[0]));
  }
  if (name == "petersen") {
    need(0);
    return petersen_graph();
  }
  if (name == "random_gnp") {
    need(2);
    return random_gnp(as_int(params[0]), params[1], seed);
  }
  if (name == "random_regular") {
    need(2);
    return random_regular(as_int(params[0]), as_int(params[1]), seed);
  }
  if (name == "erdos_girth_stub") {
    need(2);
    return erdos_girth_stub(as_int(params[0]), as_int(params[1]), seed);
  }
  throw DomainError("unknown graph family: " + name);
}

}  // namespace cyclelab
