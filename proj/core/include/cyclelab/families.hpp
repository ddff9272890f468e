#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclelab/graph.hpp"

namespace cyclelab {

/// Deterministic splitmix64 generator. All randomized search in the
/// toolkit draws from this so that (config, seed) replays byte-identically
/// regardless of platform or standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [lo, hi], inclusive.
  int uniform_int(int lo, int hi);
  /// Uniform in [0, 1).
  double uniform01();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[i], v[uniform_int(0, i)]);
    }
  }

  /// Child generator for worker/cell `index`, decorrelated from the parent.
  Rng fork(std::uint64_t index) const;

 private:
  std::uint64_t state_;
};

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph grid_graph(int rows, int cols);
Graph hypercube_graph(int dim);
Graph petersen_graph();
Graph random_gnp(int n, double p, std::uint64_t seed);
Graph random_regular(int n, int d, std::uint64_t seed);
/// Random graph thinned until girth >= min_girth (short cycles broken
/// edge by edge). A stand-in for high-girth constructions at desk scale.
Graph erdos_girth_stub(int n, int min_girth, std::uint64_t seed);

/// Family dispatcher for CLI use. Known names: complete, complete_bipartite,
/// cycle, path, grid, hypercube, petersen, random_gnp, random_regular,
/// erdos_girth_stub. Numeric parameters are family specific.
Graph make_family(const std::string& name, const std::vector<double>& params,
                  std::uint64_t seed);

}  // namespace cyclelab
