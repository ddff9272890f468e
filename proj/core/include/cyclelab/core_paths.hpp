#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclelab/graph.hpp"

namespace cyclelab {

/// Realizable simple s,t-path lengths inside G[core]. `exhaustive` is
/// false only when the DFS fallback ran out of budget, in which case the
/// reported lengths are still all realizable (one-sided).
struct CoreLengths {
  std::vector<int> lengths;
  bool exhaustive = true;
  bool used_subset_dp = true;
};

struct CoreQuerySettings {
  int maskdp_cap = 24;                    // subset-DP up to this core size
  std::uint64_t dfs_budget = 20'000'000;  // node budget for the fallback
};

/// All simple s,t-path lengths <= max_len inside G[core]; s, t must be in
/// core. Subset-DP over (vertex set, endpoint) states when the core is
/// small, pruned DFS enumeration otherwise.
CoreLengths simple_path_lengths(const Graph& g, const VertexSet& core, int s, int t,
                                int max_len, const CoreQuerySettings& settings = {});

/// A concrete simple s,t-path of exactly the given length inside G[core],
/// when one exists within the engine's reach.
std::optional<Path> simple_path_with_length(const Graph& g, const VertexSet& core, int s,
                                            int t, int len,
                                            const CoreQuerySettings& settings = {});

}  // namespace cyclelab
