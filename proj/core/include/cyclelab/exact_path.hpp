#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclelab/adjuster.hpp"
#include "cyclelab/expansion.hpp"
#include "cyclelab/graph.hpp"

namespace cyclelab {

struct WindowSettings {
  /// Detour pool size for each lengthening step; 0 derives a small value.
  int core_target = 0;
  std::optional<ExpansionParams> params;
};

/// v1,v2-path (the expansions' centers) avoiding W with length in
/// [ell, ell+slack]. Iterative lengthening: extend the current partial
/// path by a detour through an unused low-diameter pool until the window
/// is reachable, then close the two sides with a short connection.
std::optional<Path> path_in_window(const Graph& g, const VertexSet& w,
                                   const VertexExpansion& f1, const VertexExpansion& f2,
                                   int ell, int slack, const WindowSettings& settings = {});

struct TwoPaths {
  Path p;  // short side
  Path q;  // length-absorbing side
};

/// Vertex-disjoint paths P, Q, each joining {v1,v2} to {v3,v4} (the four
/// expansions' centers), with ell <= l(P)+l(Q) <= ell+slack, all avoiding
/// a_avoid. P is routed short, Q absorbs the remaining length.
std::optional<TwoPaths> two_paths_in_window(const Graph& g, const VertexSet& a_avoid,
                                            const std::vector<VertexExpansion>& ends,
                                            int ell, int slack,
                                            const WindowSettings& settings = {});

struct ExactPathSettings {
  AdjusterSearchSettings adjuster;
  WindowSettings window;
  /// Adjuster capacities attempted, in order.
  std::vector<int> capacity_schedule = {6, 8, 4, 10, 2};
  /// Short targets sit below any adjuster's reach (the gadget route needs
  /// ell >= base + 2); such lengths fall back to a bounded direct search.
  int fallback_length_cap = 16;
  std::uint64_t fallback_budget = 2'000'000;
};

/// Simple v1,v2-path of exactly length ell in G-U, built from a chained
/// adjuster plus two window paths spliced at the matching ladder rung.
/// Requires a connected bipartite host; DomainError when ell has the
/// wrong parity for the endpoints. nullopt when the construction stalls
/// (the method is incomplete at desk scale).
std::optional<Path> exact_length_path(const Graph& g, const VertexSet& u,
                                      const VertexExpansion& f1, const VertexExpansion& f2,
                                      int ell, const ExactPathSettings& settings = {});

enum class OracleStatus { found, not_found_proved, unknown };

struct OracleResult {
  OracleStatus status = OracleStatus::unknown;
  std::optional<Path> path;
  std::uint64_t nodes_visited = 0;
};

/// Pruned backtracking search for an x,y-path of exact length ell in
/// G-avoid: remaining-length and reachability pruning, plus parity
/// pruning on bipartite hosts. Exact whenever the budget suffices;
/// budget exhaustion returns `unknown`, never a false absence.
OracleResult exact_length_path_oracle(const Graph& g, int x, int y, int ell,
                                      const VertexSet& avoid = {},
                                      std::uint64_t budget = 50'000'000);

}  // namespace cyclelab
