#pragma once

#include <optional>
#include <vector>

#include "cyclelab/connect.hpp"
#include "cyclelab/graph.hpp"

namespace cyclelab {

/// (D,m)-expansion of `center`: a connected set of D vertices containing
/// the center, each within distance radius_bound of it in the induced
/// subgraph.
struct VertexExpansion {
  int center = -1;
  VertexSet members;  // includes center
  int radius_bound = 0;

  int size() const { return static_cast<int>(members.size()); }
};

bool validate_expansion(const Graph& g, const VertexExpansion& f);

/// Shrinks to d_new members by repeatedly deleting a vertex at maximum
/// distance from the center (ties broken toward the largest id), which
/// preserves connectivity and all remaining distances.
VertexExpansion trim_expansion(const Graph& g, const VertexExpansion& f, int d_new);

/// Shortest cycle (girth witness); nullopt for forests. Vertices in
/// `avoid` are excluded entirely.
std::optional<Cycle> shortest_cycle(const Graph& g, const VertexSet& avoid = {});

/// Distinct short cycles ordered by (length, vertex set), deduplicated;
/// used as retry material by the adjuster search.
std::vector<Cycle> shortest_cycle_candidates(const Graph& g, const VertexSet& avoid,
                                             std::size_t max_count);

int girth_or_zero(const Graph& g);

struct ExpansionRequest {
  int center;
  int size;
};

struct FindExpansionsResult {
  /// Aligned with the request order when found.
  std::optional<std::vector<VertexExpansion>> expansions;
  int blocking_center = -1;
};

/// Grows expansions of the requested sizes around the given centers,
/// pairwise disjoint outside the centers and avoiding V(C), all centers
/// and `avoid` (except each own center). Vertices are claimed exclusively
/// by round-robin BFS, larger requests first. `radius_budget` caps the
/// BFS depth. When `cycle` is given and g is small, it is validated to be
/// a genuine shortest cycle.
FindExpansionsResult find_vertex_expansions(const Graph& g, const std::optional<Cycle>& cycle,
                                            const std::vector<ExpansionRequest>& requests,
                                            int radius_budget, const VertexSet& avoid = {},
                                            int girth_validate_cap = 64);

/// Grows up to four disjoint expansions (same centers) to `target`
/// vertices each, avoiding a_avoid, via low-diameter pools joined by
/// short trunk paths. Requests already at or above target are trimmed.
std::optional<std::vector<VertexExpansion>> enlarge_expansions(
    const Graph& g, const VertexSet& a_avoid, const std::vector<VertexExpansion>& expansions,
    int target, const std::optional<ExpansionParams>& params = std::nullopt);

}  // namespace cyclelab
