#pragma once

#include <optional>
#include <vector>

#include "cyclelab/expander.hpp"
#include "cyclelab/graph.hpp"

namespace cyclelab {

/// Per-level contact counts of the ball around A (grown in G-Z) with Z:
/// per_level[i-1] = |N_G(B^{i-1}_{G-Z}(A)) cap Z| for i = 1..depth.
struct ContactProfile {
  std::vector<int> per_level;
  /// Smallest integer k with count_i <= k*i for every level; 0 when all
  /// counts are zero.
  int minimal_k = 0;
};

ContactProfile contact_profile(const Graph& g, const VertexSet& a, const VertexSet& z,
                               int depth);

/// Caller-asserted hypotheses for annotating a growth trace against the
/// avoidant ball-growth guarantees. Purely diagnostic at desk scale.
struct GrowthHypotheses {
  ExpansionParams params;
  int contact_k = 1;
};

struct GrowthDiagnostics {
  double m = 0.0;
  double ell0 = 0.0;
  bool hyp_x_small = false;       // |X| <= |A| eps(|A|) / 4
  bool hyp_y_far_and_bounded = false;
  bool hyp_z_limited = false;
  bool concl_ball_ell0 = false;   // |B^{ell0}| > m^{400k}
  bool concl_half_n = false;      // |B^{m}| > n/2 (at the reached depth)
};

struct GrowthTrace {
  enum class Reason { reached_half_n, depth_exhausted, stalled };

  std::vector<std::size_t> levels;  // |B^i_{G-X-Y-Z}(A)| for i = 0..halted_at
  int halted_at = 0;
  Reason reason = Reason::depth_exhausted;
  std::optional<GrowthDiagnostics> diagnostics;
};

/// BFS ball growth of A in G-X-Y-Z, recorded level by level. When
/// `hypotheses` is given, the trace is annotated with whether the
/// asymptotic-regime hypotheses and conclusions held on this instance.
GrowthTrace grow_avoiding(const Graph& g, const VertexSet& a, const VertexSet& x,
                          const VertexSet& y, const VertexSet& z, int max_depth,
                          const std::optional<GrowthHypotheses>& hypotheses = std::nullopt);

/// Shortest path from A to B in G-W: one endvertex in each set, no
/// internal vertices in A u B. Among shortest paths, the lexicographically
/// smallest vertex sequence is returned. nullopt when W separates A from B.
std::optional<Path> connect_avoiding(const Graph& g, const VertexSet& a, const VertexSet& b,
                                     const VertexSet& w);

struct LowDiameterCore {
  VertexSet members;
  int center = -1;
  int radius = 0;
};

struct CoreSettings {
  int target = -1;        // default: ceil(n/25)
  int depth_budget = -1;  // default: n
  /// Refinement step length; <= 0 derives (50/eps1) log^2 n from params
  /// when given, else uses the full depth budget per refinement round.
  int step = 0;
  std::optional<ExpansionParams> params;
};

/// Connected set of >= target vertices avoiding W, all within the reported
/// radius of the returned center. Found by refining a candidate set to a
/// single center (keeping the best-covering 1/12 chunk each round), with a
/// direct center scan as fallback. nullopt when no center's ball within
/// the depth budget reaches the target.
std::optional<LowDiameterCore> low_diameter_core(const Graph& g, const VertexSet& w,
                                                 const CoreSettings& settings = {});

}  // namespace cyclelab
