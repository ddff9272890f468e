#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclelab/exact_path.hpp"
#include "cyclelab/graph.hpp"

namespace cyclelab {

/// Balanced clique subdivision: k branch vertices and one internally
/// disjoint path of length exactly ell per branch pair.
struct BalancedSubdivision {
  int k = 0;
  int ell = 0;
  VertexSet branch_vertices;
  struct BranchPath {
    int a;
    int b;
    Path path;
  };
  std::vector<BranchPath> paths;  // one entry per unordered pair
};

struct SubdivisionReport {
  bool ok = false;
  std::vector<std::string> violations;
};

/// Rechecks every invariant edge by edge, including the bipartite parity
/// cross-check (k >= 3 in a bipartite host forces even ell).
SubdivisionReport validate_subdivision(const Graph& g, const BalancedSubdivision& s);

/// TK_d^(2) from a skewed bipartite configuration: U, W disjoint,
/// |U| >= |W|^2, every u in U with >= d neighbors in W. Greedy system of
/// distinct representatives; branch vertices in W, subdividers in U.
/// DomainError (naming the failing vertex) on precondition violations.
BalancedSubdivision find_tk2_skewed(const Graph& g, const VertexSet& u, const VertexSet& w,
                                    int d);

enum class SearchStatus { found, not_found_proved, unknown };

struct SubdivisionSearchResult {
  SearchStatus status = SearchStatus::unknown;
  std::optional<BalancedSubdivision> subdivision;
  std::uint64_t nodes = 0;
};

/// Exhaustive-within-budget backtracking for a TK_k^(ell) with ell in
/// [ell_min, ell_max], smallest ell first: choose branch vertices (degree
/// and distance pruned), route equal-length pair paths one at a time with
/// exclusive vertex claims, and backtrack across pairs.
SubdivisionSearchResult find_balanced_subdivision(const Graph& g, int k, int ell_min,
                                                  int ell_max,
                                                  std::uint64_t budget = 50'000'000);

struct ConstructSettings {
  /// Geometric reservation factor: pair t of K gets expansions of size
  /// floor(alpha^(K+1-t) * n / (4K)), later pairs smaller.
  double alpha = 1.1;
  ExactPathSettings path;
  /// Branch vertices; empty selects the k smallest ids in the larger class.
  VertexSet branch_override;
};

struct ConstructResult {
  std::optional<BalancedSubdivision> subdivision;
  /// Failing pair when construction stalls.
  std::optional<std::pair<int, int>> failed_pair;
};

/// The expander proof pipeline: k same-class branch vertices, nested
/// reserved expansions per pair, pairs connected in order by exact-length
/// paths that avoid all not-yet-used reservations and all earlier paths.
ConstructResult construct_balanced_subdivision_expander(const Graph& h, int k, int ell,
                                                        const ConstructSettings& settings = {});

}  // namespace cyclelab
