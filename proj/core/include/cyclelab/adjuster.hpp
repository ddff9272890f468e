#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclelab/core_paths.hpp"
#include "cyclelab/expansion.hpp"
#include "cyclelab/graph.hpp"

namespace cyclelab {

/// Length-adjustment gadget (v1, F1, v2, F2, A): the core A realizes
/// v1,v2-paths of every length base_length + 2i for i in 0..capacity,
/// inside G[A u {v1,v2}]. The ends F1, F2 are handles for connecting the
/// gadget into longer paths.
struct Adjuster {
  VertexExpansion f1;
  VertexExpansion f2;
  VertexSet core;
  int capacity = 1;
  int base_length = 0;
  int declared_d = 1;  // D of the ends
  int declared_m = 1;  // radius bound of the ends

  int v1() const { return f1.center; }
  int v2() const { return f2.center; }
  VertexSet all() const {
    return set_union_of(set_union_of(f1.members, f2.members), core);
  }
};

struct AdjusterReport {
  bool a1_disjoint = false;
  bool a2_expansions = false;
  bool a3_core_size = false;
  bool a4_ladder = false;
  bool base_minimal = false;
  bool exhaustive = true;  // ladder verified by a complete search
  int verified_base = -1;
  std::vector<std::string> failures;

  bool ok() const {
    return a1_disjoint && a2_expansions && a3_core_size && a4_ladder && base_minimal &&
           exhaustive;
  }
};

/// Rechecks all four adjuster axioms from scratch. The ladder (and the
/// minimality of the base length) is decided by exhaustive search in the
/// small core.
AdjusterReport validate_adjuster(const Graph& g, const Adjuster& adj,
                                 const CoreQuerySettings& settings = {});

struct AdjusterSearchSettings {
  int d = 3;                 // end size D
  int radius_budget = 0;     // 0: use n
  /// The m of the produced (D,m,k)-adjuster. The source bound is
  /// Theta(log^3 n), which exceeds n at desk scale, so 0 defaults to n.
  int declared_m = 0;
  int pad_size = 0;          // connect-pad size; 0: derived from d
  int cycle_retries = 64;    // shortest cycles tried by the avoiding search
  int anchor_pairs = 48;     // anchor pairs tried per cycle
  CoreQuerySettings core;
};

/// Builds a simple (capacity-1) adjuster anchored at x1, x2 from a
/// shortest cycle C: picks antipodal-but-one vertices x3, x4 on C, routes
/// disjoint connector paths x1->x3 and x2->x4, and uses the two arcs of C
/// as the +-2 length alternatives. The cycle must have even length.
std::optional<Adjuster> build_simple_adjuster(const Graph& g, const Cycle& c, int x1, int x2,
                                              const AdjusterSearchSettings& settings = {},
                                              const VertexSet& avoid = {});

/// Finds a validated simple adjuster in G-U by iterating shortest cycles
/// of G-U and anchor pairs off them in id order.
std::optional<Adjuster> find_adjuster_avoiding(const Graph& g, const VertexSet& u,
                                               const AdjusterSearchSettings& settings = {});

struct ChainResult {
  std::optional<Adjuster> adjuster;  // capacity == requested r on success
  /// Largest-capacity adjuster achieved when the chain stalls early.
  std::optional<Adjuster> partial;
  int achieved_capacity = 0;
  std::string failure;  // empty on success
};

/// Chains fresh simple adjusters onto the current gadget, connecting one
/// end of each to one end of the next, until capacity r is reached.
ChainResult chain_adjusters(const Graph& g, const VertexSet& u, int r,
                            const AdjusterSearchSettings& settings = {});

}  // namespace cyclelab
