#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "cyclelab/graph.hpp"

namespace cyclelab {

/// Parameters (eps1, k) of the sublinear vertex-expansion condition,
/// optionally remembering the (eps1, eps2*d) instantiation they came from.
struct ExpansionParams {
  double eps1;
  double k;
  std::optional<double> eps2;
  std::optional<double> d;

  ExpansionParams(double eps1_in, double k_in) : eps1(eps1_in), k(k_in) {
    if (!(eps1 > 0.0 && eps1 < 1.0)) throw DomainError("eps1 must lie in (0,1)");
    if (!(k > 0.0)) throw DomainError("k must be positive");
  }

  static ExpansionParams bipartite_form(double eps1, double eps2, double d) {
    if (!(eps2 > 0.0 && eps2 < 1.0)) throw DomainError("eps2 must lie in (0,1)");
    if (!(d > 0.0)) throw DomainError("d must be positive");
    ExpansionParams p(eps1, eps2 * d);
    p.eps2 = eps2;
    p.d = d;
    return p;
  }
};

/// eps(x): 0 below k/5, eps1/log^2(15x/k) from k/5 on. Natural log.
double epsilon(double x, const ExpansionParams& params);

/// (2/eps1) * log^3(15n/k): the expander short-diameter bound.
double diameter_bound(double n, const ExpansionParams& params);

struct ExpanderCertificate {
  enum class Mode { exhaustive, sampled };
  Mode mode = Mode::exhaustive;
  std::uint64_t subsets_checked = 0;
};

/// A set X with k/2 <= |X| <= n/2 whose boundary is too small. Always
/// revalidatable from (G, params) alone.
struct NonExpansionWitness {
  VertexSet x;
  int boundary = 0;
  double required = 0.0;
};

using ExpanderVerdict = std::variant<ExpanderCertificate, NonExpansionWitness>;

struct CheckSettings {
  enum class Mode { exhaustive, sampled };
  Mode mode = Mode::exhaustive;
  int exhaustive_cap = 24;
  std::uint64_t budget = 10000;  // sampled candidate sets
  std::uint64_t seed = 0;
  int threads = 2;
};

/// Decides the vertex-boundary expansion predicate. Exhaustive mode is a
/// correct verdict for n <= exhaustive_cap (CapacityError above); sampled
/// mode returns either a valid witness or "no witness found within budget".
ExpanderVerdict check_expander(const Graph& g, const ExpansionParams& params,
                               const CheckSettings& settings = {});

/// Recomputes |N(X)| and eps(|X|)*|X| from scratch.
bool revalidate_witness(const Graph& g, const ExpansionParams& params,
                        const NonExpansionWitness& w);

struct ExtractResult {
  Graph subgraph;  // labels refer to the input graph's labels
  ExpanderCertificate::Mode certificate_mode = ExpanderCertificate::Mode::exhaustive;
  /// Set when a witness was found whose both repair branches would break
  /// the average-degree floor; the returned subgraph still satisfies the
  /// degree contracts but its expansion claim failed on this witness.
  std::optional<NonExpansionWitness> residual_witness;
  int repair_steps = 0;
};

/// Extracts H <= G with d(H) >= d(G)/2 and delta(H) >= d(H)/2 (exact
/// rational checks), expansion certified within the settings' reach.
/// Peels min-degree vertices, then repairs by replacing H with the denser
/// of H[B(X)] and H-X while witnesses X are found.
ExtractResult extract_expander(const Graph& g, const ExpansionParams& params,
                               const CheckSettings& settings = {});

/// Spanning bipartite subgraph with every vertex keeping at least half of
/// its degree across the cut (so e(H) >= e(G)/2). Seeded local search.
Graph extract_bipartite(const Graph& g, std::uint64_t seed);

/// Bipartite (eps1, eps2*d)-expander with delta(H) >= d, for graphs with
/// d(G) >= 8d (DomainError otherwise).
ExtractResult extract_bipartite_expander(const Graph& g, double eps1, double eps2, int d,
                                         const CheckSettings& settings = {});

}  // namespace cyclelab
