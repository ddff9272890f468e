#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclelab/graph.hpp"

namespace cyclelab {

/// Set of realized cycle lengths. `exact` only under the subset-DP method
/// within its cap; sampled spectra are certified-present lower bounds.
struct CycleSpectrum {
  std::vector<int> lengths;  // sorted, each >= 3
  bool exact = false;
  std::map<int, Cycle> witnesses;
  int n = 0;
  std::string method;
  std::uint64_t budget = 0;

  bool contains(int len) const;
};

/// Exact spectrum by dynamic programming over (vertex subset, endpoint)
/// states anchored at each subset's least vertex. CapacityError beyond
/// dp_cap; use cycle_spectrum_lower there.
CycleSpectrum cycle_spectrum_exact(const Graph& g, int dp_cap = 24,
                                   bool keep_witnesses = true);

/// Certified-present lengths from randomized DFS cycle sampling plus
/// color-coded detection of short target lengths. Never claims absence.
CycleSpectrum cycle_spectrum_lower(const Graph& g, std::uint64_t budget, std::uint64_t seed,
                                   int cc_cap = 16);

/// Members of the spectrum congruent to a mod b.
std::vector<int> residue_spectrum(const CycleSpectrum& s, int a, int b);

/// Sum of 1/len with compensated summation; lengths must be >= 3.
double harmonic_sum(const std::vector<int>& lengths);

struct EvenIntervalReport {
  int best_ell = 0;  // largest even ell whose whole even interval is present
  bool holds = false;
  std::vector<int> missing;       // even gaps of [4, max(S)]
  bool degenerate_regime = false; // log^8(ell) exceeded ell, interval clamped to [4, ell]
  bool one_sided = false;         // spectrum was a lower bound only
  std::optional<double> degree_guarantee;  // d / (10 log^12 d), when d given
  bool degree_guarantee_vacuous = false;   // guarantee below the smallest even cycle
};

EvenIntervalReport even_interval_report(const CycleSpectrum& s,
                                        std::optional<double> avg_degree = std::nullopt);

struct OddIntervalReport {
  bool empty = true;
  int ell = 0;
  double ratio = 0.0;
  bool one_sided = false;
};

/// Longest run of consecutive odd lengths, reported as (ell, max ratio r)
/// with every odd integer of [ell, ell*r] present.
OddIntervalReport odd_interval_report(const CycleSpectrum& s);

struct SequenceSpec {
  enum class Kind { powers_of_two, arithmetic, explicit_list, geometric };
  Kind kind = Kind::powers_of_two;
  long long first = 1;        // arithmetic/geometric start
  long long step = 1;         // arithmetic difference
  double growth = 2.0;        // geometric multiplier
  std::vector<long long> values;  // explicit_list
  std::optional<int> parity;  // keep only values of this parity

  /// Members <= up_to, in increasing order. DomainError if the resulting
  /// sequence is not strictly increasing.
  std::vector<long long> enumerate(long long up_to) const;

  static SequenceSpec powers_of_two_spec();
  static SequenceSpec arithmetic_spec(long long a, long long d);
  static SequenceSpec explicit_spec(std::vector<long long> v);
  static SequenceSpec geometric_spec(long long first, double c);
};

struct SequenceGrowthReport {
  /// sigma_{i+1} <= exp(sigma_i^{1/10}) held over the enumerated range.
  bool within_exp_tenth_root = true;
  /// Smallest C witnessing sigma_{i+1} <= C * sigma_i.
  double witnessed_ratio_bound = 1.0;
};

struct SequenceHit {
  std::optional<long long> first_hit;
  /// Set on a miss when the spectrum is only a lower bound: absence is
  /// then "not disproven", not proved.
  bool exactness_caveat = false;
  SequenceGrowthReport growth;
};

SequenceHit hits_sequence(const CycleSpectrum& s, const SequenceSpec& seq);

struct PropertyPReport {
  bool holds = false;
  /// First failing (u, v, t) in scan order when the property fails.
  std::optional<std::array<int, 3>> counterexample;
  std::uint64_t pairs_checked = 0;
};

/// Exhaustively verifies that every vertex pair realizes every parity-
/// compatible path length t in [ell, upper]. Connected bipartite hosts
/// with n <= cap only (CapacityError above).
PropertyPReport property_p_check(const Graph& h, int ell, int upper, int cap = 12);

}  // namespace cyclelab
