#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "udval/values.hpp"

namespace udval {

/// One row of the set-system census: how many systems containing ∅ and N are
/// intersection-closed, and how many of the rest still have a unique UD
/// payoff. Exhaustive rows carry exact counts, sampled rows carry estimates
/// with standard errors.
struct CensusRow {
  int players = 0;
  mpz_class total;  // number of systems containing ∅ and N
  long ic_count = 0;
  double ic_proportion = 0.0;
  long unique_nonic_count = 0;
  double unique_nonic_proportion = 0.0;
  long samples = 0;  // 0 = exhaustive
  std::uint64_t seed = 0;
  double ic_se = 0.0;
  double unique_nonic_se = 0.0;
};

struct CensusResult {
  CensusRow row;
  std::vector<SetSystem> unique_nonic_witnesses;
};

/// Exact census over every system containing ∅ and N. Capped at 4 players.
/// At n = 4 the witnesses are verified against the symmetric family
/// {S : |S| = 2} ∪ {∅, N} ∪ (nonempty set of singletons).
CensusResult census_exhaustive(int players);

/// Monte-Carlo census over uniformly drawn systems containing ∅ and N.
CensusRow census_sampled(int players, long samples, std::uint64_t seed);

/// Sample-size formula Z^2 p (1-p) / E^2, rounded up.
long sample_size_yamane(double z, double p, double e);

/// Pilot-based sample-size formula (Z s / E)^2, rounded up.
long sample_size_cochran(double z, double s, double e);

enum class DifferenceReference {
  pairwise,        // |R-IC|, |R-UD|, |UD-IC| in the l1 norm
  equal_division,  // |R-ED|, |UD-ED|, |IC-ED|
};

std::array<std::string, 3> difference_series_names(DifferenceReference reference);

struct SystemDifferenceStats {
  mpz_class encoding;
  std::array<double, 3> mean{};
  std::array<double, 3> sd{};  // sample standard deviation over the games
  /// rank[s] = number of series with strictly smaller mean (ties share the
  /// better rank).
  std::array<int, 3> rank{};
  bool tie = false;
};

struct DifferenceReport {
  DifferenceReference reference = DifferenceReference::pairwise;
  int players = 0;
  int games_per_system = 0;
  std::uint64_t seed = 0;
  std::vector<SystemDifferenceStats> systems;
  std::vector<mpz_class> skipped;  // encodings of skipped unsupported systems
};

/// For every system, draws games_per_system uniform [0,1] games and records
/// mean and standard deviation of the three l1 distances plus the per-system
/// rank order. Per-game seeds are derived from (seed, system encoding, game
/// index), so the report does not depend on how the work is split.
///
/// Systems that are unsupported (no grand coalition or not
/// intersection-closed) fail the run, or are skipped with a note when
/// skip_unsupported is set.
DifferenceReport difference_experiment(const std::vector<SetSystem>& systems,
                                       int games_per_system, std::uint64_t seed,
                                       DifferenceReference reference,
                                       bool skip_unsupported = false);

/// Aggregate rank frequencies. Tallies break ties by series order (so each
/// rank column sums to the number of systems); tied_systems counts systems
/// whose per-system report shares a rank.
struct RankTable {
  std::array<std::string, 3> series;
  std::array<std::array<long, 3>, 3> counts{};  // counts[series][rank]
  long tied_systems = 0;
};

RankTable summarize_ranks(const DifferenceReport& report);

/// Histogram of per-system means at fixed bin width; out-of-range values are
/// clipped into the edge bins and counted separately.
struct Histogram {
  double low = 0.0;
  double high = 0.0;
  double width = 0.1;
  std::array<std::string, 3> series;
  std::vector<std::array<long, 3>> counts;  // bins x series
  std::array<long, 3> clipped_low{};
  std::array<long, 3> clipped_high{};
};

Histogram summarize_histogram(const DifferenceReport& report, double low, double high,
                              double width = 0.1);
Histogram summarize_histogram(const DifferenceReport& report);

double default_histogram_low(DifferenceReference reference);
double default_histogram_high(DifferenceReference reference);

/// Every intersection-closed system with a grand coalition, ascending
/// membership-mask order. Exhaustive; capped at 4 players.
std::vector<SetSystem> all_ic_systems(int players);

/// Intersection-closed systems drawn by closing uniform samples (biased
/// towards larger families; duplicates possible).
std::vector<SetSystem> sampled_ic_systems(int players, long count, std::uint64_t seed);

/// The paper's pilot procedure: run a 30-system pilot, estimate the largest
/// per-series standard deviation of the per-system means, and size the full
/// run with the Cochran formula.
long pilot_cochran_sample_count(int players, int games_per_system, std::uint64_t seed,
                                DifferenceReference reference, double z = 1.96,
                                double margin = 0.01);

}  // namespace udval
