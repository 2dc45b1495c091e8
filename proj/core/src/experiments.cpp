#include "udval/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "udval/enumeration.hpp"

namespace udval {

namespace {

mpz_class systems_containing_empty_and_grand(int players) {
  mpz_class total = 0;
  mpz_setbit(total.get_mpz_t(), (std::size_t{1} << players) - 2);
  return total;
}

std::uint64_t low_bits(const mpz_class& x) {
  mpz_class rem;
  mpz_fdiv_r_2exp(rem.get_mpz_t(), x.get_mpz_t(), 64);
  std::uint64_t out = 0;
  for (int limb = 0; limb < 2; ++limb) {
    mpz_class word;
    mpz_fdiv_r_2exp(word.get_mpz_t(), rem.get_mpz_t(), 32);
    out |= static_cast<std::uint64_t>(word.get_ui()) << (32 * limb);
    mpz_fdiv_q_2exp(rem.get_mpz_t(), rem.get_mpz_t(), 32);
  }
  return out;
}

/// The n = 4 family of non-intersection-closed systems with a unique UD
/// payoff: all pairs plus ∅, N, and a set of singletons. Including every
/// singleton closes the family under intersections, so exactly the 15
/// proper singleton subsets (the empty one included) qualify.
std::vector<mpz_class> symmetric_family_encodings(int players) {
  std::vector<Coalition> pairs;
  const Coalition grand = grand_coalition(players);
  for (Coalition c = 1; c <= grand; ++c) {
    if (coalition_size(c) == 2) pairs.push_back(c);
  }
  std::vector<mpz_class> encodings;
  for (Coalition singles = 0; singles <= grand; ++singles) {
    std::vector<Coalition> members = pairs;
    members.push_back(grand);
    for (int i = 1; i <= players; ++i) {
      if (contains_player(singles, i)) members.push_back(Coalition{1} << (i - 1));
    }
    const SetSystem k = SetSystem::from_members(players, members);
    if (!is_intersection_closed(k)) encodings.push_back(k.encoding());
  }
  std::sort(encodings.begin(), encodings.end());
  return encodings;
}

}  // namespace

CensusResult census_exhaustive(int players) {
  if (players > kExhaustiveLimit) {
    fail(ErrorCode::unsupported, "exhaustive census capped at " +
                                     std::to_string(kExhaustiveLimit) +
                                     " players; use census_sampled");
  }
  CensusResult result;
  result.row.players = players;
  result.row.total = systems_containing_empty_and_grand(players);

  SystemEnumerator stream(players, /*require_grand=*/true);
  while (auto k = stream.next()) {
    if (is_intersection_closed(*k)) {
      ++result.row.ic_count;
    } else if (is_ud_unique(*k)) {
      ++result.row.unique_nonic_count;
      result.unique_nonic_witnesses.push_back(*k);
    }
  }
  const double total = result.row.total.get_d();
  result.row.ic_proportion = static_cast<double>(result.row.ic_count) / total;
  result.row.unique_nonic_proportion =
      static_cast<double>(result.row.unique_nonic_count) / total;

  if (players == 4) {
    std::vector<mpz_class> found;
    for (const SetSystem& k : result.unique_nonic_witnesses) found.push_back(k.encoding());
    std::sort(found.begin(), found.end());
    if (found != symmetric_family_encodings(players)) {
      throw std::logic_error("n=4 unique non-IC witnesses do not match the symmetric family");
    }
  }
  return result;
}

CensusRow census_sampled(int players, long samples, std::uint64_t seed) {
  if (samples < 1) fail(ErrorCode::invalid_input, "need at least one sample");
  CensusRow row;
  row.players = players;
  row.total = systems_containing_empty_and_grand(players);
  row.samples = samples;
  row.seed = seed;
  for (long k = 0; k < samples; ++k) {
    const SetSystem system = sample_system(
        players, SampleMode::uniform, derive_seed(seed, 0xce9505ULL, static_cast<std::uint64_t>(k)));
    if (is_intersection_closed(system)) {
      ++row.ic_count;
    } else if (is_ud_unique(system)) {
      ++row.unique_nonic_count;
    }
  }
  const double m = static_cast<double>(samples);
  row.ic_proportion = static_cast<double>(row.ic_count) / m;
  row.unique_nonic_proportion = static_cast<double>(row.unique_nonic_count) / m;
  row.ic_se = std::sqrt(row.ic_proportion * (1.0 - row.ic_proportion) / m);
  row.unique_nonic_se =
      std::sqrt(row.unique_nonic_proportion * (1.0 - row.unique_nonic_proportion) / m);
  return row;
}

namespace {

/// ceil with a relative snap: formula results that are integers up to
/// floating-point noise (e.g. 2.576^2 * 0.25 / 0.001^2) must not round up.
long ceil_sample_size(double x) {
  if (x <= 0) return 0;
  const double snapped = std::round(x);
  if (std::fabs(x - snapped) <= 1e-6 * std::max(1.0, std::fabs(x))) {
    return static_cast<long>(snapped);
  }
  return static_cast<long>(std::ceil(x));
}

}  // namespace

long sample_size_yamane(double z, double p, double e) {
  if (e <= 0) fail(ErrorCode::invalid_input, "margin of error must be positive");
  if (p < 0 || p > 1) fail(ErrorCode::invalid_input, "proportion must be in [0, 1]");
  return ceil_sample_size(z * z * p * (1.0 - p) / (e * e));
}

long sample_size_cochran(double z, double s, double e) {
  if (e <= 0) fail(ErrorCode::invalid_input, "margin of error must be positive");
  const double root = z * s / e;
  return ceil_sample_size(root * root);
}

std::array<std::string, 3> difference_series_names(DifferenceReference reference) {
  if (reference == DifferenceReference::pairwise) return {"R_IC", "R_UD", "UD_IC"};
  return {"R_ED", "UD_ED", "IC_ED"};
}

DifferenceReport difference_experiment(const std::vector<SetSystem>& systems,
                                       int games_per_system, std::uint64_t seed,
                                       DifferenceReference reference, bool skip_unsupported) {
  if (games_per_system < 1) fail(ErrorCode::invalid_input, "need at least one game per system");
  DifferenceReport report;
  report.reference = reference;
  report.games_per_system = games_per_system;
  report.seed = seed;

  for (const SetSystem& k : systems) {
    if (!k.has_grand() || !is_intersection_closed(k)) {
      if (skip_unsupported) {
        report.skipped.push_back(k.encoding());
        continue;
      }
      fail(ErrorCode::not_intersection_closed,
           "system " + k.encoding().get_str() + " is unsupported; pass skip_unsupported to skip");
    }
    report.players = k.players();
    const ClosurePartition partition = ClosurePartition::compute(k);

    SystemDifferenceStats stats;
    stats.encoding = k.encoding();
    std::array<double, 3> sum{};
    std::array<double, 3> sum_sq{};
    const std::uint64_t stream = low_bits(stats.encoding);
    for (int game_index = 0; game_index < games_per_system; ++game_index) {
      const IncompleteGame<double> game =
          random_game(k, derive_seed(seed, stream, static_cast<std::uint64_t>(game_index)));
      const Allocation<double> r = compute_value(game, ValueKind::r, partition);
      const Allocation<double> ud = compute_value(game, ValueKind::ud, partition);
      const Allocation<double> ic = compute_value(game, ValueKind::ic, partition);
      std::array<double, 3> distance;
      if (reference == DifferenceReference::pairwise) {
        distance = {l1_distance(r, ic), l1_distance(r, ud), l1_distance(ud, ic)};
      } else {
        const Allocation<double> ed = equal_division(game.value_of(k.grand()), k.players());
        distance = {l1_distance(r, ed), l1_distance(ud, ed), l1_distance(ic, ed)};
      }
      for (int s = 0; s < 3; ++s) {
        sum[s] += distance[s];
        sum_sq[s] += distance[s] * distance[s];
      }
    }
    const double g = static_cast<double>(games_per_system);
    for (int s = 0; s < 3; ++s) {
      stats.mean[s] = sum[s] / g;
      if (games_per_system > 1) {
        const double var = std::max(0.0, (sum_sq[s] - g * stats.mean[s] * stats.mean[s]) / (g - 1.0));
        stats.sd[s] = std::sqrt(var);
      }
    }
    for (int s = 0; s < 3; ++s) {
      int smaller = 0;
      for (int t = 0; t < 3; ++t) {
        if (stats.mean[t] < stats.mean[s]) ++smaller;
        if (t != s && stats.mean[t] == stats.mean[s]) stats.tie = true;
      }
      stats.rank[s] = smaller;
    }
    report.systems.push_back(std::move(stats));
  }
  return report;
}

RankTable summarize_ranks(const DifferenceReport& report) {
  if (report.systems.empty()) fail(ErrorCode::invalid_input, "empty difference report");
  RankTable table;
  table.series = difference_series_names(report.reference);
  for (const SystemDifferenceStats& stats : report.systems) {
    // Stable tie-break by series order keeps each rank column a partition of
    // the systems; ties remain visible through tied_systems and the
    // per-system reports.
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (stats.mean[a] != stats.mean[b]) return stats.mean[a] < stats.mean[b];
      return a < b;
    });
    for (int position = 0; position < 3; ++position) ++table.counts[order[position]][position];
    if (stats.tie) ++table.tied_systems;
  }
  return table;
}

Histogram summarize_histogram(const DifferenceReport& report, double low, double high,
                              double width) {
  if (report.systems.empty()) fail(ErrorCode::invalid_input, "empty difference report");
  if (width <= 0 || high <= low) fail(ErrorCode::invalid_input, "bad histogram range");
  Histogram hist;
  hist.low = low;
  hist.high = high;
  hist.width = width;
  hist.series = difference_series_names(report.reference);
  const int bins = static_cast<int>(std::round((high - low) / width));
  hist.counts.assign(bins, {});
  for (const SystemDifferenceStats& stats : report.systems) {
    for (int s = 0; s < 3; ++s) {
      int bin = static_cast<int>(std::floor((stats.mean[s] - low) / width));
      if (bin < 0) {
        bin = 0;
        ++hist.clipped_low[s];
      } else if (bin >= bins) {
        bin = bins - 1;
        ++hist.clipped_high[s];
      }
      ++hist.counts[bin][s];
    }
  }
  return hist;
}

double default_histogram_low(DifferenceReference reference) {
  return reference == DifferenceReference::pairwise ? 0.0 : 0.5;
}

double default_histogram_high(DifferenceReference reference) {
  return reference == DifferenceReference::pairwise ? 1.2 : 1.7;
}

Histogram summarize_histogram(const DifferenceReport& report) {
  return summarize_histogram(report, default_histogram_low(report.reference),
                             default_histogram_high(report.reference));
}

std::vector<SetSystem> all_ic_systems(int players) {
  std::vector<SetSystem> systems;
  enumerate_systems(players, /*require_grand=*/true, [&](const SetSystem& k) {
    if (is_intersection_closed(k)) systems.push_back(k);
  });
  return systems;
}

std::vector<SetSystem> sampled_ic_systems(int players, long count, std::uint64_t seed) {
  std::vector<SetSystem> systems;
  systems.reserve(count);
  for (long k = 0; k < count; ++k) {
    systems.push_back(sample_system(players, SampleMode::ic_biased,
                                    derive_seed(seed, 0x1cb1a5ULL, static_cast<std::uint64_t>(k))));
  }
  return systems;
}

long pilot_cochran_sample_count(int players, int games_per_system, std::uint64_t seed,
                                DifferenceReference reference, double z, double margin) {
  const std::vector<SetSystem> pilot = sampled_ic_systems(players, 30, seed);
  const DifferenceReport report =
      difference_experiment(pilot, games_per_system, seed, reference);
  std::array<double, 3> sum{};
  std::array<double, 3> sum_sq{};
  for (const SystemDifferenceStats& stats : report.systems) {
    for (int s = 0; s < 3; ++s) {
      sum[s] += stats.mean[s];
      sum_sq[s] += stats.mean[s] * stats.mean[s];
    }
  }
  const double m = static_cast<double>(report.systems.size());
  double worst_sd = 0.0;
  for (int s = 0; s < 3; ++s) {
    const double mean = sum[s] / m;
    const double var = std::max(0.0, (sum_sq[s] - m * mean * mean) / (m - 1.0));
    worst_sd = std::max(worst_sd, std::sqrt(var));
  }
  return sample_size_cochran(z, worst_sd, margin);
}

}  // namespace udval
