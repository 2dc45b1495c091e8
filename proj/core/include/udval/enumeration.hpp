#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "udval/set_system.hpp"

namespace udval {

/// Exhaustive set-system enumeration is hard-capped here; beyond it only
/// sampling is offered.
inline constexpr int kExhaustiveLimit = 4;

/// Streams every set system over n players containing ∅ (and N when
/// require_grand) exactly once, in ascending membership-mask order. The
/// stream may be sharded by index range for parallel scans.
class SystemEnumerator {
 public:
  SystemEnumerator(int players, bool require_grand, int limit = kExhaustiveLimit);

  /// 2^(2^n - 2) with a required grand coalition, 2^(2^n - 1) without.
  std::uint64_t count() const { return count_; }

  /// The index-th system of the stream (ascending membership-mask order).
  SetSystem at(std::uint64_t index) const;

  std::optional<SetSystem> next();

 private:
  int players_;
  bool require_grand_;
  int free_bits_;
  std::uint64_t count_;
  std::uint64_t cursor_ = 0;
};

/// Convenience wrapper: applies fn to every enumerated system, returns the
/// number of systems visited.
std::uint64_t enumerate_systems(int players, bool require_grand,
                                const std::function<void(const SetSystem&)>& fn,
                                int limit = kExhaustiveLimit);

enum class SampleMode {
  /// Each coalition outside {∅, N} is included independently with
  /// probability 1/2: uniform over systems containing ∅ and N.
  uniform,
  /// A uniform draw closed under pairwise intersections to a fixpoint. The
  /// result is always intersection-closed but the distribution over
  /// intersection-closed systems is biased towards larger families.
  ic_biased,
};

SetSystem sample_system(int players, SampleMode mode, std::mt19937_64& rng);
SetSystem sample_system(int players, SampleMode mode, std::uint64_t seed);

/// splitmix64; used to derive independent per-task seeds from a master seed.
std::uint64_t mix_seed(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

}  // namespace udval
