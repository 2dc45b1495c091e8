#include "udval/enumeration.hpp"

namespace udval {

std::uint64_t mix_seed(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
  return mix_seed(mix_seed(master ^ 0x5851f42d4c957f2dULL) ^ mix_seed(stream) ^
                  mix_seed(index ^ 0x14057b7ef767814fULL));
}

SystemEnumerator::SystemEnumerator(int players, bool require_grand, int limit)
    : players_(players), require_grand_(require_grand) {
  check_player_count(players);
  if (players > limit) {
    fail(ErrorCode::unsupported, "exhaustive enumeration capped at " + std::to_string(limit) +
                                     " players; use sampling instead");
  }
  free_bits_ = (1 << players) - 1 - (require_grand ? 1 : 0);
  count_ = std::uint64_t{1} << free_bits_;
}

SetSystem SystemEnumerator::at(std::uint64_t index) const {
  if (index >= count_) fail(ErrorCode::invalid_input, "enumeration index out of range");
  // Scatter the index bits over the free coalition masks 1..2^n-2 (and
  // 2^n-1 when the grand coalition is free). Ascending index order is
  // ascending membership-mask order because the forced bits are constant.
  std::vector<Coalition> members;
  members.push_back(kEmptyCoalition);
  const Coalition grand = grand_coalition(players_);
  for (int b = 0; b < free_bits_; ++b) {
    if (index & (std::uint64_t{1} << b)) members.push_back(static_cast<Coalition>(b + 1));
  }
  if (require_grand_) members.push_back(grand);
  return SetSystem::from_members(players_, members);
}

std::optional<SetSystem> SystemEnumerator::next() {
  if (cursor_ >= count_) return std::nullopt;
  return at(cursor_++);
}

std::uint64_t enumerate_systems(int players, bool require_grand,
                                const std::function<void(const SetSystem&)>& fn, int limit) {
  SystemEnumerator stream(players, require_grand, limit);
  while (auto k = stream.next()) fn(*k);
  return stream.count();
}

SetSystem sample_system(int players, SampleMode mode, std::mt19937_64& rng) {
  check_player_count(players);
  const Coalition grand = grand_coalition(players);
  std::vector<Coalition> members{kEmptyCoalition, grand};
  for (Coalition c = 1; c < grand; ++c) {
    if (rng() & 1u) members.push_back(c);
  }
  SetSystem drawn = SetSystem::from_members(players, members);
  if (mode == SampleMode::ic_biased) return intersection_closure(drawn);
  return drawn;
}

SetSystem sample_system(int players, SampleMode mode, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_system(players, mode, rng);
}

}  // namespace udval
