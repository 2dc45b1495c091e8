#include "udval/set_system.hpp"

#include <algorithm>

namespace udval {

SetSystem::SetSystem(int players, std::vector<Coalition> members, std::vector<bool> present)
    : players_(players), members_(std::move(members)), present_(std::move(present)) {}

SetSystem::SetSystem(int players) : players_(players) {
  check_player_count(players);
  present_.assign(std::size_t{1} << players, false);
  present_[0] = true;
  members_.push_back(kEmptyCoalition);
}

SetSystem SetSystem::from_members(int players, const std::vector<Coalition>& members) {
  check_player_count(players);
  std::vector<bool> present(std::size_t{1} << players, false);
  present[0] = true;
  for (Coalition c : members) {
    if (c >= present.size()) {
      fail(ErrorCode::invalid_input,
           "coalition mask " + std::to_string(c) + " out of range for " + std::to_string(players) +
               " players");
    }
    present[c] = true;
  }
  std::vector<Coalition> sorted;
  for (std::size_t c = 0; c < present.size(); ++c) {
    if (present[c]) sorted.push_back(static_cast<Coalition>(c));
  }
  return SetSystem(players, std::move(sorted), std::move(present));
}

SetSystem SetSystem::from_encoding(int players, const mpz_class& encoding) {
  check_player_count(players);
  const std::size_t size = std::size_t{1} << players;
  if (encoding < 0 || mpz_sizeinbase(encoding.get_mpz_t(), 2) > size) {
    fail(ErrorCode::invalid_input, "membership encoding out of range");
  }
  std::vector<bool> present(size, false);
  present[0] = true;
  for (std::size_t c = 1; c < size; ++c) {
    if (mpz_tstbit(encoding.get_mpz_t(), c)) present[c] = true;
  }
  std::vector<Coalition> members;
  for (std::size_t c = 0; c < size; ++c) {
    if (present[c]) members.push_back(static_cast<Coalition>(c));
  }
  return SetSystem(players, std::move(members), std::move(present));
}

SetSystem SetSystem::power_set(int players) {
  check_player_count(players);
  const std::size_t size = std::size_t{1} << players;
  std::vector<bool> present(size, true);
  std::vector<Coalition> members(size);
  for (std::size_t c = 0; c < size; ++c) members[c] = static_cast<Coalition>(c);
  return SetSystem(players, std::move(members), std::move(present));
}

std::optional<std::size_t> SetSystem::index_of(Coalition c) const {
  if (!contains(c)) return std::nullopt;
  auto it = std::lower_bound(members_.begin(), members_.end(), c);
  return static_cast<std::size_t>(it - members_.begin());
}

mpz_class SetSystem::encoding() const {
  mpz_class enc = 0;
  for (Coalition c : members_) mpz_setbit(enc.get_mpz_t(), c);
  return enc;
}

std::uint64_t SetSystem::encoding_u64() const {
  if (players_ > 6) fail(ErrorCode::invalid_input, "encoding exceeds 64 bits beyond 6 players");
  std::uint64_t enc = 0;
  for (Coalition c : members_) enc |= std::uint64_t{1} << c;
  return enc;
}

SetSystem SetSystem::with(Coalition c) const {
  if (contains(c)) return *this;
  std::vector<Coalition> members = members_;
  members.push_back(c);
  return from_members(players_, members);
}

SetSystem SetSystem::without(Coalition c) const {
  if (c == kEmptyCoalition) fail(ErrorCode::invalid_input, "the empty coalition cannot be removed");
  if (!contains(c)) return *this;
  std::vector<Coalition> members;
  members.reserve(members_.size() - 1);
  for (Coalition m : members_) {
    if (m != c) members.push_back(m);
  }
  return from_members(players_, members);
}

bool is_intersection_closed(const SetSystem& k) {
  const auto& members = k.members();
  for (std::size_t i = 1; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!k.contains(members[i] & members[j])) return false;
    }
  }
  return true;
}

SetSystem intersection_closure(const SetSystem& k) {
  std::vector<bool> present(std::size_t{1} << k.players(), false);
  for (Coalition c : k.members()) present[c] = true;
  std::vector<Coalition> worklist = k.members();
  std::vector<Coalition> all = k.members();
  while (!worklist.empty()) {
    const Coalition fresh = worklist.back();
    worklist.pop_back();
    for (std::size_t i = 0; i < all.size(); ++i) {
      const Coalition meet = fresh & all[i];
      if (!present[meet]) {
        present[meet] = true;
        all.push_back(meet);
        worklist.push_back(meet);
      }
    }
  }
  return SetSystem::from_members(k.players(), all);
}

}  // namespace udval
