#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "udval/errors.hpp"

namespace udval {

/// A coalition over players {1..n}, encoded as an n-bit mask with player i at
/// bit i-1 (least significant bit = player 1).
using Coalition = std::uint32_t;

/// Exhaustive 2^n-sized tables appear throughout; keep n small enough that
/// they stay cheap.
inline constexpr int kMaxPlayers = 16;

inline constexpr Coalition kEmptyCoalition = 0;

inline int coalition_size(Coalition c) { return std::popcount(c); }

inline bool is_subset(Coalition a, Coalition b) { return (a & b) == a; }

inline bool is_proper_subset(Coalition a, Coalition b) { return a != b && is_subset(a, b); }

inline bool contains_player(Coalition c, int player) {
  return (c >> (player - 1)) & 1u;
}

inline void check_player_count(int players) {
  if (players < 1 || players > kMaxPlayers) {
    fail(ErrorCode::invalid_input,
         "player count must be in [1, " + std::to_string(kMaxPlayers) + "], got " +
             std::to_string(players));
  }
}

inline Coalition grand_coalition(int players) {
  check_player_count(players);
  return static_cast<Coalition>((1u << players) - 1u);
}

/// Encodes a list of 1-based player indices as a coalition mask.
Coalition encode_coalition(const std::vector<int>& players, int n);

/// Inverse of encode_coalition; returns sorted 1-based indices.
std::vector<int> decode_coalition(Coalition c, int n);

/// Renders a coalition as "{1,3}" (or "{}" for the empty coalition).
std::string coalition_to_string(Coalition c, int n);

/// Orders coalitions by cardinality first, then by mask. The UD recursion and
/// the UD linear system both rely on this order: a coalition is always
/// preceded by all of its proper subsets.
struct BySizeThenMask {
  bool operator()(Coalition a, Coalition b) const {
    const int sa = coalition_size(a);
    const int sb = coalition_size(b);
    if (sa != sb) return sa < sb;
    return a < b;
  }
};

}  // namespace udval
