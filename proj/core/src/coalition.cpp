#include "udval/coalition.hpp"

namespace udval {

Coalition encode_coalition(const std::vector<int>& players, int n) {
  check_player_count(n);
  Coalition mask = 0;
  for (int p : players) {
    if (p < 1 || p > n) {
      fail(ErrorCode::invalid_input, "player index " + std::to_string(p) + " out of 1.." +
                                         std::to_string(n));
    }
    const Coalition bit = Coalition{1} << (p - 1);
    if (mask & bit) fail(ErrorCode::invalid_input, "duplicate player index " + std::to_string(p));
    mask |= bit;
  }
  return mask;
}

std::vector<int> decode_coalition(Coalition c, int n) {
  check_player_count(n);
  if (c > grand_coalition(n)) fail(ErrorCode::invalid_input, "coalition mask out of range");
  std::vector<int> players;
  for (int i = 1; i <= n; ++i) {
    if (contains_player(c, i)) players.push_back(i);
  }
  return players;
}

std::string coalition_to_string(Coalition c, int n) {
  std::string out = "{";
  bool first = true;
  for (int p : decode_coalition(c, n)) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace udval
