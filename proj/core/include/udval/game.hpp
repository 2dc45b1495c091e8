#pragma once

#include <algorithm>
#include <random>
#include <span>
#include <vector>

#include "udval/coalition.hpp"
#include "udval/rational.hpp"
#include "udval/set_system.hpp"

namespace udval {

template <typename T>
using Allocation = std::vector<T>;  // one payoff per player, index i-1 for player i

/// A complete game: a worth for every coalition, v(∅) = 0.
template <typename T>
struct CompleteGame {
  int players = 0;
  std::vector<T> values;  // size 2^players, indexed by coalition mask

  CompleteGame() = default;
  CompleteGame(int n, std::vector<T> v) : players(n), values(std::move(v)) {
    check_player_count(n);
    if (values.size() != (std::size_t{1} << n)) {
      fail(ErrorCode::invalid_input, "value table size must be 2^players");
    }
    if (values[0] != T(0)) fail(ErrorCode::invalid_input, "v(empty) must be 0");
  }

  static CompleteGame zero(int n) {
    return CompleteGame(n, std::vector<T>(std::size_t{1} << n, T(0)));
  }

  const T& operator[](Coalition c) const { return values[c]; }
  bool operator==(const CompleteGame&) const = default;
};

/// A dividend table: the Möbius transform of a complete game, d(∅) = 0.
template <typename T>
struct Dividends {
  int players = 0;
  std::vector<T> d;  // size 2^players

  Dividends() = default;
  Dividends(int n, std::vector<T> table) : players(n), d(std::move(table)) {
    check_player_count(n);
    if (d.size() != (std::size_t{1} << n)) {
      fail(ErrorCode::invalid_input, "dividend table size must be 2^players");
    }
  }

  static Dividends zero(int n) { return Dividends(n, std::vector<T>(std::size_t{1} << n, T(0))); }

  const T& operator[](Coalition c) const { return d[c]; }
  bool operator==(const Dividends&) const = default;
};

/// An incomplete game: worths known exactly on the members of K.
template <typename T>
class IncompleteGame {
 public:
  /// values must be aligned with system.members(); v(∅) = 0 enforced.
  IncompleteGame(SetSystem system, std::vector<T> values)
      : system_(std::move(system)), values_(std::move(values)) {
    if (values_.size() != system_.size()) {
      fail(ErrorCode::invalid_input, "need one value per member of the set system");
    }
    if (!values_.empty() && values_[0] != T(0)) {
      fail(ErrorCode::invalid_input, "v(empty) must be 0");
    }
  }

  int players() const { return system_.players(); }
  const SetSystem& system() const { return system_; }
  const std::vector<T>& values() const { return values_; }

  const T& value_of(Coalition c) const {
    auto idx = system_.index_of(c);
    if (!idx) {
      fail(ErrorCode::invalid_input,
           "coalition " + std::to_string(c) + " is not a known coalition");
    }
    return values_[*idx];
  }

  bool operator==(const IncompleteGame&) const = default;

 private:
  SetSystem system_;
  std::vector<T> values_;
};

/// Möbius transform, in place over the subset lattice: d(S) = v(S) - sum of
/// d(T) over proper subsets T. O(2^n * n).
template <typename T>
Dividends<T> to_dividends(const CompleteGame<T>& game) {
  std::vector<T> a = game.values;
  const std::size_t size = a.size();
  for (int i = 0; i < game.players; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < size; ++s) {
      if (s & bit) a[s] -= a[s ^ bit];
    }
  }
  return Dividends<T>(game.players, std::move(a));
}

/// Zeta transform, the inverse: v(S) = sum of d(T) over subsets T ⊆ S.
template <typename T>
CompleteGame<T> to_values(const Dividends<T>& dividends) {
  std::vector<T> a = dividends.d;
  const std::size_t size = a.size();
  for (int i = 0; i < dividends.players; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < size; ++s) {
      if (s & bit) a[s] += a[s ^ bit];
    }
  }
  return CompleteGame<T>(dividends.players, std::move(a));
}

/// Shapley value: each dividend split equally among the coalition's members.
template <typename T>
Allocation<T> shapley(const Dividends<T>& dividends) {
  const int n = dividends.players;
  Allocation<T> payoff(n, T(0));
  const std::size_t size = dividends.d.size();
  for (std::size_t s = 1; s < size; ++s) {
    const T share = dividends.d[s] / T(coalition_size(static_cast<Coalition>(s)));
    for (int i = 0; i < n; ++i) {
      if (s & (std::size_t{1} << i)) payoff[i] += share;
    }
  }
  return payoff;
}

template <typename T>
Allocation<T> shapley(const CompleteGame<T>& game) {
  return shapley(to_dividends(game));
}

struct GameClass {
  bool positive = false;  // all dividends >= -tol
  bool monotone = false;  // v nondecreasing under inclusion
};

template <typename T>
GameClass classify(const CompleteGame<T>& game, T tol = ScalarTraits<T>::default_tolerance()) {
  GameClass result{true, true};
  const Dividends<T> div = to_dividends(game);
  for (const T& d : div.d) {
    if (d < -tol) {
      result.positive = false;
      break;
    }
  }
  const std::size_t size = game.values.size();
  for (std::size_t s = 0; s < size && result.monotone; ++s) {
    for (int i = 0; i < game.players; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (s & bit) continue;
      if (game.values[s] > game.values[s | bit] + tol) {
        result.monotone = false;
        break;
      }
    }
  }
  return result;
}

/// Result of removing a player: the reduced game over n-1 densely re-indexed
/// players, plus the original 1-based label of each new player.
template <typename T>
struct PlayerRemoval {
  IncompleteGame<T> game;
  std::vector<int> old_player_of_new;  // size n-1; entry j-1 = original label of new player j
};

template <typename T>
PlayerRemoval<T> remove_player(const IncompleteGame<T>& g, int player) {
  const int n = g.players();
  if (player < 1 || player > n) fail(ErrorCode::invalid_input, "player out of range");
  if (n == 1) fail(ErrorCode::invalid_input, "cannot remove the only player");

  std::vector<int> labels;
  labels.reserve(n - 1);
  for (int i = 1; i <= n; ++i) {
    if (i != player) labels.push_back(i);
  }

  const Coalition removed_bit = Coalition{1} << (player - 1);
  const Coalition low_mask = removed_bit - 1;
  std::vector<Coalition> members;
  std::vector<T> values;
  for (std::size_t idx = 0; idx < g.system().members().size(); ++idx) {
    const Coalition s = g.system().members()[idx];
    if (s & removed_bit) continue;
    members.push_back((s & low_mask) | ((s >> 1) & ~low_mask));
    values.push_back(g.values()[idx]);
  }
  return PlayerRemoval<T>{
      IncompleteGame<T>(SetSystem::from_members(n - 1, members), std::move(values)),
      std::move(labels)};
}

/// Independent U[low, high] worths on K \ {∅}; deterministic under a fixed
/// seed (members drawn in ascending mask order).
IncompleteGame<double> random_game(const SetSystem& k, std::uint64_t seed, double low = 0.0,
                                   double high = 1.0);

/// Exact-arithmetic analogue: worths k/denominator with k uniform over
/// [0, denominator].
IncompleteGame<Rational> random_rational_game(const SetSystem& k, std::uint64_t seed,
                                              long denominator = 1L << 20);

enum class BasisKind {
  unanimity,      // u_S(T) = 1 iff S ⊆ T
  half_dividend,  // b_S with d(T) = 1/2^|S| on nonempty T ⊆ S
};

template <typename T>
CompleteGame<T> basis_game(BasisKind kind, Coalition s, int players) {
  check_player_count(players);
  if (s == kEmptyCoalition) fail(ErrorCode::invalid_input, "basis coalition must be nonempty");
  if (s > grand_coalition(players)) fail(ErrorCode::invalid_input, "basis coalition out of range");

  const std::size_t size = std::size_t{1} << players;
  if (kind == BasisKind::unanimity) {
    std::vector<T> values(size, T(0));
    for (std::size_t t = 1; t < size; ++t) {
      if (is_subset(s, static_cast<Coalition>(t))) values[t] = T(1);
    }
    return CompleteGame<T>(players, std::move(values));
  }
  std::vector<T> d(size, T(0));
  const T share = ScalarTraits<T>::fraction(1, 1L << coalition_size(s));
  for (std::size_t t = 1; t < size; ++t) {
    if (is_subset(static_cast<Coalition>(t), s)) d[t] = share;
  }
  return to_values(Dividends<T>(players, std::move(d)));
}

/// Restriction of a complete game to the members of K.
template <typename T>
IncompleteGame<T> restrict_to(const CompleteGame<T>& game, const SetSystem& k) {
  if (k.players() != game.players) fail(ErrorCode::invalid_input, "player count mismatch");
  std::vector<T> values;
  values.reserve(k.size());
  for (Coalition s : k.members()) values.push_back(game.values[s]);
  return IncompleteGame<T>(k, std::move(values));
}

/// Relabels players: new_label_of_old[i-1] is the new 1-based label of old
/// player i. Must be a permutation of 1..n.
template <typename T>
IncompleteGame<T> permute_players(const IncompleteGame<T>& g, std::span<const int> new_label_of_old) {
  const int n = g.players();
  if (static_cast<int>(new_label_of_old.size()) != n) {
    fail(ErrorCode::invalid_input, "permutation size mismatch");
  }
  std::vector<bool> seen(n, false);
  for (int label : new_label_of_old) {
    if (label < 1 || label > n || seen[label - 1]) {
      fail(ErrorCode::invalid_input, "not a permutation of 1..n");
    }
    seen[label - 1] = true;
  }
  auto map_mask = [&](Coalition c) {
    Coalition out = 0;
    for (int i = 0; i < n; ++i) {
      if (c & (Coalition{1} << i)) out |= Coalition{1} << (new_label_of_old[i] - 1);
    }
    return out;
  };
  std::vector<std::pair<Coalition, T>> mapped;
  mapped.reserve(g.system().size());
  for (std::size_t idx = 0; idx < g.system().members().size(); ++idx) {
    mapped.emplace_back(map_mask(g.system().members()[idx]), g.values()[idx]);
  }
  std::sort(mapped.begin(), mapped.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Coalition> members;
  std::vector<T> values;
  for (auto& [mask, value] : mapped) {
    members.push_back(mask);
    values.push_back(std::move(value));
  }
  return IncompleteGame<T>(SetSystem::from_members(n, members), std::move(values));
}

/// Pointwise sum of two games on the same set system.
template <typename T>
IncompleteGame<T> add_games(const IncompleteGame<T>& a, const IncompleteGame<T>& b) {
  if (!(a.system() == b.system())) fail(ErrorCode::invalid_input, "set systems differ");
  std::vector<T> values(a.values());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += b.values()[i];
  return IncompleteGame<T>(a.system(), std::move(values));
}

template <typename T>
IncompleteGame<T> scale_game(const IncompleteGame<T>& g, const T& factor) {
  std::vector<T> values(g.values());
  for (T& v : values) v *= factor;
  return IncompleteGame<T>(g.system(), std::move(values));
}

template <typename T>
T l1_distance(const Allocation<T>& a, const Allocation<T>& b) {
  T total(0);
  for (std::size_t i = 0; i < a.size(); ++i) total += ScalarTraits<T>::abs(a[i] - b[i]);
  return total;
}

template <typename T>
T linf_distance(const Allocation<T>& a, const Allocation<T>& b) {
  T worst(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    T gap = ScalarTraits<T>::abs(a[i] - b[i]);
    if (gap > worst) worst = gap;
  }
  return worst;
}

/// ED_i = v(N)/n for every player.
template <typename T>
Allocation<T> equal_division(const T& grand_value, int players) {
  return Allocation<T>(players, grand_value / T(players));
}

}  // namespace udval
