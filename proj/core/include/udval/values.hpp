#pragma once

#include <cstdint>
#include <vector>

#include "udval/closure.hpp"
#include "udval/exactlin.hpp"
#include "udval/game.hpp"

namespace udval {

/// Surplus of each known coalition over its known proper subsets:
/// delta(S) = v(S) - sum of delta(T) over T in K, T a proper subset of S.
/// Returned aligned with g.system().members(); delta(∅) = 0.
template <typename T>
std::vector<T> delta_surpluses(const IncompleteGame<T>& g) {
  const auto& members = g.system().members();
  std::vector<T> delta(members.size(), T(0));
  // Ascending mask order is a topological order for inclusion: T ⊊ S
  // implies T < S as integers.
  for (std::size_t i = 1; i < members.size(); ++i) {
    T acc = g.values()[i];
    for (std::size_t j = 1; j < i; ++j) {
      if (is_proper_subset(members[j], members[i])) acc -= delta[j];
    }
    delta[i] = acc;
  }
  return delta;
}

/// Inverse of delta_surpluses: v(S) = sum of delta(T) over known T ⊆ S.
/// Nonnegative surpluses always yield a P-extendable game.
template <typename T>
IncompleteGame<T> game_from_delta_surpluses(const SetSystem& k, const std::vector<T>& deltas) {
  const auto& members = k.members();
  if (deltas.size() != members.size()) {
    fail(ErrorCode::invalid_input, "need one surplus per member");
  }
  std::vector<T> values(members.size(), T(0));
  for (std::size_t i = 1; i < members.size(); ++i) {
    T acc = deltas[i];
    for (std::size_t j = 1; j < i; ++j) {
      if (is_proper_subset(members[j], members[i])) acc += deltas[j];
    }
    values[i] = acc;
  }
  return IncompleteGame<T>(k, std::move(values));
}

namespace detail {
inline void require_grand(const SetSystem& k) {
  if (!k.has_grand()) {
    fail(ErrorCode::grand_coalition_missing, "the grand coalition is not a known coalition");
  }
}
inline void require_intersection_closed(const SetSystem& k) {
  if (!is_intersection_closed(k)) {
    fail(ErrorCode::not_intersection_closed, "the set system is not intersection-closed");
  }
}
}  // namespace detail

/// P-extendability criterion for intersection-closed systems: all surpluses
/// nonnegative. Refuses non-intersection-closed systems, where the criterion
/// is not known to hold.
template <typename T>
bool is_p_extendable(const IncompleteGame<T>& g, T tol = ScalarTraits<T>::default_tolerance()) {
  detail::require_intersection_closed(g.system());
  for (const T& d : delta_surpluses(g)) {
    if (d < -tol) return false;
  }
  return true;
}

/// The linear system behind the UD dividends, over the closure-class
/// representatives. Depends only on the set system, not on any game.
///
///   coefficients[r][c] = |C(columns[c])| if columns[c] ⊆ rows[r], else 0
///   shapley_map[i][c]  = sum over X in class(columns[c]) with i in X of 1/|X|
///
/// Row r encodes the constraint sum_{T ⊆ rows[r]} delta(T) = v(rows[r]) after
/// merging class-equal dividends; shapley_map maps class dividends to payoffs.
struct UDSystem {
  int players = 0;
  std::vector<Coalition> rows;     // K \ {∅}, ordered by (size, mask)
  std::vector<Coalition> columns;  // C(K) \ {∅}, ordered by (size, mask)
  std::vector<std::vector<long>> coefficients;
  std::vector<std::vector<Rational>> shapley_map;  // players x columns
};

UDSystem build_ud_system(const SetSystem& k);
UDSystem build_ud_system(const SetSystem& k, const ClosurePartition& partition);

/// Right-hand side v(rows[r]) of the UD system for a concrete game.
template <typename T>
std::vector<T> ud_rhs(const IncompleteGame<T>& g, const UDSystem& sys) {
  std::vector<T> rhs;
  rhs.reserve(sys.rows.size());
  for (Coalition s : sys.rows) rhs.push_back(g.value_of(s));
  return rhs;
}

/// UD dividends on an intersection-closed system with a known grand
/// coalition: solved by inclusion-minimal elimination, then broadcast so the
/// dividend is constant on every closure class.
template <typename T>
Dividends<T> ud_dividends(const IncompleteGame<T>& g, const ClosurePartition& partition) {
  detail::require_grand(g.system());
  detail::require_intersection_closed(g.system());

  const auto& members = g.system().members();
  std::vector<T> class_dividend(members.size(), T(0));  // aligned with members
  for (std::size_t i = 1; i < members.size(); ++i) {
    T acc = g.values()[i];
    for (std::size_t j = 1; j < i; ++j) {
      if (is_proper_subset(members[j], members[i])) {
        acc -= T(partition.class_size_of(members[j])) * class_dividend[j];
      }
    }
    class_dividend[i] = acc / T(partition.class_size_of(members[i]));
  }

  const std::size_t size = std::size_t{1} << g.players();
  std::vector<T> d(size, T(0));
  for (std::size_t i = 1; i < members.size(); ++i) {
    for (Coalition x : partition.class_of(members[i]).members) d[x] = class_dividend[i];
  }
  return Dividends<T>(g.players(), std::move(d));
}

template <typename T>
Dividends<T> ud_dividends(const IncompleteGame<T>& g) {
  return ud_dividends(g, ClosurePartition::compute(g.system()));
}

/// Outcome of the value-independent UD uniqueness decision. Decided in exact
/// integer arithmetic: unique iff stacking the payoff map under the
/// constraint matrix does not raise the rank.
struct UniquenessDecision {
  bool unique = false;
  bool has_grand = false;
  bool intersection_closed = false;
  int rank_constraints = -1;  // rank of the coefficient matrix
  int rank_stacked = -1;      // rank of [coefficients; shapley_map]
  int columns = -1;
};

UniquenessDecision decide_ud_uniqueness(const SetSystem& k);

inline bool is_ud_unique(const SetSystem& k) { return decide_ud_uniqueness(k).unique; }

/// The affine solution set of the UD system for a concrete game: one
/// particular solution plus a basis of the homogeneous space, over
/// system.columns. Exposed for inspection of non-unique systems.
struct AffineSolution {
  UDSystem system;
  exactlin::Row particular;
  std::vector<exactlin::Row> nullspace;
};

AffineSolution ud_affine_solution(const IncompleteGame<Rational>& g);

enum class ValueKind { r, ic, ud };

constexpr const char* to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::r: return "r";
    case ValueKind::ic: return "ic";
    case ValueKind::ud: return "ud";
  }
  return "?";
}

/// The completion of an incomplete game whose Shapley value defines the
/// corresponding value:
///   r:  dividends equal to the known-coalition surpluses, zero elsewhere
///   ic: v(S) = v(closure of S)
///   ud: zeta transform of the UD dividends
template <typename T>
CompleteGame<T> special_game(const IncompleteGame<T>& g, ValueKind kind,
                             const ClosurePartition& partition) {
  detail::require_grand(g.system());
  detail::require_intersection_closed(g.system());
  const std::size_t size = std::size_t{1} << g.players();
  switch (kind) {
    case ValueKind::r: {
      std::vector<T> d(size, T(0));
      const std::vector<T> delta = delta_surpluses(g);
      const auto& members = g.system().members();
      for (std::size_t i = 1; i < members.size(); ++i) d[members[i]] = delta[i];
      return to_values(Dividends<T>(g.players(), std::move(d)));
    }
    case ValueKind::ic: {
      std::vector<T> values(size, T(0));
      for (std::size_t s = 1; s < size; ++s) {
        values[s] = g.value_of(partition.closure_of(static_cast<Coalition>(s)));
      }
      return CompleteGame<T>(g.players(), std::move(values));
    }
    case ValueKind::ud:
      return to_values(ud_dividends(g, partition));
  }
  fail(ErrorCode::invalid_input, "unknown game kind");
}

template <typename T>
CompleteGame<T> special_game(const IncompleteGame<T>& g, ValueKind kind) {
  return special_game(g, kind, ClosurePartition::compute(g.system()));
}

/// UD value of a game whose system has a unique UD payoff but need not be
/// intersection-closed; decided and solved exactly.
Allocation<Rational> ud_value_general(const IncompleteGame<Rational>& g);

/// The R-, IC-, or UD-value: the Shapley value of the corresponding special
/// game. For the UD kind, systems that are not intersection-closed are still
/// supported whenever the UD payoff is unique (exact affine path); otherwise
/// the call refuses with ud_not_unique.
template <typename T>
Allocation<T> compute_value(const IncompleteGame<T>& g, ValueKind kind,
                            const ClosurePartition& partition) {
  if (kind == ValueKind::ud) {
    detail::require_grand(g.system());
    if (is_intersection_closed(g.system())) {
      return shapley(ud_dividends(g, partition));
    }
    if constexpr (ScalarTraits<T>::exact) {
      return ud_value_general(g);
    } else {
      std::vector<Rational> exact_values;
      exact_values.reserve(g.values().size());
      for (double v : g.values()) exact_values.push_back(rational_from_double(v));
      const Allocation<Rational> exact =
          ud_value_general(IncompleteGame<Rational>(g.system(), std::move(exact_values)));
      Allocation<double> out;
      out.reserve(exact.size());
      for (const Rational& q : exact) out.push_back(to_double(q));
      return out;
    }
  }
  return shapley(special_game(g, kind, partition));
}

template <typename T>
Allocation<T> compute_value(const IncompleteGame<T>& g, ValueKind kind) {
  return compute_value(g, kind, ClosurePartition::compute(g.system()));
}

/// Draws one positive extension uniformly: within each closure class the
/// dividend vector is uniform on the simplex of nonnegative vectors summing
/// to the class surplus (normalized unit-rate exponentials).
CompleteGame<double> sample_p_extension(const IncompleteGame<double>& g,
                                        const ClosurePartition& partition, std::uint64_t seed);
CompleteGame<double> sample_p_extension(const IncompleteGame<double>& g, std::uint64_t seed);

/// Monte-Carlo mean of the Shapley value over positive extensions; the
/// independent oracle for the UD value. Draw k uses a seed derived from
/// (seed, k), so the mean is identical for a fixed seed regardless of any
/// parallel split.
Allocation<double> expected_shapley_mc(const IncompleteGame<double>& g, long samples,
                                       std::uint64_t seed);

}  // namespace udval
