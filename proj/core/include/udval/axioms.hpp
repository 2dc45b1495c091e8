#pragma once

#include <string>
#include <vector>

#include "udval/values.hpp"

namespace udval {

enum class AxiomStatus { satisfied, violated, inapplicable };

constexpr const char* to_string(AxiomStatus status) {
  switch (status) {
    case AxiomStatus::satisfied: return "satisfied";
    case AxiomStatus::violated: return "violated";
    case AxiomStatus::inapplicable: return "inapplicable";
  }
  return "?";
}

/// Outcome of one axiom check on one instance. A violated report always
/// carries enough of the instance (coalition, player pair, the two compared
/// quantities) that re-running the checker reproduces the discrepancy.
struct AxiomReport {
  std::string axiom;
  std::string value_kind;
  AxiomStatus status = AxiomStatus::inapplicable;
  Coalition coalition = kEmptyCoalition;  // S or P where relevant
  int player_i = 0;
  int player_j = 0;
  double lhs = 0.0;  // worst compared pair
  double rhs = 0.0;
  double discrepancy = 0.0;
  std::string note;
};

std::string axiom_report_csv_header();
std::string to_csv_row(const AxiomReport& report);

/// Whether compute_value(kind) is defined on this set system.
inline bool value_defined_on(const SetSystem& k, ValueKind kind) {
  if (kind == ValueKind::ud) return is_ud_unique(k);
  return k.has_grand() && is_intersection_closed(k);
}

namespace axiom_detail {

template <typename T>
AxiomReport base_report(const char* axiom, ValueKind kind) {
  AxiomReport report;
  report.axiom = axiom;
  report.value_kind = to_string(kind);
  return report;
}

template <typename T>
void resolve(AxiomReport& report, const T& worst_gap, const T& tol) {
  report.discrepancy = ScalarTraits<T>::as_double(worst_gap);
  report.status = worst_gap > tol ? AxiomStatus::violated : AxiomStatus::satisfied;
}

}  // namespace axiom_detail

/// Efficiency: payoffs sum to v(N).
template <typename T>
AxiomReport check_efficiency(ValueKind kind, const IncompleteGame<T>& g,
                             T tol = ScalarTraits<T>::default_tolerance()) {
  AxiomReport report = axiom_detail::base_report<T>("efficiency", kind);
  if (!value_defined_on(g.system(), kind)) {
    report.note = "value undefined on this set system";
    return report;
  }
  const Allocation<T> payoff = compute_value(g, kind);
  T sum(0);
  for (const T& x : payoff) sum += x;
  const T grand_value = g.value_of(g.system().grand());
  report.lhs = ScalarTraits<T>::as_double(sum);
  report.rhs = ScalarTraits<T>::as_double(grand_value);
  axiom_detail::resolve(report, ScalarTraits<T>::abs(sum - grand_value), tol);
  return report;
}

/// Additivity: f(v + w) = f(v) + f(w) on a shared set system.
template <typename T>
AxiomReport check_additivity(ValueKind kind, const IncompleteGame<T>& g,
                             const IncompleteGame<T>& h,
                             T tol = ScalarTraits<T>::default_tolerance()) {
  if (!(g.system() == h.system())) {
    fail(ErrorCode::invalid_input, "additivity requires games on the same set system");
  }
  AxiomReport report = axiom_detail::base_report<T>("additivity", kind);
  if (!value_defined_on(g.system(), kind)) {
    report.note = "value undefined on this set system";
    return report;
  }
  const Allocation<T> combined = compute_value(add_games(g, h), kind);
  const Allocation<T> left = compute_value(g, kind);
  const Allocation<T> right = compute_value(h, kind);
  T worst(0);
  for (int i = 0; i < g.players(); ++i) {
    const T gap = ScalarTraits<T>::abs(combined[i] - (left[i] + right[i]));
    if (gap > worst) {
      worst = gap;
      report.player_i = i + 1;
      report.lhs = ScalarTraits<T>::as_double(combined[i]);
      report.rhs = ScalarTraits<T>::as_double(left[i] + right[i]);
    }
  }
  axiom_detail::resolve(report, worst, tol);
  return report;
}

/// Equality: games agreeing on every known coalition get the same payoff.
template <typename T>
AxiomReport check_equality(ValueKind kind, const IncompleteGame<T>& g, const IncompleteGame<T>& h,
                           T tol = ScalarTraits<T>::default_tolerance()) {
  if (!(g.system() == h.system())) {
    fail(ErrorCode::invalid_input, "equality requires games on the same set system");
  }
  AxiomReport report = axiom_detail::base_report<T>("equality", kind);
  if (g.values() != h.values()) {
    report.note = "games differ on a known coalition";
    return report;
  }
  if (!value_defined_on(g.system(), kind)) {
    report.note = "value undefined on this set system";
    return report;
  }
  const Allocation<T> left = compute_value(g, kind);
  const Allocation<T> right = compute_value(h, kind);
  T worst(0);
  for (int i = 0; i < g.players(); ++i) {
    const T gap = ScalarTraits<T>::abs(left[i] - right[i]);
    if (gap > worst) {
      worst = gap;
      report.player_i = i + 1;
      report.lhs = ScalarTraits<T>::as_double(left[i]);
      report.rhs = ScalarTraits<T>::as_double(right[i]);
    }
  }
  axiom_detail::resolve(report, worst, tol);
  return report;
}

/// φ-consistency: on a complete system the value is the Shapley value.
template <typename T>
AxiomReport check_phi_consistency(ValueKind kind, const IncompleteGame<T>& g,
                                  T tol = ScalarTraits<T>::default_tolerance()) {
  AxiomReport report = axiom_detail::base_report<T>("phi_consistency", kind);
  if (g.system().size() != (std::size_t{1} << g.players())) {
    report.note = "requires the full power set";
    return report;
  }
  std::vector<T> table(g.values().begin(), g.values().end());
  const Allocation<T> reference = shapley(CompleteGame<T>(g.players(), std::move(table)));
  const Allocation<T> payoff = compute_value(g, kind);
  T worst(0);
  for (int i = 0; i < g.players(); ++i) {
    const T gap = ScalarTraits<T>::abs(payoff[i] - reference[i]);
    if (gap > worst) {
      worst = gap;
      report.player_i = i + 1;
      report.lhs = ScalarTraits<T>::as_double(payoff[i]);
      report.rhs = ScalarTraits<T>::as_double(reference[i]);
    }
  }
  axiom_detail::resolve(report, worst, tol);
  return report;
}

/// Membership in the UD class: dividends constant on every closure class.
template <typename T>
bool is_in_ud_class(const CompleteGame<T>& w, const SetSystem& k,
                    T tol = ScalarTraits<T>::default_tolerance()) {
  if (w.players != k.players()) fail(ErrorCode::invalid_input, "player count mismatch");
  const Dividends<T> div = to_dividends(w);
  const ClosurePartition partition = ClosurePartition::compute(k);
  for (const ClosureClass& cls : partition.classes()) {
    for (Coalition x : cls.members) {
      if (ScalarTraits<T>::abs(div.d[x] - div.d[cls.representative]) > tol) return false;
    }
  }
  return true;
}

enum class UdClassAxiom { null_player, equal_treatment };

/// The weakened Shapley axioms quantified over the UD class only: null
/// players of w get payoff 0, equal players of w get equal payoffs, under the
/// UD value of (K, w restricted to K).
template <typename T>
AxiomReport check_ud_class_axiom(const CompleteGame<T>& w, const SetSystem& k, UdClassAxiom which,
                                 T tol = ScalarTraits<T>::default_tolerance()) {
  AxiomReport report = axiom_detail::base_report<T>(
      which == UdClassAxiom::null_player ? "ic_null_player" : "ic_equal_treatment", ValueKind::ud);
  if (!is_in_ud_class(w, k, tol)) {
    report.note = "game is outside the UD class of this set system";
    return report;
  }
  if (!value_defined_on(k, ValueKind::ud)) {
    report.note = "value undefined on this set system";
    return report;
  }
  const Allocation<T> payoff = compute_value(restrict_to(w, k), ValueKind::ud);
  const int n = w.players;
  const std::size_t size = w.values.size();
  T worst(0);
  bool any_subject = false;

  if (which == UdClassAxiom::null_player) {
    for (int i = 1; i <= n; ++i) {
      const std::size_t bit = std::size_t{1} << (i - 1);
      bool null_player = true;
      for (std::size_t s = 0; s < size && null_player; ++s) {
        if (s & bit) continue;
        if (ScalarTraits<T>::abs(w.values[s | bit] - w.values[s]) > tol) null_player = false;
      }
      if (!null_player) continue;
      any_subject = true;
      const T gap = ScalarTraits<T>::abs(payoff[i - 1]);
      if (gap >= worst) {
        worst = gap;
        report.player_i = i;
        report.lhs = ScalarTraits<T>::as_double(payoff[i - 1]);
        report.rhs = 0.0;
      }
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const std::size_t bit_i = std::size_t{1} << (i - 1);
        const std::size_t bit_j = std::size_t{1} << (j - 1);
        bool equal = true;
        for (std::size_t s = 0; s < size && equal; ++s) {
          if (s & (bit_i | bit_j)) continue;
          if (ScalarTraits<T>::abs(w.values[s | bit_i] - w.values[s | bit_j]) > tol) equal = false;
        }
        if (!equal) continue;
        any_subject = true;
        const T gap = ScalarTraits<T>::abs(payoff[i - 1] - payoff[j - 1]);
        if (gap >= worst) {
          worst = gap;
          report.player_i = i;
          report.player_j = j;
          report.lhs = ScalarTraits<T>::as_double(payoff[i - 1]);
          report.rhs = ScalarTraits<T>::as_double(payoff[j - 1]);
        }
      }
    }
  }
  if (!any_subject) {
    report.status = AxiomStatus::satisfied;
    report.note = which == UdClassAxiom::null_player ? "no null players" : "no equal players";
    return report;
  }
  axiom_detail::resolve(report, worst, tol);
  return report;
}

/// Fairness: losing the value of S shifts every member of S equally.
template <typename T>
AxiomReport check_fairness(ValueKind kind, const IncompleteGame<T>& g, Coalition s,
                           T tol = ScalarTraits<T>::default_tolerance()) {
  if (!g.system().contains(s)) fail(ErrorCode::invalid_input, "S must be a known coalition");
  if (s == kEmptyCoalition || s == g.system().grand()) {
    fail(ErrorCode::invalid_input, "S must be a proper nonempty known coalition");
  }
  AxiomReport report = axiom_detail::base_report<T>("fairness", kind);
  report.coalition = s;

  const SetSystem reduced_system = g.system().without(s);
  if (!value_defined_on(g.system(), kind) || !value_defined_on(reduced_system, kind)) {
    report.note = "value undefined on the original or reduced system";
    return report;
  }

  std::vector<T> reduced_values;
  reduced_values.reserve(g.values().size() - 1);
  for (std::size_t i = 0; i < g.system().members().size(); ++i) {
    if (g.system().members()[i] != s) reduced_values.push_back(g.values()[i]);
  }
  const Allocation<T> before = compute_value(g, kind);
  const Allocation<T> after =
      compute_value(IncompleteGame<T>(reduced_system, std::move(reduced_values)), kind);

  T worst(0);
  for (int i = 1; i <= g.players(); ++i) {
    if (!contains_player(s, i)) continue;
    for (int j = i + 1; j <= g.players(); ++j) {
      if (!contains_player(s, j)) continue;
      const T delta_i = before[i - 1] - after[i - 1];
      const T delta_j = before[j - 1] - after[j - 1];
      const T gap = ScalarTraits<T>::abs(delta_i - delta_j);
      if (gap >= worst) {
        worst = gap;
        report.player_i = i;
        report.player_j = j;
        report.lhs = ScalarTraits<T>::as_double(delta_i);
        report.rhs = ScalarTraits<T>::as_double(delta_j);
      }
    }
  }
  axiom_detail::resolve(report, worst, tol);
  return report;
}

/// Balanced contributions: i's loss from j's withdrawal equals j's loss from
/// i's withdrawal. Inapplicable when a reduced system loses its grand
/// coalition or leaves the value's domain.
template <typename T>
AxiomReport check_balanced_contributions(ValueKind kind, const IncompleteGame<T>& g, int i, int j,
                                         T tol = ScalarTraits<T>::default_tolerance()) {
  const int n = g.players();
  if (i < 1 || i > n || j < 1 || j > n) fail(ErrorCode::invalid_input, "player out of range");
  if (i == j) fail(ErrorCode::invalid_input, "players must differ");
  AxiomReport report = axiom_detail::base_report<T>("balanced_contributions", kind);
  report.player_i = i;
  report.player_j = j;
  if (!value_defined_on(g.system(), kind)) {
    report.note = "value undefined on this set system";
    return report;
  }
  const PlayerRemoval<T> without_i = remove_player(g, i);
  const PlayerRemoval<T> without_j = remove_player(g, j);
  if (!without_i.game.system().has_grand() || !without_j.game.system().has_grand() ||
      !value_defined_on(without_i.game.system(), kind) ||
      !value_defined_on(without_j.game.system(), kind)) {
    report.note = "value undefined after a withdrawal";
    return report;
  }
  auto reduced_index = [](const std::vector<int>& labels, int player) {
    for (std::size_t idx = 0; idx < labels.size(); ++idx) {
      if (labels[idx] == player) return static_cast<int>(idx);
    }
    fail(ErrorCode::invalid_input, "player not present after removal");
  };
  const Allocation<T> full = compute_value(g, kind);
  const Allocation<T> no_j = compute_value(without_j.game, kind);
  const Allocation<T> no_i = compute_value(without_i.game, kind);
  const T lhs = full[i - 1] - no_j[reduced_index(without_j.old_player_of_new, i)];
  const T rhs = full[j - 1] - no_i[reduced_index(without_i.old_player_of_new, j)];
  report.lhs = ScalarTraits<T>::as_double(lhs);
  report.rhs = ScalarTraits<T>::as_double(rhs);
  axiom_detail::resolve(report, ScalarTraits<T>::abs(lhs - rhs), tol);
  return report;
}

/// All coalitions of partners: P with |P| >= 2 such that no proper part of P
/// demonstrably contributes to any known coalition not containing all of P.
/// For S in K with P \ S nonempty, either S \ P is known and worth the same
/// as S, or S \ P is unknown and every known proper subset of S is worthless.
template <typename T>
std::vector<Coalition> find_partner_coalitions(const IncompleteGame<T>& g,
                                               T tol = ScalarTraits<T>::default_tolerance()) {
  const Coalition grand = g.system().grand();
  const auto& members = g.system().members();
  std::vector<Coalition> partners;
  for (Coalition p = 1; p <= grand; ++p) {
    if (coalition_size(p) < 2) continue;
    bool ok = true;
    for (std::size_t idx = 0; idx < members.size() && ok; ++idx) {
      const Coalition s = members[idx];
      if ((p & ~s) == 0) continue;  // P ⊆ S: exempt
      const Coalition stripped = s & ~p;
      if (g.system().contains(stripped)) {
        if (ScalarTraits<T>::abs(g.values()[idx] - g.value_of(stripped)) > tol) ok = false;
      } else {
        for (std::size_t t = 0; t < members.size() && ok; ++t) {
          if (is_proper_subset(members[t], s) &&
              ScalarTraits<T>::abs(g.values()[t]) > tol) {
            ok = false;
          }
        }
      }
    }
    if (ok) partners.push_back(p);
  }
  return partners;
}

/// Symmetric partnership: members of a coalition of partners get equal pay.
template <typename T>
AxiomReport check_symmetric_partnership(ValueKind kind, const IncompleteGame<T>& g, Coalition p,
                                        T tol = ScalarTraits<T>::default_tolerance()) {
  AxiomReport report = axiom_detail::base_report<T>("symmetric_partnership", kind);
  report.coalition = p;
  const std::vector<Coalition> partners = find_partner_coalitions(g, tol);
  if (std::find(partners.begin(), partners.end(), p) == partners.end()) {
    report.note = "not a coalition of partners";
    return report;
  }
  if (!value_defined_on(g.system(), kind)) {
    report.note = "value undefined on this set system";
    return report;
  }
  const Allocation<T> payoff = compute_value(g, kind);
  T worst(0);
  for (int i = 1; i <= g.players(); ++i) {
    if (!contains_player(p, i)) continue;
    for (int j = i + 1; j <= g.players(); ++j) {
      if (!contains_player(p, j)) continue;
      const T gap = ScalarTraits<T>::abs(payoff[i - 1] - payoff[j - 1]);
      if (gap >= worst) {
        worst = gap;
        report.player_i = i;
        report.player_j = j;
        report.lhs = ScalarTraits<T>::as_double(payoff[i - 1]);
        report.rhs = ScalarTraits<T>::as_double(payoff[j - 1]);
      }
    }
  }
  axiom_detail::resolve(report, worst, tol);
  return report;
}

/// Runs every applicable axiom check on one game for all three value kinds;
/// the CLI audit surface. The seed feeds the random partner games used by
/// the additivity check.
std::vector<AxiomReport> audit_game(const IncompleteGame<double>& g, std::uint64_t seed);

}  // namespace udval
