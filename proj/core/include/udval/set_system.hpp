#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "udval/coalition.hpp"

namespace udval {

/// A family of coalitions over n players. The empty coalition is always a
/// member. Immutable after construction; the modifiers return new systems.
///
/// The canonical wire representation is the 2^n-bit membership integer: bit m
/// is set iff the coalition whose mask is m belongs to the family.
class SetSystem {
 public:
  /// The family {∅}.
  explicit SetSystem(int players);

  /// Builds a system from explicit members; ∅ is forced in, duplicates are
  /// collapsed. Throws on masks out of range.
  static SetSystem from_members(int players, const std::vector<Coalition>& members);

  /// Decodes a 2^n-bit membership integer. Bit 0 (∅) is forced on.
  static SetSystem from_encoding(int players, const mpz_class& encoding);

  static SetSystem power_set(int players);

  int players() const { return players_; }
  Coalition grand() const { return grand_coalition(players_); }
  bool has_grand() const { return contains(grand()); }

  std::size_t size() const { return members_.size(); }
  bool contains(Coalition c) const { return c < present_.size() && present_[c]; }

  /// Members in ascending mask order; members()[0] is always ∅.
  const std::vector<Coalition>& members() const { return members_; }

  /// Position of c within members(), if present.
  std::optional<std::size_t> index_of(Coalition c) const;

  /// The 2^n-bit membership integer (decimal wire form via get_str()).
  mpz_class encoding() const;

  /// For n <= 6 the encoding fits a machine word.
  std::uint64_t encoding_u64() const;

  SetSystem with(Coalition c) const;

  /// Removes a member; ∅ cannot be removed.
  SetSystem without(Coalition c) const;

  bool operator==(const SetSystem& other) const {
    return players_ == other.players_ && members_ == other.members_;
  }

 private:
  SetSystem(int players, std::vector<Coalition> members, std::vector<bool> present);

  int players_;
  std::vector<Coalition> members_;  // sorted ascending, always starts with 0
  std::vector<bool> present_;       // size 2^players
};

/// S, T in K implies S ∩ T in K.
bool is_intersection_closed(const SetSystem& k);

/// Minimal intersection-closed superset (closure under pairwise
/// intersections to a fixpoint).
SetSystem intersection_closure(const SetSystem& k);

}  // namespace udval
