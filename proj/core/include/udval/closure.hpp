#pragma once

#include <vector>

#include "udval/set_system.hpp"

namespace udval {

/// Closure of T in K: the intersection of all members of K containing T.
/// When no member contains T the intersection over the empty family is the
/// grand coalition (the lattice-theoretic top).
Coalition closure(const SetSystem& k, Coalition t);

/// One equivalence class of the closure relation: all coalitions sharing the
/// same closure. Every member satisfies members[j] ⊆ representative, and the
/// representative itself is always a member of the class.
struct ClosureClass {
  Coalition representative = 0;
  std::vector<Coalition> members;  // ascending mask order

  long size() const { return static_cast<long>(members.size()); }
};

/// The partition of 2^N into closure classes of K, with O(1) lookup from any
/// coalition to its closure and class.
class ClosurePartition {
 public:
  static ClosurePartition compute(const SetSystem& k);

  int players() const { return players_; }

  Coalition closure_of(Coalition t) const { return closure_of_[t]; }

  /// Classes ordered by (|representative|, representative mask).
  const std::vector<ClosureClass>& classes() const { return classes_; }

  std::size_t class_index_of(Coalition t) const { return class_index_[t]; }

  const ClosureClass& class_of(Coalition t) const { return classes_[class_index_[t]]; }

  /// |C(c_K(t))|, the multiplicity used by the UD system.
  long class_size_of(Coalition t) const { return class_of(t).size(); }

 private:
  int players_ = 0;
  std::vector<Coalition> closure_of_;     // size 2^n
  std::vector<std::size_t> class_index_;  // size 2^n
  std::vector<ClosureClass> classes_;
};

}  // namespace udval
