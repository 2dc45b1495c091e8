#include "udval/closure.hpp"

#include <algorithm>
#include <map>

namespace udval {

Coalition closure(const SetSystem& k, Coalition t) {
  if (t > k.grand()) fail(ErrorCode::invalid_input, "coalition mask out of range");
  Coalition acc = k.grand();
  for (Coalition s : k.members()) {
    if (is_subset(t, s)) acc &= s;
  }
  return acc;
}

ClosurePartition ClosurePartition::compute(const SetSystem& k) {
  ClosurePartition partition;
  partition.players_ = k.players();
  const std::size_t size = std::size_t{1} << k.players();
  partition.closure_of_.resize(size);
  partition.class_index_.resize(size);

  const Coalition grand = k.grand();
  for (std::size_t t = 0; t < size; ++t) {
    Coalition acc = grand;
    for (Coalition s : k.members()) {
      if (is_subset(static_cast<Coalition>(t), s)) acc &= s;
    }
    partition.closure_of_[t] = acc;
  }

  std::map<Coalition, std::vector<Coalition>, BySizeThenMask> buckets;
  for (std::size_t t = 0; t < size; ++t) {
    buckets[partition.closure_of_[t]].push_back(static_cast<Coalition>(t));
  }
  partition.classes_.reserve(buckets.size());
  std::vector<std::size_t> index_of_rep(size, 0);
  for (auto& [rep, members] : buckets) {
    index_of_rep[rep] = partition.classes_.size();
    partition.classes_.push_back(ClosureClass{rep, std::move(members)});
  }
  for (std::size_t t = 0; t < size; ++t) {
    partition.class_index_[t] = index_of_rep[partition.closure_of_[t]];
  }
  return partition;
}

}  // namespace udval
