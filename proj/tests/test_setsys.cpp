#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "udval/closure.hpp"
#include "udval/enumeration.hpp"
#include "udval/set_system.hpp"

using namespace udval;

namespace {

SetSystem chain3() {
  // {∅, {1}, {1,2}, {1,2,3}}
  return SetSystem::from_members(3, {0, 1, 3, 7});
}

SetSystem pairs3() {
  // {∅, {1,2}, {1,3}, {2,3}, N}
  return SetSystem::from_members(3, {0, 3, 5, 6, 7});
}

SetSystem example2_system() {
  // {∅, {1}, {2}, {1,2}, {2,3}, {1,2,3}}
  return SetSystem::from_members(3, {0, 1, 2, 3, 6, 7});
}

}  // namespace

TEST_CASE("coalition encoding") {
  CHECK(encode_coalition({1, 2, 5}, 5) == 19);
  CHECK(encode_coalition({}, 3) == 0);
  CHECK(encode_coalition({1, 2, 3}, 3) == 7);
  CHECK(decode_coalition(19, 5) == std::vector<int>{1, 2, 5});
  CHECK(decode_coalition(0, 3).empty());

  CHECK_THROWS_AS(encode_coalition({4}, 3), DomainError);
  CHECK_THROWS_AS(encode_coalition({1, 1}, 3), DomainError);
  CHECK_THROWS_AS(decode_coalition(8, 3), DomainError);

  // decode(encode(S)) = S for every subset of {1..n}
  for (Coalition c = 0; c < 32; ++c) {
    CHECK(encode_coalition(decode_coalition(c, 5), 5) == c);
  }
}

TEST_CASE("set system encoding") {
  // Bit m of the membership integer marks the coalition whose mask is m.
  CHECK(SetSystem::from_members(3, {0, 1, 2, 7}).encoding() == 135);
  CHECK(chain3().encoding() == 139);
  CHECK(SetSystem::from_members(2, {0}).encoding() == 1);
  CHECK(SetSystem::power_set(3).encoding() == 255);

  const SetSystem decoded = SetSystem::from_encoding(3, mpz_class(135));
  CHECK(decoded.members() == std::vector<Coalition>{0, 1, 2, 7});
  CHECK(decoded.encoding_u64() == 135);

  // ∅ is forced in by both constructors
  CHECK(SetSystem::from_encoding(3, mpz_class(2)).contains(0));
  CHECK(SetSystem::from_members(3, {5}).contains(0));

  CHECK_THROWS_AS(SetSystem::from_members(3, {8}), DomainError);
  CHECK_THROWS_AS(SetSystem::from_encoding(2, mpz_class(1) << 17), DomainError);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SetSystem k = sample_system(4, SampleMode::uniform, seed);
    CHECK(SetSystem::from_encoding(4, k.encoding()) == k);
  }
}

TEST_CASE("closure of a coalition") {
  const SetSystem k = example2_system();
  CHECK(closure(k, 4) == 6);  // {3} -> {2,3}
  for (Coalition s : k.members()) CHECK(closure(k, s) == s);

  CHECK(closure(chain3(), 6) == 7);  // {2,3} -> N: only superset in K
  // no member contains T: the empty intersection is the grand coalition
  CHECK(closure(SetSystem::from_members(3, {0, 1}), 2) == 7);
}

TEST_CASE("closure partition of the chain") {
  const ClosurePartition partition = ClosurePartition::compute(chain3());
  REQUIRE(partition.classes().size() == 4);
  CHECK(partition.classes()[0].representative == 0);
  CHECK(partition.classes()[0].members == std::vector<Coalition>{0});
  CHECK(partition.classes()[1].representative == 1);
  CHECK(partition.classes()[1].members == std::vector<Coalition>{1});
  CHECK(partition.classes()[2].representative == 3);
  CHECK(partition.classes()[2].members == std::vector<Coalition>{2, 3});
  CHECK(partition.classes()[3].representative == 7);
  CHECK(partition.classes()[3].members == std::vector<Coalition>{4, 5, 6, 7});
}

TEST_CASE("closure partition of the power set is discrete") {
  const ClosurePartition partition = ClosurePartition::compute(SetSystem::power_set(3));
  CHECK(partition.classes().size() == 8);
  for (const ClosureClass& cls : partition.classes()) CHECK(cls.size() == 1);
}

TEST_CASE("closures can leave the system") {
  const ClosurePartition partition = ClosurePartition::compute(pairs3());
  CHECK(partition.classes().size() == 8);  // |C(K)| = 8 > |K| = 5
  CHECK(partition.closure_of(1) == 1);     // c({1}) = {1} although {1} is unknown
}

TEST_CASE("closure operator laws on random systems") {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const SetSystem k = sample_system(n, SampleMode::uniform, 1000 * n + seed);
      const ClosurePartition partition = ClosurePartition::compute(k);
      const Coalition grand = k.grand();
      long total = 0;
      for (const ClosureClass& cls : partition.classes()) total += cls.size();
      CHECK(total == (1 << n));
      for (Coalition s : k.members()) CHECK(partition.closure_of(s) == s);
      for (Coalition t = 0; t <= grand; ++t) {
        const Coalition c = partition.closure_of(t);
        CHECK(is_subset(t, c));                      // extensive
        CHECK(partition.closure_of(c) == c);         // idempotent
        for (Coalition s = t;; s = (s + 1) | t) {    // monotone over supersets
          CHECK(is_subset(partition.closure_of(t), partition.closure_of(s)));
          if (s == grand) break;
        }
      }
    }
  }
}

TEST_CASE("intersection-closedness") {
  CHECK(is_intersection_closed(chain3()));
  CHECK_FALSE(is_intersection_closed(pairs3()));  // {1,2} ∩ {1,3} = {1} unknown
  CHECK(is_intersection_closed(SetSystem::power_set(3)));
  CHECK(is_intersection_closed(example2_system()));
}

TEST_CASE("intersection closure is the minimal closed superset") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SetSystem k = sample_system(4, SampleMode::uniform, 77 + seed);
    const SetSystem closed = intersection_closure(k);
    CHECK(is_intersection_closed(closed));
    for (Coalition c : k.members()) CHECK(closed.contains(c));
    for (Coalition added : closed.members()) {
      if (k.contains(added)) continue;
      CHECK_FALSE(is_intersection_closed(closed.without(added)));
    }
  }
}

TEST_CASE("system enumeration") {
  SystemEnumerator stream(3, true);
  CHECK(stream.count() == 64);

  mpz_class previous(-1);
  long visited = 0;
  long ic = 0;
  while (auto k = stream.next()) {
    CHECK(k->contains(0));
    CHECK(k->has_grand());
    const mpz_class enc = k->encoding();
    CHECK(enc > previous);  // ascending membership-mask order
    previous = enc;
    ++visited;
    if (is_intersection_closed(*k)) ++ic;
  }
  CHECK(visited == 64);
  CHECK(ic == 45);

  CHECK(SystemEnumerator(2, true).count() == 4);
  CHECK(SystemEnumerator(4, true).count() == 16384);
  CHECK(SystemEnumerator(3, false).count() == 128);
  CHECK_THROWS_AS(SystemEnumerator(5, true), DomainError);
}

TEST_CASE("system sampling") {
  const SetSystem a = sample_system(3, SampleMode::uniform, 42);
  const SetSystem b = sample_system(3, SampleMode::uniform, 42);
  CHECK(a == b);
  CHECK(a.has_grand());

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(is_intersection_closed(sample_system(4, SampleMode::ic_biased, seed)));
  }
}

TEST_CASE("fraction of uniform n=5 systems that is intersection-closed") {
  // the true proportion is about 1.28e-3
  const long draws = 100000;
  long hits = 0;
  for (long i = 0; i < draws; ++i) {
    if (is_intersection_closed(sample_system(5, SampleMode::uniform, derive_seed(9001, 5, i)))) {
      ++hits;
    }
  }
  const double fraction = static_cast<double>(hits) / static_cast<double>(draws);
  CHECK(fraction > 0.0008);
  CHECK(fraction < 0.0019);
}

TEST_CASE("membership mask agrees with iteration") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SetSystem k = sample_system(4, SampleMode::uniform, 31 + seed);
    std::set<Coalition> listed(k.members().begin(), k.members().end());
    for (Coalition c = 0; c <= k.grand(); ++c) {
      CHECK(k.contains(c) == (listed.count(c) > 0));
      CHECK(k.index_of(c).has_value() == k.contains(c));
      if (auto idx = k.index_of(c)) CHECK(k.members()[*idx] == c);
    }
  }
}
