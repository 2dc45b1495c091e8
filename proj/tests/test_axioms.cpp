#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "udval/axioms.hpp"
#include "udval/enumeration.hpp"
#include "udval/experiments.hpp"
#include "udval/game_io.hpp"

using namespace udval;

namespace {

std::string fixture(const char* name) {
  return std::string(UDVAL_FIXTURES_DIR) + "/" + name;
}

IncompleteGame<Rational> example1() { return parse_game_file_exact(fixture("example1.game")); }
IncompleteGame<Rational> example3() { return parse_game_file_exact(fixture("example3.game")); }

}  // namespace

TEST_CASE("efficiency and additivity hold for every kind") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const SetSystem k = sample_system(4, SampleMode::ic_biased, 7100 + seed);
    const IncompleteGame<double> g = random_game(k, seed);
    const IncompleteGame<double> h = random_game(k, 5000 + seed);
    for (ValueKind kind : {ValueKind::ud, ValueKind::r, ValueKind::ic}) {
      CHECK(check_efficiency(kind, g).status == AxiomStatus::satisfied);
      CHECK(check_additivity(kind, g, h).status == AxiomStatus::satisfied);
      CHECK(check_equality(kind, g, g).status == AxiomStatus::satisfied);
    }
  }
}

TEST_CASE("the weakened Shapley axiom set over the exhaustive n=3 census") {
  for (const SetSystem& k : all_ic_systems(3)) {
    const IncompleteGame<double> g = random_game(k, k.encoding_u64());
    const IncompleteGame<double> h = random_game(k, k.encoding_u64() + 1);
    CHECK(check_efficiency(ValueKind::ud, g).status == AxiomStatus::satisfied);
    CHECK(check_additivity(ValueKind::ud, g, h).status == AxiomStatus::satisfied);
    CHECK(check_equality(ValueKind::ud, g, g).status == AxiomStatus::satisfied);
    if (k.size() == 8) {
      CHECK(check_phi_consistency(ValueKind::ud, g).status == AxiomStatus::satisfied);
    }
    const CompleteGame<double> completion = special_game(g, ValueKind::ud);
    CHECK(check_ud_class_axiom(completion, k, UdClassAxiom::null_player).status ==
          AxiomStatus::satisfied);
    CHECK(check_ud_class_axiom(completion, k, UdClassAxiom::equal_treatment).status ==
          AxiomStatus::satisfied);
  }
}

TEST_CASE("phi-consistency on complete systems") {
  const IncompleteGame<double> g = random_game(SetSystem::power_set(3), 9);
  for (ValueKind kind : {ValueKind::ud, ValueKind::r, ValueKind::ic}) {
    CHECK(check_phi_consistency(kind, g).status == AxiomStatus::satisfied);
  }
  // incomplete system: not applicable
  const IncompleteGame<double> partial(SetSystem::from_members(2, {0, 3}), {0, 1});
  CHECK(check_phi_consistency(ValueKind::ud, partial).status == AxiomStatus::inapplicable);
}

TEST_CASE("basis games certify the weakened Shapley axioms") {
  const SetSystem chain = SetSystem::from_members(3, {0, 1, 3, 7});
  for (Coalition s : chain.members()) {
    if (s == kEmptyCoalition) continue;
    const CompleteGame<double> b = basis_game<double>(BasisKind::half_dividend, s, 3);
    CHECK(is_in_ud_class(b, chain));
    CHECK(check_ud_class_axiom(b, chain, UdClassAxiom::null_player).status ==
          AxiomStatus::satisfied);
    CHECK(check_ud_class_axiom(b, chain, UdClassAxiom::equal_treatment).status ==
          AxiomStatus::satisfied);
  }

  // a game with class-dependent dividends falls outside the UD class
  const CompleteGame<double> outside(3, {0, 0, 0, 0, 0.5, 0.5, 0.5, 1.0});
  CHECK_FALSE(is_in_ud_class(outside, chain));
  CHECK(check_ud_class_axiom(outside, chain, UdClassAxiom::null_player).status ==
        AxiomStatus::inapplicable);
}

TEST_CASE("fairness fails for UD on Example 1 and holds for R") {
  const IncompleteGame<Rational> g = example1();
  const AxiomReport ud = check_fairness(ValueKind::ud, g, 3);
  CHECK(ud.status == AxiomStatus::violated);
  // players 1 and 2 move from 5/24 each to 2/9 and 7/18: the shifts differ
  // by |(-1/72) - (-13/72)| = 1/6
  CHECK(ud.discrepancy == doctest::Approx(1.0 / 6).epsilon(1e-12));
  CHECK(ud.discrepancy > 10 * 1e-9);

  CHECK(check_fairness(ValueKind::r, g, 3).status == AxiomStatus::satisfied);

  CHECK_THROWS_AS(check_fairness(ValueKind::ud, g, 5), DomainError);   // {1,3} unknown
  CHECK_THROWS_AS(check_fairness(ValueKind::ud, g, 7), DomainError);   // grand coalition
}

TEST_CASE("fairness is inapplicable when the reduced system leaves the domain") {
  // dropping {1} from {∅,{1},{12},{13},N} leaves a non-intersection-closed
  // system, which at n=3 never has a unique UD payoff
  const SetSystem k = SetSystem::from_members(3, {0, 1, 3, 5, 7});
  REQUIRE(is_intersection_closed(k));
  const IncompleteGame<double> g = random_game(k, 3);
  CHECK(check_fairness(ValueKind::ud, g, 1).status == AxiomStatus::inapplicable);
  CHECK(check_fairness(ValueKind::r, g, 1).status == AxiomStatus::inapplicable);
}

TEST_CASE("balanced contributions holds on every small intersection-closed instance") {
  // The UD completion commutes with player removal on intersection-closed
  // systems: for X not containing j, any member S with X ⊆ S intersects the
  // j-free closure of X into a j-free member, so the j-free closure equals
  // the full closure, and the reduced dividends are the restriction of the
  // full ones. So no violation exists on these systems; checked exhaustively
  // for n = 3.
  long applicable = 0;
  for (const SetSystem& k : all_ic_systems(3)) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const IncompleteGame<Rational> g = random_rational_game(k, 40 + seed, 1 << 10);
      for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) {
          const AxiomReport report =
              check_balanced_contributions(ValueKind::ud, g, i, j, Rational(0));
          CHECK(report.status != AxiomStatus::violated);
          if (report.status == AxiomStatus::satisfied) ++applicable;
        }
      }
    }
  }
  CHECK(applicable > 0);
}

TEST_CASE("balanced contributions on the power set") {
  const IncompleteGame<double> g = random_game(SetSystem::power_set(4), 77);
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      CHECK(check_balanced_contributions(ValueKind::ud, g, i, j).status ==
            AxiomStatus::satisfied);
    }
  }
  CHECK_THROWS_AS(check_balanced_contributions(ValueKind::ud, g, 2, 2), DomainError);
}

TEST_CASE("balanced contributions inapplicable when a withdrawal breaks the domain") {
  const IncompleteGame<Rational> g = parse_game_file_exact(fixture("example2.game"));
  // removing player 2 leaves {∅,{1}} over {1,3}: no grand coalition
  CHECK(check_balanced_contributions(ValueKind::ud, g, 1, 2, Rational(0)).status ==
        AxiomStatus::inapplicable);
}

TEST_CASE("partner coalitions of the worked example") {
  const std::vector<Coalition> partners = find_partner_coalitions(example3(), Rational(0));
  CHECK(std::find(partners.begin(), partners.end(), Coalition{3}) != partners.end());

  // additive game with nonzero singleton worths: no partners
  std::vector<double> weights{1, 2, 3};
  std::vector<double> values(8, 0.0);
  for (Coalition s = 1; s < 8; ++s) {
    for (int i = 0; i < 3; ++i) {
      if (s & (1u << i)) values[s] += weights[i];
    }
  }
  const IncompleteGame<double> additive =
      restrict_to(CompleteGame<double>(3, values), SetSystem::power_set(3));
  CHECK(find_partner_coalitions(additive).empty());

  // the all-zero game: every coalition of size >= 2 qualifies
  const IncompleteGame<double> zero(example3().system(), std::vector<double>(6, 0.0));
  CHECK(find_partner_coalitions(zero).size() == 4);  // {12},{13},{23},N
}

TEST_CASE("symmetric partnership fails on Example 3") {
  const IncompleteGame<Rational> g = example3();

  const AxiomReport ud = check_symmetric_partnership(ValueKind::ud, g, 3, Rational(0));
  CHECK(ud.status == AxiomStatus::violated);
  CHECK(ud.lhs == doctest::Approx(0.0));
  CHECK(ud.rhs == doctest::Approx(0.25));
  CHECK(ud.discrepancy > 10 * 1e-9);

  // the R payoff of this game is (0, 1/2, 1/2): the partnership {1,2} is
  // split as well, so the R kind also reports a violation here
  const AxiomReport r = check_symmetric_partnership(ValueKind::r, g, 3, Rational(0));
  CHECK(r.status == AxiomStatus::violated);
  CHECK(r.rhs == doctest::Approx(0.5));

  // a fully symmetric game keeps every partnership satisfied
  const IncompleteGame<Rational> symmetric(
      SetSystem::from_members(2, {0, 3}), {Rational(0), Rational(1)});
  const AxiomReport sym = check_symmetric_partnership(ValueKind::ud, symmetric, 3, Rational(0));
  CHECK(sym.status == AxiomStatus::satisfied);

  // {2,3} is a partner coalition too (payoffs 1/4 vs 3/4: violated again)
  const AxiomReport other = check_symmetric_partnership(ValueKind::ud, g, 6, Rational(0));
  CHECK(other.status == AxiomStatus::violated);

  // {1,3} is not: v({2,3}) = 1 differs from v({2}) = 0
  const AxiomReport not_partner = check_symmetric_partnership(ValueKind::ud, g, 5, Rational(0));
  CHECK(not_partner.status == AxiomStatus::inapplicable);
}

TEST_CASE("invariance from irrelevant changes") {
  // the UD completion of (K, v), replayed on the full power set, must get
  // the same payoff: f^K(v) = f^{2^N}(v_UD)
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SetSystem k = sample_system(4, SampleMode::ic_biased, 910 + seed);
    const IncompleteGame<Rational> g = random_rational_game(k, seed);
    const CompleteGame<Rational> completion = special_game(g, ValueKind::ud);
    const IncompleteGame<Rational> replay = restrict_to(completion, SetSystem::power_set(4));
    CHECK(compute_value(g, ValueKind::ud) == compute_value(replay, ValueKind::ud));
  }
}

TEST_CASE("audit produces one report per applicable check") {
  const IncompleteGame<double> g =
      parse_game_file(fixture("example3.game"));
  const std::vector<AxiomReport> reports = audit_game(g, 7);
  CHECK(reports.size() > 10);
  long violated = 0;
  for (const AxiomReport& report : reports) {
    if (report.status == AxiomStatus::violated) ++violated;
    const std::string row = to_csv_row(report);
    CHECK(row.find(report.axiom) == 0);
  }
  CHECK(violated >= 1);  // at least the symmetric-partnership violation
}
