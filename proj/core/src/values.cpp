#include "udval/values.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "udval/enumeration.hpp"

namespace udval {

UDSystem build_ud_system(const SetSystem& k, const ClosurePartition& partition) {
  UDSystem sys;
  sys.players = k.players();

  sys.rows.assign(k.members().begin() + 1, k.members().end());
  std::sort(sys.rows.begin(), sys.rows.end(), BySizeThenMask{});

  for (const ClosureClass& cls : partition.classes()) {
    if (cls.representative != kEmptyCoalition) sys.columns.push_back(cls.representative);
  }
  // classes() are already ordered by (size, mask)

  sys.coefficients.assign(sys.rows.size(), std::vector<long>(sys.columns.size(), 0));
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    for (std::size_t c = 0; c < sys.columns.size(); ++c) {
      if (is_subset(sys.columns[c], sys.rows[r])) {
        sys.coefficients[r][c] = partition.class_size_of(sys.columns[c]);
      }
    }
  }

  sys.shapley_map.assign(sys.players, std::vector<Rational>(sys.columns.size(), Rational(0)));
  for (std::size_t c = 0; c < sys.columns.size(); ++c) {
    for (Coalition x : partition.class_of(sys.columns[c]).members) {
      if (x == kEmptyCoalition) continue;
      const Rational share = ScalarTraits<Rational>::fraction(1, coalition_size(x));
      for (int i = 0; i < sys.players; ++i) {
        if (contains_player(x, i + 1)) sys.shapley_map[i][c] += share;
      }
    }
  }
  return sys;
}

UDSystem build_ud_system(const SetSystem& k) {
  return build_ud_system(k, ClosurePartition::compute(k));
}

namespace {

long lcm_up_to(int n) {
  long l = 1;
  for (int i = 2; i <= n; ++i) l = std::lcm(l, static_cast<long>(i));
  return l;
}

exactlin::IntMatrix integer_constraints(const UDSystem& sys) {
  exactlin::IntMatrix m(sys.rows.size());
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    m[r].reserve(sys.columns.size());
    for (long a : sys.coefficients[r]) m[r].emplace_back(a);
  }
  return m;
}

exactlin::Matrix rational_constraints(const UDSystem& sys) {
  exactlin::Matrix m(sys.rows.size());
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    m[r].reserve(sys.columns.size());
    for (long a : sys.coefficients[r]) m[r].emplace_back(a);
  }
  return m;
}

}  // namespace

UniquenessDecision decide_ud_uniqueness(const SetSystem& k) {
  UniquenessDecision decision;
  decision.has_grand = k.has_grand();
  decision.intersection_closed = is_intersection_closed(k);
  if (!decision.has_grand) {
    // Without the grand coalition the payoff can be shifted arbitrarily.
    decision.unique = false;
    return decision;
  }
  if (decision.intersection_closed) {
    decision.unique = true;
    const int members = static_cast<int>(k.size()) - 1;
    decision.rank_constraints = members;
    decision.rank_stacked = members;
    decision.columns = members;  // C(K) = K for intersection-closed K with N in K
    return decision;
  }

  const UDSystem sys = build_ud_system(k);
  decision.columns = static_cast<int>(sys.columns.size());

  // Fraction-free integer ranks; the 1/|X| entries of the payoff map are
  // cleared by scaling each row with lcm(1..n).
  exactlin::IntMatrix constraints = integer_constraints(sys);
  decision.rank_constraints = exactlin::rank_bareiss(constraints);

  exactlin::IntMatrix stacked = integer_constraints(sys);
  const long scale = lcm_up_to(sys.players);
  for (int i = 0; i < sys.players; ++i) {
    std::vector<mpz_class> row;
    row.reserve(sys.columns.size());
    for (const Rational& q : sys.shapley_map[i]) {
      Rational scaled = q * scale;
      if (scaled.get_den() != 1) throw std::logic_error("payoff map row not cleared by lcm");
      row.push_back(scaled.get_num());
    }
    stacked.push_back(std::move(row));
  }
  decision.rank_stacked = exactlin::rank_bareiss(std::move(stacked));

  // The payoff image is constant over the affine solution set exactly when
  // the payoff map's rows already lie in the constraint row space.
  decision.unique = decision.rank_stacked == decision.rank_constraints;
  return decision;
}

AffineSolution ud_affine_solution(const IncompleteGame<Rational>& g) {
  detail::require_grand(g.system());
  AffineSolution solution;
  solution.system = build_ud_system(g.system());
  const exactlin::Matrix a = rational_constraints(solution.system);
  const std::vector<Rational> rhs = ud_rhs(g, solution.system);
  auto particular = exactlin::solve_particular(a, rhs);
  if (!particular) {
    // The constraint matrix has full row rank, so this cannot happen.
    throw std::logic_error("UD system inconsistent");
  }
  solution.particular = std::move(*particular);
  solution.nullspace = exactlin::nullspace_basis(a);
  return solution;
}

Allocation<Rational> ud_value_general(const IncompleteGame<Rational>& g) {
  detail::require_grand(g.system());
  const UniquenessDecision decision = decide_ud_uniqueness(g.system());
  if (!decision.unique) {
    fail(ErrorCode::ud_not_unique,
         "the UD payoff is not unique on this set system; inspect the affine solution set");
  }
  const AffineSolution solution = ud_affine_solution(g);
  return exactlin::matvec(solution.system.shapley_map, solution.particular);
}

namespace {

CompleteGame<double> draw_extension(const IncompleteGame<double>& g,
                                    const ClosurePartition& partition,
                                    const std::vector<double>& delta, std::uint64_t seed) {
  const auto& members = g.system().members();
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exp_draw(1.0);

  const std::size_t size = std::size_t{1} << g.players();
  std::vector<double> dividends(size, 0.0);
  for (std::size_t i = 1; i < members.size(); ++i) {
    const ClosureClass& cls = partition.class_of(members[i]);
    const double mass = std::max(delta[i], 0.0);
    if (mass == 0.0) continue;  // degenerate simplex: all dividends exactly 0
    if (cls.members.size() == 1) {
      dividends[cls.members[0]] = mass;
      continue;
    }
    std::vector<double> raw(cls.members.size());
    double total = 0.0;
    for (double& x : raw) {
      x = exp_draw(rng);
      total += x;
    }
    for (std::size_t j = 0; j < raw.size(); ++j) {
      dividends[cls.members[j]] = raw[j] * (mass / total);
    }
  }
  return to_values(Dividends<double>(g.players(), std::move(dividends)));
}

std::vector<double> checked_surpluses(const IncompleteGame<double>& g) {
  detail::require_grand(g.system());
  if (!is_p_extendable(g)) {
    fail(ErrorCode::not_p_extendable, "a positive extension does not exist");
  }
  return delta_surpluses(g);
}

}  // namespace

CompleteGame<double> sample_p_extension(const IncompleteGame<double>& g,
                                        const ClosurePartition& partition, std::uint64_t seed) {
  return draw_extension(g, partition, checked_surpluses(g), seed);
}

CompleteGame<double> sample_p_extension(const IncompleteGame<double>& g, std::uint64_t seed) {
  return sample_p_extension(g, ClosurePartition::compute(g.system()), seed);
}

Allocation<double> expected_shapley_mc(const IncompleteGame<double>& g, long samples,
                                       std::uint64_t seed) {
  if (samples < 1) fail(ErrorCode::invalid_input, "need at least one sample");
  const ClosurePartition partition = ClosurePartition::compute(g.system());
  const std::vector<double> delta = checked_surpluses(g);
  Allocation<double> total(g.players(), 0.0);
  for (long k = 0; k < samples; ++k) {
    const CompleteGame<double> extension =
        draw_extension(g, partition, delta, derive_seed(seed, 0xe77ed1ULL, static_cast<std::uint64_t>(k)));
    const Allocation<double> phi = shapley(extension);
    for (int i = 0; i < g.players(); ++i) total[i] += phi[i];
  }
  for (double& x : total) x /= static_cast<double>(samples);
  return total;
}

}  // namespace udval
