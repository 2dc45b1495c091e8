#include "udval/game.hpp"

#include <random>

namespace udval {

IncompleteGame<double> random_game(const SetSystem& k, std::uint64_t seed, double low,
                                   double high) {
  if (low > high) fail(ErrorCode::invalid_input, "low must not exceed high");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(low, high);
  std::vector<double> values(k.size(), 0.0);
  for (std::size_t i = 1; i < k.size(); ++i) values[i] = draw(rng);
  return IncompleteGame<double>(k, std::move(values));
}

IncompleteGame<Rational> random_rational_game(const SetSystem& k, std::uint64_t seed,
                                              long denominator) {
  if (denominator < 1) fail(ErrorCode::invalid_input, "denominator must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw(0, denominator);
  std::vector<Rational> values(k.size(), Rational(0));
  for (std::size_t i = 1; i < k.size(); ++i) {
    values[i] = ScalarTraits<Rational>::fraction(draw(rng), denominator);
  }
  return IncompleteGame<Rational>(k, std::move(values));
}

}  // namespace udval
