#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace udval {

/// Exact arithmetic backs every census and uniqueness decision and the
/// fixture assertions; experiments run in plain doubles.
using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double x);

/// Parses decimal text ("2", "-0.25", "1e-3", "3/4") into an exact rational.
Rational rational_from_decimal(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Numeric-mode glue for code templated over double / Rational.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double default_tolerance() { return 1e-9; }
  static double fraction(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
  static double abs(double x) { return x < 0 ? -x : x; }
  static double as_double(double x) { return x; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational default_tolerance() { return Rational(0); }
  static Rational fraction(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  static Rational abs(const Rational& x) { return ::abs(x); }
  static double as_double(const Rational& x) { return x.get_d(); }
};

}  // namespace udval
