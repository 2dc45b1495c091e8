#include "udval/rational.hpp"

#include "udval/errors.hpp"

namespace udval {

Rational rational_from_double(double x) {
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

Rational rational_from_decimal(std::string_view text) {
  const std::string input(text);
  auto bad = [&]() -> Rational {
    fail(ErrorCode::parse_error, "not a decimal number: '" + input + "'");
  };

  std::size_t pos = 0;
  bool negative = false;
  if (pos < input.size() && (input[pos] == '+' || input[pos] == '-')) {
    negative = input[pos] == '-';
    ++pos;
  }
  if (pos >= input.size()) return bad();

  // Explicit fraction form p/q.
  if (input.find('/') != std::string::npos) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), input.c_str(), 10) != 0) return bad();
    if (q.get_den() == 0) return bad();
    q.canonicalize();
    return q;
  }

  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false;
  bool seen_dot = false;
  for (; pos < input.size(); ++pos) {
    const char ch = input[pos];
    if (ch >= '0' && ch <= '9') {
      digits += ch;
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (ch == '.' && !seen_dot) {
      seen_dot = true;
    } else if (ch == 'e' || ch == 'E') {
      break;
    } else {
      return bad();
    }
  }
  if (!seen_digit) return bad();

  long exponent = 0;
  if (pos < input.size()) {  // exponent part
    ++pos;                   // skip 'e'
    bool exp_negative = false;
    if (pos < input.size() && (input[pos] == '+' || input[pos] == '-')) {
      exp_negative = input[pos] == '-';
      ++pos;
    }
    if (pos >= input.size()) return bad();
    for (; pos < input.size(); ++pos) {
      const char ch = input[pos];
      if (ch < '0' || ch > '9') return bad();
      exponent = exponent * 10 + (ch - '0');
      if (exponent > 10000) return bad();
    }
    if (exp_negative) exponent = -exponent;
  }

  mpz_class mantissa(digits.empty() ? "0" : digits);
  if (negative) mantissa = -mantissa;
  const long shift = exponent - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational q = shift >= 0 ? Rational(mantissa * pow10) : Rational(mantissa, pow10);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace udval
