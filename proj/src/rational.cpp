#include "sqfree/rational.hpp"

#include <cctype>

#include "sqfree/errors.hpp"

namespace sqfree {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Splits an optional sign from a digit run; throws ParseError otherwise.
mpz_class parse_signed_digits(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) {
    throw ParseError("not an integer literal: '" + std::string(text) + "'");
  }
  mpz_class value(std::string(text), 10);
  return negative ? mpz_class(-value) : value;
}

}  // namespace

Integer Integer::parse(std::string_view text) {
  return Integer(parse_signed_digits(text));
}

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.backend().get_mpz_t(), b.backend().get_mpz_t());
  return Integer(std::move(g));
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator.is_zero()) throw DivisionByZeroError();
  value_ = mpq_class(numerator.backend(), denominator.backend());
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(Integer(parse_signed_digits(text)));
  }
  const auto den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw ParseError("bad denominator in '" + std::string(text) + "'");
  }
  mpz_class den(std::string(den_text), 10);
  if (sgn(den) == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(Integer(parse_signed_digits(text.substr(0, slash))),
                  Integer(std::move(den)));
}

std::size_t Rational::bit_size() const {
  const auto& num = value_.get_num();
  const std::size_t num_bits =
      sgn(num) == 0 ? 0 : mpz_sizeinbase(num.get_mpz_t(), 2);
  return num_bits + mpz_sizeinbase(value_.get_den().get_mpz_t(), 2);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZeroError();
  return Rational(mpq_class(a.value_ / b.value_));
}

}  // namespace sqfree
