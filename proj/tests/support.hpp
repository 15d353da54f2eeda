#ifndef SQFREE_TESTS_SUPPORT_HPP
#define SQFREE_TESTS_SUPPORT_HPP

#include <numeric>
#include <string>

#include "sqfree/io.hpp"

namespace sqfree::testing {

inline QPolynomial P(const std::string& text) { return parse_polynomial(text); }

inline Rational Q(long num, long den = 1) {
  return Rational(Integer(num), Integer(den));
}

inline QVector V(std::initializer_list<Rational> entries) {
  QVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

inline QMatrix M(std::initializer_list<std::initializer_list<Rational>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  QMatrix a(n, static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& e : row) a(i, j++) = e;
    ++i;
  }
  return a;
}

/// Reduced fraction p/q computed with machine integers, independent of the
/// GMP-backed kernel.
struct SmallFraction {
  long long num;
  long long den;
};

inline SmallFraction reduce(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

inline Rational to_rational(SmallFraction f) {
  return Q(static_cast<long>(f.num), static_cast<long>(f.den));
}

}  // namespace sqfree::testing

#endif  // SQFREE_TESTS_SUPPORT_HPP
