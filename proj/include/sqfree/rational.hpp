#ifndef SQFREE_RATIONAL_HPP
#define SQFREE_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace sqfree {

/// Arbitrary-precision signed integer. Zero has a single representation.
class Integer {
 public:
  Integer() = default;
  Integer(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class value) : value_(std::move(value)) {}

  /// Parses an optionally signed run of decimal digits.
  static Integer parse(std::string_view text);

  const mpz_class& backend() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  Integer abs() const { return Integer(mpz_class(::abs(value_))); }
  /// Bit length of |x|; 0 for zero.
  std::size_t bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
  }
  bool fits_long() const { return value_.fits_slong_p(); }
  long to_long() const { return value_.get_si(); }

  std::string to_string() const { return value_.get_str(); }

  friend Integer operator+(const Integer& a, const Integer& b) {
    return Integer(mpz_class(a.value_ + b.value_));
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    return Integer(mpz_class(a.value_ - b.value_));
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    return Integer(mpz_class(a.value_ * b.value_));
  }
  Integer operator-() const { return Integer(mpz_class(-value_)); }

  friend bool operator==(const Integer& a, const Integer& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

/// Nonnegative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

/// Exact rational number in lowest terms with a positive denominator.
///
/// Every arithmetic result is canonicalized before it is returned, so
/// equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value)           // NOLINT(google-explicit-constructor)
      : value_(value.backend()) {}
  /// numerator / denominator, reduced. Throws DivisionByZeroError if the
  /// denominator is zero.
  Rational(const Integer& numerator, const Integer& denominator);

  /// Accepts "p", "p/q" with an optional leading sign; q must be nonzero.
  static Rational parse(std::string_view text);

  Integer numerator() const { return Integer(mpz_class(value_.get_num())); }
  Integer denominator() const { return Integer(mpz_class(value_.get_den())); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return cmp(value_, 1) == 0; }
  bool is_integer() const { return cmp(value_.get_den(), 1) == 0; }

  /// bit_length(numerator) + bit_length(denominator).
  std::size_t bit_size() const;

  std::string to_string() const { return value_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ + b.value_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ - b.value_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ * b.value_));
  }
  /// Throws DivisionByZeroError when b is zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& b) {
    value_ += b.value_;
    return *this;
  }
  Rational& operator-=(const Rational& b) {
    value_ -= b.value_;
    return *this;
  }
  Rational& operator*=(const Rational& b) {
    value_ *= b.value_;
    return *this;
  }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

inline std::ostream& operator<<(std::ostream& os, const Integer& i) {
  return os << i.to_string();
}

inline std::size_t bit_size(const Rational& r) { return r.bit_size(); }

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace sqfree

namespace Eigen {

template <>
struct NumTraits<sqfree::Rational> : GenericNumTraits<sqfree::Rational> {
  using Real = sqfree::Rational;
  using NonInteger = sqfree::Rational;
  using Literal = sqfree::Rational;
  using Nested = sqfree::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 60
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // SQFREE_RATIONAL_HPP
