#ifndef SQFREE_POLYNOMIAL_HPP
#define SQFREE_POLYNOMIAL_HPP

#include <Eigen/Core>
#include <compare>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqfree/errors.hpp"
#include "sqfree/instrumentation.hpp"

namespace sqfree {

/// Scalars the polynomial and matrix kernels can run over: an exact field
/// with integer literals.
template <typename T>
concept Field = std::regular<T> && std::constructible_from<T, long> &&
                requires(const T a, const T b) {
                  { a + b } -> std::convertible_to<T>;
                  { a - b } -> std::convertible_to<T>;
                  { a * b } -> std::convertible_to<T>;
                  { a / b } -> std::convertible_to<T>;
                  { -a } -> std::convertible_to<T>;
                };

/// Coordinates of a polynomial in the basis 1, X, ..., X^{s-1}.
template <Field Scalar>
using CoordinateVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Polynomial degree. The zero polynomial has degree minus infinity, which
/// compares below every finite degree and has no numeric value.
class Degree {
 public:
  static constexpr Degree minus_infinity() { return Degree(); }
  constexpr explicit Degree(std::size_t value) : finite_(true), value_(value) {}

  constexpr bool is_minus_infinity() const { return !finite_; }

  /// Throws std::logic_error for minus infinity.
  constexpr std::size_t value() const {
    if (!finite_) throw std::logic_error("degree of the zero polynomial");
    return value_;
  }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a,
                                                    const Degree& b) {
    if (a.finite_ != b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(const Degree& a, std::size_t b) {
    return a == Degree(b);
  }
  friend constexpr std::strong_ordering operator<=>(const Degree& a,
                                                    std::size_t b) {
    return a <=> Degree(b);
  }

 private:
  constexpr Degree() = default;

  bool finite_ = false;
  std::size_t value_ = 0;
};

/// Dense univariate polynomial, coefficients stored lowest power first.
/// The leading stored coefficient is never zero; the zero polynomial has
/// no coefficients.
template <Field Scalar>
class Polynomial {
 public:
  using Coefficients = std::vector<Scalar>;

  Polynomial() = default;
  explicit Polynomial(Coefficients coefficients)
      : coefficients_(std::move(coefficients)) {
    normalize();
  }
  Polynomial(std::initializer_list<Scalar> coefficients)
      : coefficients_(coefficients) {
    normalize();
  }

  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }
  static Polynomial one() { return constant(Scalar(1)); }
  static Polynomial x() { return Polynomial({Scalar(0), Scalar(1)}); }
  static Polynomial monomial(const Scalar& c, std::size_t power) {
    Coefficients coefficients(power + 1, Scalar(0));
    coefficients[power] = c;
    return Polynomial(std::move(coefficients));
  }
  /// X - root.
  static Polynomial linear(const Scalar& root) {
    return Polynomial({-root, Scalar(1)});
  }

  bool is_zero() const { return coefficients_.empty(); }
  /// True for the zero polynomial and nonzero constants.
  bool is_constant() const { return coefficients_.size() <= 1; }
  bool is_one() const {
    return coefficients_.size() == 1 && coefficients_[0] == Scalar(1);
  }
  bool is_monic() const {
    return !is_zero() && coefficients_.back() == Scalar(1);
  }

  Degree degree() const {
    return is_zero() ? Degree::minus_infinity()
                     : Degree(coefficients_.size() - 1);
  }

  /// Leading coefficient; throws ZeroPolynomialError for zero.
  const Scalar& leading() const {
    if (is_zero()) throw ZeroPolynomialError("leading coefficient of zero");
    return coefficients_.back();
  }

  /// Coefficient of X^power (zero past the degree).
  Scalar operator[](std::size_t power) const {
    return power < coefficients_.size() ? coefficients_[power] : Scalar(0);
  }

  std::span<const Scalar> coefficients() const { return coefficients_; }

  Polynomial operator-() const {
    Coefficients out;
    out.reserve(coefficients_.size());
    for (const auto& c : coefficients_) out.push_back(-c);
    return Polynomial(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, [](const Scalar& x, const Scalar& y) { return x + y; });
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, [](const Scalar& x, const Scalar& y) { return x - y; });
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& ac = a.coefficients_;
    const auto& bc = b.coefficients_;
    Coefficients out(ac.size() + bc.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < ac.size(); ++i) {
      if (ac[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Scalar& c, const Polynomial& p) {
    if (c == Scalar(0)) return {};
    Coefficients out;
    out.reserve(p.coefficients_.size());
    for (const auto& x : p.coefficients_) out.push_back(c * x);
    return Polynomial(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& p, const Scalar& c) {
    return p + constant(c);
  }
  friend Polynomial operator-(const Polynomial& p, const Scalar& c) {
    return p - constant(c);
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  template <typename Op>
  static Polynomial combine(const Polynomial& a, const Polynomial& b, Op op) {
    const std::size_t n =
        std::max(a.coefficients_.size(), b.coefficients_.size());
    Coefficients out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(op(a[i], b[i]));
    return Polynomial(std::move(out));
  }

  void normalize() {
    while (!coefficients_.empty() && coefficients_.back() == Scalar(0)) {
      coefficients_.pop_back();
    }
    instrumentation::observe<Scalar>(coefficients_);
  }

  Coefficients coefficients_;
};

template <Field Scalar>
struct DivRem {
  Polynomial<Scalar> quotient;
  Polynomial<Scalar> remainder;
};

/// Long division a = q*b + r with degree(r) < degree(b).
/// Throws DivisionByZeroError when b is zero.
template <Field Scalar>
DivRem<Scalar> divrem(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw DivisionByZeroError();
  if (a.degree() < b.degree()) return {{}, a};

  const auto bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Scalar> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Scalar> quo(rem.size() - db, Scalar(0));
  const bool monic = bc.back() == Scalar(1);

  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == Scalar(0)) continue;
    Scalar factor = monic ? rem[k] : rem[k] / bc.back();
    const std::size_t shift = k - db;
    for (std::size_t j = 0; j < db; ++j) rem[shift + j] -= factor * bc[j];
    rem[k] = Scalar(0);
    quo[shift] = std::move(factor);
  }
  rem.resize(db);
  return {Polynomial<Scalar>(std::move(quo)),
          Polynomial<Scalar>(std::move(rem))};
}

/// a / b when b divides a; throws InexactDivisionError otherwise.
template <Field Scalar>
Polynomial<Scalar> exact_div(const Polynomial<Scalar>& a,
                             const Polynomial<Scalar>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw InexactDivisionError("divisor leaves a remainder");
  return q;
}

template <Field Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& a) {
  const auto c = a.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Scalar> out;
  out.reserve(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    out.push_back(Scalar(static_cast<long>(i)) * c[i]);
  }
  return Polynomial<Scalar>(std::move(out));
}

/// Throws ZeroPolynomialError for zero.
template <Field Scalar>
Polynomial<Scalar> make_monic(const Polynomial<Scalar>& a) {
  if (a.is_zero()) throw ZeroPolynomialError("make_monic of zero");
  if (a.is_monic()) return a;
  return (Scalar(1) / a.leading()) * a;
}

/// Monic gcd via the monic Euclidean remainder sequence.
/// gcd(a, 0) = make_monic(a); throws ZeroPolynomialError when both are zero.
template <Field Scalar>
Polynomial<Scalar> gcd(const Polynomial<Scalar>& a,
                       const Polynomial<Scalar>& b) {
  if (a.is_zero() && b.is_zero()) throw ZeroPolynomialError("gcd(0, 0)");
  Polynomial<Scalar> r0 = a.is_zero() ? make_monic(b) : make_monic(a);
  Polynomial<Scalar> r1 = a.is_zero() ? Polynomial<Scalar>{} : b;
  if (!r1.is_zero()) r1 = make_monic(r1);
  while (!r1.is_zero()) {
    auto r = divrem(r0, r1).remainder;
    r0 = std::move(r1);
    r1 = r.is_zero() ? std::move(r) : make_monic(r);
  }
  return r0;
}

template <Field Scalar>
struct ExtendedGcd {
  Polynomial<Scalar> gcd;
  Polynomial<Scalar> u;  // coefficient of a
  Polynomial<Scalar> v;  // coefficient of b
};

/// u*a + v*b = gcd(a, b) with gcd monic and the minimal-degree Bezout pair.
/// For nonzero inputs degree(u) < degree(b) - degree(gcd), and
/// degree(v) < degree(a) - degree(gcd) unless a and b are scalar multiples
/// of each other (then u = 0 and v is the constant 1/lc(b)).
template <Field Scalar>
ExtendedGcd<Scalar> ext_gcd(const Polynomial<Scalar>& a,
                            const Polynomial<Scalar>& b) {
  using Poly = Polynomial<Scalar>;
  if (a.is_zero() && b.is_zero()) throw ZeroPolynomialError("ext_gcd(0, 0)");
  if (b.is_zero()) {
    return {make_monic(a), Poly::constant(Scalar(1) / a.leading()), Poly{}};
  }
  if (a.is_zero()) {
    return {make_monic(b), Poly{}, Poly::constant(Scalar(1) / b.leading())};
  }

  // Invariant: r_i = s_i*a + t_i*b with every r_i monic. Only the
  // a-cofactor is tracked; the b-cofactor is recovered by exact division.
  Poly r0 = make_monic(a), s0 = Poly::constant(Scalar(1) / a.leading());
  Poly r1 = make_monic(b), s1 = Poly{};
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly s = s0 - q * s1;
    if (!r.is_zero()) {
      const Scalar scale = Scalar(1) / r.leading();
      r = scale * r;
      s = scale * s;
    }
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(r);
    s1 = std::move(s);
  }
  Poly g = std::move(r0);
  Poly u = divrem(s0, exact_div(b, g)).remainder;
  Poly v = exact_div(g - u * a, b);
  return {std::move(g), std::move(u), std::move(v)};
}

/// Horner evaluation.
template <Field Scalar>
Scalar evaluate(const Polynomial<Scalar>& a, const Scalar& x) {
  const auto c = a.coefficients();
  Scalar acc(0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

/// [R] in F^s. Throws DegreeViolationError when degree(R) >= s.
template <Field Scalar>
CoordinateVector<Scalar> coordinates(const Polynomial<Scalar>& r,
                                     std::size_t s) {
  if (r.degree() >= s) {
    throw DegreeViolationError("polynomial does not fit " +
                               std::to_string(s) + " coordinates");
  }
  CoordinateVector<Scalar> v(static_cast<Eigen::Index>(s));
  for (std::size_t i = 0; i < s; ++i) v(static_cast<Eigen::Index>(i)) = r[i];
  return v;
}

template <Field Scalar>
Polynomial<Scalar> from_coordinates(const CoordinateVector<Scalar>& v) {
  return Polynomial<Scalar>(std::vector<Scalar>(v.begin(), v.end()));
}

}  // namespace sqfree

#endif  // SQFREE_POLYNOMIAL_HPP
