#ifndef SQFREE_MATRIX_HPP
#define SQFREE_MATRIX_HPP

#include <Eigen/Core>
#include <cstddef>
#include <string>

#include "sqfree/errors.hpp"
#include "sqfree/polynomial.hpp"

namespace sqfree {

/// Dense square matrix over an exact field.
template <Field Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Companion matrix of monic g of degree s >= 1: ones on the subdiagonal,
/// last column -g_0, ..., -g_{s-1}. Satisfies g(C_g) = 0.
template <Field Scalar>
Matrix<Scalar> companion(const Polynomial<Scalar>& g) {
  if (g.is_constant() || !g.is_monic()) {
    throw InvalidInputError("companion matrix needs a monic non-constant polynomial");
  }
  const auto s = static_cast<Eigen::Index>(g.degree().value());
  Matrix<Scalar> c = Matrix<Scalar>::Zero(s, s);
  for (Eigen::Index i = 1; i < s; ++i) c(i, i - 1) = Scalar(1);
  for (Eigen::Index i = 0; i < s; ++i) {
    c(i, s - 1) = -g[static_cast<std::size_t>(i)];
  }
  return c;
}

/// Throws DimensionMismatchError unless a is square with v's length.
template <Field Scalar>
CoordinateVector<Scalar> mat_vec(const Matrix<Scalar>& a,
                                 const CoordinateVector<Scalar>& v) {
  if (a.rows() != a.cols() || a.cols() != v.size()) {
    throw DimensionMismatchError("matrix and vector dimensions differ");
  }
  CoordinateVector<Scalar> out(a.rows());
  out.noalias() = a * v;
  return out;
}

/// R(C_g) assembled column by column: [R], C_g[R], ..., C_g^{s-1}[R].
/// Requires degree(R) < s; reduce R modulo g first.
template <Field Scalar>
Matrix<Scalar> eval_at_companion(const Polynomial<Scalar>& r,
                                 const Polynomial<Scalar>& g) {
  const Matrix<Scalar> c = companion(g);
  const auto s = c.rows();
  Matrix<Scalar> out(s, s);
  out.col(0) = coordinates(r, static_cast<std::size_t>(s));
  for (Eigen::Index j = 1; j < s; ++j) {
    out.col(j) = mat_vec<Scalar>(c, out.col(j - 1));
  }
  return out;
}

/// p(C_g) * v by Horner's rule on the vector; p(C_g) is never formed.
/// p may have any degree.
template <Field Scalar>
CoordinateVector<Scalar> apply_to_vector(const Polynomial<Scalar>& p,
                                         const Polynomial<Scalar>& g,
                                         const CoordinateVector<Scalar>& v) {
  const Matrix<Scalar> c = companion(g);
  if (v.size() != c.rows()) {
    throw DimensionMismatchError("vector length differs from degree of g");
  }
  const auto coeffs = p.coefficients();
  if (coeffs.empty()) return CoordinateVector<Scalar>::Zero(v.size());
  CoordinateVector<Scalar> acc = coeffs.back() * v;
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    acc = mat_vec(c, acc);
    if (coeffs[i] != Scalar(0)) acc += coeffs[i] * v;
  }
  return acc;
}

/// det(X*I - A) by the Faddeev-LeVerrier recurrence
///   M_0 = 0, c_s = 1,
///   M_k = A*M_{k-1} + c_{s-k+1}*I,  c_{s-k} = -tr(A*M_k) / k.
/// Every division is by an integer, so the result is exact over Q.
template <Field Scalar>
Polynomial<Scalar> char_poly(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatchError("characteristic polynomial of a non-square matrix");
  }
  const auto s = static_cast<std::size_t>(a.rows());
  std::vector<Scalar> coeffs(s + 1, Scalar(0));
  coeffs[s] = Scalar(1);
  const Matrix<Scalar> identity = Matrix<Scalar>::Identity(a.rows(), a.cols());
  Matrix<Scalar> m = Matrix<Scalar>::Zero(a.rows(), a.cols());
  Matrix<Scalar> am = m;
  for (std::size_t k = 1; k <= s; ++k) {
    m = am + coeffs[s - k + 1] * identity;
    am.noalias() = a * m;
    coeffs[s - k] = -am.trace() / Scalar(static_cast<long>(k));
  }
  return Polynomial<Scalar>(std::move(coeffs));
}

/// Row-major text, one row per line, entries separated by single spaces.
template <Field Scalar>
std::string to_string(const Matrix<Scalar>& a) {
  std::string out;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ' ';
      out += a(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace sqfree

#endif  // SQFREE_MATRIX_HPP
