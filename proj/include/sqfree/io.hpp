#ifndef SQFREE_IO_HPP
#define SQFREE_IO_HPP

#include <string>
#include <string_view>

#include "sqfree/matrix.hpp"
#include "sqfree/polynomial.hpp"
#include "sqfree/rational.hpp"
#include "sqfree/squarefree.hpp"

namespace sqfree {

using QPolynomial = Polynomial<Rational>;
using QMatrix = Matrix<Rational>;
using QVector = CoordinateVector<Rational>;
using QFactorization = SquareFreeFactorization<Rational>;

/// Parses sums of terms `c`, `x`, `c*x`, `x^k`, `c*x^k` where c is an
/// integer or p/q; `*` is optional, whitespace is ignored and the variable
/// may be `x` or `X`. Repeated powers are summed. Throws ParseError.
QPolynomial parse_polynomial(std::string_view text);

/// Descending powers with explicit `*` and `^`, e.g. `1/6*x^2 + 1/3*x + 3/2`.
/// The output is always accepted by parse_polynomial.
std::string to_string(const QPolynomial& p);

/// `(x^2 + 2*x + 3) * (x - 1)^2`; `1` for the empty factorization.
std::string to_string(const QFactorization& sf);

}  // namespace sqfree

#endif  // SQFREE_IO_HPP
