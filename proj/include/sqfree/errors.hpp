#ifndef SQFREE_ERRORS_HPP
#define SQFREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sqfree {

// Arithmetic failures raised by the exact kernels.
struct DivisionByZeroError : std::domain_error {
  DivisionByZeroError() : std::domain_error("division by zero") {}
};

struct ZeroPolynomialError : std::domain_error {
  explicit ZeroPolynomialError(const std::string& what)
      : std::domain_error(what) {}
};

// The divisor does not divide the dividend exactly.
struct InexactDivisionError : std::domain_error {
  explicit InexactDivisionError(const std::string& what)
      : std::domain_error(what) {}
};

// Input violates an operation's precondition (non-monic, constant, ...).
struct InvalidInputError : std::invalid_argument {
  explicit InvalidInputError(const std::string& what)
      : std::invalid_argument(what) {}
};

struct DimensionMismatchError : std::invalid_argument {
  explicit DimensionMismatchError(const std::string& what)
      : std::invalid_argument(what) {}
};

struct DegreeViolationError : std::invalid_argument {
  explicit DegreeViolationError(const std::string& what)
      : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// A result contradicts the theory; always a bug, never bad input.
struct InternalInconsistencyError : std::logic_error {
  explicit InternalInconsistencyError(const std::string& what)
      : std::logic_error(what) {}
};

struct ForecastInconsistencyError : InternalInconsistencyError {
  explicit ForecastInconsistencyError(const std::string& what)
      : InternalInconsistencyError(what) {}
};

}  // namespace sqfree

#endif  // SQFREE_ERRORS_HPP
