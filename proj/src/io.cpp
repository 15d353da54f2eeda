#include "sqfree/io.hpp"

#include <cctype>
#include <map>

#include "sqfree/errors.hpp"

namespace sqfree {
namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
    }
  }

  QPolynomial parse() {
    if (text_.empty()) fail("empty polynomial");
    std::map<std::size_t, Rational> terms;
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = text_[pos_++] == '-';
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [coefficient, power] = term();
      if (negative) coefficient = -coefficient;
      terms[power] += coefficient;
      first = false;
    }
    std::size_t top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<Rational> coefficients(top + 1);
    for (auto& [power, c] : terms) coefficients[power] = c;
    return QPolynomial(std::move(coefficients));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  static bool is_digit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }
  static bool is_variable(char c) { return c == 'x' || c == 'X'; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " at position " + std::to_string(pos_) +
                     " in '" + text_ + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  std::pair<Rational, std::size_t> term() {
    Rational coefficient(1);
    bool has_coefficient = false;
    if (is_digit(peek())) {
      std::string literal = digits();
      if (peek() == '/') {
        ++pos_;
        literal += '/' + digits();
      }
      coefficient = Rational::parse(literal);
      has_coefficient = true;
      if (peek() == '*') {
        ++pos_;
        if (!is_variable(peek())) fail("expected 'x' after '*'");
      }
    }
    if (!is_variable(peek())) {
      if (!has_coefficient) fail("expected a coefficient or 'x'");
      return {coefficient, 0};
    }
    ++pos_;
    std::size_t power = 1;
    if (peek() == '^') {
      ++pos_;
      const std::string exponent = digits();
      if (exponent.size() > 6) fail("exponent too large");
      power = std::stoul(exponent);
    }
    return {coefficient, power};
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

QPolynomial parse_polynomial(std::string_view text) {
  return PolynomialParser(text).parse();
}

std::string to_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  const auto c = p.coefficients();
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const bool negative = c[k].sign() < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? -c[k] : c[k];
    if (k == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) out += magnitude.to_string() + "*";
    out += 'x';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

std::string to_string(const QFactorization& sf) {
  if (sf.components.empty()) return "1";
  std::string out;
  for (const auto& c : sf.components) {
    if (!out.empty()) out += " * ";
    out += '(' + to_string(c.poly) + ')';
    if (c.k > 1) out += '^' + std::to_string(c.k);
  }
  return out;
}

}  // namespace sqfree
