#ifndef SQFREE_INSTANCES_HPP
#define SQFREE_INSTANCES_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sqfree/io.hpp"

namespace sqfree {

enum class CoefficientKind { integer, rational };

struct InstanceBounds {
  std::size_t min_degree = 1;
  std::size_t max_degree = 10;
  std::size_t max_multiplicity = 3;
  CoefficientKind coefficients = CoefficientKind::integer;
  long coefficient_bound = 9;
  std::size_t max_factor_degree = 6;

  /// Throws InvalidInputError on empty or zero ranges.
  void validate() const;
};

struct KnownFactor {
  QPolynomial q;  // monic square-free, coprime to the other factors
  std::size_t k = 0;
};

/// f built from a known answer.
struct Instance {
  QPolynomial f;
  std::vector<KnownFactor> factors;
  QFactorization expected;
};

struct RootInstance {
  QPolynomial f;
  std::vector<std::pair<Rational, std::size_t>> roots;  // (a_i, k_i), distinct a_i
};

/// Seeded source of test and benchmark polynomials. The same seed and call
/// sequence always yields the same polynomials.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  /// prod q_i^{k_i} with pairwise-coprime square-free monic q_i, total
  /// degree uniform in [min_degree, max_degree].
  Instance next(const InstanceBounds& bounds);

  /// prod (X - a_i)^{k_i} with distinct rational a_i.
  RootInstance next_rational_roots(std::size_t max_roots,
                                   std::size_t max_multiplicity,
                                   long bound = 20);

  /// Monic polynomial of the given degree with random lower coefficients.
  QPolynomial random_monic(std::size_t degree, CoefficientKind kind,
                           long bound);

  /// Random (not necessarily monic) polynomial of degree <= max_degree.
  QPolynomial random_polynomial(std::size_t max_degree, CoefficientKind kind,
                                long bound);

  Rational random_rational(CoefficientKind kind, long bound);

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace sqfree

#endif  // SQFREE_INSTANCES_HPP
