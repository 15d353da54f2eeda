#include "sqfree/instances.hpp"

#include <algorithm>
#include <map>

#include "sqfree/errors.hpp"

namespace sqfree {
namespace {

constexpr int kMaxRejections = 10000;

bool coprime_to_all(const QPolynomial& q, const std::vector<KnownFactor>& factors) {
  return std::all_of(factors.begin(), factors.end(), [&q](const KnownFactor& f) {
    return gcd(q, f.q).is_one();
  });
}

}  // namespace

void InstanceBounds::validate() const {
  if (min_degree < 1) throw InvalidInputError("min degree must be >= 1");
  if (max_degree < min_degree) {
    throw InvalidInputError("max degree must be >= min degree");
  }
  if (max_multiplicity < 1) throw InvalidInputError("max multiplicity must be >= 1");
  if (coefficient_bound < 1) throw InvalidInputError("coefficient bound must be >= 1");
  if (max_factor_degree < 1) throw InvalidInputError("max factor degree must be >= 1");
}

Rational InstanceGenerator::random_rational(CoefficientKind kind, long bound) {
  const long num = std::uniform_int_distribution<long>(-bound, bound)(rng_);
  if (kind == CoefficientKind::integer) return Rational(num);
  const long den = std::uniform_int_distribution<long>(1, 4)(rng_);
  return Rational(Integer(num), Integer(den));
}

QPolynomial InstanceGenerator::random_monic(std::size_t degree,
                                            CoefficientKind kind, long bound) {
  std::vector<Rational> c(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) c[i] = random_rational(kind, bound);
  c[degree] = Rational(1);
  return QPolynomial(std::move(c));
}

QPolynomial InstanceGenerator::random_polynomial(std::size_t max_degree,
                                                 CoefficientKind kind,
                                                 long bound) {
  std::vector<Rational> c(uniform(0, max_degree) + 1);
  for (auto& x : c) x = random_rational(kind, bound);
  return QPolynomial(std::move(c));
}

Instance InstanceGenerator::next(const InstanceBounds& bounds) {
  bounds.validate();
  Instance out;
  std::size_t remaining = uniform(bounds.min_degree, bounds.max_degree);
  int rejections = 0;
  while (remaining > 0) {
    const std::size_t k =
        uniform(1, std::min(bounds.max_multiplicity, remaining));
    const std::size_t d =
        uniform(1, std::min(bounds.max_factor_degree, remaining / k));
    QPolynomial q = random_monic(d, bounds.coefficients, bounds.coefficient_bound);
    if (!gcd(q, derivative(q)).is_one() || !coprime_to_all(q, out.factors)) {
      if (++rejections > kMaxRejections) {
        throw InternalInconsistencyError("instance generator kept rejecting factors");
      }
      continue;
    }
    remaining -= k * d;
    out.factors.push_back({std::move(q), k});
  }

  std::map<std::size_t, QPolynomial> grouped;
  out.f = QPolynomial::one();
  for (const auto& [q, k] : out.factors) {
    auto [it, inserted] = grouped.try_emplace(k, QPolynomial::one());
    it->second = it->second * q;
    for (std::size_t i = 0; i < k; ++i) out.f = out.f * q;
  }
  for (auto& [k, p] : grouped) out.expected.add(k, std::move(p));
  return out;
}

RootInstance InstanceGenerator::next_rational_roots(std::size_t max_roots,
                                                    std::size_t max_multiplicity,
                                                    long bound) {
  if (max_roots < 1 || max_multiplicity < 1 || bound < 1) {
    throw InvalidInputError("rational root bounds must be positive");
  }
  RootInstance out;
  out.f = QPolynomial::one();
  const std::size_t count = uniform(1, max_roots);
  while (out.roots.size() < count) {
    const Rational a = random_rational(CoefficientKind::rational, bound);
    const bool seen = std::any_of(out.roots.begin(), out.roots.end(),
                                  [&a](const auto& r) { return r.first == a; });
    if (seen) continue;
    const std::size_t k = uniform(1, max_multiplicity);
    out.roots.emplace_back(a, k);
    for (std::size_t i = 0; i < k; ++i) out.f = out.f * QPolynomial::linear(a);
  }
  return out;
}

}  // namespace sqfree
