#ifndef SQFREE_SQUAREFREE_HPP
#define SQFREE_SQUAREFREE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sqfree/errors.hpp"
#include "sqfree/multiplicity.hpp"
#include "sqfree/polynomial.hpp"

namespace sqfree {

template <Field Scalar>
struct SquareFreeComponent {
  std::size_t k = 0;
  Polynomial<Scalar> poly;

  friend bool operator==(const SquareFreeComponent&,
                         const SquareFreeComponent&) = default;
};

/// f = P_1 P_2^2 ... P_m^m. Only components of positive degree are stored,
/// in increasing k.
template <Field Scalar>
struct SquareFreeFactorization {
  std::vector<SquareFreeComponent<Scalar>> components;
  std::size_t m = 0;

  /// P_k, or 1 when absent.
  Polynomial<Scalar> component(std::size_t k) const {
    for (const auto& c : components) {
      if (c.k == k) return c.poly;
    }
    return Polynomial<Scalar>::one();
  }

  std::map<std::size_t, std::size_t> degree_profile() const {
    std::map<std::size_t, std::size_t> out;
    for (const auto& c : components) out[c.k] = c.poly.degree().value();
    return out;
  }

  /// prod P_k^k.
  Polynomial<Scalar> expand() const {
    auto out = Polynomial<Scalar>::one();
    for (const auto& c : components) {
      for (std::size_t i = 0; i < c.k; ++i) out = out * c.poly;
    }
    return out;
  }

  void add(std::size_t k, Polynomial<Scalar> poly) {
    if (poly.is_constant()) return;
    components.push_back({k, std::move(poly)});
    m = std::max(m, k);
  }

  friend bool operator==(const SquareFreeFactorization&,
                         const SquareFreeFactorization&) = default;
};

/// P_k = gcd(M_f - k, f0) for k = 1, 2, ... until sum_i i*deg(P_i) = n.
template <Field Scalar>
SquareFreeFactorization<Scalar> factor_companion(const Polynomial<Scalar>& f,
                                                 Route route = Route::companion) {
  detail::require_monic_nonconstant(f);
  const auto report = compute_mf(f, route);
  const std::size_t n = f.degree().value();

  SquareFreeFactorization<Scalar> out;
  std::size_t weighted = 0;
  for (std::size_t k = 1; weighted < n; ++k) {
    if (k > n) {
      throw InternalInconsistencyError("weighted degree never reached deg(f)");
    }
    auto pk = gcd(report.mf - Scalar(static_cast<long>(k)), report.f0);
    weighted += k * pk.degree().value();
    out.add(k, std::move(pk));
  }
  if (weighted != n) {
    throw InternalInconsistencyError("weighted degree overshoots deg(f)");
  }
  return out;
}

/// Gcd chain D_0 = f, D_{k+1} = gcd(D_k, D_k'), with
/// P_k = (D_{k-1}/D_k) / (D_k/D_{k+1}).
template <Field Scalar>
SquareFreeFactorization<Scalar> factor_tobey_horowitz(
    const Polynomial<Scalar>& f) {
  using Poly = Polynomial<Scalar>;
  detail::require_monic_nonconstant(f);
  std::vector<Poly> chain{f};
  while (!chain.back().is_one()) {
    chain.push_back(gcd(chain.back(), derivative(chain.back())));
  }
  chain.push_back(Poly::one());  // D_{m+1}

  SquareFreeFactorization<Scalar> out;
  // chain[k] = D_k; the last two entries are both 1.
  for (std::size_t k = 1; k + 1 < chain.size(); ++k) {
    const Poly upper = exact_div(chain[k - 1], chain[k]);
    const Poly lower = exact_div(chain[k], chain[k + 1]);
    out.add(k, exact_div(upper, lower));
  }
  return out;
}

/// Yun's algorithm:
///   b_1 = f/gcd(f, f'), c_1 = f'/gcd(f, f'), d_1 = c_1 - b_1',
///   a_i = gcd(b_i, d_i), b_{i+1} = b_i/a_i, c_{i+1} = d_i/a_i,
///   d_{i+1} = c_{i+1} - b_{i+1}', stopping when b_i = 1.
template <Field Scalar>
SquareFreeFactorization<Scalar> factor_yun(const Polynomial<Scalar>& f) {
  using Poly = Polynomial<Scalar>;
  detail::require_monic_nonconstant(f);
  const Poly df = derivative(f);
  const Poly a0 = gcd(f, df);
  Poly b = exact_div(f, a0);
  Poly c = exact_div(df, a0);
  Poly d = c - derivative(b);

  SquareFreeFactorization<Scalar> out;
  for (std::size_t k = 1; !b.is_one(); ++k) {
    Poly a = gcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - derivative(b);
    out.add(k, std::move(a));
  }
  return out;
}

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
  const VerificationCheck* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

/// Checks every structural property of a claimed factorization of f.
/// Failures are reported, never thrown.
template <Field Scalar>
VerificationReport verify_factorization(
    const Polynomial<Scalar>& f, const SquareFreeFactorization<Scalar>& sf) {
  VerificationReport report;
  auto check = [&report](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  check("reassembly", sf.expand() == f);

  bool monic = true, squarefree = true, positive_k = true, ordered = true;
  for (std::size_t i = 0; i < sf.components.size(); ++i) {
    const auto& c = sf.components[i];
    monic = monic && c.poly.is_monic();
    positive_k = positive_k && c.k >= 1;
    if (i > 0 && sf.components[i - 1].k >= c.k) ordered = false;
    if (!c.poly.is_zero() && !gcd(c.poly, derivative(c.poly)).is_one()) {
      squarefree = false;
    }
  }
  check("monic", monic);
  check("square-free", squarefree);
  check("distinct-increasing-k", positive_k && ordered);

  bool coprime = true;
  for (std::size_t i = 0; i < sf.components.size(); ++i) {
    for (std::size_t j = i + 1; j < sf.components.size(); ++j) {
      const auto& a = sf.components[i].poly;
      const auto& b = sf.components[j].poly;
      if (a.is_zero() || b.is_zero() || !gcd(a, b).is_one()) coprime = false;
    }
  }
  check("pairwise-coprime", coprime);

  std::size_t weighted = 0, largest = 0;
  bool nonconstant = true;
  for (const auto& c : sf.components) {
    if (c.poly.is_constant()) {
      nonconstant = false;
      continue;
    }
    weighted += c.k * c.poly.degree().value();
    largest = std::max(largest, c.k);
  }
  const bool degree_ok = !f.is_zero() && weighted == f.degree().value();
  check("weighted-degree", degree_ok,
        "sum k*deg(P_k) = " + std::to_string(weighted));
  check("max-multiplicity", nonconstant && sf.m == largest,
        "m = " + std::to_string(sf.m));
  return report;
}

}  // namespace sqfree

#endif  // SQFREE_SQUAREFREE_HPP
