#ifndef SQFREE_MULTIPLICITY_HPP
#define SQFREE_MULTIPLICITY_HPP

#include <cstddef>
#include <map>
#include <string>

#include "sqfree/errors.hpp"
#include "sqfree/matrix.hpp"
#include "sqfree/polynomial.hpp"

namespace sqfree {

/// How M_f is obtained from P, f0 and the Bezout inverse g:
///   companion: [M_f] = P(C_{f0}) [g], evaluated on the coordinate vector;
///   modular:   M_f = (P * g) mod f0;
///   both:      run both and require exact agreement.
enum class Route { companion, modular, both };

inline const char* to_string(Route route) {
  switch (route) {
    case Route::companion: return "companion";
    case Route::modular: return "modular";
    case Route::both: return "both";
  }
  return "?";
}

template <Field Scalar>
struct MultiplicityReport {
  Polynomial<Scalar> f;   // monic input (after normalization)
  Polynomial<Scalar> f0;  // square-free part f / gcd(f, f')
  Polynomial<Scalar> P;   // f' / gcd(f, f')
  Polynomial<Scalar> g;   // f0' * g + f0 * h = 1, degree(g) < degree(f0)
  Polynomial<Scalar> h;
  Polynomial<Scalar> mf;  // the multiplicity polynomial
  Route route = Route::both;
  bool normalized = false;  // input was not monic and was scaled
};

/// Degrees of the square-free components read off the characteristic
/// polynomial of M_f(C_{f0}), which is prod_k (X - k)^{deg P_k}.
struct DegreeForecast {
  std::size_t m = 0;
  std::map<std::size_t, std::size_t> degrees;  // k -> deg P_k, nonzero only

  friend bool operator==(const DegreeForecast&, const DegreeForecast&) = default;
};

namespace detail {

template <Field Scalar>
void require_monic_nonconstant(const Polynomial<Scalar>& f) {
  if (f.is_constant()) throw InvalidInputError("polynomial must have degree >= 1");
  if (!f.is_monic()) throw InvalidInputError("polynomial must be monic");
}

}  // namespace detail

/// f / gcd(f, f') for monic f of degree >= 1.
template <Field Scalar>
Polynomial<Scalar> squarefree_part(const Polynomial<Scalar>& f) {
  detail::require_monic_nonconstant(f);
  return exact_div(f, gcd(f, derivative(f)));
}

/// Computes M_f: the polynomial of degree < deg(f0) whose value at every
/// root of f is that root's multiplicity. A non-monic f is made monic
/// first and the report is flagged.
template <Field Scalar>
MultiplicityReport<Scalar> compute_mf(const Polynomial<Scalar>& input,
                                      Route route = Route::both) {
  using Poly = Polynomial<Scalar>;
  if (input.is_constant()) {
    throw InvalidInputError("polynomial must have degree >= 1");
  }
  MultiplicityReport<Scalar> report;
  report.route = route;
  report.normalized = !input.is_monic();
  report.f = make_monic(input);

  const Poly df = derivative(report.f);
  const Poly d = gcd(report.f, df);
  report.f0 = exact_div(report.f, d);
  report.P = exact_div(df, d);
  const std::size_t s = report.f0.degree().value();
  if (report.P.degree() >= s) {
    throw InternalInconsistencyError("degree(P) >= degree(f0)");
  }

  const Poly df0 = derivative(report.f0);
  auto bezout = ext_gcd(df0, report.f0);
  if (!bezout.gcd.is_one() ||
      !(bezout.u * df0 + bezout.v * report.f0).is_one()) {
    throw InternalInconsistencyError("f0 and f0' are not coprime");
  }
  report.g = std::move(bezout.u);
  report.h = std::move(bezout.v);

  Poly via_companion, via_modular;
  if (route != Route::modular) {
    via_companion = from_coordinates<Scalar>(
        apply_to_vector(report.P, report.f0, coordinates(report.g, s)));
  }
  if (route != Route::companion) {
    via_modular = divrem(report.P * report.g, report.f0).remainder;
  }
  if (route == Route::both && via_companion != via_modular) {
    throw InternalInconsistencyError("companion and modular routes disagree");
  }
  report.mf = route == Route::modular ? std::move(via_modular)
                                      : std::move(via_companion);
  return report;
}

/// Forecast from an already computed report.
template <Field Scalar>
DegreeForecast degree_forecast(const MultiplicityReport<Scalar>& report) {
  const std::size_t n = report.f.degree().value();
  Polynomial<Scalar> chi = char_poly(eval_at_companion(report.mf, report.f0));

  DegreeForecast forecast;
  for (std::size_t k = 1; k <= n && !chi.is_one(); ++k) {
    const auto factor = Polynomial<Scalar>::linear(Scalar(static_cast<long>(k)));
    std::size_t exponent = 0;
    for (;;) {
      auto [q, r] = divrem(chi, factor);
      if (!r.is_zero()) break;
      chi = std::move(q);
      ++exponent;
    }
    if (exponent > 0) {
      forecast.degrees[k] = exponent;
      forecast.m = k;
    }
  }
  if (!chi.is_one()) {
    throw ForecastInconsistencyError(
        "characteristic polynomial is not a product of (X - k), 1 <= k <= n");
  }
  return forecast;
}

/// Degrees of the components P_k predicted without computing them.
template <Field Scalar>
DegreeForecast degree_forecast(const Polynomial<Scalar>& f) {
  detail::require_monic_nonconstant(f);
  return degree_forecast(compute_mf(f, Route::companion));
}

}  // namespace sqfree

#endif  // SQFREE_MULTIPLICITY_HPP
