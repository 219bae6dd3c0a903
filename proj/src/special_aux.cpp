// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#include "special_aux.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "complex_core.hpp"
#include "gamma_family.hpp"

namespace altfact {

namespace {
constexpr real kTiny = 1e-4500L;  // Lentz guard against zero pivots

cplx lower_series(const cplx& a, real x, double tol, int max_terms,
                  long* terms_out) {
  cplx term = 1.0L / a;
  cplx sum = term;
  for (int k = 1; k < max_terms; ++k) {
    term *= x / (a + static_cast<real>(k));
    sum += term;
    if (std::abs(term) < static_cast<real>(tol) * std::abs(sum)) {
      if (terms_out) *terms_out = k;
      return sum * std::exp(a * std::log(cplx(x, 0.0L)) - x);
    }
  }
  throw NoConvergence("lower incomplete gamma: series budget exhausted");
}

}  // namespace

real ei_negative(real x, int max_terms) {
  if (!(x < 0.0L))
    throw std::domain_error("ei_negative: requires x < 0");
  if (x > -4.0L) {
    // Ei(x) = g + ln|x| + sum_{k>=1} x^k/(k k!)
    real sum = 0.0L;
    real term = 1.0L;
    for (int k = 1; k < max_terms; ++k) {
      term *= x / static_cast<real>(k);
      const real dk = term / static_cast<real>(k);
      sum += dk;
      if (std::abs(dk) < 0.25L * kEps * (1.0L + std::abs(sum)))
        return kEulerGamma + std::log(-x) + sum;
    }
    throw NoConvergence("ei_negative: series budget exhausted");
  }
  // Ei(x) = -E1(-x); E1 by the Lentz continued fraction
  const real y = -x;
  real b = y + 1.0L;
  real c = 1.0L / kTiny;
  real d = 1.0L / b;
  real h = d;
  for (int i = 1; i < max_terms; ++i) {
    const real an = -static_cast<real>(i) * static_cast<real>(i);
    b += 2.0L;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0L / d;
    const real delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0L) < 8.0L * kEps)
      return -h * std::exp(-y);
  }
  throw NoConvergence("ei_negative: continued fraction budget exhausted");
}

cplx upper_incomplete_gamma(const cplx& a, real x, double tol, int max_terms,
                            long* terms_out) {
  require_finite(a, "upper_incomplete_gamma");
  if (!(x > 0.0L))
    throw std::domain_error("upper_incomplete_gamma: requires x > 0");
  if (a.real() > x + 1.0L) {
    // Complement route. re a > 1 here, so Gamma(a) is pole-free and the
    // subtraction loses less than a digit (checked across |a| <= 40).
    long terms = 0;
    const cplx low = lower_series(a, x, tol, max_terms, &terms);
    if (terms_out) *terms_out = terms;
    return gamma(a) - low;
  }
  cplx b = cplx(x + 1.0L, 0.0L) - a;
  cplx c = cplx(1.0L / kTiny, 0.0L);
  cplx d = (std::abs(b) > 0.0L) ? 1.0L / b : cplx(1.0L / kTiny, 0.0L);
  cplx h = d;
  for (int i = 1; i < max_terms; ++i) {
    const cplx an = -static_cast<real>(i) * (static_cast<real>(i) - a);
    b += 2.0L;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0L / d;
    const cplx delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0L) < static_cast<real>(tol)) {
      if (terms_out) *terms_out = i;
      return h * std::exp(a * std::log(cplx(x, 0.0L)) - x);
    }
  }
  throw NoConvergence(
      "upper incomplete gamma: continued fraction budget exhausted");
}

cplx lower_incomplete_gamma(const cplx& a, real x, double guard, double tol,
                            int max_terms, long* terms_out) {
  require_finite(a, "lower_incomplete_gamma");
  if (!(x > 0.0L))
    throw std::domain_error("lower_incomplete_gamma: requires x > 0");
  const auto [m, dist] = nearest_integer(a);
  if (m <= 0 && dist < static_cast<real>(guard)) {
    std::ostringstream os;
    os << "lower_incomplete_gamma: pole at a = " << m;
    throw PoleProximity(os.str());
  }
  return lower_series(a, x, tol, max_terms, terms_out);
}

real constant_l2() { return 1.0L + kE * ei_negative(-1.0L); }

real constant_gompertz() { return -kE * ei_negative(-1.0L); }

namespace {

// sum_{n>=1} (-1)^{n-1}/(n! n), shared by the L2 and Gompertz route pairs
real alternating_inverse_factorial_sum() {
  real sum = 0.0L;
  real fact = 1.0L;
  for (int n = 1; n <= 40; ++n) {
    fact *= static_cast<real>(n);
    const real t = 1.0L / (fact * static_cast<real>(n));
    sum += ((n - 1) % 2 == 0) ? t : -t;
  }
  return sum;
}

}  // namespace

std::array<real, 3> l2_routes() {
  const real via_ei = constant_l2();
  real ratio_sum = 0.0L;
  for (int n = 0; n <= 60; ++n) {
    const real t = gamma_ratio(n);
    ratio_sum += t;
    if (n > 2 && std::abs(t) < 0.25L * kEps) break;
  }
  const real via_ratio = 1.0L - ratio_sum;
  const real via_series =
      1.0L + kE * kEulerGamma - kE * alternating_inverse_factorial_sum();
  return {via_ei, via_ratio, via_series};
}

std::array<real, 2> gompertz_routes() {
  return {constant_gompertz(),
          kE * (alternating_inverse_factorial_sum() - kEulerGamma)};
}

const std::vector<NamedConstant>& named_constants() {
  static const std::vector<NamedConstant> table = {
      {"euler_gamma", static_cast<double>(kEulerGamma),
       "lim_n (H_n - ln n)", "OEIS A001620"},
      {"e", static_cast<double>(kE), "exp(1)", "OEIS A001113"},
      {"L2", static_cast<double>(constant_l2()), "1 + e Ei(-1)",
       "1 - A073003"},
      {"gompertz", static_cast<double>(constant_gompertz()), "-e Ei(-1)",
       "OEIS A073003"},
  };
  return table;
}

}  // namespace altfact
