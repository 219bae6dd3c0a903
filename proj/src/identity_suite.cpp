// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#include "identity_suite.hpp"

#include <cmath>
#include <stdexcept>

#include "complex_core.hpp"
#include "gamma_family.hpp"

namespace altfact {

cplx f_n_series(int n, const cplx& z, int terms) {
  if (n < 1) throw std::domain_error("f_n_series: n must be >= 1");
  cplx sum(0.0L, 0.0L);
  real fact = factorial(n + 1);
  cplx zp = z;
  for (int k = 2; k < terms + 2; ++k) {
    fact *= static_cast<real>(n + k);
    zp *= z;
    const cplx t = (static_cast<real>(n + k - 1) / fact) * zp;
    sum += ((k - 1) % 2 == 0) ? t : -t;
  }
  return sum;
}

cplx f_n_closed(int n, const cplx& z) {
  if (n < 1) throw std::domain_error("f_n_closed: n must be >= 1");
  if (std::abs(z) < 1e-2L) return f_n_series(n, z, 60);
  cplx sum(0.0L, 0.0L);
  real fact = 1.0L;
  for (int j = 0; j <= n + 1; ++j) {
    if (j > 0) fact *= static_cast<real>(j);
    const real c = (static_cast<real>(j) - 1.0L) / fact;  // j/j! - 1/j!
    const cplx t = c * ipow(z, j - n);
    sum += ((j + n) % 2 == 0) ? t : -t;
  }
  cplx epart = std::exp(-z) * (ipow(z, -n + 1) + ipow(z, -n));
  if (n % 2 != 0) epart = -epart;
  return sum + epart;
}

cplx f_n_eval(int n, const cplx& z) {
  return (std::abs(z) < 1.0L) ? f_n_series(n, z, 90) : f_n_closed(n, z);
}

cplx maclaurin_remainder_g(int n_plus_1, const cplx& z) {
  if (n_plus_1 < 0)
    throw std::domain_error("maclaurin_remainder_g: order must be >= 0");
  const cplx g = (z + 1.0L) * std::exp(-z);
  cplx poly(1.0L, 0.0L);
  real fact = 1.0L;
  for (int j = 1; j <= n_plus_1; ++j) {
    fact *= static_cast<real>(j);
    real c = (static_cast<real>(j) - 1.0L) / fact;
    if ((j - 1) % 2 != 0) c = -c;
    poly += c * ipow(z, j);
  }
  return g - poly;
}

real h_remainder_tail(int order, real t, int terms) {
  // remainder after the order-p MacLaurin polynomial of h:
  // R_p(h)(t) = sum_{j >= p+1} (j-1)/j! t^j
  real sum = 0.0L;
  real fact = factorial(order);
  real tp = std::pow(t, static_cast<real>(order));
  for (int j = order + 1; j < order + 1 + terms; ++j) {
    fact *= static_cast<real>(j);
    tp *= t;
    const real term = (static_cast<real>(j) - 1.0L) / fact * tp;
    sum += term;
    if (term < 0.25L * kEps * (1.0L + sum)) break;
  }
  return sum;
}

real f_n_bound(int n, real rho) {
  if (n < 1 || !(rho > 0.0L))
    throw std::domain_error("f_n_bound: need n >= 1, rho > 0");
  return std::exp(rho) * (static_cast<real>(n) + 1.0L + rho) * rho * rho /
         factorial(n + 2);
}

cplx big_f(const cplx& z, int n_terms) {
  cplx sum(0.0L, 0.0L);
  for (int n = 1; n <= n_terms; ++n) sum += f_n_eval(n, z);
  return sum;
}

cplx double_sum_lhs(const cplx& z, int n_terms, int k_terms) {
  cplx sum(0.0L, 0.0L);
  for (int n = 1; n <= n_terms; ++n) {
    real fact = factorial(n);  // grows to (k+n)! along the row
    cplx zp(1.0L, 0.0L);
    for (int k = 1; k <= k_terms; ++k) {
      fact *= static_cast<real>(k + n);
      zp *= z;
      const cplx t = zp / fact;
      sum += (k % 2 == 0) ? t : -t;
    }
  }
  return (z + 1.0L) * sum;
}

real telescoping_inner(int k, int n_terms) {
  if (k < 2) throw std::domain_error("telescoping_inner: k must be >= 2");
  real sum = 0.0L;
  real fact = factorial(k);
  for (int n = 1; n <= n_terms; ++n) {
    fact *= static_cast<real>(n + k);
    sum += (static_cast<real>(n + k) - 1.0L) / fact;
  }
  return ((k - 1) % 2 == 0) ? sum : -sum;
}

IdentityReport ramanujan_check(real x, int n_terms, double tol_abs) {
  if (std::abs(x) > 5.0L)
    throw std::domain_error("ramanujan_check: |x| must be <= 5");
  real lhs = 0.0L;
  real fact = 1.0L;
  real h = 0.0L;
  for (int n = 1; n <= n_terms; ++n) {
    fact *= static_cast<real>(n);
    h += 1.0L / static_cast<real>(n);
    lhs += h / fact * std::pow(x, static_cast<real>(n));
  }
  real rhs_sum = 0.0L;
  fact = 1.0L;
  for (int n = 1; n <= n_terms; ++n) {
    fact *= static_cast<real>(n);
    const real t = std::pow(x, static_cast<real>(n)) /
                   (fact * static_cast<real>(n));
    rhs_sum += ((n - 1) % 2 == 0) ? t : -t;
  }
  const real rhs = std::exp(x) * rhs_sum;
  IdentityReport rep;
  rep.identity_id = "ramanujan";
  rep.samples = 1;
  rep.max_abs_residual = static_cast<double>(std::abs(lhs - rhs));
  rep.max_rel_residual = static_cast<double>(
      std::abs(lhs - rhs) / (1.0L + std::max(std::abs(lhs), std::abs(rhs))));
  rep.passed = rep.max_abs_residual <= tol_abs;
  return rep;
}

}  // namespace altfact
