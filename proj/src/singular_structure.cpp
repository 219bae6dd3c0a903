// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#include "singular_structure.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "alt_kurepa.hpp"
#include "complex_core.hpp"
#include "gamma_family.hpp"
#include "special_aux.hpp"

namespace altfact {

real residue_a(int n) {
  if (n < 2)
    throw std::domain_error("residue_a: A is regular above -2 (need n >= 2)");
  real sum = 0.0L;
  real fact = 1.0L;
  for (int k = 0; k <= n - 2; ++k) {
    if (k > 0) fact *= static_cast<real>(k);
    sum += 1.0L / fact;
  }
  return (n % 2 == 0) ? sum : -sum;
}

real residue_a1(long long m) {
  real r = ((m - 1) % 2 == 0) ? kE : -kE;
  if (-m >= 2) r += residue_a(static_cast<int>(-m));
  return r;
}

real residue_gamma(long long m) {
  if (m > 0)
    throw std::domain_error("residue_gamma: Gamma is regular for m >= 1");
  const int n = static_cast<int>(-m);
  const real r = 1.0L / factorial(n);
  return (n % 2 == 0) ? r : -r;
}

real pv_gamma(long long minus_n) {
  if (minus_n > 0)
    throw std::domain_error("pv_gamma: argument must be a nonpositive integer");
  const int n = static_cast<int>(-minus_n);
  const real v = gamma_ratio(n);
  return (n % 2 == 0) ? v : -v;
}

real pv_a(long long arg) {
  if (arg >= 0) return a_integer_oracle_real(static_cast<int>(arg));
  if (arg == -1) return 1.0L;
  const int n = static_cast<int>(-arg);
  real sum = 1.0L;
  for (int i = 1; i <= n - 1; ++i) sum -= gamma_ratio(i - 1);
  return ((n + 1) % 2 == 0) ? sum : -sum;
}

real pv_a1(long long n) {
  const real sign = (n % 2 == 0) ? 1.0L : -1.0L;
  return sign * constant_l2() + pv_a(n);
}

cplx pv_numeric(const PointFn& f, long long a, int levels, real* err_out) {
  if (levels < 2 || levels > 12)
    throw std::invalid_argument("pv_numeric: levels must be in [2, 12]");
  const real a_r = static_cast<real>(a);
  std::vector<real> x(levels);
  std::vector<cplx> y(levels);
  real eps = 0.1L;
  for (int k = 0; k < levels; ++k) {
    x[k] = eps * eps;
    y[k] = 0.5L * (f(cplx(a_r - eps, 0.0L)) + f(cplx(a_r + eps, 0.0L)));
    eps *= 0.5L;
  }
  // Neville tableau in eps^2, evaluated at 0. The odd Laurent terms cancel
  // in the symmetric mean, so only even powers remain.
  cplx before_last = y[levels - 1];
  for (int j = 1; j < levels; ++j) {
    for (int i = 0; i < levels - j; ++i) {
      y[i] = y[i + 1] + (y[i + 1] - y[i]) * x[i + j] / (x[i] - x[i + j]);
    }
    if (j == levels - 1) break;
    before_last = y[0];
  }
  const cplx result = y[0];
  const real corr = std::abs(result - before_last);
  if (err_out) *err_out = corr;
  if (!(std::abs(result) < 1.0L / kEps))
    throw NoConvergence("pv_numeric: extrapolation diverged");
  return result;
}

namespace {

cplx circle_mean(const PointFn& f, real center, real rho, int nodes,
                 bool weight_residue) {
  cplx acc(0.0L, 0.0L);
  for (int q = 0; q < nodes; ++q) {
    const real th = 2.0L * kPi * static_cast<real>(q) /
                    static_cast<real>(nodes);
    const cplx e(std::cos(th), std::sin(th));
    const cplx v = f(cplx(center, 0.0L) + rho * e);
    acc += weight_residue ? v * e : v;
  }
  acc /= static_cast<real>(nodes);
  return weight_residue ? acc * rho : acc;
}

}  // namespace

cplx pv_contour(const PointFn& f, long long a, real radius, int nodes) {
  if (!(radius > 0.0L) || radius >= 0.5L)
    throw std::invalid_argument("pv_contour: radius must be in (0, 0.5)");
  if (nodes < 8)
    throw std::invalid_argument("pv_contour: need at least 8 nodes");
  const real c = static_cast<real>(a);
  const cplx v1 = circle_mean(f, c, radius, nodes, false);
  const cplx v2 = circle_mean(f, c, radius * 0.5L, nodes, false);
  const cplx out = 2.0L * v2 - v1;  // rho -> 0, linear in rho
  if (!(std::abs(out) < 1.0L / kEps))
    throw NoConvergence("pv_contour: mean diverged");
  return out;
}

cplx residue_numeric(const PointFn& f, long long a, real radius, int nodes) {
  if (!(radius > 0.0L) || radius >= 0.5L)
    throw std::invalid_argument("residue_numeric: radius must be in (0, 0.5)");
  if (nodes < 8)
    throw std::invalid_argument("residue_numeric: need at least 8 nodes");
  const real c = static_cast<real>(a);
  const cplx v1 = circle_mean(f, c, radius, nodes, true);
  const cplx v2 = circle_mean(f, c, radius * 0.5L, nodes, true);
  const cplx out = 2.0L * v2 - v1;
  if (!(std::abs(out) < 1.0L / kEps))
    throw NoConvergence("residue_numeric: loop integral diverged");
  return out;
}

cplx pv_product_rule(const PointFn& f1, const cplx& f2_pv, const cplx& f2_res,
                     long long a, const cplx* f1_deriv) {
  const cplx a_c(static_cast<real>(a), 0.0L);
  cplx d1;
  if (f1_deriv) {
    d1 = *f1_deriv;
  } else {
    const real h = 1e-5L;
    d1 = (f1(a_c + h) - f1(a_c - h)) / (2.0L * h);
  }
  return f1(a_c) * f2_pv + d1 * f2_res;
}

SingularityInfo singularity_info(FunctionId id, long long m) {
  SingularityInfo info;
  info.location = m;
  info.function_id = id;
  switch (id) {
    case FunctionId::A:
      if (m >= -1) {
        info.order = 0;
        info.principal_value = cplx(pv_a(m), 0.0L);
      } else {
        info.order = 1;
        info.residue = cplx(residue_a(static_cast<int>(-m)), 0.0L);
        info.principal_value = cplx(pv_a(m), 0.0L);
      }
      break;
    case FunctionId::A1:
      info.order = 1;
      info.residue = cplx(residue_a1(m), 0.0L);
      info.principal_value = cplx(pv_a1(m), 0.0L);
      break;
    case FunctionId::Gamma:
      if (m >= 1) {
        info.order = 0;
        info.principal_value = cplx(factorial(static_cast<int>(m) - 1), 0.0L);
      } else {
        info.order = 1;
        info.residue = cplx(residue_gamma(m), 0.0L);
        info.principal_value = cplx(pv_gamma(m), 0.0L);
      }
      break;
  }
  return info;
}

}  // namespace altfact
