// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ALTFACT_IDENTITY_SUITE_HPP
#define ALTFACT_IDENTITY_SUITE_HPP

#include <string>

#include "types.hpp"

namespace altfact {

struct IdentityReport {
  std::string identity_id;
  long samples = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  bool passed = false;
};

/// f_n(z) = sum_{k>=2} (-1)^{k-1} (n+k-1)/(n+k)! z^k, truncated.
cplx f_n_series(int n, const cplx& z, int terms);

/// Finite sum + exponential closed form of f_n. Falls back to the series
/// below |z| = 1e-2 where the z^{-n} terms cancel.
cplx f_n_closed(int n, const cplx& z);

/// Accuracy-driven evaluator: the closed form loses ~n digits to
/// cancellation once |z| < 1, so the series takes over there.
cplx f_n_eval(int n, const cplx& z);

/// g(z) - MacLaurin polynomial of order n+1 of g, with g(z) = (z+1)e^{-z}.
cplx maclaurin_remainder_g(int n_plus_1, const cplx& z);

/// Tail-sum form of the order-p MacLaurin remainder of
/// h(t) = (t-1)e^t + 2 (all coefficients positive, no cancellation).
real h_remainder_tail(int order, real t, int terms = 80);

/// e^rho (n+1+rho) rho^2 / (n+2)!
real f_n_bound(int n, real rho);

/// Partial sum of F(z) = sum_{n>=1} f_n(z).
cplx big_f(const cplx& z, int n_terms);

/// (z+1) sum_{n>=1} sum_{k>=1} (-1)^k z^k / (k+n)!, rectangular truncation.
cplx double_sum_lhs(const cplx& z, int n_terms = 60, int k_terms = 60);

/// Partial sum of sum_{n>=1} (-1)^{k-1}(n+k-1)/(n+k)! (limit (-1)^{k-1}/k!).
real telescoping_inner(int k, int n_terms);

/// Both sides of sum H_n/n! x^n = e^x sum (-1)^{n-1}/(n! n) x^n.
IdentityReport ramanujan_check(real x, int n_terms, double tol_abs = 1e-10);

}  // namespace altfact

#endif
