// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ALTFACT_GAMMA_FAMILY_HPP
#define ALTFACT_GAMMA_FAMILY_HPP

#include "complex_core.hpp"
#include "types.hpp"

namespace altfact {

/// log Gamma(z) by the Stirling series with upward shifting (re z pushed
/// past 16 before the asymptotic expansion) and reflection for re z < 0.5.
/// Throws PoleProximity within `guard` of a nonpositive integer.
cplx log_gamma(const cplx& z, double guard = kDefaultPoleGuard);

/// exp(log_gamma(z)). Throws std::overflow_error once the result would not
/// fit a double (re log > 709), so series code gets a clean signal instead
/// of infinities.
cplx gamma(const cplx& z, double guard = kDefaultPoleGuard);

/// H_n = 1 + 1/2 + ... + 1/n, summed smallest term first. H_0 = 0.
real harmonic(int n);

/// Gamma'(n+1)/Gamma(n+1)^2 = (H_n - euler_gamma)/n!, evaluated by repeated
/// division so it never overflows.
real gamma_ratio(int n);

/// n! in extended precision (n <= 1750).
real factorial(int n);

}  // namespace altfact

#endif
