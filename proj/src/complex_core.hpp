// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ALTFACT_COMPLEX_CORE_HPP
#define ALTFACT_COMPLEX_CORE_HPP

#include "types.hpp"

namespace altfact {

inline constexpr double kDefaultPoleGuard = 1e-3;

/// (-1)^z on the branch exp(i*pi*z), used identically everywhere in the
/// library so that all representations of A(z) agree.
cplx pow_neg_one(const cplx& z);

struct NearestInteger {
  long long m;
  real dist;
};

/// Round re(z) to the closest integer m and report |z - m|.
NearestInteger nearest_integer(const cplx& z);

/// sin(pi*z) evaluated after shifting z by its nearest integer, so the
/// result does not lose accuracy for large |re z|.
cplx sin_pi_reduced(const cplx& z);

/// 1/sin(pi*z). Throws PoleProximity when z is within `guard` of an integer.
cplx inv_sin_pi(const cplx& z, double guard = kDefaultPoleGuard);

/// z^n for integer n by binary exponentiation (no log-branch artifacts).
cplx ipow(const cplx& z, long n);

}  // namespace altfact

#endif
