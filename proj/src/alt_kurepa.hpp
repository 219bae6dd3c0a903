// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ALTFACT_ALT_KUREPA_HPP
#define ALTFACT_ALT_KUREPA_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "types.hpp"

namespace altfact {

using bigint = boost::multiprecision::cpp_int;

/// Exact alternating factorial sum n! - (n-1)! + ... -+ 1!, with the empty
/// sum at n = 0. Valid for 0 <= n <= 500.
bigint a_integer_oracle(int n);

/// Oracle value in extended precision (exact up to ~1e-19 relative).
real a_integer_oracle_real(int n);

/// The defining integral of A, adaptive panel-doubling Gauss-Legendre on
/// [0, T] after the substitution t = u^2; T comes from the analytic tail
/// bound. Requires re z > 0.
EvalOutcome a_integral(const cplx& z, const EvalConfig& cfg);

/// A(z) = -L2 (-1)^z + e Gamma(z+2) Gamma(-z-1, 1).
/// Guarded at the poles of A (integers <= -2).
EvalOutcome a_closed(const cplx& z, const EvalConfig& cfg);

/// A(z) = -L2 (-1)^z + pi e / sin(pi z) + sum (-1)^n Gamma(z+1-n).
/// Guarded at all integers.
EvalOutcome a_slavic(const cplx& z, const EvalConfig& cfg);

/// Continuation by A(z-1) = Gamma(z+1) - A(z): shift into re (0.5, 1.5],
/// integrate there, unwind back. Guarded at integers <= -2.
EvalOutcome a_recurrence(const cplx& z, const EvalConfig& cfg);

/// A1(z) = sum (-1)^n Gamma(z+1-n). Guarded at all integers.
EvalOutcome a1_series(const cplx& z, const EvalConfig& cfg);

/// A1(z) = -pi e / sin(pi z) + e Gamma(z+2) Gamma(-z-1, 1).
/// Guarded at all integers.
EvalOutcome a1_closed(const cplx& z, const EvalConfig& cfg);

/// Dispatcher for A. Auto: exact integers z >= -1 take the oracle path,
/// otherwise the closed form (with a recurrence cross-check when its error
/// estimate exceeds the configured tolerance).
EvalOutcome a_eval(const cplx& z, Representation method,
                   const EvalConfig& cfg);

/// Dispatcher for A1 (Series, ClosedForm or Auto = ClosedForm).
EvalOutcome a1_eval(const cplx& z, Representation method,
                    const EvalConfig& cfg);

}  // namespace altfact

#endif
