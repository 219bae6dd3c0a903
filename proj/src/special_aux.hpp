// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ALTFACT_SPECIAL_AUX_HPP
#define ALTFACT_SPECIAL_AUX_HPP

#include <array>
#include <string>
#include <vector>

#include "types.hpp"

namespace altfact {

/// Ei(x) for x < 0: power series on (-4, 0), Lentz continued fraction for
/// x <= -4. Throws std::domain_error for x >= 0.
real ei_negative(real x, int max_terms = 500);

/// Upper incomplete gamma Gamma(a, x), complex a, real x > 0.
/// Lentz continued fraction for re a <= x + 1; for re a > x + 1 it switches
/// to Gamma(a) minus the lower series (the subtraction is benign there).
/// `terms_out`, when given, receives the iteration count.
cplx upper_incomplete_gamma(const cplx& a, real x, double tol = 1e-17,
                            int max_terms = 400, long* terms_out = nullptr);

/// Lower incomplete gamma by the power series
/// x^a e^{-x} sum_k x^k / (a (a+1) ... (a+k)).
/// Refuses a within `guard` of a nonpositive integer (poles).
cplx lower_incomplete_gamma(const cplx& a, real x,
                            double guard = 1e-3, double tol = 1e-17,
                            int max_terms = 400, long* terms_out = nullptr);

real constant_l2();
real constant_gompertz();

/// The three computation routes for L2: via Ei(-1); via the gamma-ratio
/// series; via the alternating factorial-harmonic series.
std::array<real, 3> l2_routes();

/// Gompertz constant two ways: -e Ei(-1) and e (sum (-1)^{n-1}/(n! n) - g).
std::array<real, 2> gompertz_routes();

struct NamedConstant {
  std::string name;
  double value;
  std::string definition;
  std::string source;
};

const std::vector<NamedConstant>& named_constants();

}  // namespace altfact

#endif
