// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#include "complex_core.hpp"

#include <cmath>
#include <sstream>

namespace altfact {

cplx pow_neg_one(const cplx& z) {
  return std::exp(cplx(0.0L, kPi) * z);
}

NearestInteger nearest_integer(const cplx& z) {
  real m = std::floor(z.real() + 0.5L);
  // clamp far outside the usable domain; the distance stays honest and the
  // cast stays defined
  constexpr real kCap = 4.0e18L;
  if (m > kCap) m = kCap;
  if (m < -kCap) m = -kCap;
  return {static_cast<long long>(m), std::abs(z - cplx(m, 0.0L))};
}

cplx sin_pi_reduced(const cplx& z) {
  const auto [m, dist] = nearest_integer(z);
  (void)dist;
  const cplx w = z - cplx(static_cast<real>(m), 0.0L);
  cplx s = std::sin(kPi * w);
  if (m % 2 != 0) s = -s;
  return s;
}

cplx inv_sin_pi(const cplx& z, double guard) {
  const auto [m, dist] = nearest_integer(z);
  if (dist < static_cast<real>(guard)) {
    std::ostringstream os;
    os << "inv_sin_pi: z within guard radius of integer " << m;
    throw PoleProximity(os.str());
  }
  return 1.0L / sin_pi_reduced(z);
}

cplx ipow(const cplx& z, long n) {
  if (n < 0) return 1.0L / ipow(z, -n);
  cplx acc(1.0L, 0.0L);
  cplx base = z;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace altfact
