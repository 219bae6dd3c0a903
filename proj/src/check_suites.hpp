// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ALTFACT_CHECK_SUITES_HPP
#define ALTFACT_CHECK_SUITES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "types.hpp"

namespace altfact {

struct CheckReport {
  std::string name;
  long samples = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  bool passed = false;
};

// Deterministic sampling: mt19937_64 with the 53-bit mantissa mapping
// u = (x >> 11) * 2^-53, so identical seeds reproduce identical points on
// any conforming implementation.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    const uint64_t x = rng_();
    const double u = static_cast<double>(x >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  cplx in_disc(double radius, double min_integer_dist);
  cplx in_rect(double re_lo, double re_hi, double im_lo, double im_hi,
               double min_integer_dist);

 private:
  std::mt19937_64 rng_;
};

/// Run one named suite ("fe", "repr", "pv", "identities") or "all".
/// `samples` <= 0 picks the per-suite defaults (fe 300, repr 100).
std::vector<CheckReport> run_check(const std::string& suite, long samples,
                                   uint64_t seed, const EvalConfig& cfg);

}  // namespace altfact

#endif
