// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ALTFACT_TYPES_HPP
#define ALTFACT_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace altfact {

// All internal arithmetic runs in extended precision; the public C surface
// narrows to double. On x86-64 Linux `long double` is the 80-bit format
// (eps ~ 1.1e-19), which buys the headroom the functional-equation and
// cross-representation tolerances need at |Im z| ~ 6.
using real = long double;
using cplx = std::complex<real>;

inline constexpr real kPi = 3.14159265358979323846264338327950288L;
inline constexpr real kE = 2.71828182845904523536028747135266250L;
inline constexpr real kEulerGamma = 0.577215664901532860606512090082402431L;
inline constexpr real kLogSqrt2Pi = 0.918938533204672741780329736405617639L;
inline constexpr real kEps = 1.084202172485504434e-19L; // 2^-63

enum class Representation {
  Integral,
  Recurrence,
  Series,
  ClosedForm,
  Slavic,
  Auto,
};

const char* to_string(Representation r);
bool representation_from_string(const std::string& s, Representation& out);

struct EvalConfig {
  double tol_rel = 1e-16;
  double tol_abs = 1e-16;
  int max_terms = 400;
  int quad_max_panels = 8192;
  double pole_guard_radius = 1e-3;

  // Throws std::invalid_argument when a field is out of contract.
  void validate() const;
};

struct EvalOutcome {
  cplx value{};
  real err_est = 0.0L;
  Representation method = Representation::Auto;
  long work = 1;
};

// Evaluation refused because the point sits inside the guard disc of a pole.
class PoleProximity : public std::runtime_error {
 public:
  explicit PoleProximity(const std::string& what) : std::runtime_error(what) {}
};

// An iteration (series, continued fraction, quadrature) ran out of budget.
class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

void require_finite(const cplx& z, const char* where);

}  // namespace altfact

#endif
