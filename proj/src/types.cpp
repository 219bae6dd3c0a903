// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#include "types.hpp"

#include <cmath>

namespace altfact {

const char* to_string(Representation r) {
  switch (r) {
    case Representation::Integral: return "integral";
    case Representation::Recurrence: return "recurrence";
    case Representation::Series: return "series";
    case Representation::ClosedForm: return "closed";
    case Representation::Slavic: return "slavic";
    case Representation::Auto: return "auto";
  }
  return "?";
}

bool representation_from_string(const std::string& s, Representation& out) {
  if (s == "integral") out = Representation::Integral;
  else if (s == "recurrence") out = Representation::Recurrence;
  else if (s == "series") out = Representation::Series;
  else if (s == "closed") out = Representation::ClosedForm;
  else if (s == "slavic") out = Representation::Slavic;
  else if (s == "auto") out = Representation::Auto;
  else return false;
  return true;
}

void EvalConfig::validate() const {
  if (!(tol_rel > 0.0) || !(tol_abs > 0.0))
    throw std::invalid_argument("EvalConfig: tolerances must be positive");
  if (max_terms < 8)
    throw std::invalid_argument("EvalConfig: max_terms must be >= 8");
  if (quad_max_panels < 8)
    throw std::invalid_argument("EvalConfig: quad_max_panels must be >= 8");
  if (!(pole_guard_radius > 0.0) || !(pole_guard_radius < 0.5))
    throw std::invalid_argument(
        "EvalConfig: pole_guard_radius must lie in (0, 0.5)");
}

void require_finite(const cplx& z, const char* where) {
  if (!std::isfinite(static_cast<double>(z.real())) ||
      !std::isfinite(static_cast<double>(z.imag())))
    throw std::domain_error(std::string(where) + ": non-finite argument");
}

}  // namespace altfact
