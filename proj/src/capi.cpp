// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0
//
// extern "C" shim: maps the C++ core onto the stable C surface, with
// exceptions translated into AF_E* codes and a thread-local error message.

#include "altfact/altfact.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "alt_kurepa.hpp"
#include "check_suites.hpp"
#include "complex_core.hpp"
#include "singular_structure.hpp"
#include "special_aux.hpp"
#include "types.hpp"

namespace {

thread_local std::string g_last_error;

int set_error(int code, const char* what) {
  g_last_error = what ? what : "";
  return code;
}

int translate_current_exception() {
  try {
    throw;
  } catch (const altfact::PoleProximity& e) {
    return set_error(AF_EPOLE, e.what());
  } catch (const altfact::NoConvergence& e) {
    return set_error(AF_ENOCONV, e.what());
  } catch (const std::overflow_error& e) {
    return set_error(AF_EOVERFLOW, e.what());
  } catch (const std::domain_error& e) {
    return set_error(AF_EDOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(AF_EUSAGE, e.what());
  } catch (const std::bad_alloc& e) {
    return set_error(AF_EINTERNAL, e.what());
  } catch (const std::exception& e) {
    return set_error(AF_EINTERNAL, e.what());
  } catch (...) {
    return set_error(AF_EINTERNAL, "unknown error");
  }
}

const altfact::EvalConfig& config_or_default(const af_config* cfg);

int method_to_c(altfact::Representation r) {
  switch (r) {
    case altfact::Representation::Integral: return AF_METHOD_INTEGRAL;
    case altfact::Representation::Recurrence: return AF_METHOD_RECURRENCE;
    case altfact::Representation::Series: return AF_METHOD_SERIES;
    case altfact::Representation::ClosedForm: return AF_METHOD_CLOSED;
    case altfact::Representation::Slavic: return AF_METHOD_SLAVIC;
    case altfact::Representation::Auto: return AF_METHOD_AUTO;
  }
  return AF_METHOD_AUTO;
}

bool method_from_c(int m, altfact::Representation& out) {
  switch (m) {
    case AF_METHOD_AUTO: out = altfact::Representation::Auto; return true;
    case AF_METHOD_INTEGRAL: out = altfact::Representation::Integral; return true;
    case AF_METHOD_RECURRENCE:
      out = altfact::Representation::Recurrence;
      return true;
    case AF_METHOD_SERIES: out = altfact::Representation::Series; return true;
    case AF_METHOD_CLOSED:
      out = altfact::Representation::ClosedForm;
      return true;
    case AF_METHOD_SLAVIC: out = altfact::Representation::Slavic; return true;
  }
  return false;
}

void copy_str(char* dst, size_t cap, const std::string& src) {
  const size_t n = src.size() < cap - 1 ? src.size() : cap - 1;
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

int finite_double_or_overflow(altfact::real v, double* out) {
  const double d = static_cast<double>(v);
  if (!std::isfinite(d)) return AF_EOVERFLOW;
  *out = d;
  return AF_OK;
}

int outcome_to_result(const altfact::EvalOutcome& o, af_result* out) {
  int rc = finite_double_or_overflow(o.value.real(), &out->value_re);
  if (rc != AF_OK) return set_error(rc, "value exceeds double range");
  rc = finite_double_or_overflow(o.value.imag(), &out->value_im);
  if (rc != AF_OK) return set_error(rc, "value exceeds double range");
  out->err_est = static_cast<double>(o.err_est);
  out->method = method_to_c(o.method);
  out->work = o.work;
  return AF_OK;
}

}  // namespace

struct af_config {
  altfact::EvalConfig cfg;
};

namespace {
const altfact::EvalConfig& config_or_default(const af_config* cfg) {
  static const altfact::EvalConfig defaults;
  return cfg ? cfg->cfg : defaults;
}
}  // namespace

extern "C" {

af_config* af_config_new(void) {
  return new (std::nothrow) af_config{};
}

void af_config_free(af_config* cfg) { delete cfg; }

int af_config_set_tol(af_config* cfg, double tol_rel, double tol_abs) {
  if (!cfg) return set_error(AF_EUSAGE, "null config");
  if (!(tol_rel > 0.0) || !(tol_abs > 0.0))
    return set_error(AF_EUSAGE, "tolerances must be positive");
  cfg->cfg.tol_rel = tol_rel;
  cfg->cfg.tol_abs = tol_abs;
  return AF_OK;
}

int af_config_set_max_terms(af_config* cfg, int max_terms) {
  if (!cfg) return set_error(AF_EUSAGE, "null config");
  if (max_terms < 8) return set_error(AF_EUSAGE, "max_terms must be >= 8");
  cfg->cfg.max_terms = max_terms;
  return AF_OK;
}

int af_config_set_quad_max_panels(af_config* cfg, int panels) {
  if (!cfg) return set_error(AF_EUSAGE, "null config");
  if (panels < 8) return set_error(AF_EUSAGE, "quad_max_panels must be >= 8");
  cfg->cfg.quad_max_panels = panels;
  return AF_OK;
}

int af_config_set_pole_guard(af_config* cfg, double radius) {
  if (!cfg) return set_error(AF_EUSAGE, "null config");
  if (!(radius > 0.0) || !(radius < 0.5))
    return set_error(AF_EUSAGE, "pole_guard_radius must lie in (0, 0.5)");
  cfg->cfg.pole_guard_radius = radius;
  return AF_OK;
}

int af_eval(int func, int method, double z_re, double z_im,
            const af_config* cfg, af_result* out) {
  if (!out) return set_error(AF_EUSAGE, "null result pointer");
  if (!std::isfinite(z_re) || !std::isfinite(z_im))
    return set_error(AF_EDOMAIN, "non-finite evaluation point");
  altfact::Representation rep;
  if (!method_from_c(method, rep))
    return set_error(AF_EUSAGE, "unknown method id");
  const altfact::cplx z(static_cast<altfact::real>(z_re),
                        static_cast<altfact::real>(z_im));
  try {
    const altfact::EvalConfig& c = config_or_default(cfg);
    altfact::EvalOutcome o;
    if (func == AF_FUNC_A) {
      o = altfact::a_eval(z, rep, c);
    } else if (func == AF_FUNC_A1) {
      o = altfact::a1_eval(z, rep, c);
    } else {
      return set_error(AF_EUSAGE, "af_eval handles AF_FUNC_A and AF_FUNC_A1");
    }
    return outcome_to_result(o, out);
  } catch (...) {
    return translate_current_exception();
  }
}

int af_singularity_info(int func, long long m, af_singularity* out) {
  if (!out) return set_error(AF_EUSAGE, "null result pointer");
  altfact::FunctionId id;
  switch (func) {
    case AF_FUNC_A: id = altfact::FunctionId::A; break;
    case AF_FUNC_A1: id = altfact::FunctionId::A1; break;
    case AF_FUNC_GAMMA: id = altfact::FunctionId::Gamma; break;
    default: return set_error(AF_EUSAGE, "unknown function id");
  }
  try {
    const altfact::SingularityInfo info = altfact::singularity_info(id, m);
    out->location = info.location;
    out->order = info.order;
    int rc = finite_double_or_overflow(info.residue.real(), &out->residue_re);
    if (rc == AF_OK)
      rc = finite_double_or_overflow(info.residue.imag(), &out->residue_im);
    if (rc == AF_OK)
      rc = finite_double_or_overflow(info.principal_value.real(), &out->pv_re);
    if (rc == AF_OK)
      rc = finite_double_or_overflow(info.principal_value.imag(), &out->pv_im);
    if (rc != AF_OK) return set_error(rc, "singularity data exceeds double");
    return AF_OK;
  } catch (...) {
    return translate_current_exception();
  }
}

int af_constant_count(void) {
  return static_cast<int>(altfact::named_constants().size());
}

int af_constant_get(int index, af_constant* out) {
  if (!out) return set_error(AF_EUSAGE, "null result pointer");
  const auto& table = altfact::named_constants();
  if (index < 0 || index >= static_cast<int>(table.size()))
    return set_error(AF_EUSAGE, "constant index out of range");
  const auto& c = table[static_cast<size_t>(index)];
  copy_str(out->name, sizeof out->name, c.name);
  out->value = c.value;
  copy_str(out->definition, sizeof out->definition, c.definition);
  copy_str(out->source, sizeof out->source, c.source);
  return AF_OK;
}

int af_l2_routes(double out[3]) {
  if (!out) return set_error(AF_EUSAGE, "null result pointer");
  try {
    const auto r = altfact::l2_routes();
    for (int i = 0; i < 3; ++i) out[i] = static_cast<double>(r[i]);
    return AF_OK;
  } catch (...) {
    return translate_current_exception();
  }
}

int af_gompertz_routes(double out[2]) {
  if (!out) return set_error(AF_EUSAGE, "null result pointer");
  try {
    const auto r = altfact::gompertz_routes();
    out[0] = static_cast<double>(r[0]);
    out[1] = static_cast<double>(r[1]);
    return AF_OK;
  } catch (...) {
    return translate_current_exception();
  }
}

int af_check_run(const char* suite, long samples, uint64_t seed,
                 const af_config* cfg, af_check_report* out, int capacity) {
  if (!suite || !out || capacity <= 0)
    return -set_error(AF_EUSAGE, "null suite/buffer");
  try {
    const auto reports =
        altfact::run_check(suite, samples, seed, config_or_default(cfg));
    const int n = static_cast<int>(reports.size()) < capacity
                      ? static_cast<int>(reports.size())
                      : capacity;
    for (int i = 0; i < n; ++i) {
      copy_str(out[i].name, sizeof out[i].name, reports[i].name);
      out[i].samples = reports[i].samples;
      out[i].max_abs_residual = reports[i].max_abs_residual;
      out[i].max_rel_residual = reports[i].max_rel_residual;
      out[i].passed = reports[i].passed ? 1 : 0;
    }
    return n;
  } catch (...) {
    return -translate_current_exception();
  }
}

int af_nearest_integer(double z_re, double z_im, long long* m, double* dist) {
  if (!m || !dist) return set_error(AF_EUSAGE, "null result pointer");
  if (!std::isfinite(z_re) || !std::isfinite(z_im))
    return set_error(AF_EDOMAIN, "non-finite point");
  const auto ni = altfact::nearest_integer(
      altfact::cplx(static_cast<altfact::real>(z_re),
                    static_cast<altfact::real>(z_im)));
  *m = ni.m;
  *dist = static_cast<double>(ni.dist);
  return AF_OK;
}

const char* af_status_str(int status) {
  switch (status) {
    case AF_OK: return "ok";
    case AF_EUSAGE: return "usage error";
    case AF_EDOMAIN: return "domain error";
    case AF_EPOLE: return "pole proximity";
    case AF_ENOCONV: return "no convergence";
    case AF_EOVERFLOW: return "overflow";
    case AF_EINTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* af_last_error(void) { return g_last_error.c_str(); }

const char* af_version(void) { return "1.0.0"; }

}  // extern "C"
