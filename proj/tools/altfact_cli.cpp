// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the core exclusively through the C API
// in altfact/altfact.h.
//
// Exit codes: 0 success, 1 usage, 2 domain/pole errors, 3 failed checks.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "altfact/altfact.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitCheckFailed = 3;

int status_to_exit(int status) {
  switch (status) {
    case AF_OK: return kExitOk;
    case AF_EUSAGE: return kExitUsage;
    default: return kExitDomain;
  }
}

const char* method_name(int m) {
  switch (m) {
    case AF_METHOD_INTEGRAL: return "integral";
    case AF_METHOD_RECURRENCE: return "recurrence";
    case AF_METHOD_SERIES: return "series";
    case AF_METHOD_CLOSED: return "closed";
    case AF_METHOD_SLAVIC: return "slavic";
    case AF_METHOD_AUTO: return "auto";
  }
  return "?";
}

bool parse_method(const std::string& s, int& out) {
  if (s == "auto") out = AF_METHOD_AUTO;
  else if (s == "integral") out = AF_METHOD_INTEGRAL;
  else if (s == "recurrence") out = AF_METHOD_RECURRENCE;
  else if (s == "series") out = AF_METHOD_SERIES;
  else if (s == "closed") out = AF_METHOD_CLOSED;
  else if (s == "slavic") out = AF_METHOD_SLAVIC;
  else return false;
  return true;
}

bool parse_function(const std::string& s, int& out, bool allow_gamma) {
  if (s == "A") out = AF_FUNC_A;
  else if (s == "A1") out = AF_FUNC_A1;
  else if (allow_gamma && s == "Gamma") out = AF_FUNC_GAMMA;
  else return false;
  return true;
}

struct ConfigHandle {
  af_config* ptr = nullptr;
  ConfigHandle() : ptr(af_config_new()) {}
  ~ConfigHandle() { af_config_free(ptr); }
  ConfigHandle(const ConfigHandle&) = delete;
  ConfigHandle& operator=(const ConfigHandle&) = delete;
};

// --tol flag with ALTFACT_TOL as the environment fallback
int apply_tolerances(af_config* cfg, double tol_flag, int max_terms_flag) {
  double tol = tol_flag;
  if (tol <= 0.0) {
    if (const char* env = std::getenv("ALTFACT_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0' || !(v > 0.0)) {
        std::fprintf(stderr, "altfact: invalid ALTFACT_TOL value '%s'\n", env);
        return kExitUsage;
      }
      tol = v;
    }
  }
  if (tol > 0.0 && af_config_set_tol(cfg, tol, tol) != AF_OK) {
    std::fprintf(stderr, "altfact: %s\n", af_last_error());
    return kExitUsage;
  }
  if (max_terms_flag > 0 &&
      af_config_set_max_terms(cfg, max_terms_flag) != AF_OK) {
    std::fprintf(stderr, "altfact: %s\n", af_last_error());
    return kExitUsage;
  }
  return kExitOk;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_err(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

json record_to_json(double z_re, double z_im, const af_result& r) {
  return json{{"z_re", z_re},
              {"z_im", z_im},
              {"value_re", r.value_re},
              {"value_im", r.value_im},
              {"err_est", r.err_est},
              {"method", method_name(r.method)}};
}

// ---------------------------------------------------------------- eval ----
int cmd_eval(int func, const std::string& method_str, double re, double im,
             double tol, int max_terms, const std::string& format) {
  int method = AF_METHOD_AUTO;
  if (!parse_method(method_str, method)) {
    std::fprintf(stderr, "altfact: unknown method '%s'\n", method_str.c_str());
    return kExitUsage;
  }
  ConfigHandle cfg;
  if (int rc = apply_tolerances(cfg.ptr, tol, max_terms); rc != kExitOk)
    return rc;
  af_result res{};
  const int st = af_eval(func, method, re, im, cfg.ptr, &res);
  if (st == AF_EPOLE) {
    long long m = 0;
    double dist = 0.0;
    af_nearest_integer(re, im, &m, &dist);
    std::fprintf(stderr,
                 "altfact: %s; run 'altfact pole-table --function %s "
                 "--min %lld --max %lld' for the residue and principal "
                 "value\n",
                 af_last_error(), func == AF_FUNC_A ? "A" : "A1", m, m);
    return kExitDomain;
  }
  if (st != AF_OK) {
    std::fprintf(stderr, "altfact: %s\n", af_last_error());
    return status_to_exit(st);
  }
  if (format == "json") {
    std::printf("%s\n", record_to_json(re, im, res).dump().c_str());
  } else {
    std::printf("z_re,z_im,value_re,value_im,err_est,method\n");
    std::printf("%s,%s,%s,%s,%s,%s\n", fmt_double(re).c_str(),
                fmt_double(im).c_str(), fmt_double(res.value_re).c_str(),
                fmt_double(res.value_im).c_str(), fmt_err(res.err_est).c_str(),
                method_name(res.method));
  }
  return kExitOk;
}

// ---------------------------------------------------------- pole-table ----
int cmd_pole_table(int func, long long m_min, long long m_max,
                   const std::string& format) {
  if (m_min > m_max) {
    std::fprintf(stderr, "altfact: empty range [%lld, %lld]\n", m_min, m_max);
    return kExitUsage;
  }
  json rows = json::array();
  if (format != "json")
    std::printf("m,order,residue_re,residue_im,pv_re,pv_im\n");
  for (long long m = m_min; m <= m_max; ++m) {
    af_singularity s{};
    const int st = af_singularity_info(func, m, &s);
    if (st != AF_OK) {
      std::fprintf(stderr, "altfact: m = %lld: %s\n", m, af_last_error());
      return status_to_exit(st);
    }
    if (format == "json") {
      rows.push_back(json{{"m", m},
                          {"order", s.order},
                          {"residue_re", s.residue_re},
                          {"residue_im", s.residue_im},
                          {"pv_re", s.pv_re},
                          {"pv_im", s.pv_im}});
    } else {
      std::printf("%lld,%d,%s,%s,%s,%s\n", m, s.order,
                  fmt_double(s.residue_re).c_str(),
                  fmt_double(s.residue_im).c_str(),
                  fmt_double(s.pv_re).c_str(), fmt_double(s.pv_im).c_str());
    }
  }
  if (format == "json") std::printf("%s\n", rows.dump().c_str());
  return kExitOk;
}

// ---------------------------------------------------------------- check ----
int cmd_check(const std::string& suite, long samples, uint64_t seed,
              double tol, int max_terms) {
  ConfigHandle cfg;
  if (int rc = apply_tolerances(cfg.ptr, tol, max_terms); rc != kExitOk)
    return rc;
  af_check_report reports[64];
  const int n = af_check_run(suite.c_str(), samples, seed, cfg.ptr, reports,
                             64);
  if (n < 0) {
    std::fprintf(stderr, "altfact: %s\n", af_last_error());
    return status_to_exit(-n);
  }
  bool all_passed = true;
  for (int i = 0; i < n; ++i) {
    const auto& r = reports[i];
    std::printf("%-22s samples=%-6ld max_abs=%s max_rel=%s %s\n", r.name,
                r.samples, fmt_err(r.max_abs_residual).c_str(),
                fmt_err(r.max_rel_residual).c_str(),
                r.passed ? "pass" : "FAIL");
    all_passed = all_passed && r.passed;
  }
  std::printf("check %s: %s\n", suite.c_str(), all_passed ? "pass" : "FAIL");
  return all_passed ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------ constants ----
int cmd_constants() {
  const int n = af_constant_count();
  std::printf("%-12s %-22s %-28s %s\n", "name", "value", "definition",
              "source");
  for (int i = 0; i < n; ++i) {
    af_constant c{};
    if (af_constant_get(i, &c) != AF_OK) {
      std::fprintf(stderr, "altfact: %s\n", af_last_error());
      return kExitDomain;
    }
    std::printf("%-12s %-22s %-28s %s\n", c.name, fmt_double(c.value).c_str(),
                c.definition, c.source);
  }
  double l2[3];
  double gz[2];
  if (af_l2_routes(l2) != AF_OK || af_gompertz_routes(gz) != AF_OK) {
    std::fprintf(stderr, "altfact: %s\n", af_last_error());
    return kExitDomain;
  }
  std::printf("\nL2 routes\n");
  std::printf("  via Ei(-1):          %s\n", fmt_double(l2[0]).c_str());
  std::printf("  via gamma ratios:    %s (delta %s)\n",
              fmt_double(l2[1]).c_str(), fmt_err(l2[1] - l2[0]).c_str());
  std::printf("  via factorial sum:   %s (delta %s)\n",
              fmt_double(l2[2]).c_str(), fmt_err(l2[2] - l2[0]).c_str());
  std::printf("gompertz routes\n");
  std::printf("  -e Ei(-1):           %s\n", fmt_double(gz[0]).c_str());
  std::printf("  e (sum - gamma):     %s (delta %s)\n",
              fmt_double(gz[1]).c_str(), fmt_err(gz[1] - gz[0]).c_str());
  std::printf("  1 - L2:              %s (delta %s)\n",
              fmt_double(1.0 - l2[0]).c_str(),
              fmt_err((1.0 - l2[0]) - gz[0]).c_str());
  return kExitOk;
}

// ----------------------------------------------------------------- grid ----
int cmd_grid(int func, double re_min, double re_max, double im_min,
             double im_max, double step, double tol, int max_terms,
             const std::string& format) {
  if (!(step > 0.0) || re_min > re_max || im_min > im_max) {
    std::fprintf(stderr, "altfact: bad grid ranges\n");
    return kExitUsage;
  }
  ConfigHandle cfg;
  if (int rc = apply_tolerances(cfg.ptr, tol, max_terms); rc != kExitOk)
    return rc;

  json rows = json::array();
  if (format != "json")
    std::printf("z_re,z_im,value_re,value_im,err_est,method,skipped\n");

  const long n_im = static_cast<long>((im_max - im_min) / step + 1e-9) + 1;
  const long n_re = static_cast<long>((re_max - re_min) / step + 1e-9) + 1;
  for (long i = 0; i < n_im; ++i) {
    const double im = im_min + static_cast<double>(i) * step;
    for (long j = 0; j < n_re; ++j) {
      const double re = re_min + static_cast<double>(j) * step;
      af_result res{};
      const int st = af_eval(func, AF_METHOD_AUTO, re, im, cfg.ptr, &res);
      const bool skipped = st == AF_EPOLE;
      if (!skipped && st != AF_OK) {
        std::fprintf(stderr, "altfact: z = (%g, %g): %s\n", re, im,
                     af_last_error());
        return status_to_exit(st);
      }
      if (format == "json") {
        json row = skipped
                       ? json{{"z_re", re},      {"z_im", im},
                              {"value_re", nullptr}, {"value_im", nullptr},
                              {"err_est", nullptr},  {"method", nullptr},
                              {"skipped", "pole"}}
                       : record_to_json(re, im, res);
        if (!skipped) row["skipped"] = nullptr;
        rows.push_back(row);
      } else if (skipped) {
        std::printf("%s,%s,,,,,pole\n", fmt_double(re).c_str(),
                    fmt_double(im).c_str());
      } else {
        std::printf("%s,%s,%s,%s,%s,%s,\n", fmt_double(re).c_str(),
                    fmt_double(im).c_str(), fmt_double(res.value_re).c_str(),
                    fmt_double(res.value_im).c_str(),
                    fmt_err(res.err_est).c_str(), method_name(res.method));
      }
    }
  }
  if (format == "json") std::printf("%s\n", rows.dump().c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alternating factorial function library (A and A1)"};
  app.require_subcommand(1);

  std::string function_str = "A";
  std::string method_str = "auto";
  std::string format = "csv";
  std::string suite = "all";
  double re = 0.0, im = 0.0;
  double tol = -1.0;
  int max_terms = -1;
  long long m_min = 0, m_max = 0;
  long samples = 0;
  uint64_t seed = 0;
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0, step = 0.1;

  auto* eval = app.add_subcommand("eval", "evaluate A or A1 at one point");
  eval->add_option("--function", function_str, "A or A1");
  eval->add_option("--re", re, "re z")->required();
  eval->add_option("--im", im, "im z");
  eval->add_option("--method", method_str,
                   "auto|integral|recurrence|series|closed|slavic");
  eval->add_option("--tol", tol, "relative/absolute tolerance");
  eval->add_option("--max-terms", max_terms, "series/fraction budget");
  eval->add_option("--format", format, "csv or json");

  auto* pole = app.add_subcommand(
      "pole-table", "order, residue and principal value at integers");
  pole->add_option("--function", function_str, "A, A1 or Gamma");
  pole->add_option("--min", m_min, "first integer")->required();
  pole->add_option("--max", m_max, "last integer")->required();
  pole->add_option("--format", format, "csv or json");

  auto* check = app.add_subcommand("check", "run consistency suites");
  check->add_option("--suite", suite, "fe|repr|pv|identities|all");
  check->add_option("--samples", samples, "sample count (0 = default)");
  check->add_option("--seed", seed, "random seed");
  check->add_option("--tol", tol, "relative/absolute tolerance");
  check->add_option("--max-terms", max_terms, "series/fraction budget");

  app.add_subcommand("constants",
                     "library constants and their computation routes");

  auto* grid = app.add_subcommand("grid", "evaluate over a rectangular grid");
  grid->add_option("--function", function_str, "A or A1");
  grid->add_option("--re-min", re_min, "start of re range")->required();
  grid->add_option("--re-max", re_max, "end of re range")->required();
  grid->add_option("--im-min", im_min, "start of im range");
  grid->add_option("--im-max", im_max, "end of im range");
  grid->add_option("--step", step, "grid step")->required();
  grid->add_option("--tol", tol, "relative/absolute tolerance");
  grid->add_option("--max-terms", max_terms, "series/fraction budget");
  grid->add_option("--format", format, "csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (format != "csv" && format != "json") {
    std::fprintf(stderr, "altfact: unknown format '%s'\n", format.c_str());
    return kExitUsage;
  }

  int func = AF_FUNC_A;
  if (app.got_subcommand("eval") || app.got_subcommand("grid")) {
    if (!parse_function(function_str, func, false)) {
      std::fprintf(stderr, "altfact: unknown function '%s'\n",
                   function_str.c_str());
      return kExitUsage;
    }
  }

  if (app.got_subcommand("eval"))
    return cmd_eval(func, method_str, re, im, tol, max_terms, format);
  if (app.got_subcommand("pole-table")) {
    if (!parse_function(function_str, func, true)) {
      std::fprintf(stderr, "altfact: unknown function '%s'\n",
                   function_str.c_str());
      return kExitUsage;
    }
    return cmd_pole_table(func, m_min, m_max, format);
  }
  if (app.got_subcommand("check"))
    return cmd_check(suite, samples, seed, tol, max_terms);
  if (app.got_subcommand("constants")) return cmd_constants();
  if (app.got_subcommand("grid"))
    return cmd_grid(func, re_min, re_max, im_min, im_max, step, tol,
                    max_terms, format);
  return kExitUsage;
}
