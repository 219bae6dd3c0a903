// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared-library surface exactly as an external C client
// would: through altfact/altfact.h only.

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <thread>
#include <vector>

#include "altfact/altfact.h"

TEST_CASE("config lifecycle and validation") {
  af_config* cfg = af_config_new();
  REQUIRE(cfg != nullptr);
  CHECK(af_config_set_tol(cfg, 1e-12, 1e-12) == AF_OK);
  CHECK(af_config_set_tol(cfg, -1.0, 1e-12) == AF_EUSAGE);
  CHECK(af_config_set_max_terms(cfg, 4) == AF_EUSAGE);
  CHECK(af_config_set_max_terms(cfg, 200) == AF_OK);
  CHECK(af_config_set_quad_max_panels(cfg, 4) == AF_EUSAGE);
  CHECK(af_config_set_quad_max_panels(cfg, 1024) == AF_OK);
  CHECK(af_config_set_pole_guard(cfg, 0.7) == AF_EUSAGE);
  CHECK(af_config_set_pole_guard(cfg, 1e-3) == AF_OK);
  af_config_free(cfg);
  af_config_free(nullptr);  // must be a no-op
}

TEST_CASE("af_eval basic values") {
  af_result r{};
  CHECK(af_eval(AF_FUNC_A, AF_METHOD_AUTO, 4.0, 0.0, nullptr, &r) == AF_OK);
  CHECK(r.value_re == 19.0);
  CHECK(r.value_im == 0.0);
  CHECK(r.method != AF_METHOD_AUTO);
  CHECK(r.work >= 1);

  CHECK(af_eval(AF_FUNC_A, AF_METHOD_AUTO, -1.0, 0.0, nullptr, &r) == AF_OK);
  CHECK(r.value_re == 1.0);

  CHECK(af_eval(AF_FUNC_A, AF_METHOD_CLOSED, 3.0, 0.0, nullptr, &r) == AF_OK);
  CHECK(std::abs(r.value_re - 5.0) < 1e-9);
}

TEST_CASE("af_eval error mapping") {
  af_result r{};
  // A1 pole at integers
  CHECK(af_eval(AF_FUNC_A1, AF_METHOD_AUTO, 1.0, 0.0, nullptr, &r) ==
        AF_EPOLE);
  CHECK(std::strlen(af_last_error()) > 0);
  // A pole at -4
  CHECK(af_eval(AF_FUNC_A, AF_METHOD_AUTO, -4.0, 0.0, nullptr, &r) ==
        AF_EPOLE);
  // integral needs re z > 0
  CHECK(af_eval(AF_FUNC_A, AF_METHOD_INTEGRAL, -0.5, 0.0, nullptr, &r) ==
        AF_EDOMAIN);
  // series is not an A representation
  CHECK(af_eval(AF_FUNC_A, AF_METHOD_SERIES, 0.5, 0.0, nullptr, &r) ==
        AF_EUSAGE);
  // non-finite input
  CHECK(af_eval(AF_FUNC_A, AF_METHOD_AUTO, std::nan(""), 0.0, nullptr, &r) ==
        AF_EDOMAIN);
  CHECK(af_eval(99, AF_METHOD_AUTO, 0.5, 0.0, nullptr, &r) == AF_EUSAGE);
  CHECK(af_eval(AF_FUNC_A, 99, 0.5, 0.0, nullptr, &r) == AF_EUSAGE);
  CHECK(af_eval(AF_FUNC_A, AF_METHOD_AUTO, 0.5, 0.0, nullptr, nullptr) ==
        AF_EUSAGE);
  // results past double range surface as overflow, not infinities
  CHECK(af_eval(AF_FUNC_A, AF_METHOD_AUTO, 200.0, 0.0, nullptr, &r) ==
        AF_EOVERFLOW);
  CHECK(af_eval(AF_FUNC_A, AF_METHOD_AUTO, 2000.5, 0.0, nullptr, &r) ==
        AF_EOVERFLOW);
}

TEST_CASE("representations agree through the C surface") {
  af_result quad{}, closed{}, slavic{};
  REQUIRE(af_eval(AF_FUNC_A, AF_METHOD_INTEGRAL, 1.5, 0.5, nullptr, &quad) ==
          AF_OK);
  REQUIRE(af_eval(AF_FUNC_A, AF_METHOD_CLOSED, 1.5, 0.5, nullptr, &closed) ==
          AF_OK);
  REQUIRE(af_eval(AF_FUNC_A, AF_METHOD_SLAVIC, 1.5, 0.5, nullptr, &slavic) ==
          AF_OK);
  CHECK(std::abs(quad.value_re - closed.value_re) < 1e-8);
  CHECK(std::abs(quad.value_im - closed.value_im) < 1e-8);
  CHECK(std::abs(slavic.value_re - closed.value_re) < 1e-8);
  CHECK(std::abs(slavic.value_im - closed.value_im) < 1e-8);
}

TEST_CASE("af_singularity_info") {
  af_singularity s{};
  CHECK(af_singularity_info(AF_FUNC_A, -4, &s) == AF_OK);
  CHECK(s.order == 1);
  CHECK(std::abs(s.residue_re - 2.5) < 1e-15);

  CHECK(af_singularity_info(AF_FUNC_A, -1, &s) == AF_OK);
  CHECK(s.order == 0);
  CHECK(s.residue_re == 0.0);
  CHECK(s.pv_re == 1.0);

  CHECK(af_singularity_info(AF_FUNC_A1, 0, &s) == AF_OK);
  CHECK(s.order == 1);
  CHECK(std::abs(s.residue_re + 2.718281828459045) < 1e-14);
  CHECK(std::abs(s.pv_re - 0.4036526376768059) < 1e-14);

  CHECK(af_singularity_info(AF_FUNC_GAMMA, 0, &s) == AF_OK);
  CHECK(s.order == 1);
  CHECK(s.residue_re == 1.0);
  CHECK(std::abs(s.pv_re + 0.5772156649015329) < 1e-14);

  CHECK(af_singularity_info(99, 0, &s) == AF_EUSAGE);
  // factorial overflow past double range surfaces as AF_EOVERFLOW
  CHECK(af_singularity_info(AF_FUNC_GAMMA, 200, &s) == AF_EOVERFLOW);
}

TEST_CASE("constants and routes") {
  CHECK(af_constant_count() >= 4);
  bool saw_l2 = false;
  for (int i = 0; i < af_constant_count(); ++i) {
    af_constant c{};
    REQUIRE(af_constant_get(i, &c) == AF_OK);
    CHECK(std::strlen(c.name) > 0);
    CHECK(std::strlen(c.definition) > 0);
    if (std::strcmp(c.name, "L2") == 0) {
      saw_l2 = true;
      CHECK(std::abs(c.value - 0.4036526376768059) < 1e-15);
    }
  }
  CHECK(saw_l2);
  CHECK(af_constant_get(-1, nullptr) == AF_EUSAGE);

  double l2[3];
  REQUIRE(af_l2_routes(l2) == AF_OK);
  CHECK(std::abs(l2[0] - l2[1]) < 5e-9);
  CHECK(std::abs(l2[0] - l2[2]) < 5e-9);

  double gz[2];
  REQUIRE(af_gompertz_routes(gz) == AF_OK);
  CHECK(std::abs(gz[0] - gz[1]) < 1e-12);
  CHECK(std::abs(gz[0] - (1.0 - l2[0])) < 1e-15);
}

TEST_CASE("af_check_run determinism") {
  af_check_report a[16], b[16];
  const int na = af_check_run("fe", 40, 7, nullptr, a, 16);
  const int nb = af_check_run("fe", 40, 7, nullptr, b, 16);
  REQUIRE(na > 0);
  REQUIRE(na == nb);
  for (int i = 0; i < na; ++i) {
    CHECK(std::strcmp(a[i].name, b[i].name) == 0);
    CHECK(a[i].samples == b[i].samples);
    CHECK(a[i].max_abs_residual == b[i].max_abs_residual);
    CHECK(a[i].max_rel_residual == b[i].max_rel_residual);
    CHECK(a[i].passed == 1);
  }
  CHECK(af_check_run("bogus", 0, 0, nullptr, a, 16) < 0);
}

TEST_CASE("af_nearest_integer") {
  long long m = 0;
  double d = 0.0;
  CHECK(af_nearest_integer(2.4, 0.0, &m, &d) == AF_OK);
  CHECK(m == 2);
  CHECK(std::abs(d - 0.4) < 1e-15);
  CHECK(af_nearest_integer(1.0, 0.3, &m, &d) == AF_OK);
  CHECK(m == 1);
  CHECK(std::abs(d - 0.3) < 1e-15);
}

TEST_CASE("concurrent callers get identical results") {
  // pure evaluation paths share no mutable state
  constexpr int kThreads = 4;
  constexpr int kPoints = 50;
  std::vector<std::vector<double>> results(kThreads);
  std::vector<std::thread> workers;
  for (int t = 0; t < kThreads; ++t) {
    workers.emplace_back([t, &results] {
      results[t].reserve(kPoints * 2);
      for (int i = 0; i < kPoints; ++i) {
        const double re = 0.3 + 0.11 * i;
        af_result r{};
        REQUIRE(af_eval(AF_FUNC_A, AF_METHOD_CLOSED, re, 0.4, nullptr, &r) ==
                AF_OK);
        results[t].push_back(r.value_re);
        results[t].push_back(r.value_im);
      }
    });
  }
  for (auto& w : workers) w.join();
  for (int t = 1; t < kThreads; ++t) CHECK(results[t] == results[0]);
}

TEST_CASE("status strings and version") {
  CHECK(std::strcmp(af_status_str(AF_OK), "ok") == 0);
  CHECK(std::strlen(af_status_str(AF_EPOLE)) > 0);
  CHECK(std::strlen(af_version()) > 0);
}
