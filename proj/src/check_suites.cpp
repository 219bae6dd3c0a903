// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#include "check_suites.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alt_kurepa.hpp"
#include "complex_core.hpp"
#include "gamma_family.hpp"
#include "identity_suite.hpp"
#include "singular_structure.hpp"
#include "special_aux.hpp"

namespace altfact {

cplx Sampler::in_disc(double radius, double min_integer_dist) {
  while (true) {
    const double re = uniform(-radius, radius);
    const double im = uniform(-radius, radius);
    const cplx z(static_cast<real>(re), static_cast<real>(im));
    if (std::abs(z) > static_cast<real>(radius)) continue;
    if (nearest_integer(z).dist < static_cast<real>(min_integer_dist))
      continue;
    return z;
  }
}

cplx Sampler::in_rect(double re_lo, double re_hi, double im_lo, double im_hi,
                      double min_integer_dist) {
  while (true) {
    const double re = uniform(re_lo, re_hi);
    const double im = uniform(im_lo, im_hi);
    const cplx z(static_cast<real>(re), static_cast<real>(im));
    if (nearest_integer(z).dist < static_cast<real>(min_integer_dist))
      continue;
    return z;
  }
}

namespace {

struct Residual {
  double abs = 0.0;
  double rel = 0.0;
  void fold(real a, real r) {
    abs = std::max(abs, static_cast<double>(a));
    rel = std::max(rel, static_cast<double>(r));
  }
};

CheckReport make_report(const std::string& name, long samples,
                        const Residual& res, double tol_rel,
                        double tol_abs = -1.0) {
  CheckReport rep;
  rep.name = name;
  rep.samples = samples;
  rep.max_abs_residual = res.abs;
  rep.max_rel_residual = res.rel;
  rep.passed = tol_abs >= 0.0 ? (res.abs <= tol_abs) : (res.rel <= tol_rel);
  return rep;
}

// ---- fe: A(z) + A(z-1) = Gamma(z+1), normalized by 1 + |Gamma(z+1)| ----
std::vector<CheckReport> suite_fe(long samples, uint64_t seed,
                                  const EvalConfig& cfg) {
  if (samples <= 0) samples = 300;
  Sampler smp(seed);
  Residual res_a, res_a1;
  long done = 0;
  while (done < samples) {
    const cplx z = smp.in_disc(6.0, 0.1);
    if (nearest_integer(z - 1.0L).dist < 0.1L) continue;
    ++done;
    const cplx g = gamma(z + 1.0L, cfg.pole_guard_radius);
    const real denom = 1.0L + std::abs(g);
    {
      const cplx r = a_eval(z, Representation::Auto, cfg).value +
                     a_eval(z - 1.0L, Representation::Auto, cfg).value - g;
      res_a.fold(std::abs(r), std::abs(r) / denom);
    }
    {
      const cplx r = a1_closed(z, cfg).value + a1_closed(z - 1.0L, cfg).value -
                     g;
      res_a1.fold(std::abs(r), std::abs(r) / denom);
    }
  }
  return {make_report("fe:A", done, res_a, 1e-8),
          make_report("fe:A1", done, res_a1, 1e-8)};
}

// ---- repr: pairwise agreement of independent representations ----
std::vector<CheckReport> suite_repr(long samples, uint64_t seed,
                                    const EvalConfig& cfg) {
  if (samples <= 0) samples = 100;
  Sampler smp(seed);
  Residual pos, neg;
  for (long i = 0; i < samples; ++i) {
    const cplx z = smp.in_rect(0.0, 3.0, -3.0, 3.0, 0.1);
    const cplx vi = a_integral(z, cfg).value;
    const cplx vc = a_closed(z, cfg).value;
    const cplx vs = a_slavic(z, cfg).value;
    const real scale =
        std::max({std::abs(vi), std::abs(vc), std::abs(vs), real(1e-30L)});
    const real worst = std::max(
        {std::abs(vi - vc), std::abs(vi - vs), std::abs(vc - vs)});
    pos.fold(worst, worst / scale);
  }
  for (long i = 0; i < samples; ++i) {
    const cplx z = smp.in_rect(-3.0, 0.0, -3.0, 3.0, 0.1);
    const cplx vr = a_recurrence(z, cfg).value;
    const cplx vc = a_closed(z, cfg).value;
    const cplx vs = a_slavic(z, cfg).value;
    const real scale =
        std::max({std::abs(vr), std::abs(vc), std::abs(vs), real(1e-30L)});
    const real worst = std::max(
        {std::abs(vr - vc), std::abs(vr - vs), std::abs(vc - vs)});
    neg.fold(worst, worst / scale);
  }
  return {make_report("repr:pos", samples, pos, 1e-7),
          make_report("repr:neg", samples, neg, 1e-7)};
}

// ---- pv: numeric contour/symmetric-limit machinery vs closed forms ----
std::vector<CheckReport> suite_pv(long, uint64_t, const EvalConfig& cfg) {
  std::vector<CheckReport> out;

  const auto a1_fn = [&cfg](const cplx& w) { return a1_closed(w, cfg).value; };
  const auto a_fn = [&cfg](const cplx& w) { return a_closed(w, cfg).value; };
  const auto gamma_fn = [&cfg](const cplx& w) {
    return gamma(w, cfg.pole_guard_radius);
  };

  Residual a1_res;
  for (long long m = -6; m <= 6; ++m) {
    const cplx rn = residue_numeric(a1_fn, m);
    const cplx pvn = pv_contour(a1_fn, m);
    a1_res.fold(std::abs(rn - residue_a1(m)), 0.0);
    a1_res.fold(std::abs(pvn - pv_a1(m)), 0.0);
  }
  out.push_back(make_report("pv:a1-contour", 13, a1_res, 0.0, 1e-6));

  Residual ra;
  for (int n = 2; n <= 6; ++n) {
    const cplx rn = residue_numeric(a_fn, -n);
    ra.fold(std::abs(rn - residue_a(n)), 0.0);
  }
  out.push_back(make_report("pv:a-residue", 5, ra, 0.0, 1e-6));

  Residual pg;
  for (long long n = 0; n <= 5; ++n) {
    const cplx pvn = pv_numeric(gamma_fn, -n);
    pg.fold(std::abs(pvn - pv_gamma(-n)), 0.0);
  }
  out.push_back(make_report("pv:gamma-symmetric", 6, pg, 0.0, 1e-7));

  // additivity at a shared pole: p.v.(Gamma + A1) = p.v. Gamma + p.v. A1
  Residual add;
  for (long long m : {-2LL, 0LL}) {
    const auto fsum = [&](const cplx& w) {
      return gamma_fn(w) + a1_fn(w);
    };
    const cplx lhs = pv_numeric(fsum, m);
    const cplx rhs = pv_numeric(gamma_fn, m) + pv_numeric(a1_fn, m);
    add.fold(std::abs(lhs - rhs), 0.0);
  }
  out.push_back(make_report("pv:additivity", 2, add, 0.0, 1e-6));

  // p.v. A(-n) + p.v. A(-n-1) = p.v. Gamma(-n+1), closed forms
  Residual fe_pole;
  for (long long n = 2; n <= 6; ++n) {
    const real lhs = pv_a(-n) + pv_a(-n - 1);
    const real rhs = pv_gamma(-(n - 1));
    fe_pole.fold(std::abs(lhs - rhs), 0.0);
  }
  out.push_back(make_report("pv:fe-at-poles", 5, fe_pole, 0.0, 1e-12));

  // product rule vs direct symmetric limit: f1 = exp, f2 = Gamma at 0
  Residual prod;
  {
    const auto exp_fn = [](const cplx& w) { return std::exp(w); };
    const cplx via_rule =
        pv_product_rule(exp_fn, cplx(pv_gamma(0), 0.0L), cplx(1.0L, 0.0L), 0);
    const auto prod_fn = [&](const cplx& w) {
      return std::exp(w) * gamma_fn(w);
    };
    const cplx direct = pv_numeric(prod_fn, 0);
    prod.fold(std::abs(via_rule - direct), 0.0);
    prod.fold(std::abs(via_rule - cplx(1.0L - kEulerGamma, 0.0L)), 0.0);
  }
  out.push_back(make_report("pv:product-rule", 1, prod, 0.0, 1e-6));

  // contour p.v. A1(n) - contour p.v. A(n) = (-1)^n L2 at regular n of A
  Residual a1_vs_a;
  for (long long m : {-1LL, 0LL, 1LL, 2LL}) {
    const cplx d = pv_contour(a1_fn, m) - pv_contour(a_fn, m);
    const real expect = (m % 2 == 0) ? constant_l2() : -constant_l2();
    a1_vs_a.fold(std::abs(d - expect), 0.0);
  }
  out.push_back(make_report("pv:a1-minus-a", 4, a1_vs_a, 0.0, 1e-6));

  return out;
}

// ---- identities: the series/closed-form lemma suite ----
std::vector<CheckReport> suite_identities(long, uint64_t seed,
                                          const EvalConfig&) {
  std::vector<CheckReport> out;
  Sampler smp(seed);

  const cplx test_z[] = {
      cplx(0.0L, 0.0L),  cplx(1.0L, 0.0L),       cplx(-2.0L, 0.0L),
      cplx(0.5L, 1.5L),  cplx(-1.3L, 0.4L),      cplx(0.0L, 2.9L),
      cplx(2.5L, -1.0L), cplx(-0.75L, -0.25L),
  };

  Residual bigf;
  for (const cplx& z : test_z) {
    const cplx closed = -std::exp(-z) - z + 1.0L;
    bigf.fold(std::abs(big_f(z, 60) - closed), 0.0);
  }
  out.push_back(make_report("id:F-closed", 8, bigf, 0.0, 1e-10));

  Residual dsum;
  for (const cplx& z : test_z) {
    const cplx rhs = -std::exp(-z) + (1.0L - kE) * z + 1.0L;
    dsum.fold(std::abs(double_sum_lhs(z, 60, 60) - rhs), 0.0);
  }
  out.push_back(make_report("id:double-sum", 8, dsum, 0.0, 1e-10));

  Residual tele;
  for (int k = 2; k <= 12; ++k) {
    const real limit = ((k - 1) % 2 == 0 ? 1.0L : -1.0L) / factorial(k);
    tele.fold(std::abs(telescoping_inner(k, 40) - limit), 0.0);
  }
  out.push_back(make_report("id:telescoping", 11, tele, 0.0, 1e-10));

  Residual rama;
  for (const real x : {1.0L, -2.0L, 0.5L}) {
    const IdentityReport rep = ramanujan_check(x, 60);
    rama.fold(rep.max_abs_residual, 0.0);
  }
  out.push_back(make_report("id:ramanujan", 3, rama, 0.0, 1e-10));

  // closed form == series, and f_n (-z)^n == MacLaurin remainder of g
  Residual fn_eq;
  long fn_samples = 0;
  for (int n = 1; n <= 10; ++n) {
    for (const cplx& z0 : test_z) {
      if (std::abs(z0) > 3.0L || std::abs(z0) < 0.5L) continue;
      ++fn_samples;
      fn_eq.fold(std::abs(f_n_closed(n, z0) - f_n_series(n, z0, 90)), 0.0);
      fn_eq.fold(std::abs(f_n_eval(n, z0) * ipow(-z0, n) -
                          maclaurin_remainder_g(n + 1, z0)),
                 0.0);
    }
  }
  out.push_back(make_report("id:fn-equivalence", fn_samples, fn_eq, 0.0,
                            1e-10));

  // |f_n(z)| <= e^rho (n+1+rho) rho^2/(n+2)! for |z| < rho
  long violations = 0;
  long bound_samples = 0;
  Residual bound_res;
  for (int n = 1; n <= 15; ++n) {
    for (const real rho : {1.0L, 2.0L, 3.0L}) {
      const real bound = f_n_bound(n, rho);
      for (int trial = 0; trial < 100; ++trial) {
        const double th = smp.uniform(0.0, 2.0 * 3.141592653589793);
        const double rr = smp.uniform(0.0, static_cast<double>(rho) * 0.999);
        const cplx z(static_cast<real>(rr * std::cos(th)),
                     static_cast<real>(rr * std::sin(th)));
        ++bound_samples;
        const real v = std::abs(f_n_eval(n, z));
        if (v > bound) {
          ++violations;
          bound_res.fold(v - bound, 0.0);
        }
      }
    }
  }
  out.push_back(make_report("id:fn-bound", bound_samples, bound_res, 0.0,
                            violations == 0 ? 1e30 : -1.0));
  out.back().passed = violations == 0;

  // h-chain: |f_n(z)| <= R_{n+1}(h)(|z|) / |z|^n
  long h_viol = 0;
  long h_samples = 0;
  for (int n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const double th = smp.uniform(0.0, 2.0 * 3.141592653589793);
      const double rr = smp.uniform(0.05, 2.999);
      const cplx z(static_cast<real>(rr * std::cos(th)),
                   static_cast<real>(rr * std::sin(th)));
      ++h_samples;
      const real t = std::abs(z);
      const real rhs = h_remainder_tail(n + 1, t) / std::pow(t, real(n));
      if (std::abs(f_n_eval(n, z)) > rhs + 1e-12L) ++h_viol;
    }
  }
  CheckReport hrep;
  hrep.name = "id:h-chain";
  hrep.samples = h_samples;
  hrep.passed = h_viol == 0;
  out.push_back(hrep);

  // interchange of summation: sum_k [tail limit] z^k reproduces F's closed
  // form
  Residual inter;
  for (const cplx& z : {cplx(1.0L, 0.0L), cplx(-2.0L, 0.0L),
                        cplx(0.5L, 1.0L), cplx(3.0L, 0.0L),
                        cplx(-3.0L, 0.0L)}) {
    cplx sum(0.0L, 0.0L);
    for (int k = 2; k <= 60; ++k)
      sum += telescoping_inner(k, 60) * ipow(z, k);
    const cplx closed = -std::exp(-z) - z + 1.0L;
    inter.fold(std::abs(sum - closed), 0.0);
  }
  out.push_back(make_report("id:interchange", 5, inter, 0.0, 1e-10));

  // truncation of F dominated by the bound tail: |F_N - closed| <=
  // sum_{n>N} bound(n, rho) for |z| < rho
  Residual tailres;
  {
    const real rho = 2.0L;
    const int N = 20;
    real tail = 0.0L;
    for (int n = N + 1; n <= N + 400; ++n) tail += f_n_bound(n, rho);
    bool ok = true;
    for (const cplx& z : {cplx(1.5L, 0.0L), cplx(-1.0L, 1.0L),
                          cplx(0.0L, 1.9L)}) {
      const cplx closed = -std::exp(-z) - z + 1.0L;
      const real trunc = std::abs(big_f(z, N) - closed);
      if (trunc > tail + 1e-15L) ok = false;
      tailres.fold(trunc, 0.0);
    }
    CheckReport rep;
    rep.name = "id:tail-domination";
    rep.samples = 3;
    rep.max_abs_residual = tailres.abs;
    rep.passed = ok;
    out.push_back(rep);
  }

  return out;
}

}  // namespace

std::vector<CheckReport> run_check(const std::string& suite, long samples,
                                   uint64_t seed, const EvalConfig& cfg) {
  cfg.validate();
  std::vector<CheckReport> out;
  const bool all = suite == "all";
  bool matched = false;
  if (all || suite == "fe") {
    auto r = suite_fe(samples, seed, cfg);
    out.insert(out.end(), r.begin(), r.end());
    matched = true;
  }
  if (all || suite == "repr") {
    auto r = suite_repr(samples, seed, cfg);
    out.insert(out.end(), r.begin(), r.end());
    matched = true;
  }
  if (all || suite == "pv") {
    auto r = suite_pv(samples, seed, cfg);
    out.insert(out.end(), r.begin(), r.end());
    matched = true;
  }
  if (all || suite == "identities") {
    auto r = suite_identities(samples, seed, cfg);
    out.insert(out.end(), r.begin(), r.end());
    matched = true;
  }
  if (!matched)
    throw std::invalid_argument("run_check: unknown suite '" + suite + "'");
  return out;
}

}  // namespace altfact
