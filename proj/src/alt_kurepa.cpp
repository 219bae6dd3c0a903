// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#include "alt_kurepa.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "complex_core.hpp"
#include "gamma_family.hpp"
#include "special_aux.hpp"

namespace altfact {

namespace {

struct GlPoint {
  real x, w;
};

// 16-point Gauss-Legendre rule on [-1, 1]
constexpr GlPoint kGl16[] = {
    {-0.989400934991649932596154L, 0.0271524594117540948517806L},
    {-0.944575023073232576077988L, 0.0622535239386478928628438L},
    {-0.865631202387831743880468L, 0.0951585116824927848099251L},
    {-0.755404408355003033895101L, 0.124628971255533872052476L},
    {-0.617876244402643748446672L, 0.149595988816576732081502L},
    {-0.458016777657227386342419L, 0.169156519395002538189312L},
    {-0.281603550779258913230461L, 0.182603415044923588866764L},
    {-0.0950125098376374401853193L, 0.189450610455068496285397L},
    {0.0950125098376374401853193L, 0.189450610455068496285397L},
    {0.281603550779258913230461L, 0.182603415044923588866764L},
    {0.458016777657227386342419L, 0.169156519395002538189312L},
    {0.617876244402643748446672L, 0.149595988816576732081502L},
    {0.755404408355003033895101L, 0.124628971255533872052476L},
    {0.865631202387831743880468L, 0.0951585116824927848099251L},
    {0.944575023073232576077988L, 0.0622535239386478928628438L},
    {0.989400934991649932596154L, 0.0271524594117540948517806L},
};

void guard_poles_of_a(const cplx& z, const EvalConfig& cfg,
                      const char* who) {
  const auto [m, dist] = nearest_integer(z);
  if (m <= -2 && dist < static_cast<real>(cfg.pole_guard_radius)) {
    std::ostringstream os;
    os << who << ": pole of A at z = " << m;
    throw PoleProximity(os.str());
  }
}

void guard_all_integers(const cplx& z, const EvalConfig& cfg,
                        const char* who) {
  const auto [m, dist] = nearest_integer(z);
  if (dist < static_cast<real>(cfg.pole_guard_radius)) {
    std::ostringstream os;
    os << who << ": pole at z = " << m;
    throw PoleProximity(os.str());
  }
}

bool exact_integer(const cplx& z, long long& m) {
  if (z.imag() != 0.0L) return false;
  const real r = std::floor(z.real());
  if (r != z.real() || std::abs(r) > 1000.0L) return false;
  m = static_cast<long long>(r);
  return true;
}

// e Gamma(z+2) Gamma(-z-1, 1), the shared analytic block of both closed
// forms. Also returns an absolute error estimate and the CF iteration count.
cplx closed_gamma_block(const cplx& z, const EvalConfig& cfg, real& err,
                        long& work) {
  long terms = 0;
  const cplx g = gamma(z + 2.0L, cfg.pole_guard_radius);
  const cplx u = upper_incomplete_gamma(-z - 1.0L, 1.0L, cfg.tol_rel / 10.0,
                                        cfg.max_terms, &terms);
  const cplx block = kE * g * u;
  // gamma is good to a few eps; the fraction stops at tol_rel/10
  err = std::abs(block) *
        (8.0L * kEps + 4.0L * static_cast<real>(cfg.tol_rel) / 10.0L);
  work = terms + 1;
  return block;
}

}  // namespace

bigint a_integer_oracle(int n) {
  if (n < 0 || n > 500)
    throw std::domain_error("a_integer_oracle: n must be in [0, 500]");
  bigint sum = 0;
  bigint fact = 1;
  for (int i = 1; i <= n; ++i) {
    fact *= i;
    sum = fact - sum;
  }
  return sum;
}

real a_integer_oracle_real(int n) {
  return a_integer_oracle(n).convert_to<real>();
}

EvalOutcome a_integral(const cplx& z, const EvalConfig& cfg) {
  require_finite(z, "a_integral");
  cfg.validate();
  if (!(z.real() > 0.0L))
    throw std::domain_error("a_integral: requires re z > 0");

  const real s = z.real();
  // pick T with e^-T T^{s+1} 2/(T+1) below the absolute budget
  real T = std::max(30.0L, 2.0L * (s + 2.0L));
  const real budget = 0.25L * static_cast<real>(cfg.tol_abs);
  while (std::exp(-T + (s + 1.0L) * std::log(T)) * 2.0L / (T + 1.0L) >
         budget)
    T += 5.0L;
  const real tail =
      std::exp(-T + (s + 1.0L) * std::log(T)) * 2.0L / (T + 1.0L);

  const cplx pw = pow_neg_one(z);
  const real U = std::sqrt(T);
  // integrand after t = u^2 (softens the t^{z+1} endpoint)
  const auto g = [&](real u) -> cplx {
    if (u == 0.0L) return cplx(0.0L, 0.0L);
    const real t = u * u;
    return 2.0L * u * std::exp(-t) *
           (std::exp((z + 1.0L) * std::log(cplx(t, 0.0L))) - pw * t) /
           (t + 1.0L);
  };
  const auto composite = [&](int panels) -> cplx {
    const real h = U / static_cast<real>(panels);
    cplx acc(0.0L, 0.0L);
    for (int p = 0; p < panels; ++p) {
      const real mid = (static_cast<real>(p) + 0.5L) * h;
      const real half = 0.5L * h;
      cplx su(0.0L, 0.0L);
      for (const auto& q : kGl16) su += q.w * g(mid + half * q.x);
      acc += su * half;
    }
    return acc;
  };

  int panels = 8;
  cplx prev = composite(panels);
  long work = panels;
  while (true) {
    panels *= 2;
    if (panels > cfg.quad_max_panels)
      throw NoConvergence("a_integral: panel budget exhausted");
    const cplx cur = composite(panels);
    work += panels;
    const real diff = std::abs(cur - prev);
    // roundoff plateau of the composite sums; loosens as panels grow so the
    // doubling always terminates
    const real floor =
        4.0L * static_cast<real>(panels) * kEps * (1.0L + std::abs(cur));
    const real stop = std::max({static_cast<real>(cfg.tol_abs),
                                static_cast<real>(cfg.tol_rel) * std::abs(cur),
                                floor});
    if (diff <= 0.5L * stop)
      return {cur, diff + tail, Representation::Integral, work};
    prev = cur;
  }
}

EvalOutcome a_closed(const cplx& z, const EvalConfig& cfg) {
  require_finite(z, "a_closed");
  cfg.validate();
  guard_poles_of_a(z, cfg, "a_closed");
  real block_err = 0.0L;
  long work = 0;
  const cplx block = closed_gamma_block(z, cfg, block_err, work);
  const cplx front = constant_l2() * pow_neg_one(z);
  const real err = block_err + std::abs(front) * 8.0L * kEps;
  return {block - front, err, Representation::ClosedForm, work};
}

EvalOutcome a1_closed(const cplx& z, const EvalConfig& cfg) {
  require_finite(z, "a1_closed");
  cfg.validate();
  guard_all_integers(z, cfg, "a1_closed");
  real block_err = 0.0L;
  long work = 0;
  const cplx block = closed_gamma_block(z, cfg, block_err, work);
  const cplx front = kPi * kE * inv_sin_pi(z, cfg.pole_guard_radius);
  const real err = block_err + std::abs(front) * 8.0L * kEps;
  return {block - front, err, Representation::ClosedForm, work};
}

namespace {

// shared tail of a1_series / a_slavic: sum (-1)^n Gamma(z+1-n), stopping
// once two consecutive terms drop below tol_abs (1 + |sum|)
cplx alternating_gamma_sum(const cplx& z, const EvalConfig& cfg, real& err,
                           long& terms_used) {
  cplx sum(0.0L, 0.0L);
  int below = 0;
  real last_mag = 0.0L;
  for (int n = 0; n < cfg.max_terms; ++n) {
    cplx t = gamma(z + 1.0L - static_cast<real>(n), cfg.pole_guard_radius);
    if (n % 2 != 0) t = -t;
    sum += t;
    last_mag = std::abs(t);
    if (last_mag <
        static_cast<real>(cfg.tol_abs) * (1.0L + std::abs(sum))) {
      if (++below >= 2) {
        terms_used = n + 1;
        err = last_mag +
              static_cast<real>(n + 1) * kEps * (1.0L + std::abs(sum));
        return sum;
      }
    } else {
      below = 0;
    }
  }
  throw NoConvergence("alternating gamma series: term budget exhausted");
}

}  // namespace

EvalOutcome a1_series(const cplx& z, const EvalConfig& cfg) {
  require_finite(z, "a1_series");
  cfg.validate();
  guard_all_integers(z, cfg, "a1_series");
  real err = 0.0L;
  long terms = 0;
  const cplx sum = alternating_gamma_sum(z, cfg, err, terms);
  return {sum, err, Representation::Series, terms};
}

EvalOutcome a_slavic(const cplx& z, const EvalConfig& cfg) {
  require_finite(z, "a_slavic");
  cfg.validate();
  guard_all_integers(z, cfg, "a_slavic");
  real series_err = 0.0L;
  long terms = 0;
  const cplx sum = alternating_gamma_sum(z, cfg, series_err, terms);
  const cplx front = constant_l2() * pow_neg_one(z);
  const cplx sine = kPi * kE * inv_sin_pi(z, cfg.pole_guard_radius);
  const real err = series_err +
                   (std::abs(front) + std::abs(sine)) * 8.0L * kEps;
  return {sum - front + sine, err, Representation::Slavic, terms};
}

EvalOutcome a_recurrence(const cplx& z, const EvalConfig& cfg) {
  require_finite(z, "a_recurrence");
  cfg.validate();
  guard_poles_of_a(z, cfg, "a_recurrence");

  const long k = static_cast<long>(std::floor(1.5L - z.real()));
  cplx w = z + static_cast<real>(k);
  EvalOutcome base = a_integral(w, cfg);
  cplx v = base.value;
  real err = base.err_est;
  long work = base.work;
  if (k >= 0) {
    for (long j = 0; j < k; ++j) {
      // A(w-1) = Gamma(w+1) - A(w)
      const cplx g = gamma(w + 1.0L, cfg.pole_guard_radius);
      v = g - v;
      err += std::abs(g) * 8.0L * kEps;
      w -= 1.0L;
      ++work;
    }
  } else {
    for (long j = 0; j < -k; ++j) {
      // A(w+1) = Gamma(w+2) - A(w)
      const cplx g = gamma(w + 2.0L, cfg.pole_guard_radius);
      v = g - v;
      err += std::abs(g) * 8.0L * kEps;
      w += 1.0L;
      ++work;
    }
  }
  return {v, err, Representation::Recurrence, work};
}

EvalOutcome a_eval(const cplx& z, Representation method,
                   const EvalConfig& cfg) {
  require_finite(z, "a_eval");
  cfg.validate();
  switch (method) {
    case Representation::Integral: return a_integral(z, cfg);
    case Representation::Recurrence: return a_recurrence(z, cfg);
    case Representation::Slavic: return a_slavic(z, cfg);
    case Representation::ClosedForm: return a_closed(z, cfg);
    case Representation::Series:
      throw std::invalid_argument(
          "a_eval: the alternating gamma series is A1, not A");
    case Representation::Auto: break;
  }

  long long m = 0;
  if (exact_integer(z, m) && m >= -1 && m <= 500) {
    // exact path: A(-1) = 1, A(0) = 0, A(n) from the oracle; past the
    // oracle range the closed form below signals overflow properly
    const real v = (m == -1) ? 1.0L : a_integer_oracle_real(static_cast<int>(m));
    return {cplx(v, 0.0L), std::abs(v) * kEps, Representation::Recurrence, 1};
  }
  guard_poles_of_a(z, cfg, "a_eval");
  EvalOutcome out = a_closed(z, cfg);
  const real tol = std::max(static_cast<real>(cfg.tol_abs),
                            static_cast<real>(cfg.tol_rel) *
                                std::abs(out.value));
  if (z.real() <= 0.0L && out.err_est > tol) {
    // cross-check the continuation region against the recurrence
    const EvalOutcome rec = a_recurrence(z, cfg);
    out.err_est = std::max(out.err_est, std::abs(out.value - rec.value));
    out.work += rec.work;
  }
  return out;
}

EvalOutcome a1_eval(const cplx& z, Representation method,
                    const EvalConfig& cfg) {
  require_finite(z, "a1_eval");
  cfg.validate();
  switch (method) {
    case Representation::Series: return a1_series(z, cfg);
    case Representation::ClosedForm:
    case Representation::Auto: return a1_closed(z, cfg);
    default:
      throw std::invalid_argument(
          "a1_eval: A1 has only the series and closed-form representations");
  }
}

}  // namespace altfact
