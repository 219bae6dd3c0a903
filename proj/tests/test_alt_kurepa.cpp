// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "alt_kurepa.hpp"
#include "complex_core.hpp"
#include "gamma_family.hpp"
#include "quad_oracle.hpp"
#include "special_aux.hpp"

using namespace altfact;

namespace {

const EvalConfig kCfg{};

double rand_uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

// regression anchors computed with 40-digit arithmetic from the closed form
struct Anchor {
  cplx z;
  cplx a;
  cplx a1;
};
const Anchor kAnchors[] = {
    {{0.5L, 0.0L},
     {0.457066496193977156788L, -0.403652637676805925659L},
     {-8.082667726479589908676L, 0.0L}},
    {{0.5L, 2.0L},
     {0.07729066142396739029995L, 0.1479799916409751196716L},
     {0.04539584344241763191452L, 0.1487337898253394291772L}},
    {{-2.5L, 0.0L},
     {-4.888201123457767225033L, 0.403652637676805925659L},
     {3.65153309921579984043L, 0.0L}},
    {{-1.25L, -0.75L},
     {3.287177650296282149115L, -2.650136676408539799089L},
     {-0.8791193882190854526274L, 1.49559636632985816635L}},
};

}  // namespace

TEST_CASE("integer oracle values") {
  // alternating factorial sums: 0, 1, 1, 5, 19, 101, 619, 4421, ...
  const long expected[] = {0,      1,      1,       5,        19,
                           101,    619,    4421,    35899,    326981,
                           3301819, 36614981, 442386619};
  for (int n = 0; n <= 12; ++n)
    CHECK(a_integer_oracle(n) == bigint(expected[n]));
}

TEST_CASE("integer oracle recurrence A(n) = n! - A(n-1)") {
  bigint fact = 1;
  for (int n = 1; n <= 60; ++n) {
    fact *= n;
    CHECK(a_integer_oracle(n) == fact - a_integer_oracle(n - 1));
  }
}

TEST_CASE("integer oracle range and big input") {
  CHECK_THROWS_AS(a_integer_oracle(-1), std::domain_error);
  CHECK_THROWS_AS(a_integer_oracle(501), std::domain_error);
  const bigint big = a_integer_oracle(500);
  CHECK(big > 0);
  CHECK(big.str().size() > 1000);  // 500! has 1135 digits
}

TEST_CASE("a_integral agrees with the oracle at integers") {
  for (int n = 1; n <= 12; ++n) {
    const EvalOutcome out = a_integral(cplx(static_cast<real>(n), 0.0L), kCfg);
    const real expect = a_integer_oracle_real(n);
    CHECK(std::abs(out.value - expect) <= 1e-8L * expect);
    CHECK(out.err_est >= 0.0L);
    CHECK(out.work >= 1);
    CHECK(out.method == Representation::Integral);
  }
}

TEST_CASE("a_integral against the independent double-exponential oracle") {
  for (const std::complex<double> z :
       {std::complex<double>(0.5, 0.0), std::complex<double>(2.5, -1.0),
        std::complex<double>(0.25, 1.5)}) {
    const auto ref = quad_oracle::a_integral(z);
    const EvalOutcome out = a_integral(
        cplx(static_cast<real>(z.real()), static_cast<real>(z.imag())), kCfg);
    CHECK(std::abs(out.value - cplx(static_cast<real>(ref.real()),
                                    static_cast<real>(ref.imag()))) < 1e-11L);
  }
}

TEST_CASE("gamma block matches its integral form") {
  // int_0^inf e^{-t} t^{z+1}/(t+1) dt = e Gamma(z+2) Gamma(-z-1, 1)
  for (const std::complex<double> z :
       {std::complex<double>(0.5, 0.0), std::complex<double>(1.75, 1.25),
        std::complex<double>(0.25, -2.0)}) {
    const auto lhs = quad_oracle::gamma_block_integral(z);
    const cplx zc(static_cast<real>(z.real()), static_cast<real>(z.imag()));
    const cplx rhs = kE * gamma(zc + 2.0L) *
                     upper_incomplete_gamma(-zc - 1.0L, 1.0L);
    CHECK(std::abs(rhs - cplx(static_cast<real>(lhs.real()),
                              static_cast<real>(lhs.imag()))) <=
          1e-10L * std::abs(rhs));
  }
}

TEST_CASE("a_integral domain and budget errors") {
  CHECK_THROWS_AS(a_integral(cplx(0.0L, 1.0L), kCfg), std::domain_error);
  CHECK_THROWS_AS(a_integral(cplx(-0.5L, 0.0L), kCfg), std::domain_error);
  EvalConfig tiny = kCfg;
  tiny.quad_max_panels = 8;
  CHECK_THROWS_AS(a_integral(cplx(0.5L, 0.0L), tiny), NoConvergence);
}

TEST_CASE("a_closed at reference points") {
  // A(3) = 5
  CHECK(std::abs(a_closed(cplx(3.0L, 0.0L), kCfg).value - 5.0L) < 1e-9L);
  // A(-1) = 1 (regular point, principal value equals the limit)
  CHECK(std::abs(a_closed(cplx(-1.0L, 0.0L), kCfg).value - 1.0L) < 1e-9L);
  for (const auto& anc : kAnchors)
    CHECK(std::abs(a_closed(anc.z, kCfg).value - anc.a) <=
          1e-15L * (1.0L + std::abs(anc.a)));
}

TEST_CASE("a_closed guards only the poles of A") {
  CHECK_THROWS_AS(a_closed(cplx(-2.0L, 0.0L), kCfg), PoleProximity);
  CHECK_THROWS_AS(a_closed(cplx(-5.0002L, 0.0L), kCfg), PoleProximity);
  CHECK_NOTHROW(a_closed(cplx(0.0L, 0.0L), kCfg));
  CHECK_NOTHROW(a_closed(cplx(4.0L, 0.0L), kCfg));
  CHECK_NOTHROW(a_closed(cplx(-1.0L, 0.0L), kCfg));
}

TEST_CASE("a1_closed at reference points") {
  for (const auto& anc : kAnchors)
    CHECK(std::abs(a1_closed(anc.z, kCfg).value - anc.a1) <=
          1e-15L * (1.0L + std::abs(anc.a1)));
  CHECK_THROWS_AS(a1_closed(cplx(1.0L, 0.0L), kCfg), PoleProximity);
  CHECK_THROWS_AS(a1_closed(cplx(0.0L, 0.0L), kCfg), PoleProximity);
}

TEST_CASE("closed-form difference A - A1 = -L2 (-1)^z + pi e / sin(pi z)") {
  const cplx d = a_closed(cplx(0.5L, 0.0L), kCfg).value -
                 a1_closed(cplx(0.5L, 0.0L), kCfg).value;
  const cplx expect = -constant_l2() * cplx(0.0L, 1.0L) + kPi * kE;
  CHECK(std::abs(d - expect) < 1e-9L);
}

TEST_CASE("a1_series matches a1_closed") {
  for (const auto& anc : kAnchors) {
    const EvalOutcome s = a1_series(anc.z, kCfg);
    CHECK(std::abs(s.value - anc.a1) <= 1e-8L * (1.0L + std::abs(anc.a1)));
    CHECK(s.method == Representation::Series);
    CHECK(s.work >= 1);
  }
  CHECK_THROWS_AS(a1_series(cplx(2.0L, 0.0L), kCfg), PoleProximity);
}

TEST_CASE("a1 functional equation") {
  // A1(0.5) + A1(-0.5) = Gamma(1.5)
  const cplx lhs = a1_series(cplx(0.5L, 0.0L), kCfg).value +
                   a1_series(cplx(-0.5L, 0.0L), kCfg).value;
  CHECK(std::abs(lhs - gamma(cplx(1.5L, 0.0L))) < 1e-8L);
  // closed form route at -1.5 / -0.5
  const cplx lhs2 = a1_closed(cplx(-0.5L, 0.0L), kCfg).value +
                    a1_closed(cplx(-1.5L, 0.0L), kCfg).value;
  CHECK(std::abs(lhs2 - gamma(cplx(0.5L, 0.0L))) < 1e-8L);
}

TEST_CASE("a_slavic agrees with the other representations") {
  const cplx z1(2.5L, 0.0L);
  CHECK(std::abs(a_slavic(z1, kCfg).value - a_integral(z1, kCfg).value) <
        1e-8L);
  const cplx z2(-2.5L, 0.0L);
  CHECK(std::abs(a_slavic(z2, kCfg).value - a_recurrence(z2, kCfg).value) <
        1e-8L);
  const cplx z3(0.5L, 2.0L);
  CHECK(std::abs(a_slavic(z3, kCfg).value - a_closed(z3, kCfg).value) <
        1e-8L);
  CHECK_THROWS_AS(a_slavic(cplx(3.0L, 0.0L), kCfg), PoleProximity);
}

TEST_CASE("slavic minus series is the closed correction") {
  std::mt19937_64 rng(17);
  int tested = 0;
  while (tested < 60) {
    const cplx z(static_cast<real>(rand_uniform(rng, -4.0, 4.0)),
                 static_cast<real>(rand_uniform(rng, -4.0, 4.0)));
    if (nearest_integer(z).dist < 0.1L) continue;
    ++tested;
    const cplx d = a_slavic(z, kCfg).value - a1_series(z, kCfg).value;
    const cplx expect = -constant_l2() * pow_neg_one(z) +
                        kPi * kE * inv_sin_pi(z);
    CHECK(std::abs(d - expect) <= 1e-8L * (1.0L + std::abs(expect)));
  }
}

TEST_CASE("a_recurrence paired functional equation") {
  // A(-0.5) + A(-1.5) = Gamma(0.5)
  const cplx lhs = a_recurrence(cplx(-0.5L, 0.0L), kCfg).value +
                   a_recurrence(cplx(-1.5L, 0.0L), kCfg).value;
  CHECK(std::abs(lhs - std::sqrt(kPi)) < 1e-8L);
}

TEST_CASE("a_recurrence normalization and continuation") {
  // no shift needed at 0.75
  const EvalOutcome rec = a_recurrence(cplx(0.75L, 0.0L), kCfg);
  const EvalOutcome quad = a_integral(cplx(0.75L, 0.0L), kCfg);
  CHECK(std::abs(rec.value - quad.value) <=
        rec.err_est + quad.err_est + 1e-18L);
  // far continuation matches the closed form
  CHECK(std::abs(a_recurrence(cplx(-3.3L, 0.0L), kCfg).value -
                 a_closed(cplx(-3.3L, 0.0L), kCfg).value) < 1e-7L);
  // upward shift branch (re z > 1.5)
  CHECK(std::abs(a_recurrence(cplx(4.0L, 0.0L), kCfg).value -
                 a_integer_oracle_real(4)) < 1e-8L);
  CHECK_THROWS_AS(a_recurrence(cplx(-2.0L, 0.0L), kCfg), PoleProximity);
}

TEST_CASE("functional equation for A across methods") {
  std::mt19937_64 rng(19);
  int tested = 0;
  while (tested < 50) {
    const cplx z(static_cast<real>(rand_uniform(rng, -5.0, 5.0)),
                 static_cast<real>(rand_uniform(rng, -5.0, 5.0)));
    if (std::abs(z) > 5.0L) continue;
    if (nearest_integer(z).dist < 0.1L ||
        nearest_integer(z - 1.0L).dist < 0.1L)
      continue;
    ++tested;
    const cplx g = gamma(z + 1.0L);
    const cplx r = a_eval(z, Representation::Auto, kCfg).value +
                   a_eval(z - 1.0L, Representation::Auto, kCfg).value - g;
    CHECK(std::abs(r) <= 1e-8L * (1.0L + std::abs(g)));
  }
}

TEST_CASE("a_eval dispatcher routing") {
  // exact integers take the oracle path
  const EvalOutcome v7 = a_eval(cplx(7.0L, 0.0L), Representation::Auto, kCfg);
  CHECK(v7.value.real() == 4421.0L);  // 5040 - 720 + 120 - 24 + 6 - 2 + 1
  CHECK(v7.value.imag() == 0.0L);
  CHECK(v7.method != Representation::Auto);

  const EvalOutcome vm1 =
      a_eval(cplx(-1.0L, 0.0L), Representation::Auto, kCfg);
  CHECK(vm1.value.real() == 1.0L);

  const EvalOutcome v0 = a_eval(cplx(0.0L, 0.0L), Representation::Auto, kCfg);
  CHECK(v0.value.real() == 0.0L);

  CHECK_THROWS_AS(a_eval(cplx(-4.0L, 0.0L), Representation::Auto, kCfg),
                  PoleProximity);

  // noninteger routes to the closed form
  const EvalOutcome off =
      a_eval(cplx(1.25L, 0.0L), Representation::Auto, kCfg);
  CHECK(off.method == Representation::ClosedForm);

  // explicit methods are honored
  CHECK(a_eval(cplx(1.25L, 0.0L), Representation::Integral, kCfg).method ==
        Representation::Integral);
  CHECK(a_eval(cplx(1.25L, 0.0L), Representation::Slavic, kCfg).method ==
        Representation::Slavic);
  CHECK_THROWS_AS(a_eval(cplx(1.25L, 0.0L), Representation::Series, kCfg),
                  std::invalid_argument);
}

TEST_CASE("a1_eval dispatcher") {
  CHECK(a1_eval(cplx(0.5L, 0.0L), Representation::Auto, kCfg).method ==
        Representation::ClosedForm);
  CHECK(a1_eval(cplx(0.5L, 0.0L), Representation::Series, kCfg).method ==
        Representation::Series);
  CHECK_THROWS_AS(a1_eval(cplx(0.5L, 0.0L), Representation::Integral, kCfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(a1_eval(cplx(2.0L, 0.0L), Representation::Auto, kCfg),
                  PoleProximity);
}

TEST_CASE("cross-representation error estimates are consistent") {
  const cplx z(0.5L, 0.0L);
  const EvalOutcome quad = a_integral(z, kCfg);
  const EvalOutcome closed = a_closed(z, kCfg);
  CHECK(std::abs(quad.value - closed.value) <=
        quad.err_est + closed.err_est + 1e-15L);
}

TEST_CASE("config validation") {
  EvalConfig bad = kCfg;
  bad.tol_rel = 0.0;
  CHECK_THROWS_AS(a_closed(cplx(0.5L, 0.0L), bad), std::invalid_argument);
  bad = kCfg;
  bad.max_terms = 4;
  CHECK_THROWS_AS(a1_series(cplx(0.5L, 0.0L), bad), std::invalid_argument);
  bad = kCfg;
  bad.pole_guard_radius = 0.7;
  CHECK_THROWS_AS(a_closed(cplx(0.5L, 0.0L), bad), std::invalid_argument);
}

TEST_CASE("non-finite inputs are rejected") {
  const real nan = std::nan("");
  CHECK_THROWS_AS(a_closed(cplx(nan, 0.0L), kCfg), std::domain_error);
  CHECK_THROWS_AS(a_eval(cplx(0.0L, nan), Representation::Auto, kCfg),
                  std::domain_error);
}
