// Copyright (c) 2026 The altfact Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ALTFACT_SINGULAR_STRUCTURE_HPP
#define ALTFACT_SINGULAR_STRUCTURE_HPP

#include <functional>

#include "types.hpp"

namespace altfact {

enum class FunctionId { A, A1, Gamma };

struct SingularityInfo {
  long long location = 0;
  int order = 0;          // 0 regular, 1 simple pole
  cplx residue{};         // 0 when regular
  cplx principal_value{}; // function value when regular
  FunctionId function_id = FunctionId::A;
};

/// res_{z=-n} A(z) = (-1)^n sum_{k=0}^{n-2} 1/k!, n >= 2.
real residue_a(int n);

/// res_{z=m} A1(z) = (-1)^{m-1} e + res_{z=m} A(z), any integer m.
real residue_a1(long long m);

/// res_{z=-n} Gamma(z) = (-1)^n / n!.
real residue_gamma(long long m);

/// p.v. Gamma at -n: (-1)^n Gamma'(n+1)/Gamma(n+1)^2. Argument must be <= 0.
real pv_gamma(long long minus_n);

/// p.v. A at an integer: the regular value for arguments >= -1, the
/// closed-form sum (-1)^{n+1} (1 - sum_{i<n} Gamma'(i)/Gamma(i)^2) at -n.
real pv_a(long long arg);

/// p.v. A1(n) = (-1)^n L2 + p.v. A(n).
real pv_a1(long long n);

using PointFn = std::function<cplx(const cplx&)>;

/// Symmetric-limit principal value: averages (f(a-e)+f(a+e))/2 on the
/// halving ladder e_k = 0.1 / 2^k, extrapolated to e = 0 in powers of e^2.
cplx pv_numeric(const PointFn& f, long long a, int levels = 6,
                real* err_out = nullptr);

/// Contour mean (1/2 pi i) oint f(z)/(z-a) dz by the trapezoid rule on two
/// circles (radius, radius/2), extrapolated linearly in the radius.
cplx pv_contour(const PointFn& f, long long a, real radius = 0.2L,
                int nodes = 64);

/// (1/2 pi i) oint f(z) dz on the same two circles.
cplx residue_numeric(const PointFn& f, long long a, real radius = 0.2L,
                     int nodes = 64);

/// p.v.(f1 f2) = f1(a) p.v. f2 + f1'(a) res f2 for holomorphic f1 and a
/// simple pole of f2. The derivative comes from a central difference with
/// step 1e-5 unless supplied.
cplx pv_product_rule(const PointFn& f1, const cplx& f2_pv,
                     const cplx& f2_res, long long a,
                     const cplx* f1_deriv = nullptr);

/// Order/residue/principal value of A, A1 or Gamma at an integer.
SingularityInfo singularity_info(FunctionId id, long long m);

}  // namespace altfact

#endif
