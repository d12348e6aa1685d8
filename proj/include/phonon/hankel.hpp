// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "phonon/types.hpp"

namespace phonon::hankel {

/// Values of the order-0/1 cylinder functions at one complex argument.
/// Split form: Y0 = (2/pi)(log(z/2)+gamma) J0 + P0
///             Y1 = (2/pi)(log(z/2)+gamma) J1 - 2/(pi z) + Q1
/// with P0, Q1 entire. The split parts are what the kernel code consumes to
/// evaluate log-regularized combinations without cancellation.
struct Bessel01 {
  cplx J0, J1, Y0, Y1;
  cplx P0, Q1;   // entire remainders of Y0, Y1 (valid in the series branch)
  bool has_parts = false;  // parts are only produced by the ascending series

  cplx H1_0() const { return J0 + kI * Y0; }
  cplx H1_1() const { return J1 + kI * Y1; }
};

/// Evaluate J0, J1, Y0, Y1 for complex z.
/// Ascending series (extended precision) below |z| = kSeriesSwitch, Hankel
/// asymptotic expansions above. Accurate to >= 10 significant digits on
/// 1e-6 <= |z| <= 50, |Im z| <= 5 (validated against an mpmath oracle).
Bessel01 besselJY01(cplx z);

/// Series-branch switch radius. The asymptotic expansion truncated at its
/// smallest term has relative error ~exp(-2|z|); 14 keeps it below 1e-12,
/// while extended-precision ascending series still carry >13 digits there.
inline constexpr double kSeriesSwitch = 14.0;

/// Overflow guard on |z| (documented precondition).
inline constexpr double kMaxAbsZ = 1e4;

/// H^(1)_order(z), order in {0,1}. Throws std::domain_error for z = 0,
/// order outside {0,1}, or |z| > kMaxAbsZ.
cplx hankel1(int order, cplx z);

}  // namespace phonon::hankel
