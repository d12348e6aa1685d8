// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "phonon/types.hpp"

namespace phonon::ewald {

/// Value and d-derivatives (through third order) of a scalar lattice function.
struct ScalarDerivs {
  cplx v{};
  cplx g[2]{};
  cplx h[2][2]{};
  cplx t[2][2][2]{};

  ScalarDerivs& operator+=(const ScalarDerivs& o);
  ScalarDerivs& operator*=(cplx s);
};

/// Exponential integral E_nu(x) for integer nu >= -3, x > 0.
double expint(int nu, double x);

/// Quasi-periodic Helmholtz sum g^k(d) = sum_n e^{i q.d} / (k^2 - |q|^2),
/// q = 2 pi n + alpha, evaluated by Ewald splitting, minus the free-space
/// Green function -(i/4) H1_0(k|d|). The result is real-analytic in d on
/// |d|_inf < 1 (nearest image singularities excluded), including d = 0.
/// Derivatives through third order. Throws ResonanceError when some
/// denominator is within eps_res.
ScalarDerivs helmholtz_regular(const Vec2& d, const Vec2& alpha, cplx k,
                               double eps_res);

/// log coefficient lambda_l(u) of sigma_l (u = r^2):
///   sigma_l(d) = lambda_l(|d|^2) ln|d| + A_l(d),
///   lambda_l(u) = -(1/2pi) (-u/4)^{l-1} / ((l-1)!)^2.
double lambda_log(int l, double u);
double lambda_log_du(int l, double u);
double lambda_log_du2(int l, double u);

/// Analytic part A_l of the power sum sigma_l(d) = sum' e^{i q.d}/|q|^{2l}
/// (all n for alpha != 0; n = (0,0) skipped when alpha = 0).
/// Derivatives through third order; valid on |d|_inf < 1, including d = 0.
ScalarDerivs power_sum_analytic(int l, const Vec2& d, const Vec2& alpha);

/// Full sigma_l at d != 0 (adds the lambda_l ln|d| part back).
ScalarDerivs power_sum(int l, const Vec2& d, const Vec2& alpha);

}  // namespace phonon::ewald
