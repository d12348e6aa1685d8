// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "phonon/types.hpp"

namespace phonon::kern {

/// Kelvin matrix Gamma^0_ij = (g1/2pi) d_ij ln|x| - (g2/2pi) x_i x_j/|x|^2.
Mat2c kelvin_matrix(const Vec2& x, const LameParams& p);

/// Kupradze matrix Gamma^w for omega != 0:
///   -(i/4mu) d_ij H1_0(w|x|/cT) + (i/4w^2) di dj [H1_0(w|x|/cL) - H1_0(w|x|/cT)],
/// with the di dj block in closed form (H1_0/H1_1 recurrences, no numerical
/// differentiation). Throws for x = 0 or omega = 0.
Mat2c fundamental_matrix(const Vec2& x, cplx omega, const LameParams& p);

/// Conormal derivative of the fundamental matrix in the y-variable of
/// Gamma(x-y), i.e. the double-layer kernel direction with `normal` at y.
/// omega = 0 gives the static kernel.
Mat2c traction_kernel(const Vec2& x, const Vec2& normal, cplx omega,
                      const LameParams& p);

/// Static traction, closed form (no Hankel evaluations).
Mat2c static_traction_kernel(const Vec2& x, const Vec2& normal,
                             const LameParams& p);

/// Radial scalar decomposition of the dynamic kernel family.
/// Gamma^w(d)       = psi(r) I + chi(r) e e^T,            e = d/r
/// d_k Gamma^w built from a = psi', b = chi', c = chi/r (see traction_p).
/// Each scalar carries the coefficient of ln r (an entire function of r^2)
/// so Nystrom code can split off the logarithmic singularity exactly.
struct KernelScalars {
  cplx psi, chi, a, b, c;
  cplx psiL, chiL, aL, bL, cL;
};
KernelScalars elastic_scalars(cplx omega, const LameParams& p, double r);

/// Static counterparts (psi = (g1/2pi) ln r etc.; log coefficients constant).
KernelScalars static_scalars(const LameParams& p, double r);

/// Traction-in-x form assembled from the scalar triple (a, b, c):
///   P = lam (a+b+c) n e^T + mu a ((n.e) I + e n^T) + 2 mu b (n.e) e e^T
///     + mu c (2 n e^T + e n^T + (n.e) I - 4 (n.e) e e^T).
/// traction in y of Gamma(x-y) is -P(d; n(y)); traction in x is +P(d; n(x)).
Mat2c traction_from_scalars(cplx a, cplx b, cplx c, const Vec2& e,
                            const Vec2& n, const LameParams& p);

/// Values at r -> 0 needed for Nystrom diagonal entries:
/// psi_L -> g1/2pi, chi_L -> 0, chi_R -> -g2/2pi, and psi_R below.
cplx psi_reg_at_zero(cplx omega, const LameParams& p);

}  // namespace phonon::kern
