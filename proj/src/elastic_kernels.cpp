// SPDX-License-Identifier: Apache-2.0
#include "phonon/elastic_kernels.hpp"

#include <cmath>

#include "phonon/hankel.hpp"

namespace phonon::kern {

namespace {

constexpr double kSmallZ = 0.5;  // below this |z_T| the series-combination path runs

struct PairFuncs {
  // stabilized combinations per wavenumber k (z = k r):
  //   Ut = z H1_1(z) + 2i/pi                          (O(z^2 log z))
  //   Vt = H1_0 - 2 H1_1/z + 4i/(pi z^2)              (O(z^2 log z))
  //   Wt = -H1_1 - H1_0/z + 2 H1_1/z^2 + 4i/(pi z^3) - i/(pi z)   (O(z log z))
  // plus G = -(i/4)H1_0 and Gp = (i/4) k H1_1, and the ln r coefficients
  // (H_nu -> (2i/pi) J_nu applied to the same linear combinations).
  cplx G, Gp, Ut, Vt, Wt;
  cplx Gl, Gpl, Ul, Vl, Wl;
};

PairFuncs eval_pair(cplx k, double r) {
  cplx z = k * r;
  hankel::Bessel01 B = hankel::besselJY01(z);
  PairFuncs f;
  const cplx tioP = 2.0 * kI / kPi;  // (2i/pi)
  // log-r coefficients: substitute H_nu -> (2i/pi) J_nu
  cplx JA = B.J0 - 2.0 * B.J1 / z;  // J0 - 2 J1/z, O(z^2)
  f.Gl = -(kI / 4.0) * tioP * B.J0;               // = (1/2pi) J0
  f.Gpl = (kI / 4.0) * k * tioP * B.J1;           // = -(k/2pi) J1
  f.Ul = tioP * z * B.J1;
  f.Vl = tioP * JA;
  f.Wl = tioP * (-B.J1 - JA / z);

  if (std::abs(z) <= kSmallZ && B.has_parts) {
    // cancellation-free series assembly from the entire parts P0, Q1
    cplx lg = std::log(z / 2.0) + kEulerGamma;
    cplx q1s_m1 = -(B.Q1 / z) * (2.0 * kPi) - 1.0;  // q1s - 1 = O(z^2)
    f.G = -(kI / 4.0) * B.J0 + (1.0 / (2.0 * kPi)) * lg * B.J0 + 0.25 * B.P0;
    f.Gp = (kI / 4.0) * k * B.J1 - (k / (2.0 * kPi)) * lg * B.J1 +
           k / (2.0 * kPi * z) - 0.25 * k * B.Q1;
    f.Ut = z * B.J1 * (1.0 + tioP * lg) + kI * z * B.Q1;
    f.Vt = JA * (1.0 + tioP * lg) + kI * (B.P0 - 2.0 * B.Q1 / z);
    cplx wJ = -B.J1 - JA / z;
    f.Wt = wJ * (1.0 + tioP * lg) +
           kI * (-B.Q1 - B.P0 / z - q1s_m1 / (kPi * z));
  } else {
    cplx H0 = B.H1_0(), H1 = B.H1_1();
    f.G = -(kI / 4.0) * H0;
    f.Gp = (kI / 4.0) * k * H1;
    f.Ut = z * H1 + 2.0 * kI / kPi;
    f.Vt = H0 - 2.0 * H1 / z + 4.0 * kI / (kPi * z * z);
    f.Wt = -H1 - H0 / z + 2.0 * H1 / (z * z) + 4.0 * kI / (kPi * z * z * z) -
           kI / (kPi * z);
  }
  return f;
}

}  // namespace

KernelScalars elastic_scalars(cplx omega, const LameParams& p, double r) {
  cplx kT = p.kT(omega), kL = p.kL(omega);
  cplx w2 = omega * omega;
  PairFuncs fL = eval_pair(kL, r), fT = eval_pair(kT, r);

  // D'/r, D''-D'/r, D''' with the algebraic 1/r^2, 1/r^3 parts cancelled
  // analytically between the L and T branches.
  cplx Dp_r = (kI / (4.0 * r * r)) * (fL.Ut - fT.Ut);
  cplx DV = (kI / 4.0) * (kL * kL * fL.Vt - kT * kT * fT.Vt);
  cplx D3 = (kI / 4.0) * (kL * kL * kL * fL.Wt - kT * kT * kT * fT.Wt) -
            (kL * kL - kT * kT) / (4.0 * kPi * r);

  KernelScalars s;
  s.psi = fT.G / p.mu - Dp_r / w2;
  s.chi = -DV / w2;
  s.c = s.chi / r;
  s.a = fT.Gp / p.mu + s.c;
  s.b = -D3 / w2 - s.c;

  cplx lDp_r = (kI / (4.0 * r * r)) * (fL.Ul - fT.Ul);
  cplx lDV = (kI / 4.0) * (kL * kL * fL.Vl - kT * kT * fT.Vl);
  cplx lD3 = (kI / 4.0) * (kL * kL * kL * fL.Wl - kT * kT * kT * fT.Wl);
  s.psiL = fT.Gl / p.mu - lDp_r / w2;
  s.chiL = -lDV / w2;
  s.cL = s.chiL / r;
  s.aL = fT.Gpl / p.mu + s.cL;
  s.bL = -lD3 / w2 - s.cL;
  return s;
}

KernelScalars static_scalars(const LameParams& p, double r) {
  double g1 = p.gamma1(), g2 = p.gamma2();
  KernelScalars s{};
  s.psi = g1 / (2.0 * kPi) * std::log(r);
  s.chi = -g2 / (2.0 * kPi);
  s.a = g1 / (2.0 * kPi * r);
  s.b = 0.0;
  s.c = -g2 / (2.0 * kPi * r);
  s.psiL = g1 / (2.0 * kPi);
  s.chiL = s.aL = s.bL = s.cL = 0.0;
  return s;
}

cplx psi_reg_at_zero(cplx omega, const LameParams& p) {
  cplx kT = p.kT(omega), kL = p.kL(omega);
  cplx kT2 = kT * kT, kL2 = kL * kL;
  cplx GT0 = -(kI / 4.0) *
             (1.0 + (2.0 * kI / kPi) * (std::log(kT / 2.0) + kEulerGamma));
  cplx DpR0 =
      (kI / 4.0) *
      ((kL2 - kT2) / 2.0 +
       (2.0 * kI / kPi) * ((kL2 * std::log(kL / 2.0) - kT2 * std::log(kT / 2.0)) / 2.0 +
                           kEulerGamma * (kL2 - kT2) / 2.0) -
       kI * (kL2 - kT2) / (2.0 * kPi));
  return GT0 / p.mu - DpR0 / (omega * omega);
}

Mat2c kelvin_matrix(const Vec2& x, const LameParams& p) {
  double r = x.norm();
  if (r == 0.0) throw std::domain_error("kelvin_matrix: x = 0");
  double g1 = p.gamma1(), g2 = p.gamma2();
  Mat2c G = (g1 / (2.0 * kPi)) * std::log(r) * Mat2c::Identity();
  Vec2 e = x / r;
  G -= (g2 / (2.0 * kPi)) * (e * e.transpose()).cast<cplx>();
  return G;
}

Mat2c fundamental_matrix(const Vec2& x, cplx omega, const LameParams& p) {
  double r = x.norm();
  if (r == 0.0) throw std::domain_error("fundamental_matrix: x = 0");
  if (omega == cplx(0.0)) throw std::domain_error("fundamental_matrix: omega = 0 (use kelvin_matrix)");
  KernelScalars s = elastic_scalars(omega, p, r);
  Vec2 e = x / r;
  return s.psi * Mat2c::Identity() + s.chi * (e * e.transpose()).cast<cplx>();
}

Mat2c traction_from_scalars(cplx a, cplx b, cplx c, const Vec2& e,
                            const Vec2& n, const LameParams& p) {
  Mat2c ne = (n * e.transpose()).cast<cplx>();
  Mat2c en = (e * n.transpose()).cast<cplx>();
  Mat2c ee = (e * e.transpose()).cast<cplx>();
  cplx nd = n.dot(e);
  Mat2c I = Mat2c::Identity();
  return p.lambda * (a + b + c) * ne + p.mu * a * (nd * I + en) +
         2.0 * p.mu * b * nd * ee +
         p.mu * c * (2.0 * ne + en + nd * I - 4.0 * nd * ee);
}

Mat2c traction_kernel(const Vec2& x, const Vec2& normal, cplx omega,
                      const LameParams& p) {
  double r = x.norm();
  if (r == 0.0) throw std::domain_error("traction_kernel: x = 0");
  Vec2 e = x / r;
  KernelScalars s =
      (omega == cplx(0.0)) ? static_scalars(p, r) : elastic_scalars(omega, p, r);
  // y-variable convention: d/dnu_y Gamma(x-y) = -P(d; n)
  return -traction_from_scalars(s.a, s.b, s.c, e, normal, p);
}

Mat2c static_traction_kernel(const Vec2& x, const Vec2& normal,
                             const LameParams& p) {
  return traction_kernel(x, normal, cplx(0.0), p);
}

}  // namespace phonon::kern
