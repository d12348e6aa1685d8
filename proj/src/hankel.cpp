// SPDX-License-Identifier: Apache-2.0
#include "phonon/hankel.hpp"

#include <cmath>

namespace phonon::hankel {

namespace {

using lcplx = std::complex<long double>;
constexpr long double kPiL = 3.14159265358979323846264338327950288L;
constexpr long double kGammaL = 0.57721566490153286060651209008240243L;

// Ascending series in 80-bit precision. The alternating sums lose
// ~|z|/ln(10) digits to cancellation near the switch radius; the extra
// mantissa keeps the double-precision result full.
Bessel01 series_branch(cplx zd) {
  lcplx z(zd.real(), zd.imag());
  lcplx u = z * z / 4.0L;

  lcplx j0 = 1.0L, j1s = 1.0L, p0 = 0.0L, q1s = 1.0L;  // q1s: sum for Q1/(z/2)
  lcplx tj0 = 1.0L, tj1 = 1.0L;
  long double Hk = 0.0L;  // harmonic number H_k
  for (int k = 1; k <= 160; ++k) {
    tj0 *= -u / (lcplx)(1.0L * k * k);
    tj1 *= -u / (lcplx)(1.0L * k * (k + 1));
    Hk += 1.0L / k;
    j0 += tj0;
    j1s += tj1;
    p0 += -tj0 * Hk;                      // (-1)^{k+1} H_k u^k/(k!)^2 = -t_k H_k
    q1s += tj1 * (2.0L * Hk + 1.0L / (k + 1));  // (H_k + H_{k+1}) factor
    if (std::abs(tj0) < 1e-24L * std::abs(j0) && k > 4) break;
  }
  // J1 = (z/2) j1s ; Q1 = -(1/pi)(z/2) q1s ; P0 = (2/pi) p0
  lcplx J0 = j0;
  lcplx J1 = z / 2.0L * j1s;
  lcplx P0 = 2.0L / kPiL * p0;
  lcplx Q1 = -(z / 2.0L) / kPiL * q1s;
  lcplx lg = std::log(z / 2.0L) + kGammaL;
  lcplx Y0 = 2.0L / kPiL * lg * J0 + P0;
  lcplx Y1 = 2.0L / kPiL * lg * J1 - 2.0L / (kPiL * z) + Q1;

  Bessel01 out;
  out.J0 = cplx((double)J0.real(), (double)J0.imag());
  out.J1 = cplx((double)J1.real(), (double)J1.imag());
  out.Y0 = cplx((double)Y0.real(), (double)Y0.imag());
  out.Y1 = cplx((double)Y1.real(), (double)Y1.imag());
  out.P0 = cplx((double)P0.real(), (double)P0.imag());
  out.Q1 = cplx((double)Q1.real(), (double)Q1.imag());
  out.has_parts = true;
  return out;
}

// Hankel asymptotic sums for H^(1)/H^(2); truncated at the smallest term.
void asym_sums(int nu, lcplx z, lcplx& s1, lcplx& s2) {
  long double fournu2 = 4.0L * nu * nu;
  lcplx term = 1.0L;
  s1 = 1.0L;
  s2 = 1.0L;
  long double prev = 1e300L;
  lcplx iz = lcplx(0.0L, 1.0L) / z;
  lcplx miz = -iz;
  lcplx t1 = 1.0L, t2 = 1.0L;
  for (int k = 1; k <= 40; ++k) {
    long double num = fournu2 - (2.0L * k - 1.0L) * (2.0L * k - 1.0L);
    term *= num / (8.0L * k);
    t1 *= iz;
    t2 *= miz;
    long double mag = std::abs(term) / std::pow((long double)std::abs(z), 0);
    lcplx c1 = term * t1, c2 = term * t2;
    long double m1 = std::abs(c1);
    if (m1 > prev) break;  // divergence onset
    s1 += c1;
    s2 += c2;
    prev = m1;
    if (m1 < 1e-20L) break;
    (void)mag;
  }
}

Bessel01 asymptotic_branch(cplx zd) {
  lcplx z(zd.real(), zd.imag());
  Bessel01 out;
  cplx JY[2][2];
  for (int nu = 0; nu <= 1; ++nu) {
    lcplx s1, s2;
    asym_sums(nu, z, s1, s2);
    lcplx chi = z - (nu * kPiL / 2.0L) - kPiL / 4.0L;
    lcplx amp = std::sqrt(2.0L / (kPiL * z));
    lcplx h1 = amp * std::exp(lcplx(0.0L, 1.0L) * chi) * s1;
    lcplx h2 = amp * std::exp(lcplx(0.0L, -1.0L) * chi) * s2;
    lcplx J = (h1 + h2) / 2.0L;
    lcplx Y = (h1 - h2) / lcplx(0.0L, 2.0L);
    JY[nu][0] = cplx((double)J.real(), (double)J.imag());
    JY[nu][1] = cplx((double)Y.real(), (double)Y.imag());
  }
  out.J0 = JY[0][0];
  out.Y0 = JY[0][1];
  out.J1 = JY[1][0];
  out.Y1 = JY[1][1];
  out.has_parts = false;
  return out;
}

}  // namespace

Bessel01 besselJY01(cplx z) {
  double az = std::abs(z);
  if (az == 0.0) throw std::domain_error("besselJY01: z = 0");
  if (az > kMaxAbsZ) throw std::domain_error("besselJY01: |z| exceeds overflow guard");
  if (az <= kSeriesSwitch) return series_branch(z);
  return asymptotic_branch(z);
}

cplx hankel1(int order, cplx z) {
  if (order != 0 && order != 1)
    throw std::domain_error("hankel1: order must be 0 or 1");
  Bessel01 b = besselJY01(z);
  return order == 0 ? b.H1_0() : b.H1_1();
}

}  // namespace phonon::hankel
