// SPDX-License-Identifier: Apache-2.0
#include "phonon/ewald.hpp"

#include <cmath>
#include <vector>

#include "phonon/hankel.hpp"

namespace phonon::ewald {

namespace {

constexpr double kEtaMax = 0.05;   // Ewald split parameter ceiling
constexpr double kLogCut = 40.0;   // exp(-40) ~ 4e-18 truncation threshold

double harmonic(int n) {
  double h = 0.0;
  for (int i = 1; i <= n; ++i) h += 1.0 / i;
  return h;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

ScalarDerivs& ScalarDerivs::operator+=(const ScalarDerivs& o) {
  v += o.v;
  for (int i = 0; i < 2; ++i) {
    g[i] += o.g[i];
    for (int j = 0; j < 2; ++j) {
      h[i][j] += o.h[i][j];
      for (int k = 0; k < 2; ++k) t[i][j][k] += o.t[i][j][k];
    }
  }
  return *this;
}

ScalarDerivs& ScalarDerivs::operator*=(cplx s) {
  v *= s;
  for (int i = 0; i < 2; ++i) {
    g[i] *= s;
    for (int j = 0; j < 2; ++j) {
      h[i][j] *= s;
      for (int k = 0; k < 2; ++k) t[i][j][k] *= s;
    }
  }
  return *this;
}

double expint(int nu, double x) {
  if (!(x > 0.0)) throw std::domain_error("expint: x must be positive");
  if (nu <= 0) {
    double ex = std::exp(-x);
    switch (nu) {
      case 0: return ex / x;
      case -1: return ex * (1.0 + x) / (x * x);
      case -2: return ex * (2.0 + 2.0 * x + x * x) / (x * x * x);
      case -3: return ex * (6.0 + 6.0 * x + 3.0 * x * x + x * x * x) / (x * x * x * x);
      default: throw std::domain_error("expint: nu < -3 unsupported");
    }
  }
  double e1;
  if (x <= 1.5) {
    // ascending series for E1
    double sum = 0.0, term = 1.0;
    for (int m = 1; m <= 60; ++m) {
      term *= -x / m;
      double add = -term / m;
      sum += add;
      if (std::abs(add) < 1e-18 * (std::abs(sum) + 1.0)) break;
    }
    e1 = -kEulerGamma - std::log(x) + sum;
  } else {
    // modified Lentz continued fraction for E1
    const double tiny = 1e-300;
    double b = x + 1.0, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 200; ++i) {
      double a = -double(i) * double(i);
      b += 2.0;
      d = 1.0 / (a * d + b);
      c = b + a / c;
      double del = c * d;
      h *= del;
      if (std::abs(del - 1.0) < 1e-16) break;
    }
    e1 = h * std::exp(-x);
  }
  if (nu == 1) return e1;
  double e = e1, ex = std::exp(-x);
  for (int n = 1; n < nu; ++n) e = (ex - x * e) / n;
  return e;
}

namespace {

// Accumulate a plane-wave term c * e^{i q.d} (phase already inside c).
void add_planewave(ScalarDerivs& s, const Vec2& q, cplx c) {
  s.v += c;
  cplx iq0 = kI * q.x() * c, iq1 = kI * q.y() * c;
  s.g[0] += iq0;
  s.g[1] += iq1;
  double qq[2] = {q.x(), q.y()};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      s.h[i][j] += -qq[i] * qq[j] * c;
      for (int k = 0; k < 2; ++k) s.t[i][j][k] += -kI * qq[i] * qq[j] * qq[k] * c;
    }
}

// Accumulate a radial profile f(u), u = |w|^2, from derivatives f0..f3 w.r.t u.
void add_radial(ScalarDerivs& s, const Vec2& w, cplx f0, cplx f1, cplx f2, cplx f3) {
  s.v += f0;
  double ww[2] = {w.x(), w.y()};
  for (int i = 0; i < 2; ++i) s.g[i] += 2.0 * ww[i] * f1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      s.h[i][j] += (i == j ? 2.0 * f1 : cplx(0.0)) + 4.0 * ww[i] * ww[j] * f2;
      for (int k = 0; k < 2; ++k) {
        double dsum = (i == j ? ww[k] : 0.0) + (i == k ? ww[j] : 0.0) +
                      (j == k ? ww[i] : 0.0);
        s.t[i][j][k] += 4.0 * dsum * f2 + 8.0 * ww[i] * ww[j] * ww[k] * f3;
      }
    }
}

// sum_j a_j E_{j+shift}(x) for a_j = z2eta^j / j!, shift in {1,0,-1,-2}.
// E-sequence produced once by upward recurrence.
struct EjSums {
  cplx s1{}, s0{}, sm1{}, sm2{};  // shifts +1, 0, -1, -2
};

EjSums ej_sums(cplx z2eta, double x, int jmax) {
  EjSums out;
  std::vector<double> E(jmax + 3);
  // E[idx] = E_{idx-2}(x) for idx >= 0
  E[0] = expint(-2, x);
  E[1] = expint(-1, x);
  E[2] = expint(0, x);
  E[3] = expint(1, x);
  double ex = std::exp(-x);
  for (int nu = 1; nu + 3 <= jmax + 2; ++nu) E[nu + 3] = (ex - x * E[nu + 2]) / nu;
  cplx aj = 1.0;
  for (int j = 0; j <= jmax; ++j) {
    if (j > 0) aj *= z2eta / double(j);
    out.s1 += aj * E[j + 3];
    out.s0 += aj * E[j + 2];
    out.sm1 += aj * E[j + 1];
    out.sm2 += aj * E[j];
    if (std::abs(aj) < 1e-19 * (1.0 + std::abs(out.sm2)) && j > 2) break;
  }
  return out;
}

}  // namespace

double lambda_log(int l, double u) {
  double c = -1.0 / (2.0 * kPi) / (factorial(l - 1) * factorial(l - 1));
  return c * std::pow(-u / 4.0, l - 1);
}

double lambda_log_du(int l, double u) {
  if (l < 2) return 0.0;
  double c = -1.0 / (2.0 * kPi) / (factorial(l - 1) * factorial(l - 1));
  return c * (l - 1) * std::pow(-u / 4.0, l - 2) * (-0.25);
}

double lambda_log_du2(int l, double u) {
  if (l < 3) return 0.0;
  double c = -1.0 / (2.0 * kPi) / (factorial(l - 1) * factorial(l - 1));
  return c * (l - 1) * (l - 2) * std::pow(-u / 4.0, l - 3) * 0.0625;
}

namespace {

// Entire remainder of E_l: E_l(x) = (-x)^{l-1}/(l-1)! (-ln x + psi(l)) + regEl(x),
// regEl(x) = -sum_{m != l-1} (-x)^m / (m! (m-l+1)); derivatives through 3rd.
void reg_expint_series(int l, double x, double out[4]) {
  for (int p = 0; p < 4; ++p) out[p] = 0.0;
  double mterm = 1.0;  // (-x)^m / m!
  for (int m = 0; m <= 70; ++m) {
    if (m > 0) mterm *= -x / m;
    if (m != l - 1) {
      double base = -1.0 / (m - l + 1);
      // d^p/dx^p [(-x)^m/m!] = (-1)^p (-x)^{m-p} / (m-p)!  (for m >= p)
      double c = mterm;
      out[0] += base * c;
      double fall = 1.0;
      for (int p = 1; p < 4; ++p) {
        if (m < p) break;
        fall *= -double(m - p + 1) / (-x);  // converts (-x)^m/m! into derivative
        out[p] += base * mterm * fall;
      }
    }
    if (std::abs(mterm) < 1e-19 && m > l + 3) break;
  }
}

// Profile of the regularized m = 0 spatial term of sigma_l:
//   P_l(u) with  (m=0 term) = lambda_l(u) ln r + P_l(u),  x = u/(4 eta).
// out[p] = d^p P_l / du^p.
void reg_power_profile(int l, double eta, double u, cplx out[4]) {
  double x = u / (4.0 * eta);
  double pref = std::pow(eta, l - 1) / (4.0 * kPi * factorial(l - 1));
  double psi_l = -kEulerGamma + harmonic(l - 1);
  double cpoly = std::pow(-1.0, l - 1) / (4.0 * kPi * factorial(l - 1) * factorial(l - 1)) *
                 (std::log(4.0 * eta) + psi_l);
  // polynomial part cpoly * (u/4)^{l-1}
  double pp[4] = {0, 0, 0, 0};
  for (int p = 0; p < 4; ++p) {
    if (l - 1 - p < 0) break;
    double f = 1.0;
    for (int q = 0; q < p; ++q) f *= (l - 1 - q);
    pp[p] = cpoly * f * std::pow(u / 4.0, l - 1 - p) * std::pow(0.25, p);
  }
  if (x < 1.0) {
    double re[4];
    reg_expint_series(l, x, re);
    double xp = 1.0 / (4.0 * eta);
    for (int p = 0; p < 4; ++p)
      out[p] = pp[p] + pref * re[p] * std::pow(xp, p);
  } else {
    // direct: full E_l profile minus the closed-form lambda_l(u) ln r part
    double f[4];
    f[0] = expint(l, x);
    f[1] = -expint(l - 1, x) / (4.0 * eta);
    f[2] = expint(l - 2, x) / (16.0 * eta * eta);
    f[3] = -expint(l - 3, x) / (64.0 * eta * eta * eta);
    // C_l(u) = (lam_l(u)/pref) * (1/2) ln u ... we need (m=0 term) - lambda ln r:
    // m0(u) = pref * E_l(x); lambda_l(u) ln r = lambda_l(u) (1/2) ln u.
    double lnu = std::log(u);
    double lam[4] = {lambda_log(l, u), lambda_log_du(l, u), lambda_log_du2(l, u), 0.0};
    if (l >= 4) {
      double c = -1.0 / (2.0 * kPi) / (factorial(l - 1) * factorial(l - 1));
      lam[3] = c * (l - 1) * (l - 2) * (l - 3) * std::pow(-u / 4.0, l - 4) * (-1.0 / 64.0);
    }
    double C[4];
    C[0] = lam[0] * 0.5 * lnu;
    C[1] = lam[1] * 0.5 * lnu + lam[0] / (2.0 * u);
    C[2] = lam[2] * 0.5 * lnu + lam[1] / u - lam[0] / (2.0 * u * u);
    C[3] = lam[3] * 0.5 * lnu + 1.5 * lam[2] / u - 1.5 * lam[1] / (u * u) +
           lam[0] / (u * u * u);
    for (int p = 0; p < 4; ++p) out[p] = pref * f[p] - C[p];
  }
}

}  // namespace

ScalarDerivs power_sum_analytic(int l, const Vec2& d, const Vec2& alpha) {
  const double eta = kEtaMax;
  const bool alpha_zero = (alpha.norm() < 1e-14);
  ScalarDerivs s;

  // spectral part
  double q2max = kLogCut / eta;
  int nmax = int(std::sqrt(q2max) / (2.0 * kPi)) + 2;
  for (int n1 = -nmax; n1 <= nmax; ++n1)
    for (int n2 = -nmax; n2 <= nmax; ++n2) {
      if (alpha_zero && n1 == 0 && n2 == 0) continue;
      Vec2 q = 2.0 * kPi * Vec2(n1, n2) + alpha;
      double q2 = q.squaredNorm();
      if (q2 > q2max) continue;
      double x = eta * q2;
      // Gamma(l, x)/Gamma(l) = e^{-x} sum_{m<l} x^m/m!
      double w = 0.0, xm = 1.0;
      for (int m = 0; m < l; ++m) {
        w += xm;
        xm *= x / (m + 1);
      }
      w *= std::exp(-x);
      cplx c = std::exp(kI * q.dot(d)) * w / std::pow(q2, l);
      add_planewave(s, q, c);
    }

  // spatial part
  double rmax2 = 4.0 * eta * kLogCut;
  double pref = std::pow(eta, l - 1) / (4.0 * kPi * factorial(l - 1));
  int mmax = int(std::sqrt(rmax2)) + 2;
  for (int m1 = -mmax; m1 <= mmax; ++m1)
    for (int m2 = -mmax; m2 <= mmax; ++m2) {
      Vec2 mm(m1, m2);
      Vec2 w = d - mm;
      double u = w.squaredNorm();
      if (m1 == 0 && m2 == 0) continue;  // handled in regularized form below
      if (u > rmax2) continue;
      double x = u / (4.0 * eta);
      cplx ph = std::exp(kI * mm.dot(alpha));
      cplx f0 = pref * expint(l, x) * ph;
      cplx f1 = -pref * expint(l - 1, x) / (4.0 * eta) * ph;
      cplx f2 = pref * expint(l - 2, x) / (16.0 * eta * eta) * ph;
      cplx f3 = -pref * expint(l - 3, x) / (64.0 * eta * eta * eta) * ph;
      add_radial(s, w, f0, f1, f2, f3);
    }

  // regularized m = 0 term (entire part only; lambda_l(u) ln r lives with caller)
  {
    cplx pr[4];
    reg_power_profile(l, eta, d.squaredNorm(), pr);
    add_radial(s, d, pr[0], pr[1], pr[2], pr[3]);
  }

  if (alpha_zero) s.v -= std::pow(eta, l) / (l * factorial(l - 1));
  return s;
}

ScalarDerivs power_sum(int l, const Vec2& d, const Vec2& alpha) {
  ScalarDerivs s = power_sum_analytic(l, d, alpha);
  double u = d.squaredNorm();
  if (u == 0.0) throw std::domain_error("power_sum: d = 0 (use power_sum_analytic)");
  double lnr = 0.5 * std::log(u);
  // add lambda_l(u) ln r profile: derivatives of lam(u) * (1/2) ln u
  double lam0 = lambda_log(l, u), lam1 = lambda_log_du(l, u), lam2 = lambda_log_du2(l, u);
  double lam3 = 0.0;
  if (l >= 4) {
    double c = -1.0 / (2.0 * kPi) / (factorial(l - 1) * factorial(l - 1));
    lam3 = c * (l - 1) * (l - 2) * (l - 3) * std::pow(-u / 4.0, l - 4) * (-1.0 / 64.0);
  }
  cplx C0 = lam0 * lnr;
  cplx C1 = lam1 * lnr + lam0 / (2.0 * u);
  cplx C2 = lam2 * lnr + lam1 / u - lam0 / (2.0 * u * u);
  cplx C3 = lam3 * lnr + 1.5 * lam2 / u - 1.5 * lam1 / (u * u) + lam0 / (u * u * u);
  add_radial(s, d, C0, C1, C2, C3);
  return s;
}

ScalarDerivs helmholtz_regular(const Vec2& d, const Vec2& alpha, cplx k,
                               double eps_res) {
  cplx k2 = k * k;
  double eta = std::min(kEtaMax, 2.0 / std::max(1.0, std::abs(k2)));
  ScalarDerivs s;

  // spectral part: e^{i q.d} e^{eta (k^2-|q|^2)} / (k^2-|q|^2)
  double q2max = std::max(std::abs(k2), 0.0) + kLogCut / eta;
  int nmax = int((std::sqrt(q2max) + alpha.norm()) / (2.0 * kPi)) + 2;
  for (int n1 = -nmax; n1 <= nmax; ++n1)
    for (int n2 = -nmax; n2 <= nmax; ++n2) {
      Vec2 q = 2.0 * kPi * Vec2(n1, n2) + alpha;
      double q2 = q.squaredNorm();
      if (q2 > q2max) continue;
      cplx den = k2 - q2;
      if (std::abs(den) < eps_res) throw ResonanceError(n1, n2, std::abs(den));
      cplx c = std::exp(kI * q.dot(d)) * std::exp(eta * den) / den;
      add_planewave(s, q, c);
    }

  // spatial images m != 0
  double xcut = kLogCut + std::abs(k2) * eta;
  double rmax2 = 4.0 * eta * xcut;
  int mmax = int(std::sqrt(rmax2)) + 2;
  cplx z2eta = k2 * eta;
  for (int m1 = -mmax; m1 <= mmax; ++m1)
    for (int m2 = -mmax; m2 <= mmax; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      Vec2 mm(m1, m2);
      Vec2 w = d - mm;
      double u = w.squaredNorm();
      if (u > rmax2) continue;
      double x = u / (4.0 * eta);
      EjSums E = ej_sums(z2eta, x, 60);
      cplx ph = std::exp(kI * mm.dot(alpha)) / (4.0 * kPi);
      cplx f0 = -ph * E.s1;
      cplx f1 = ph * E.s0 / (4.0 * eta);
      cplx f2 = -ph * E.sm1 / (16.0 * eta * eta);
      cplx f3 = ph * E.sm2 / (64.0 * eta * eta * eta);
      add_radial(s, w, f0, f1, f2, f3);
    }

  // m = 0 term combined with the subtracted free-space -(i/4) H1_0(k r):
  // entire radial profile in u = |d|^2.
  {
    double u = d.squaredNorm();
    double x = u / (4.0 * eta);
    cplx f[4];
    if (x < 1.0) {
      // power series in u
      const int P = 40;
      std::vector<cplx> aj(P + 1);
      aj[0] = 1.0;
      for (int j = 1; j <= P; ++j) aj[j] = aj[j - 1] * z2eta / double(j);
      // c_m = sum_{j != m} a_j / (m - j)
      std::vector<cplx> cm(P + 1, 0.0);
      for (int m = 0; m <= P; ++m)
        for (int j = 0; j <= P; ++j)
          if (j != m) cm[m] += aj[j] / double(m - j);
      cplx K0 = -std::log(4.0 * eta) / (4.0 * kPi) + kI / 4.0 -
                (std::log(k / 2.0) + kEulerGamma) / (2.0 * kPi);
      std::vector<cplx> beta(P + 1);
      cplx j0p = 1.0;  // (-k^2/4)^p / (p!)^2
      double mfac = 1.0, x4 = -1.0 / (4.0 * eta);
      cplx x4p = 1.0;
      for (int p = 0; p <= P; ++p) {
        if (p > 0) {
          j0p *= (-k2 / 4.0) / double(p * p);
          mfac *= p;
          x4p *= x4;
        }
        beta[p] = j0p * (K0 + (kEulerGamma + harmonic(p)) / (4.0 * kPi)) +
                  x4p / (4.0 * kPi * mfac) * cm[p];
      }
      for (int p = 0; p < 4; ++p) {
        cplx acc = 0.0;
        for (int q = P; q >= p; --q) {
          double fall = 1.0;
          for (int r = 0; r < p; ++r) fall *= (q - r);
          acc = acc * u + beta[q] * fall;
        }
        f[p] = acc;
      }
    } else {
      EjSums E = ej_sums(z2eta, x, 60);
      cplx pref = 1.0 / (4.0 * kPi);
      f[0] = -pref * E.s1;
      f[1] = pref * E.s0 / (4.0 * eta);
      f[2] = -pref * E.sm1 / (16.0 * eta * eta);
      f[3] = pref * E.sm2 / (64.0 * eta * eta * eta);
      // add (i/4) H1_0(k sqrt(u)) radial derivatives:
      // d^p/du^p (i/4) H0(k r) = (i/4) (-k^2/2)^p H_p(z)/z^p, z = k sqrt(u)
      cplx z = k * std::sqrt(u);
      hankel::Bessel01 B = hankel::besselJY01(z);
      cplx H[4];
      H[0] = B.H1_0();
      H[1] = B.H1_1();
      H[2] = (2.0 / z) * H[1] - H[0];
      H[3] = (4.0 / z) * H[2] - H[1];
      cplx zp = 1.0, cp = 1.0;
      for (int p = 0; p < 4; ++p) {
        f[p] += (kI / 4.0) * cp * H[p] / zp;
        zp *= z;
        cp *= -k2 / 2.0;
      }
    }
    add_radial(s, d, f[0], f[1], f[2], f[3]);
  }
  return s;
}

}  // namespace phonon::ewald
