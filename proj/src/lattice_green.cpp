// SPDX-License-Identifier: Apache-2.0
#include "phonon/lattice_green.hpp"

#include <cmath>

#include "phonon/elastic_kernels.hpp"

namespace phonon::lattice {

namespace {

// traction-in-x from the gradient blocks dG[k]_{ij} = d/d d_k G_{ij}
Mat2c traction_of_gradient(const Mat2c dG[2], const Vec2& n, const LameParams& p) {
  Mat2c T = Mat2c::Zero();
  double nn[2] = {n.x(), n.y()};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cplx div = dG[0](0, j) + dG[1](1, j);
      cplx acc = p.lambda * nn[i] * div;
      for (int k = 0; k < 2; ++k)
        acc += p.mu * nn[k] * (dG[k](i, j) + dG[i](k, j));
      T(i, j) = acc;
    }
  return T;
}

// traction-in-x of a plane-wave matrix term  e^{i q.d} A
Mat2c traction_of_planewave(const Vec2& q, const Mat2c& A, const Vec2& n,
                            const LameParams& p, cplx phase) {
  Mat2c T;
  Eigen::Vector2cd qA = A.transpose() * q.cast<cplx>();   // (q^T A)_j
  Eigen::Vector2cd nA = A.transpose() * n.cast<cplx>();   // (n^T A)_j
  cplx nq = n.dot(q);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      T(i, j) = kI * phase *
                (p.lambda * n[i] * qA(j) + p.mu * nq * A(i, j) + p.mu * q[i] * nA(j));
  return T;
}

struct PlainTerm {
  Mat2c A;      // coefficient matrix of e^{i q.d}
  bool ok = true;
};

// coefficient matrix of one reciprocal-lattice term of G^{a,w}
PlainTerm dyn_coef(const Vec2& q, cplx kT2, cplx kL2, cplx w2, double eps_res) {
  PlainTerm t;
  double q2 = q.squaredNorm();
  cplx denT = kT2 - q2, denL = kL2 - q2;
  if (std::abs(denT) < eps_res || std::abs(denL) < eps_res) {
    t.ok = false;
    return t;
  }
  Mat2c A = Mat2c::Zero();
  cplx c1 = (1.0 / denT);
  // delta_ij / cT^2 = kT^2/w^2:
  A(0, 0) = A(1, 1) = (kT2 / w2) * c1;
  cplx c2 = (kT2 - kL2) / w2 / (denL * denT);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) A(i, j) += c2 * q[i] * q[j];
  t.A = A;
  return t;
}

Mat2c static_coef(const Vec2& q, const LameParams& p) {
  double q2 = q.squaredNorm();
  double c = (p.lambda + p.mu) / (p.lambda + 2.0 * p.mu);
  Mat2c A = Mat2c::Zero();
  A(0, 0) = A(1, 1) = -1.0 / q2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) A(i, j) += c * q[i] * q[j] / (q2 * q2);
  return A / p.mu;
}

Mat2c series_coef(const Vec2& q, int l, double tau_l, cplx w2lm1) {
  double q2 = q.squaredNorm();
  double q2l = std::pow(q2, l);
  Mat2c A = Mat2c::Zero();
  A(0, 0) = A(1, 1) = -1.0 / q2l;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) A(i, j) += tau_l * q[i] * q[j] / (q2l * q2);
  return w2lm1 * A;
}

// generic square-truncated sum; f(q, n1, n2) returns the term
template <class F>
Mat2c truncated_sum(const Vec2& alpha, int M, bool skip_n0, F&& coef,
                    const Vec2& d, const Vec2* normal, const LameParams* p) {
  Mat2c S = Mat2c::Zero();
  for (int n1 = -M; n1 <= M; ++n1)
    for (int n2 = -M; n2 <= M; ++n2) {
      if (skip_n0 && n1 == 0 && n2 == 0) continue;
      Vec2 q = 2.0 * kPi * Vec2(n1, n2) + alpha;
      Mat2c A = coef(q, n1, n2);
      cplx phase = std::exp(kI * q.dot(d));
      if (normal)
        S += traction_of_planewave(q, A, *normal, *p, phase);
      else
        S += phase * A;
    }
  return S;
}

template <class F>
SumResult with_tail(const Vec2& alpha, const LatticeSumConfig& cfg, bool skip_n0,
                    F&& coef, const Vec2& d, const Vec2* normal,
                    const LameParams* p) {
  Mat2c full = truncated_sum(alpha, cfg.M, skip_n0, coef, d, normal, p);
  Mat2c half = truncated_sum(alpha, cfg.M / 2, skip_n0, coef, d, normal, p);
  return {full, (full - half).cwiseAbs().maxCoeff()};
}

}  // namespace

SumResult qp_green(const Vec2& d, const Quasimomentum& qm, cplx omega,
                   const LameParams& p, const LatticeSumConfig& cfg) {
  cplx kT = p.kT(omega), kL = p.kL(omega);
  cplx kT2 = kT * kT, kL2 = kL * kL, w2 = omega * omega;
  double eps = std::max(cfg.eps_res(kT), cfg.eps_res(kL));
  auto coef = [&](const Vec2& q, int n1, int n2) {
    PlainTerm t = dyn_coef(q, kT2, kL2, w2, eps);
    if (!t.ok) throw ResonanceError(n1, n2, std::min(std::abs(kT2 - q.squaredNorm()),
                                                     std::abs(kL2 - q.squaredNorm())));
    return t.A;
  };
  return with_tail(qm.alpha, cfg, false, coef, d, nullptr, nullptr);
}

SumResult qp_green_traction(const Vec2& d, const Vec2& normal,
                            const Quasimomentum& qm, cplx omega,
                            const LameParams& p, const LatticeSumConfig& cfg) {
  cplx kT = p.kT(omega), kL = p.kL(omega);
  cplx kT2 = kT * kT, kL2 = kL * kL, w2 = omega * omega;
  double eps = std::max(cfg.eps_res(kT), cfg.eps_res(kL));
  auto coef = [&](const Vec2& q, int n1, int n2) {
    PlainTerm t = dyn_coef(q, kT2, kL2, w2, eps);
    if (!t.ok) throw ResonanceError(n1, n2, std::min(std::abs(kT2 - q.squaredNorm()),
                                                     std::abs(kL2 - q.squaredNorm())));
    return t.A;
  };
  return with_tail(qm.alpha, cfg, false, coef, d, &normal, &p);
}

SumResult qp_green_static(const Vec2& d, const Quasimomentum& qm,
                          const LameParams& p, const LatticeSumConfig& cfg) {
  if (qm.is_zero()) throw std::domain_error("qp_green_static: alpha = 0 (use periodic_green_static)");
  auto coef = [&](const Vec2& q, int, int) { return static_coef(q, p); };
  return with_tail(qm.alpha, cfg, false, coef, d, nullptr, nullptr);
}

SumResult qp_green_static_traction(const Vec2& d, const Vec2& normal,
                                   const Quasimomentum& qm, const LameParams& p,
                                   const LatticeSumConfig& cfg) {
  if (qm.is_zero()) throw std::domain_error("qp_green_static_traction: alpha = 0");
  auto coef = [&](const Vec2& q, int, int) { return static_coef(q, p); };
  return with_tail(qm.alpha, cfg, false, coef, d, &normal, &p);
}

SumResult periodic_green_static(const Vec2& d, const LameParams& p,
                                const LatticeSumConfig& cfg) {
  auto coef = [&](const Vec2& q, int, int) { return static_coef(q, p); };
  return with_tail(Vec2::Zero(), cfg, true, coef, d, nullptr, nullptr);
}

SumResult qp_green_series_term(const SeriesIndex& idx, const Vec2& d,
                               const Quasimomentum& qm, cplx omega,
                               const LameParams& p, const LatticeSumConfig& cfg) {
  cplx w2lm1 = std::pow(omega, 2 * (idx.l - 1));
  auto coef = [&](const Vec2& q, int, int) { return series_coef(q, idx.l, idx.tau_l, w2lm1); };
  return with_tail(qm.alpha, cfg, qm.is_zero(), coef, d, nullptr, nullptr);
}

SumResult qp_green_series_term_traction(const SeriesIndex& idx, const Vec2& d,
                                        const Vec2& normal,
                                        const Quasimomentum& qm, cplx omega,
                                        const LameParams& p,
                                        const LatticeSumConfig& cfg) {
  cplx w2lm1 = std::pow(omega, 2 * (idx.l - 1));
  auto coef = [&](const Vec2& q, int, int) { return series_coef(q, idx.l, idx.tau_l, w2lm1); };
  return with_tail(qm.alpha, cfg, qm.is_zero(), coef, d, &normal, &p);
}

// ---------------------------------------------------------------------------

Mat2c qp_regular_matrix(const Vec2& d, const Vec2& alpha, cplx omega,
                        const LameParams& p, double eps_res) {
  ewald::ScalarDerivs rT = ewald::helmholtz_regular(d, alpha, p.kT(omega), eps_res);
  ewald::ScalarDerivs rL = ewald::helmholtz_regular(d, alpha, p.kL(omega), eps_res);
  cplx w2 = omega * omega;
  Mat2c R;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      R(i, j) = (i == j ? rT.v / p.mu : cplx(0.0)) - (rL.h[i][j] - rT.h[i][j]) / w2;
  return R;
}

Mat2c qp_regular_traction_x(const Vec2& d, const Vec2& n, const Vec2& alpha,
                            cplx omega, const LameParams& p, double eps_res) {
  ewald::ScalarDerivs rT = ewald::helmholtz_regular(d, alpha, p.kT(omega), eps_res);
  ewald::ScalarDerivs rL = ewald::helmholtz_regular(d, alpha, p.kL(omega), eps_res);
  cplx w2 = omega * omega;
  Mat2c dG[2];
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        dG[k](i, j) = (i == j ? rT.g[k] / p.mu : cplx(0.0)) -
                      (rL.t[i][j][k] - rT.t[i][j][k]) / w2;
  return traction_of_gradient(dG, n, p);
}

Mat2c qp_static_regular_matrix(const Vec2& d, const Vec2& alpha,
                               const LameParams& p) {
  double c = (p.lambda + p.mu) / (p.lambda + 2.0 * p.mu);
  ewald::ScalarDerivs A1 = ewald::power_sum_analytic(1, d, alpha);
  ewald::ScalarDerivs A2 = ewald::power_sum_analytic(2, d, alpha);
  Mat2c R;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      R(i, j) = -((i == j ? A1.v + c / (8.0 * kPi) : cplx(0.0)) + c * A2.h[i][j]) / p.mu;
  return R;
}

Mat2c qp_static_regular_traction_x(const Vec2& d, const Vec2& n,
                                   const Vec2& alpha, const LameParams& p) {
  double c = (p.lambda + p.mu) / (p.lambda + 2.0 * p.mu);
  ewald::ScalarDerivs A1 = ewald::power_sum_analytic(1, d, alpha);
  ewald::ScalarDerivs A2 = ewald::power_sum_analytic(2, d, alpha);
  Mat2c dG[2];
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        dG[k](i, j) = -((i == j ? A1.g[k] : cplx(0.0)) + c * A2.t[i][j][k]) / p.mu;
  return traction_of_gradient(dG, n, p);
}

void qp_static_gradient(const Vec2& d, const Vec2& alpha, const LameParams& p,
                        Mat2c dG[2]) {
  double c = (p.lambda + p.mu) / (p.lambda + 2.0 * p.mu);
  ewald::ScalarDerivs s1 = ewald::power_sum(1, d, alpha);
  ewald::ScalarDerivs s2 = ewald::power_sum(2, d, alpha);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        dG[k](i, j) = -((i == j ? s1.g[k] : cplx(0.0)) + c * s2.t[i][j][k]) / p.mu;
}

Mat2c qp_full_matrix(const Vec2& d, const Vec2& alpha, cplx omega,
                     const LameParams& p, double eps_res) {
  return kern::fundamental_matrix(d, omega, p) +
         qp_regular_matrix(d, alpha, omega, p, eps_res);
}

Mat2c qp_static_full_matrix(const Vec2& d, const Vec2& alpha,
                            const LameParams& p) {
  return kern::kelvin_matrix(d, p) + qp_static_regular_matrix(d, alpha, p);
}

// ---------------------------------------------------------------------------

namespace {

double lambda_poly(int l, double u, int deriv) {
  // lambda_l(u) = c_l (-u/4)^{l-1}, c_l = -(1/2pi)/((l-1)!)^2
  double fac = 1.0;
  for (int i = 2; i < l; ++i) fac *= i;
  double c = -1.0 / (2.0 * kPi) / (fac * fac);
  int pw = l - 1 - deriv;
  if (pw < 0) return 0.0;
  double f = 1.0;
  for (int q = 0; q < deriv; ++q) f *= (l - 1 - q);
  return c * f * std::pow(-0.25, deriv) * std::pow(-u / 4.0, pw);
}

}  // namespace

Mat2c series_full_matrix(const SeriesIndex& idx, const Vec2& d,
                         const Vec2& alpha, cplx omega, const LameParams& p) {
  cplx w2lm1 = std::pow(omega, 2 * (idx.l - 1));
  ewald::ScalarDerivs sl = ewald::power_sum(idx.l, d, alpha);
  ewald::ScalarDerivs sl1 = ewald::power_sum(idx.l + 1, d, alpha);
  Mat2c G;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      G(i, j) = w2lm1 * (-(i == j ? sl.v : cplx(0.0)) - idx.tau_l * sl1.h[i][j]);
  return G;
}

Mat2c series_log_matrix(const SeriesIndex& idx, const Vec2& d, cplx omega,
                        const LameParams& p) {
  cplx w2lm1 = std::pow(omega, 2 * (idx.l - 1));
  double u = d.squaredNorm();
  double l1p = lambda_poly(idx.l + 1, u, 1), l2p = lambda_poly(idx.l + 1, u, 2);
  Mat2c G;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      G(i, j) = w2lm1 * (-(i == j ? lambda_poly(idx.l, u, 0) : 0.0) -
                         idx.tau_l * ((i == j ? 2.0 * l1p : 0.0) + 4.0 * l2p * d[i] * d[j]));
  return G;
}

Mat2c series_analytic_matrix(const SeriesIndex& idx, const Vec2& d,
                             const Vec2& alpha, cplx omega, const LameParams& p) {
  double u = d.squaredNorm();
  if (u == 0.0) {
    if (idx.l < 2)
      throw std::domain_error("series_analytic_matrix: l = 1 diagonal goes through the static path");
    cplx w2lm1 = std::pow(omega, 2 * (idx.l - 1));
    ewald::ScalarDerivs Al = ewald::power_sum_analytic(idx.l, d, alpha);
    ewald::ScalarDerivs Al1 = ewald::power_sum_analytic(idx.l + 1, d, alpha);
    Mat2c G;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        G(i, j) = w2lm1 * (-(i == j ? Al.v : cplx(0.0)) - idx.tau_l * Al1.h[i][j]);
    return G;
  }
  return series_full_matrix(idx, d, alpha, omega, p) -
         series_log_matrix(idx, d, omega, p) * (0.5 * std::log(u));
}

Mat2c series_full_traction_x(const SeriesIndex& idx, const Vec2& d,
                             const Vec2& n, const Vec2& alpha, cplx omega,
                             const LameParams& p) {
  cplx w2lm1 = std::pow(omega, 2 * (idx.l - 1));
  ewald::ScalarDerivs sl = ewald::power_sum(idx.l, d, alpha);
  ewald::ScalarDerivs sl1 = ewald::power_sum(idx.l + 1, d, alpha);
  Mat2c dG[2];
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        dG[k](i, j) = w2lm1 * (-(i == j ? sl.g[k] : cplx(0.0)) -
                               idx.tau_l * sl1.t[i][j][k]);
  return traction_of_gradient(dG, n, p);
}

Mat2c series_log_traction_x(const SeriesIndex& idx, const Vec2& d,
                            const Vec2& n, cplx omega, const LameParams& p) {
  cplx w2lm1 = std::pow(omega, 2 * (idx.l - 1));
  double u = d.squaredNorm();
  int l = idx.l;
  double la1 = lambda_poly(l, u, 1);
  double m2 = lambda_poly(l + 1, u, 2), m3 = lambda_poly(l + 1, u, 3);
  Mat2c dG[2];
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        cplx v = -(i == j ? la1 * 2.0 * d[k] : 0.0);
        v -= idx.tau_l * ((i == j ? 4.0 * m2 * d[k] : 0.0) +
                          8.0 * m3 * d[k] * d[i] * d[j] +
                          4.0 * m2 * ((k == i ? d[j] : 0.0) + (k == j ? d[i] : 0.0)));
        dG[k](i, j) = w2lm1 * v;
      }
  return traction_of_gradient(dG, n, p);
}

Mat2c series_analytic_traction_x(const SeriesIndex& idx, const Vec2& d,
                                 const Vec2& n, const Vec2& alpha, cplx omega,
                                 const LameParams& p) {
  double u = d.squaredNorm();
  if (u == 0.0) {
    if (idx.l < 2)
      throw std::domain_error("series_analytic_traction_x: l = 1 goes through the static path");
    cplx w2lm1 = std::pow(omega, 2 * (idx.l - 1));
    ewald::ScalarDerivs Al = ewald::power_sum_analytic(idx.l, d, alpha);
    ewald::ScalarDerivs Al1 = ewald::power_sum_analytic(idx.l + 1, d, alpha);
    Mat2c dG[2];
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          dG[k](i, j) = w2lm1 * (-(i == j ? Al.g[k] : cplx(0.0)) -
                                 idx.tau_l * Al1.t[i][j][k]);
    return traction_of_gradient(dG, n, p);
  }
  return series_full_traction_x(idx, d, n, alpha, omega, p) -
         series_log_traction_x(idx, d, n, omega, p) * (0.5 * std::log(u));
}

}  // namespace phonon::lattice
