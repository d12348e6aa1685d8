// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "phonon/ewald.hpp"
#include "phonon/types.hpp"

namespace phonon::lattice {

/// Bloch phase vector with components in [0, 2 pi).
struct Quasimomentum {
  Vec2 alpha{0.0, 0.0};
  Quasimomentum() = default;
  explicit Quasimomentum(const Vec2& a) : alpha(a) {
    if (a.x() < 0 || a.x() >= 2 * kPi || a.y() < 0 || a.y() >= 2 * kPi)
      throw std::domain_error("Quasimomentum: components must lie in [0, 2 pi)");
  }
  bool is_zero() const { return alpha.norm() < 1e-14; }
};

/// Plain reciprocal-lattice truncation parameters.
struct LatticeSumConfig {
  int M = 40;                  // sum over |n|_inf <= M
  double tol = 1e-8;           // target tolerance (reporting only)
  double eps_res_scale = 1e-8; // resonance guard = scale * (1 + |k|^2)

  LatticeSumConfig() = default;
  LatticeSumConfig(int M_, double tol_, double eps_res_scale_ = 1e-8)
      : M(M_), tol(tol_), eps_res_scale(eps_res_scale_) {
    if (M < 8) throw std::domain_error("LatticeSumConfig: M >= 8 required");
    if (!(eps_res_scale > 0)) throw std::domain_error("LatticeSumConfig: eps_res > 0");
  }
  double eps_res(cplx k) const { return eps_res_scale * (1.0 + std::norm(k)); }
};

/// mu-series index carrying tau_l = 1 - (cT/cL)^{2l}.
struct SeriesIndex {
  int l;
  double tau_l;
  SeriesIndex(int l_, const LameParams& p) : l(l_) {
    if (l < 1) throw std::domain_error("SeriesIndex: l >= 1");
    tau_l = 1.0 - std::pow(p.mu / (p.lambda + 2.0 * p.mu), l);
  }
};

/// Truncated-sum result with a tail-size estimate (|S_M - S_{M/2}|_max).
struct SumResult {
  Mat2c value;
  double tail_est;
};

// ---- plain truncated reciprocal-lattice evaluators (spec surface) ----------

SumResult qp_green(const Vec2& d, const Quasimomentum& qm, cplx omega,
                   const LameParams& p, const LatticeSumConfig& cfg);
SumResult qp_green_traction(const Vec2& d, const Vec2& normal,
                            const Quasimomentum& qm, cplx omega,
                            const LameParams& p, const LatticeSumConfig& cfg);

SumResult qp_green_static(const Vec2& d, const Quasimomentum& qm,
                          const LameParams& p, const LatticeSumConfig& cfg);
SumResult qp_green_static_traction(const Vec2& d, const Vec2& normal,
                                   const Quasimomentum& qm, const LameParams& p,
                                   const LatticeSumConfig& cfg);

SumResult periodic_green_static(const Vec2& d, const LameParams& p,
                                const LatticeSumConfig& cfg);

SumResult qp_green_series_term(const SeriesIndex& idx, const Vec2& d,
                               const Quasimomentum& qm, cplx omega,
                               const LameParams& p, const LatticeSumConfig& cfg);
SumResult qp_green_series_term_traction(const SeriesIndex& idx, const Vec2& d,
                                        const Vec2& normal,
                                        const Quasimomentum& qm, cplx omega,
                                        const LameParams& p,
                                        const LatticeSumConfig& cfg);

// ---- Ewald-backed evaluators used by operator assembly ----------------------
// These carry the full quasi-periodic kernels split as (free-space part) +
// (smooth remainder); the remainder and its x-traction are analytic on the
// cell and evaluable at d = 0, which is what Nystrom diagonals need.

/// G^{a,w}(d) - Gamma^w(d), smooth for |d|_inf < 1.
Mat2c qp_regular_matrix(const Vec2& d, const Vec2& alpha, cplx omega,
                        const LameParams& p, double eps_res);
Mat2c qp_regular_traction_x(const Vec2& d, const Vec2& n, const Vec2& alpha,
                            cplx omega, const LameParams& p, double eps_res);

/// G^{a,0}(d) - Gamma^0(d) and its x-traction.
Mat2c qp_static_regular_matrix(const Vec2& d, const Vec2& alpha,
                               const LameParams& p);
Mat2c qp_static_regular_traction_x(const Vec2& d, const Vec2& n,
                                   const Vec2& alpha, const LameParams& p);

/// Gradient (d/d d_k) of G^{a,0}(d), for field-energy evaluation.
void qp_static_gradient(const Vec2& d, const Vec2& alpha, const LameParams& p,
                        Mat2c dG[2]);

/// Full G^{a,w} / G^{a,0} via Ewald (d != 0), for potentials off the diagonal.
Mat2c qp_full_matrix(const Vec2& d, const Vec2& alpha, cplx omega,
                     const LameParams& p, double eps_res);
Mat2c qp_static_full_matrix(const Vec2& d, const Vec2& alpha,
                            const LameParams& p);

// ---- series-term kernels G_l (Ewald-backed), with log splits ---------------
// G_l(d) = w^{2(l-1)} [ -sigma_l(d) I - tau_l Hess sigma_{l+1}(d) ]
//        = L_l(d) ln|d| + B_l(d),  L_l polynomial, B_l analytic.
// l = 1 coincides with mu * (static kernel).

Mat2c series_full_matrix(const SeriesIndex& idx, const Vec2& d,
                         const Vec2& alpha, cplx omega, const LameParams& p);
Mat2c series_log_matrix(const SeriesIndex& idx, const Vec2& d, cplx omega,
                        const LameParams& p);
Mat2c series_analytic_matrix(const SeriesIndex& idx, const Vec2& d,
                             const Vec2& alpha, cplx omega, const LameParams& p);

Mat2c series_full_traction_x(const SeriesIndex& idx, const Vec2& d,
                             const Vec2& n, const Vec2& alpha, cplx omega,
                             const LameParams& p);
Mat2c series_log_traction_x(const SeriesIndex& idx, const Vec2& d,
                            const Vec2& n, cplx omega, const LameParams& p);
Mat2c series_analytic_traction_x(const SeriesIndex& idx, const Vec2& d,
                                 const Vec2& n, const Vec2& alpha, cplx omega,
                                 const LameParams& p);

}  // namespace phonon::lattice
