// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "phonon/elastic_kernels.hpp"
#include "phonon/lattice_green.hpp"

using namespace phonon;
using namespace phonon::lattice;

namespace {
const LameParams kP(1.0, 1.0);
const Vec2 kD(0.2, 0.1);
}  // namespace

TEST_CASE("quasi-periodicity of the truncated sum is exact") {
  Quasimomentum qm(Vec2(1.0, 2.0));
  LatticeSumConfig cfg(40, 1e-8);
  cplx omega(1.5, 0.0);
  Mat2c a = qp_green(kD + Vec2(1.0, 0.0), qm, omega, kP, cfg).value;
  Mat2c b = std::exp(kI * 1.0) * qp_green(kD, qm, omega, kP, cfg).value;
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-9 * b.cwiseAbs().maxCoeff());
}

TEST_CASE("conjugation symmetry: G(-d) = conj(G(d)) for real omega") {
  Quasimomentum qm(Vec2(1.0, 2.0));
  LatticeSumConfig cfg(24, 1e-8);
  cplx omega(1.5, 0.0);
  Mat2c a = qp_green(-kD, qm, omega, kP, cfg).value;
  Mat2c b = qp_green(kD, qm, omega, kP, cfg).value.conjugate();
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-13);
  // hermitian structure of the static kernel: G(d) = conj(G(-d))^T
  Mat2c sa = qp_green_static(kD, qm, kP, cfg).value;
  Mat2c sb = qp_green_static(-kD, qm, kP, cfg).value.adjoint();
  CHECK((sa - sb).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("static sum scales as 1/mu at fixed lambda/mu") {
  Quasimomentum qm(Vec2(2.0, 1.0));
  LatticeSumConfig cfg(16, 1e-8);
  Mat2c a = qp_green_static(kD, qm, LameParams(2.0, 2.0), cfg).value;
  Mat2c b = qp_green_static(kD, qm, LameParams(1.0, 1.0), cfg).value;
  CHECK((a - 0.5 * b).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("series term l=1 equals mu * static sum") {
  Quasimomentum qm(Vec2(2.0, 1.0));
  LatticeSumConfig cfg(16, 1e-8);
  SeriesIndex idx(1, kP);
  Mat2c a = qp_green_series_term(idx, kD, qm, cplx(1.3, 0.0), kP, cfg).value;
  Mat2c b = kP.mu * qp_green_static(kD, qm, kP, cfg).value;
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("series term omega scaling") {
  Quasimomentum qm(Vec2(2.0, 1.0));
  LatticeSumConfig cfg(12, 1e-8);
  SeriesIndex i1(1, kP), i2(2, kP);
  // l=1 independent of omega
  Mat2c a = qp_green_series_term(i1, kD, qm, cplx(1.0), kP, cfg).value;
  Mat2c b = qp_green_series_term(i1, kD, qm, cplx(3.0), kP, cfg).value;
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
  // l=2 scales as omega^2
  Mat2c c2 = qp_green_series_term(i2, kD, qm, cplx(2.0), kP, cfg).value;
  Mat2c c1 = qp_green_series_term(i2, kD, qm, cplx(1.0), kP, cfg).value;
  CHECK((c2 - 4.0 * c1).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("large-mu expansion consistency (series as oracle)") {
  LameParams p(1.0, 1e4);
  Quasimomentum qm(Vec2(kPi, kPi));
  LatticeSumConfig cfg(40, 1e-8);
  cplx omega(1.5, 0.0);
  Mat2c full = qp_green(kD, qm, omega, p, cfg).value;
  Mat2c acc = Mat2c::Zero();
  for (int l = 1; l <= 3; ++l) {
    SeriesIndex idx(l, p);
    acc += std::pow(p.mu, -l) *
           qp_green_series_term(idx, kD, qm, omega, p, cfg).value;
  }
  CHECK((full - acc).cwiseAbs().maxCoeff() < 1e-6);
  // partial sums converge geometrically at mu = 100
  LameParams p2(1.0, 100.0);
  Mat2c full2 = qp_green(kD, qm, omega, p2, cfg).value;
  double prev = 1e30;
  for (int L = 1; L <= 3; ++L) {
    Mat2c a2 = Mat2c::Zero();
    for (int l = 1; l <= L; ++l)
      a2 += std::pow(p2.mu, -l) *
            qp_green_series_term(SeriesIndex(l, p2), kD, qm, omega, p2, cfg).value;
    double err = (full2 - a2).cwiseAbs().maxCoeff();
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("periodic static sum has zero cell mean") {
  LatticeSumConfig cfg(40, 1e-8);
  // 64^2 midpoint grid integrates every retained Fourier mode to zero
  const int G = 64;
  Mat2c acc = Mat2c::Zero();
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      Vec2 x((i + 0.5) / G, (j + 0.5) / G);
      acc += periodic_green_static(x - Vec2(0.3, 0.4), kP, cfg).value;
    }
  acc /= double(G * G);
  CHECK(acc.cwiseAbs().maxCoeff() < 1e-8);
  // evenness G(d) = G(-d)^T
  Mat2c a = periodic_green_static(kD, kP, cfg).value;
  Mat2c b = periodic_green_static(-kD, kP, cfg).value.transpose();
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("tau_l values increase within (0,1)") {
  LameParams p(1.0, 1.0);
  double prev = 0.0;
  for (int l = 1; l <= 5; ++l) {
    SeriesIndex idx(l, p);
    CHECK(idx.tau_l > 0.0);
    CHECK(idx.tau_l < 1.0);
    CHECK(idx.tau_l > prev);
    prev = idx.tau_l;
  }
}

TEST_CASE("Ewald evaluators match the plain truncated sums") {
  Quasimomentum qm(Vec2(1.0, 2.0));
  LatticeSumConfig cfg(400, 1e-8);
  cplx omega(1.7, 0.0);
  SumResult plain = qp_green(kD, qm, omega, kP, cfg);
  Mat2c ew = qp_full_matrix(kD, qm.alpha, omega, kP, 1e-8);
  CHECK((plain.value - ew).cwiseAbs().maxCoeff() < 5.0 * std::max(plain.tail_est, 1e-9));

  SumResult ps = qp_green_static(kD, qm, kP, cfg);
  Mat2c es = qp_static_full_matrix(kD, qm.alpha, kP);
  CHECK((ps.value - es).cwiseAbs().maxCoeff() < 5.0 * std::max(ps.tail_est, 1e-9));
}

TEST_CASE("truncation convergence: M 40 -> 80 within reported tail estimate") {
  Quasimomentum qm(Vec2(1.0, 2.0));
  cplx omega(1.5, 0.0);
  SumResult a = qp_green(kD, qm, omega, kP, LatticeSumConfig(40, 1e-8));
  SumResult b = qp_green(kD, qm, omega, kP, LatticeSumConfig(80, 1e-8));
  CHECK((a.value - b.value).cwiseAbs().maxCoeff() <= a.tail_est * 1.0001);
}

TEST_CASE("regular part stays bounded near d = 0") {
  Vec2 alpha(1.0, 2.0);
  cplx omega(1.5, 0.0);
  Vec2 e = Vec2(0.6, 0.8);
  Mat2c prev;
  double prev_norm = -1.0;
  for (double r : {1e-2, 1e-3, 1e-4}) {
    Mat2c R = qp_regular_matrix(r * e, alpha, omega, kP, 1e-8);
    if (prev_norm >= 0.0) CHECK((R - prev).cwiseAbs().maxCoeff() < 1e-3);
    prev = R;
    prev_norm = R.cwiseAbs().maxCoeff();
    // traction variant bounded too
    Mat2c T = qp_regular_traction_x(r * e, Vec2(0, 1), alpha, omega, kP, 1e-8);
    CHECK(std::isfinite(T.cwiseAbs().maxCoeff()));
    CHECK(T.cwiseAbs().maxCoeff() < 50.0);
  }
  // definition check: regular + free = full
  Mat2c full = qp_full_matrix(kD, alpha, omega, kP, 1e-8);
  Mat2c sum = qp_regular_matrix(kD, alpha, omega, kP, 1e-8) +
              kern::fundamental_matrix(kD, omega, kP);
  CHECK((full - sum).cwiseAbs().maxCoeff() == 0.0);  // same composition
  // cross-check against the plain sum at high truncation
  SumResult plain = qp_green(kD, Quasimomentum(alpha), omega, kP,
                             LatticeSumConfig(600, 1e-8));
  CHECK((full - plain.value).cwiseAbs().maxCoeff() < 3e-8);
}

TEST_CASE("Ewald derivative stack is self-consistent (finite differences)") {
  Vec2 alpha(1.0, 2.0);
  cplx k(1.3, 0.1);
  Vec2 d(0.17, -0.23);
  double h = 1e-5;
  auto F = [&](const Vec2& x) { return ewald::helmholtz_regular(x, alpha, k, 1e-10); };
  ewald::ScalarDerivs c = F(d);
  for (int kk = 0; kk < 2; ++kk) {
    Vec2 e = Vec2::Zero();
    e[kk] = h;
    ewald::ScalarDerivs pl = F(d + e), mi = F(d - e);
    CHECK(std::abs((pl.v - mi.v) / (2 * h) - c.g[kk]) < 1e-8);
    for (int i = 0; i < 2; ++i) {
      CHECK(std::abs((pl.g[i] - mi.g[i]) / (2 * h) - c.h[i][kk]) < 1e-7);
      for (int j = 0; j < 2; ++j)
        CHECK(std::abs((pl.h[i][j] - mi.h[i][j]) / (2 * h) - c.t[i][j][kk]) < 1e-6);
    }
  }
  // power sums too
  for (int l : {1, 2, 3, 4}) {
    auto P = [&](const Vec2& x) { return ewald::power_sum(l, x, alpha); };
    ewald::ScalarDerivs pc = P(d);
    Vec2 e(h, 0.0);
    ewald::ScalarDerivs pl = P(d + e), mi = P(d - e);
    CHECK(std::abs((pl.v - mi.v) / (2 * h) - pc.g[0]) < 1e-8);
    CHECK(std::abs((pl.g[1] - mi.g[1]) / (2 * h) - pc.h[1][0]) < 1e-7);
    CHECK(std::abs((pl.h[1][1] - mi.h[1][1]) / (2 * h) - pc.t[1][1][0]) < 2e-6);
  }
}

TEST_CASE("power sums match slow direct summation") {
  Vec2 alpha(1.0, 2.0);
  for (int l : {2, 3}) {
    cplx direct = 0.0;
    int M = 300;
    for (int n1 = -M; n1 <= M; ++n1)
      for (int n2 = -M; n2 <= M; ++n2) {
        Vec2 q = 2.0 * kPi * Vec2(n1, n2) + alpha;
        direct += std::exp(kI * q.dot(kD)) / std::pow(q.squaredNorm(), l);
      }
    ewald::ScalarDerivs s = ewald::power_sum(l, kD, alpha);
    CHECK(std::abs(s.v - direct) < (l == 2 ? 1e-7 : 1e-10));
  }
}

TEST_CASE("PDE residual of the quasi-periodic Green function decays as h^2") {
  Vec2 alpha(1.0, 2.0);
  cplx omega(1.5, 0.0);
  Vec2 x0(0.31, 0.12);
  auto G = [&](const Vec2& x) { return qp_full_matrix(x, alpha, omega, kP, 1e-8); };
  auto residual = [&](double h) {
    Mat2c c = G(x0), xp = G(x0 + Vec2(h, 0)), xm = G(x0 - Vec2(h, 0));
    Mat2c yp = G(x0 + Vec2(0, h)), ym = G(x0 - Vec2(0, h));
    Mat2c pp = G(x0 + Vec2(h, h)), pm = G(x0 + Vec2(h, -h));
    Mat2c mp = G(x0 + Vec2(-h, h)), mm = G(x0 - Vec2(h, h));
    double worst = 0.0;
    for (int j = 0; j < 2; ++j) {
      Eigen::Vector2cd u = c.col(j);
      Eigen::Vector2cd dxx = (xp.col(j) - 2.0 * u + xm.col(j)) / (h * h);
      Eigen::Vector2cd dyy = (yp.col(j) - 2.0 * u + ym.col(j)) / (h * h);
      Eigen::Vector2cd dxy =
          (pp.col(j) - pm.col(j) - mp.col(j) + mm.col(j)) / (4.0 * h * h);
      Eigen::Vector2cd graddiv(dxx(0) + dxy(1), dxy(0) + dyy(1));
      Eigen::Vector2cd res = kP.mu * (dxx + dyy) +
                             (kP.lambda + kP.mu) * graddiv +
                             omega * omega * u;
      worst = std::max(worst, res.cwiseAbs().maxCoeff());
    }
    return worst;
  };
  double r1 = residual(1e-2), r2 = residual(5e-3);
  CHECK(r1 / r2 > 3.0);
  CHECK(r2 < 1e-1);
}

TEST_CASE("resonance guard identifies the offending mode") {
  // kT = |2 pi n + alpha| at n = 0: omega = |alpha| * cT
  Vec2 alpha(1.0, 2.0);
  cplx omega = std::sqrt(5.0) * std::sqrt(kP.mu);
  Quasimomentum qm(alpha);
  LatticeSumConfig cfg(8, 1e-8, 1e-6);
  CHECK_THROWS_AS(qp_green(kD, qm, omega, kP, cfg), ResonanceError);
  try {
    qp_green(kD, qm, omega, kP, cfg);
  } catch (const ResonanceError& e) {
    CHECK(e.n1() == 0);
    CHECK(e.n2() == 0);
  }
  // static sums never hit resonances
  CHECK_NOTHROW(qp_green_static(kD, qm, kP, cfg));
}

TEST_CASE("series kernels: log splits reproduce full values") {
  LameParams p(1.0, 1.0);
  Vec2 alpha(kPi, kPi / 2);
  cplx omega(1.3, 0.0);
  for (int l : {2, 3}) {
    SeriesIndex idx(l, p);
    Mat2c full = series_full_matrix(idx, kD, alpha, omega, p);
    Mat2c rebuilt = series_analytic_matrix(idx, kD, alpha, omega, p) +
                    series_log_matrix(idx, kD, omega, p) * std::log(kD.norm());
    CHECK((full - rebuilt).cwiseAbs().maxCoeff() < 1e-13);
    Vec2 n(0.6, 0.8);
    Mat2c ft = series_full_traction_x(idx, kD, n, alpha, omega, p);
    Mat2c rt = series_analytic_traction_x(idx, kD, n, alpha, omega, p) +
               series_log_traction_x(idx, kD, n, omega, p) * std::log(kD.norm());
    CHECK((ft - rt).cwiseAbs().maxCoeff() < 1e-13);
    // analytic parts stay finite at d = 0
    CHECK(std::isfinite(series_analytic_matrix(idx, Vec2(0, 0), alpha, omega, p)
                            .cwiseAbs()
                            .maxCoeff()));
  }
}
