// SPDX-License-Identifier: Apache-2.0
#include "phonon/asymptotics.hpp"

#include <cmath>

#include <Eigen/LU>

#include "phonon/linalg.hpp"

namespace phonon::asym {

void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w) {
  // Newton iteration on Legendre polynomials, nodes mapped to [0, 1]
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p0 = 0, p1 = 0, dp = 0;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1);
      }
      dp = n * (t * p0 - p1) / (t * t - 1.0);
      double dt = p0 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[n - 1 - i] = 0.5 * (t + 1.0);
    w[n - 1 - i] = 1.0 / ((1.0 - t * t) * dp * dp);
  }
}

DirichletEigenpair dirichlet_eigenpair(const geom::ParametricCurve& curve,
                                       const LameParams& inclusion,
                                       double omega0_guess,
                                       const EigenpairOptions& opt) {
  DirichletEigenpair pair;
  pair.inclusion = inclusion;
  pair.mesh = geom::sample_mesh(curve, opt.N);
  const geom::BoundaryMesh& mesh = pair.mesh;

  roots::OperatorFamily fam;
  fam.tag = "S~";
  fam.dim = 2 * mesh.N;
  fam.eval = [&mesh, inclusion, &opt](cplx w) {
    return ops::assemble_single_layer(mesh, ops::KernelSpec::free_space(), w,
                                      inclusion, opt.lattice)
        .matrix;
  };
  roots::RootWindow win;
  win.step = 0.02;
  win.accept_sigma = opt.accept_sigma;
  auto cv = roots::refine_root(fam, cplx(omega0_guess, 0.0), win);
  if (!cv) throw std::runtime_error("dirichlet_eigenpair: refinement failed near guess");
  auto count = roots::count_in_contour(fam, cv->omega, opt.contour_radius);
  if (!count.rejected && std::lround(count.count) >= 2)
    throw std::domain_error("dirichlet_eigenpair: degenerate mode (multiplicity >= 2) rejected");
  pair.omega0 = cv->omega.real();

  MatXc S = fam.eval(cplx(pair.omega0, 0.0));
  VecXc v;
  linalg::sigma_min_vector(S, v);
  pair.phi = v;
  pair.sigma_min = cv->sigma_min;

  // u0 = -S~^{w0} phi on a star-shaped polar grid; int_D |u0|^2 by
  // Gauss(radial) x trapezoid(angular) with the map c + r (x(t)-c).
  std::vector<double> gx, gw;
  gauss_legendre_01(opt.n_radial, gx, gw);
  Vec2 c = curve.centroid_hint();
  std::vector<Vec2> pts;
  std::vector<double> qw;
  pts.reserve(opt.n_radial * opt.n_angular);
  qw.reserve(pts.capacity());
  for (int it = 0; it < opt.n_angular; ++it) {
    double t = 2.0 * kPi * it / opt.n_angular;
    Vec2 b = curve.position(t) - c;
    Vec2 bp = curve.derivative(t);
    double cross = b.x() * bp.y() - b.y() * bp.x();
    for (int ir = 0; ir < opt.n_radial; ++ir) {
      double rho = gx[ir];
      pts.push_back(c + rho * b);
      qw.push_back(gw[ir] * rho * std::abs(cross) * (2.0 * kPi / opt.n_angular));
    }
  }
  auto u0 = ops::evaluate_single_layer_potential(
      mesh, ops::KernelSpec::free_space(), cplx(pair.omega0, 0.0), inclusion,
      opt.lattice, pair.phi, pts, opt.upsample);
  double acc = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) acc += qw[i] * u0[i].squaredNorm();
  pair.u0_norm_sq = acc;  // |-S phi|^2 = |S phi|^2
  return pair;
}

Corrector cell_corrector(const DirichletEigenpair& pair, const Vec2& alpha,
                         const LameParams& matrix_p,
                         const lattice::LatticeSumConfig& cfg) {
  if (alpha.norm() < 1e-14)
    throw std::domain_error("cell_corrector: alpha must be nonzero");
  const geom::BoundaryMesh& mesh = pair.mesh;
  auto Ks = ops::assemble_kstar(mesh, ops::KernelSpec::quasi_periodic_static(alpha),
                                0.0, matrix_p, cfg);
  MatXc M = Ks.matrix;
  for (int i = 0; i < M.rows(); ++i) M(i, i) += 0.5;
  Eigen::PartialPivLU<MatXc> lu(M);
  Corrector corr;
  corr.alpha = alpha;
  corr.psi = lu.solve(pair.phi);
  auto Sq = ops::assemble_single_layer(
      mesh, ops::KernelSpec::quasi_periodic_static(alpha), 0.0, matrix_p, cfg);
  corr.w0 = Sq.matrix * corr.psi;
  return corr;
}

LeadingOrderResult leading_coefficient(const DirichletEigenpair& pair,
                                       const Corrector& corr,
                                       const LameParams& matrix_p) {
  const geom::BoundaryMesh& mesh = pair.mesh;
  cplx inner = 0.0;
  double w = mesh.weight();
  for (int k = 0; k < mesh.N; ++k) {
    cplx dot = pair.phi(2 * k) * std::conj(corr.w0(2 * k)) +
               pair.phi(2 * k + 1) * std::conj(corr.w0(2 * k + 1));
    inner += w * mesh.jacobians[k] * dot;
  }
  // (1/mu) E(v0, v0) = -mu int phi . conj(w0)
  double energy = -matrix_p.mu * inner.real();
  double imag_defect = matrix_p.mu * std::abs(inner.imag());
  if (energy < -1e-10)
    throw std::runtime_error("leading_coefficient: negative corrector energy");
  LeadingOrderResult out;
  out.alpha = corr.alpha;
  out.corrector_energy = energy;
  out.imag_defect = imag_defect;
  out.coefficient = -energy / (2.0 * pair.omega0 * pair.u0_norm_sq);
  return out;
}

namespace {

cplx contour_trace(const ExpansionFamilies& fam, const Contour& contour,
                   const std::function<cplx(const Eigen::PartialPivLU<MatXc>&, cplx)>& body) {
  cplx acc = 0.0;
  for (int q = 0; q < contour.Q; ++q) {
    double th = 2.0 * kPi * q / contour.Q;
    cplx w = contour.center + contour.radius * std::exp(kI * th);
    Eigen::PartialPivLU<MatXc> lu(fam.A0(w));
    acc += body(lu, w) * contour.radius * std::exp(kI * th) / double(contour.Q);
  }
  return acc;
}

}  // namespace

cplx expansion_term(const ExpansionFamilies& fam, const Contour& contour, int n) {
  if (n < 1 || n > 3) throw std::domain_error("expansion_term: 1 <= n <= 3");
  auto body = [&](const Eigen::PartialPivLU<MatXc>& lu, cplx w) -> cplx {
    MatXc M1 = lu.solve(fam.Al(1, w));
    if (n == 1) return -M1.trace();
    MatXc M2 = lu.solve(fam.Al(2, w));
    if (n == 2) return -M2.trace() + 0.5 * (M1 * M1).trace();
    MatXc M3 = lu.solve(fam.Al(3, w));
    // -tr M3 + (1/2)(tr M1 M2 + tr M2 M1) - (1/3) tr M1^3
    return -M3.trace() + (M1 * M2).trace() - (M1 * M1 * M1).trace() / 3.0;
  };
  return contour_trace(fam, contour, body);
}

cplx transition_expansion(const ExpansionFamilies& fam, const Contour& contour) {
  auto body = [&](const Eigen::PartialPivLU<MatXc>& lu, cplx w) -> cplx {
    return -lu.solve(fam.Al(1, w)).trace();
  };
  return contour_trace(fam, contour, body);
}

}  // namespace phonon::asym
