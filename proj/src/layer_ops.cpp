// SPDX-License-Identifier: Apache-2.0
#include "phonon/layer_ops.hpp"

#include <cmath>

#include "phonon/elastic_kernels.hpp"

namespace phonon::ops {

namespace {

const Mat2c kSpin = [] {
  Mat2c s;
  s << 0.0, 1.0, -1.0, 0.0;
  return s;
}();

double log4sin2(double ti, double tj) {
  double s = 2.0 * std::sin(0.5 * (ti - tj));
  return std::log(s * s);
}

struct FreeKernelCtx {
  cplx omega;
  LameParams p;
  bool is_static;
  double g1, g2, kap, kap2;
  cplx psiR0;

  FreeKernelCtx(cplx w, const LameParams& pp)
      : omega(w), p(pp), is_static(w == cplx(0.0)) {
    g1 = p.gamma1();
    g2 = p.gamma2();
    kap = p.mu / (2.0 * kPi * (p.lambda + 2.0 * p.mu));
    kap2 = (p.lambda + p.mu) / (2.0 * kPi * (p.lambda + 2.0 * p.mu));
    psiR0 = is_static ? cplx(0.0) : kern::psi_reg_at_zero(w, p);
  }

  kern::KernelScalars scalars(double r) const {
    return is_static ? kern::static_scalars(p, r) : kern::elastic_scalars(omega, p, r);
  }
};

// single-layer kernel entry pieces for the free-space part
void free_single_entry(const FreeKernelCtx& c, const geom::BoundaryMesh& m,
                       int i, int j, Mat2c& M1, Mat2c& M2) {
  if (i == j) {
    double jac = m.jacobians[i];
    Vec2 tau = m.tangents[i] / jac;
    M1 = 0.5 * (c.g1 / (2.0 * kPi)) * jac * Mat2c::Identity();
    M2 = ((c.g1 / (2.0 * kPi)) * std::log(jac) + c.psiR0) * Mat2c::Identity();
    M2 += (-c.g2 / (2.0 * kPi)) * (tau * tau.transpose()).cast<cplx>();
    M2 *= jac;
    return;
  }
  Vec2 d = m.nodes[i] - m.nodes[j];
  double r = d.norm();
  Vec2 e = d / r;
  kern::KernelScalars s = c.scalars(r);
  Mat2c ee = (e * e.transpose()).cast<cplx>();
  Mat2c G = s.psi * Mat2c::Identity() + s.chi * ee;
  Mat2c L = s.psiL * Mat2c::Identity() + s.chiL * ee;
  double jac = m.jacobians[j];
  M1 = 0.5 * L * jac;
  M2 = G * jac - M1 * log4sin2(m.params[i], m.params[j]);
}

// K* kernel pieces: Cauchy scalar, log coefficient, smooth remainder
void free_kstar_entry(const FreeKernelCtx& c, const geom::BoundaryMesh& m,
                      int i, int j, Mat2c& M1, Mat2c& Msm) {
  if (i == j) {
    double jac = m.jacobians[i];
    Vec2 tau = m.tangents[i] / jac;
    double xpxpp = m.tangents[i].dot(m.second_derivs[i]);
    double nxpp = m.normals[i].dot(m.second_derivs[i]);
    M1 = Mat2c::Zero();
    Msm = c.kap * (xpxpp / (2.0 * jac * jac)) * kSpin;
    Msm += (-nxpp / (2.0 * jac)) *
           (c.kap * Mat2c::Identity() + 2.0 * c.kap2 * (tau * tau.transpose()).cast<cplx>());
    return;
  }
  Vec2 d = m.nodes[i] - m.nodes[j];
  double r = d.norm();
  Vec2 e = d / r;
  const Vec2& n = m.normals[i];
  kern::KernelScalars s = c.scalars(r);
  Mat2c T = kern::traction_from_scalars(s.a, s.b, s.c, e, n, c.p);
  Mat2c TL = kern::traction_from_scalars(s.aL, s.bL, s.cL, e, n, c.p);
  double jac = m.jacobians[j];
  M1 = 0.5 * TL * jac;
  double cotv = 0.5 / std::tan(0.5 * (m.params[j] - m.params[i]));
  Msm = T * jac - M1 * log4sin2(m.params[i], m.params[j]) - c.kap * cotv * kSpin;
}

void check_kernel(const KernelSpec& spec) {
  if (spec.kind == KernelSpec::Kind::Series && spec.series_l < 1)
    throw std::domain_error("KernelSpec: series index l >= 1");
}

std::string kind_name(const KernelSpec& spec) {
  switch (spec.kind) {
    case KernelSpec::Kind::Free: return "free";
    case KernelSpec::Kind::QPDynamic: return "quasi-periodic";
    case KernelSpec::Kind::QPStatic:
      return spec.alpha.norm() < 1e-14 ? "periodic-static" : "quasi-periodic-static";
    default: return "series-term(" + std::to_string(spec.series_l) + ")";
  }
}

}  // namespace

std::vector<double> kress_weights(int N) {
  int n = N / 2;
  std::vector<double> R(N);
  for (int k = 0; k < N; ++k) {
    double acc = 0.0;
    for (int m = 1; m < n; ++m) acc += std::cos(2.0 * kPi * m * k / N) / m;
    R[k] = -4.0 * kPi / N * acc - 2.0 * kPi / (double(N) * N) * ((k % 2 == 0) ? 1.0 : -1.0);
  }
  return R;
}

std::vector<double> hilbert_weights(int N) {
  int n = N / 2;
  std::vector<double> H(N);
  for (int k = 0; k < N; ++k) {
    double acc = 0.0;
    for (int m = 1; m < n; ++m) acc += std::sin(2.0 * kPi * m * k / N);
    H[k] = -4.0 * kPi / N * acc;
  }
  return H;
}

DiscretizedOperator assemble_single_layer(const geom::BoundaryMesh& mesh,
                                          const KernelSpec& spec, cplx omega,
                                          const LameParams& p,
                                          const lattice::LatticeSumConfig& cfg,
                                          par::Exec exec) {
  check_kernel(spec);
  const int N = mesh.N;
  const double w = mesh.weight();
  DiscretizedOperator out;
  out.matrix = MatXc::Zero(2 * N, 2 * N);
  out.kind = "S:" + kind_name(spec);
  out.omega = omega;
  out.alpha = spec.alpha;
  out.mesh_N = N;

  // series l = 1 is exactly mu * (static quasi-periodic layer)
  if (spec.kind == KernelSpec::Kind::Series && spec.series_l == 1) {
    KernelSpec st = KernelSpec::quasi_periodic_static(spec.alpha);
    out.matrix = p.mu * assemble_single_layer(mesh, st, 0.0, p, cfg, exec).matrix;
    return out;
  }

  std::vector<double> R = kress_weights(N);
  bool is_static_kind = spec.kind == KernelSpec::Kind::QPStatic;
  cplx omega_kernel = is_static_kind ? cplx(0.0) : omega;
  FreeKernelCtx ctx(omega_kernel, p);
  double eps = std::max(cfg.eps_res(p.kT(omega)), cfg.eps_res(p.kL(omega)));
  lattice::SeriesIndex sidx(std::max(spec.series_l, 1), p);

  par::parallel_for(N, exec, [&](int i) {
    for (int j = 0; j < N; ++j) {
      Mat2c entry = Mat2c::Zero();
      double jac = mesh.jacobians[j];
      Vec2 d = mesh.nodes[i] - mesh.nodes[j];
      switch (spec.kind) {
        case KernelSpec::Kind::Free: {
          Mat2c M1, M2;
          free_single_entry(ctx, mesh, i, j, M1, M2);
          entry = R[std::abs(i - j) % N] * M1 + w * M2;
          break;
        }
        case KernelSpec::Kind::QPDynamic: {
          Mat2c M1, M2;
          free_single_entry(ctx, mesh, i, j, M1, M2);
          Mat2c reg = lattice::qp_regular_matrix(d, spec.alpha, omega, p, eps);
          entry = R[std::abs(i - j) % N] * M1 + w * (M2 + reg * jac);
          break;
        }
        case KernelSpec::Kind::QPStatic: {
          Mat2c M1, M2;
          free_single_entry(ctx, mesh, i, j, M1, M2);
          Mat2c reg = lattice::qp_static_regular_matrix(d, spec.alpha, p);
          entry = R[std::abs(i - j) % N] * M1 + w * (M2 + reg * jac);
          break;
        }
        case KernelSpec::Kind::Series: {
          Mat2c M1 = 0.5 * lattice::series_log_matrix(sidx, d, omega, p) * jac;
          Mat2c B = lattice::series_analytic_matrix(sidx, d, spec.alpha, omega, p);
          Mat2c M2 = B * jac;
          if (i != j) {
            double lnr = 0.5 * std::log(d.squaredNorm());
            M2 += (lattice::series_log_matrix(sidx, d, omega, p) * lnr -
                   M1 / jac * log4sin2(mesh.params[i], mesh.params[j])) *
                  jac;
          } else {
            // lambda-parts vanish at the diagonal; account for ln|x'| via
            // lim [ln r - ln(2 sin)] = ln jac with L(0) = 0 for l >= 2.
          }
          entry = R[std::abs(i - j) % N] * M1 + w * M2;
          break;
        }
      }
      out.matrix.block(2 * i, 2 * j, 2, 2) = entry;
    }
  });
  return out;
}

DiscretizedOperator assemble_kstar(const geom::BoundaryMesh& mesh,
                                   const KernelSpec& spec, cplx omega,
                                   const LameParams& p,
                                   const lattice::LatticeSumConfig& cfg,
                                   par::Exec exec) {
  check_kernel(spec);
  const int N = mesh.N;
  const double w = mesh.weight();
  DiscretizedOperator out;
  out.matrix = MatXc::Zero(2 * N, 2 * N);
  out.kind = "K*:" + kind_name(spec);
  out.omega = omega;
  out.alpha = spec.alpha;
  out.mesh_N = N;

  if (spec.kind == KernelSpec::Kind::Series && spec.series_l == 1) {
    KernelSpec st = KernelSpec::quasi_periodic_static(spec.alpha);
    out.matrix = p.mu * assemble_kstar(mesh, st, 0.0, p, cfg, exec).matrix;
    return out;
  }

  std::vector<double> R = kress_weights(N);
  std::vector<double> H = hilbert_weights(N);
  bool is_static_kind = spec.kind == KernelSpec::Kind::QPStatic;
  cplx omega_kernel = is_static_kind ? cplx(0.0) : omega;
  FreeKernelCtx ctx(omega_kernel, p);
  double eps = std::max(cfg.eps_res(p.kT(omega)), cfg.eps_res(p.kL(omega)));
  lattice::SeriesIndex sidx(std::max(spec.series_l, 1), p);

  par::parallel_for(N, exec, [&](int i) {
    for (int j = 0; j < N; ++j) {
      Mat2c entry = Mat2c::Zero();
      double jac = mesh.jacobians[j];
      Vec2 d = mesh.nodes[i] - mesh.nodes[j];
      const Vec2& n_i = mesh.normals[i];
      switch (spec.kind) {
        case KernelSpec::Kind::Free:
        case KernelSpec::Kind::QPDynamic:
        case KernelSpec::Kind::QPStatic: {
          Mat2c M1, Msm;
          free_kstar_entry(ctx, mesh, i, j, M1, Msm);
          int km = ((i - j) % N + N) % N;
          entry = ctx.kap * 0.5 * H[km] * kSpin + R[km] * M1 + w * Msm;
          if (spec.kind == KernelSpec::Kind::QPDynamic)
            entry += w * jac * lattice::qp_regular_traction_x(d, n_i, spec.alpha, omega, p, eps);
          else if (spec.kind == KernelSpec::Kind::QPStatic)
            entry += w * jac * lattice::qp_static_regular_traction_x(d, n_i, spec.alpha, p);
          break;
        }
        case KernelSpec::Kind::Series: {
          Mat2c M1 = 0.5 * lattice::series_log_traction_x(sidx, d, n_i, omega, p) * jac;
          Mat2c Msm;
          if (i != j) {
            Mat2c T = lattice::series_full_traction_x(sidx, d, n_i, spec.alpha, omega, p);
            Msm = T * jac - 2.0 * M1 * (0.5 * log4sin2(mesh.params[i], mesh.params[j]));
          } else {
            Msm = lattice::series_analytic_traction_x(sidx, d, n_i, spec.alpha, omega, p) * jac;
          }
          entry = R[std::abs(i - j) % N] * M1 + w * Msm;
          break;
        }
      }
      out.matrix.block(2 * i, 2 * j, 2, 2) = entry;
    }
  });
  return out;
}

MatXc discrete_adjoint(const geom::BoundaryMesh& mesh, const MatXc& M) {
  int N = mesh.N;
  MatXc out = M.transpose();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      double s = mesh.jacobians[j] / mesh.jacobians[i];
      out.block(2 * i, 2 * j, 2, 2) *= s;
    }
  return out;
}

namespace {

MatXc half_plus(const MatXc& K, double sign) {
  MatXc out = sign * K;
  for (int i = 0; i < K.rows(); ++i) out(i, i) += 0.5;
  return out;
}

void fill_mean_block(Eigen::Block<MatXc> blk, const geom::BoundaryMesh& mesh,
                     const Mat2c& C) {
  const int N = mesh.N;
  const double w = mesh.weight();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      blk.block(2 * i, 2 * j, 2, 2) = C * (w * mesh.jacobians[j]);
}

}  // namespace

BlockOperator assemble_A(const Vec2& alpha, cplx omega, const LameParams& matrix_p,
                         const LameParams& inclusion_p, double rho,
                         const geom::BoundaryMesh& mesh,
                         const lattice::LatticeSumConfig& cfg, par::Exec exec) {
  const int N = mesh.N;
  cplx omega_eff = std::sqrt(rho) * omega;  // matrix phase carries rho w^2
  KernelSpec qp = KernelSpec::quasi_periodic(alpha);
  auto St = assemble_single_layer(mesh, KernelSpec::free_space(), omega, inclusion_p, cfg, exec);
  auto Sq = assemble_single_layer(mesh, qp, omega_eff, matrix_p, cfg, exec);
  auto Kt = assemble_kstar(mesh, KernelSpec::free_space(), omega, inclusion_p, cfg, exec);
  auto Kq = assemble_kstar(mesh, qp, omega_eff, matrix_p, cfg, exec);

  BlockOperator A;
  A.matrix = MatXc::Zero(4 * N, 4 * N);
  A.family = "A(alpha,omega)";
  A.omega = omega;
  A.alpha = alpha;
  A.mesh_N = N;
  A.block(0, 0) = St.matrix;
  A.block(0, 1) = -Sq.matrix;
  A.block(1, 0) = half_plus(Kt.matrix, -1.0);
  A.block(1, 1) = half_plus(Kq.matrix, +1.0);
  return A;
}

BlockOperator assemble_A0(const Vec2& alpha, cplx omega, const LameParams& matrix_p,
                          const LameParams& inclusion_p,
                          const geom::BoundaryMesh& mesh,
                          const lattice::LatticeSumConfig& cfg, par::Exec exec) {
  if (alpha.norm() < 1e-14)
    throw std::domain_error("assemble_A0: alpha must be nonzero (use assemble_A0_periodic)");
  const int N = mesh.N;
  auto St = assemble_single_layer(mesh, KernelSpec::free_space(), omega, inclusion_p, cfg, exec);
  auto Kt = assemble_kstar(mesh, KernelSpec::free_space(), omega, inclusion_p, cfg, exec);
  auto K0 = assemble_kstar(mesh, KernelSpec::quasi_periodic_static(alpha), 0.0, matrix_p, cfg, exec);

  BlockOperator A;
  A.matrix = MatXc::Zero(4 * N, 4 * N);
  A.family = "A0(alpha,omega)";
  A.omega = omega;
  A.alpha = alpha;
  A.mesh_N = N;
  A.block(0, 0) = St.matrix;
  A.block(1, 0) = half_plus(Kt.matrix, -1.0);
  A.block(1, 1) = half_plus(K0.matrix, +1.0);
  return A;
}

BlockOperator assemble_A0_periodic(cplx omega, const LameParams& matrix_p,
                                   const LameParams& inclusion_p, double rho,
                                   const geom::BoundaryMesh& mesh,
                                   const lattice::LatticeSumConfig& cfg,
                                   par::Exec exec) {
  if (omega == cplx(0.0)) throw std::domain_error("assemble_A0_periodic: omega = 0");
  const int N = mesh.N;
  auto St = assemble_single_layer(mesh, KernelSpec::free_space(), omega, inclusion_p, cfg, exec);
  auto Kt = assemble_kstar(mesh, KernelSpec::free_space(), omega, inclusion_p, cfg, exec);
  auto K0 = assemble_kstar(mesh, KernelSpec::periodic_static(), 0.0, matrix_p, cfg, exec);

  BlockOperator A;
  A.matrix = MatXc::Zero(4 * N, 4 * N);
  A.family = "A0(0,omega)";
  A.omega = omega;
  A.mesh_N = N;
  A.block(0, 0) = St.matrix;
  Mat2c C = -(1.0 / (rho * omega * omega)) * Mat2c::Identity();
  fill_mean_block(A.block(0, 1), mesh, C);
  A.block(1, 0) = half_plus(Kt.matrix, -1.0);
  A.block(1, 1) = half_plus(K0.matrix, +1.0);
  return A;
}

BlockOperator assemble_Al(int l, const Vec2& alpha, cplx omega,
                          const LameParams& matrix_p, double rho,
                          const geom::BoundaryMesh& mesh,
                          const lattice::LatticeSumConfig& cfg, par::Exec exec) {
  if (l < 1) throw std::domain_error("assemble_Al: l >= 1");
  const int N = mesh.N;
  auto Sl = assemble_single_layer(mesh, KernelSpec::series(l, alpha), omega, matrix_p, cfg, exec);
  auto Kl1 = assemble_kstar(mesh, KernelSpec::series(l + 1, alpha), omega, matrix_p, cfg, exec);

  BlockOperator A;
  A.matrix = MatXc::Zero(4 * N, 4 * N);
  A.family = "A_l";
  A.omega = omega;
  A.alpha = alpha;
  A.mesh_N = N;
  double rl = std::pow(rho, l - 1);
  A.block(0, 1) = -rl * Sl.matrix;
  A.block(1, 1) = (rl * rho / matrix_p.mu) * Kl1.matrix;
  return A;
}

BlockOperator assemble_A_tau(double tau, const Vec2& dir, cplx omega,
                             const LameParams& matrix_p, const LameParams& inclusion_p,
                             double rho, const geom::BoundaryMesh& mesh,
                             const lattice::LatticeSumConfig& cfg, par::Exec exec,
                             double pole_guard) {
  cplx rw2 = rho * omega * omega;
  if (std::abs(rw2 - tau) < pole_guard || std::abs(rw2 - 2.0 * tau) < pole_guard)
    throw std::domain_error("assemble_A_tau: omega^2 within guard of {tau/rho, 2tau/rho}");
  const int N = mesh.N;
  auto St = assemble_single_layer(mesh, KernelSpec::free_space(), omega, inclusion_p, cfg, exec);
  auto Kt = assemble_kstar(mesh, KernelSpec::free_space(), omega, inclusion_p, cfg, exec);
  auto K0 = assemble_kstar(mesh, KernelSpec::periodic_static(), 0.0, matrix_p, cfg, exec);

  BlockOperator A;
  A.matrix = MatXc::Zero(4 * N, 4 * N);
  A.family = "A_tau";
  A.omega = omega;
  A.mesh_N = N;
  A.block(0, 0) = St.matrix;
  Vec2 u = dir.normalized();
  Mat2c taumat = tau * (u * u.transpose()).cast<cplx>();
  Mat2c C = -(1.0 / (rw2 - tau)) * (Mat2c::Identity() + taumat / (rw2 - 2.0 * tau));
  fill_mean_block(A.block(0, 1), mesh, C);
  A.block(1, 0) = half_plus(Kt.matrix, -1.0);
  A.block(1, 1) = half_plus(K0.matrix, +1.0);
  return A;
}

// ---------------------------------------------------------------------------

namespace {

// trigonometric interpolation of nodal density onto a finer equispaced grid
std::vector<Eigen::Vector2cd> upsample_density(const VecXc& density, int N, int Nup) {
  // DFT coefficients (O(N^2), N <= few hundred)
  std::vector<Eigen::Vector2cd> coef(N);
  for (int m = 0; m < N; ++m) {
    Eigen::Vector2cd acc(0.0, 0.0);
    for (int k = 0; k < N; ++k) {
      cplx ph = std::exp(-kI * (2.0 * kPi * m * k / double(N)));
      acc(0) += density(2 * k) * ph;
      acc(1) += density(2 * k + 1) * ph;
    }
    coef[m] = acc / double(N);
  }
  std::vector<Eigen::Vector2cd> out(Nup, Eigen::Vector2cd::Zero());
  int n = N / 2;
  for (int k = 0; k < Nup; ++k) {
    double t = 2.0 * kPi * k / Nup;
    Eigen::Vector2cd acc = coef[0];
    for (int m = 1; m < n; ++m) {
      cplx ph = std::exp(kI * (m * t));
      acc += coef[m] * ph + coef[N - m] * std::conj(ph);
    }
    acc += coef[n] * std::cos(n * t);  // split Nyquist
    out[k] = acc;
  }
  return out;
}

template <class KernelFn>
std::vector<Eigen::Vector2cd> integrate_offsurface(
    const geom::BoundaryMesh& mesh, const VecXc& density,
    const std::vector<Vec2>& points, int upsample, KernelFn&& kfn) {
  int Nup = std::max(upsample, mesh.N);
  auto dens = upsample_density(density, mesh.N, Nup);
  std::vector<Vec2> y(Nup);
  std::vector<double> jac(Nup);
  for (int k = 0; k < Nup; ++k) {
    double t = 2.0 * kPi * k / Nup;
    y[k] = mesh.curve.position(t);
    jac[k] = mesh.curve.derivative(t).norm();
  }
  std::vector<Eigen::Vector2cd> out(points.size(), Eigen::Vector2cd::Zero());
  double w = 2.0 * kPi / Nup;
  par::parallel_for(int(points.size()), par::default_exec(), [&](int ip) {
    Eigen::Vector2cd acc = Eigen::Vector2cd::Zero();
    for (int k = 0; k < Nup; ++k) {
      Mat2c K = kfn(points[ip], y[k], ip);
      acc += K * dens[k] * (jac[k] * w);
    }
    out[ip] = acc;
  });
  return out;
}

Mat2c full_kernel_matrix(const KernelSpec& spec, const Vec2& d, cplx omega,
                         const LameParams& p, double eps) {
  switch (spec.kind) {
    case KernelSpec::Kind::Free:
      return kern::fundamental_matrix(d, omega, p);
    case KernelSpec::Kind::QPDynamic:
      return lattice::qp_full_matrix(d, spec.alpha, omega, p, eps);
    case KernelSpec::Kind::QPStatic:
      return lattice::qp_static_full_matrix(d, spec.alpha, p);
    default: {
      lattice::SeriesIndex idx(spec.series_l, p);
      return lattice::series_full_matrix(idx, d, spec.alpha, omega, p);
    }
  }
}

}  // namespace

std::vector<Eigen::Vector2cd> evaluate_single_layer_potential(
    const geom::BoundaryMesh& mesh, const KernelSpec& spec, cplx omega,
    const LameParams& p, const lattice::LatticeSumConfig& cfg,
    const VecXc& density, const std::vector<Vec2>& points, int upsample) {
  double eps = std::max(cfg.eps_res(p.kT(omega)), cfg.eps_res(p.kL(omega)));
  return integrate_offsurface(mesh, density, points, upsample,
                              [&](const Vec2& x, const Vec2& y, int) {
                                return full_kernel_matrix(spec, x - y, omega, p, eps);
                              });
}

std::vector<Eigen::Vector2cd> evaluate_single_layer_traction(
    const geom::BoundaryMesh& mesh, const KernelSpec& spec, cplx omega,
    const LameParams& p, const lattice::LatticeSumConfig& cfg,
    const VecXc& density, const std::vector<Vec2>& points,
    const std::vector<Vec2>& normals, int upsample) {
  double eps = std::max(cfg.eps_res(p.kT(omega)), cfg.eps_res(p.kL(omega)));
  auto kfn = [&](const Vec2& x, const Vec2& y, int ip) -> Mat2c {
    Vec2 d = x - y;
    const Vec2& n = normals[ip];
    switch (spec.kind) {
      case KernelSpec::Kind::Free: {
        double r = d.norm();
        Vec2 e = d / r;
        kern::KernelScalars s = (omega == cplx(0.0)) ? kern::static_scalars(p, r)
                                                     : kern::elastic_scalars(omega, p, r);
        return kern::traction_from_scalars(s.a, s.b, s.c, e, n, p);
      }
      case KernelSpec::Kind::QPDynamic: {
        double r = d.norm();
        Vec2 e = d / r;
        kern::KernelScalars s = kern::elastic_scalars(omega, p, r);
        return kern::traction_from_scalars(s.a, s.b, s.c, e, n, p) +
               lattice::qp_regular_traction_x(d, n, spec.alpha, omega, p, eps);
      }
      case KernelSpec::Kind::QPStatic: {
        double r = d.norm();
        Vec2 e = d / r;
        kern::KernelScalars s = kern::static_scalars(p, r);
        return kern::traction_from_scalars(s.a, s.b, s.c, e, n, p) +
               lattice::qp_static_regular_traction_x(d, n, spec.alpha, p);
      }
      default: {
        lattice::SeriesIndex idx(spec.series_l, p);
        return lattice::series_full_traction_x(idx, d, n, spec.alpha, omega, p);
      }
    }
  };
  return integrate_offsurface(mesh, density, points, upsample, kfn);
}

std::vector<Eigen::Matrix2cd> evaluate_single_layer_gradient(
    const geom::BoundaryMesh& mesh, const KernelSpec& spec, cplx omega,
    const LameParams& p, const lattice::LatticeSumConfig& cfg,
    const VecXc& density, const std::vector<Vec2>& points, int upsample) {
  // du_i/dx_k = int dK_{ij}/dx_k density_j ; evaluate via two traction-free
  // component integrals built from the kernel gradient.
  int Nup = std::max(upsample, mesh.N);
  auto dens = upsample_density(density, mesh.N, Nup);
  std::vector<Vec2> y(Nup);
  std::vector<double> jac(Nup);
  for (int k = 0; k < Nup; ++k) {
    double t = 2.0 * kPi * k / Nup;
    y[k] = mesh.curve.position(t);
    jac[k] = mesh.curve.derivative(t).norm();
  }
  std::vector<Eigen::Matrix2cd> out(points.size(), Eigen::Matrix2cd::Zero());
  double w = 2.0 * kPi / Nup;
  par::parallel_for(int(points.size()), par::default_exec(), [&](int ip) {
    Eigen::Matrix2cd acc = Eigen::Matrix2cd::Zero();  // acc(i,k) = du_i/dx_k
    for (int kq = 0; kq < Nup; ++kq) {
      Vec2 d = points[ip] - y[kq];
      Mat2c dG[2];
      if (spec.kind == KernelSpec::Kind::QPStatic) {
        lattice::qp_static_gradient(d, spec.alpha, p, dG);
      } else if (spec.kind == KernelSpec::Kind::Free && omega == cplx(0.0)) {
        double r = d.norm();
        Vec2 e = d / r;
        kern::KernelScalars s = kern::static_scalars(p, r);
        for (int kk = 0; kk < 2; ++kk)
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              dG[kk](i, j) = s.a * e[kk] * (i == j ? 1.0 : 0.0) +
                             s.b * e[kk] * e[i] * e[j] +
                             s.c * ((kk == i ? e[j] : cplx(0.0)) +
                                    (kk == j ? e[i] : cplx(0.0)) -
                                    2.0 * e[kk] * e[i] * e[j]);
      } else {
        throw std::domain_error("gradient evaluation: static kernels only");
      }
      for (int kk = 0; kk < 2; ++kk)
        acc.col(kk) += dG[kk] * dens[kq] * (jac[kq] * w);
    }
    out[ip] = acc;
  });
  return out;
}

}  // namespace phonon::ops
