// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "phonon/boundary_geometry.hpp"
#include "phonon/lattice_green.hpp"
#include "phonon/parallel.hpp"
#include "phonon/types.hpp"

namespace phonon::ops {

/// Which kernel a boundary operator is built from.
/// PeriodicStatic is QPStatic with alpha = 0.
struct KernelSpec {
  enum class Kind { Free, QPDynamic, QPStatic, Series };
  Kind kind = Kind::Free;
  Vec2 alpha = Vec2::Zero();
  int series_l = 1;

  static KernelSpec free_space() { return {Kind::Free, Vec2::Zero(), 1}; }
  static KernelSpec quasi_periodic(const Vec2& a) { return {Kind::QPDynamic, a, 1}; }
  static KernelSpec quasi_periodic_static(const Vec2& a) { return {Kind::QPStatic, a, 1}; }
  static KernelSpec periodic_static() { return {Kind::QPStatic, Vec2::Zero(), 1}; }
  static KernelSpec series(int l, const Vec2& a) { return {Kind::Series, a, l}; }
};

/// Dense Nystrom matrix acting on interleaved nodal densities
/// (f1(t0), f2(t0), f1(t1), ...).
struct DiscretizedOperator {
  MatXc matrix;
  std::string kind;
  cplx omega{};
  Vec2 alpha = Vec2::Zero();
  int mesh_N = 0;
};

/// 4N x 4N block matrix [[A11, A12], [A21, A22]].
struct BlockOperator {
  MatXc matrix;
  std::string family;
  cplx omega{};
  Vec2 alpha = Vec2::Zero();
  int mesh_N = 0;

  Eigen::Block<MatXc> block(int bi, int bj) {
    int n = int(matrix.rows()) / 2;
    return matrix.block(bi * n, bj * n, n, n);
  }
};

/// Martensen-Kussmaul weights R_m for int ln(4 sin^2((t-s)/2)) f(s) ds.
std::vector<double> kress_weights(int N);
/// Weights for p.v. int cot((s-t)/2) f(s) ds, exact for degree < N/2.
std::vector<double> hilbert_weights(int N);

DiscretizedOperator assemble_single_layer(
    const geom::BoundaryMesh& mesh, const KernelSpec& spec, cplx omega,
    const LameParams& p, const lattice::LatticeSumConfig& cfg,
    par::Exec exec = par::default_exec());

DiscretizedOperator assemble_kstar(
    const geom::BoundaryMesh& mesh, const KernelSpec& spec, cplx omega,
    const LameParams& p, const lattice::LatticeSumConfig& cfg,
    par::Exec exec = par::default_exec());

/// W^{-1} M^T W with W the L^2(dD) quadrature weights; realizes the
/// kernel-transpose relation between K* and K families.
MatXc discrete_adjoint(const geom::BoundaryMesh& mesh, const MatXc& M);

/// A^{alpha,omega} of the transmission system; density rho scales the matrix
/// phase to effective frequency sqrt(rho) omega.
BlockOperator assemble_A(const Vec2& alpha, cplx omega, const LameParams& matrix_p,
                         const LameParams& inclusion_p, double rho,
                         const geom::BoundaryMesh& mesh,
                         const lattice::LatticeSumConfig& cfg,
                         par::Exec exec = par::default_exec());

/// Limiting operator for alpha != 0: [[S~, 0], [I/2 - K~*, I/2 + (K^{a,0})*]].
BlockOperator assemble_A0(const Vec2& alpha, cplx omega,
                          const LameParams& matrix_p, const LameParams& inclusion_p,
                          const geom::BoundaryMesh& mesh,
                          const lattice::LatticeSumConfig& cfg,
                          par::Exec exec = par::default_exec());

/// Limiting operator for alpha = 0 with the rank-2 mean block
/// -(1/(rho w^2)) int_dD . dsigma.
BlockOperator assemble_A0_periodic(cplx omega, const LameParams& matrix_p,
                                   const LameParams& inclusion_p, double rho,
                                   const geom::BoundaryMesh& mesh,
                                   const lattice::LatticeSumConfig& cfg,
                                   par::Exec exec = par::default_exec());

/// mu-series block operators: rho^{l-1} [[0, -S_l], [0, (rho/mu) K_{l+1}*]].
BlockOperator assemble_Al(int l, const Vec2& alpha, cplx omega,
                          const LameParams& matrix_p, double rho,
                          const geom::BoundaryMesh& mesh,
                          const lattice::LatticeSumConfig& cfg,
                          par::Exec exec = par::default_exec());

/// Transition-regime operator A^w_tau; tau_mat = tau * dir dir^T.
/// Poles at rho w^2 = tau and rho w^2 = 2 tau are guarded.
BlockOperator assemble_A_tau(double tau, const Vec2& dir, cplx omega,
                             const LameParams& matrix_p, const LameParams& inclusion_p,
                             double rho, const geom::BoundaryMesh& mesh,
                             const lattice::LatticeSumConfig& cfg,
                             par::Exec exec = par::default_exec(),
                             double pole_guard = 1e-9);

// ---- potential evaluation away from the boundary ---------------------------

/// S[density](x) at arbitrary points, trigonometric upsampling of the density
/// to `upsample` nodes (needed close to the boundary).
std::vector<Eigen::Vector2cd> evaluate_single_layer_potential(
    const geom::BoundaryMesh& mesh, const KernelSpec& spec, cplx omega,
    const LameParams& p, const lattice::LatticeSumConfig& cfg,
    const VecXc& density, const std::vector<Vec2>& points, int upsample = 1024);

/// Traction of the single layer at off-surface points (normal given per point).
std::vector<Eigen::Vector2cd> evaluate_single_layer_traction(
    const geom::BoundaryMesh& mesh, const KernelSpec& spec, cplx omega,
    const LameParams& p, const lattice::LatticeSumConfig& cfg,
    const VecXc& density, const std::vector<Vec2>& points,
    const std::vector<Vec2>& normals, int upsample = 1024);

/// Full gradient d u_i/d x_k of the single-layer field at off-surface points.
std::vector<Eigen::Matrix2cd> evaluate_single_layer_gradient(
    const geom::BoundaryMesh& mesh, const KernelSpec& spec, cplx omega,
    const LameParams& p, const lattice::LatticeSumConfig& cfg,
    const VecXc& density, const std::vector<Vec2>& points, int upsample = 1024);

}  // namespace phonon::ops
