// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "phonon/charvalue.hpp"
#include "phonon/layer_ops.hpp"

namespace phonon::asym {

struct EigenpairOptions {
  int N = 96;             // boundary nodes
  int n_radial = 24;      // Gauss points in the radial direction
  int n_angular = 128;    // trapezoid points in angle
  int upsample = 2048;    // boundary upsampling for interior potentials
  lattice::LatticeSumConfig lattice{};
  double accept_sigma = 1e-6;
  double contour_radius = 0.02;
};

/// Simple Dirichlet mode of the inclusion: refined omega0, traction density
/// phi (characteristic function of S~^w), and int_D |u0|^2 with
/// u0 = -S~^{w0} phi.
struct DirichletEigenpair {
  double omega0 = 0.0;
  VecXc phi;                 // 2N nodal values, unit discrete norm
  double u0_norm_sq = 0.0;
  double sigma_min = 0.0;
  geom::BoundaryMesh mesh;
  LameParams inclusion;
};

DirichletEigenpair dirichlet_eigenpair(const geom::ParametricCurve& curve,
                                       const LameParams& inclusion,
                                       double omega0_guess,
                                       const EigenpairOptions& opt = {});

/// Cell corrector v0 = mu S^{a,0} (I/2 + (K^{a,0})*)^{-1} phi, stored as
/// w0 = v0/mu (the mu factor is carried analytically downstream).
struct Corrector {
  VecXc psi;   // solved density
  VecXc w0;    // v0/mu at the nodes
  Vec2 alpha;
};

Corrector cell_corrector(const DirichletEigenpair& pair, const Vec2& alpha,
                         const LameParams& matrix_p,
                         const lattice::LatticeSumConfig& cfg);

struct LeadingOrderResult {
  double coefficient = 0.0;       // c1 in w_mu - w0 = c1/mu + O(mu^-2); <= 0
  double corrector_energy = 0.0;  // int (lam/mu)|div v0|^2 + (1/2)|sym grad v0|^2
  double imag_defect = 0.0;
  Vec2 alpha;
};

/// Energy reduced to the boundary: E = -int_dD (dv0/dnu|+) . conj(v0) dsigma.
LeadingOrderResult leading_coefficient(const DirichletEigenpair& pair,
                                       const Corrector& corr,
                                       const LameParams& matrix_p);

/// Operator families for the trace-integral expansion terms.
struct ExpansionFamilies {
  std::function<MatXc(cplx)> A0;        // limit operator family
  std::function<MatXc(int, cplx)> Al;   // series operators A_l
  int dim = 0;
};

struct Contour {
  cplx center;
  double radius = 0.05;
  int Q = 24;
};

/// n-th order term of the characteristic-value expansion,
///   (1/2 pi i) sum_{p<=n} (1/p) sum_{n1+...+np=n} (-1)^p
///        tr oint A0^{-1} A_{n1} ... A0^{-1} A_{np} dw,    n <= 3.
cplx expansion_term(const ExpansionFamilies& fam, const Contour& contour, int n);

/// First-order transition term  -(1/2 pi i) tr oint (A_tau)^{-1} A_1^{0,w} dw.
cplx transition_expansion(const ExpansionFamilies& fam, const Contour& contour);

/// Gauss-Legendre nodes/weights on [0, 1].
void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace phonon::asym
