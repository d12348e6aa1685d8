// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "phonon/charvalue.hpp"
#include "phonon/layer_ops.hpp"

namespace phonon::spectra {

/// Discretization and search knobs shared by the eigenvalue pipelines.
struct SolveOptions {
  int N = 64;                         // boundary nodes
  lattice::LatticeSumConfig lattice{};
  roots::RootWindow window{0.5, 20.0, 0.05};
  par::Exec exec = par::default_exec();
};

/// Dirichlet spectrum of -L^{tilde} in D: characteristic values of S~^w.
std::vector<roots::CharacteristicValue> dirichlet_eigenvalues(
    const geom::ParametricCurve& curve, const LameParams& inclusion,
    const SolveOptions& opt);

/// Modified spectrum: u + (1/(rho |Y\D|)) int_D u = 0, via A0^{0,w}.
std::vector<roots::CharacteristicValue> modified_eigenvalues(
    const geom::ParametricCurve& curve, const LameParams& matrix_p,
    const LameParams& inclusion, double rho, const SolveOptions& opt);

/// Transition spectrum at tau = lim |alpha|^2 mu along direction dir.
/// Windows are clipped around the poles sqrt(tau/rho), sqrt(2 tau/rho).
std::vector<roots::CharacteristicValue> transition_eigenvalues(
    const geom::ParametricCurve& curve, const LameParams& matrix_p,
    const LameParams& inclusion, double tau, const Vec2& dir, double rho,
    const SolveOptions& opt);

/// Finite-mu Bloch frequencies at quasimomentum alpha (alpha = 0 allowed).
std::vector<roots::CharacteristicValue> bloch_eigenvalues(
    const geom::ParametricCurve& curve, const LameParams& matrix_p,
    const LameParams& inclusion, double rho, const Vec2& alpha,
    const SolveOptions& opt);

struct BandSample {
  double path_coord = 0.0;
  Vec2 alpha;
  std::vector<double> omegas;  // first J bands, ascending, multiplicity expanded
  bool complete = true;
  std::string note;
};

struct BandDiagram {
  std::vector<BandSample> samples;
  double mu = 0.0, rho = 1.0;
  int N = 0, J = 0;
};

struct BrillouinPath {
  // Gamma -> X -> M -> Gamma with the given number of samples per leg
  int samples_per_leg = 8;
  std::vector<std::pair<double, Vec2>> points() const;
};

/// First J bands along the path; alpha = 0 and |alpha| <= 3/sqrt(mu) samples
/// go through the periodic / transition families.
BandDiagram band_sweep(const geom::ParametricCurve& curve,
                       const LameParams& matrix_p, const LameParams& inclusion,
                       double rho, const BrillouinPath& path, int J,
                       const SolveOptions& opt);

struct Interval {
  double lo, hi;
};

/// Limiting band union [0, w_1] u [0, w_2] u U_j [w~_j, w_{j+2}], merged.
/// Lists carry multiplicity-expanded sorted values.
std::vector<Interval> limiting_bands(const std::vector<double>& omega,
                                     const std::vector<double>& omega_tilde);

struct GapEntry {
  int j = 0;              // criterion index (1-based)
  bool opens = false;     // w_{j+1} < w~_j
  double lo = 0, hi = 0;  // gap interval when it opens
  double width = 0;
};

struct GapReport {
  std::vector<Interval> bands;
  std::vector<GapEntry> gaps;
  double rho = 1.0;
};

GapReport gap_report(const std::vector<double>& omega,
                     const std::vector<double>& omega_tilde, double rho);

struct InterlacingEntry {
  int j = 0;
  bool ok = false;
  double slack_lower = 0;  // w~_j - w_j      (>= -tol)
  double slack_upper = 0;  // w_{j+2} - w~_j  (>= -tol)
};

/// Checks w_j <= w~_j <= w_{j+2} with tolerance for equality cases.
std::vector<InterlacingEntry> interlacing_check(
    const std::vector<double>& omega, const std::vector<double>& omega_tilde,
    double tol = 1e-6);

/// Multiplicity-expanded sorted list of real parts.
std::vector<double> expand_multiplicities(
    const std::vector<roots::CharacteristicValue>& vals);

}  // namespace phonon::spectra
