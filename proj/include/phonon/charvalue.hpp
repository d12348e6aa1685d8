// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "phonon/types.hpp"

namespace phonon::roots {

/// omega -> matrix evaluator; deterministic, fixed dimension.
struct OperatorFamily {
  std::function<MatXc(cplx)> eval;
  std::string tag;
  int dim = 0;
};

enum class Indicator { SigmaMinRel, LogAbsDet };

/// Default scalar indicator: sigma_min/sigma_max (or log|det|).
double scalar_indicator(const OperatorFamily& family, cplx omega,
                        Indicator kind = Indicator::SigmaMinRel);

struct MullerReport {
  bool converged = false;
  int iterations = 0;
  cplx best;
  double best_abs = 0.0;
};

/// Muller's method for a complex root of scalar f from three initial guesses.
cplx muller_find(const std::function<cplx(cplx)>& f, cplx g0, cplx g1, cplx g2,
                 double tol, int max_iter = 50, MullerReport* report = nullptr);

struct ContourOptions {
  int quadrature_points = 32;
  double fd_step_rel = 1e-6;       // d/domega step = rel * radius
  double reject_sigma = 1e-10;     // contour rejected when sigma_min_rel below
};

struct ContourCount {
  double count = 0.0;              // real part of the trace integral
  double imag_defect = 0.0;        // |imaginary part| (diagnostic)
  bool rejected = false;
};

/// Gohberg-Sigal count with f == 1:
///   (1/2 pi i) tr oint A(w)^{-1} A'(w) dw   over |w - center| = radius.
ContourCount count_in_contour(const OperatorFamily& family, cplx center,
                              double radius, const ContourOptions& opt = {});

struct CharacteristicValue {
  cplx omega;
  int multiplicity = 1;
  double sigma_min = 0.0;             // relative indicator at the root
  double contour_count_residual = 0.0;
};

struct RootWindow {
  double lo = 0.0, hi = 1.0;
  double step = 0.01;
  double contour_radius = 0.02;
  double accept_sigma = 1e-6;      // root accepted when indicator below this
  double dip_threshold = 1e-3;     // grid minima above this are not refined
  double imag_tol_scale = 1e-6;    // physical roots: |Im w| <= scale*(1+|w|)
  int max_iter = 50;

  RootWindow() = default;
  RootWindow(double lo_, double hi_, double step_ = 0.01)
      : lo(lo_), hi(hi_), step(step_) {
    if (lo < 0 || step <= 0) throw std::domain_error("RootWindow: lo >= 0, step > 0");
  }
};

/// Refine one root near `guess` with Muller on an analytic resolvent
/// scalarization 1/(u^H A(w)^{-1} v); acceptance is measured on the
/// sigma_min indicator.
std::optional<CharacteristicValue> refine_root(const OperatorFamily& family,
                                               cplx guess, const RootWindow& win);

/// Grid scan + bracket + Muller refinement + contour multiplicities,
/// deduplicated within 1e-7 and sorted by Re omega.
std::vector<CharacteristicValue> scan_window(const OperatorFamily& family,
                                             const RootWindow& win);

}  // namespace phonon::roots
