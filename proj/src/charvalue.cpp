// SPDX-License-Identifier: Apache-2.0
#include "phonon/charvalue.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>

#include "phonon/linalg.hpp"
#include "phonon/parallel.hpp"

namespace phonon::roots {

double scalar_indicator(const OperatorFamily& family, cplx omega, Indicator kind) {
  MatXc A = family.eval(omega);
  return kind == Indicator::SigmaMinRel ? linalg::sigma_min_rel(A)
                                        : linalg::log_abs_det(A);
}

cplx muller_find(const std::function<cplx(cplx)>& f, cplx g0, cplx g1, cplx g2,
                 double tol, int max_iter, MullerReport* report) {
  if (g0 == g1 || g1 == g2 || g0 == g2)
    throw std::domain_error("muller_find: initial guesses must be distinct");
  cplx x0 = g0, x1 = g1, x2 = g2;
  cplx f0 = f(x0), f1 = f(x1), f2 = f(x2);
  MullerReport rep;
  rep.best = x2;
  rep.best_abs = std::abs(f2);
  for (int it = 0; it < max_iter; ++it) {
    cplx q = (x2 - x1) / (x1 - x0);
    cplx a = q * f2 - q * (1.0 + q) * f1 + q * q * f0;
    cplx b = (2.0 * q + 1.0) * f2 - (1.0 + q) * (1.0 + q) * f1 + q * q * f0;
    cplx c = (1.0 + q) * f2;
    cplx disc = std::sqrt(b * b - 4.0 * a * c);
    cplx den1 = b + disc, den2 = b - disc;
    cplx den = (std::abs(den1) >= std::abs(den2)) ? den1 : den2;
    if (den == cplx(0.0)) break;
    cplx x3 = x2 - (x2 - x1) * (2.0 * c / den);
    cplx f3 = f(x3);
    x0 = x1; f0 = f1;
    x1 = x2; f1 = f2;
    x2 = x3; f2 = f3;
    rep.iterations = it + 1;
    if (std::abs(f3) < rep.best_abs) {
      rep.best = x3;
      rep.best_abs = std::abs(f3);
    }
    if (std::abs(f3) < tol || std::abs(x2 - x1) < tol * (1.0 + std::abs(x2))) {
      rep.converged = true;
      break;
    }
  }
  if (report) *report = rep;
  return rep.best;
}

ContourCount count_in_contour(const OperatorFamily& family, cplx center,
                              double radius, const ContourOptions& opt) {
  const int Q = opt.quadrature_points;
  double h = opt.fd_step_rel * radius;
  cplx acc = 0.0;
  bool rejected = false;
  std::vector<cplx> partial(Q, 0.0);
  std::vector<char> bad(Q, 0);
  par::parallel_for(Q, par::default_exec(), [&](int q) {
    double th = 2.0 * kPi * q / Q;
    cplx w = center + radius * std::exp(kI * th);
    MatXc A = family.eval(w);
    if (linalg::sigma_min_rel(A) < opt.reject_sigma) {
      bad[q] = 1;
      return;
    }
    MatXc Ap = (family.eval(w + h) - family.eval(w - h)) / (2.0 * h);
    Eigen::PartialPivLU<MatXc> lu(A);
    MatXc X = lu.solve(Ap);
    partial[q] = X.trace() * radius * std::exp(kI * th) / double(Q);
  });
  for (int q = 0; q < Q; ++q) {
    if (bad[q]) rejected = true;
    acc += partial[q];
  }
  ContourCount out;
  out.rejected = rejected;
  out.count = acc.real();
  out.imag_defect = std::abs(acc.imag());
  return out;
}

namespace {

// analytic scalarization 1/(u^H A^{-1} v): zeros coincide with characteristic
// values; Muller converges quadratically on it (sigma_min is |.|-shaped and
// unsuitable for complex quadratic interpolation).
std::function<cplx(cplx)> resolvent_scalar(const OperatorFamily& family) {
  return [&family](cplx w) -> cplx {
    MatXc A = family.eval(w);
    int n = int(A.rows());
    VecXc u(n), v(n);
    // fixed deterministic probe vectors
    for (int i = 0; i < n; ++i) {
      double a = std::sin(0.7 * (i + 1)) + 0.3 * std::cos(2.1 * i);
      double b = std::cos(1.3 * (i + 2)) - 0.2 * std::sin(0.9 * i);
      u(i) = cplx(a, 0.1 * b);
      v(i) = cplx(b, -0.2 * a);
    }
    Eigen::PartialPivLU<MatXc> lu(A);
    cplx r = (u.adjoint() * lu.solve(v))(0);  // u^H A^{-1} v
    return 1.0 / r;
  };
}

}  // namespace

std::optional<CharacteristicValue> refine_root(const OperatorFamily& family,
                                               cplx guess, const RootWindow& win) {
  auto f = resolvent_scalar(family);
  double h = std::max(win.step * 0.25, 1e-6);
  MullerReport rep;
  cplx root = muller_find(f, guess - h, guess + h, guess + cplx(0.0, 0.5 * h),
                          1e-13, win.max_iter, &rep);
  double ind = scalar_indicator(family, root);
  if (!(ind <= win.accept_sigma)) return std::nullopt;
  if (std::abs(root.imag()) > win.imag_tol_scale * (1.0 + std::abs(root)))
    return std::nullopt;
  CharacteristicValue cv;
  cv.omega = root;
  cv.sigma_min = ind;
  return cv;
}

std::vector<CharacteristicValue> scan_window(const OperatorFamily& family,
                                             const RootWindow& win) {
  // grid scan of the indicator
  int n = std::max(2, int(std::ceil((win.hi - win.lo) / win.step)) + 1);
  std::vector<double> vals(n);
  par::parallel_for(n, par::default_exec(), [&](int i) {
    double w = win.lo + (win.hi - win.lo) * i / (n - 1);
    vals[i] = scalar_indicator(family, cplx(w, 0.0));
  });

  std::vector<CharacteristicValue> roots;
  for (int i = 1; i + 1 < n; ++i) {
    if (vals[i] < vals[i - 1] && vals[i] <= vals[i + 1] && vals[i] < win.dip_threshold) {
      double w = win.lo + (win.hi - win.lo) * i / (n - 1);
      auto cv = refine_root(family, cplx(w, 0.0), win);
      if (!cv) continue;
      if (cv->omega.real() < win.lo - win.step || cv->omega.real() > win.hi + win.step)
        continue;
      roots.push_back(*cv);
    }
  }

  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.omega.real() < b.omega.real();
  });
  // dedupe within 1e-7
  std::vector<CharacteristicValue> uniq;
  for (const auto& r : roots) {
    if (!uniq.empty() && std::abs(r.omega - uniq.back().omega) < 1e-7) {
      if (r.sigma_min < uniq.back().sigma_min) uniq.back() = r;
      continue;
    }
    uniq.push_back(r);
  }

  // multiplicities by contour counting, radius shrunk on near-collisions
  for (std::size_t idx = 0; idx < uniq.size(); ++idx) {
    double radius = win.contour_radius;
    double gap = 1e30;
    if (idx > 0) gap = std::min(gap, std::abs(uniq[idx].omega - uniq[idx - 1].omega));
    if (idx + 1 < uniq.size())
      gap = std::min(gap, std::abs(uniq[idx + 1].omega - uniq[idx].omega));
    if (gap < 2.0 * radius) radius = 0.4 * gap;
    if (radius < 1e-8) {
      uniq[idx].multiplicity = 1;
      uniq[idx].contour_count_residual = 1.0;  // flagged: contour too small
      continue;
    }
    ContourCount cc = count_in_contour(family, uniq[idx].omega, radius);
    if (cc.rejected) {
      uniq[idx].multiplicity = 1;
      uniq[idx].contour_count_residual = 1.0;
      continue;
    }
    int m = int(std::lround(cc.count));
    uniq[idx].multiplicity = std::max(1, m);
    uniq[idx].contour_count_residual = std::abs(cc.count - std::lround(cc.count));
  }
  return uniq;
}

}  // namespace phonon::roots
