// SPDX-License-Identifier: Apache-2.0
#include "phonon/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace phonon::spectra {

namespace {

roots::OperatorFamily stilde_family(const geom::BoundaryMesh& mesh,
                                    const LameParams& inclusion,
                                    const lattice::LatticeSumConfig& cfg,
                                    par::Exec exec) {
  roots::OperatorFamily fam;
  fam.tag = "S~";
  fam.dim = 2 * mesh.N;
  fam.eval = [&mesh, inclusion, cfg, exec](cplx w) {
    return ops::assemble_single_layer(mesh, ops::KernelSpec::free_space(), w,
                                      inclusion, cfg, exec)
        .matrix;
  };
  return fam;
}

std::vector<roots::CharacteristicValue> scan_family(
    const roots::OperatorFamily& fam, const roots::RootWindow& win) {
  return roots::scan_window(fam, win);
}

}  // namespace

std::vector<double> expand_multiplicities(
    const std::vector<roots::CharacteristicValue>& vals) {
  std::vector<double> out;
  for (const auto& v : vals)
    for (int m = 0; m < v.multiplicity; ++m) out.push_back(v.omega.real());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<roots::CharacteristicValue> dirichlet_eigenvalues(
    const geom::ParametricCurve& curve, const LameParams& inclusion,
    const SolveOptions& opt) {
  if (opt.window.lo <= 0.0)
    throw std::domain_error("dirichlet_eigenvalues: window must exclude 0");
  geom::BoundaryMesh mesh = geom::sample_mesh(curve, opt.N);
  auto fam = stilde_family(mesh, inclusion, opt.lattice, opt.exec);
  return scan_family(fam, opt.window);
}

std::vector<roots::CharacteristicValue> modified_eigenvalues(
    const geom::ParametricCurve& curve, const LameParams& matrix_p,
    const LameParams& inclusion, double rho, const SolveOptions& opt) {
  if (opt.window.lo <= 0.0)
    throw std::domain_error("modified_eigenvalues: window must exclude 0");
  geom::BoundaryMesh mesh = geom::sample_mesh(curve, opt.N);
  roots::OperatorFamily fam;
  fam.tag = "A0(0,w)";
  fam.dim = 4 * mesh.N;
  fam.eval = [&mesh, matrix_p, inclusion, rho, &opt](cplx w) {
    return ops::assemble_A0_periodic(w, matrix_p, inclusion, rho, mesh,
                                     opt.lattice, opt.exec)
        .matrix;
  };
  return scan_family(fam, opt.window);
}

std::vector<roots::CharacteristicValue> transition_eigenvalues(
    const geom::ParametricCurve& curve, const LameParams& matrix_p,
    const LameParams& inclusion, double tau, const Vec2& dir, double rho,
    const SolveOptions& opt) {
  geom::BoundaryMesh mesh = geom::sample_mesh(curve, opt.N);
  roots::OperatorFamily fam;
  fam.tag = "A_tau";
  fam.dim = 4 * mesh.N;
  fam.eval = [&mesh, matrix_p, inclusion, rho, tau, dir, &opt](cplx w) {
    return ops::assemble_A_tau(tau, dir, w, matrix_p, inclusion, rho, mesh,
                               opt.lattice, opt.exec)
        .matrix;
  };
  // clip the window around the poles sqrt(tau/rho), sqrt(2 tau/rho)
  double guard = 1e-4 * (1.0 + std::sqrt(std::max(tau, 0.0)));
  std::vector<std::pair<double, double>> segments;
  std::vector<double> cuts;
  for (double p : {std::sqrt(tau / rho), std::sqrt(2.0 * tau / rho)})
    if (p > opt.window.lo && p < opt.window.hi) cuts.push_back(p);
  std::sort(cuts.begin(), cuts.end());
  double lo = opt.window.lo;
  for (double c : cuts) {
    if (c - guard > lo) segments.emplace_back(lo, c - guard);
    lo = c + guard;
  }
  if (lo < opt.window.hi) segments.emplace_back(lo, opt.window.hi);

  std::vector<roots::CharacteristicValue> out;
  for (auto [a, b] : segments) {
    roots::RootWindow win = opt.window;
    win.lo = a;
    win.hi = b;
    auto part = scan_family(fam, win);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.omega.real() < y.omega.real();
  });
  return out;
}

std::vector<roots::CharacteristicValue> bloch_eigenvalues(
    const geom::ParametricCurve& curve, const LameParams& matrix_p,
    const LameParams& inclusion, double rho, const Vec2& alpha,
    const SolveOptions& opt) {
  geom::BoundaryMesh mesh = geom::sample_mesh(curve, opt.N);
  roots::OperatorFamily fam;
  fam.tag = "A(alpha,w)";
  fam.dim = 4 * mesh.N;
  fam.eval = [&mesh, matrix_p, inclusion, rho, alpha, &opt](cplx w) {
    return ops::assemble_A(alpha, w, matrix_p, inclusion, rho, mesh,
                           opt.lattice, opt.exec)
        .matrix;
  };
  return scan_family(fam, opt.window);
}

std::vector<std::pair<double, Vec2>> BrillouinPath::points() const {
  // Gamma = (0,0), X = (pi, 0), M = (pi, pi)
  std::vector<std::pair<double, Vec2>> pts;
  const Vec2 G(0, 0), X(kPi, 0), M(kPi, kPi);
  auto leg = [&](Vec2 a, Vec2 b, double t0, bool include_start) {
    for (int i = include_start ? 0 : 1; i <= samples_per_leg; ++i) {
      double s = double(i) / samples_per_leg;
      pts.emplace_back(t0 + s, a + s * (b - a));
    }
  };
  leg(G, X, 0.0, true);
  leg(X, M, 1.0, false);
  leg(M, G, 2.0, false);
  return pts;
}

BandDiagram band_sweep(const geom::ParametricCurve& curve,
                       const LameParams& matrix_p, const LameParams& inclusion,
                       double rho, const BrillouinPath& path, int J,
                       const SolveOptions& opt) {
  BandDiagram diagram;
  diagram.mu = matrix_p.mu;
  diagram.rho = rho;
  diagram.N = opt.N;
  diagram.J = J;
  auto pts = path.points();
  diagram.samples.resize(pts.size());
  double near_gamma = 3.0 / std::sqrt(matrix_p.mu);

  for (std::size_t ip = 0; ip < pts.size(); ++ip) {
    auto [coord, alpha] = pts[ip];
    BandSample sample;
    sample.path_coord = coord;
    sample.alpha = alpha;
    try {
      std::vector<roots::CharacteristicValue> vals;
      if (alpha.norm() < 1e-12) {
        SolveOptions o = opt;
        vals = modified_eigenvalues(curve, matrix_p, inclusion, rho, o);
        sample.note = "periodic family";
      } else if (alpha.norm() <= near_gamma) {
        double tau = alpha.squaredNorm() * matrix_p.mu;
        vals = transition_eigenvalues(curve, matrix_p, inclusion, tau,
                                      alpha.normalized(), rho, opt);
        sample.note = "transition family";
      } else {
        vals = bloch_eigenvalues(curve, matrix_p, inclusion, rho, alpha, opt);
      }
      auto expanded = expand_multiplicities(vals);
      if (int(expanded.size()) < J) sample.complete = false;
      expanded.resize(std::min<std::size_t>(expanded.size(), J));
      sample.omegas = expanded;
    } catch (const std::exception& e) {
      sample.complete = false;
      sample.note = e.what();
    }
    diagram.samples[ip] = sample;
  }
  return diagram;
}

std::vector<Interval> limiting_bands(const std::vector<double>& omega,
                                     const std::vector<double>& omega_tilde) {
  std::vector<Interval> raw;
  if (omega.size() >= 2) raw.push_back({0.0, omega[1]});
  else if (!omega.empty()) raw.push_back({0.0, omega[0]});
  for (std::size_t j = 0; j < omega_tilde.size(); ++j) {
    if (j + 2 < omega.size()) {
      if (omega[j + 2] < omega_tilde[j] - 1e-6)
        throw std::domain_error("limiting_bands: interlacing violated (w_{j+2} < w~_j)");
      raw.push_back({std::min(omega_tilde[j], omega[j + 2]), omega[j + 2]});
    }
  }
  std::sort(raw.begin(), raw.end(), [](auto a, auto b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const auto& iv : raw) {
    if (!merged.empty() && iv.lo <= merged.back().hi + 1e-12)
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    else
      merged.push_back(iv);
  }
  return merged;
}

GapReport gap_report(const std::vector<double>& omega,
                     const std::vector<double>& omega_tilde, double rho) {
  GapReport rep;
  rep.rho = rho;
  rep.bands = limiting_bands(omega, omega_tilde);
  for (std::size_t j = 1; j <= omega_tilde.size(); ++j) {
    if (j + 1 > omega.size()) break;  // need w_{j+1}
    GapEntry e;
    e.j = int(j);
    double wj1 = omega[j];              // w_{j+1}, 1-based
    double wtj = omega_tilde[j - 1];     // w~_j
    e.opens = wj1 < wtj;
    if (e.opens) {
      e.lo = wj1;
      e.hi = wtj;
      e.width = wtj - wj1;
    }
    rep.gaps.push_back(e);
  }
  return rep;
}

std::vector<InterlacingEntry> interlacing_check(
    const std::vector<double>& omega, const std::vector<double>& omega_tilde,
    double tol) {
  std::vector<InterlacingEntry> out;
  for (std::size_t j = 1; j <= omega_tilde.size(); ++j) {
    if (j + 1 >= omega.size()) break;  // need w_{j+2}
    InterlacingEntry e;
    e.j = int(j);
    e.slack_lower = omega_tilde[j - 1] - omega[j - 1];
    e.slack_upper = omega[j + 1] - omega_tilde[j - 1];
    e.ok = e.slack_lower >= -tol && e.slack_upper >= -tol;
    out.push_back(e);
  }
  return out;
}

}  // namespace phonon::spectra
