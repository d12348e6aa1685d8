// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <stdexcept>
#include <Eigen/Dense>

namespace phonon {

using cplx = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using Mat2c = Eigen::Matrix2cd;
using Mat2d = Eigen::Matrix2d;
using MatXc = Eigen::MatrixXcd;
using VecXc = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr cplx kI{0.0, 1.0};

/// Isotropic Lame material. Density defaults to 1 (normalized).
struct LameParams {
  double lambda = 1.0;
  double mu = 1.0;
  double rho = 1.0;

  LameParams() = default;
  LameParams(double lambda_, double mu_, double rho_ = 1.0)
      : lambda(lambda_), mu(mu_), rho(rho_) {
    validate();
  }

  void validate() const {
    if (!(mu > 0.0) || !(3.0 * lambda + 2.0 * mu > 0.0))
      throw std::domain_error("LameParams: need mu>0 and 3*lambda+2*mu>0");
    // additionally require lambda+2*mu>0 so the longitudinal speed is real
    if (!(lambda + 2.0 * mu > 0.0))
      throw std::domain_error("LameParams: need lambda+2*mu>0");
    if (!(rho > 0.0)) throw std::domain_error("LameParams: need rho>0");
  }

  double cT() const { return std::sqrt(mu); }
  double cL() const { return std::sqrt(lambda + 2.0 * mu); }
  cplx kT(cplx omega) const { return omega / cT(); }
  cplx kL(cplx omega) const { return omega / cL(); }

  // Kelvin constants gamma1 > gamma2 for lambda > -mu
  double gamma1() const { return 0.5 * (1.0 / mu + 1.0 / (2.0 * mu + lambda)); }
  double gamma2() const { return 0.5 * (1.0 / mu - 1.0 / (2.0 * mu + lambda)); }
};

struct KelvinConstants {
  double gamma1, gamma2;
  explicit KelvinConstants(const LameParams& p)
      : gamma1(p.gamma1()), gamma2(p.gamma2()) {}
};

/// Thrown when a lattice sum hits a resonant denominator k^2 = |2 pi n + alpha|^2.
class ResonanceError : public std::runtime_error {
 public:
  ResonanceError(int n1, int n2, double defect)
      : std::runtime_error("lattice sum resonance at n=(" + std::to_string(n1) +
                           "," + std::to_string(n2) +
                           "), |k^2-|q|^2|=" + std::to_string(defect)),
        n1_(n1), n2_(n2), defect_(defect) {}
  int n1() const { return n1_; }
  int n2() const { return n2_; }
  double defect() const { return defect_; }

 private:
  int n1_, n2_;
  double defect_;
};

}  // namespace phonon
