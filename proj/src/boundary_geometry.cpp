// SPDX-License-Identifier: Apache-2.0
#include "phonon/boundary_geometry.hpp"

#include <cmath>

namespace phonon::geom {

namespace {

struct StarEval {
  double r, rp, rpp;  // r(t), r'(t), r''(t)
};

StarEval star_radius(const FourierStar& s, double t) {
  StarEval e{s.base, 0.0, 0.0};
  double sum = 1.0, dsum = 0.0, ddsum = 0.0;
  for (std::size_t i = 0; i < s.cos_coef.size(); ++i) {
    double k = double(i + 1);
    sum += s.cos_coef[i] * std::cos(k * t);
    dsum += -s.cos_coef[i] * k * std::sin(k * t);
    ddsum += -s.cos_coef[i] * k * k * std::cos(k * t);
  }
  for (std::size_t i = 0; i < s.sin_coef.size(); ++i) {
    double k = double(i + 1);
    sum += s.sin_coef[i] * std::sin(k * t);
    dsum += s.sin_coef[i] * k * std::cos(k * t);
    ddsum += -s.sin_coef[i] * k * k * std::sin(k * t);
  }
  e.r = s.base * sum;
  e.rp = s.base * dsum;
  e.rpp = s.base * ddsum;
  return e;
}

}  // namespace

ParametricCurve::ParametricCurve(Shape shape, double clearance)
    : shape_(std::move(shape)), clearance_(clearance) {}

Vec2 ParametricCurve::position(double t) const {
  return std::visit(
      [&](const auto& s) -> Vec2 {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Circle>) {
          return s.center + s.radius * Vec2(std::cos(t), std::sin(t));
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          Vec2 q(s.a * std::cos(t), s.b * std::sin(t));
          double c = std::cos(s.tilt), sn = std::sin(s.tilt);
          return s.center + Vec2(c * q.x() - sn * q.y(), sn * q.x() + c * q.y());
        } else {
          StarEval e = star_radius(s, t);
          return s.center + e.r * Vec2(std::cos(t), std::sin(t));
        }
      },
      shape_);
}

Vec2 ParametricCurve::derivative(double t) const {
  return std::visit(
      [&](const auto& s) -> Vec2 {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Circle>) {
          return s.radius * Vec2(-std::sin(t), std::cos(t));
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          Vec2 q(-s.a * std::sin(t), s.b * std::cos(t));
          double c = std::cos(s.tilt), sn = std::sin(s.tilt);
          return Vec2(c * q.x() - sn * q.y(), sn * q.x() + c * q.y());
        } else {
          StarEval e = star_radius(s, t);
          Vec2 er(std::cos(t), std::sin(t)), et(-std::sin(t), std::cos(t));
          return e.rp * er + e.r * et;
        }
      },
      shape_);
}

Vec2 ParametricCurve::second_derivative(double t) const {
  return std::visit(
      [&](const auto& s) -> Vec2 {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Circle>) {
          return -s.radius * Vec2(std::cos(t), std::sin(t));
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          Vec2 q(-s.a * std::cos(t), -s.b * std::sin(t));
          double c = std::cos(s.tilt), sn = std::sin(s.tilt);
          return Vec2(c * q.x() - sn * q.y(), sn * q.x() + c * q.y());
        } else {
          StarEval e = star_radius(s, t);
          Vec2 er(std::cos(t), std::sin(t)), et(-std::sin(t), std::cos(t));
          return (e.rpp - e.r) * er + 2.0 * e.rp * et;
        }
      },
      shape_);
}

Vec2 ParametricCurve::centroid_hint() const {
  return std::visit([](const auto& s) { return s.center; }, shape_);
}

double ParametricCurve::max_radius() const {
  double m = 0.0;
  Vec2 c = centroid_hint();
  for (int k = 0; k < 720; ++k)
    m = std::max(m, (position(2.0 * kPi * k / 720) - c).norm());
  return m;
}

void ParametricCurve::validate() const {
  const int M = 1440;
  Vec2 c = centroid_hint();
  for (int k = 0; k < M; ++k) {
    double t = 2.0 * kPi * k / M;
    Vec2 x = position(t);
    if (x.x() < clearance_ || x.x() > 1.0 - clearance_ || x.y() < clearance_ ||
        x.y() > 1.0 - clearance_)
      throw std::domain_error("curve violates the inside-cell clearance");
    if ((x - c).norm() < 1e-6)
      throw std::domain_error("curve radius is not positive");
    if (derivative(t).norm() < 1e-9)
      throw std::domain_error("curve parametrization is degenerate");
  }
}

BoundaryMesh sample_mesh(const ParametricCurve& curve, int N) {
  if (N < 16 || N % 2 != 0)
    throw std::domain_error("sample_mesh: N must be even and >= 16");
  curve.validate();
  BoundaryMesh m;
  m.N = N;
  m.curve = curve;
  m.params.resize(N);
  m.nodes.resize(N);
  m.tangents.resize(N);
  m.second_derivs.resize(N);
  m.normals.resize(N);
  m.jacobians.resize(N);
  for (int k = 0; k < N; ++k) {
    double t = 2.0 * kPi * k / N;
    m.params[k] = t;
    m.nodes[k] = curve.position(t);
    m.tangents[k] = curve.derivative(t);
    m.second_derivs[k] = curve.second_derivative(t);
    double j = m.tangents[k].norm();
    m.jacobians[k] = j;
    // counterclockwise curve: outward normal rotates the tangent by -pi/2
    m.normals[k] = Vec2(m.tangents[k].y(), -m.tangents[k].x()) / j;
  }
  return m;
}

double area_of(const ParametricCurve& curve) {
  const int M = 4096;
  double acc = 0.0;
  for (int k = 0; k < M; ++k) {
    double t = 2.0 * kPi * k / M;
    Vec2 x = curve.position(t), xp = curve.derivative(t);
    acc += x.x() * xp.y() - x.y() * xp.x();
  }
  return 0.5 * acc * (2.0 * kPi / M);
}

double perimeter_of(const BoundaryMesh& mesh) {
  double acc = 0.0;
  for (double j : mesh.jacobians) acc += j;
  return acc * mesh.weight();
}

}  // namespace phonon::geom
