// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <variant>
#include <vector>

#include "phonon/types.hpp"

namespace phonon::geom {

struct Circle {
  Vec2 center{0.5, 0.5};
  double radius = 0.3;
};

struct Ellipse {
  Vec2 center{0.5, 0.5};
  double a = 0.3, b = 0.2;  // semi-axes
  double tilt = 0.0;        // radians
};

/// Star-shaped radius r(t) = base (1 + sum ac_k cos((k+1)t) + as_k sin((k+1)t)).
struct FourierStar {
  Vec2 center{0.5, 0.5};
  double base = 0.25;
  std::vector<double> cos_coef;  // ac_1.., coefficient of cos(k t), k = 1..
  std::vector<double> sin_coef;
};

/// Smooth closed curve inside ]0,1[^2, counterclockwise.
class ParametricCurve {
 public:
  using Shape = std::variant<Circle, Ellipse, FourierStar>;

  explicit ParametricCurve(Shape shape, double clearance = 0.05);

  Vec2 position(double t) const;
  Vec2 derivative(double t) const;
  Vec2 second_derivative(double t) const;
  Vec2 centroid_hint() const;  // star-shape center, used for polar quadrature
  double clearance() const { return clearance_; }

  /// Max radius around centroid_hint (for window/quadrature sizing).
  double max_radius() const;

  /// Throws std::domain_error if the curve leaves the clearance-shrunk cell
  /// or its radius turns nonpositive.
  void validate() const;

  const Shape& shape() const { return shape_; }

 private:
  Shape shape_;
  double clearance_;
};

/// Equispaced-parameter quadrature mesh on the curve.
struct BoundaryMesh {
  int N = 0;
  std::vector<double> params;      // t_k = 2 pi k / N
  std::vector<Vec2> nodes;
  std::vector<Vec2> tangents;      // x'(t_k)
  std::vector<Vec2> second_derivs; // x''(t_k)
  std::vector<Vec2> normals;       // outward unit
  std::vector<double> jacobians;   // |x'(t_k)|
  ParametricCurve curve{Circle{}};

  double weight() const { return 2.0 * kPi / N; }
};

/// N even, N >= 16. Analytic tangents/normals/Jacobians.
BoundaryMesh sample_mesh(const ParametricCurve& curve, int N);

/// Area via (1/2) closed-integral (x dy - y dx), spectral accuracy.
double area_of(const ParametricCurve& curve);

double perimeter_of(const BoundaryMesh& mesh);

}  // namespace phonon::geom
