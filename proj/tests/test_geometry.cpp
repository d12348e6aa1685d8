// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "phonon/boundary_geometry.hpp"

using namespace phonon;
using namespace phonon::geom;

TEST_CASE("circle perimeter exact for constant Jacobian") {
  ParametricCurve c(Circle{{0.5, 0.5}, 0.3});
  BoundaryMesh m = sample_mesh(c, 64);
  CHECK(perimeter_of(m) == doctest::Approx(2.0 * kPi * 0.3).epsilon(1e-12));
}

TEST_CASE("circle area and cell complement") {
  ParametricCurve c(Circle{{0.5, 0.5}, 0.3});
  double a = area_of(c);
  CHECK(a == doctest::Approx(0.2827433388230814).epsilon(1e-10));
  CHECK(1.0 - a == doctest::Approx(0.7172566611769186).epsilon(1e-10));
}

TEST_CASE("ellipse area") {
  ParametricCurve c(Ellipse{{0.5, 0.5}, 0.3, 0.2, 0.4});
  CHECK(area_of(c) == doctest::Approx(kPi * 0.06).epsilon(1e-12));
}

TEST_CASE("circle normals point radially outward") {
  ParametricCurve c(Circle{{0.5, 0.5}, 0.3});
  BoundaryMesh m = sample_mesh(c, 32);
  for (int k = 0; k < m.N; ++k) {
    Vec2 want = (m.nodes[k] - Vec2(0.5, 0.5)) / 0.3;
    CHECK((m.normals[k] - want).norm() < 1e-14);
  }
}

TEST_CASE("outward normals for star-shaped curves") {
  FourierStar s;
  s.base = 0.25;
  s.cos_coef = {0.0, 0.0, 0.2};  // r = 0.25 (1 + 0.2 cos 3t)
  ParametricCurve c(s);
  BoundaryMesh m = sample_mesh(c, 64);
  for (int k = 0; k < m.N; ++k)
    CHECK((m.nodes[k] - Vec2(0.5, 0.5)).dot(m.normals[k]) > 0.0);
}

TEST_CASE("Fourier star area matches high-resolution quadrature oracle") {
  FourierStar s;
  s.base = 0.25;
  s.cos_coef = {0.0, 0.0, 0.2};
  ParametricCurve c(s);
  // dense midpoint oracle with 1e5 points on (1/2) (x dy - y dx)
  const int M = 100000;
  double acc = 0.0;
  for (int k = 0; k < M; ++k) {
    double t = 2.0 * kPi * (k + 0.5) / M;
    Vec2 x = c.position(t), xp = c.derivative(t);
    acc += x.x() * xp.y() - x.y() * xp.x();
  }
  acc *= 0.5 * 2.0 * kPi / M;
  CHECK(area_of(c) == doctest::Approx(acc).epsilon(1e-10));
  // closed form pi r0^2 (1 + a^2/2)
  CHECK(area_of(c) == doctest::Approx(kPi * 0.0625 * 1.02).epsilon(1e-10));
}

TEST_CASE("spectral convergence: doubling N changes perimeter by < 1e-10") {
  FourierStar s;
  s.base = 0.25;
  s.cos_coef = {0.0, 0.1, 0.2};
  ParametricCurve c(s);
  double p64 = perimeter_of(sample_mesh(c, 64));
  double p128 = perimeter_of(sample_mesh(c, 128));
  CHECK(std::abs(p64 - p128) < 1e-10);
}

TEST_CASE("rotation invariance of area and perimeter") {
  // r(t) shifted by phi is the same curve rotated; area/perimeter match
  FourierStar s1, s2;
  s1.base = s2.base = 0.25;
  s1.cos_coef = {0.0, 0.0, 0.15};
  double phi = 0.7;
  // cos(3(t+phi)) = cos 3t cos 3phi - sin 3t sin 3phi
  s2.cos_coef = {0.0, 0.0, 0.15 * std::cos(3 * phi)};
  s2.sin_coef = {0.0, 0.0, -0.15 * std::sin(3 * phi)};
  ParametricCurve c1(s1), c2(s2);
  CHECK(area_of(c1) == doctest::Approx(area_of(c2)).epsilon(1e-12));
  CHECK(perimeter_of(sample_mesh(c1, 128)) ==
        doctest::Approx(perimeter_of(sample_mesh(c2, 128))).epsilon(1e-12));
}

TEST_CASE("clearance violations are rejected") {
  ParametricCurve big(Circle{{0.5, 0.5}, 0.6});
  CHECK_THROWS_AS(sample_mesh(big, 32), std::domain_error);
  ParametricCurve offcenter(Circle{{0.9, 0.5}, 0.2});
  CHECK_THROWS_AS(sample_mesh(offcenter, 32), std::domain_error);
  ParametricCurve ok(Circle{{0.5, 0.5}, 0.3});
  CHECK_THROWS_AS(sample_mesh(ok, 15), std::domain_error);
  CHECK_THROWS_AS(sample_mesh(ok, 18 + 1), std::domain_error);  // odd
}
