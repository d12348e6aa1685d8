// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "phonon/hankel.hpp"

using namespace phonon;
using hankel::besselJY01;

namespace {

// mpmath (30-digit) reference values
struct RealRef { double z, J0, Y0, J1, Y1; };
const RealRef kRealRefs[] = {
    {0.000001, 0.99999999999975, -8.8690314816594437, 4.999999999999375e-7, -636619.772372175014},
    {0.001, 0.999999750000015625, -4.47141661137592327, 0.000499999937500002604, -636.622167231139428},
    {0.7, 0.881200888607405281, -0.190664929337395067, 0.328995741540058948, -1.10324987190763337},
    {3.0, -0.260051954901933438, 0.376850010012790382, 0.339058958525936459, 0.324674424791799978},
    {7.9, 0.194361844841278318, 0.206520948144375704, 0.219179399921751144, -0.181721077280573209},
    {8.1, 0.147517454044377582, 0.238091328702234856, 0.247607766981592918, -0.133148795952495836},
    {13.9, 0.183579855457869674, 0.109859189459526498, 0.116524890369056333, -0.179750951069548343},
    {14.1, 0.156952877032601179, 0.143136228622544625, 0.148784351297393914, -0.151981333467817674},
    {20.0, 0.167024664340583155, 0.0626405968093838312, 0.0668331241758500456, -0.165511614362521296},
    {50.0, 0.055812327669251815, -0.098064995470077079, -0.0975118281251751377, -0.0567956685620147679},
};

struct CplxRef { double re, im, h0r, h0i, h1r, h1i; };
const CplxRef kCplxRefs[] = {
    {0.5, 0.3, 0.552095266042132783, -0.421905265166408761, -0.301999772025081596, -1.03028225096054002},
    {3.0, 2.0, -0.0177932703039945952, 0.0528194044971553803, 0.0550675953373147143, 0.0248672812247509383},
    {10.0, 5.0, -0.0014390626993822736, 0.000697983133831864978, 0.000655900351176758064, 0.00149594457586114761},
    {14.0, 0.5, 0.10505263377934743, 0.0752377580658040553, 0.0791184040420075485, -0.102575263961710906},
    {30.0, 5.0, -0.000640216072055146803, -0.00073418601869835224, -0.000746613898502762982, 0.000630155983391119286},
    {45.0, -3.0, 2.30476866643968975, 0.62008251595971081, 0.645174065517713923, -2.29634634412777051},
    {13.5, -4.0, 11.1708149145554815, 3.25571207015160505, 3.60849807631952625, -10.952517219685177},
};

double rel(cplx got, cplx want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace

TEST_CASE("hankel1 matches the extended-precision oracle on the real axis") {
  for (const auto& r : kRealRefs) {
    auto b = besselJY01(cplx(r.z, 0.0));
    CHECK(rel(b.J0, r.J0) < 1e-11);
    CHECK(rel(b.Y0, r.Y0) < 1e-11);
    CHECK(rel(b.J1, r.J1) < 1e-11);
    CHECK(rel(b.Y1, r.Y1) < 1e-11);
  }
}

TEST_CASE("hankel1 matches the oracle at complex arguments") {
  for (const auto& r : kCplxRefs) {
    cplx z(r.re, r.im);
    CHECK(rel(hankel::hankel1(0, z), cplx(r.h0r, r.h0i)) < 1e-11);
    CHECK(rel(hankel::hankel1(1, z), cplx(r.h1r, r.h1i)) < 1e-11);
  }
}

TEST_CASE("hankel1(0, 1) value from the series oracle") {
  cplx h = hankel::hankel1(0, cplx(1.0, 0.0));
  CHECK(std::abs(h - cplx(0.765197686557966551, 0.088256964215676958)) < 1e-12);
}

TEST_CASE("Wronskian J0 Y1 - J1 Y0 = -2/(pi z) at z = 0.7") {
  auto b = besselJY01(cplx(0.7, 0.0));
  cplx w = b.J0 * b.Y1 - b.J1 * b.Y0;
  CHECK(std::abs(w - cplx(-2.0 / (kPi * 0.7), 0.0)) < 1e-10);
}

TEST_CASE("log-split structure: Y0 - (2/pi) ln(z/2) J0 finite as z -> 0") {
  // the split Y0 = (2/pi)(ln(z/2)+g) J0 + P0 keeps the residual bounded
  double prev = 0.0;
  for (double z : {1e-2, 1e-4, 1e-6}) {
    auto b = besselJY01(cplx(z, 0.0));
    cplx res = b.Y0 - (2.0 / kPi) * std::log(z / 2.0) * b.J0;
    CHECK(std::abs(res) < 1.0);
    prev = std::abs(res);
  }
  (void)prev;
}

TEST_CASE("branch consistency across the series/asymptotic switch") {
  // values on both sides of |z| = 14 agree with the oracle above; also check
  // continuity on a tight ring crossing the switch radius
  for (double dz : {-1e-8, 1e-8}) {
    cplx z(hankel::kSeriesSwitch + dz, 0.3);
    auto b = besselJY01(z);
    CHECK(std::isfinite(b.J0.real()));
  }
  // finite difference straddling the switch must reproduce H0' = -H1;
  // a branch mismatch of size eps would show up amplified by 1/dz
  double dz = 2e-6;
  cplx zc(14.0, 0.2);
  cplx a = hankel::hankel1(0, zc - dz / 2);
  cplx b = hankel::hankel1(0, zc + dz / 2);
  cplx h1 = hankel::hankel1(1, zc);
  CHECK(std::abs((b - a) / dz + h1) < 1e-5 * std::abs(h1));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(hankel::hankel1(0, cplx(0.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(hankel::hankel1(2, cplx(1.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(hankel::hankel1(0, cplx(2e4, 0.0)), std::domain_error);
}
