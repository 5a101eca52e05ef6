#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polyherm/constructors.hpp"
#include "polyherm/quadrature.hpp"

using namespace polyherm;

namespace {

constexpr double kPi = std::numbers::pi;

// int t^k e^{-tau t^2} dt = Gamma((k+1)/2) / tau^{(k+1)/2} for even k.
double moment(int k, double tau) {
  if (k % 2 == 1) return 0.0;
  return std::tgamma(0.5 * (k + 1)) / std::pow(tau, 0.5 * (k + 1));
}

}  // namespace

TEST(GaussHermite, SmallRules) {
  const auto r1 = gauss_hermite(1.0, 1);
  EXPECT_EQ(r1.nodes[0], 0.0);
  EXPECT_NEAR(r1.weights[0], std::sqrt(kPi), 1e-15);
  const auto r2 = gauss_hermite(1.0, 2);
  EXPECT_NEAR(r2.nodes[1], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(r2.nodes[0], -r2.nodes[1]);
  EXPECT_NEAR(r2.weights[0], std::sqrt(kPi) / 2, 1e-15);
  const auto r3 = gauss_hermite(1.0, 3);
  double s = 0;
  for (int i = 0; i < 3; ++i) s += r3.weights[i] * std::pow(r3.nodes[i], 4);
  EXPECT_NEAR(s, 0.75 * std::sqrt(kPi), 1e-13);
}

TEST(GaussHermite, ExactMoments) {
  for (double tau : {0.3, 1.0, 4.0}) {
    for (int order : {5, 16, 40}) {
      const auto r = gauss_hermite(tau, order);
      double sw = 0;
      for (double w : r.weights) sw += w;
      EXPECT_NEAR(sw, std::sqrt(kPi / tau), 1e-13 * std::sqrt(kPi / tau));
      for (int k = 0; k < std::min(2 * order, 40); ++k) {
        double s = 0;
        for (int i = 0; i < order; ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
        if (k % 2 == 1) {
          EXPECT_NEAR(s, 0.0, 1e-14 * std::max(1.0, moment(k - 1, tau)));
        } else {
          EXPECT_NEAR(s, moment(k, tau), 1e-13 * moment(k, tau)) << tau << " " << order << " " << k;
        }
      }
    }
  }
}

TEST(GaussHermite, LargeOrderAndDomain) {
  const auto r = gauss_hermite(1.0, 256);
  double sw = 0;
  for (double w : r.weights) sw += w;
  EXPECT_NEAR(sw, std::sqrt(kPi), 1e-12);
  for (int i = 0; i < 128; ++i) EXPECT_EQ(r.nodes[i], -r.nodes[255 - i]);
  EXPECT_THROW(gauss_hermite(0.0, 4), Error);
  EXPECT_THROW(gauss_hermite(1.0, 0), Error);
  EXPECT_THROW(gauss_hermite(1.0, 257), Error);
}

TEST(Moments, Examples) {
  EXPECT_NEAR(std::abs(gaussian_moment(0.0, 1.0, 0) - 2 * std::sqrt(kPi)), 0, 1e-15);
  EXPECT_EQ(gaussian_moment(0.0, 1.0, 1), cplx(0.0));
  EXPECT_NEAR(std::abs(gaussian_moment(0.0, 1.0, 2) - 4 * std::sqrt(kPi)), 0, 1e-14);
  EXPECT_THROW(gaussian_moment(0.0, 0.0, 2), Error);
}

TEST(Moments, AgreeWithQuadrature) {
  for (double alpha : {0.25, 1.0, 4.0}) {
    const double c = 0.7;
    const auto r = gauss_hermite(1.0 / (4 * alpha), 40);
    const auto m = gaussian_moments(c, alpha, 20);
    for (int n = 0; n <= 20; ++n) {
      double s = 0;
      for (int i = 0; i < 40; ++i) s += r.weights[i] * std::pow(r.nodes[i] + c, n);
      EXPECT_NEAR(m[n].real(), s, 1e-12 * std::abs(s)) << alpha << " " << n;
    }
  }
}

TEST(Moments, ReproduceRecurrence) {
  const ParamSet p{1.3, 0.4, {0.2, -0.5}};
  const auto fam = recurrence_family(p, 10);
  const cplx z(0.6, 1.1);
  const cplx i1 = fam[1](z, p.xi);
  // normalized moments with c = I_1 and 2 alpha' = 2 alpha
  const auto m = gaussian_moments(i1, p.alpha, 10);
  for (int n = 0; n <= 10; ++n) {
    const cplx want = fam[n](z, p.xi);
    EXPECT_LE(std::abs(m[n] / m[0] - want), 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST(Plane, Basics) {
  const TriPoly Z = TriPoly::var(Var::z), ZB = TriPoly::var(Var::zbar);
  const PlaneGaussianSpec unit{1.0, 1.0, 0.0, 0.0};
  EXPECT_NEAR(integrate_plane_poly(realify(TriPoly::constant(1.0)), unit, 4).real(), kPi, 1e-14);
  const TriPoly x2 = (Z + ZB) * (Z + ZB) * 0.25;
  EXPECT_NEAR(integrate_plane_poly(realify(x2), unit, 4).real(), kPi / 2, 1e-14);
  const TriPoly x3y = (Z + ZB) * (Z + ZB) * (Z + ZB) * (Z - ZB);
  EXPECT_NEAR(std::abs(integrate_plane_poly(realify(x3y), unit, 6)), 0.0, 1e-13);
  EXPECT_THROW(integrate_plane_poly(realify(x3y), unit, 3), Error);
}

TEST(Plane, RealifyMatchesEval) {
  const TriPoly p = build_tensor({1.1, 0.3, {0.4, 0.2}}, 6);
  const XYPoly r = realify(p);
  for (double x : {-1.0, 0.3}) {
    for (double y : {0.5, 2.0}) {
      EXPECT_LE(std::abs(r(x, y) - p(cplx(x, y))), 1e-11 * std::max(1.0, std::abs(p(cplx(x, y)))));
    }
  }
}

TEST(Plane, ShiftedWeightAndOrderInvariance) {
  const TriPoly Z = TriPoly::var(Var::z);
  const XYPoly f = realify(Z * Z * TriPoly::var(Var::zbar) + TriPoly::constant(2.0));
  const PlaneGaussianSpec w{0.8, 1.7, 0.6, -0.9};
  const cplx v1 = integrate_plane_poly(f, w, min_plane_order(3));
  const cplx v2 = integrate_plane_poly(f, w, 30);
  EXPECT_LE(std::abs(v1 - v2), 1e-12 * std::abs(v2));
  // independent: one-dimensional moments about shifted centres
  const double x0 = 0.6 / 1.6, y0 = -0.9 / 3.4;
  const double g = std::exp(0.8 * x0 * x0 + 1.7 * y0 * y0) * kPi / std::sqrt(0.8 * 1.7);
  auto ex = [&](int k) { return k == 0 ? 1.0 : k == 1 ? x0 : k == 2 ? x0 * x0 + 0.5 / 0.8 : x0 * x0 * x0 + 1.5 * x0 / 0.8; };
  auto ey = [&](int k) { return k == 0 ? 1.0 : k == 1 ? y0 : k == 2 ? y0 * y0 + 0.5 / 1.7 : y0 * y0 * y0 + 1.5 * y0 / 1.7; };
  cplx want{};
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) want += f.at(i, j) * ex(i) * ey(j);
  want *= g;
  EXPECT_LE(std::abs(v2 - want), 1e-12 * std::abs(want));
}
