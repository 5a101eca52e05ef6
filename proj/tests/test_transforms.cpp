#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "polyherm/constructors.hpp"
#include "polyherm/error.hpp"
#include "polyherm/identities.hpp"
#include "polyherm/transforms.hpp"

using namespace polyherm;

namespace {

cplx oracle(const ParamSet& p, int n, cplx z) { return build_recurrence(p, n)(z, p.xi); }

double rel(cplx v, cplx r) { return std::abs(v - r) / std::max(1.0, std::abs(r)); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::UsageError;
}

}  // namespace

TEST(IntrepReal, SmallCases) {
  const ParamSet p{1.0, 0.3, {0.0, 0.2}};
  const cplx z{1.0, -1.0};
  EXPECT_NEAR(std::abs(intrep_real(p, 0, z).value - 1.0), 0.0, 1e-15);
  const cplx i1 = p.nu * std::conj(z) - 2.0 * p.alpha * z - p.xi;
  EXPECT_LT(rel(intrep_real(p, 1, z).value, i1), 1e-14);
  const auto r = intrep_real(p, 5, z);
  EXPECT_EQ(r.method, "moments");
  EXPECT_EQ(r.est_error, 0.0);
  EXPECT_LT(std::abs(r.value - oracle(p, 5, z)) / std::abs(oracle(p, 5, z)), 1e-11);
}

TEST(IntrepReal, RandomDraws) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const ParamSet p{0.1 + 3.9 * (u(rng) + 1.0) / 2.0, 0.01 + (u(rng) + 1.0), {u(rng), u(rng)}};
    const cplx z{2.0 * u(rng), 2.0 * u(rng)};
    for (int n = 0; n <= 15; ++n) {
      const cplx ref = oracle(p, n, z);
      EXPECT_LT(rel(intrep_real(p, n, z).value, ref), 1e-11) << trial << " " << n;
    }
  }
}

TEST(IntrepReal, RejectsNonpositiveAlpha) {
  EXPECT_EQ(code_of([] { intrep_real({1.0, -0.2, {}}, 2, {0.1, 0.1}); }),
            ErrorCode::AlphaNotPositive);
  EXPECT_EQ(code_of([] { intrep_real({1.0, 0.0, {}}, 2, {0.1, 0.1}); }),
            ErrorCode::AlphaNotPositive);
}

TEST(IntrepPlane, Examples) {
  const ParamSet p{1.0, 0.2, {}};
  const cplx a{-1.0, 0.0};
  EXPECT_LT(rel(intrep_plane(p, 0, {0.7, -0.4}, a, a).value, 1.0), 1e-9);
  const cplx z{0.5, 0.5};
  const auto r = intrep_plane(p, 2, z, a, a);
  EXPECT_EQ(r.method, "quadrature");
  EXPECT_LT(rel(r.value, oracle(p, 2, z)), 1e-6);
  const ParamSet q{1.0, 0.2, {0.3, -0.4}};
  EXPECT_LT(rel(intrep_plane(q, 1, 0.0, a, a).value, -q.xi), 1e-9);
}

TEST(IntrepPlane, GeneralAB) {
  const ParamSet p{1.3, -0.4, {0.3, 0.1}};
  const cplx z{1.2, -0.9};
  const cplx rot = std::polar(1.0, 0.3);
  const std::pair<cplx, cplx> ab[] = {{1.1, 0.9}, {rot, std::conj(rot)}, {-1.3, -1.3}};
  for (int n : {0, 3, 7}) {
    for (const auto& [a, b] : ab) {
      EXPECT_LT(rel(intrep_plane(p, n, z, a, b).value, oracle(p, n, z)), 1e-6) << n;
    }
  }
}

TEST(IntrepPlane, RefinementStable) {
  const ParamSet p{1.0, 0.45, {0.3, 0.1}};
  const cplx z = std::polar(2.0, 0.7);
  const auto r = intrep_plane(p, 10, z, -1.0, -1.0);
  const auto hi = intrep_plane(p, 10, z, -1.0, -1.0, 160);
  EXPECT_LE(std::abs(r.value - hi.value), std::max(r.est_error, 1e-12 * std::abs(r.value)));
  EXPECT_LT(rel(r.value, oracle(p, 10, z)), 1e-6);
}

TEST(IntrepPlane, Preconditions) {
  const ParamSet p{1.0, 0.2, {}};
  EXPECT_EQ(code_of([&] { intrep_plane(p, 1, 0.0, {1.0, 0.0}, {-1.0, 0.0}); }),
            ErrorCode::DomainError);
  EXPECT_EQ(code_of([&] { intrep_plane({1.0, 1.5, {}}, 1, 0.0, -1.0, -1.0); }),
            ErrorCode::RegimeViolation);
  EXPECT_EQ(code_of([&] { intrep_plane(p, 12, {2.0, 2.0}, -1.0, -1.0, 20); }),
            ErrorCode::NoConvergence);
}

TEST(TwistConvention, ExactlyOneMatches) {
  for (const ParamSet& p : {ParamSet{1.0, 0.2, {0.3, 0.1}}, ParamSet{2.0, -0.7, {-0.2, 0.5}}}) {
    const auto c = resolve_twist_convention(p);
    EXPECT_TRUE(c.unique);
    EXPECT_EQ(c.chosen, TwistConvention::z_conj_zeta);
    EXPECT_LT(c.dev_z_conj_zeta, 1e-8);
    EXPECT_GT(c.dev_zeta_conj_z, 1e-2);
  }
  EXPECT_EQ(convention_name(TwistConvention::z_conj_zeta), "Im(z conj(zeta))");
}

TEST(TwistConvention, MatchesGeneralForm) {
  const ParamSet p{0.8, 0.3, {0.1, -0.2}};
  const cplx z{-0.4, 1.1};
  for (int n : {0, 1, 4}) {
    const cplx tw = intrep_twisted(p, n, z, TwistConvention::z_conj_zeta).value;
    const cplx gen = intrep_plane(p, n, z, -p.nu, -p.nu).value;
    EXPECT_LT(rel(tw, gen), 1e-8);
  }
}

TEST(ComplexHermiteIntrep, Examples) {
  EXPECT_LT(rel(complex_hermite_intrep(1.0, 0, 0, {0.4, 0.9}, -1.0, -1.0).value, 1.0), 1e-9);
  EXPECT_LT(std::abs(complex_hermite_intrep(1.0, 1, 0, 0.0, -1.0, -1.0).value), 1e-12);
  const auto c = verify_complex_hermite_intrep(1.0, 1, 1, 1.0, -1.0, -1.0);
  EXPECT_TRUE(c.pass) << c.deviation;
  const auto d = verify_complex_hermite_intrep(0.7, 3, 2, {0.8, -0.3}, 2.0, 0.245);
  EXPECT_TRUE(d.pass) << d.deviation;
  // the quoted normalization differs by nu^m
  EXPECT_GT(std::abs(d.reference - complex_hermite(0.7, 3, 2)({0.8, -0.3})), 1e-2);
}

TEST(FourierWigner, Examples) {
  const ParamSet p{1.0, 0.2, {0.1, 0.0}};
  EXPECT_LT(rel(fourier_wigner(p, 0, {1.0, 0.5}).value, 1.0), 1e-9);
  const cplx z{1.0, 0.5};
  EXPECT_LT(rel(fourier_wigner(p, 4, z).value, oracle(p, 4, z)), 1e-6);
}

TEST(FourierWigner, SegalBargmann) {
  const ParamSet p{0.5, 0.0, {}};
  for (int n = 0; n <= 10; ++n) {
    const cplx z{1.1, -0.7};
    const cplx expect = std::pow(0.5, n) * std::pow(std::conj(z), n);
    EXPECT_LT(std::abs(fourier_wigner(p, n, z).value - expect) / std::abs(expect), 1e-8) << n;
  }
}

TEST(FourierWigner, RandomSubcritical) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 15; ++trial) {
    const double nu = 0.2 + 3.8 * (u(rng) + 1.0) / 2.0;
    const ParamSet p{nu, 0.49 * nu * u(rng), {u(rng), u(rng)}};
    const cplx z = std::polar(2.0 * (u(rng) + 1.0) / 2.0, 3.14159 * u(rng));
    for (int n = 0; n <= 10; ++n) {
      EXPECT_LT(rel(fourier_wigner(p, n, z).value, oracle(p, n, z)), 1e-6) << trial << " " << n;
    }
  }
}

TEST(FourierWigner, Preconditions) {
  EXPECT_EQ(code_of([] { fourier_wigner({1.0, 0.6, {}}, 1, 0.0); }), ErrorCode::RegimeViolation);
  EXPECT_EQ(code_of([] { fourier_wigner({1.0, 0.1, {}}, 1, 0.0, 32); }), ErrorCode::OrderTooLow);
}

TEST(Mehler, Examples) {
  const auto zero = mehler_kernel(1.3, 0.0, 0.4, -0.2, 80);
  EXPECT_LT(rel(zero.value, std::exp(-1.3 * (0.16 + 0.04) / 2.0)), 1e-15);
  EXPECT_TRUE(verify_mehler(2.0, 0.5, 1.0, 1.0, 80).pass);
  const ParamSet p{1.0, 0.2, {0.3, 0.1}};
  for (double y : {0.0, 0.5, -1.3}) {
    const auto c = verify_mehler_window(p, y);
    EXPECT_TRUE(c.pass) << y << " " << c.deviation;
  }
  // alpha < 0 makes lambda real with |lambda| = 0.77, so more terms are needed
  const auto neg = verify_mehler_window({1.0, -0.3, {0.2, -0.1}}, 0.7, 120);
  EXPECT_TRUE(neg.pass) << neg.deviation;
}

TEST(Mehler, RealArgumentsUpToPointSeven) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double tau = 0.5 + 1.5 * (u(rng) + 1.0) / 2.0;
    const cplx lambda = std::polar(0.7 * (u(rng) + 1.0) / 2.0, 3.14159 * u(rng));
    const auto c = verify_mehler(tau, lambda, 2.0 * u(rng), 2.0 * u(rng), 80);
    EXPECT_TRUE(c.pass) << trial << " " << c.deviation;
  }
}

TEST(Mehler, TruncationGuard) {
  EXPECT_EQ(code_of([] { mehler_kernel(2.0, 0.7, {0.0, 2.0}, {0.0, 2.0}, 80); }),
            ErrorCode::TruncationInsufficient);
  EXPECT_EQ(code_of([] { mehler_kernel(2.0, 0.9, 1.0, 1.0, 10); }),
            ErrorCode::TruncationInsufficient);
  EXPECT_EQ(code_of([] { mehler_kernel(2.0, 1.0, 1.0, 1.0, 10); }), ErrorCode::DomainError);
}

TEST(IntrepPlane, LargeLinearTerms) {
  // the integrand carries exp(nu |z|^2) ~ 1e6 of cancellation on the real plane
  const ParamSet p{3.47802, 1.09266, {0.117963, 0.484547}};
  const cplx z{-0.279019, 1.98044};
  const cplx rot = std::polar(p.nu, 0.4);
  for (int n : {0, 4, 10}) {
    EXPECT_LT(rel(intrep_plane(p, n, z, -p.nu, -p.nu).value, oracle(p, n, z)), 1e-10) << n;
    EXPECT_LT(rel(intrep_plane(p, n, z, rot, std::conj(rot)).value, oracle(p, n, z)), 1e-10) << n;
  }
}
