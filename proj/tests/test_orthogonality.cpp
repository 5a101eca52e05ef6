#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polyherm/constructors.hpp"
#include "polyherm/orthogonality.hpp"
#include "polyherm/quadrature.hpp"

using namespace polyherm;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(GramBasic, MonomialCase) {
  const auto r = gram_basic(1.0, 0.0, 3);
  ASSERT_TRUE(r.pass) << r.max_diag_rel << " " << r.max_offdiag;
  const double want[] = {kPi, kPi, 2 * kPi, 6 * kPi};
  for (int n = 0; n <= 3; ++n) EXPECT_NEAR(r.diag_computed[n], want[n], 1e-12 * want[n]);
}

TEST(GramBasic, ClosedForm) {
  const auto r = gram_basic(1.0, 0.2, 4);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.diag_expected[2], 6.85553, 2e-5);
  EXPECT_NEAR(r.diag_computed[2], 2 * kPi / std::sqrt(0.84), 1e-12);
  const auto near = gram_basic(1.0, 0.49, 8);
  EXPECT_TRUE(near.pass) << near.max_diag_rel << " " << near.max_offdiag;
}

TEST(GramBasic, GridAndOrderInvariance) {
  for (double nu : {0.5, 1.0, 2.5}) {
    for (double frac : {-0.4, 0.0, 0.3}) {
      const double alpha = frac * nu;
      const auto r = gram_basic(nu, alpha, 10);
      EXPECT_TRUE(r.pass) << nu << " " << alpha << " " << r.max_diag_rel << " " << r.max_offdiag;
      const auto hi = gram_basic(nu, alpha, 10, 1e-10, 40);
      for (int m = 0; m <= 10; ++m) {
        for (int n = 0; n <= 10; ++n) {
          const double s = std::sqrt(r.diag_computed[m] * r.diag_computed[n]);
          EXPECT_LE(std::abs(r.matrix[m][n] - hi.matrix[m][n]), 1e-12 * s);
        }
      }
    }
  }
}

TEST(GramBasic, Hermitian) {
  // an independently computed lower entry equals the conjugate of the mirrored one
  const ParamSet p{1.3, 0.25, {}};
  const auto r = gram_basic(p.nu, p.alpha, 4);
  const TriPoly i3 = build_recurrence(p, 3), i1 = build_recurrence(p, 1);
  const TriPoly f = substitute_xi(i3, 0.0) * poly_conj(substitute_xi(i1, 0.0));
  const cplx g31 =
      integrate_plane_poly(realify(f), {p.nu - 2 * p.alpha, p.nu + 2 * p.alpha, 0, 0}, 16);
  EXPECT_LE(std::abs(g31 - r.matrix[3][1]), 1e-12 * r.diag_computed[3]);
}

TEST(GramBasic, Regime) {
  EXPECT_THROW(gram_basic(1.0, 0.5, 3), Error);
  try {
    gram_basic(1.0, 0.6, 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RegimeViolation);
  }
}

TEST(GramGeneral, SpecialPairReducesToBasic) {
  const ParamSet p{1.0, 0.2, {}};
  const WeightAB w{1.0 / (p.nu - 2 * p.alpha), 1.0 / (p.nu + 2 * p.alpha)};
  const auto g = gram_general(p, w, 6);
  const auto b = gram_basic(p.nu, p.alpha, 6);
  EXPECT_TRUE(g.pass);
  for (int n = 0; n <= 6; ++n) EXPECT_NEAR(g.diag_computed[n], b.diag_computed[n], 1e-11 * b.diag_computed[n]);
  const WeightDerived d = derive_weight(p, w);
  EXPECT_NEAR(d.A, p.nu, 1e-14);
  EXPECT_NEAR(d.B, -p.alpha, 1e-14);
}

TEST(GramGeneral, ShiftedXiAndOtherPairs) {
  const ParamSet p{1.2, -0.35, {0.4, -0.7}};
  // solve 4 alpha a b = a - b for b given a
  const double a = 0.5;
  const double b = a / (1.0 + 4.0 * p.alpha * a);
  const auto r = gram_general(p, {a, b}, 8);
  EXPECT_TRUE(r.pass) << r.max_diag_rel << " " << r.max_offdiag;
  const auto zero = gram_general({1.0, 0.0, {0.5, 0.5}}, {0.7, 0.7}, 5);
  EXPECT_TRUE(zero.pass);
}

TEST(GramGeneral, Errors) {
  try {
    gram_general({1.0, 0.2, {}}, {1.0, 1.0}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConstraintViolated);
  }
}

TEST(GramShifted, StatedFactorVersusCorrected) {
  const auto r0 = gram_shifted({1.0, 0.2, {}}, 6, 1e-8);
  EXPECT_TRUE(r0.pass);
  const auto r = gram_shifted({1.0, 0.2, {0.3, 0.1}}, 6, 1e-8);
  EXPECT_LE(r.max_offdiag, 1e-9);
  // the stated exponential factor does not reproduce the integral ...
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.max_diag_rel, 1e-2);
  // ... the factor obtained by completing the square does
  ASSERT_FALSE(r.extras.empty());
  EXPECT_EQ(r.extras[0].first, "corrected_max_diag_rel");
  EXPECT_LE(r.extras[0].second, 1e-10);
}

TEST(GramHolomorphic, Norms) {
  const auto r0 = gram_holomorphic(0.5, 0);
  EXPECT_NEAR(r0.diag_computed[0], std::sqrt(2.0) * kPi, 1e-12);
  for (double th : {0.25, 0.5, 0.75}) {
    const auto r = gram_holomorphic(th, 8);
    EXPECT_TRUE(r.pass) << th << " " << r.max_diag_rel << " " << r.max_offdiag;
  }
  EXPECT_THROW(gram_holomorphic(1.0, 3), Error);
}

TEST(GramI0alpha, CorrectedWeight) {
  for (double alpha : {0.3, 1.0, 2.2}) {
    const auto r = gram_I0alpha(alpha, 0.4, 8);
    EXPECT_TRUE(r.pass) << alpha << " " << r.max_diag_rel << " " << r.max_offdiag;
  }
  EXPECT_THROW(gram_I0alpha(-1.0, 0.4, 3), Error);
}
