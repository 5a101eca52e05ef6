#pragma once

#include <span>
#include <utility>

#include "polyherm/algebra.hpp"
#include "polyherm/identities.hpp"
#include "polyherm/orthogonality.hpp"

namespace polyherm {

/// Character exp(2 i pi beta k) and automorphy factor exp(2 alpha (z + k/2) k).
struct AutoParams {
  double alpha = 1.0;  // > 0
  double beta = 0.0;
  double nu() const { return 2.0 * alpha; }
};

/// psi_{m,n}(z) = I_m^{2 alpha, alpha}(z, zbar | 2 i pi (beta + n)) exp(alpha z^2 + 2 i pi (beta + n) z).
struct PsiFunction {
  AutoParams ap;
  int m = 0;
  int n = 0;
  TriPoly poly_part;  // xi already substituted
  TriPoly exp_part;   // alpha z^2 + 2 i pi (beta + n) z

  cplx xi() const;
  GaussPoly form() const { return GaussPoly(poly_part, exp_part); }
  /// poly_part(z) through the three-term recurrence; the monomial form loses
  /// digits near the real zeros of the polynomial in Im z.
  cplx poly_value(cplx z) const;
  cplx operator()(cplx z) const;
  /// poly_part(z) exp(2 i pi n z): the Z-periodic factor left after removing
  /// exp(alpha z^2 + 2 i pi beta z).
  cplx periodic_part(cplx z) const;
};

/// Throws DomainError for m < 0 or alpha <= 0.
PsiFunction build_psi(const AutoParams& ap, int m, int n);

/// psi(z + k) against exp(2 i pi beta k) exp(2 alpha (z + k/2) k) psi(z) for
/// every sample and |k| <= k_range, relative to the larger magnitude.
IdentityReport check_functional_eq(const AutoParams& ap, int m, int n, std::span<const cplx> z,
                                   int k_range, double tol = 1e-9);

/// Symbolic residual of (-d_z d_zbar + 2 alpha zbar d_zbar) psi = 2 alpha m psi.
IdentityReport check_eigen_strip(const AutoParams& ap, int m, int n, double tol = 1e-10);

/// Gram matrix of psi_{m,n}, 0 <= m <= M, n_range.first <= n <= n_range.second,
/// on [0,1] x R with weight exp(-2 alpha |z|^2). Index (n - n_lo)(M + 1) + m.
/// diag_expected holds the same quadrature at doubled resolution; extras carry
/// the largest deviation from the closed-form norm
/// (2 alpha)^m m! sqrt(pi/alpha)/2 exp(pi^2 (beta+n)^2 / alpha).
GramReport gram_strip(const AutoParams& ap, int M, std::pair<int, int> n_range, int gh_order = 0,
                      int x_nodes = 64, double offdiag_tol = 1e-8, double diag_tol = 1e-9);

double strip_norm_closed_form(const AutoParams& ap, int m, int n);

}  // namespace polyherm
