#pragma once

#include <string>

#include "polyherm/algebra.hpp"

namespace polyherm {

struct TransformResult {
  cplx value;
  std::string method;     // "moments", "quadrature" or "series"
  double est_error = 0.0; // last refinement delta, or last series term
  int order = 0;          // quadrature order or number of series terms actually used
};

/// A transform value next to an independent reference.
struct TransformCheck {
  TransformResult result;
  cplx reference;
  double deviation = 0.0;  // |value - reference| / max(1, |reference|)
  bool pass = false;
};

/// Real-line representation through closed-form Gaussian moments with shift I_1/2.
/// Needs alpha > 0 (AlphaNotPositive) and nu > 0.
TransformResult intrep_real(const ParamSet& p, int n, cplx z);

/// Plane representation with free parameters a, b (ab real and positive).
/// Quadrature orders 20, 40, ... up to max_order (<= 160) until the refinement
/// delta drops below 1e-8.
TransformResult intrep_plane(const ParamSet& p, int n, cplx z, cplx a, cplx b,
                             int max_order = 160);

/// Which pairing turns exp(nu(conj(zeta) z - zeta conj(z))) into exp(2i nu Im<z, zeta>).
enum class TwistConvention { z_conj_zeta, zeta_conj_z };

std::string convention_name(TwistConvention c);

/// The a = b = -nu form with the phase exp(2i nu Im<z, zeta>) under convention c.
TransformResult intrep_twisted(const ParamSet& p, int n, cplx z, TwistConvention c,
                               int max_order = 160);

struct ConventionReport {
  TwistConvention chosen = TwistConvention::z_conj_zeta;
  double dev_z_conj_zeta = 0.0;
  double dev_zeta_conj_z = 0.0;
  bool unique = false;  // exactly one convention reproduces the polynomial
};

/// Evaluates both conventions against the recurrence at a few (n, z) samples.
ConventionReport resolve_twist_convention(const ParamSet& p, double tol = 1e-6);

/// Plane representation of the standard complex Hermite polynomial
/// (leading coefficient nu^{m+n}).
TransformResult complex_hermite_intrep(double nu, int m, int n, cplx z, cplx a, cplx b,
                                       int max_order = 160);
TransformCheck verify_complex_hermite_intrep(double nu, int m, int n, cplx z, cplx a, cplx b,
                                             double tol = 1e-6);

/// Fourier-Wigner image of h^{2 nu}_n with the Gaussian window. Needs 2|alpha| < nu
/// and order >= max(64, 2n + 32); order = 0 picks that minimum.
TransformResult fourier_wigner(const ParamSet& p, int n, cplx z, int order = 0);

/// Window exp(-xi^2/(2(nu+2a))) exp(-nu((nu-2a)y^2 - 2 xi y)/(nu+2a)).
cplx wigner_window(const ParamSet& p, cplx y);

/// sum_{k <= k_trunc} lambda^k h^tau_k(X) h^tau_k(Y) / (2^k tau^k k!). Throws
/// TruncationInsufficient when the last term exceeds tol/10 of the sum.
TransformResult mehler_kernel(double tau, cplx lambda, cplx X, cplx Y, int k_trunc,
                              double tol = 1e-9);
cplx mehler_closed_form(double tau, cplx lambda, cplx X, cplx Y);
TransformCheck verify_mehler(double tau, cplx lambda, cplx X, cplx Y, int k_trunc,
                             double tol = 1e-9);

/// Mehler sum at tau = 2 nu, lambda = -i (2 alpha/nu)^{1/2}, X = i xi / (2 (2 nu alpha)^{1/2})
/// against exp(xi^2/(8 alpha)) (nu/(nu+2 alpha))^{1/2} times the window at Y.
TransformCheck verify_mehler_window(const ParamSet& p, double Y, int k_trunc = 80,
                                    double tol = 1e-9);

}  // namespace polyherm
