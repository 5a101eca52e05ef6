#pragma once

// Construction paths for I_n^{nu,alpha}(z, zbar | xi) and the Hermite-type
// families they are built from. Unless stated otherwise xi stays formal and
// ParamSet::xi is ignored.

#include <vector>

#include "polyherm/algebra.hpp"

namespace polyherm {

/// nu*zbar - 2*alpha*z - xi.
TriPoly build_I1(const ParamSet& p);

/// I_0, ..., I_{n_max} by the three-term recurrence.
std::vector<TriPoly> recurrence_family(const ParamSet& p, int n_max);

/// Reference construction; valid for every nu and alpha.
TriPoly build_recurrence(const ParamSet& p, int n);
/// n-fold application of (-d/dz + I_1) to 1.
TriPoly build_operational(const ParamSet& p, int n);
/// (-1)^n exp(nu z zbar - alpha z^2 - xi z) d^n/dz^n exp(-nu z zbar + alpha z^2 + xi z).
TriPoly build_rodrigues(const ParamSet& p, int n);
/// Second Rodrigues form through the variable w = I_1. Throws AlphaZero.
TriPoly build_rodrigues_second(const ParamSet& p, int n);
/// (-i)^n alpha^{n/2} H_n((2 alpha z - nu zbar + xi) / (2 i alpha^{1/2})). Throws AlphaZero.
TriPoly build_explicit_hermite(const ParamSet& p, int n);
/// Tensor product of rescaled real Hermite polynomials in x and y at the
/// numeric p.xi; the result has no xi. Throws DegenerateParams when nu = +-2 alpha.
TriPoly build_tensor(const ParamSet& p, int n);
/// The tensor form evaluated at a point without expanding into monomials; the
/// expanded polynomial loses digits when its coefficients dwarf the value.
cplx tensor_value(const ParamSet& p, int n, cplx z);
/// Holomorphic components h_0..h_n (polynomials in z and xi) with
/// I_n = sum_k h_k zbar^k. Throws AlphaZero.
std::vector<TriPoly> build_holo_components(const ParamSet& p, int n);
/// sum_k components[k] * zbar^k.
TriPoly assemble_components(const std::vector<TriPoly>& components);

/// (alpha^{1/2})^e with alpha^{1/2} = i sqrt(|alpha|) for alpha < 0.
cplx alpha_half_power(double alpha, int e);

struct HermiteCoeffs {
  int n = 0;
  std::vector<double> coeffs;  // monomial basis, ascending powers
};

/// Physicists' Hermite polynomial H_n.
HermiteCoeffs hermite(int n);
/// Coefficients of H^tau_n(t) = tau^{n/2} H_n(sqrt(tau) t). Throws DomainError for tau <= 0.
std::vector<double> hermite_rescaled(double tau, int n);
/// h^nu_n(t) = nu^{n/2} exp(-nu t^2 / 2) H_n(sqrt(nu) t). Throws DomainError for nu <= 0.
double hermite_function(double nu, int n, double t);
/// H_n at a complex argument by the three-term recurrence.
cplx hermite_eval(int n, cplx x);

/// (-1)^n exp(nu|z|^2) d^n/dz^n (z^m exp(-nu|z|^2)); degree m in z, n in zbar,
/// leading coefficient nu^n.
TriPoly complex_hermite(double nu, int m, int n);
/// nu^m * complex_hermite(nu, m, n); leading coefficient nu^{m+n}.
TriPoly complex_hermite_standard(double nu, int m, int n);

}  // namespace polyherm
