#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyherm/algebra.hpp"

namespace polyherm {

/// Weight parameters a, b > 0 of the general orthogonality relation.
struct WeightAB {
  double a = 1.0;
  double b = 1.0;
};

struct WeightDerived {
  double A = 0.0;
  double B = 0.0;
  cplx C;
  double constraint_residual = 0.0;  // 4 alpha a b - (a - b)
};

WeightDerived derive_weight(const ParamSet& p, const WeightAB& w);

struct GramReport {
  std::string kind;
  int N = 0;
  std::vector<std::vector<cplx>> matrix;
  std::vector<double> diag_expected;
  std::vector<double> diag_computed;
  double max_offdiag = 0.0;      // max |G_mn| / sqrt(G_mm G_nn)
  double max_offdiag_abs = 0.0;
  double max_diag_rel = 0.0;
  double tolerance = 1e-10;
  bool pass = false;
  std::string note;
  std::vector<std::pair<std::string, double>> extras;
};

/// Fills pass, deviations and the scaled off-diagonal measure from matrix and
/// diag_expected.
void finalize_gram(GramReport& r);

/// xi = 0, weight exp(-nu|z|^2 + alpha(z^2 + zbar^2)). Needs nu > 0 and 2|alpha| < nu.
/// order = 0 selects 2N + 8.
GramReport gram_basic(double nu, double alpha, int N, double tol = 1e-10, int order = 0);

/// Weight omega^{a,b} including its exp(-a Re(xi)^2 - b Im(xi)^2) prefactor.
GramReport gram_general(const ParamSet& p, const WeightAB& w, int N, double tol = 1e-10,
                        int order = 0);

/// a = 1/(nu - 2 alpha), b = 1/(nu + 2 alpha): weight
/// exp(-nu|z|^2 + alpha(z^2 + zbar^2) + 2 Re(xi z)) compared against the
/// stated closed form with factor exp(nu|xi|^2 - alpha(xi^2 + conj(xi)^2)).
/// The factor exp(Re(xi)^2/(nu - 2 alpha) + Im(xi)^2/(nu + 2 alpha)) is
/// reported in extras as "corrected_max_diag_rel".
GramReport gram_shifted(const ParamSet& p, int N, double tol = 1e-10, int order = 0);

/// Holomorphic Hermite H_m(z) against conj(H_n(z)) with weight
/// exp(-(1 - theta) x^2 - (1/theta - 1) y^2).
GramReport gram_holomorphic(double theta, int N, double tol = 1e-10, int order = 0);

/// I_n^{0,alpha}(z | 0) with weight exp(-alpha(1/theta - 1) x^2 - alpha(1 - theta) y^2).
GramReport gram_I0alpha(double alpha, double theta, int N, double tol = 1e-10, int order = 0);

}  // namespace polyherm
