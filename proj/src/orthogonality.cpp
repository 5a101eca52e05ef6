#include "polyherm/orthogonality.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "polyherm/constructors.hpp"
#include "polyherm/identities.hpp"
#include "polyherm/quadrature.hpp"

namespace polyherm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxN = 12;

void check_N(int N) {
  if (N < 0 || N > kMaxN) throw Error(ErrorCode::DomainError, "N must be in [0, 12]");
}

void check_theta(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw Error(ErrorCode::DomainError, "theta must lie in (0, 1)");
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

using FamilyValues = std::function<std::vector<cplx>(cplx z)>;

// Gram matrix of f_m against conj(f_n), m, n <= N, on the exact-degree tensor
// rule. Values come from three-term recurrences at the nodes; expanding the
// products into x, y monomials loses every digit when nu - 2 alpha and
// nu + 2 alpha differ by a large factor.
std::vector<std::vector<cplx>> gram_matrix(const FamilyValues& values, int N,
                                           const PlaneGaussianSpec& spec, double factor,
                                           int order) {
  if (order < min_plane_order(2 * N)) {
    throw Error(ErrorCode::OrderTooLow, "Gram quadrature order below exactness threshold");
  }
  const PlaneRule rule = plane_rule(spec, order);
  std::vector<std::vector<cplx>> g(N + 1, std::vector<cplx>(N + 1));
  for (std::size_t q = 0; q < rule.w.size(); ++q) {
    const auto v = values(cplx{rule.x[q], rule.y[q]});
    for (int m = 0; m <= N; ++m) {
      const cplx wm = rule.w[q] * v[m];
      for (int n = m; n <= N; ++n) g[m][n] += wm * std::conj(v[n]);
    }
  }
  for (int m = 0; m <= N; ++m) {
    for (int n = m; n <= N; ++n) {
      g[m][n] *= factor;
      g[n][m] = std::conj(g[m][n]);
    }
  }
  return g;
}

FamilyValues recurrence_values(const ParamSet& p, int N) {
  return [p, N](cplx z) { return eval_family(p, z, p.xi, N); };
}

int pick_order(int order, int N) { return order > 0 ? order : 2 * N + 8; }

}  // namespace

WeightDerived derive_weight(const ParamSet& p, const WeightAB& w) {
  const double m = p.nu - 2.0 * p.alpha, q = p.nu + 2.0 * p.alpha;
  WeightDerived d;
  d.A = (m * m * w.a + q * q * w.b) / 2.0;
  d.B = (m * m * w.a - q * q * w.b) / 4.0;
  d.C = {w.a * m * p.xi.real(), w.b * q * p.xi.imag()};
  d.constraint_residual = 4.0 * p.alpha * w.a * w.b - (w.a - w.b);
  return d;
}

void finalize_gram(GramReport& r) {
  const int N = static_cast<int>(r.matrix.size()) - 1;
  r.N = N;
  r.diag_computed.clear();
  r.max_diag_rel = 0.0;
  r.max_offdiag = 0.0;
  r.max_offdiag_abs = 0.0;
  for (int n = 0; n <= N; ++n) {
    const double d = r.matrix[n][n].real();
    r.diag_computed.push_back(d);
    if (n < static_cast<int>(r.diag_expected.size())) {
      const double e = r.diag_expected[n];
      r.max_diag_rel = std::max(r.max_diag_rel, std::abs(d - e) / std::abs(e));
    }
  }
  for (int m = 0; m <= N; ++m) {
    for (int n = 0; n <= N; ++n) {
      if (m == n) continue;
      const double scale = std::sqrt(std::abs(r.diag_computed[m] * r.diag_computed[n]));
      const double a = std::abs(r.matrix[m][n]);
      r.max_offdiag_abs = std::max(r.max_offdiag_abs, a);
      r.max_offdiag = std::max(r.max_offdiag, scale > 0.0 ? a / scale : a);
    }
  }
  r.pass = r.max_diag_rel <= r.tolerance && r.max_offdiag <= r.tolerance;
}

GramReport gram_basic(double nu, double alpha, int N, double tol, int order) {
  check_N(N);
  if (!(nu > 0.0) || !(2.0 * std::abs(alpha) < nu)) {
    throw Error(ErrorCode::RegimeViolation, "gram_basic requires nu > 0 and 2|alpha| < nu");
  }
  GramReport r;
  r.kind = "basic";
  r.tolerance = tol;
  const ParamSet p{nu, alpha, {}};
  const PlaneGaussianSpec spec{nu - 2.0 * alpha, nu + 2.0 * alpha, 0.0, 0.0};
  r.matrix = gram_matrix(recurrence_values(p, N), N, spec, 1.0, pick_order(order, N));
  for (int n = 0; n <= N; ++n) {
    r.diag_expected.push_back(kPi * std::pow(nu, n) * factorial(n) /
                              std::sqrt(nu * nu - 4.0 * alpha * alpha));
  }
  finalize_gram(r);
  return r;
}

GramReport gram_general(const ParamSet& p, const WeightAB& w, int N, double tol, int order) {
  check_N(N);
  if (!(w.a > 0.0) || !(w.b > 0.0)) {
    throw Error(ErrorCode::RegimeViolation, "gram_general requires a, b > 0");
  }
  const WeightDerived d = derive_weight(p, w);
  if (std::abs(d.constraint_residual) > 1e-12) {
    throw Error(ErrorCode::ConstraintViolated, "weight violates 4 alpha a b = a - b");
  }
  const double m = p.nu - 2.0 * p.alpha, q = p.nu + 2.0 * p.alpha;
  if (!p.is_nondegenerate() || !(p.nu > 0.0)) {
    throw Error(ErrorCode::RegimeViolation, "gram_general requires nu > 0 and nu != +-2 alpha");
  }
  GramReport r;
  r.kind = "general";
  r.tolerance = tol;
  // -a((nu-2a)x - Re xi)^2 - b((nu+2a)y + Im xi)^2
  const PlaneGaussianSpec spec{w.a * m * m, w.b * q * q, 2.0 * w.a * m * p.xi.real(),
                               -2.0 * w.b * q * p.xi.imag()};
  const double pre = std::exp(-w.a * p.xi.real() * p.xi.real() - w.b * p.xi.imag() * p.xi.imag());
  r.matrix = gram_matrix(recurrence_values(p, N), N, spec, pre, pick_order(order, N));
  const double base = kPi / (std::sqrt(w.a * w.b) * std::abs(p.nu * p.nu - 4.0 * p.alpha * p.alpha));
  const double ratio = (w.a + w.b) / (2.0 * w.a * w.b);
  for (int n = 0; n <= N; ++n) r.diag_expected.push_back(base * std::pow(ratio, n) * factorial(n));
  finalize_gram(r);
  return r;
}

GramReport gram_shifted(const ParamSet& p, int N, double tol, int order) {
  check_N(N);
  if (!(p.nu > 0.0) || !p.is_subcritical()) {
    throw Error(ErrorCode::RegimeViolation, "requires nu > 0 and 2|alpha| < nu");
  }
  const WeightAB w{1.0 / (p.nu - 2.0 * p.alpha), 1.0 / (p.nu + 2.0 * p.alpha)};
  if (std::abs(derive_weight(p, w).constraint_residual) > 1e-12) {
    throw Error(ErrorCode::ConstraintViolated, "weight violates 4 alpha a b = a - b");
  }
  GramReport r;
  r.kind = "shifted";
  r.tolerance = tol;
  // -nu|z|^2 + alpha(z^2 + zbar^2) + 2 Re(xi z)
  const PlaneGaussianSpec spec{p.nu - 2.0 * p.alpha, p.nu + 2.0 * p.alpha, 2.0 * p.xi.real(),
                               -2.0 * p.xi.imag()};
  r.matrix = gram_matrix(recurrence_values(p, N), N, spec, 1.0, pick_order(order, N));
  const cplx xi = p.xi;
  const double stated = p.nu * std::norm(xi) - p.alpha * (xi * xi + std::conj(xi * xi)).real();
  const double corrected = xi.real() * xi.real() / (p.nu - 2.0 * p.alpha) +
                           xi.imag() * xi.imag() / (p.nu + 2.0 * p.alpha);
  std::vector<double> alt;
  for (int n = 0; n <= N; ++n) {
    const double base =
        kPi * std::pow(p.nu, n) * factorial(n) / std::sqrt(p.nu * p.nu - 4.0 * p.alpha * p.alpha);
    r.diag_expected.push_back(base * std::exp(stated));
    alt.push_back(base * std::exp(corrected));
  }
  finalize_gram(r);
  double alt_rel = 0.0;
  for (int n = 0; n <= N; ++n) {
    alt_rel = std::max(alt_rel, std::abs(r.diag_computed[n] - alt[n]) / alt[n]);
  }
  r.extras.emplace_back("corrected_max_diag_rel", alt_rel);
  r.extras.emplace_back("stated_exponent", stated);
  r.extras.emplace_back("corrected_exponent", corrected);
  return r;
}

GramReport gram_holomorphic(double theta, int N, double tol, int order) {
  check_N(N);
  check_theta(theta);
  GramReport r;
  r.kind = "holomorphic";
  r.tolerance = tol;
  const PlaneGaussianSpec spec{1.0 - theta, 1.0 / theta - 1.0, 0.0, 0.0};
  const FamilyValues values = [N](cplx z) {
    std::vector<cplx> v(N + 1);
    v[0] = 1.0;
    if (N >= 1) v[1] = 2.0 * z;
    for (int k = 1; k < N; ++k) v[k + 1] = 2.0 * z * v[k] - 2.0 * double(k) * v[k - 1];
    return v;
  };
  r.matrix = gram_matrix(values, N, spec, 1.0, pick_order(order, N));
  for (int n = 0; n <= N; ++n) {
    r.diag_expected.push_back(std::sqrt(theta) * kPi / (1.0 - theta) *
                              std::pow(2.0 * (1.0 + theta) / (1.0 - theta), n) * factorial(n));
  }
  finalize_gram(r);
  return r;
}

GramReport gram_I0alpha(double alpha, double theta, int N, double tol, int order) {
  check_N(N);
  check_theta(theta);
  if (!(alpha > 0.0)) throw Error(ErrorCode::DomainError, "alpha must be positive");
  GramReport r;
  r.kind = "I0alpha";
  r.tolerance = tol;
  const ParamSet p{0.0, alpha, {}};
  auto fam = recurrence_family(p, N);
  for (auto& f : fam) f = substitute_xi(f, p.xi);
  // I_n^{0,alpha}(z|0) = (i sqrt(alpha))^n H_n(i sqrt(alpha) z)
  double consistency = 0.0;
  const cplx is{0.0, std::sqrt(alpha)};
  for (int n = 0; n <= N; ++n) {
    const HermiteCoeffs h = hermite(n);
    std::vector<cplx> c(h.coeffs.size());
    for (int j = 0; j <= n; ++j) c[j] = std::pow(is, n) * h.coeffs[j];
    consistency = std::max(consistency,
                           symbolic_deviation(fam[n], compose(c, TriPoly::monomial(is, {1, 0, 0}))));
  }
  const PlaneGaussianSpec spec{alpha * (1.0 / theta - 1.0), alpha * (1.0 - theta), 0.0, 0.0};
  r.matrix = gram_matrix(recurrence_values(p, N), N, spec, 1.0, pick_order(order, N));
  for (int n = 0; n <= N; ++n) {
    r.diag_expected.push_back(std::sqrt(theta) * kPi / (alpha * (1.0 - theta)) *
                              std::pow(2.0 * alpha * (1.0 + theta) / (1.0 - theta), n) *
                              factorial(n));
  }
  finalize_gram(r);
  r.extras.emplace_back("hermite_form_deviation", consistency);
  if (consistency > tol) r.pass = false;
  return r;
}

}  // namespace polyherm
