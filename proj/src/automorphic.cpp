#include "polyherm/automorphic.hpp"

#include <cmath>
#include <numbers>

#include "polyherm/constructors.hpp"
#include "polyherm/error.hpp"
#include "polyherm/quadrature.hpp"

namespace polyherm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

void check_alpha(const AutoParams& ap) {
  if (!(ap.alpha > 0.0)) throw Error(ErrorCode::DomainError, "automorphic alpha must be positive");
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

cplx PsiFunction::xi() const { return 2.0 * kI * kPi * (ap.beta + n); }

cplx PsiFunction::poly_value(cplx z) const {
  return eval_family({ap.nu(), ap.alpha, xi()}, z, xi(), m)[m];
}

cplx PsiFunction::operator()(cplx z) const {
  return poly_value(z) * std::exp(ap.alpha * z * z + xi() * z);
}

cplx PsiFunction::periodic_part(cplx z) const {
  return poly_value(z) * std::exp(2.0 * kI * kPi * double(n) * z);
}

PsiFunction build_psi(const AutoParams& ap, int m, int n) {
  check_alpha(ap);
  if (m < 0) throw Error(ErrorCode::DomainError, "m must be nonnegative");
  PsiFunction f;
  f.ap = ap;
  f.m = m;
  f.n = n;
  f.poly_part = substitute_xi(build_recurrence({ap.nu(), ap.alpha, {}}, m), f.xi());
  f.exp_part = GaussPoly::quadratic(0.0, ap.alpha, 0.0, f.xi(), 0.0, 0.0);
  return f;
}

IdentityReport check_functional_eq(const AutoParams& ap, int m, int n, std::span<const cplx> z,
                                   int k_range, double tol) {
  if (k_range < 1) throw Error(ErrorCode::DomainError, "k_range must be at least 1");
  const PsiFunction psi = build_psi(ap, m, n);
  IdentityReport r;
  r.identity = "functional_equation";
  r.params = {ap.nu(), ap.alpha, psi.xi()};
  r.n_max = m;
  r.kind = IdentityKind::numeric;
  r.tolerance = tol;
  for (int k = -k_range; k <= k_range; ++k) {
    double worst = 0.0;
    for (const cplx w : z) {
      const cplx lhs = psi(w + double(k));
      const cplx rhs = std::exp(2.0 * kI * kPi * ap.beta * double(k) +
                                2.0 * ap.alpha * (w + k / 2.0) * double(k)) *
                       psi(w);
      const double scale = std::max(std::abs(lhs), std::abs(rhs));
      worst = std::max(worst, scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0);
    }
    r.per_n.emplace_back(k, worst);
    r.max_deviation = std::max(r.max_deviation, worst);
  }
  r.components.push_back({"shift_by_k", r.max_deviation, r.max_deviation <= tol, false});
  r.note = "per_n is indexed by the shift k";
  r.pass = r.max_deviation <= tol;
  return r;
}

IdentityReport check_eigen_strip(const AutoParams& ap, int m, int n, double tol) {
  const PsiFunction psi = build_psi(ap, m, n);
  const GaussPoly g = psi.form();
  const GaussPoly dzb = gp_diff(g, Var::zbar);
  const GaussPoly lap = gp_add(gp_mul(gp_diff(dzb, Var::z), TriPoly::constant(-1.0)),
                               gp_mul(dzb, TriPoly::monomial(ap.nu(), {0, 1, 0})));
  const TriPoly lhs = gp_divide_kernel(lap, g);
  const TriPoly rhs = poly_scale(psi.poly_part, ap.nu() * m);
  IdentityReport r;
  r.identity = "twisted_laplacian_eigen";
  r.params = {ap.nu(), ap.alpha, psi.xi()};
  r.n_max = m;
  r.kind = IdentityKind::symbolic;
  r.tolerance = tol;
  r.max_deviation = symbolic_deviation(lhs, rhs, psi.poly_part);
  r.per_n.emplace_back(m, r.max_deviation);
  r.components.push_back({"eigenvalue_2_alpha_m", r.max_deviation, r.max_deviation <= tol, false});
  r.note = "eigenvalue " + std::to_string(ap.nu() * m);
  r.pass = r.max_deviation <= tol;
  return r;
}

double strip_norm_closed_form(const AutoParams& ap, int m, int n) {
  const double b = ap.beta + n;
  return std::pow(ap.nu(), m) * factorial(m) * std::sqrt(kPi / ap.alpha) / 2.0 *
         std::exp(kPi * kPi * b * b / ap.alpha);
}

GramReport gram_strip(const AutoParams& ap, int M, std::pair<int, int> n_range, int gh_order,
                      int x_nodes, double offdiag_tol, double diag_tol) {
  if (!(ap.alpha > 0.0)) throw Error(ErrorCode::RegimeViolation, "strip Gram needs alpha > 0");
  const auto [n_lo, n_hi] = n_range;
  if (M < 0 || M > 8) throw Error(ErrorCode::DomainError, "M must be in [0, 8]");
  if (n_lo > n_hi || n_lo < -6 || n_hi > 6) {
    throw Error(ErrorCode::DomainError, "n range must lie within [-6, 6]");
  }
  if (gh_order == 0) gh_order = 2 * M + 16;
  if (gh_order < 2 * M + 16) throw Error(ErrorCode::OrderTooLow, "gh_order below 2M + 16");
  if (gh_order > 128) throw Error(ErrorCode::DomainError, "gh_order above 128");
  if (x_nodes < 64) throw Error(ErrorCode::OrderTooLow, "x_nodes below 64");

  std::vector<PsiFunction> basis;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int m = 0; m <= M; ++m) basis.push_back(build_psi(ap, m, n));
  }
  const int size = static_cast<int>(basis.size());

  // <psi_i, psi_j> = int F_i conj(F_j) exp(-4 alpha y^2 - 4 pi beta y), with the
  // exp(-2 pi (n_i + n_j) y) of the periodic parts folded into the Gaussian.
  const auto entry = [&](const PsiFunction& a, const PsiFunction& b, int gh, int xn) {
    const double c = kPi * (2.0 * ap.beta + a.n + b.n) / (4.0 * ap.alpha);
    const QuadratureRule ry = gauss_hermite(4.0 * ap.alpha, gh);
    cplx sum{};
    for (int k = 0; k < xn; ++k) {
      const double x = double(k) / xn;
      const cplx mode = std::exp(2.0 * kI * kPi * double(a.n - b.n) * x);
      cplx inner{};
      for (int l = 0; l < gh; ++l) {
        const cplx z{x, ry.nodes[l] - c};
        inner += ry.weights[l] * a.poly_value(z) * std::conj(b.poly_value(z));
      }
      sum += mode * inner;
    }
    return sum / double(xn) * std::exp(4.0 * ap.alpha * c * c);
  };

  GramReport r;
  r.kind = "strip";
  r.tolerance = offdiag_tol;
  r.matrix.assign(size, std::vector<cplx>(size));
  for (int i = 0; i < size; ++i) {
    for (int j = i; j < size; ++j) {
      r.matrix[i][j] = entry(basis[i], basis[j], gh_order, x_nodes);
      r.matrix[j][i] = std::conj(r.matrix[i][j]);
    }
    r.diag_expected.push_back(entry(basis[i], basis[i], 2 * gh_order, 2 * x_nodes).real());
  }
  finalize_gram(r);
  double closed = 0.0;
  for (int i = 0; i < size; ++i) {
    const double e = strip_norm_closed_form(ap, basis[i].m, basis[i].n);
    closed = std::max(closed, std::abs(r.diag_computed[i] - e) / e);
  }
  r.pass = r.max_offdiag <= offdiag_tol && r.max_diag_rel <= diag_tol;
  r.extras.emplace_back("diag_tolerance", diag_tol);
  r.extras.emplace_back("closed_form_max_rel", closed);
  r.note = "index (n - n_lo)(M + 1) + m; diag_expected from doubled quadrature resolution";
  return r;
}

}  // namespace polyherm
