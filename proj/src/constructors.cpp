#include "polyherm/constructors.hpp"

#include <cmath>
#include <string>

namespace polyherm {

namespace {

const cplx kI{0.0, 1.0};

void require_n(int n) {
  if (n < 0) throw Error(ErrorCode::DomainError, "n must be nonnegative");
}

void require_alpha(const ParamSet& p) {
  if (!p.is_alpha_nonzero()) {
    throw Error(ErrorCode::AlphaZero, "this construction requires alpha != 0");
  }
}

TriPoly linear(cplx cz, cplx czb, cplx cxi, cplx c0) {
  return TriPoly::from_terms(
      {{{0, 0, 0}, c0}, {{1, 0, 0}, cz}, {{0, 1, 0}, czb}, {{0, 0, 1}, cxi}});
}

// H^tau_0..H^tau_n composed with a TriPoly argument; tau may be any nonzero real.
std::vector<TriPoly> rescaled_family(double tau, int n, const TriPoly& arg) {
  std::vector<TriPoly> h;
  h.reserve(static_cast<std::size_t>(n) + 1);
  h.push_back(TriPoly::constant(1.0));
  if (n >= 1) h.push_back(arg * (2.0 * tau));
  for (int k = 1; k < n; ++k) {
    h.push_back(h[k] * arg * (2.0 * tau) - h[k - 1] * (2.0 * tau * k));
  }
  return h;
}

}  // namespace

cplx alpha_half_power(double alpha, int e) {
  const double r = std::sqrt(std::abs(alpha));
  const cplx s = alpha < 0 ? cplx{0.0, r} : cplx{r, 0.0};
  cplx out = std::pow(alpha, e / 2);
  if (e % 2 != 0) out *= s;
  return out;
}

TriPoly build_I1(const ParamSet& p) { return linear(-2.0 * p.alpha, p.nu, -1.0, 0.0); }

std::vector<TriPoly> recurrence_family(const ParamSet& p, int n_max) {
  require_n(n_max);
  std::vector<TriPoly> fam;
  fam.reserve(static_cast<std::size_t>(n_max) + 1);
  fam.push_back(TriPoly::constant(1.0));
  const TriPoly i1 = build_I1(p);
  if (n_max >= 1) fam.push_back(i1);
  for (int k = 1; k < n_max; ++k) {
    fam.push_back(i1 * fam[k] + fam[k - 1] * (2.0 * p.alpha * k));
  }
  return fam;
}

TriPoly build_recurrence(const ParamSet& p, int n) { return recurrence_family(p, n).back(); }

TriPoly build_operational(const ParamSet& p, int n) {
  require_n(n);
  const TriPoly i1 = build_I1(p);
  TriPoly t = TriPoly::constant(1.0);
  for (int k = 0; k < n; ++k) t = i1 * t - poly_diff(t, Var::z);
  return t;
}

TriPoly build_rodrigues(const ParamSet& p, int n) {
  require_n(n);
  const TriPoly q = TriPoly::from_terms(
      {{{1, 1, 0}, -p.nu}, {{2, 0, 0}, p.alpha}, {{1, 0, 1}, 1.0}});
  const GaussPoly kernel(TriPoly::constant(1.0), q);
  const GaussPoly d = gp_diff(kernel, Var::z, n);
  return gp_divide_kernel(d, kernel) * (n % 2 == 0 ? 1.0 : -1.0);
}

TriPoly build_rodrigues_second(const ParamSet& p, int n) {
  require_n(n);
  require_alpha(p);
  // d/dz [P(w) e^{w^2/4alpha}] = -2alpha (P' + w P / 2alpha) e^{w^2/4alpha};
  // with Q_k = (2 alpha)^k P_k this reads Q_{k+1} = 2 alpha Q_k' + w Q_k.
  std::vector<cplx> q{1.0};
  for (int k = 0; k < n; ++k) {
    std::vector<cplx> next(q.size() + 1);
    for (std::size_t j = 0; j < q.size(); ++j) next[j + 1] += q[j];
    for (std::size_t j = 1; j < q.size(); ++j) next[j - 1] += 2.0 * p.alpha * double(j) * q[j];
    q = std::move(next);
  }
  return compose(q, build_I1(p));
}

TriPoly build_explicit_hermite(const ParamSet& p, int n) {
  require_n(n);
  require_alpha(p);
  // (-i alpha^{1/2})^n c_j (L / (2 i alpha^{1/2}))^j = c_j (-i)^n i^{-j} 2^{-j} alpha^{(n-j)/2} L^j
  const HermiteCoeffs h = hermite(n);
  std::vector<cplx> d(h.coeffs.size());
  const cplx mi_n = std::pow(-kI, n);
  for (int j = 0; j <= n; ++j) {
    if (h.coeffs[j] == 0.0) continue;
    d[j] = h.coeffs[j] * mi_n * std::pow(-kI, j) * std::ldexp(1.0, -j) *
           alpha_half_power(p.alpha, n - j);
  }
  return compose(d, linear(2.0 * p.alpha, -p.nu, 1.0, 0.0));
}

TriPoly build_tensor(const ParamSet& p, int n) {
  require_n(n);
  if (!p.is_nondegenerate()) {
    throw Error(ErrorCode::DegenerateParams, "tensor form requires nu != +-2 alpha");
  }
  const double tx = p.nu - 2.0 * p.alpha;
  const double ty = p.nu + 2.0 * p.alpha;
  const TriPoly x = linear(0.5, 0.5, 0.0, -p.xi.real() / tx);
  const TriPoly y = linear(-0.5 * kI, 0.5 * kI, 0.0, p.xi.imag() / ty);
  const auto hx = rescaled_family(tx, n, x);
  const auto hy = rescaled_family(ty, n, y);
  TriPoly sum;
  double binom = 1.0;
  cplx phase = 1.0;
  for (int k = 0; k <= n; ++k) {
    sum += hx[n - k] * hy[k] * (binom * phase);
    binom = binom * (n - k) / (k + 1);
    phase *= -kI;
  }
  return sum * std::ldexp(1.0, -n);
}

cplx tensor_value(const ParamSet& p, int n, cplx z) {
  require_n(n);
  if (!p.is_nondegenerate()) {
    throw Error(ErrorCode::DegenerateParams, "tensor form requires nu != +-2 alpha");
  }
  // quad precision: for small |alpha|/nu the x and y factors are many orders
  // larger than their binomial sum
  using Quad = __float128;
  const double tx = p.nu - 2.0 * p.alpha;
  const double ty = p.nu + 2.0 * p.alpha;
  const auto family = [n](Quad tau, Quad t) {
    std::vector<Quad> h{1};
    if (n >= 1) h.push_back(2 * tau * t);
    for (int k = 1; k < n; ++k) h.push_back(2 * tau * (t * h[k] - k * h[k - 1]));
    return h;
  };
  const auto hx = family(tx, Quad(z.real()) - Quad(p.xi.real()) / tx);
  const auto hy = family(ty, Quad(z.imag()) + Quad(p.xi.imag()) / ty);
  // (-i)^k cycles through 1, -i, -1, i
  Quad re = 0, im = 0, binom = 1;
  for (int k = 0; k <= n; ++k) {
    const Quad term = binom * hx[n - k] * hy[k];
    switch (k % 4) {
      case 0: re += term; break;
      case 1: im -= term; break;
      case 2: re -= term; break;
      default: im += term;
    }
    binom = binom * (n - k) / (k + 1);
  }
  const double scale = std::ldexp(1.0, -n);
  return {static_cast<double>(re) * scale, static_cast<double>(im) * scale};
}

std::vector<TriPoly> build_holo_components(const ParamSet& p, int n) {
  require_n(n);
  require_alpha(p);
  // With m = n-k: (i alpha^{1/2})^m c_j (i alpha^{1/2} z + i xi/(2 alpha^{1/2}))^j
  //   = c_j i^{m+j} alpha^{(m-j)/2} (alpha z + xi/2)^j
  const TriPoly arg = linear(p.alpha, 0.0, 0.5, 0.0);
  std::vector<TriPoly> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  double binom = 1.0;  // C(n, k)
  for (int k = 0; k <= n; ++k) {
    const int m = n - k;
    const double pref = std::pow(p.nu, k) * binom;
    binom = binom * m / (k + 1);
    const HermiteCoeffs h = hermite(m);
    std::vector<cplx> d(h.coeffs.size());
    for (int j = 0; j <= m; ++j) {
      if (h.coeffs[j] == 0.0) continue;
      d[j] = pref * h.coeffs[j] * std::pow(kI, m + j) * alpha_half_power(p.alpha, m - j);
    }
    out.push_back(compose(d, arg));
  }
  return out;
}

TriPoly assemble_components(const std::vector<TriPoly>& components) {
  TriPoly sum;
  for (std::size_t k = 0; k < components.size(); ++k) {
    sum += components[k] * TriPoly::monomial(1.0, {0, static_cast<int>(k), 0});
  }
  return sum;
}

HermiteCoeffs hermite(int n) {
  require_n(n);
  std::vector<double> prev{1.0};
  if (n == 0) return {0, prev};
  std::vector<double> cur{0.0, 2.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2.0 * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= 2.0 * k * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, cur};
}

std::vector<double> hermite_rescaled(double tau, int n) {
  require_n(n);
  if (!(tau > 0.0)) throw Error(ErrorCode::DomainError, "tau must be positive");
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  std::vector<double> cur{0.0, 2.0 * tau};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2.0 * tau * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= 2.0 * tau * k * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

cplx hermite_eval(int n, cplx x) {
  require_n(n);
  cplx prev = 1.0;
  if (n == 0) return prev;
  cplx cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const cplx next = 2.0 * x * cur - 2.0 * double(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_function(double nu, int n, double t) {
  require_n(n);
  if (!(nu > 0.0)) throw Error(ErrorCode::DomainError, "nu must be positive");
  const double s = std::sqrt(nu);
  return std::pow(s, n) * std::exp(-0.5 * nu * t * t) * hermite_eval(n, s * t).real();
}

TriPoly complex_hermite(double nu, int m, int n) {
  require_n(m);
  require_n(n);
  if (nu == 0.0) throw Error(ErrorCode::DomainError, "nu must be nonzero");
  const GaussPoly g(TriPoly::monomial(1.0, {m, 0, 0}),
                    TriPoly::monomial(-nu, {1, 1, 0}));
  const GaussPoly d = gp_diff(g, Var::z, n);
  return d.prefactor() * (n % 2 == 0 ? 1.0 : -1.0);
}

TriPoly complex_hermite_standard(double nu, int m, int n) {
  return complex_hermite(nu, m, n) * std::pow(nu, m);
}

}  // namespace polyherm
