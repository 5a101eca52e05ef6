#include "polyherm/transforms.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <string>

#include "polyherm/constructors.hpp"
#include "polyherm/error.hpp"
#include "polyherm/identities.hpp"
#include "polyherm/quadrature.hpp"

namespace polyherm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRefineTol = 1e-8;
constexpr cplx kI{0.0, 1.0};

double rel(cplx v, cplx ref) { return std::abs(v - ref) / std::max(1.0, std::abs(ref)); }

void check_n(int n) {
  if (n < 0) throw Error(ErrorCode::DomainError, "n must be nonnegative");
}

// Complex quadratic exponent in zeta = u + iv, stored in real coordinates.
struct Exponent2 {
  cplx uu, uv, vv, u, v, c;

  void add_abs2(cplx k) {
    uu += k;
    vv += k;
  }
  void add_zeta2(cplx k) {
    uu += k;
    vv -= k;
    uv += 2.0 * kI * k;
  }
  void add_zeta(cplx k) {
    u += k;
    v += kI * k;
  }
  void add_zetabar(cplx k) {
    u += k;
    v -= kI * k;
  }
};

// prefactor * int_C g(zeta, conj zeta) exp(E(zeta)) dlambda(zeta). The real
// plane is moved to the complex stationary point of E (the integrand is entire
// in u and v), then the real part of the quadratic form is the Gauss-Hermite
// weight in its principal axes. g receives zeta and conj(zeta) continued
// analytically as u + iv and u - iv.
template <class G>
cplx plane_quadrature(const Exponent2& e, const G& g, int order) {
  const cplx det = 4.0 * e.uu * e.vv - e.uv * e.uv;
  const cplx su = (-2.0 * e.vv * e.u + e.uv * e.v) / det;
  const cplx sv = (e.uv * e.u - 2.0 * e.uu * e.v) / det;
  const cplx at_saddle = e.c + 0.5 * (e.u * su + e.v * sv);
  Eigen::Matrix2d q;
  q << -e.uu.real(), -e.uv.real() / 2.0, -e.uv.real() / 2.0, -e.vv.real();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(q);
  const Eigen::Vector2d lam = es.eigenvalues();
  const Eigen::Matrix2d V = es.eigenvectors();
  const QuadratureRule r1 = gauss_hermite(lam(0), order);
  const QuadratureRule r2 = gauss_hermite(lam(1), order);
  cplx sum{};
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      const double pu = V(0, 0) * r1.nodes[i] + V(0, 1) * r2.nodes[j];
      const double pv = V(1, 0) * r1.nodes[i] + V(1, 1) * r2.nodes[j];
      const cplx rest =
          kI * (e.uu.imag() * pu * pu + e.uv.imag() * pu * pv + e.vv.imag() * pv * pv) +
          at_saddle;
      const cplx u = su + pu, v = sv + pv;
      sum += r1.weights[i] * r2.weights[j] * std::exp(rest) * g(u + kI * v, u - kI * v);
    }
  }
  return sum;
}

void require_damped(const Exponent2& e) {
  const double a = -e.uu.real(), b = -e.vv.real(), c = -e.uv.real() / 2.0;
  if (!(a > 0.0) || !(a * b - c * c > 0.0)) {
    throw Error(ErrorCode::RegimeViolation, "Gaussian part of the integrand is not damped");
  }
}

template <class G>
TransformResult refine_plane(const Exponent2& e, const G& g, cplx prefactor, int max_order) {
  if (max_order < 20 || max_order > 160) {
    throw Error(ErrorCode::DomainError, "max_order must lie in [20, 160]");
  }
  require_damped(e);
  TransformResult r;
  r.method = "quadrature";
  cplx prev{};
  double delta = 0.0;
  for (int order = 20; order <= max_order; order *= 2) {
    const cplx v = prefactor * plane_quadrature(e, g, order);
    if (order > 20) {
      delta = std::abs(v - prev);
      if (delta <= kRefineTol * std::max(1.0, std::abs(v))) {
        r.value = v;
        r.est_error = delta;
        r.order = order;
        return r;
      }
    }
    prev = v;
  }
  throw Error(ErrorCode::NoConvergence,
              "plane quadrature did not converge, last delta " + std::to_string(delta));
}

void check_ab(double nu, cplx a, cplx b) {
  if (!(nu > 0.0)) throw Error(ErrorCode::DomainError, "nu must be positive");
  const cplx ab = a * b;
  if (!(ab.real() > 0.0) || std::abs(ab.imag()) > 1e-12 * std::abs(ab)) {
    throw Error(ErrorCode::DomainError, "a b must be real and positive");
  }
}

cplx ipow(cplx x, int n) {
  cplx r = 1.0;
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

}  // namespace

TransformResult intrep_real(const ParamSet& p, int n, cplx z) {
  check_n(n);
  if (!(p.alpha > 0.0)) {
    throw Error(ErrorCode::AlphaNotPositive, "real-line representation needs alpha > 0");
  }
  if (!(p.nu > 0.0)) throw Error(ErrorCode::DomainError, "nu must be positive");
  const cplx i1 = p.nu * std::conj(z) - 2.0 * p.alpha * z - p.xi;
  // exp(-(2t - I_1)^2 / (4 alpha)) = exp(-(t - I_1/2)^2 / (4 (alpha/4)))
  TransformResult r;
  r.value = std::pow(2.0, n) / std::sqrt(p.alpha * kPi) * gaussian_moment(i1 / 2.0, p.alpha / 4.0, n);
  r.method = "moments";
  return r;
}

TransformResult intrep_plane(const ParamSet& p, int n, cplx z, cplx a, cplx b, int max_order) {
  check_n(n);
  check_ab(p.nu, a, b);
  const double nu = p.nu;
  Exponent2 e;
  e.add_abs2(-(a * b) / nu);
  e.add_zeta2(a * a * p.alpha / (nu * nu));
  e.add_zeta(-a * p.xi / nu + a * std::conj(z));
  e.add_zetabar(-b * z);
  e.c = nu * std::norm(z) - p.alpha * z * z - p.xi * z;
  const auto g = [&](cplx, cplx zb) { return ipow(b * zb, n); };
  return refine_plane(e, g, a * b / (nu * kPi), max_order);
}

std::string convention_name(TwistConvention c) {
  return c == TwistConvention::z_conj_zeta ? "Im(z conj(zeta))" : "Im(zeta conj(z))";
}

TransformResult intrep_twisted(const ParamSet& p, int n, cplx z, TwistConvention c,
                               int max_order) {
  check_n(n);
  if (!(p.nu > 0.0)) throw Error(ErrorCode::DomainError, "nu must be positive");
  if (!(std::abs(p.alpha) < p.nu)) {
    throw Error(ErrorCode::RegimeViolation, "twisted representation needs |alpha| < nu");
  }
  const double nu = p.nu;
  Exponent2 e;
  e.add_abs2(-nu);
  e.add_zeta2(p.alpha);
  e.add_zeta(p.xi);
  // 2i nu Im(z conj(zeta)) = nu (z conj(zeta) - conj(z) zeta)
  const double s = c == TwistConvention::z_conj_zeta ? 1.0 : -1.0;
  e.add_zeta(-s * nu * std::conj(z));
  e.add_zetabar(s * nu * z);
  e.c = nu * std::norm(z) - p.alpha * z * z - p.xi * z;
  const auto g = [&](cplx, cplx zb) { return ipow(-nu * zb, n); };
  return refine_plane(e, g, nu / kPi, max_order);
}

ConventionReport resolve_twist_convention(const ParamSet& p, double tol) {
  const std::pair<int, cplx> samples[] = {{0, {0.5, 0.5}}, {2, {1.0, -0.3}}, {3, {-0.7, 1.1}}};
  ConventionReport r;
  for (const auto& [n, z] : samples) {
    const cplx ref = eval_family(p, z, p.xi, n)[n];
    r.dev_z_conj_zeta = std::max(
        r.dev_z_conj_zeta, rel(intrep_twisted(p, n, z, TwistConvention::z_conj_zeta).value, ref));
    r.dev_zeta_conj_z = std::max(
        r.dev_zeta_conj_z, rel(intrep_twisted(p, n, z, TwistConvention::zeta_conj_z).value, ref));
  }
  r.chosen = r.dev_z_conj_zeta <= r.dev_zeta_conj_z ? TwistConvention::z_conj_zeta
                                                    : TwistConvention::zeta_conj_z;
  r.unique = (r.dev_z_conj_zeta <= tol) != (r.dev_zeta_conj_z <= tol);
  return r;
}

TransformResult complex_hermite_intrep(double nu, int m, int n, cplx z, cplx a, cplx b,
                                       int max_order) {
  check_n(m);
  check_n(n);
  check_ab(nu, a, b);
  Exponent2 e;
  e.add_abs2(-(a * b) / nu);
  e.add_zeta(a * std::conj(z));
  e.add_zetabar(-b * z);
  e.c = nu * std::norm(z);
  const auto g = [&](cplx zeta, cplx zb) { return ipow(zeta, m) * ipow(zb, n); };
  return refine_plane(e, g, a * b / (nu * kPi) * ipow(-a, m) * ipow(b, n), max_order);
}

TransformCheck verify_complex_hermite_intrep(double nu, int m, int n, cplx z, cplx a, cplx b,
                                             double tol) {
  TransformCheck c;
  c.result = complex_hermite_intrep(nu, m, n, z, a, b);
  c.reference = complex_hermite_standard(nu, m, n)(z);
  c.deviation = rel(c.result.value, c.reference);
  c.pass = c.deviation <= tol;
  return c;
}

cplx wigner_window(const ParamSet& p, cplx y) {
  const double nu = p.nu, al = p.alpha;
  return std::exp(-p.xi * p.xi / (2.0 * (nu + 2.0 * al)) -
                  nu / (nu + 2.0 * al) * ((nu - 2.0 * al) * y * y - 2.0 * p.xi * y));
}

TransformResult fourier_wigner(const ParamSet& p, int n, cplx z, int order) {
  check_n(n);
  const double nu = p.nu, al = p.alpha;
  if (!(nu > 0.0) || !p.is_subcritical()) {
    throw Error(ErrorCode::RegimeViolation, "Fourier-Wigner realization needs 2|alpha| < nu");
  }
  const int min_order = std::max(64, 2 * n + 32);
  if (order == 0) order = min_order;
  if (order < min_order) throw Error(ErrorCode::OrderTooLow, "order below max(64, 2n + 32)");
  if (order > 256) throw Error(ErrorCode::DomainError, "order above 256");
  const double x = z.real(), y = z.imag();
  const double q = nu + 2.0 * al;
  // Real Gaussian in t from the window and h^{2 nu}_n(t - x): exp(-A t^2 + B t - nu x^2).
  const double A = nu * (nu - 2.0 * al) / q + nu;
  const double B = 2.0 * nu * x + 2.0 * nu * p.xi.real() / q;
  const double t0 = B / (2.0 * A);
  const cplx log_pre = B * B / (4.0 * A) - nu * x * x + nu / 2.0 * std::norm(z) - al * z * z -
                       p.xi * z - p.xi * p.xi / (2.0 * q) - kI * nu * x * y;
  const cplx pre = std::pow(-0.5, n) * std::sqrt(2.0 * nu * nu / (q * kPi)) * std::exp(log_pre);
  const double hscale = std::pow(2.0 * nu, n / 2.0);
  const double root = std::sqrt(2.0 * nu);
  const auto eval = [&](int ord) {
    const QuadratureRule r = gauss_hermite(A, ord);
    cplx sum{};
    for (int k = 0; k < ord; ++k) {
      const double t = r.nodes[k] + t0;
      const cplx phase = std::exp(kI * (2.0 * nu * t * y + 2.0 * nu * t * p.xi.imag() / q));
      sum += r.weights[k] * phase * hermite_eval(n, root * (t - x)).real();
    }
    return pre * hscale * sum;
  };
  const int refine = order < 256 ? std::min(2 * order, 256) : 192;
  TransformResult res;
  res.method = "quadrature";
  res.value = eval(order);
  res.order = order;
  res.est_error = std::abs(eval(refine) - res.value);
  if (res.est_error > kRefineTol * std::max(1.0, std::abs(res.value))) {
    throw Error(ErrorCode::NoConvergence,
                "Fourier-Wigner quadrature unstable under refinement, delta " +
                    std::to_string(res.est_error));
  }
  return res;
}

TransformResult mehler_kernel(double tau, cplx lambda, cplx X, cplx Y, int k_trunc, double tol) {
  if (!(tau > 0.0)) throw Error(ErrorCode::DomainError, "tau must be positive");
  if (!(std::abs(lambda) < 1.0)) throw Error(ErrorCode::DomainError, "|lambda| must be below 1");
  if (k_trunc < 0) throw Error(ErrorCode::DomainError, "k_trunc must be nonnegative");
  // h^tau_k(X) h^tau_k(Y) / (2^k tau^k k!) = exp(-tau(X^2+Y^2)/2) phi_k(s) phi_k(r),
  // phi_k = H_k / sqrt(2^k k!), s = sqrt(tau) X, r = sqrt(tau) Y.
  const double st = std::sqrt(tau);
  const cplx s = st * X, r = st * Y;
  const cplx gauss = std::exp(-tau * (X * X + Y * Y) / 2.0);
  cplx px0 = 1.0, py0 = 1.0;
  cplx px1 = std::sqrt(2.0) * s, py1 = std::sqrt(2.0) * r;
  cplx lk = 1.0, sum = 1.0, last = 1.0;
  for (int k = 1; k <= k_trunc; ++k) {
    lk *= lambda;
    last = lk * px1 * py1;
    sum += last;
    const double c1 = std::sqrt(2.0 / (k + 1)), c0 = std::sqrt(double(k) / (k + 1));
    const cplx nx = c1 * s * px1 - c0 * px0;
    const cplx ny = c1 * r * py1 - c0 * py0;
    px0 = px1;
    px1 = nx;
    py0 = py1;
    py1 = ny;
  }
  TransformResult res;
  res.value = gauss * sum;
  res.method = "series";
  res.order = k_trunc + 1;
  res.est_error = std::abs(gauss * last);
  if (k_trunc > 0 && res.est_error / std::max(1.0, std::abs(res.value)) > tol / 10.0) {
    throw Error(ErrorCode::TruncationInsufficient,
                "Mehler series not converged at k_trunc = " + std::to_string(k_trunc));
  }
  return res;
}

cplx mehler_closed_form(double tau, cplx lambda, cplx X, cplx Y) {
  const cplx d = 1.0 - lambda * lambda;
  return std::exp(-tau * (1.0 + lambda * lambda) / (2.0 * d) * (X * X + Y * Y) +
                  2.0 * tau * lambda / d * X * Y) /
         std::sqrt(d);
}

TransformCheck verify_mehler(double tau, cplx lambda, cplx X, cplx Y, int k_trunc, double tol) {
  TransformCheck c;
  c.result = mehler_kernel(tau, lambda, X, Y, k_trunc, tol);
  c.reference = mehler_closed_form(tau, lambda, X, Y);
  c.deviation = rel(c.result.value, c.reference);
  c.pass = c.deviation <= tol;
  return c;
}

TransformCheck verify_mehler_window(const ParamSet& p, double Y, int k_trunc, double tol) {
  if (p.alpha == 0.0) throw Error(ErrorCode::AlphaZero, "window check needs alpha != 0");
  if (!(p.nu > 0.0) || !p.is_subcritical()) {
    throw Error(ErrorCode::RegimeViolation, "window check needs 2|alpha| < nu");
  }
  const double nu = p.nu, al = p.alpha;
  const cplx sa = alpha_half_power(al, 1);
  const cplx lambda = -kI * std::sqrt(2.0 / nu) * sa;
  const cplx X = kI * p.xi / (2.0 * std::sqrt(2.0 * nu) * sa);
  TransformCheck c;
  c.result = mehler_kernel(2.0 * nu, lambda, X, Y, k_trunc, tol);
  c.reference = std::exp(p.xi * p.xi / (8.0 * al)) * std::sqrt(nu / (nu + 2.0 * al)) *
                wigner_window(p, Y);
  c.deviation = rel(c.result.value, c.reference);
  c.pass = c.deviation <= tol;
  return c;
}

}  // namespace polyherm
