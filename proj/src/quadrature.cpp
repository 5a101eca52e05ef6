#include "polyherm/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace polyherm {

namespace {

// Orthonormal Hermite functions psi_0..psi_n at x (weight already folded in).
void hermite_functions(double x, int n, std::vector<double>& psi) {
  psi.assign(static_cast<std::size_t>(n) + 1, 0.0);
  psi[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (n >= 1) psi[1] = std::sqrt(2.0) * x * psi[0];
  for (int k = 1; k < n; ++k) {
    psi[k + 1] = std::sqrt(2.0 / (k + 1)) * x * psi[k] - std::sqrt(double(k) / (k + 1)) * psi[k - 1];
  }
}

}  // namespace

QuadratureRule gauss_hermite(double tau, int order) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw Error(ErrorCode::DomainError, "gauss_hermite: tau must be positive");
  }
  if (order < 1 || order > 256) {
    throw Error(ErrorCode::DomainError, "gauss_hermite: order must be in [1, 256]");
  }
  const int n = order;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) J(k, k - 1) = J(k - 1, k) = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J, Eigen::EigenvaluesOnly);
  std::vector<double> x(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(x.begin(), x.end());

  std::vector<double> psi;
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int it = 0; it < 3; ++it) {
      hermite_functions(x[i], n, psi);
      if (psi[n - 1] == 0.0) break;
      x[i] -= psi[n] / (std::sqrt(2.0 * n) * psi[n - 1]);
    }
    hermite_functions(x[i], n - 1, psi);
    double s = 0.0;
    for (double v : psi) s += v * v;
    w[i] = std::exp(-x[i] * x[i]) / s;
  }
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double xs = 0.5 * (x[j] - x[i]);
    const double ws = 0.5 * (w[i] + w[j]);
    x[i] = -xs;
    x[j] = xs;
    w[i] = w[j] = ws;
  }
  if (n % 2 == 1) x[n / 2] = 0.0;

  QuadratureRule r;
  r.tau = tau;
  r.order = n;
  const double s = 1.0 / std::sqrt(tau);
  for (int i = 0; i < n; ++i) {
    r.nodes.push_back(x[i] * s);
    r.weights.push_back(w[i] * s);
  }
  return r;
}

std::vector<cplx> gaussian_moments(cplx c, double alpha, int n_max) {
  if (!(alpha > 0.0)) {
    throw Error(ErrorCode::DomainError, "gaussian_moment: alpha must be positive");
  }
  if (n_max < 0) throw Error(ErrorCode::DomainError, "gaussian_moment: n must be nonnegative");
  std::vector<cplx> m(static_cast<std::size_t>(n_max) + 1);
  m[0] = 2.0 * std::sqrt(std::numbers::pi * alpha);
  if (n_max >= 1) m[1] = c * m[0];
  for (int k = 2; k <= n_max; ++k) m[k] = c * m[k - 1] + 2.0 * alpha * double(k - 1) * m[k - 2];
  return m;
}

cplx gaussian_moment(cplx c, double alpha, int n) { return gaussian_moments(c, alpha, n).back(); }

XYPoly::XYPoly(int deg_x, int deg_y)
    : dx_(deg_x), dy_(deg_y), c_(static_cast<std::size_t>(deg_x + 1) * (deg_y + 1)) {}

int XYPoly::total_degree() const {
  int d = 0;
  for (int i = 0; i <= dx_; ++i) {
    for (int j = 0; j <= dy_; ++j) {
      if (at(i, j) != cplx{}) d = std::max(d, i + j);
    }
  }
  return d;
}

cplx XYPoly::operator()(double x, double y) const {
  cplx sum{};
  double xp = 1.0;
  for (int i = 0; i <= dx_; ++i) {
    cplx row{};
    double yp = 1.0;
    for (int j = 0; j <= dy_; ++j) {
      row += at(i, j) * yp;
      yp *= y;
    }
    sum += row * xp;
    xp *= x;
  }
  return sum;
}

XYPoly realify(const TriPoly& p) {
  if (p.deg_xi() > 0) throw Error(ErrorCode::DomainError, "realify: polynomial depends on xi");
  const int d = p.total_degree();
  XYPoly out(d, d);
  // (x + i y)^a (x - i y)^b expanded by binomials.
  const int na = p.deg_z(), nb = p.deg_zbar();
  auto binom_powers = [](int n, cplx s) {
    // rows k: coefficients of x^{k-j} y^j in (x + s y)^k
    std::vector<std::vector<cplx>> rows(static_cast<std::size_t>(n) + 1);
    rows[0] = {1.0};
    for (int k = 1; k <= n; ++k) {
      rows[k].assign(static_cast<std::size_t>(k) + 1, cplx{});
      for (int j = 0; j < k; ++j) {
        rows[k][j] += rows[k - 1][j];
        rows[k][j + 1] += s * rows[k - 1][j];
      }
    }
    return rows;
  };
  const auto za = binom_powers(na, cplx{0.0, 1.0});
  const auto zb = binom_powers(nb, cplx{0.0, -1.0});
  for (const auto& [e, c] : p.terms()) {
    const auto& ra = za[e.z];
    const auto& rb = zb[e.zbar];
    for (int j1 = 0; j1 <= e.z; ++j1) {
      for (int j2 = 0; j2 <= e.zbar; ++j2) {
        const int jy = j1 + j2;
        const int ix = e.z + e.zbar - jy;
        out.at(ix, jy) += c * ra[j1] * rb[j2];
      }
    }
  }
  return out;
}

int min_plane_order(int deg) { return (deg + 2) / 2 + 2; }

PlaneRule plane_rule(const PlaneGaussianSpec& spec, int order) {
  if (!(spec.a > 0.0) || !(spec.b > 0.0)) {
    throw Error(ErrorCode::DomainError, "plane weight is not damped");
  }
  const QuadratureRule rx = gauss_hermite(spec.a, order);
  const QuadratureRule ry = gauss_hermite(spec.b, order);
  const double x0 = spec.lx / (2.0 * spec.a);
  const double y0 = spec.ly / (2.0 * spec.b);
  const double gain = std::exp(spec.lx * x0 / 2.0 + spec.ly * y0 / 2.0);
  PlaneRule r;
  for (int j = 0; j < order; ++j) {
    for (int i = 0; i < order; ++i) {
      r.x.push_back(rx.nodes[i] + x0);
      r.y.push_back(ry.nodes[j] + y0);
      r.w.push_back(rx.weights[i] * ry.weights[j] * gain);
    }
  }
  return r;
}

cplx integrate_plane_poly(const XYPoly& f, const PlaneGaussianSpec& spec, int order) {
  if (!(spec.a > 0.0) || !(spec.b > 0.0)) {
    throw Error(ErrorCode::DomainError, "integrate_plane_poly: weight is not damped");
  }
  const int deg = f.total_degree();
  if (order < min_plane_order(deg)) {
    throw Error(ErrorCode::OrderTooLow, "integrate_plane_poly: order below exactness threshold");
  }
  const QuadratureRule rx = gauss_hermite(spec.a, order);
  const QuadratureRule ry = gauss_hermite(spec.b, order);
  const double x0 = spec.lx / (2.0 * spec.a);
  const double y0 = spec.ly / (2.0 * spec.b);
  const double gain = std::exp(spec.lx * x0 / 2.0 + spec.ly * y0 / 2.0);
  cplx outer{};
  for (int j = 0; j < order; ++j) {
    const double y = ry.nodes[j] + y0;
    cplx inner{};
    for (int i = 0; i < order; ++i) inner += rx.weights[i] * f(rx.nodes[i] + x0, y);
    outer += ry.weights[j] * inner;
  }
  return outer * gain;
}

}  // namespace polyherm
