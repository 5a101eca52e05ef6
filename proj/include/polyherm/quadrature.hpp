#pragma once

#include <vector>

#include "polyherm/algebra.hpp"

namespace polyherm {

/// Nodes and weights integrating p(t) exp(-tau t^2) exactly for deg p < 2*order.
struct QuadratureRule {
  double tau = 1.0;
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch on the Hermite Jacobi matrix, Newton-polished and
/// symmetrized. Requires tau > 0 and 1 <= order <= 256.
QuadratureRule gauss_hermite(double tau, int order);

/// M_n = int t^n exp(-(t - c)^2 / (4 alpha)) dt; alpha > 0.
cplx gaussian_moment(cplx c, double alpha, int n);
/// M_0 .. M_{n_max}.
std::vector<cplx> gaussian_moments(cplx c, double alpha, int n_max);

/// Dense polynomial sum c[i][j] x^i y^j in real coordinates.
class XYPoly {
 public:
  XYPoly() = default;
  XYPoly(int deg_x, int deg_y);

  int deg_x() const { return dx_; }
  int deg_y() const { return dy_; }
  int total_degree() const;
  cplx& at(int i, int j) { return c_[idx(i, j)]; }
  cplx at(int i, int j) const { return c_[idx(i, j)]; }
  cplx operator()(double x, double y) const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dy_ + 1) +
           static_cast<std::size_t>(j);
  }
  int dx_ = 0;
  int dy_ = 0;
  std::vector<cplx> c_{cplx{}};
};

/// Rewrites a xi-free TriPoly in x = Re z, y = Im z. Throws DomainError if xi occurs.
XYPoly realify(const TriPoly& p);

/// Weight exp(-a x^2 - b y^2 + lx x + ly y), a, b > 0.
struct PlaneGaussianSpec {
  double a = 1.0;
  double b = 1.0;
  double lx = 0.0;
  double ly = 0.0;
};

/// Tensor rule for the weight of `spec`: the linear terms shift the nodes and
/// their exp(l^2/4a) gain is folded into the weights. Nodes are ordered with x
/// varying fastest.
struct PlaneRule {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> w;
};
PlaneRule plane_rule(const PlaneGaussianSpec& spec, int order);

/// Minimal Gauss-Hermite order accepted by integrate_plane_poly for degree deg.
int min_plane_order(int deg);

/// Tensor Gauss-Hermite value of int f w dx dy; inner sum over x, outer over y.
/// Throws OrderTooLow when order < ceil((deg f + 1)/2) + 2.
cplx integrate_plane_poly(const XYPoly& f, const PlaneGaussianSpec& spec, int order);

}  // namespace polyherm
