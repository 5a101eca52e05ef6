#pragma once

// Exact sparse polynomial ring in the commuting variables z, zbar, xi with
// complex double coefficients, plus polynomial-times-exponential forms that
// are closed under d/dz and d/dzbar.

#include <compare>
#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "polyherm/error.hpp"

namespace polyherm {

using cplx = std::complex<double>;

/// Real parameters nu, alpha and complex xi of I_n^{nu,alpha}(z, zbar | xi).
struct ParamSet {
  double nu = 1.0;
  double alpha = 0.0;
  cplx xi{0.0, 0.0};

  bool is_finite() const;
  bool is_alpha_nonzero() const { return alpha != 0.0; }
  /// 2|alpha| < nu.
  bool is_subcritical() const;
  /// nu != 2 alpha and nu != -2 alpha.
  bool is_nondegenerate() const;
};

/// Powers of z, zbar and xi.
struct Exponent {
  int z = 0;
  int zbar = 0;
  int xi = 0;

  int total() const { return z + zbar + xi; }

  friend bool operator==(const Exponent&, const Exponent&) = default;
  /// Graded lexicographic: total degree first, then (z, zbar, xi).
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (auto c = a.total() <=> b.total(); c != 0) return c;
    if (auto c = a.z <=> b.z; c != 0) return c;
    if (auto c = a.zbar <=> b.zbar; c != 0) return c;
    return a.xi <=> b.xi;
  }
};

enum class Var { z, zbar, xi };
enum class RingOp { add, sub, mul };

/// Coefficients whose magnitude falls below this are dropped (true underflow).
inline constexpr double kPruneThreshold = 1e-300;

class TriPoly {
 public:
  using Term = std::pair<Exponent, cplx>;

  TriPoly() = default;

  /// Sums duplicate exponents and prunes; input order is irrelevant.
  static TriPoly from_terms(std::vector<Term> terms);
  static TriPoly constant(cplx c);
  static TriPoly monomial(cplx c, Exponent e);
  static TriPoly var(Var v);

  /// Terms sorted in graded lexicographic order.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int deg_z() const;
  int deg_zbar() const;
  int deg_xi() const;
  int total_degree() const;

  cplx coeff(Exponent e) const;
  double max_abs_coeff() const;

  /// Substitutes zbar = conj(z); terms are summed in graded-lex order.
  cplx operator()(cplx z, cplx xi = cplx{}) const;

  TriPoly operator-() const;
  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly& operator*=(const TriPoly& o);
  TriPoly& operator*=(cplx c);

  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(TriPoly a, cplx c) { return a *= c; }
  friend TriPoly operator*(cplx c, TriPoly a) { return a *= c; }

  /// Bitwise equality of the stored term lists.
  friend bool operator==(const TriPoly&, const TriPoly&) = default;

 private:
  explicit TriPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

TriPoly poly_ring(const TriPoly& a, const TriPoly& b, RingOp op);
TriPoly poly_scale(const TriPoly& a, cplx c);
TriPoly poly_diff(const TriPoly& a, Var var);
/// k-fold partial derivative.
TriPoly poly_diff(const TriPoly& a, Var var, int k);
cplx poly_eval(const TriPoly& a, cplx z, cplx xi = cplx{});

/// Every coefficient of a-b is at most max(tol_abs, tol_rel * maxcoef), where
/// maxcoef is the largest coefficient magnitude of a and b.
bool poly_equal(const TriPoly& a, const TriPoly& b, double tol_abs, double tol_rel);

/// max |coef(a-b)| / max(|a|_max, |b|_max); zero when both are zero.
double poly_rel_deviation(const TriPoly& a, const TriPoly& b);

/// Complex conjugate as a function of (z, zbar, xi): swaps z with zbar,
/// conjugates coefficients; xi maps to conj(xi) which stays formal only when
/// the caller substitutes conjugated xi values.
TriPoly poly_conj(const TriPoly& a);

/// Replaces the formal xi by a number.
TriPoly substitute_xi(const TriPoly& a, cplx xi);

/// Swaps the roles of z and zbar (keeps coefficients).
TriPoly swap_z_zbar(const TriPoly& a);

/// sum_k coeffs[k] * arg^k by Horner's scheme.
TriPoly compose(std::span<const cplx> coeffs, const TriPoly& arg);

/// P * exp(q) with q of total (z, zbar)-degree at most two; q may carry
/// formal xi (e.g. the xi*z term of the Rodrigues kernel).
class GaussPoly {
 public:
  GaussPoly(TriPoly prefactor, TriPoly exponent);

  /// exp(c_zzb z zbar + c_zz z^2 + c_zbzb zbar^2 + c_z z + c_zb zbar + c_0).
  static TriPoly quadratic(cplx c_zzb, cplx c_zz, cplx c_zbzb, cplx c_z, cplx c_zb,
                           cplx c_0);

  const TriPoly& prefactor() const { return prefactor_; }
  const TriPoly& exponent() const { return exponent_; }

  cplx operator()(cplx z, cplx xi = cplx{}) const;

 private:
  TriPoly prefactor_;
  TriPoly exponent_;
};

/// d/dz or d/dzbar by the product rule: (dP + P dq) e^q.
GaussPoly gp_diff(const GaussPoly& g, Var var);
GaussPoly gp_diff(const GaussPoly& g, Var var, int k);
/// Multiplies the prefactor by a polynomial.
GaussPoly gp_mul(const GaussPoly& g, const TriPoly& p);
/// Sum of two forms sharing the same exponent.
GaussPoly gp_add(const GaussPoly& a, const GaussPoly& b);
/// Divides off the exponential of `ref`; requires identical exponents.
TriPoly gp_divide_kernel(const GaussPoly& g, const GaussPoly& ref);

}  // namespace polyherm
