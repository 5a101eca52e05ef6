#include "polyherm/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "polyherm/constructors.hpp"

namespace polyherm {

namespace {

constexpr double kSymbolicTol = 1e-10;
const cplx kI{0.0, 1.0};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Collects per-n and per-component deviations and derives the pass flag.
class Recorder {
 public:
  Recorder(IdentityReport& r) : r_(r) {}

  void add(const std::string& name, int n, double dev, bool informational = false) {
    auto it = std::find_if(r_.components.begin(), r_.components.end(),
                           [&](const IdentityComponent& c) { return c.name == name; });
    if (it == r_.components.end()) {
      r_.components.push_back({name, 0.0, true, informational});
      it = std::prev(r_.components.end());
    }
    it->max_deviation = std::max(it->max_deviation, dev);
    it->pass = it->max_deviation <= r_.tolerance;
    if (informational) return;
    auto pn = std::find_if(r_.per_n.begin(), r_.per_n.end(),
                           [n](const auto& e) { return e.first == n; });
    if (pn == r_.per_n.end()) {
      r_.per_n.emplace_back(n, dev);
    } else {
      pn->second = std::max(pn->second, dev);
    }
    r_.max_deviation = std::max(r_.max_deviation, dev);
  }

  void finish() {
    std::sort(r_.per_n.begin(), r_.per_n.end());
    r_.pass = r_.error.empty() && r_.max_deviation <= r_.tolerance;
    if (r_.tail_proxy && *r_.tail_proxy > r_.tolerance / 10) {
      r_.pass = false;
      if (r_.error.empty()) r_.error = std::string(error_name(ErrorCode::TruncationInsufficient));
    }
  }

 private:
  IdentityReport& r_;
};

IdentityReport make_report(const std::string& id, const ParamSet& p, int n_max, IdentityKind kind,
                           double tol) {
  IdentityReport r;
  r.identity = id;
  r.params = p;
  r.n_max = n_max;
  r.kind = kind;
  r.tolerance = tol;
  return r;
}

void require_nonneg(int n, const char* what) {
  if (n < 0) throw Error(ErrorCode::DomainError, std::string(what) + " must be nonnegative");
}

TriPoly lower(const std::vector<TriPoly>& fam, int n) {
  return n >= 1 ? fam[n - 1] : TriPoly{};
}

}  // namespace

double symbolic_deviation(const TriPoly& lhs, const TriPoly& rhs, const TriPoly& ref) {
  const double scale =
      std::max({lhs.max_abs_coeff(), rhs.max_abs_coeff(), ref.max_abs_coeff()});
  const double diff = (lhs - rhs).max_abs_coeff();
  if (diff == 0.0) return 0.0;
  return scale > 0.0 ? diff / scale : diff;
}

std::vector<cplx> eval_family(const ParamSet& p, cplx z, cplx xi, int n_max) {
  require_nonneg(n_max, "n_max");
  std::vector<cplx> v(static_cast<std::size_t>(n_max) + 1);
  v[0] = 1.0;
  const cplx i1 = p.nu * std::conj(z) - 2.0 * p.alpha * z - xi;
  if (n_max >= 1) v[1] = i1;
  for (int k = 1; k < n_max; ++k) v[k + 1] = i1 * v[k] + 2.0 * p.alpha * double(k) * v[k - 1];
  return v;
}

IdentityReport verify_derivative_identities(const ParamSet& p, int n_max) {
  if (n_max < 1) throw Error(ErrorCode::DomainError, "n_max must be at least 1");
  IdentityReport r = make_report("derivatives", p, n_max, IdentityKind::symbolic, kSymbolicTol);
  Recorder rec(r);
  const auto fam = recurrence_family(p, n_max + 1);
  const TriPoly& i1 = fam[1];
  const double nu = p.nu, a = p.alpha;

  const TriPoly xi = TriPoly::var(Var::xi);
  const TriPoly nuzb = TriPoly::monomial(nu, {0, 1, 0});
  GaussPoly op_exp(TriPoly::constant(1.0), TriPoly::from_terms({{{2, 0, 0}, a}, {{1, 0, 1}, 1.0}}));
  const GaussPoly kernel_exp = op_exp;
  GaussPoly op_shift(TriPoly::constant(1.0), TriPoly::monomial(a, {2, 0, 0}));
  const GaussPoly kernel_shift = op_shift;
  TriPoly op_i1 = TriPoly::constant(1.0);

  for (int n = 0; n <= n_max; ++n) {
    const TriPoly& in = fam[n];
    const TriPoly dz = poly_diff(in, Var::z);
    const TriPoly dzb = poly_diff(in, Var::zbar);
    const TriPoly dxi = poly_diff(in, Var::xi);
    const TriPoly prev = lower(fam, n);

    rec.add("raise_z", n, symbolic_deviation(dz, i1 * in - fam[n + 1], fam[n + 1]));
    rec.add("lower_zbar", n, symbolic_deviation(dzb, prev * (nu * n), in));
    rec.add("appell_z", n, symbolic_deviation(dz, prev * (-2.0 * a * n), in));
    rec.add("xi_derivative", n, symbolic_deviation(dxi * (2.0 * a), dz, in));
    rec.add("xi_recurrence", n,
            symbolic_deviation(fam[n + 1], i1 * in - dxi * (2.0 * a), fam[n + 1]));

    TriPoly dk_zb = in, dk_z = in;
    double falling = 1.0;  // n! / (n-k)!
    for (int k = 0; k <= n; ++k) {
      rec.add("kth_zbar_derivative", n,
              symbolic_deviation(dk_zb, fam[n - k] * (falling * std::pow(nu, k)), in));
      rec.add("kth_z_derivative", n,
              symbolic_deviation(dk_z, fam[n - k] * (falling * std::pow(-2.0 * a, k)), in));
      dk_zb = poly_diff(dk_zb, Var::zbar);
      dk_z = poly_diff(dk_z, Var::z);
      falling *= (n - k);
    }

    rec.add("lowering_sum", n, symbolic_deviation(dz + dzb, prev * ((nu - 2 * a) * n), in));
    rec.add("lowering_difference", n,
            symbolic_deviation(dzb - dz, prev * ((nu + 2 * a) * n), in));
    rec.add("lowering_difference_opposite_sign", n,
            symbolic_deviation(dz - dzb, prev * ((nu + 2 * a) * n), in), true);
    rec.add("kernel", n, symbolic_deviation(dz * nu + dzb * (2 * a), TriPoly{}, dz * nu));

    rec.add("operational_exp", n, symbolic_deviation(gp_divide_kernel(op_exp, kernel_exp), in));
    rec.add("operational_shifted", n,
            symbolic_deviation(gp_divide_kernel(op_shift, kernel_shift), in));
    rec.add("operational_I1", n, symbolic_deviation(op_i1, in));

    // advance the operational forms
    op_exp = GaussPoly(op_exp.prefactor() * nuzb - gp_diff(op_exp, Var::z).prefactor(),
                       op_exp.exponent());
    op_shift = GaussPoly(op_shift.prefactor() * (nuzb - xi) - gp_diff(op_shift, Var::z).prefactor(),
                         op_shift.exponent());
    op_i1 = i1 * op_i1 - poly_diff(op_i1, Var::z);
  }
  r.note = "lowering_difference uses (d/dzbar - d/dz); the (d/dz - d/dzbar) form holds only with the opposite sign";
  rec.finish();
  return r;
}

IdentityReport verify_recurrence(const ParamSet& p, int n_max) {
  require_nonneg(n_max, "n_max");
  IdentityReport r = make_report("recurrence", p, n_max, IdentityKind::symbolic, kSymbolicTol);
  Recorder rec(r);
  // family from the first Rodrigues formula
  const TriPoly q = TriPoly::from_terms(
      {{{1, 1, 0}, -p.nu}, {{2, 0, 0}, p.alpha}, {{1, 0, 1}, 1.0}});
  GaussPoly g(TriPoly::constant(1.0), q);
  std::vector<TriPoly> fam;
  for (int n = 0; n <= n_max; ++n) {
    fam.push_back(g.prefactor() * (n % 2 == 0 ? 1.0 : -1.0));
    g = gp_diff(g, Var::z);
  }
  rec.add("initial", 0, symbolic_deviation(fam[0], TriPoly::constant(1.0)));
  if (n_max >= 1) rec.add("initial", 1, symbolic_deviation(fam[1], build_I1(p)));
  for (int n = 1; n < n_max; ++n) {
    rec.add("three_term", n + 1,
            symbolic_deviation(fam[n + 1], fam[1] * fam[n] + fam[n - 1] * (2.0 * p.alpha * n),
                               fam[n + 1]));
  }
  rec.finish();
  return r;
}

IdentityReport verify_rodrigues_second(const ParamSet& p, int n_max) {
  require_nonneg(n_max, "n_max");
  IdentityReport r = make_report("rodrigues_second", p, n_max, IdentityKind::symbolic, kSymbolicTol);
  Recorder rec(r);
  if (!p.is_alpha_nonzero()) {
    r.error = std::string(error_name(ErrorCode::AlphaZero));
    r.note = "second Rodrigues formula needs alpha != 0";
    rec.finish();
    return r;
  }
  const auto fam = recurrence_family(p, n_max);
  for (int n = 0; n <= n_max; ++n) {
    rec.add("second_rodrigues", n, symbolic_deviation(build_rodrigues_second(p, n), fam[n]));
  }
  rec.finish();
  return r;
}

namespace {

void nielsen_into(Recorder& rec, const std::vector<TriPoly>& fam, double alpha, int m, int n) {
  TriPoly rhs;
  double c = 1.0;  // m! n! / (k! (m-k)! (n-k)!) * (2 alpha)^k
  for (int k = 0; k <= std::min(m, n); ++k) {
    rhs += fam[m - k] * fam[n - k] * c;
    c *= 2.0 * alpha * (m - k) * (n - k) / (k + 1);
  }
  rec.add("nielsen", m + n, symbolic_deviation(fam[m + n], rhs));
}

}  // namespace

IdentityReport verify_nielsen(const ParamSet& p, int m, int n) {
  require_nonneg(m, "m");
  require_nonneg(n, "n");
  IdentityReport r = make_report("nielsen", p, m + n, IdentityKind::symbolic, kSymbolicTol);
  Recorder rec(r);
  nielsen_into(rec, recurrence_family(p, m + n), p.alpha, m, n);
  rec.finish();
  return r;
}

IdentityReport verify_nielsen_all(const ParamSet& p, int n_max) {
  require_nonneg(n_max, "n_max");
  IdentityReport r = make_report("nielsen", p, n_max, IdentityKind::symbolic, kSymbolicTol);
  Recorder rec(r);
  const auto fam = recurrence_family(p, n_max);
  for (int m = 0; m <= n_max; ++m) {
    for (int n = m; m + n <= n_max; ++n) nielsen_into(rec, fam, p.alpha, m, n);
  }
  rec.finish();
  return r;
}

IdentityReport verify_pde(const ParamSet& p, int n_max) {
  require_nonneg(n_max, "n_max");
  IdentityReport r = make_report("pde", p, n_max, IdentityKind::symbolic, kSymbolicTol);
  Recorder rec(r);
  const auto fam = recurrence_family(p, std::max(n_max, 1));
  const TriPoly& i1 = fam[1];
  for (int n = 0; n <= n_max; ++n) {
    const TriPoly& in = fam[n];
    const TriPoly dz = poly_diff(in, Var::z);
    const TriPoly dzb = poly_diff(in, Var::zbar);
    const TriPoly mixed = poly_diff(dz, Var::zbar);
    const TriPoly delta = i1 * dzb - mixed;
    // (-d/dz + I_1) d/dz; the mixed form -d/dz d/dzbar + I_1 d/dz is reported separately
    const TriPoly delta_t = i1 * dz - poly_diff(dz, Var::z);
    const TriPoly delta_t_mixed = i1 * dz - mixed;
    rec.add("laplacian_zbar", n, symbolic_deviation(delta, in * (p.nu * n), in));
    rec.add("laplacian_z", n, symbolic_deviation(delta_t, in * (-2.0 * p.alpha * n), in));
    rec.add("laplacian_sum", n,
            symbolic_deviation(delta + delta_t, in * ((p.nu - 2.0 * p.alpha) * n), in));
    rec.add("laplacian_difference", n,
            symbolic_deviation(delta - delta_t, in * ((p.nu + 2.0 * p.alpha) * n), in));
    rec.add("laplacian_z_mixed_form", n,
            symbolic_deviation(delta_t_mixed, in * (-2.0 * p.alpha * n), in), true);
  }
  r.note = "laplacian_z uses (-d/dz + I_1) d/dz; the mixed-derivative form is reported separately";
  rec.finish();
  return r;
}

namespace {

void order_into(Recorder& rec, IdentityReport& r, const ParamSet& p, const TriPoly& in, int n) {
  const double scale = std::max(1.0, in.max_abs_coeff());
  if (p.nu != 0.0) {
    const TriPoly dn = poly_diff(in, Var::zbar, n);
    rec.add("zbar_order", n, poly_diff(dn, Var::zbar).max_abs_coeff() / scale);
    rec.add("zbar_top", n,
            symbolic_deviation(dn, TriPoly::constant(factorial(n) * std::pow(p.nu, n))));
  }
  if (p.alpha != 0.0) {
    const TriPoly dn = poly_diff(in, Var::z, n);
    rec.add("z_order", n, poly_diff(dn, Var::z).max_abs_coeff() / scale);
    rec.add("z_top", n,
            symbolic_deviation(dn, TriPoly::constant(factorial(n) * std::pow(-2.0 * p.alpha, n))));
  } else if (r.note.empty()) {
    r.note = "alpha = 0: the z-half is trivial and skipped";
  }
}

}  // namespace

IdentityReport verify_polyanalytic_order(const ParamSet& p, int n) {
  require_nonneg(n, "n");
  IdentityReport r = make_report("polyanalytic_order", p, n, IdentityKind::symbolic, kSymbolicTol);
  Recorder rec(r);
  order_into(rec, r, p, build_recurrence(p, n), n);
  rec.finish();
  return r;
}

IdentityReport verify_polyanalytic_order_all(const ParamSet& p, int n_max) {
  require_nonneg(n_max, "n_max");
  IdentityReport r =
      make_report("polyanalytic_order", p, n_max, IdentityKind::symbolic, kSymbolicTol);
  Recorder rec(r);
  const auto fam = recurrence_family(p, n_max);
  for (int n = 0; n <= n_max; ++n) order_into(rec, r, p, fam[n], n);
  rec.finish();
  return r;
}

std::string gf_kind_name(GfKind kind) {
  switch (kind) {
    case GfKind::single: return "gf_single";
    case GfKind::double_sum: return "gf_double";
    case GfKind::mixed: return "gf_mixed";
    case GfKind::bilinear: return "gf_bilinear";
    case GfKind::dk_exp: return "dk_exp";
    case GfKind::entire_exp: return "entire_exp";
  }
  return "gf";
}

namespace {

double rel(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)); }

// (-i)^k alpha^{k/2} H_k(i xi / (2 alpha^{1/2}))
std::vector<cplx> exp_taylor_numbers(double alpha, cplx xi, int k_max) {
  const cplx s = alpha_half_power(alpha, 1);
  const cplx x = kI * xi / (2.0 * s);
  std::vector<cplx> q(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    q[k] = std::pow(-kI, k) * alpha_half_power(alpha, k) * hermite_eval(k, x);
  }
  return q;
}

// Quoted complex Hermite values H_{n,k}(z) for n < rows, k <= cols, built lazily.
class ComplexHermiteTable {
 public:
  ComplexHermiteTable(double nu, int k_max, cplx z) : nu_(nu), k_max_(k_max), z_(z) {}

  cplx operator()(int n, int k) {
    while (static_cast<int>(rows_.size()) <= n) {
      const int row = static_cast<int>(rows_.size());
      std::vector<cplx> v(static_cast<std::size_t>(k_max_) + 1);
      for (int j = 0; j <= k_max_; ++j) v[j] = complex_hermite(nu_, row, j)(z_);
      rows_.push_back(std::move(v));
    }
    return rows_[n][k];
  }

 private:
  double nu_;
  int k_max_;
  cplx z_;
  std::vector<std::vector<cplx>> rows_;
};

constexpr int kAdaptiveCap = 400;

}  // namespace

IdentityReport verify_generating_functions(const ParamSet& p, GfKind kind,
                                           std::span<const GfPoint> points, int n_trunc,
                                           double tol, int m_max) {
  if (n_trunc < 10) throw Error(ErrorCode::DomainError, "n_trunc must be at least 10");
  if (!(tol > 0.0)) throw Error(ErrorCode::DomainError, "tolerance must be positive");
  for (const auto& pt : points) {
    if (std::abs(pt.t) > 1.0 || std::abs(pt.u) > 1.0 || std::abs(pt.v) > 1.0) {
      throw Error(ErrorCode::DomainError, "series variables must satisfy |t|,|u|,|v| <= 1");
    }
  }
  const bool needs_alpha = kind == GfKind::mixed || kind == GfKind::bilinear ||
                           kind == GfKind::dk_exp || kind == GfKind::entire_exp;
  if (needs_alpha && !p.is_alpha_nonzero()) {
    throw Error(ErrorCode::AlphaZero, gf_kind_name(kind) + " requires alpha != 0");
  }
  if ((kind == GfKind::mixed || kind == GfKind::bilinear) && p.nu == 0.0) {
    throw Error(ErrorCode::DomainError, gf_kind_name(kind) + " requires nu != 0");
  }

  const bool symbolic = kind == GfKind::dk_exp;
  IdentityReport r = make_report(gf_kind_name(kind), p, symbolic ? n_trunc : m_max,
                                 symbolic ? IdentityKind::symbolic : IdentityKind::numeric,
                                 symbolic ? kSymbolicTol : tol);
  Recorder rec(r);
  const cplx xi = p.xi;
  double tail = 0.0;

  switch (kind) {
    case GfKind::single: {
      r.n_max = n_trunc;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i];
        const auto vals = eval_family(p, pt.z, xi, n_trunc);
        cplx sum{}, w = 1.0;
        cplx last{};
        for (int n = 0; n <= n_trunc; ++n) {
          last = w * vals[n];
          sum += last;
          w *= pt.t / double(n + 1);
        }
        const cplx rhs = std::exp(p.alpha * pt.t * pt.t + pt.t * vals[1]);
        rec.add("series", static_cast<int>(i), rel(sum, rhs));
        tail = std::max(tail, std::abs(last) / std::max(1.0, std::abs(rhs)));
      }
      r.tail_proxy = tail;
      r.note = "per_n is keyed by evaluation point";
      break;
    }
    case GfKind::double_sum: {
      r.n_max = n_trunc;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i];
        const auto vals = eval_family(p, pt.z, xi, 2 * n_trunc);
        std::vector<cplx> pu(static_cast<std::size_t>(n_trunc) + 1), pv(pu.size());
        pu[0] = pv[0] = 1.0;
        for (int k = 1; k <= n_trunc; ++k) {
          pu[k] = pu[k - 1] * pt.u / double(k);
          pv[k] = pv[k - 1] * pt.v / double(k);
        }
        cplx sum{};
        double edge = 0.0;
        for (int m = 0; m <= n_trunc; ++m) {
          for (int n = 0; n <= n_trunc; ++n) {
            const cplx term = pu[m] * pv[n] * vals[m + n];
            sum += term;
            if (m == n_trunc || n == n_trunc) edge = std::max(edge, std::abs(term));
          }
        }
        const cplx s = pt.u + pt.v;
        const cplx rhs = std::exp(p.alpha * s * s + s * vals[1]);
        rec.add("series", static_cast<int>(i), rel(sum, rhs));
        tail = std::max(tail, edge / std::max(1.0, std::abs(rhs)));
      }
      r.tail_proxy = tail;
      r.note = "per_n is keyed by evaluation point";
      break;
    }
    case GfKind::mixed:
    case GfKind::bilinear: {
      const cplx s = alpha_half_power(p.alpha, 1);
      const auto q = exp_taylor_numbers(p.alpha, xi, kAdaptiveCap);
      double dev_quoted = 0.0;
      for (const auto& pt : points) {
        ComplexHermiteTable table(p.nu, m_max, pt.z);
        const auto vals = eval_family(p, pt.z, xi, m_max);
        for (int m = 0; m <= m_max; ++m) {
          // reading A: standard normalization nu^n * quoted; reading B: the quoted normalization.
          cplx sum_a{}, sum_b{};
          double last = 0.0;
          int n = 0;
          std::vector<cplx> hol(static_cast<std::size_t>(m) + 1);
          if (kind == GfKind::mixed) {
            for (int k = 0; k <= m; ++k) {
              double binom = 1.0;
              for (int j = 0; j < k; ++j) binom = binom * (m - j) / (j + 1);
              hol[k] = binom * std::pow(kI * s, m - k) * hermite_eval(m - k, kI * s * pt.z);
            }
          }
          cplx coef = 1.0;  // xi^n / n!  or  q_n / n!
          double inv_fact = 1.0;
          double nu_pow = 1.0;
          int small_run = 0;
          for (n = 0; n < kAdaptiveCap; ++n) {
            cplx term_q{};
            if (kind == GfKind::mixed) {
              coef = n == 0 ? cplx{1.0} : coef * xi / double(n);
              for (int k = 0; k <= m; ++k) term_q += hol[k] * table(n, k);
            } else {
              if (n > 0) inv_fact /= n;
              coef = q[n] * inv_fact;
              term_q = table(n, m);
            }
            const cplx ta = coef * term_q;
            const cplx tb = ta / nu_pow;
            sum_a += ta;
            sum_b += tb;
            nu_pow *= p.nu;
            last = std::abs(ta);
            const double scale = std::max(1.0, std::abs(sum_a));
            small_run = (last <= 1e-17 * scale) ? small_run + 1 : 0;
            if (n >= n_trunc && small_run >= 3) break;
          }
          const cplx rhs = kind == GfKind::mixed
                               ? std::exp(xi * pt.z) * vals[m]
                               : vals[m] * std::exp(p.alpha * pt.z * pt.z + xi * pt.z);
          rec.add("standard_normalization", m, rel(sum_a, rhs));
          dev_quoted = std::max(dev_quoted, rel(sum_b, rhs));
          rec.add("quoted_normalization", m, rel(sum_b, rhs), true);
          tail = std::max(tail, last / std::max(1.0, std::abs(rhs)));
        }
      }
      r.tail_proxy = tail;
      r.note = std::string("reading with standard-normalized complex Hermite ") +
               (r.max_deviation <= tol ? "matches" : "does not match") +
               "; reading with the quoted normalization " +
               (dev_quoted <= tol ? "matches" : "does not match");
      break;
    }
    case GfKind::entire_exp: {
      r.n_max = n_trunc;
      const auto q = exp_taylor_numbers(p.alpha, xi, n_trunc);
      for (std::size_t i = 0; i < points.size(); ++i) {
        const cplx z = points[i].z;
        cplx sum{}, w = 1.0, last{};
        for (int n = 0; n <= n_trunc; ++n) {
          last = q[n] * w;
          sum += last;
          w *= z / double(n + 1);
        }
        const cplx rhs = std::exp(p.alpha * z * z + xi * z);
        rec.add("series", static_cast<int>(i), rel(sum, rhs));
        tail = std::max(tail, std::abs(last) / std::max(1.0, std::abs(rhs)));
      }
      r.tail_proxy = tail;
      r.note = "per_n is keyed by evaluation point";
      break;
    }
    case GfKind::dk_exp: {
      const cplx s = alpha_half_power(p.alpha, 1);
      const TriPoly arg = TriPoly::from_terms({{{1, 0, 0}, kI * s}, {{0, 0, 1}, kI / (2.0 * s)}});
      GaussPoly g(TriPoly::constant(1.0),
                  TriPoly::from_terms({{{2, 0, 0}, p.alpha}, {{1, 0, 1}, 1.0}}));
      for (int k = 0; k <= n_trunc; ++k) {
        const HermiteCoeffs h = hermite(k);
        std::vector<cplx> c(h.coeffs.size());
        const cplx pref = std::pow(-kI, k) * alpha_half_power(p.alpha, k);
        for (int j = 0; j <= k; ++j) c[j] = pref * h.coeffs[j];
        rec.add("kth_derivative", k, symbolic_deviation(g.prefactor(), compose(c, arg)));
        g = gp_diff(g, Var::z);
      }
      break;
    }
  }
  rec.finish();
  return r;
}

}  // namespace polyherm
