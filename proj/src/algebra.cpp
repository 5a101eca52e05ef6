#include "polyherm/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace polyherm {

namespace {

bool keep(cplx c) { return std::abs(c) >= kPruneThreshold; }

// Dense accumulation is used while the exponent box stays below this size.
constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

std::vector<TriPoly::Term> merge(const std::vector<TriPoly::Term>& a,
                                 const std::vector<TriPoly::Term>& b, double sign) {
  std::vector<TriPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, sign * ib->second);
      ++ib;
    } else {
      const cplx c = ia->second + sign * ib->second;
      if (keep(c)) out.emplace_back(ia->first, c);
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

bool ParamSet::is_finite() const {
  return std::isfinite(nu) && std::isfinite(alpha) && std::isfinite(xi.real()) &&
         std::isfinite(xi.imag());
}

bool ParamSet::is_subcritical() const { return 2.0 * std::abs(alpha) < nu; }

bool ParamSet::is_nondegenerate() const {
  return nu != 2.0 * alpha && nu != -2.0 * alpha;
}

TriPoly TriPoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& [e, c] : terms) {
    if (e.z < 0 || e.zbar < 0 || e.xi < 0) {
      throw Error(ErrorCode::DomainError, "negative exponent in TriPoly term");
    }
    if (!out.empty() && out.back().first == e) {
      out.back().second += c;
    } else {
      out.emplace_back(e, c);
    }
  }
  std::erase_if(out, [](const Term& t) { return !keep(t.second); });
  return TriPoly(std::move(out));
}

TriPoly TriPoly::constant(cplx c) { return monomial(c, {}); }

TriPoly TriPoly::monomial(cplx c, Exponent e) {
  if (!keep(c)) return {};
  return TriPoly({{e, c}});
}

TriPoly TriPoly::var(Var v) {
  switch (v) {
    case Var::z: return monomial(1.0, {1, 0, 0});
    case Var::zbar: return monomial(1.0, {0, 1, 0});
    case Var::xi: return monomial(1.0, {0, 0, 1});
  }
  return {};
}

int TriPoly::deg_z() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.z);
  return d;
}

int TriPoly::deg_zbar() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.zbar);
  return d;
}

int TriPoly::deg_xi() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.xi);
  return d;
}

int TriPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.back().first.total();
}

cplx TriPoly::coeff(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.first < x; });
  return (it != terms_.end() && it->first == e) ? it->second : cplx{};
}

double TriPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.second));
  return m;
}

cplx TriPoly::operator()(cplx z, cplx xi) const {
  if (terms_.empty()) return {};
  const cplx zb = std::conj(z);
  auto powers = [](cplx x, int n) {
    std::vector<cplx> p(static_cast<std::size_t>(n) + 1, cplx{1.0});
    for (int i = 1; i <= n; ++i) p[i] = p[i - 1] * x;
    return p;
  };
  const auto pz = powers(z, deg_z());
  const auto pzb = powers(zb, deg_zbar());
  const auto pxi = powers(xi, deg_xi());
  cplx sum{};
  for (const auto& [e, c] : terms_) sum += c * pz[e.z] * pzb[e.zbar] * pxi[e.xi];
  return sum;
}

TriPoly TriPoly::operator-() const {
  auto out = terms_;
  for (auto& t : out) t.second = -t.second;
  return TriPoly(std::move(out));
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  terms_ = merge(terms_, o.terms_, 1.0);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  terms_ = merge(terms_, o.terms_, -1.0);
  return *this;
}

TriPoly& TriPoly::operator*=(const TriPoly& o) { return *this = *this * o; }

TriPoly& TriPoly::operator*=(cplx c) {
  for (auto& t : terms_) t.second *= c;
  std::erase_if(terms_, [](const Term& t) { return !keep(t.second); });
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t nz = static_cast<std::size_t>(a.deg_z() + b.deg_z() + 1);
  const std::size_t nzb = static_cast<std::size_t>(a.deg_zbar() + b.deg_zbar() + 1);
  const std::size_t nxi = static_cast<std::size_t>(a.deg_xi() + b.deg_xi() + 1);
  std::vector<TriPoly::Term> out;

  if (nz * nzb * nxi <= kDenseLimit) {
    std::vector<cplx> acc(nz * nzb * nxi);
    std::vector<char> touched(acc.size(), 0);
    for (const auto& [ea, ca] : a.terms()) {
      for (const auto& [eb, cb] : b.terms()) {
        const std::size_t idx =
            (static_cast<std::size_t>(ea.z + eb.z) * nzb + (ea.zbar + eb.zbar)) * nxi +
            (ea.xi + eb.xi);
        acc[idx] += ca * cb;
        touched[idx] = 1;
      }
    }
    for (std::size_t i = 0; i < nz; ++i) {
      for (std::size_t j = 0; j < nzb; ++j) {
        for (std::size_t k = 0; k < nxi; ++k) {
          const std::size_t idx = (i * nzb + j) * nxi + k;
          if (touched[idx] && keep(acc[idx])) {
            out.emplace_back(Exponent{static_cast<int>(i), static_cast<int>(j),
                                      static_cast<int>(k)},
                             acc[idx]);
          }
        }
      }
    }
  } else {
    std::map<Exponent, cplx> acc;
    for (const auto& [ea, ca] : a.terms()) {
      for (const auto& [eb, cb] : b.terms()) {
        acc[Exponent{ea.z + eb.z, ea.zbar + eb.zbar, ea.xi + eb.xi}] += ca * cb;
      }
    }
    for (const auto& [e, c] : acc) {
      if (keep(c)) out.emplace_back(e, c);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const TriPoly::Term& x, const TriPoly::Term& y) { return x.first < y.first; });
  return TriPoly(std::move(out));
}

TriPoly poly_ring(const TriPoly& a, const TriPoly& b, RingOp op) {
  switch (op) {
    case RingOp::add: return a + b;
    case RingOp::sub: return a - b;
    case RingOp::mul: return a * b;
  }
  return {};
}

TriPoly poly_scale(const TriPoly& a, cplx c) { return a * c; }

TriPoly poly_diff(const TriPoly& a, Var var) {
  std::vector<TriPoly::Term> out;
  out.reserve(a.size());
  for (auto [e, c] : a.terms()) {
    int* p = var == Var::z ? &e.z : var == Var::zbar ? &e.zbar : &e.xi;
    if (*p == 0) continue;
    c *= static_cast<double>(*p);
    --*p;
    out.emplace_back(e, c);
  }
  return TriPoly::from_terms(std::move(out));
}

TriPoly poly_diff(const TriPoly& a, Var var, int k) {
  TriPoly out = a;
  for (int i = 0; i < k && !out.is_zero(); ++i) out = poly_diff(out, var);
  return out;
}

cplx poly_eval(const TriPoly& a, cplx z, cplx xi) { return a(z, xi); }

bool poly_equal(const TriPoly& a, const TriPoly& b, double tol_abs, double tol_rel) {
  const double maxcoef = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  const double tol = std::max(tol_abs, tol_rel * maxcoef);
  const TriPoly d = a - b;
  return std::all_of(d.terms().begin(), d.terms().end(),
                     [tol](const TriPoly::Term& t) { return std::abs(t.second) <= tol; });
}

double poly_rel_deviation(const TriPoly& a, const TriPoly& b) {
  const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  const double diff = (a - b).max_abs_coeff();
  if (diff == 0.0) return 0.0;
  return scale > 0.0 ? diff / scale : diff;
}

TriPoly poly_conj(const TriPoly& a) {
  std::vector<TriPoly::Term> out;
  out.reserve(a.size());
  for (const auto& [e, c] : a.terms()) {
    out.emplace_back(Exponent{e.zbar, e.z, e.xi}, std::conj(c));
  }
  return TriPoly::from_terms(std::move(out));
}

TriPoly substitute_xi(const TriPoly& a, cplx xi) {
  std::vector<cplx> pxi(static_cast<std::size_t>(a.deg_xi()) + 1, cplx{1.0});
  for (std::size_t i = 1; i < pxi.size(); ++i) pxi[i] = pxi[i - 1] * xi;
  std::vector<TriPoly::Term> out;
  out.reserve(a.size());
  for (const auto& [e, c] : a.terms()) {
    out.emplace_back(Exponent{e.z, e.zbar, 0}, c * pxi[e.xi]);
  }
  return TriPoly::from_terms(std::move(out));
}

TriPoly swap_z_zbar(const TriPoly& a) {
  std::vector<TriPoly::Term> out;
  out.reserve(a.size());
  for (const auto& [e, c] : a.terms()) out.emplace_back(Exponent{e.zbar, e.z, e.xi}, c);
  return TriPoly::from_terms(std::move(out));
}

TriPoly compose(std::span<const cplx> coeffs, const TriPoly& arg) {
  TriPoly out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    out = out * arg + TriPoly::constant(*it);
  }
  return out;
}

GaussPoly::GaussPoly(TriPoly prefactor, TriPoly exponent)
    : prefactor_(std::move(prefactor)), exponent_(std::move(exponent)) {
  for (const auto& [e, c] : exponent_.terms()) {
    if (e.z + e.zbar > 2) {
      throw Error(ErrorCode::DomainError, "GaussPoly exponent must be at most quadratic");
    }
  }
}

TriPoly GaussPoly::quadratic(cplx c_zzb, cplx c_zz, cplx c_zbzb, cplx c_z, cplx c_zb,
                             cplx c_0) {
  return TriPoly::from_terms({{{1, 1, 0}, c_zzb},
                              {{2, 0, 0}, c_zz},
                              {{0, 2, 0}, c_zbzb},
                              {{1, 0, 0}, c_z},
                              {{0, 1, 0}, c_zb},
                              {{0, 0, 0}, c_0}});
}

cplx GaussPoly::operator()(cplx z, cplx xi) const {
  return prefactor_(z, xi) * std::exp(exponent_(z, xi));
}

GaussPoly gp_diff(const GaussPoly& g, Var var) {
  if (var == Var::xi) {
    throw Error(ErrorCode::DomainError, "gp_diff supports z and zbar only");
  }
  TriPoly p = poly_diff(g.prefactor(), var) + g.prefactor() * poly_diff(g.exponent(), var);
  return GaussPoly(std::move(p), g.exponent());
}

GaussPoly gp_diff(const GaussPoly& g, Var var, int k) {
  GaussPoly out = g;
  for (int i = 0; i < k; ++i) out = gp_diff(out, var);
  return out;
}

GaussPoly gp_mul(const GaussPoly& g, const TriPoly& p) {
  return GaussPoly(g.prefactor() * p, g.exponent());
}

GaussPoly gp_add(const GaussPoly& a, const GaussPoly& b) {
  if (!(a.exponent() == b.exponent())) {
    throw Error(ErrorCode::QuadMismatch, "gp_add: exponents differ");
  }
  return GaussPoly(a.prefactor() + b.prefactor(), a.exponent());
}

TriPoly gp_divide_kernel(const GaussPoly& g, const GaussPoly& ref) {
  if (!(g.exponent() == ref.exponent())) {
    throw Error(ErrorCode::QuadMismatch, "gp_divide_kernel: exponents differ");
  }
  return g.prefactor();
}

}  // namespace polyherm
