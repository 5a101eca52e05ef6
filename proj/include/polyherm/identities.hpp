#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyherm/algebra.hpp"

namespace polyherm {

enum class IdentityKind { symbolic, numeric };

struct IdentityComponent {
  std::string name;
  double max_deviation = 0.0;
  bool pass = true;
  bool informational = false;  // reported, not part of the pass decision
};

struct IdentityReport {
  std::string identity;
  ParamSet params;
  int n_max = 0;
  IdentityKind kind = IdentityKind::symbolic;
  double tolerance = 1e-10;
  double max_deviation = 0.0;
  bool pass = true;
  std::vector<std::pair<int, double>> per_n;
  std::optional<double> tail_proxy;
  std::vector<IdentityComponent> components;
  std::string note;
  std::string error;  // error code name when a check could not conclude
};

/// Relative deviation between two polynomials, measured against the largest
/// coefficient of lhs, rhs and ref.
double symbolic_deviation(const TriPoly& lhs, const TriPoly& rhs, const TriPoly& ref = {});

/// Values I_0(z), ..., I_{n_max}(z) at a numeric xi, by the three-term recurrence.
std::vector<cplx> eval_family(const ParamSet& p, cplx z, cplx xi, int n_max);

/// Lowering/raising relations, xi-derivative relations, k-fold derivatives,
/// the +- lowering pair, the kernel identity and the operational forms.
IdentityReport verify_derivative_identities(const ParamSet& p, int n_max);
/// Three-term recurrence on the family built from the operational form.
IdentityReport verify_recurrence(const ParamSet& p, int n_max);
/// Second Rodrigues formula against the reference construction.
IdentityReport verify_rodrigues_second(const ParamSet& p, int n_max);
IdentityReport verify_nielsen(const ParamSet& p, int m, int n);
/// Nielsen identity for every m + n <= n_max.
IdentityReport verify_nielsen_all(const ParamSet& p, int n_max);
IdentityReport verify_pde(const ParamSet& p, int n_max);
IdentityReport verify_polyanalytic_order(const ParamSet& p, int n);
/// verify_polyanalytic_order for n = 0..n_max.
IdentityReport verify_polyanalytic_order_all(const ParamSet& p, int n_max);

enum class GfKind { single, double_sum, mixed, bilinear, dk_exp, entire_exp };

struct GfPoint {
  cplx z;
  cplx t;
  cplx u;
  cplx v;
};

/// Series identities at numeric xi = p.xi. For mixed and bilinear `m_max`
/// selects the orders checked (per_n is keyed by m) and the series is summed
/// adaptively with n_trunc as the lower bound of terms; dk_exp is symbolic in
/// formal xi for k <= n_trunc. Requires n_trunc >= 10 and |t|,|u|,|v| <= 1.
IdentityReport verify_generating_functions(const ParamSet& p, GfKind kind,
                                           std::span<const GfPoint> points, int n_trunc,
                                           double tol, int m_max = 0);

std::string gf_kind_name(GfKind kind);

}  // namespace polyherm
