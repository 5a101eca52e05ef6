#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "polyherm/acceptance.hpp"
#include "polyherm/automorphic.hpp"
#include "polyherm/constructors.hpp"
#include "polyherm/error.hpp"
#include "polyherm/io.hpp"

using namespace polyherm;

namespace {

constexpr int kMaxN = 60;

struct Config {
  double nu = 1.0;
  double alpha = 0.25;
  double xi_re = 0.0;
  double xi_im = 0.0;
  double beta = 0.0;
  int n = 0;
  int m = 0;
  int N = 6;
  int n_max = 10;
  std::string method = "recurrence";
  std::string id = "all";
  std::string kind;
  double tol = 0.0;  // 0: the operation's default
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "json";
  bool formal_xi = false;
  bool matrix = false;
  bool check = false;
  // gram
  double a = 0.0, b = 0.0, theta = 0.5;
  int order = 0;
  // transform
  double z_re = 0.0, z_im = 0.0;
  double a_re = 0.0, a_im = 0.0, b_re = 0.0, b_im = 0.0;
  bool ab_given = false;
  double tau = 1.0, lambda_re = 0.5, lambda_im = 0.0, x = 0.0, y = 0.0;
  int k_trunc = 80;
  // automorphic
  int M = 5, n_lo = -3, n_hi = 3, k_range = 2;
  // grid
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  int nx = 11, ny = 11;
  // suite
  std::vector<int> criteria;

  ParamSet params() const { return {nu, alpha, {xi_re, xi_im}}; }
  double tol_or(double fallback) const { return tol > 0.0 ? tol : fallback; }
};

void add_params(CLI::App* sub, Config& c) {
  sub->add_option("--nu", c.nu, "nu");
  sub->add_option("--alpha", c.alpha, "alpha");
  sub->add_option("--xi-re", c.xi_re, "real part of xi");
  sub->add_option("--xi-im", c.xi_im, "imaginary part of xi");
}

void add_output(CLI::App* sub, Config& c) {
  sub->add_option("--out", c.out, "output file (default stdout)");
}

void require_n(int n, const char* what) {
  if (n < 0 || n > kMaxN) {
    throw Error(ErrorCode::UsageError,
                std::string(what) + " must lie in [0, " + std::to_string(kMaxN) + "]");
  }
}

std::vector<GfPoint> seeded_points(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double s = 0.5 / std::sqrt(2.0);
  std::vector<GfPoint> pts;
  for (int i = 0; i < count; ++i) {
    GfPoint g;
    g.z = {u(rng), u(rng)};
    g.t = {s * u(rng), s * u(rng)};
    g.u = {s * u(rng), s * u(rng)};
    g.v = {s * u(rng), s * u(rng)};
    pts.push_back(g);
  }
  return pts;
}

struct Outcome {
  std::string text;
  bool pass = true;
};

Outcome cmd_construct(const Config& c) {
  require_n(c.n, "n");
  const ParamSet p = c.params();
  TriPoly poly;
  if (c.method == "recurrence") poly = build_recurrence(p, c.n);
  else if (c.method == "operational") poly = build_operational(p, c.n);
  else if (c.method == "rodrigues") poly = build_rodrigues(p, c.n);
  else if (c.method == "rodrigues2") poly = build_rodrigues_second(p, c.n);
  else if (c.method == "hermite") poly = build_explicit_hermite(p, c.n);
  else if (c.method == "components") poly = assemble_components(build_holo_components(p, c.n));
  else if (c.method == "tensor") poly = build_tensor(p, c.n);
  else throw Error(ErrorCode::UsageError, "unknown method " + c.method);
  if (!c.formal_xi) poly = substitute_xi(poly, p.xi);

  if (c.format == "csv") {
    std::string s = "i,j,k,re,im\n";
    for (const auto& [e, v] : poly.terms()) {
      s += std::to_string(e.z) + "," + std::to_string(e.zbar) + "," + std::to_string(e.xi) + "," +
           format_number(v.real()) + "," + format_number(v.imag()) + "\n";
    }
    return {s};
  }
  Json j = {{"nu", c.nu},
            {"alpha", c.alpha},
            {"xi_re", c.xi_re},
            {"xi_im", c.xi_im},
            {"n", c.n},
            {"method", c.method},
            {"formal_xi", c.formal_xi},
            {"terms", to_json(poly)}};
  return {dump(j) + "\n"};
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {
      "derivatives", "recurrence", "rodrigues2", "nielsen",  "pde",        "polyanalytic",
      "gf_single",   "gf_double",  "gf_mixed",   "gf_bilinear", "dk_exp", "entire_exp"};
  return ids;
}

IdentityReport run_identity(const std::string& id, const Config& c) {
  const ParamSet p = c.params();
  const int nm = c.n_max;
  const auto pts = seeded_points(c.seed, 20);
  const int m_max = std::min(nm, 8);
  const int trunc = std::max(nm, 40);
  if (id == "derivatives") return verify_derivative_identities(p, nm);
  if (id == "recurrence") return verify_recurrence(p, nm);
  if (id == "rodrigues2") return verify_rodrigues_second(p, nm);
  if (id == "nielsen") return verify_nielsen_all(p, nm);
  if (id == "pde") return verify_pde(p, nm);
  if (id == "polyanalytic") return verify_polyanalytic_order_all(p, nm);
  if (id == "gf_single") return verify_generating_functions(p, GfKind::single, pts, trunc, c.tol_or(1e-8));
  if (id == "gf_double") {
    return verify_generating_functions(p, GfKind::double_sum, pts, trunc, c.tol_or(1e-8));
  }
  if (id == "gf_mixed") {
    return verify_generating_functions(p, GfKind::mixed, pts, 20, c.tol_or(1e-8), m_max);
  }
  if (id == "gf_bilinear") {
    return verify_generating_functions(p, GfKind::bilinear, pts, 20, c.tol_or(1e-8), m_max);
  }
  if (id == "dk_exp") return verify_generating_functions(p, GfKind::dk_exp, {}, std::max(nm, 10), 1e-10);
  if (id == "entire_exp") {
    return verify_generating_functions(p, GfKind::entire_exp, pts, trunc, c.tol_or(1e-8));
  }
  throw Error(ErrorCode::UsageError, "unknown identity " + id);
}

Outcome cmd_verify(const Config& c) {
  require_n(c.n_max, "n-max");
  Json arr = Json::array();
  bool pass = true;
  std::vector<std::string> ids;
  if (c.id == "all") {
    for (const auto& id : identity_ids()) {
      // alpha = 0 or nu = 0 make some identities inapplicable; "all" skips them
      const bool needs_alpha = id == "rodrigues2" || id == "gf_mixed" || id == "gf_bilinear" ||
                               id == "dk_exp" || id == "entire_exp";
      const bool needs_nu = id == "gf_mixed" || id == "gf_bilinear";
      if ((needs_alpha && c.alpha == 0.0) || (needs_nu && c.nu == 0.0)) continue;
      ids.push_back(id);
    }
  } else {
    ids.push_back(c.id);
  }
  for (const auto& id : ids) {
    const IdentityReport r = run_identity(id, c);
    pass = pass && r.pass;
    arr.push_back(to_json(r));
  }
  return {dump(arr) + "\n", pass};
}

Outcome cmd_gram(const Config& c) {
  if (c.N < 0 || c.N > 30) throw Error(ErrorCode::UsageError, "N must lie in [0, 30]");
  const double tol = c.tol_or(1e-10);
  GramReport r;
  if (c.kind == "basic") r = gram_basic(c.nu, c.alpha, c.N, tol, c.order);
  else if (c.kind == "general") r = gram_general(c.params(), {c.a, c.b}, c.N, tol, c.order);
  else if (c.kind == "shifted") r = gram_shifted(c.params(), c.N, tol, c.order);
  else if (c.kind == "holomorphic") r = gram_holomorphic(c.theta, c.N, tol, c.order);
  else if (c.kind == "I0alpha") r = gram_I0alpha(c.alpha, c.theta, c.N, tol, c.order);
  else throw Error(ErrorCode::UsageError, "unknown gram kind " + c.kind);
  return {dump(to_json(r, c.matrix)) + "\n", r.pass};
}

Outcome cmd_transform(const Config& c) {
  require_n(c.n, "n");
  const ParamSet p = c.params();
  const cplx z{c.z_re, c.z_im};
  const double tol = c.tol_or(1e-6);
  const auto finish = [&](const TransformResult& r, cplx ref) -> Outcome {
    if (!c.check) return {dump(to_json(r)) + "\n"};
    TransformCheck chk{r, ref, std::abs(r.value - ref) / std::max(1.0, std::abs(ref)), false};
    chk.pass = chk.deviation <= tol;
    return {dump(to_json(chk)) + "\n", chk.pass};
  };
  const auto oracle = [&] { return eval_family(p, z, p.xi, c.n)[c.n]; };

  if (c.kind == "real") return finish(intrep_real(p, c.n, z), oracle());
  if (c.kind == "plane") {
    const cplx a = c.ab_given ? cplx{c.a_re, c.a_im} : cplx{-c.nu};
    const cplx b = c.ab_given ? cplx{c.b_re, c.b_im} : cplx{-c.nu};
    return finish(intrep_plane(p, c.n, z, a, b), oracle());
  }
  if (c.kind == "twisted") {
    return finish(intrep_twisted(p, c.n, z, TwistConvention::z_conj_zeta), oracle());
  }
  if (c.kind == "wigner") return finish(fourier_wigner(p, c.n, z, c.order), oracle());
  if (c.kind == "complex_hermite") {
    const cplx a = c.ab_given ? cplx{c.a_re, c.a_im} : cplx{-c.nu};
    const cplx b = c.ab_given ? cplx{c.b_re, c.b_im} : cplx{-c.nu};
    const TransformResult r = complex_hermite_intrep(c.nu, c.m, c.n, z, a, b);
    return finish(r, complex_hermite_standard(c.nu, c.m, c.n)(z));
  }
  if (c.kind == "mehler") {
    const cplx lambda{c.lambda_re, c.lambda_im};
    const TransformResult r = mehler_kernel(c.tau, lambda, c.x, c.y, c.k_trunc, c.tol_or(1e-9));
    return finish(r, mehler_closed_form(c.tau, lambda, c.x, c.y));
  }
  if (c.kind == "convention") {
    const ConventionReport r = resolve_twist_convention(p, tol);
    return {dump(to_json(r)) + "\n", r.unique};
  }
  throw Error(ErrorCode::UsageError, "unknown transform kind " + c.kind);
}

Outcome cmd_automorphic(const Config& c) {
  const AutoParams ap{c.alpha, c.beta};
  if (c.kind == "functional") {
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> zs;
    for (int i = 0; i < 10; ++i) zs.push_back({1.5 * u(rng), u(rng)});
    const IdentityReport r = check_functional_eq(ap, c.m, c.n, zs, c.k_range, c.tol_or(1e-9));
    return {dump(to_json(r)) + "\n", r.pass};
  }
  if (c.kind == "eigen") {
    const IdentityReport r = check_eigen_strip(ap, c.m, c.n, c.tol_or(1e-10));
    return {dump(to_json(r)) + "\n", r.pass};
  }
  if (c.kind == "gram") {
    const GramReport r = gram_strip(ap, c.M, {c.n_lo, c.n_hi}, c.order, 64, c.tol_or(1e-8), 1e-9);
    return {dump(to_json(r, c.matrix)) + "\n", r.pass};
  }
  throw Error(ErrorCode::UsageError, "unknown automorphic check " + c.kind);
}

Outcome cmd_grid(const Config& c) {
  require_n(c.n, "n");
  if (c.nx < 1 || c.ny < 1 || c.nx > 2000 || c.ny > 2000) {
    throw Error(ErrorCode::UsageError, "nx and ny must lie in [1, 2000]");
  }
  const ParamSet p = c.params();
  const auto axis = [](double lo, double hi, int count, int i) {
    return count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  };
  std::string s;
  Json rows = Json::array();
  if (c.format == "csv") s = "x,y,re,im\n";
  for (int iy = 0; iy < c.ny; ++iy) {
    for (int ix = 0; ix < c.nx; ++ix) {
      const double x = axis(c.xmin, c.xmax, c.nx, ix);
      const double y = axis(c.ymin, c.ymax, c.ny, iy);
      const cplx v = eval_family(p, {x, y}, p.xi, c.n)[c.n];
      if (c.format == "csv") {
        s += format_number(x) + "," + format_number(y) + "," + format_number(v.real()) + "," +
             format_number(v.imag()) + "\n";
      } else {
        rows.push_back({{"x", x}, {"y", y}, {"re", v.real()}, {"im", v.imag()}});
      }
    }
  }
  return {c.format == "csv" ? s : dump(rows) + "\n"};
}

Outcome cmd_suite(const Config& c) {
  std::vector<int> ids = c.criteria;
  if (ids.empty()) ids = {1, 2, 3, 4, 5, 6};
  Json arr = Json::array();
  bool pass = true;
  for (const int id : ids) {
    const CriterionResult r = run_criterion(id, c.seed);
    std::cerr << summary_line(r) << "\n";
    pass = pass && r.pass;
    arr.push_back(to_json(r));
  }
  Json j = {{"seed", c.seed}, {"pass", pass}, {"criteria", arr}};
  return {dump(j) + "\n", pass};
}

void emit_error(std::string_view code, const std::string& message) {
  const Json j = {{"error", std::string(code)}, {"message", message}};
  std::cerr << dump(j, -1) << "\n";
}

void write_out(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::UsageError, "cannot open " + c.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Polyanalytic Hermite polynomials: construction, identities, Gram matrices, transforms"};
  app.require_subcommand(1);
  app.add_option("--seed", c.seed, "seed for randomized samples (POLYHERM_SEED overrides)");

  auto* construct = app.add_subcommand("construct", "build I_n as a polynomial in z, zbar (and xi)");
  add_params(construct, c);
  add_output(construct, c);
  construct->add_option("--n", c.n, "degree (<= 60)");
  construct->add_option("--method", c.method, "construction path")
      ->check(CLI::IsMember({"recurrence", "operational", "rodrigues", "rodrigues2", "hermite",
                             "tensor", "components"}));
  construct->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
  construct->add_flag("--formal-xi", c.formal_xi, "keep xi as a variable instead of substituting");

  auto* verify = app.add_subcommand("verify", "run identity checks");
  add_params(verify, c);
  add_output(verify, c);
  std::vector<std::string> ids = identity_ids();
  ids.push_back("all");
  verify->add_option("--id", c.id, "identity or all")->check(CLI::IsMember(ids));
  verify->add_option("--n-max", c.n_max, "largest degree checked");
  verify->add_option("--tol", c.tol, "tolerance for the series checks");
  verify->add_option("--seed", c.seed, "seed for sample points");

  auto* gram = app.add_subcommand("gram", "Gram matrix against the closed-form norms");
  add_params(gram, c);
  add_output(gram, c);
  gram->add_option("--kind", c.kind)
      ->required()
      ->check(CLI::IsMember({"basic", "general", "shifted", "holomorphic", "I0alpha"}));
  gram->add_option("--N", c.N, "largest degree");
  gram->add_option("--a", c.a);
  gram->add_option("--b", c.b);
  gram->add_option("--theta", c.theta);
  gram->add_option("--tol", c.tol);
  gram->add_option("--order", c.order, "quadrature order (0: automatic)");
  gram->add_flag("--matrix", c.matrix, "include the matrix");

  auto* transform = app.add_subcommand("transform", "integral representations and kernels");
  add_params(transform, c);
  add_output(transform, c);
  transform->add_option("--kind", c.kind)
      ->required()
      ->check(CLI::IsMember(
          {"real", "plane", "twisted", "wigner", "complex_hermite", "mehler", "convention"}));
  transform->add_option("--n", c.n);
  transform->add_option("--m", c.m);
  transform->add_option("--z-re", c.z_re);
  transform->add_option("--z-im", c.z_im);
  auto* are = transform->add_option("--a-re", c.a_re);
  transform->add_option("--a-im", c.a_im);
  transform->add_option("--b-re", c.b_re)->needs(are);
  transform->add_option("--b-im", c.b_im);
  transform->add_option("--tau", c.tau);
  transform->add_option("--lambda-re", c.lambda_re);
  transform->add_option("--lambda-im", c.lambda_im);
  transform->add_option("--x", c.x);
  transform->add_option("--y", c.y);
  transform->add_option("--k-trunc", c.k_trunc);
  transform->add_option("--order", c.order);
  transform->add_option("--tol", c.tol);
  transform->add_flag("--check", c.check, "compare with the polynomial and exit 1 on mismatch");

  auto* automorphic = app.add_subcommand("automorphic", "strip functions psi_{m,n}");
  add_output(automorphic, c);
  automorphic->add_option("--kind", c.kind)
      ->required()
      ->check(CLI::IsMember({"functional", "eigen", "gram"}));
  automorphic->add_option("--alpha", c.alpha);
  automorphic->add_option("--beta", c.beta);
  automorphic->add_option("--m", c.m);
  automorphic->add_option("--n", c.n, "lattice index");
  automorphic->add_option("--M", c.M);
  automorphic->add_option("--n-lo", c.n_lo);
  automorphic->add_option("--n-hi", c.n_hi);
  automorphic->add_option("--k-range", c.k_range);
  automorphic->add_option("--order", c.order);
  automorphic->add_option("--tol", c.tol);
  automorphic->add_option("--seed", c.seed);
  automorphic->add_flag("--matrix", c.matrix);

  auto* grid = app.add_subcommand("grid", "values of I_n on an (x, y) lattice");
  add_params(grid, c);
  add_output(grid, c);
  grid->add_option("--n", c.n);
  grid->add_option("--xmin", c.xmin);
  grid->add_option("--xmax", c.xmax);
  grid->add_option("--ymin", c.ymin);
  grid->add_option("--ymax", c.ymax);
  grid->add_option("--nx", c.nx);
  grid->add_option("--ny", c.ny);
  std::string grid_format = "csv";
  grid->add_option("--format", grid_format)->check(CLI::IsMember({"json", "csv"}));

  auto* suite = app.add_subcommand("suite", "acceptance criteria 1 to 6");
  add_output(suite, c);
  suite->add_option("--criteria", c.criteria, "subset of criteria")->check(CLI::Range(1, 6));
  suite->add_option("--seed", c.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("UsageError", e.what());
    return 2;
  }

  try {
    if (const char* env = std::getenv("POLYHERM_SEED")) {
      try {
        std::size_t used = 0;
        c.seed = std::stoull(env, &used, 0);
        if (used != std::string(env).size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw Error(ErrorCode::UsageError, "POLYHERM_SEED is not an unsigned integer");
      }
    }
    c.ab_given = transform->count("--a-re") > 0;
    Outcome o;
    if (construct->parsed()) o = cmd_construct(c);
    else if (verify->parsed()) o = cmd_verify(c);
    else if (gram->parsed()) o = cmd_gram(c);
    else if (transform->parsed()) o = cmd_transform(c);
    else if (automorphic->parsed()) o = cmd_automorphic(c);
    else if (grid->parsed()) {
      c.format = grid_format;
      o = cmd_grid(c);
    } else o = cmd_suite(c);
    write_out(c, o.text);
    return o.pass ? 0 : 1;
  } catch (const Error& e) {
    emit_error(e.name(), e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("InternalError", e.what());
    return 2;
  }
}
