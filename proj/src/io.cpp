#include "polyherm/io.hpp"

#include <cmath>
#include <cstdio>

#include "polyherm/error.hpp"

namespace polyherm {

namespace {

const char* kind_name(IdentityKind k) { return k == IdentityKind::symbolic ? "symbolic" : "numeric"; }

Json params_json(const ParamSet& p) {
  return {{"nu", p.nu}, {"alpha", p.alpha}, {"xi_re", p.xi.real()}, {"xi_im", p.xi.imag()}};
}

void write(const Json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += indent < 0 ? ":" : ": ";
        write(value, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // short arrays of scalars stay on one line
      bool flat = j.size() <= 8;
      for (const auto& v : j) flat = flat && v.is_primitive();
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write(v, indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_number(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

int get_int(const Json& t, const char* key) {
  if (!t.contains(key) || !t[key].is_number_integer()) {
    throw Error(ErrorCode::UsageError, std::string("term field '") + key + "' must be an integer");
  }
  return t[key].get<int>();
}

double get_double(const Json& t, const char* key) {
  if (!t.contains(key) || !t[key].is_number()) {
    throw Error(ErrorCode::UsageError, std::string("term field '") + key + "' must be a number");
  }
  return t[key].get<double>();
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (std::isfinite(v) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

Json to_json(const TriPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) {
    arr.push_back({{"i", e.z}, {"j", e.zbar}, {"k", e.xi}, {"re", c.real()}, {"im", c.imag()}});
  }
  return arr;
}

TriPoly tripoly_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::UsageError, "polynomial JSON must be an array");
  std::vector<TriPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_object()) throw Error(ErrorCode::UsageError, "polynomial term must be an object");
    const Exponent e{get_int(t, "i"), get_int(t, "j"), get_int(t, "k")};
    if (e.z < 0 || e.zbar < 0 || e.xi < 0) {
      throw Error(ErrorCode::UsageError, "exponents must be nonnegative");
    }
    terms.emplace_back(e, cplx{get_double(t, "re"), get_double(t, "im")});
  }
  return TriPoly::from_terms(std::move(terms));
}

Json to_json(const IdentityReport& r) {
  Json per_n = Json::array();
  for (const auto& [n, d] : r.per_n) per_n.push_back({{"n", n}, {"deviation", d}});
  Json comps = Json::array();
  for (const auto& c : r.components) {
    comps.push_back({{"name", c.name},
                     {"max_deviation", c.max_deviation},
                     {"pass", c.pass},
                     {"informational", c.informational}});
  }
  Json j = {{"identity", r.identity},
            {"pass", r.pass},
            {"max_deviation", r.max_deviation},
            {"per_n", per_n},
            {"tail_proxy", r.tail_proxy ? Json(*r.tail_proxy) : Json(nullptr)},
            {"kind", kind_name(r.kind)},
            {"tolerance", r.tolerance},
            {"n_max", r.n_max},
            {"params", params_json(r.params)},
            {"components", comps}};
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

Json to_json(const GramReport& r, bool include_matrix) {
  Json j = {{"kind", r.kind},
            {"N", r.N},
            {"diag_expected", r.diag_expected},
            {"diag_computed", r.diag_computed},
            {"max_offdiag", r.max_offdiag},
            {"pass", r.pass},
            {"max_offdiag_abs", r.max_offdiag_abs},
            {"max_diag_rel", r.max_diag_rel},
            {"tolerance", r.tolerance}};
  Json extras = Json::object();
  for (const auto& [k, v] : r.extras) extras[k] = v;
  if (!r.extras.empty()) j["extras"] = extras;
  if (!r.note.empty()) j["note"] = r.note;
  if (include_matrix) {
    Json rows = Json::array();
    for (const auto& row : r.matrix) {
      Json jr = Json::array();
      for (const cplx v : row) jr.push_back({v.real(), v.imag()});
      rows.push_back(jr);
    }
    j["matrix"] = rows;
  }
  return j;
}

Json to_json(const TransformResult& r) {
  return {{"value_re", r.value.real()},
          {"value_im", r.value.imag()},
          {"method", r.method},
          {"est_error", r.est_error},
          {"order", r.order}};
}

Json to_json(const TransformCheck& c) {
  Json j = to_json(c.result);
  j["reference_re"] = c.reference.real();
  j["reference_im"] = c.reference.imag();
  j["deviation"] = c.deviation;
  j["pass"] = c.pass;
  return j;
}

Json to_json(const ConventionReport& c) {
  return {{"chosen", convention_name(c.chosen)},
          {"unique", c.unique},
          {"deviation_z_conj_zeta", c.dev_z_conj_zeta},
          {"deviation_zeta_conj_z", c.dev_zeta_conj_z}};
}

std::string dump(const Json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::UsageError, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace polyherm
