#pragma once

#include <string>

#include "json.hpp"
#include "polyherm/algebra.hpp"
#include "polyherm/identities.hpp"
#include "polyherm/orthogonality.hpp"
#include "polyherm/transforms.hpp"

namespace polyherm {

using Json = nlohmann::ordered_json;

/// Array of {"i", "j", "k", "re", "im"} in graded-lex order (i: z, j: zbar, k: xi).
Json to_json(const TriPoly& p);
/// Throws UsageError on malformed input.
TriPoly tripoly_from_json(const Json& j);

Json to_json(const IdentityReport& r);
/// include_matrix adds "matrix" as rows of [re, im] pairs.
Json to_json(const GramReport& r, bool include_matrix = false);
Json to_json(const TransformResult& r);
Json to_json(const TransformCheck& c);
Json to_json(const ConventionReport& c);

/// %.17g, with ".0" appended to integral values; non-finite values print as
/// nan or inf.
std::string format_number(double v);

/// Serializes with every double at 17 significant digits; non-finite doubles
/// become null. indent < 0 gives a single line.
std::string dump(const Json& j, int indent = 2);

/// Parses text; throws UsageError on syntax errors.
Json parse_json(const std::string& text);

}  // namespace polyherm
