#include <gtest/gtest.h>

#include <cstring>
#include <random>

#include "polyherm/constructors.hpp"
#include "polyherm/error.hpp"
#include "polyherm/io.hpp"

using namespace polyherm;

namespace {

bool bit_equal(const TriPoly& a, const TriPoly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& [ea, ca] = a.terms()[i];
    const auto& [eb, cb] = b.terms()[i];
    if (ea != eb || std::memcmp(&ca, &cb, sizeof(cplx)) != 0) return false;
  }
  return true;
}

}  // namespace

TEST(Json, TriPolyEncoding) {
  const TriPoly p = substitute_xi(build_recurrence({1.0, 0.0, {}}, 3), 0.0);
  const Json j = to_json(p);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(dump(j, -1), R"([{"i":0,"j":3,"k":0,"re":1.0,"im":0.0}])");
}

TEST(Json, RoundTripIsBitExact) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int t = 0; t < 20; ++t) {
    const ParamSet p{u(rng), u(rng), {}};
    const TriPoly poly = build_recurrence(p, 1 + t % 12);
    const TriPoly back = tripoly_from_json(parse_json(dump(to_json(poly))));
    EXPECT_TRUE(bit_equal(poly, back));
    EXPECT_EQ(poly, back);
  }
}

TEST(Json, SeventeenDigits) {
  const Json j = {{"x", 0.1}, {"y", -0.0}, {"z", 1e300}, {"w", std::nan("")}};
  EXPECT_EQ(dump(j, -1), R"({"x":0.10000000000000001,"y":-0.0,"z":1.0000000000000001e+300,"w":null})");
}

TEST(Json, GradedLexOrder) {
  const TriPoly p = build_recurrence({1.0, 0.3, {}}, 4);
  const Json j = to_json(p);
  for (std::size_t i = 1; i < j.size(); ++i) {
    const Exponent a{j[i - 1]["i"].get<int>(), j[i - 1]["j"].get<int>(), j[i - 1]["k"].get<int>()};
    const Exponent b{j[i]["i"].get<int>(), j[i]["j"].get<int>(), j[i]["k"].get<int>()};
    EXPECT_LT(a, b);
  }
}

TEST(Json, MalformedInput) {
  EXPECT_THROW(parse_json("[{"), Error);
  EXPECT_THROW(tripoly_from_json(parse_json(R"({"i":1})")), Error);
  EXPECT_THROW(tripoly_from_json(parse_json(R"([{"i":1,"j":0,"k":0,"re":"a","im":0}])")), Error);
  EXPECT_THROW(tripoly_from_json(parse_json(R"([{"i":-1,"j":0,"k":0,"re":1,"im":0}])")), Error);
}

TEST(Json, ReportShapes) {
  IdentityReport r;
  r.identity = "recurrence";
  r.per_n = {{0, 0.0}, {1, 1e-17}};
  const Json ji = to_json(r);
  EXPECT_TRUE(ji["tail_proxy"].is_null());
  EXPECT_EQ(ji["per_n"][1]["n"], 1);
  r.tail_proxy = 1e-20;
  EXPECT_TRUE(to_json(r)["tail_proxy"].is_number_float());

  GramReport g;
  g.N = 1;
  g.matrix = {{1.0, 0.0}, {0.0, 2.0}};
  g.diag_expected = {1.0, 2.0};
  const Json jg = to_json(g, true);
  for (const char* key : {"N", "diag_expected", "diag_computed", "max_offdiag", "pass", "matrix"}) {
    EXPECT_TRUE(jg.contains(key)) << key;
  }

  TransformResult t{{1.5, -2.0}, "moments", 0.0, 0};
  const Json jt = to_json(t);
  EXPECT_EQ(jt["value_re"], 1.5);
  EXPECT_EQ(jt["value_im"], -2.0);
  EXPECT_EQ(jt["method"], "moments");
  EXPECT_EQ(jt["est_error"], 0.0);
}
