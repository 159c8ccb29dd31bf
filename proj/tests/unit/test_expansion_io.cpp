#include <gtest/gtest.h>

#include <json.hpp>

#include "steklov/builtins.hpp"
#include "steklov/errors.hpp"
#include "steklov/expansion_io.hpp"

using namespace steklov;

namespace {

void expect_identical(const SteklovExpansion& a, const SteklovExpansion& b) {
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.kind, b.kind);
  EXPECT_EQ(a.t, b.t);
  EXPECT_EQ(a.mean_term, b.mean_term);
  EXPECT_EQ(a.data_norm, b.data_norm);
  EXPECT_EQ(a.quadrature, b.quadrature);
  ASSERT_EQ(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    EXPECT_EQ(a.terms[i].mode.id, b.terms[i].mode.id);
    EXPECT_EQ(a.terms[i].mode.nu, b.terms[i].mode.nu);
    EXPECT_EQ(a.terms[i].mode.delta, b.terms[i].mode.delta);
    EXPECT_EQ(a.terms[i].mode.amplitude, b.terms[i].mode.amplitude);
    EXPECT_EQ(a.terms[i].coefficient, b.terms[i].coefficient);
  }
}

}  // namespace

TEST(ExpansionJson, RoundTripsBitExactly) {
  const auto eta = parse_builtin("coshcos:1.7").trace();
  for (const auto& e : {expand_dirichlet(eta, 1.0, 20), solve_robin(eta, 0.35, 0.3, 12),
                        solve_neumann(parse_builtin("x").trace(), 0.8, 9)}) {
    const std::string text = to_json(e);
    const SteklovExpansion back = expansion_from_json(text);
    expect_identical(e, back);
    EXPECT_EQ(to_json(back), text);
    EXPECT_EQ(evaluate_interior(back, 0.2, 0.1), evaluate_interior(e, 0.2, 0.1));
  }
}

TEST(ExpansionJson, DocumentLayout) {
  const auto e = solve_robin(parse_builtin("xy").trace(), 1.0, 0.5, 3);
  const auto doc = nlohmann::json::parse(to_json(e));
  EXPECT_EQ(doc["kind"], "robin");
  EXPECT_EQ(doc["t"], 0.5);
  EXPECT_EQ(doc["quadrature_order"], 32);
  ASSERT_EQ(doc["terms"].size(), 3u);
  EXPECT_EQ(doc["terms"][0]["class"], "III");
  EXPECT_EQ(doc["terms"][2]["class"], "XY");
  for (const char* key : {"class", "family", "index", "nu", "delta", "coefficient"}) {
    EXPECT_TRUE(doc["terms"][0].contains(key)) << key;
  }
  EXPECT_FALSE(nlohmann::json::parse(to_json(expand_dirichlet(parse_builtin("x").trace(), 1.0, 1)))
                   .contains("t"));
}

TEST(ExpansionJson, RejectsMalformedDocuments) {
  EXPECT_THROW(expansion_from_json("{"), FormatError);
  EXPECT_THROW(expansion_from_json("{}"), FormatError);
  const std::string good = to_json(expand_dirichlet(parse_builtin("x").trace(), 0.5, 2));
  auto doc = nlohmann::json::parse(good);
  doc["alpha"] = 2.0;
  EXPECT_THROW(expansion_from_json(doc.dump()), FormatError);
  doc = nlohmann::json::parse(good);
  doc["terms"][0]["delta"] = 99.0;
  EXPECT_THROW(expansion_from_json(doc.dump()), FormatError);
  doc = nlohmann::json::parse(good);
  doc["terms"][0]["class"] = "V";
  EXPECT_THROW(expansion_from_json(doc.dump()), FormatError);
  doc = nlohmann::json::parse(good);
  doc["terms"][0]["class"] = "XY";
  doc["terms"][0]["index"] = 0;
  EXPECT_THROW(expansion_from_json(doc.dump()), FormatError);  // xy needs the square
  doc = nlohmann::json::parse(good);
  doc["kind"] = "robin";
  EXPECT_THROW(expansion_from_json(doc.dump()), FormatError);  // t missing
}

TEST(ExpansionJson, MissingNormMeansNoCertificate) {
  auto doc = nlohmann::json::parse(to_json(expand_central(parse_builtin("const:1").trace(), 1.0, 2)));
  doc.erase("data_norm");
  const auto e = expansion_from_json(doc.dump());
  EXPECT_TRUE(std::isinf(central_value(e).bound));
}
