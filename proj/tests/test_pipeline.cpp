#include <gtest/gtest.h>

#include "support.hpp"

using namespace dgpic;
using dgpic::testing::input_path;
using dgpic::testing::load_spec;

namespace {

ErrorCode parse_code(const std::string& file) {
  try {
    parse_input(input_path(file));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << file << " parsed";
  return ErrorCode::FieldMismatch;
}

std::vector<std::string> all_inputs() {
  auto names = dgpic::testing::valid_inputs();
  names.push_back("mutated");
  return names;
}

}  // namespace

TEST(ParseInput, TrivialFreeTwo) {
  InputSpec spec = load_spec("trivial_free_2");
  EXPECT_EQ(spec.generators, (std::vector<std::string>{"x1", "x2"}));
  EXPECT_TRUE(spec.differential.empty());
  EXPECT_TRUE(spec.relations.empty());
  EXPECT_TRUE(spec.field.is_rational());
  EXPECT_EQ(spec.window, 6);
  EXPECT_EQ(spec.max_rounds, 8);
  ASSERT_TRUE(spec.family.has_value());
}

TEST(ParseInput, DownUpCoefficientsReducedModSeven) {
  InputSpec spec = load_spec("downup_f7");
  EXPECT_EQ(spec.field.characteristic(), 7u);
  AnalysisReport r = analyze(spec);
  ASSERT_EQ(r.input.relations.size(), 2u);
  std::vector<std::string> coeffs;
  for (const auto& t : r.input.relations[0]) coeffs.push_back(t.coeff);
  EXPECT_EQ(coeffs, (std::vector<std::string>{"1", "6", "5"}));
}

TEST(ParseInput, Errors) {
  EXPECT_EQ(parse_code("bad/unknown_generator.json"), ErrorCode::UnknownGenerator);
  EXPECT_EQ(parse_code("bad/bad_field.json"), ErrorCode::BadField);
  EXPECT_EQ(parse_code("bad/bad_degree.json"), ErrorCode::BadDifferentialDegree);
  EXPECT_EQ(parse_code("bad/malformed.json"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("bad/wrong_schema.json"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("does_not_exist.json"), ErrorCode::ParseError);
}

TEST(ParseInput, DiagnosticsCarryContext) {
  try {
    parse_input(input_path("bad/malformed.json"));
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("malformed.json:4:"), std::string::npos) << e.what();
  }
  try {
    parse_input(input_path("bad/unknown_generator.json"));
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("relations[0]"), std::string::npos) << e.what();
  }
}

TEST(Analyze, TrivialFreeTwo) {
  AnalysisReport r = analyze(load_spec("trivial_free_2"));
  ASSERT_TRUE(r.ext && r.aut && r.dpic);
  EXPECT_EQ(r.ext->dim, 3u);
  EXPECT_EQ(r.dpic->description, "Z x Out_k(E)");
  EXPECT_EQ(r.dpic->dim_out, 4u);
  ASSERT_TRUE(r.aut->family.has_value());
  EXPECT_TRUE(r.aut->family->identities_hold && r.aut->family->dim_match && r.aut->family->samples_pass);
  EXPECT_TRUE(r.dpic->family.has_value());
}

TEST(Analyze, DgfreeAndExmw) {
  AnalysisReport a = analyze(load_spec("dgfree"));
  ASSERT_TRUE(a.ext && a.dpic);
  EXPECT_EQ(a.ext->dim, 3u);
  EXPECT_EQ(a.ext->products[0], "e2*e2 = e3");
  EXPECT_EQ(a.dpic->dim_out, 2u);
  AnalysisReport b = analyze(load_spec("exmw"));
  ASSERT_TRUE(b.ext && b.dpic);
  EXPECT_EQ(b.ext->dim, 4u);
  EXPECT_EQ(b.dpic->dim_out, 3u);
  EXPECT_EQ(b.aut->constraints.bound.at("c34"), "2*c22*c23");
}

TEST(Analyze, NegativeVerdictsOmitDpic) {
  AnalysisReport control = analyze(load_spec("nonkoszul_control"));
  EXPECT_FALSE(control.dpic.has_value());
  EXPECT_EQ(control.flags.koszul, std::optional<bool>(false));
  ASSERT_TRUE(control.resolution.has_value());
  EXPECT_EQ(control.resolution->verdict, "NotKoszulInWindow");

  AnalysisReport mutated = analyze(load_spec("mutated"));
  EXPECT_FALSE(mutated.validation.passed);
  EXPECT_FALSE(mutated.resolution.has_value());
  EXPECT_FALSE(mutated.dpic.has_value());
}

TEST(Analyze, RoundBudgetIsReported) {
  InputSpec spec = load_spec("exmw");
  spec.max_rounds = 1;
  AnalysisReport r = analyze(spec);
  ASSERT_TRUE(r.resolution.has_value());
  EXPECT_EQ(r.resolution->verdict, "Undetermined");
  EXPECT_FALSE(r.flags.koszul.has_value());
  EXPECT_FALSE(r.dpic.has_value());
}

TEST(Analyze, DpicGatingOnEveryInput) {
  for (const auto& name : all_inputs()) {
    AnalysisReport r = analyze(load_spec(name));
    bool hypotheses = r.flags.koszul.value_or(false) && r.flags.smooth.value_or(false) && r.ext &&
                      r.ext->local.value_or(false);
    EXPECT_EQ(r.dpic.has_value(), hypotheses) << name;
  }
}

TEST(Analyze, StageErrorsAreEmbedded) {
  InputSpec spec = load_spec("dgfree");
  spec.relations.push_back("x1*x2 + x1");
  AnalysisReport r;
  EXPECT_NO_THROW(r = analyze(spec));
  ASSERT_FALSE(r.errors.empty());
  EXPECT_EQ(r.errors[0].code, "NonHomogeneousRelation");
}

TEST(Analyze, FamilyFieldMismatchIsEmbedded) {
  InputSpec spec = load_spec("dgfree");
  spec.family = input_path("families/truncated_x3_f7.json");
  AnalysisReport r = analyze(spec);
  ASSERT_FALSE(r.errors.empty());
  EXPECT_EQ(r.errors.back().code, "ParameterFieldMismatch");
  EXPECT_TRUE(r.dpic.has_value());
  EXPECT_FALSE(r.dpic->family.has_value());
}

TEST(Report, JsonRoundTrip) {
  for (const auto& name : all_inputs()) {
    AnalysisReport r = analyze(load_spec(name));
    std::string text = render_json(r);
    AnalysisReport back = report_from_json(text);
    EXPECT_TRUE(back == r) << name;
    EXPECT_EQ(render_json(back), text) << name;
  }
}

TEST(Report, DeterministicAcrossRuns) {
  for (const char* name : {"trivial_poly_2", "case4", "downup_f7"}) {
    EXPECT_EQ(render_json(analyze(load_spec(name))), render_json(analyze(load_spec(name)))) << name;
  }
}

TEST(Report, JsonHasDocumentedKeys) {
  auto j = nlohmann::json::parse(render_json(analyze(load_spec("dgfree"))));
  EXPECT_EQ(j["schema"], "dgpic-report/1");
  for (const char* key : {"input", "rewriting", "validation", "cohomology", "resolution", "flags", "ext", "aut",
                          "dpic", "errors"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["ext"]["structure_constants"][1][1][2], "1");
  EXPECT_EQ(j["input"]["differential"]["x1"][0]["coeff"], "1");
  EXPECT_EQ(j["input"]["differential"]["x1"][0]["word"], (nlohmann::json{"x2", "x2"}));
  auto control = nlohmann::json::parse(render_json(analyze(load_spec("nonkoszul_control"))));
  EXPECT_TRUE(control["dpic"].is_null());
}

TEST(Report, RationalCoefficientsAreStrings) {
  InputSpec spec = load_spec("trivial_poly_2");
  spec.relations = {"x1*x2 - (3/2)*x2*x1"};
  AnalysisReport r = analyze(spec);
  ASSERT_EQ(r.input.relations[0].size(), 2u);
  EXPECT_EQ(r.input.relations[0][1].coeff, "-3/2");
}

TEST(Report, TextOrderAndConstraintLine) {
  std::string text = render_text(analyze(load_spec("dgfree")));
  EXPECT_NE(text.find("c33 = c22^2"), std::string::npos);
  auto res = text.find("-- resolution");
  auto ext = text.find("-- Ext-algebra");
  auto aut = text.find("-- Aut(E)");
  auto dpic = text.find("-- DPic(A)");
  ASSERT_NE(dpic, std::string::npos);
  EXPECT_LT(res, ext);
  EXPECT_LT(ext, aut);
  EXPECT_LT(aut, dpic);
  std::string control = render_text(analyze(load_spec("nonkoszul_control")));
  EXPECT_EQ(control.find("-- DPic(A)"), std::string::npos);
}

TEST(ParseFamily, Shapes) {
  Field q = Field::rationals();
  MatrixFamily fam = parse_family(input_path("families/truncated_x4.json"), q);
  EXPECT_EQ(fam.parameters, (std::vector<std::string>{"a", "b", "c"}));
  ASSERT_EQ(fam.entries.size(), 3u);
  EXPECT_EQ(fam.entries[1][2].to_string(fam.parameters), "2*a*b");
  EXPECT_EQ(fam.side_conditions.size(), 1u);
  MatrixFamily f7 = parse_family(input_path("families/truncated_x3_f7.json"), q);
  ASSERT_TRUE(f7.field.has_value());
  EXPECT_EQ(f7.field->characteristic(), 7u);
}
