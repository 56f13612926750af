#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

using namespace dgpic;
using dgpic::testing::load_dga;

namespace {

std::string row_text(const ResolutionResult& r, std::size_t i, const DgAlgebra& alg) {
  std::string out;
  for (std::size_t j = 0; j < r.resolution.size(); ++j) {
    const NcPoly& e = r.resolution.differential[i][j];
    if (e.is_zero()) continue;
    out += (out.empty() ? "" : " + ") + std::string("(") + e.to_string(alg.names()) + ")" + r.resolution.basis[j];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

TEST(Resolution, BasisSizes) {
  const std::map<std::string, std::size_t> expect{{"trivial_free_2", 3}, {"trivial_free_3", 4}, {"trivial_poly_2", 4},
                                                  {"dgfree", 3},         {"exmw", 4},           {"single_gen", 2},
                                                  {"case4", 4},          {"row2", 3},           {"row4", 3}};
  for (const auto& [name, m] : expect) {
    ResolutionResult r = build_resolution(load_dga(name), 8);
    EXPECT_EQ(r.verdict, ResolutionVerdict::Resolved) << name;
    EXPECT_EQ(r.resolution.size(), m) << name;
    KoszulSmooth ks = is_koszul_smooth(r);
    EXPECT_EQ(ks.koszul, std::optional<bool>(true));
    EXPECT_EQ(ks.smooth, std::optional<bool>(true));
    EXPECT_EQ(ks.basis_size, std::optional<std::size_t>(m));
  }
}

TEST(Resolution, FrozenDifferentials) {
  {
    DgAlgebra alg = load_dga("trivial_free_2");
    auto r = build_resolution(alg, 8);
    EXPECT_EQ(row_text(r, 1, alg), "(x1)1");
    EXPECT_EQ(row_text(r, 2, alg), "(x2)1");
  }
  {
    DgAlgebra alg = load_dga("trivial_poly_2");
    auto r = build_resolution(alg, 8);
    EXPECT_EQ(r.rounds, 2);
    EXPECT_EQ(row_text(r, 3, alg), "(-x2)b2 + (x1)b3");
  }
  {
    DgAlgebra alg = load_dga("dgfree");
    auto r = build_resolution(alg, 8);
    EXPECT_EQ(row_text(r, 1, alg), "(x2)1");
    EXPECT_EQ(row_text(r, 2, alg), "(x1)1 + (x2)b2");
  }
  {
    DgAlgebra alg = load_dga("exmw");
    auto r = build_resolution(alg, 8);
    EXPECT_EQ(row_text(r, 1, alg), "(y)1");
    EXPECT_EQ(row_text(r, 2, alg), "(x)1 + (y)b2");
    EXPECT_EQ(row_text(r, 3, alg), "(x)b2 + (y)b3");
  }
  {
    DgAlgebra alg = load_dga("single_gen");
    auto r = build_resolution(alg, 8);
    EXPECT_EQ(row_text(r, 1, alg), "(x2)1");
  }
}

TEST(Resolution, CertificationPassesOnResolvedInputs) {
  for (const auto& name : dgpic::testing::resolved_inputs()) {
    DgAlgebra alg = load_dga(name);
    auto r = build_resolution(alg, 8);
    ValidationReport v = verify_resolution(r.resolution, alg);
    EXPECT_TRUE(v.passed()) << name;
    EXPECT_TRUE(v.passed("flatness")) << name;
    EXPECT_TRUE(v.passed("minimality")) << name;
    EXPECT_TRUE(v.passed("koszul_shape")) << name;
  }
}

TEST(Resolution, FlatnessHoldsEntrywise) {
  for (const auto& name : dgpic::testing::resolved_inputs()) {
    DgAlgebra alg = load_dga(name);
    const auto& F = build_resolution(alg, 8).resolution;
    for (std::size_t i = 0; i < F.size(); ++i) {
      for (std::size_t j = 0; j < F.size(); ++j) {
        NcPoly rhs(alg.field());
        for (std::size_t l = 0; l < F.size(); ++l) rhs += alg.multiply(F.differential[i][l], F.differential[l][j]);
        EXPECT_TRUE(alg.apply_differential(F.differential[i][j]) == rhs) << name << " " << i << "," << j;
      }
    }
  }
}

TEST(Resolution, DroppedCorrectionBreaksFlatness) {
  DgAlgebra alg = load_dga("dgfree");
  SemiFreeResolution F = build_resolution(alg, 8).resolution;
  F.differential[2][1] = NcPoly(alg.field());
  ValidationReport v = verify_resolution(F, alg);
  EXPECT_FALSE(v.passed("flatness"));
}

TEST(Resolution, WindowAcyclicityMatchesOracle) {
  for (const auto& name : dgpic::testing::valid_inputs()) {
    DgAlgebra alg = load_dga(name);
    auto r = build_resolution(alg, 8);
    auto table = oracle::oracle_resolution_acyclicity(to_raw(r.resolution), to_raw(alg), alg.window());
    EXPECT_EQ(table, r.cohomology) << name;
    bool acyclic = table[0] == 1;
    for (std::size_t i = 1; i < table.size(); ++i) acyclic = acyclic && table[i] == 0;
    EXPECT_EQ(acyclic, r.verdict == ResolutionVerdict::Resolved) << name;
  }
}

TEST(Resolution, NonKoszulControl) {
  DgAlgebra alg = load_dga("nonkoszul_control");
  auto r = build_resolution(alg, 8);
  EXPECT_EQ(r.verdict, ResolutionVerdict::NotKoszulInWindow);
  EXPECT_EQ(r.cohomology, (std::vector<std::size_t>{1, 0, 1, 0, 0, 0, 0}));
  KoszulSmooth ks = is_koszul_smooth(r);
  EXPECT_EQ(ks.koszul, std::optional<bool>(false));
  EXPECT_FALSE(ks.smooth.has_value());
  EXPECT_FALSE(verify_resolution(r.resolution, alg).passed());
}

TEST(Resolution, RoundBudgetGivesUndetermined) {
  auto r = build_resolution(load_dga("exmw"), 2);
  EXPECT_EQ(r.verdict, ResolutionVerdict::Undetermined);
  KoszulSmooth ks = is_koszul_smooth(r);
  EXPECT_FALSE(ks.koszul.has_value());
  EXPECT_FALSE(ks.smooth.has_value());
}

TEST(Resolution, DownUpOverF7) {
  // The builder reproduces d(b2) = y, d(b3) = x + y b2, but the complex is
  // not acyclic in even degrees; the oracle agrees.
  DgAlgebra alg = load_dga("downup_f7");
  auto r = build_resolution(alg, 8);
  ASSERT_EQ(r.resolution.size(), 3u);
  EXPECT_EQ(row_text(r, 1, alg), "(y)1");
  EXPECT_EQ(row_text(r, 2, alg), "(x)1 + (y)b2");
  EXPECT_EQ(r.verdict, ResolutionVerdict::NotKoszulInWindow);
  EXPECT_EQ(r.cohomology, (std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1}));
  ValidationReport v = verify_resolution(r.resolution, alg);
  EXPECT_TRUE(v.passed("flatness"));
  EXPECT_TRUE(v.passed("h0_is_k"));
}

TEST(Resolution, DownUpEvenCocycleIsNotABoundary) {
  // xy b2 - yx b2 - 2 y^2 b3 spans H^2(F).
  DgAlgebra alg = load_dga("downup_f7");
  auto r = build_resolution(alg, 8);
  auto bases = detail::graded_bases(alg, 3);
  detail::ResolutionComplex cx(alg, r.resolution, bases);
  const std::size_t m = r.resolution.size();
  const auto& pres = alg.pres();
  linalg::VectorBuilder b;
  auto put = [&](const char* text, std::size_t symbol) {
    for (const auto& [idx, c] : to_vector(pres.normal_form(pres.parse(text)), bases[2])) b.add(idx * m + symbol, c);
  };
  put("x*y - y*x", 1);
  put("-2*y*y", 2);
  linalg::SparseVector z = b.finish();
  auto images = cx.images(2);
  linalg::VectorBuilder dz;
  for (const auto& [i, c] : z) {
    for (const auto& [k, s] : images[i]) dz.add(k, c * s);
  }
  EXPECT_TRUE(dz.finish().empty());
  linalg::EchelonBasis boundaries;
  for (const auto& v : cx.images(1)) boundaries.insert(v);
  EXPECT_FALSE(boundaries.reduce(z).empty());
}

TEST(Resolution, VerdictNames) {
  EXPECT_EQ(to_string(ResolutionVerdict::Resolved), "Resolved");
  EXPECT_EQ(to_string(ResolutionVerdict::NotKoszulInWindow), "NotKoszulInWindow");
  EXPECT_EQ(to_string(ResolutionVerdict::Undetermined), "Undetermined");
}
