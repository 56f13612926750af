#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace dgpic;
using dgpic::testing::load_dga;
using dgpic::testing::random_element;

TEST(DgStructure, ShippedInputsValidate) {
  for (const auto& name : dgpic::testing::valid_inputs()) {
    ValidationReport r = validate_dga(load_dga(name));
    EXPECT_TRUE(r.passed()) << name;
  }
}

TEST(DgStructure, MutatedDifferentialFailsDSquared) {
  ValidationReport r = validate_dga(load_dga("mutated"));
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.passed("d_squared_zero"));
  EXPECT_TRUE(r.passed("differential_degree"));
}

TEST(DgStructure, ExmwRelationIsCompatible) {
  DgAlgebra alg = load_dga("exmw");
  const auto& pres = alg.pres();
  EXPECT_TRUE(alg.apply_differential(pres.parse("x*y + y*x")).is_zero());
  // d(xy) = y^3 is nonzero, so compatibility is not vacuous.
  EXPECT_EQ(alg.apply_differential(pres.parse("x*y")).to_string(alg.names()), "y*y*y");
}

TEST(DgStructure, IncompatibleRelationIsReported) {
  Field q = Field::rationals();
  auto helper = Presentation::from_rules(q, {{"x", 1}, {"y", 1}}, {}, 5);
  auto pres = Presentation::complete_rewrites(q, {{"x", 1}, {"y", 1}}, {helper.parse("x*y")}, 5);
  DgAlgebra alg(pres, {pres.parse("y*y"), NcPoly(q)}, 4);
  ValidationReport r = validate_dga(alg);
  EXPECT_TRUE(r.passed("d_squared_zero"));
  EXPECT_FALSE(r.passed("relation_compatibility"));
}

TEST(DgStructure, DSquaredVanishesOnRandomElements) {
  std::mt19937_64 rng(21);
  for (const auto& name : dgpic::testing::valid_inputs()) {
    DgAlgebra alg = load_dga(name);
    for (int k = 0; k < 200; ++k) {
      int d = 1 + static_cast<int>(rng() % (alg.window() - 1));
      NcPoly a = random_element(rng, alg.pres(), d);
      EXPECT_TRUE(alg.apply_differential(alg.apply_differential(a)).is_zero()) << name;
    }
  }
}

TEST(DgStructure, LeibnizRuleOnRandomPairs) {
  std::mt19937_64 rng(22);
  for (const auto& name : dgpic::testing::valid_inputs()) {
    DgAlgebra alg = load_dga(name);
    for (int k = 0; k < 200; ++k) {
      int da = 1 + static_cast<int>(rng() % 3);
      int db = 1 + static_cast<int>(rng() % 2);
      NcPoly a = random_element(rng, alg.pres(), da);
      NcPoly b = random_element(rng, alg.pres(), db);
      NcPoly lhs = alg.apply_differential(alg.multiply(a, b));
      NcPoly rhs = alg.multiply(alg.apply_differential(a), b);
      NcPoly second = alg.multiply(a, alg.apply_differential(b));
      if (da % 2 == 0) {
        rhs += second;
      } else {
        rhs -= second;
      }
      EXPECT_TRUE(lhs == rhs) << name;
    }
  }
}

TEST(DgStructure, InhomogeneousInputThrows) {
  DgAlgebra alg = load_dga("dgfree");
  try {
    alg.apply_differential(alg.pres().parse("x1 + x1*x2"));
    FAIL() << "expected InhomogeneousInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InhomogeneousInput);
  }
}

TEST(DgStructure, WindowBeyondCompletionThrows) {
  auto spec = dgpic::testing::load_spec("dgfree");
  DgAlgebra alg = build_dga(spec);
  try {
    DgAlgebra bad(alg.pres(), alg.differential(), alg.pres().completion_window());
    FAIL() << "expected DegreeWindowExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeWindowExceeded);
  }
  EXPECT_THROW(cohomology_basis(alg, alg.pres().completion_window()), Error);
}

TEST(Cohomology, DgfreeDegreeOneIsClassOfX2) {
  DgAlgebra alg = load_dga("dgfree");
  CohomologyPiece h1 = cohomology_basis(alg, 1);
  ASSERT_EQ(h1.dim(), 1u);
  EXPECT_EQ(h1.representatives[0].to_string(alg.names()), "x2");
}

TEST(Cohomology, DgfreeDegreeTwoIsClassOfAnticommutator) {
  DgAlgebra alg = load_dga("dgfree");
  CohomologyPiece h2 = cohomology_basis(alg, 2);
  ASSERT_EQ(h2.dim(), 1u);
  // x2^2 is the boundary d(x1), so x1x2 + x2x1 is a representative up to boundaries.
  NcPoly c = alg.pres().parse("x1*x2 + x2*x1");
  EXPECT_TRUE(alg.apply_differential(c).is_zero());
  EXPECT_FALSE(h2.boundaries.reduce(to_vector(c, h2.basis)).empty());
}

TEST(Cohomology, HProductRejectsNonCocycles) {
  DgAlgebra alg = load_dga("dgfree");
  try {
    h_product(alg.pres().parse("x1"), alg.pres().parse("x2"), alg);
    FAIL() << "expected NotACocycle";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACocycle);
  }
}

TEST(Cohomology, DgfreeSquareOfX2Vanishes) {
  DgAlgebra alg = load_dga("dgfree");
  auto x2 = alg.pres().parse("x2");
  auto coords = h_product(x2, x2, alg);
  ASSERT_EQ(coords.size(), 1u);
  EXPECT_TRUE(coords[0].is_zero());
}

TEST(Cohomology, ExmwDegreeTwo) {
  DgAlgebra alg = load_dga("exmw");
  EXPECT_EQ(cohomology_basis(alg, 2).dim(), 1u);
}

TEST(Cohomology, TrivialDifferentialGivesGradedDims) {
  for (const char* name : {"trivial_free_2", "trivial_poly_2", "case4", "nonkoszul_control"}) {
    DgAlgebra alg = load_dga(name);
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(cohomology_basis(alg, d).dim(), alg.pres().degree_basis(d).size());
  }
}

TEST(Cohomology, DimsAgreeWithOracleOnEveryInput) {
  for (const auto& name : dgpic::testing::valid_inputs()) {
    DgAlgebra alg = load_dga(name);
    auto raw = to_raw(alg);
    for (int d = 0; d <= 6; ++d) {
      EXPECT_EQ(cohomology_basis(alg, d).dim(), oracle::oracle_cohomology(raw, d, 6)) << name << " degree " << d;
    }
  }
}

TEST(Cohomology, DownUpDims) {
  DgAlgebra alg = load_dga("downup_f7");
  std::vector<std::size_t> expect{1, 1, 1, 1, 1, 0, 1};
  for (int d = 0; d <= 6; ++d) EXPECT_EQ(cohomology_basis(alg, d).dim(), expect[d]) << d;
}
