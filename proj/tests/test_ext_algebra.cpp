#include <gtest/gtest.h>

#include "support.hpp"

using namespace dgpic;
using dgpic::testing::ext_of;

namespace {

std::string product(const FinDimAlgebra& E, std::size_t i, std::size_t j) {
  return E.format(E.multiply(E.basis_vector(i), E.basis_vector(j)));
}

/// Matrix with entries {row, col, value} (1-based), zero elsewhere.
linalg::DenseMatrix sparse_matrix(const Field& f, std::size_t m, std::vector<std::tuple<int, int, int>> entries) {
  linalg::DenseMatrix M(m, std::vector<Scalar>(m, f.zero()));
  for (auto [i, j, v] : entries) M[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = f.from_int(v);
  return M;
}

}  // namespace

TEST(Ext, TrivialFreeHasSquareZeroRadical) {
  for (auto [name, n] : {std::pair{"trivial_free_2", 2}, std::pair{"trivial_free_3", 3}}) {
    FinDimAlgebra E = ext_of(name);
    ASSERT_EQ(E.dim(), static_cast<std::size_t>(n + 1));
    for (std::size_t i = 1; i < E.dim(); ++i) {
      for (std::size_t j = 1; j < E.dim(); ++j) EXPECT_EQ(product(E, i, j), "0");
    }
    EXPECT_EQ(radical(E).filtration, (std::vector<std::size_t>{static_cast<std::size_t>(n), 0}));
  }
}

TEST(Ext, PolynomialConstants) {
  FinDimAlgebra E = ext_of("trivial_poly_2");
  ASSERT_EQ(E.dim(), 4u);
  EXPECT_EQ(product(E, 1, 2), "-e4");
  EXPECT_EQ(product(E, 2, 1), "e4");
  for (auto [i, j] : {std::pair{1, 1}, {2, 2}, {1, 3}, {3, 1}, {2, 3}, {3, 2}, {3, 3}}) {
    EXPECT_EQ(product(E, static_cast<std::size_t>(i), static_cast<std::size_t>(j)), "0");
  }
  EXPECT_FALSE(E.is_commutative());
  EXPECT_EQ(radical(E).filtration, (std::vector<std::size_t>{3, 1, 0}));
  FinDimAlgebra op = E.opposite();
  EXPECT_EQ(op.format(op.multiply(op.basis_vector(1), op.basis_vector(2))), "e4");
}

TEST(Ext, PolynomialBasisMatrices) {
  FinDimAlgebra E = ext_of("trivial_poly_2");
  const Field& f = E.field();
  ASSERT_TRUE(E.matrices().has_value());
  const auto& M = *E.matrices();
  EXPECT_EQ(M[0], linalg::identity(4, f));
  EXPECT_EQ(M[1], sparse_matrix(f, 4, {{2, 1, 1}, {4, 3, -1}}));
  EXPECT_EQ(M[2], sparse_matrix(f, 4, {{3, 1, 1}, {4, 2, 1}}));
  EXPECT_EQ(M[3], sparse_matrix(f, 4, {{4, 1, 1}}));
}

TEST(Ext, DgfreeIsTruncatedCubic) {
  FinDimAlgebra E = ext_of("dgfree");
  ASSERT_EQ(E.dim(), 3u);
  EXPECT_EQ(product(E, 1, 1), "e3");
  EXPECT_EQ(product(E, 1, 2), "0");
  EXPECT_EQ(product(E, 2, 2), "0");
  EXPECT_TRUE(E.is_commutative());
  RadicalInfo rad = radical(E);
  EXPECT_EQ(rad.filtration, (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_TRUE(is_local(E, rad));
}

TEST(Ext, ExmwIsTruncatedQuartic) {
  FinDimAlgebra E = ext_of("exmw");
  ASSERT_EQ(E.dim(), 4u);
  EXPECT_EQ(product(E, 1, 1), "e3");
  EXPECT_EQ(product(E, 1, 2), "e4");
  EXPECT_EQ(product(E, 2, 1), "e4");
  EXPECT_EQ(product(E, 2, 2), "0");
  EXPECT_TRUE(E.is_commutative());
  EXPECT_EQ(radical(E).filtration, (std::vector<std::size_t>{3, 2, 1, 0}));
}

TEST(Ext, SingleGeneratorIsDualNumbers) {
  FinDimAlgebra E = ext_of("single_gen");
  ASSERT_EQ(E.dim(), 2u);
  EXPECT_EQ(product(E, 1, 1), "0");
  EXPECT_TRUE(is_local(E));
}

TEST(Ext, CaseFourComesOutCommutative) {
  // Computed: e2e3 = e3e2 = e4. The anticommuting relation gives a
  // symmetric product on the Ext side.
  FinDimAlgebra E = ext_of("case4");
  ASSERT_EQ(E.dim(), 4u);
  EXPECT_EQ(product(E, 1, 2), "e4");
  EXPECT_EQ(product(E, 2, 1), "e4");
  EXPECT_EQ(product(E, 1, 1), "0");
  EXPECT_EQ(product(E, 2, 2), "0");
  EXPECT_TRUE(E.is_commutative());
  EXPECT_TRUE(is_local(E));
}

TEST(Ext, UnitLawAndAssociativityOnEveryResolvedInput) {
  for (const auto& name : dgpic::testing::resolved_inputs()) {
    FinDimAlgebra E = ext_of(name);
    EXPECT_TRUE(E.satisfies_unit_law()) << name;
    EXPECT_TRUE(E.is_associative()) << name;
    EXPECT_TRUE(E.opposite().is_associative()) << name;
    const std::size_t m = E.dim();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          auto a = E.basis_vector(i), b = E.basis_vector(j), c = E.basis_vector(k);
          ASSERT_EQ(E.multiply(E.multiply(a, b), c), E.multiply(a, E.multiply(b, c))) << name;
        }
      }
    }
    EXPECT_TRUE(is_local(E)) << name;
  }
}

TEST(Ext, ProductTableFormat) {
  FinDimAlgebra E = ext_of("trivial_poly_2");
  auto table = E.product_table();
  EXPECT_NE(std::find(table.begin(), table.end(), "e2*e3 = -e4"), table.end());
}

TEST(Radical, TraceFormDetectsSplitAlgebra) {
  // k x k with e2 idempotent: semisimple, not local.
  Field q = Field::rationals();
  StructureConstants c(2, std::vector<std::vector<Scalar>>(2, std::vector<Scalar>(2, q.zero())));
  c[0][0][0] = q.one();
  c[0][1][1] = q.one();
  c[1][0][1] = q.one();
  c[1][1][1] = q.one();
  FinDimAlgebra E(q, c);
  RadicalInfo rad = radical(E);
  EXPECT_EQ(rad.dim(), 0u);
  EXPECT_FALSE(is_local(E, rad));
}

TEST(Radical, FiniteFieldNonNilpotentSpanIsUndetermined) {
  Field f = Field::prime(5);
  StructureConstants c(2, std::vector<std::vector<Scalar>>(2, std::vector<Scalar>(2, f.zero())));
  c[0][0][0] = f.one();
  c[0][1][1] = f.one();
  c[1][0][1] = f.one();
  c[1][1][1] = f.one();
  FinDimAlgebra E(f, c);
  try {
    radical(E);
    FAIL() << "expected RadicalUndetermined";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RadicalUndetermined);
  }
}

TEST(Radical, FiniteFieldLocalAlgebraUsesAdaptedSpan) {
  // Candidate basis from the down-up input: End of the 3-symbol complex.
  DgAlgebra alg = dgpic::testing::load_dga("downup_f7");
  auto r = build_resolution(alg, 8);
  FinDimAlgebra E = compute_ext_algebra(r.resolution, alg);
  EXPECT_EQ(E.dim(), 3u);
  RadicalInfo rad = radical(E);
  EXPECT_EQ(rad.method, "adapted_span");
  EXPECT_EQ(rad.filtration, (std::vector<std::size_t>{2, 1, 0}));
}

TEST(Ext, NonDegreeOneEntriesAreRejected) {
  DgAlgebra alg = dgpic::testing::load_dga("dgfree");
  SemiFreeResolution F = build_resolution(alg, 8).resolution;
  F.differential[1][0] = alg.pres().parse("x2*x2");
  try {
    compute_ext_algebra(F, alg);
    FAIL() << "expected DimensionMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}
