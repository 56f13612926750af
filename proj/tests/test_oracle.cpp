#include <gtest/gtest.h>

#include "support.hpp"

using namespace dgpic;
using dgpic::testing::load_dga;
using dgpic::testing::load_spec;

TEST(Oracle, CohomologyExamples) {
  EXPECT_EQ(oracle::oracle_cohomology(to_raw(load_dga("dgfree")), 1, 6), 1u);
  EXPECT_EQ(oracle::oracle_cohomology(to_raw(load_dga("exmw")), 2, 6), 1u);
}

TEST(Oracle, TrivialDifferentialGivesGradedDims) {
  auto raw = to_raw(load_dga("trivial_poly_2"));
  for (int d = 0; d <= 6; ++d) EXPECT_EQ(oracle::oracle_cohomology(raw, d, 6), oracle::oracle_graded_dim(raw, d));
}

TEST(Oracle, DegreeBeyondWindowThrows) {
  try {
    oracle::oracle_cohomology(to_raw(load_dga("dgfree")), 7, 6);
    FAIL() << "expected DegreeWindowExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeWindowExceeded);
  }
}

TEST(Oracle, GroundFieldResolvesItself) {
  oracle::RawAlgebra k{Field::rationals(), 0, {}, {}};
  oracle::RawResolution F{{{oracle::RawPoly{}}}};
  EXPECT_EQ(oracle::oracle_resolution_acyclicity(F, k, 4), (std::vector<std::size_t>{1, 0, 0, 0, 0}));
}

TEST(Oracle, DeletedBasisElementLeavesH1) {
  for (const char* name : {"trivial_free_2", "dgfree", "exmw"}) {
    DgAlgebra alg = load_dga(name);
    SemiFreeResolution F = build_resolution(alg, 8).resolution;
    F.basis.pop_back();
    F.differential.pop_back();
    for (auto& row : F.differential) row.pop_back();
    auto table = oracle::oracle_resolution_acyclicity(to_raw(F), to_raw(alg), 4);
    EXPECT_GT(table[1], 0u) << name;
  }
}

TEST(Oracle, CrossCheckAgreesOnEveryInput) {
  for (const auto& name : dgpic::testing::valid_inputs()) {
    OracleComparison c = oracle_cross_check(load_dga(name), 8);
    EXPECT_TRUE(c.agree) << name;
  }
}

TEST(Oracle, AcyclicityTableAgreesWithVerification) {
  for (const auto& name : dgpic::testing::valid_inputs()) {
    DgAlgebra alg = load_dga(name);
    auto r = build_resolution(alg, 8);
    auto table = oracle::oracle_resolution_acyclicity(to_raw(r.resolution), to_raw(alg), alg.window());
    bool acyclic = table[0] == 1;
    for (std::size_t i = 1; i < table.size(); ++i) acyclic = acyclic && table[i] == 0;
    EXPECT_EQ(acyclic, verify_resolution(r.resolution, alg).passed()) << name;
  }
}

TEST(FiniteFieldRecheck, TrivialFreeAtLargePrime) {
  FieldRecheck r = finite_field_recheck(load_spec("trivial_free_2"), 101);
  EXPECT_TRUE(r.all_equal);
  EXPECT_EQ(r.prime, 101u);
}

TEST(FiniteFieldRecheck, ExmwExtDimension) {
  FieldRecheck r = finite_field_recheck(load_spec("exmw"), 101);
  EXPECT_TRUE(r.all_equal);
  bool seen = false;
  for (const auto& e : r.entries) {
    if (e.quantity != "dim Ext") continue;
    seen = true;
    EXPECT_EQ(e.reference, "4");
    EXPECT_EQ(e.modular, "4");
  }
  EXPECT_TRUE(seen);
}

TEST(FiniteFieldRecheck, CharacteristicTwoArtifactIsFlagged) {
  // In characteristic 2, e2^2 = 0 no longer forces derivations to have no
  // e1-component, so dim Der grows from 6 to 8 while all other dims agree.
  FieldRecheck r = finite_field_recheck(load_spec("trivial_poly_2"), 2);
  EXPECT_FALSE(r.all_equal);
  for (const auto& e : r.entries) {
    if (e.quantity == "dim Der(Ext)") {
      EXPECT_EQ(e.reference, "6");
      EXPECT_EQ(e.modular, "8");
    } else {
      EXPECT_TRUE(e.equal) << e.quantity;
    }
  }
}

TEST(FiniteFieldRecheck, BadPrimes) {
  auto code = [](const InputSpec& spec, std::uint64_t p) {
    try {
      finite_field_recheck(spec, p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::FieldMismatch;
  };
  EXPECT_EQ(code(parse_input(dgpic::testing::input_path("bad/bad_denominator.json")), 101), ErrorCode::BadPrime);
  EXPECT_EQ(code(load_spec("trivial_free_2"), 100), ErrorCode::BadPrime);
}
