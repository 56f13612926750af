#pragma once

// Feeds primary data structures to the oracle and compares the answers.
// The conversion copies raw coefficients only; the oracle never sees the
// rewriting system, so relations are passed in their original form.

#include <string>
#include <vector>

#include <json.hpp>

#include "dgpic/oracle.hpp"
#include "dgpic/pipeline.hpp"

namespace dgpic {

inline oracle::RawPoly to_raw(const NcPoly& p) {
  oracle::RawPoly out;
  for (const auto& [w, c] : p.terms()) out.push_back({std::vector<int>(w.letters().begin(), w.letters().end()), c});
  return out;
}

inline oracle::RawAlgebra to_raw(const DgAlgebra& alg) {
  oracle::RawAlgebra raw;
  raw.field = alg.field();
  raw.num_generators = static_cast<int>(alg.pres().num_generators());
  for (const auto& r : alg.pres().relations()) raw.relations.push_back(to_raw(r));
  for (const auto& d : alg.differential()) raw.differential.push_back(to_raw(d));
  return raw;
}

inline oracle::RawResolution to_raw(const SemiFreeResolution& F) {
  oracle::RawResolution raw;
  for (const auto& row : F.differential) {
    auto& r = raw.D.emplace_back();
    for (const auto& e : row) r.push_back(to_raw(e));
  }
  return raw;
}

/// Primary and oracle answers side by side for degrees 0..W.
struct OracleComparison {
  std::string field;
  int window = 0;
  std::vector<std::size_t> graded_dims_primary;
  std::vector<std::size_t> graded_dims_oracle;
  std::vector<std::size_t> cohomology_primary;
  std::vector<std::size_t> cohomology_oracle;
  std::string resolution_verdict;
  std::vector<std::size_t> resolution_primary;
  std::vector<std::size_t> resolution_oracle;
  bool agree = false;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OracleComparison, field, window, graded_dims_primary, graded_dims_oracle,
                                   cohomology_primary, cohomology_oracle, resolution_verdict, resolution_primary,
                                   resolution_oracle, agree)

inline OracleComparison oracle_cross_check(const DgAlgebra& alg, int max_rounds) {
  OracleComparison out;
  const int W = alg.window();
  out.field = alg.field().name();
  out.window = W;
  auto raw = to_raw(alg);
  for (int d = 0; d <= W; ++d) {
    out.graded_dims_primary.push_back(alg.pres().degree_basis(d).size());
    out.graded_dims_oracle.push_back(oracle::oracle_graded_dim(raw, d));
    out.cohomology_primary.push_back(cohomology_basis(alg, d).dim());
    out.cohomology_oracle.push_back(oracle::oracle_cohomology(raw, d, W));
  }
  ResolutionResult res = build_resolution(alg, max_rounds);
  out.resolution_verdict = to_string(res.verdict);
  out.resolution_primary = res.cohomology;
  out.resolution_oracle = oracle::oracle_resolution_acyclicity(to_raw(res.resolution), raw, W);
  out.agree = out.graded_dims_primary == out.graded_dims_oracle && out.cohomology_primary == out.cohomology_oracle &&
              out.resolution_primary == out.resolution_oracle;
  return out;
}

struct RecheckEntry {
  std::string quantity;
  std::string reference;
  std::string modular;
  bool equal = false;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RecheckEntry, quantity, reference, modular, equal)

/// Dimensions over the input field and over F_p. Differences are possible
/// bad-prime artifacts and are reported, not raised.
struct FieldRecheck {
  std::string reference_field;
  std::uint64_t prime = 0;
  std::vector<RecheckEntry> entries;
  bool all_equal = false;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FieldRecheck, reference_field, prime, entries, all_equal)

namespace detail {

inline std::map<std::string, std::string> recheck_quantities(const DgAlgebra& alg, int max_rounds) {
  std::map<std::string, std::string> q;
  auto key = [](const std::string& s, int d) { return s + "^" + std::to_string(d); };
  for (int d = 0; d <= alg.window(); ++d) {
    q[key("dim A", d)] = std::to_string(alg.pres().degree_basis(d).size());
    q[key("dim H", d) + "(A)"] = std::to_string(cohomology_basis(alg, d).dim());
  }
  ResolutionResult res = build_resolution(alg, max_rounds);
  q["resolution verdict"] = to_string(res.verdict);
  q["resolution basis size"] = std::to_string(res.resolution.size());
  if (res.verdict == ResolutionVerdict::Resolved) {
    FinDimAlgebra E = compute_ext_algebra(res.resolution, alg);
    q["dim Ext"] = std::to_string(E.dim());
    q["dim Der(Ext)"] = std::to_string(derivations(E).dim);
  }
  return q;
}

}  // namespace detail

inline FieldRecheck finite_field_recheck(const InputSpec& spec, std::uint64_t p) {
  if (!detail::is_prime(p)) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not prime");
  FieldRecheck out;
  out.reference_field = spec.field.name();
  out.prime = p;
  DgAlgebra ref = build_dga(spec);
  DgAlgebra mod = build_dga(spec, Field::prime(p));
  auto a = detail::recheck_quantities(ref, spec.max_rounds);
  auto b = detail::recheck_quantities(mod, spec.max_rounds);
  out.all_equal = true;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    RecheckEntry e{k, v, it == b.end() ? "-" : it->second, it != b.end() && it->second == v};
    out.all_equal = out.all_equal && e.equal;
    out.entries.push_back(std::move(e));
  }
  for (const auto& [k, v] : b) {
    if (a.count(k)) continue;
    out.entries.push_back({k, "-", v, false});
    out.all_equal = false;
  }
  return out;
}

}  // namespace dgpic
