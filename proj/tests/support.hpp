#pragma once

#include <random>
#include <string>
#include <vector>

#include "dgpic/dgpic.hpp"

namespace dgpic::testing {

inline std::string input_path(const std::string& name) { return std::string(DGPIC_INPUTS) + "/" + name; }

inline InputSpec load_spec(const std::string& name) { return parse_input(input_path(name + ".json")); }

inline DgAlgebra load_dga(const std::string& name) { return build_dga(load_spec(name)); }

/// Inputs whose DG structure is valid.
inline const std::vector<std::string>& valid_inputs() {
  static const std::vector<std::string> names{"trivial_free_2", "trivial_free_3", "trivial_poly_2", "dgfree",
                                              "exmw",           "downup_f7",      "single_gen",     "case4",
                                              "row2",           "row4",           "nonkoszul_control"};
  return names;
}

/// Inputs for which the resolution is certified within the window.
inline const std::vector<std::string>& resolved_inputs() {
  static const std::vector<std::string> names{"trivial_free_2", "trivial_free_3", "trivial_poly_2", "dgfree", "exmw",
                                              "single_gen",     "case4",          "row2",           "row4"};
  return names;
}

inline Scalar small_scalar(std::mt19937_64& rng, const Field& field) {
  return field.from_int(static_cast<std::int64_t>(rng() % 7) - 3);
}

/// Random homogeneous element of degree d, reduced to normal form.
inline NcPoly random_element(std::mt19937_64& rng, const Presentation& pres, int d, int terms = 4) {
  const Field& field = pres.field();
  NcPoly p(field);
  const auto n = pres.num_generators();
  for (int t = 0; t < terms; ++t) {
    std::vector<Letter> letters;
    for (int i = 0; i < d; ++i) letters.push_back(static_cast<Letter>(rng() % n));
    p.add_term(Word(letters), small_scalar(rng, field));
  }
  return pres.normal_form(p);
}

inline FinDimAlgebra ext_of(const std::string& name) {
  DgAlgebra alg = load_dga(name);
  ResolutionResult r = build_resolution(alg, 8);
  return compute_ext_algebra(r.resolution, alg);
}

inline linalg::DenseMatrix diag(const Field& f, const std::vector<std::int64_t>& d) {
  linalg::DenseMatrix M(d.size(), std::vector<Scalar>(d.size(), f.zero()));
  for (std::size_t i = 0; i < d.size(); ++i) M[i][i] = f.from_int(d[i]);
  return M;
}

}  // namespace dgpic::testing
