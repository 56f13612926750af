#pragma once

// Automorphisms of a finite-dimensional algebra E. A linear map sigma is a
// matrix C with sigma(e_i) = sum_j C[i][j] e_j (rows are images).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dgpic/ext_algebra.hpp"
#include "dgpic/param_poly.hpp"

namespace dgpic {

struct DerivationSpace {
  std::size_t dim = 0;
  /// delta(e_i) = sum_s basis[k][i][s] e_s.
  std::vector<linalg::DenseMatrix> basis;
};

/// Solves delta(e_i e_j) = delta(e_i) e_j + e_i delta(e_j) for all pairs.
inline DerivationSpace derivations(const FinDimAlgebra& E) {
  const std::size_t m = E.dim();
  const Field& field = E.field();
  // Unknown delta[i][s] has index i*m + s. Coefficient of e_t:
  //   sum_s c[i][j][s] d[s][t] - sum_p d[i][p] c[p][j][t] - sum_q d[j][q] c[i][q][t] = 0.
  std::vector<linalg::SparseVector> equations;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t t = 0; t < m; ++t) {
        linalg::VectorBuilder b;
        for (std::size_t s = 0; s < m; ++s) b.add(s * m + t, E.constant(i, j, s));
        for (std::size_t p = 0; p < m; ++p) b.add(i * m + p, -E.constant(p, j, t));
        for (std::size_t q = 0; q < m; ++q) b.add(j * m + q, -E.constant(i, q, t));
        auto v = b.finish();
        if (!v.empty()) equations.push_back(std::move(v));
      }
    }
  }
  DerivationSpace out;
  for (const auto& v : linalg::nullspace(equations, m * m, field)) {
    out.basis.push_back(linalg::unflatten(v, m, m, field));
  }
  out.dim = out.basis.size();
  return out;
}

inline bool is_derivation(const linalg::DenseMatrix& d, const FinDimAlgebra& E) {
  const std::size_t m = E.dim();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto lhs = E.multiply(d[i], E.basis_vector(j));
      auto rhs = E.multiply(E.basis_vector(i), d[j]);
      for (std::size_t t = 0; t < m; ++t) lhs[t] += rhs[t];
      std::vector<Scalar> image(m, E.field().zero());
      for (std::size_t s = 0; s < m; ++s) {
        const Scalar& c = E.constant(i, j, s);
        if (c.is_zero()) continue;
        for (std::size_t t = 0; t < m; ++t) image[t] += c * d[s][t];
      }
      if (lhs != image) return false;
    }
  }
  return true;
}

/// Span of ad_{e_k} = [e_k, -] for k = 1..m.
inline DerivationSpace inner_derivations(const FinDimAlgebra& E) {
  const std::size_t m = E.dim();
  const Field& field = E.field();
  linalg::EchelonBasis span;
  for (std::size_t k = 0; k < m; ++k) {
    linalg::DenseMatrix ad(m, std::vector<Scalar>(m, field.zero()));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t t = 0; t < m; ++t) ad[i][t] = E.constant(k, i, t) - E.constant(i, k, t);
    }
    span.insert(linalg::flatten(ad));
  }
  DerivationSpace out;
  for (const auto& r : span.rows()) out.basis.push_back(linalg::unflatten(r, m, m, field));
  out.dim = out.basis.size();
  return out;
}

struct OutDimension {
  std::size_t dim_der = 0;
  std::size_t dim_inn_der = 0;
  std::size_t dim_out = 0;
  /// Set over F_p, where Lie-level counts need not match group dimensions.
  bool char_p_caveat = false;
};

inline OutDimension out_dimension(const FinDimAlgebra& E) {
  OutDimension out;
  out.dim_der = derivations(E).dim;
  out.dim_inn_der = inner_derivations(E).dim;
  out.dim_out = out.dim_der - out.dim_inn_der;
  out.char_p_caveat = !E.field().is_rational();
  return out;
}

/// Invertible, fixes e_1, and sigma(e_i) sigma(e_j) = sigma(e_i e_j).
inline bool is_automorphism(const linalg::DenseMatrix& C, const FinDimAlgebra& E) {
  const std::size_t m = E.dim();
  const Field& field = E.field();
  if (C.size() != m) return false;
  for (const auto& row : C) {
    if (row.size() != m) return false;
    for (const auto& s : row) {
      if (!field.contains(s)) return false;
    }
  }
  if (C[0] != E.basis_vector(0)) return false;
  if (linalg::dense_rank(C) != m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto lhs = E.multiply(C[i], C[j]);
      std::vector<Scalar> rhs(m, field.zero());
      for (std::size_t s = 0; s < m; ++s) {
        const Scalar& c = E.constant(i, j, s);
        if (c.is_zero()) continue;
        for (std::size_t t = 0; t < m; ++t) rhs[t] += c * C[s][t];
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

using ParamMatrix = std::vector<std::vector<ParamPoly>>;

namespace detail {

/// Coefficient of e_t in sigma(e_i) sigma(e_j) - sigma(e_i e_j) for a
/// matrix of polynomials.
inline ParamPoly multiplicativity_defect(const ParamMatrix& C, const FinDimAlgebra& E, std::size_t i,
                                         std::size_t j, std::size_t t) {
  const std::size_t m = E.dim();
  ParamPoly out(E.field());
  for (std::size_t p = 0; p < m; ++p) {
    if (C[i][p].is_zero()) continue;
    for (std::size_t q = 0; q < m; ++q) {
      const Scalar& c = E.constant(p, q, t);
      if (c.is_zero() || C[j][q].is_zero()) continue;
      out += (C[i][p] * C[j][q]).scaled(c);
    }
  }
  for (std::size_t s = 0; s < m; ++s) {
    const Scalar& c = E.constant(i, j, s);
    if (!c.is_zero()) out -= C[s][t].scaled(c);
  }
  return out;
}

/// Laplace expansion along the first row.
inline ParamPoly determinant(const ParamMatrix& M, const Field& field) {
  const std::size_t n = M.size();
  if (n == 0) return ParamPoly::constant(field, field.one());
  if (n == 1) return M[0][0];
  ParamPoly out(field);
  for (std::size_t col = 0; col < n; ++col) {
    if (M[0][col].is_zero()) continue;
    ParamMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<ParamPoly> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(M[r][c]);
      }
      minor.push_back(std::move(row));
    }
    ParamPoly term = M[0][col] * determinant(minor, field);
    out += col % 2 == 0 ? term : -term;
  }
  return out;
}

inline Scalar sample_scalar(std::mt19937_64& rng, const Field& field) {
  if (field.is_rational()) return field.from_int(static_cast<std::int64_t>(rng() % 19) - 9);
  return field.from_int(static_cast<std::int64_t>(rng() % field.characteristic()));
}

}  // namespace detail

/// The multiplicativity equations for an unknown matrix C = (c_ij), reduced
/// by repeated linear elimination and substitution.
struct AutConstraintSystem {
  std::size_t size = 0;
  Field field;
  std::vector<std::string> variables;
  std::vector<ParamPoly> equations;
  std::map<std::size_t, ParamPoly> solved;
  std::vector<std::size_t> free_variables;
  std::vector<ParamPoly> residual;
  ParamPoly determinant;
  bool consistent = true;

  ParamPoly entry(std::size_t i, std::size_t j) const {
    std::size_t v = i * size + j;
    auto it = solved.find(v);
    return it != solved.end() ? it->second : ParamPoly::variable(field, v);
  }

  ParamMatrix matrix() const {
    ParamMatrix M(size, std::vector<ParamPoly>(size));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) M[i][j] = entry(i, j);
    }
    return M;
  }

  /// Solved variables whose value is a constant.
  std::vector<std::size_t> pinned() const {
    std::vector<std::size_t> out;
    for (const auto& [v, e] : solved) {
      if (e.is_constant()) out.push_back(v);
    }
    return out;
  }

  /// Solved variables whose value depends on free variables.
  std::vector<std::size_t> bound() const {
    std::vector<std::size_t> out;
    for (const auto& [v, e] : solved) {
      if (!e.is_constant()) out.push_back(v);
    }
    return out;
  }

  /// e.g. "c11 = 1", "c33 = c22^2", "c22*c23 = 0", "det = c22^3 != 0".
  std::vector<std::string> lines() const {
    std::vector<std::string> out;
    for (std::size_t v : pinned()) out.push_back(variables[v] + " = " + solved.at(v).to_string(variables));
    for (std::size_t v : bound()) out.push_back(variables[v] + " = " + solved.at(v).to_string(variables));
    for (const auto& r : residual) out.push_back(r.to_string(variables) + " = 0");
    out.push_back("det = " + determinant.to_string(variables) + " != 0");
    return out;
  }

  /// Whether a scalar matrix satisfies the reduced system and is invertible.
  bool satisfied_by(const linalg::DenseMatrix& C) const {
    if (!consistent || C.size() != size) return false;
    std::vector<Scalar> point(size * size, field.zero());
    for (std::size_t i = 0; i < size; ++i) {
      if (C[i].size() != size) return false;
      for (std::size_t j = 0; j < size; ++j) point[i * size + j] = C[i][j];
    }
    for (const auto& [v, e] : solved) {
      if (e.evaluate(point) != point[v]) return false;
    }
    for (const auto& r : residual) {
      if (!r.evaluate(point).is_zero()) return false;
    }
    return !determinant.evaluate(point).is_zero();
  }

  /// A random solution: free variables drawn from the generator (each set
  /// to zero with probability 1/2 so that residual equations can hold),
  /// bound variables evaluated; nullopt if the draw is rejected.
  std::optional<linalg::DenseMatrix> sample(std::mt19937_64& rng) const {
    if (!consistent) return std::nullopt;
    std::vector<Scalar> point(size * size, field.zero());
    for (std::size_t v : free_variables) {
      point[v] = (rng() % 2 == 0) ? field.zero() : detail::sample_scalar(rng, field);
    }
    for (const auto& r : residual) {
      if (!r.evaluate(point).is_zero()) return std::nullopt;
    }
    if (determinant.evaluate(point).is_zero()) return std::nullopt;
    linalg::DenseMatrix C(size, std::vector<Scalar>(size, field.zero()));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        std::size_t v = i * size + j;
        auto it = solved.find(v);
        C[i][j] = it != solved.end() ? it->second.evaluate(point) : point[v];
      }
    }
    return C;
  }
};

inline std::string entry_variable_name(std::size_t i, std::size_t j, std::size_t m) {
  if (m < 10) return "c" + std::to_string(i + 1) + std::to_string(j + 1);
  return "c" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

namespace detail {

inline ParamPoly monic(const ParamPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.terms().begin()->second.inverse());
}

class ConstraintReducer {
 public:
  ConstraintReducer(AutConstraintSystem& sys) : sys_(sys), eqs_(sys.equations) {}

  void run() {
    for (;;) {
      clean();
      if (!sys_.consistent) return;
      if (eliminate_linear()) continue;
      if (kill_pure_powers()) continue;
      if (substitute_single()) continue;
      break;
    }
    sys_.residual = eqs_;
  }

 private:
  void assign(std::size_t v, ParamPoly value) {
    for (auto& [u, e] : sys_.solved) e = e.substitute(v, value);
    for (auto& e : eqs_) e = e.substitute(v, value);
    sys_.solved[v] = std::move(value);
  }

  void clean() {
    std::vector<ParamPoly> kept;
    for (const auto& e : eqs_) {
      if (e.is_zero()) continue;
      if (e.is_constant()) {
        sys_.consistent = false;
        return;
      }
      ParamPoly n = monic(e);
      if (std::find(kept.begin(), kept.end(), n) == kept.end()) kept.push_back(std::move(n));
    }
    eqs_ = std::move(kept);
  }

  /// Gaussian elimination on equations of total degree <= 1, pivoting on
  /// the highest-index variable.
  bool eliminate_linear() {
    const std::size_t n = sys_.variables.size();
    linalg::EchelonBasis basis;
    bool any = false;
    for (const auto& e : eqs_) {
      if (e.total_degree() > 1) continue;
      any = true;
      linalg::VectorBuilder b;
      for (const auto& [mono, c] : e.terms()) {
        std::size_t col = n;
        for (std::size_t i = 0; i < mono.size(); ++i) {
          if (mono[i] > 0) col = n - 1 - i;
        }
        b.add(col, c);
      }
      basis.insert(b.finish());
    }
    if (!any) return false;
    for (const auto& row : basis.rows()) {
      std::size_t pivot = row.front().first;
      if (pivot == n) {
        sys_.consistent = false;
        return false;
      }
      ParamPoly value(sys_.field);
      for (std::size_t k = 1; k < row.size(); ++k) {
        const auto& [col, c] = row[k];
        if (col == n) {
          value -= ParamPoly::constant(sys_.field, c);
        } else {
          value -= ParamPoly::variable(sys_.field, n - 1 - col).scaled(c);
        }
      }
      assign(n - 1 - pivot, value);
    }
    return true;
  }

  /// a * v^k = 0 forces v = 0.
  bool kill_pure_powers() {
    for (const auto& e : eqs_) {
      if (e.terms().size() != 1) continue;
      auto vars = e.variables();
      if (vars.size() != 1) continue;
      assign(*vars.begin(), ParamPoly(sys_.field));
      return true;
    }
    return false;
  }

  /// Solves for the highest-index variable occurring as const * v + r with
  /// r free of v.
  bool substitute_single() {
    std::optional<std::size_t> best;
    ParamPoly value;
    for (const auto& e : eqs_) {
      for (std::size_t v : e.variables()) {
        if (best && v <= *best) continue;
        auto split = e.split_linear(v);
        if (!split || !split->first.is_constant() || split->first.is_zero()) continue;
        best = v;
        value = (-split->second).scaled(split->first.constant_term().inverse());
      }
    }
    if (!best) return false;
    assign(*best, value);
    return true;
  }

  AutConstraintSystem& sys_;
  std::vector<ParamPoly> eqs_;
};

}  // namespace detail

inline AutConstraintSystem aut_constraints(const FinDimAlgebra& E) {
  const std::size_t m = E.dim();
  const Field& field = E.field();
  AutConstraintSystem sys;
  sys.size = m;
  sys.field = field;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) sys.variables.push_back(entry_variable_name(i, j, m));
  }
  ParamMatrix C(m, std::vector<ParamPoly>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) C[i][j] = ParamPoly::variable(field, i * m + j);
  }
  // sigma(e_1) = e_1.
  for (std::size_t j = 0; j < m; ++j) {
    ParamPoly eq = C[0][j];
    if (j == 0) eq -= ParamPoly::constant(field, field.one());
    sys.equations.push_back(eq);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t t = 0; t < m; ++t) {
        ParamPoly eq = detail::multiplicativity_defect(C, E, i, j, t);
        if (!eq.is_zero()) sys.equations.push_back(std::move(eq));
      }
    }
  }
  detail::ConstraintReducer(sys).run();
  for (std::size_t v = 0; v < m * m; ++v) {
    if (!sys.solved.count(v)) sys.free_variables.push_back(v);
  }
  sys.determinant = detail::determinant(sys.matrix(), field);
  return sys;
}

/// A parametrized matrix family sigma(e_i) = sum_j entries[i][j] e_j.
struct MatrixFamily {
  std::optional<Field> field;
  std::vector<std::string> parameters;
  ParamMatrix entries;
  std::vector<ParamPoly> side_conditions;

  /// Full m x m entries; an (m-1) x (m-1) grid is the block acting on
  /// e_2..e_m and is embedded as diag(1, block).
  ParamMatrix full(std::size_t m, const Field& f) const {
    if (entries.size() == m) return entries;
    if (entries.size() + 1 != m) {
      throw Error(ErrorCode::DimensionMismatch, "family has " + std::to_string(entries.size()) +
                                                    " rows for an algebra of dimension " +
                                                    std::to_string(m));
    }
    ParamMatrix out(m, std::vector<ParamPoly>(m, ParamPoly(f)));
    out[0][0] = ParamPoly::constant(f, f.one());
    for (std::size_t i = 0; i + 1 < m; ++i) {
      for (std::size_t j = 0; j + 1 < m; ++j) out[i + 1][j + 1] = entries[i][j];
    }
    return out;
  }
};

struct FamilyVerdict {
  bool identities_hold = false;
  bool dim_match = false;
  bool samples_pass = false;
  std::size_t samples_checked = 0;
  std::size_t parameter_count = 0;
  std::size_t dim_der = 0;
  std::vector<std::string> failures;

  bool passed() const { return identities_hold && dim_match && samples_pass; }
};

inline constexpr std::uint64_t kDefaultSampleSeed = 0x5eed2024ULL;

/// Checks the family as a polynomial identity, compares the parameter
/// count with dim Der(E), and tests sampled points with is_automorphism.
/// Returns the sampled automorphisms through `samples_out` when given.
inline FamilyVerdict verify_family(const MatrixFamily& fam, const FinDimAlgebra& E,
                                   std::size_t min_samples = 32,
                                   std::uint64_t seed = kDefaultSampleSeed,
                                   std::vector<linalg::DenseMatrix>* samples_out = nullptr) {
  const std::size_t m = E.dim();
  const Field& field = E.field();
  if (fam.field && !(*fam.field == field)) {
    throw Error(ErrorCode::ParameterFieldMismatch,
                "family over " + fam.field->name() + ", algebra over " + field.name());
  }
  auto check_field = [&](const ParamPoly& p) {
    for (const auto& [mono, c] : p.terms()) {
      if (!field.contains(c)) throw Error(ErrorCode::ParameterFieldMismatch, "family coefficient field");
    }
  };
  for (const auto& row : fam.entries) {
    for (const auto& e : row) check_field(e);
  }
  for (const auto& s : fam.side_conditions) check_field(s);

  ParamMatrix C = fam.full(m, field);
  FamilyVerdict verdict;
  verdict.parameter_count = fam.parameters.size();

  verdict.identities_hold = true;
  for (std::size_t j = 0; j < m; ++j) {
    ParamPoly expect = j == 0 ? ParamPoly::constant(field, field.one()) : ParamPoly(field);
    if (!(C[0][j] == expect)) {
      verdict.identities_hold = false;
      verdict.failures.push_back("sigma(e1) has coefficient " + C[0][j].to_string(fam.parameters) +
                                 " on e" + std::to_string(j + 1));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t t = 0; t < m; ++t) {
        ParamPoly d = detail::multiplicativity_defect(C, E, i, j, t);
        if (d.is_zero()) continue;
        verdict.identities_hold = false;
        if (verdict.failures.size() < 8) {
          verdict.failures.push_back("sigma(e" + std::to_string(i + 1) + ")sigma(e" + std::to_string(j + 1) +
                                     ") - sigma(e" + std::to_string(i + 1) + "e" + std::to_string(j + 1) +
                                     ") has coefficient " + d.to_string(fam.parameters) + " on e" +
                                     std::to_string(t + 1));
        }
      }
    }
  }

  verdict.dim_der = derivations(E).dim;
  verdict.dim_match = verdict.parameter_count == verdict.dim_der;

  std::mt19937_64 rng(seed);
  std::size_t attempts = 0;
  bool all_ok = true;
  while (verdict.samples_checked < min_samples && attempts < 200 * min_samples) {
    ++attempts;
    std::vector<Scalar> point;
    for (std::size_t k = 0; k < fam.parameters.size(); ++k) point.push_back(detail::sample_scalar(rng, field));
    bool admissible = true;
    for (const auto& s : fam.side_conditions) admissible = admissible && !s.evaluate(point).is_zero();
    if (!admissible) continue;
    linalg::DenseMatrix M(m, std::vector<Scalar>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) M[i][j] = C[i][j].evaluate(point);
    }
    ++verdict.samples_checked;
    if (!is_automorphism(M, E)) {
      all_ok = false;
      if (verdict.failures.size() < 16) verdict.failures.push_back("sample " + std::to_string(verdict.samples_checked) + " is not an automorphism");
    } else if (samples_out) {
      samples_out->push_back(std::move(M));
    }
  }
  verdict.samples_pass = all_ok && verdict.samples_checked >= min_samples;
  return verdict;
}

}  // namespace dgpic
