#pragma once

// Finite-dimensional algebras given by structure constants, and the
// Ext-algebra of a Koszul resolution realized as the matrices commuting
// with its differential.

#include <optional>
#include <string>
#include <vector>

#include "dgpic/linalg.hpp"
#include "dgpic/resolution.hpp"

namespace dgpic {

/// e_i * e_j = sum_t c[i][j][t] e_t, with e_1 (index 0) the unit.
using StructureConstants = std::vector<std::vector<std::vector<Scalar>>>;

class FinDimAlgebra {
 public:
  FinDimAlgebra() = default;

  FinDimAlgebra(Field field, StructureConstants c, std::vector<std::string> labels = {})
      : field_(field), c_(std::move(c)), labels_(std::move(labels)) {
    if (labels_.empty()) {
      for (std::size_t i = 0; i < c_.size(); ++i) labels_.push_back("e" + std::to_string(i + 1));
    }
  }

  /// Structure constants of the span of `matrices` under matrix product.
  /// The first matrix must be the identity; the span must be closed.
  static FinDimAlgebra from_matrices(const Field& field, std::vector<linalg::DenseMatrix> matrices) {
    const std::size_t m = matrices.size();
    std::vector<linalg::SparseVector> flat;
    for (const auto& M : matrices) flat.push_back(linalg::flatten(M));
    linalg::Coordinates coords(flat, field);
    StructureConstants c(m, std::vector<std::vector<Scalar>>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        auto prod = linalg::flatten(linalg::multiply(matrices[i], matrices[j], field));
        auto x = coords.solve(prod);
        if (!x) throw Error(ErrorCode::DimensionMismatch, "matrix span is not multiplicatively closed");
        c[i][j] = std::move(*x);
      }
    }
    FinDimAlgebra out(field, std::move(c));
    out.matrices_ = std::move(matrices);
    return out;
  }

  const Field& field() const { return field_; }
  std::size_t dim() const { return c_.size(); }
  const StructureConstants& constants() const { return c_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t t) const { return c_[i][j][t]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<std::vector<linalg::DenseMatrix>>& matrices() const { return matrices_; }

  /// Product of coordinate vectors.
  std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    std::vector<Scalar> out(dim(), field_.zero());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j].is_zero()) continue;
        Scalar s = x[i] * y[j];
        for (std::size_t t = 0; t < dim(); ++t) {
          if (!c_[i][j][t].is_zero()) out[t] += s * c_[i][j][t];
        }
      }
    }
    return out;
  }

  std::vector<Scalar> basis_vector(std::size_t i) const {
    std::vector<Scalar> v(dim(), field_.zero());
    v[i] = field_.one();
    return v;
  }

  /// Same space with the reversed product.
  FinDimAlgebra opposite() const {
    StructureConstants c(dim(), std::vector<std::vector<Scalar>>(dim()));
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = 0; j < dim(); ++j) c[i][j] = c_[j][i];
    }
    return FinDimAlgebra(field_, std::move(c), labels_);
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!(c_[i][j] == c_[j][i])) return false;
      }
    }
    return true;
  }

  bool satisfies_unit_law() const {
    for (std::size_t j = 0; j < dim(); ++j) {
      for (std::size_t t = 0; t < dim(); ++t) {
        bool delta = j == t;
        if (c_[0][j][t] != (delta ? field_.one() : field_.zero())) return false;
        if (c_[j][0][t] != (delta ? field_.one() : field_.zero())) return false;
      }
    }
    return true;
  }

  /// (e_i e_j) e_l = e_i (e_j e_l) for all index triples.
  bool is_associative() const {
    const std::size_t m = dim();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t l = 0; l < m; ++l) {
          for (std::size_t s = 0; s < m; ++s) {
            Scalar lhs = field_.zero();
            Scalar rhs = field_.zero();
            for (std::size_t t = 0; t < m; ++t) {
              lhs += c_[i][j][t] * c_[t][l][s];
              rhs += c_[j][l][t] * c_[i][t][s];
            }
            if (lhs != rhs) return false;
          }
        }
      }
    }
    return true;
  }

  /// Lines such as "e2*e3 = -e4" for every product of non-unit basis
  /// elements.
  std::vector<std::string> product_table() const {
    std::vector<std::string> out;
    for (std::size_t i = 1; i < dim(); ++i) {
      for (std::size_t j = 1; j < dim(); ++j) {
        out.push_back(labels_[i] + "*" + labels_[j] + " = " + format(c_[i][j]));
      }
    }
    return out;
  }

  std::string format(const std::vector<Scalar>& v) const {
    std::string out;
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (v[t].is_zero()) continue;
      std::string coeff = v[t].to_string();
      bool negative = coeff[0] == '-';
      if (negative) coeff = coeff.substr(1);
      if (out.empty()) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      out += (coeff == "1" ? "" : coeff + "*") + labels_[t];
    }
    return out.empty() ? "0" : out;
  }

 private:
  Field field_;
  StructureConstants c_;
  std::vector<std::string> labels_;
  std::optional<std::vector<linalg::DenseMatrix>> matrices_;
};

namespace detail {

/// Span of all products a*b with a in `left`, b in `right` (flattened
/// matrices), as an echelon basis.
inline linalg::EchelonBasis matrix_products(const std::vector<linalg::SparseVector>& left,
                                            const std::vector<linalg::SparseVector>& right,
                                            std::size_t m, const Field& field) {
  linalg::EchelonBasis out;
  for (const auto& a : left) {
    auto A = linalg::unflatten(a, m, m, field);
    for (const auto& b : right) {
      out.insert(linalg::flatten(linalg::multiply(A, linalg::unflatten(b, m, m, field), field)));
    }
  }
  return out;
}

}  // namespace detail

/// E = { M : M D = D M }, scalar m x m matrices with f(b_i) = sum_j M[i][j] b_j.
/// Basis: e_1 = identity, then the augmentation ideal J = {M in E : M[1][1] = 0}
/// adapted to its powers (complements of J^{s+1} in J^s, s = 1, 2, ...).
inline FinDimAlgebra compute_ext_algebra(const SemiFreeResolution& F, const DgAlgebra& alg) {
  const Field& field = alg.field();
  const std::size_t m = F.size();
  const GradedBasis a1 = alg.pres().degree_basis(1);
  for (const auto& row : F.differential) {
    for (const auto& e : row) {
      auto d = e.homogeneous_degree(1);
      if (!d || *d != 1) throw Error(ErrorCode::DimensionMismatch, "resolution is not Koszul");
    }
  }

  // Unknown M[i][j] has index i*m + j. Equation for entry (i,l), word w:
  //   sum_j M[i][j] D[j][l]_w - sum_j D[i][j]_w M[j][l] = 0.
  std::vector<linalg::SparseVector> equations;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t l = 0; l < m; ++l) {
      for (const auto& w : a1.words) {
        linalg::VectorBuilder b;
        for (std::size_t j = 0; j < m; ++j) {
          b.add(i * m + j, F.differential[j][l].coefficient(w));
          b.add(j * m + l, -F.differential[i][j].coefficient(w));
        }
        auto v = b.finish();
        if (!v.empty()) equations.push_back(std::move(v));
      }
    }
  }
  auto solutions = linalg::nullspace(equations, m * m, field);
  if (solutions.size() != m) {
    throw Error(ErrorCode::DimensionMismatch, "dim Z^0(Hom(F,F)) = " + std::to_string(solutions.size()) +
                                                  " but the resolution has " + std::to_string(m) +
                                                  " basis elements");
  }

  // Augmentation ideal: solutions with vanishing (1,1) entry.
  std::vector<linalg::SparseVector> ideal;
  {
    std::vector<linalg::SparseVector> corner;
    for (const auto& s : solutions) {
      Scalar v = linalg::entry(s, 0, field.zero());
      corner.push_back(v.is_zero() ? linalg::SparseVector{} : linalg::SparseVector{{0, v}});
    }
    for (const auto& k : linalg::kernel_of_map(corner, field)) {
      linalg::SparseVector combo;
      for (const auto& [idx, c] : k) combo = linalg::axpy(combo, c, solutions[idx]);
      ideal.push_back(std::move(combo));
    }
    linalg::EchelonBasis e;
    for (const auto& v : ideal) e.insert(v);
    ideal = e.rows();
  }

  std::vector<linalg::DenseMatrix> basis{linalg::identity(m, field)};
  std::vector<linalg::SparseVector> power = ideal;
  while (!power.empty()) {
    auto next = detail::matrix_products(power, ideal, m, field);
    if (next.rank() == power.size()) {
      // Not nilpotent: keep the remaining power as one block.
      for (const auto& v : power) basis.push_back(linalg::unflatten(v, m, m, field));
      break;
    }
    for (const auto& v : linalg::complement_basis(power, next.rows())) {
      basis.push_back(linalg::unflatten(v, m, m, field));
    }
    power = next.rows();
  }
  return FinDimAlgebra::from_matrices(field, std::move(basis));
}

struct RadicalInfo {
  /// Basis of the radical in algebra coordinates.
  std::vector<std::vector<Scalar>> basis;
  /// dim m, dim m^2, ..., ending with 0.
  std::vector<std::size_t> filtration;
  /// "trace_form" over Q, "adapted_span" over F_p.
  std::string method;

  std::size_t dim() const { return basis.size(); }
};

namespace detail {

inline linalg::SparseVector sparse(const std::vector<Scalar>& v) {
  linalg::SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  }
  return out;
}

inline std::vector<Scalar> dense(const linalg::SparseVector& v, std::size_t n, const Field& field) {
  std::vector<Scalar> out(n, field.zero());
  for (const auto& [i, s] : v) out[i] = s;
  return out;
}

/// Dimensions of I, I^2, ... until zero; nullopt if the powers stabilize
/// at a nonzero space.
inline std::optional<std::vector<std::size_t>> power_filtration(const FinDimAlgebra& E,
                                                                const std::vector<std::vector<Scalar>>& ideal) {
  std::vector<std::size_t> dims{ideal.size()};
  std::vector<std::vector<Scalar>> power = ideal;
  while (!power.empty()) {
    linalg::EchelonBasis next;
    for (const auto& a : power) {
      for (const auto& b : ideal) next.insert(sparse(E.multiply(a, b)));
    }
    if (next.rank() == power.size()) return std::nullopt;
    power.clear();
    for (const auto& r : next.rows()) power.push_back(dense(r, E.dim(), E.field()));
    dims.push_back(power.size());
  }
  return dims;
}

}  // namespace detail

/// Jacobson radical. Over Q: the radical of the trace form
/// (x, y) -> tr(L_{xy}). Over F_p: span(e_2..e_m), accepted only if it is a
/// nilpotent two-sided ideal.
inline RadicalInfo radical(const FinDimAlgebra& E) {
  const Field& field = E.field();
  const std::size_t m = E.dim();
  RadicalInfo info;
  if (field.is_rational()) {
    info.method = "trace_form";
    std::vector<Scalar> tau(m, field.zero());
    for (std::size_t t = 0; t < m; ++t) {
      for (std::size_t s = 0; s < m; ++s) tau[t] += E.constant(t, s, s);
    }
    // x in the radical iff sum_i x_i G[i][j] = 0 for all j.
    std::vector<linalg::SparseVector> equations;
    for (std::size_t j = 0; j < m; ++j) {
      linalg::VectorBuilder b;
      for (std::size_t i = 0; i < m; ++i) {
        Scalar g = field.zero();
        for (std::size_t t = 0; t < m; ++t) g += E.constant(i, j, t) * tau[t];
        b.add(i, g);
      }
      equations.push_back(b.finish());
    }
    for (const auto& v : linalg::nullspace(equations, m, field)) {
      info.basis.push_back(detail::dense(v, m, field));
    }
    auto filtration = detail::power_filtration(E, info.basis);
    if (!filtration) throw Error(ErrorCode::RadicalUndetermined, "trace-form radical is not nilpotent");
    info.filtration = std::move(*filtration);
    return info;
  }

  info.method = "adapted_span";
  for (std::size_t i = 1; i < m; ++i) info.basis.push_back(E.basis_vector(i));
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!E.constant(i, j, 0).is_zero() || !E.constant(j, i, 0).is_zero()) {
        throw Error(ErrorCode::RadicalUndetermined, "span(e2..em) is not a two-sided ideal");
      }
    }
  }
  auto filtration = detail::power_filtration(E, info.basis);
  if (!filtration) throw Error(ErrorCode::RadicalUndetermined, "span(e2..em) is not nilpotent");
  info.filtration = std::move(*filtration);
  return info;
}

inline bool is_local(const FinDimAlgebra& E, const RadicalInfo& rad) { return E.dim() - rad.dim() == 1; }

inline bool is_local(const FinDimAlgebra& E) { return is_local(E, radical(E)); }

}  // namespace dgpic
