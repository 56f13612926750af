#pragma once

// Exact sparse linear algebra over a Field: reduced row echelon bases,
// nullspaces and coordinate solves. Everything is deterministic: pivots are
// always the smallest column index of a row.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dgpic/scalar.hpp"

namespace dgpic::linalg {

/// Sorted by column index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

inline Scalar entry(const SparseVector& v, std::size_t col, const Scalar& zero) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != v.end() && it->first == col) return it->second;
  return zero;
}

/// a + factor * b
inline SparseVector axpy(const SparseVector& a, const Scalar& factor, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, factor * ib->second);
      ++ib;
    } else {
      Scalar s = ia->second + factor * ib->second;
      if (!s.is_zero()) out.emplace_back(ia->first, std::move(s));
      ++ia;
      ++ib;
    }
  }
  return out;
}

inline SparseVector scaled(const SparseVector& v, const Scalar& factor) {
  SparseVector out;
  if (factor.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& [c, s] : v) out.emplace_back(c, factor * s);
  return out;
}

/// Builds a SparseVector from unordered (column, value) contributions.
class VectorBuilder {
 public:
  void add(std::size_t col, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(col, s);
    if (!inserted) it->second += s;
  }

  SparseVector finish() const {
    SparseVector out;
    for (const auto& [c, s] : acc_) {
      if (!s.is_zero()) out.emplace_back(c, s);
    }
    return out;
  }

 private:
  std::map<std::size_t, Scalar> acc_;
};

/// Row space kept in fully reduced row echelon form.
class EchelonBasis {
 public:
  /// Eliminates every pivot column of the basis from v.
  SparseVector reduce(SparseVector v) const {
    // Rows are fully reduced, so eliminating one pivot never reintroduces
    // another: a single left-to-right pass suffices.
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = pivot_row_.find(v[pos].first);
      if (it == pivot_row_.end()) {
        ++pos;
        continue;
      }
      Scalar factor = -v[pos].second;
      std::size_t col = v[pos].first;
      v = axpy(v, factor, rows_[it->second]);
      pos = static_cast<std::size_t>(
          std::lower_bound(v.begin(), v.end(), col,
                           [](const auto& e, std::size_t c) { return e.first < c; }) -
          v.begin());
    }
    return v;
  }

  /// Returns true when v enlarged the span.
  bool insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    Scalar inv = r.front().second.inverse();
    r = scaled(r, inv);
    std::size_t pivot = r.front().first;
    for (auto& row : rows_) {
      Scalar c = entry(row, pivot, inv.zero_like());
      if (!c.is_zero()) row = axpy(row, -c, r);
    }
    pivot_row_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }

  /// Rows ordered by pivot column.
  std::vector<SparseVector> rows() const {
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, idx] : pivot_row_) out.push_back(rows_[idx]);
    return out;
  }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (const auto& [pivot, idx] : pivot_row_) out.push_back(pivot);
    return out;
  }

 private:
  std::vector<SparseVector> rows_;
  std::map<std::size_t, std::size_t> pivot_row_;
};

/// Rank via a semi-echelon form: each row's entries sit at or right of its
/// pivot, so one left-to-right pass reduces a vector.
inline std::size_t rank(const std::vector<SparseVector>& rows) {
  std::map<std::size_t, SparseVector> by_pivot;
  for (SparseVector v : rows) {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = by_pivot.find(v[pos].first);
      if (it == by_pivot.end()) {
        ++pos;
        continue;
      }
      std::size_t col = v[pos].first;
      v = axpy(v, -v[pos].second, it->second);
      pos = static_cast<std::size_t>(
          std::lower_bound(v.begin(), v.end(), col,
                           [](const auto& e, std::size_t c) { return e.first < c; }) -
          v.begin());
    }
    if (v.empty()) continue;
    Scalar inv = v.front().second.inverse();
    std::size_t pivot = v.front().first;
    by_pivot.emplace(pivot, scaled(v, inv));
  }
  return by_pivot.size();
}

/// Basis of {x : E x = 0} for equation rows E over `unknowns` columns,
/// returned in reduced row echelon form.
inline std::vector<SparseVector> nullspace(const std::vector<SparseVector>& equations,
                                           std::size_t unknowns, const Field& field) {
  EchelonBasis eq;
  for (const auto& e : equations) eq.insert(e);
  auto rows = eq.rows();
  std::vector<bool> is_pivot(unknowns, false);
  for (const auto& r : rows) is_pivot[r.front().first] = true;

  EchelonBasis kernel;
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    VectorBuilder v;
    v.add(f, field.one());
    for (const auto& r : rows) {
      Scalar c = entry(r, f, field.zero());
      if (!c.is_zero()) v.add(r.front().first, -c);
    }
    kernel.insert(v.finish());
  }
  return kernel.rows();
}

/// Kernel of the linear map sending basis vector i to images[i], i.e. all
/// coefficient vectors a with sum_i a_i images[i] = 0.
inline std::vector<SparseVector> kernel_of_map(const std::vector<SparseVector>& images,
                                               const Field& field) {
  std::map<std::size_t, VectorBuilder> by_output;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (const auto& [c, s] : images[i]) by_output[c].add(i, s);
  }
  std::vector<SparseVector> equations;
  equations.reserve(by_output.size());
  for (const auto& [c, b] : by_output) equations.push_back(b.finish());
  return nullspace(equations, images.size(), field);
}

/// Canonical complement of span(sub) inside span(vectors): each vector is
/// reduced modulo the echelon form of `sub`, and the reduced vectors are put
/// in reduced row echelon form.
inline std::vector<SparseVector> complement_basis(const std::vector<SparseVector>& vectors,
                                                  const std::vector<SparseVector>& sub) {
  EchelonBasis s;
  for (const auto& v : sub) s.insert(v);
  EchelonBasis out;
  for (const auto& v : vectors) out.insert(s.reduce(v));
  // s-reduced vectors stay s-reduced under linear combination.
  return out.rows();
}

/// Expresses vectors in terms of a fixed independent family.
class Coordinates {
 public:
  Coordinates(const std::vector<SparseVector>& basis, const Field& field)
      : field_(field), size_(basis.size()) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      SparseVector v = basis[i];
      SparseVector combo{{i, field.one()}};
      reduce_tracked(v, combo);
      if (v.empty()) throw std::invalid_argument("Coordinates: dependent basis");
      Scalar inv = v.front().second.inverse();
      rows_.push_back({scaled(v, inv), scaled(combo, inv)});
      pivot_.emplace(rows_.back().vec.front().first, rows_.size() - 1);
    }
  }

  /// Coefficients (dense, size = basis size) or nullopt if v is outside the span.
  std::optional<std::vector<Scalar>> solve(SparseVector v) const {
    SparseVector combo;
    reduce_tracked(v, combo);
    if (!v.empty()) return std::nullopt;
    std::vector<Scalar> out(size_, field_.zero());
    // combo holds -coefficients: v - sum c_i b_i = 0 after reduction.
    for (const auto& [i, s] : combo) out[i] = -s;
    return out;
  }

 private:
  struct Row {
    SparseVector vec;
    SparseVector combo;
  };

  void reduce_tracked(SparseVector& v, SparseVector& combo) const {
    bool changed = true;
    while (changed && !v.empty()) {
      changed = false;
      for (const auto& [c, s] : v) {
        auto it = pivot_.find(c);
        if (it == pivot_.end()) continue;
        Scalar factor = -s;
        const Row& r = rows_[it->second];
        v = axpy(v, factor, r.vec);
        combo = axpy(combo, factor, r.combo);
        changed = true;
        break;
      }
    }
  }

  Field field_;
  std::size_t size_;
  std::vector<Row> rows_;
  std::map<std::size_t, std::size_t> pivot_;
};

/// Dense helpers for the small square matrices (Ext algebra, automorphisms).
using DenseMatrix = std::vector<std::vector<Scalar>>;

inline DenseMatrix identity(std::size_t n, const Field& field) {
  DenseMatrix m(n, std::vector<Scalar>(n, field.zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = field.one();
  return m;
}

inline DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, const Field& field) {
  std::size_t n = a.size();
  std::size_t k = b.size();
  std::size_t m = k == 0 ? 0 : b[0].size();
  DenseMatrix out(n, std::vector<Scalar>(m, field.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
      }
    }
  }
  return out;
}

/// Row-major flattening, index i * cols + j.
inline SparseVector flatten(const DenseMatrix& m) {
  SparseVector out;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!m[i][j].is_zero()) out.emplace_back(i * cols + j, m[i][j]);
    }
  }
  return out;
}

inline DenseMatrix unflatten(const SparseVector& v, std::size_t rows, std::size_t cols,
                             const Field& field) {
  DenseMatrix m(rows, std::vector<Scalar>(cols, field.zero()));
  for (const auto& [idx, s] : v) m[idx / cols][idx % cols] = s;
  return m;
}

inline std::size_t dense_rank(const DenseMatrix& m) {
  std::vector<SparseVector> rows;
  rows.reserve(m.size());
  for (const auto& r : m) {
    SparseVector v;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (!r[j].is_zero()) v.emplace_back(j, r[j]);
    }
    rows.push_back(std::move(v));
  }
  return rank(rows);
}

}  // namespace dgpic::linalg
