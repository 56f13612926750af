#pragma once

// Brute-force reference computations. Nothing here uses the rewriting,
// sparse linear algebra or resolution code: words are base-n integers over
// the full free algebra, the relation ideal is spanned explicitly in every
// degree, and ranks come from a private row reduction. Only Scalar and
// Field are shared with the rest of the library.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dgpic/error.hpp"
#include "dgpic/scalar.hpp"

namespace dgpic::oracle {

/// A word as a list of generator indices with a coefficient.
struct RawTerm {
  std::vector<int> word;
  Scalar coeff;
};
using RawPoly = std::vector<RawTerm>;

/// Plain data: generators are 0..n-1, all of degree 1.
struct RawAlgebra {
  Field field;
  int num_generators = 0;
  std::vector<RawPoly> relations;
  std::vector<RawPoly> differential;
};

/// Row convention: d(b_i) = sum_j D[i][j] b_j.
struct RawResolution {
  std::vector<std::vector<RawPoly>> D;
};

namespace detail {

using Row = std::map<std::size_t, Scalar>;

/// Entry of `row` at column c, created as zero of the right field.
inline Scalar& slot(Row& row, std::size_t c, const Scalar& like) {
  return row.try_emplace(c, like.zero_like()).first->second;
}

/// Incremental row reduction with rows keyed by pivot column.
class Reducer {
 public:
  explicit Reducer(Field field) : field_(field) {}

  bool add(Row r) {
    for (;;) {
      while (!r.empty() && r.begin()->second.is_zero()) r.erase(r.begin());
      if (r.empty()) return false;
      auto it = pivots_.find(r.begin()->first);
      if (it == pivots_.end()) break;
      Scalar f = -r.begin()->second;
      for (const auto& [c, s] : it->second) {
        Scalar& x = slot(r, c, s);
        x += f * s;
        if (x.is_zero()) r.erase(c);
      }
    }
    Scalar inv = r.begin()->second.inverse();
    for (auto& [c, s] : r) s *= inv;
    std::size_t p = r.begin()->first;
    pivots_.emplace(p, std::move(r));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  Field field_;
  std::map<std::size_t, Row> pivots_;
};

inline std::size_t power(int n, int d) {
  std::size_t out = 1;
  for (int i = 0; i < d; ++i) out *= static_cast<std::size_t>(n);
  return out;
}

/// Index of a word w_1..w_d: sum w_k n^{d-k}.
inline std::size_t index_of(const std::vector<int>& w, int n) {
  std::size_t idx = 0;
  for (int l : w) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(l);
  return idx;
}

inline std::vector<int> word_of(std::size_t idx, int n, int d) {
  std::vector<int> w(static_cast<std::size_t>(d));
  for (int k = d - 1; k >= 0; --k) {
    w[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<std::size_t>(n));
    idx /= static_cast<std::size_t>(n);
  }
  return w;
}

inline int degree_of(const RawPoly& p, int fallback) {
  return p.empty() ? fallback : static_cast<int>(p.front().word.size());
}

/// u * p * v as a row in the degree-|u|+|p|+|v| word basis.
inline void add_sandwich(Row& row, const std::vector<int>& u, const RawPoly& p,
                         const std::vector<int>& v, const Scalar& factor, int n) {
  for (const auto& t : p) {
    std::vector<int> w = u;
    w.insert(w.end(), t.word.begin(), t.word.end());
    w.insert(w.end(), v.begin(), v.end());
    slot(row, index_of(w, n), factor) += factor * t.coeff;
  }
}

/// Spanning set of the ideal in degree d: every u r v.
inline std::vector<Row> ideal_rows(const RawAlgebra& alg, int d) {
  const int n = alg.num_generators;
  std::vector<Row> rows;
  for (const auto& r : alg.relations) {
    int dr = degree_of(r, 0);
    if (r.empty() || dr > d) continue;
    Scalar one = alg.field.one();
    for (int lu = 0; lu + dr <= d; ++lu) {
      int lv = d - dr - lu;
      for (std::size_t iu = 0; iu < power(n, lu); ++iu) {
        for (std::size_t iv = 0; iv < power(n, lv); ++iv) {
          Row row;
          add_sandwich(row, word_of(iu, n, lu), r, word_of(iv, n, lv), one, n);
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

/// Leibniz differential of a single word, in the degree d+1 word basis.
inline Row differential_of_word(const RawAlgebra& alg, const std::vector<int>& w) {
  const int n = alg.num_generators;
  Row row;
  Scalar sign = alg.field.one();
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<int> u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    std::vector<int> v(w.begin() + static_cast<std::ptrdiff_t>(i + 1), w.end());
    add_sandwich(row, u, alg.differential[static_cast<std::size_t>(w[i])], v, sign, n);
    sign = -sign;
  }
  return row;
}

/// Block row: the entries of `row` placed at (word index) * m + symbol.
inline Row shifted(const Row& row, std::size_t m, std::size_t symbol) {
  Row out;
  for (const auto& [c, s] : row) out.emplace(c * m + symbol, s);
  return out;
}

inline void accumulate(Row& into, const Row& from) {
  for (const auto& [c, s] : from) slot(into, c, s) += s;
}

inline std::size_t rank_of(const std::vector<Row>& rows, const Field& field) {
  Reducer r(field);
  for (const auto& row : rows) r.add(row);
  return r.rank();
}

}  // namespace detail

/// dim of the degree-d piece of k<x>/I.
inline std::size_t oracle_graded_dim(const RawAlgebra& alg, int d) {
  return detail::power(alg.num_generators, d) - detail::rank_of(detail::ideal_rows(alg, d), alg.field);
}

/// dim H^d(A), computed on full word spaces modulo explicit ideal spans.
///   rank of d: A^d -> A^{d+1} = rank([d(words_d) ; I_{d+1}]) - rank(I_{d+1}).
inline std::size_t oracle_cohomology(const RawAlgebra& alg, int d, int window) {
  if (d < 0 || d > window) {
    throw Error(ErrorCode::DegreeWindowExceeded, "oracle cohomology degree " + std::to_string(d));
  }
  const int n = alg.num_generators;
  auto map_rank = [&](int src) -> std::size_t {
    if (src < 0) return 0;
    auto ideal = detail::ideal_rows(alg, src + 1);
    std::size_t ideal_rank = detail::rank_of(ideal, alg.field);
    std::vector<detail::Row> rows = ideal;
    for (std::size_t i = 0; i < detail::power(n, src); ++i) {
      rows.push_back(detail::differential_of_word(alg, detail::word_of(i, n, src)));
    }
    return detail::rank_of(rows, alg.field) - ideal_rank;
  };
  return oracle_graded_dim(alg, d) - map_rank(d) - map_rank(d - 1);
}

/// dim H^i(F) for i = 0..W, where F^i = (k<x>/I)^i (x) k^m and
///   d(w b_j) = d(w) b_j + (-1)^{|w|} w sum_l D[j][l] b_l.
inline std::vector<std::size_t> oracle_resolution_acyclicity(const RawResolution& F,
                                                             const RawAlgebra& alg, int window) {
  const int n = alg.num_generators;
  const std::size_t m = F.D.size();
  const Field& field = alg.field;
  for (const auto& row : F.D) {
    for (const auto& e : row) {
      if (detail::degree_of(e, 1) != 1) {
        throw Error(ErrorCode::DimensionMismatch, "oracle expects degree-1 resolution entries");
      }
    }
  }

  // Ideal part of F^i is I_i (x) k^m.
  auto ideal_block = [&](int d) {
    std::vector<detail::Row> rows;
    for (const auto& r : detail::ideal_rows(alg, d)) {
      for (std::size_t j = 0; j < m; ++j) rows.push_back(detail::shifted(r, m, j));
    }
    return rows;
  };

  std::vector<std::size_t> ranks;
  std::vector<std::size_t> dims;
  for (int i = 0; i <= window; ++i) {
    auto ideal_next = ideal_block(i + 1);
    std::size_t ideal_rank = detail::rank_of(ideal_next, field);
    std::vector<detail::Row> rows = ideal_next;
    Scalar sign = (i % 2 == 0) ? field.one() : -field.one();
    for (std::size_t wi = 0; wi < detail::power(n, i); ++wi) {
      std::vector<int> w = detail::word_of(wi, n, i);
      detail::Row dw = detail::differential_of_word(alg, w);
      for (std::size_t j = 0; j < m; ++j) {
        detail::Row row = detail::shifted(dw, m, j);
        for (std::size_t l = 0; l < m; ++l) {
          detail::Row prod;
          detail::add_sandwich(prod, w, F.D[j][l], {}, sign, n);
          detail::accumulate(row, detail::shifted(prod, m, l));
        }
        rows.push_back(std::move(row));
      }
    }
    ranks.push_back(detail::rank_of(rows, field) - ideal_rank);
    dims.push_back(m * oracle_graded_dim(alg, i));
  }
  std::vector<std::size_t> out;
  for (int i = 0; i <= window; ++i) {
    std::size_t below = i > 0 ? ranks[static_cast<std::size_t>(i - 1)] : 0;
    out.push_back(dims[static_cast<std::size_t>(i)] - ranks[static_cast<std::size_t>(i)] - below);
  }
  return out;
}

}  // namespace dgpic::oracle
