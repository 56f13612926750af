#pragma once

// Minimal semi-free resolutions F -> k with a degree-0 semi-basis.
//
// F = A b_1 + ... + A b_m with the row convention
//   d b_i = sum_j D[i][j] b_j,   D[i][j] in A^1,
// under which d^2 = 0 reads d_A(D) = D * D entrywise. b_1 is the unit
// symbol with d b_1 = 0 and augmentation b_1 -> 1.

#include <optional>
#include <string>
#include <vector>

#include "dgpic/dga.hpp"

namespace dgpic {

struct SemiFreeResolution {
  std::vector<std::string> basis;
  std::vector<std::vector<NcPoly>> differential;

  std::size_t size() const { return basis.size(); }

  static SemiFreeResolution unit(const Field& field) {
    return {{"1"}, {{NcPoly(field)}}};
  }

  /// Appends a symbol whose differential row is `row`, padded with zeros
  /// to the new size.
  void append(std::string name, std::vector<NcPoly> row, const Field& field) {
    for (auto& r : differential) r.push_back(NcPoly(field));
    row.resize(basis.size() + 1, NcPoly(field));
    basis.push_back(std::move(name));
    differential.push_back(std::move(row));
  }
};

enum class ResolutionVerdict { Resolved, NotKoszulInWindow, Undetermined };

inline std::string to_string(ResolutionVerdict v) {
  switch (v) {
    case ResolutionVerdict::Resolved:
      return "Resolved";
    case ResolutionVerdict::NotKoszulInWindow:
      return "NotKoszulInWindow";
    case ResolutionVerdict::Undetermined:
      return "Undetermined";
  }
  return "?";
}

struct ResolutionResult {
  ResolutionVerdict verdict = ResolutionVerdict::Undetermined;
  SemiFreeResolution resolution;
  int rounds = 0;
  /// dim H^i(F) for i = 0..W, for the final F.
  std::vector<std::size_t> cohomology;
};

namespace detail {

/// The complex F^0 -> F^1 -> ... with F^i = A^i (x) k^m, coordinates
/// (word index) * m + (symbol index).
class ResolutionComplex {
 public:
  ResolutionComplex(const DgAlgebra& alg, const SemiFreeResolution& F,
                    const std::vector<GradedBasis>& bases)
      : alg_(alg), F_(F), bases_(bases) {}

  std::size_t dim(int i) const { return bases_[i].size() * F_.size(); }

  /// Images of the F^i basis in F^{i+1}:
  ///   d(w b_j) = d(w) b_j + (-1)^{|w|} w sum_l D[j][l] b_l.
  std::vector<linalg::SparseVector> images(int i) const {
    const Field& field = alg_.field();
    const std::size_t m = F_.size();
    const GradedBasis& src = bases_[i];
    const GradedBasis& dst = bases_[i + 1];
    std::vector<linalg::SparseVector> out;
    out.reserve(src.size() * m);
    for (const auto& w : src.words) {
      NcPoly wp = NcPoly::monomial(field, w, field.one());
      auto dw = to_vector(alg_.apply_differential(wp), dst);
      NcPoly signed_w = (i % 2 == 0) ? wp : -wp;
      for (std::size_t j = 0; j < m; ++j) {
        linalg::VectorBuilder b;
        for (const auto& [idx, c] : dw) b.add(idx * m + j, c);
        for (std::size_t l = 0; l < m; ++l) {
          const NcPoly& entry = F_.differential[j][l];
          if (entry.is_zero()) continue;
          NcPoly prod = alg_.multiply(signed_w, entry);
          for (const auto& [idx, c] : to_vector(prod, dst)) b.add(idx * m + l, c);
        }
        out.push_back(b.finish());
      }
    }
    return out;
  }

  std::vector<std::size_t> cohomology_dims(int top) const {
    std::vector<std::size_t> ranks;
    for (int i = 0; i <= top; ++i) ranks.push_back(linalg::rank(images(i)));
    std::vector<std::size_t> dims;
    for (int i = 0; i <= top; ++i) {
      std::size_t below = i > 0 ? ranks[i - 1] : 0;
      dims.push_back(dim(i) - ranks[i] - below);
    }
    return dims;
  }

 private:
  const DgAlgebra& alg_;
  const SemiFreeResolution& F_;
  const std::vector<GradedBasis>& bases_;
};

inline std::vector<GradedBasis> graded_bases(const DgAlgebra& alg, int top) {
  std::vector<GradedBasis> out;
  for (int d = 0; d <= top; ++d) out.push_back(alg.pres().degree_basis(d));
  return out;
}

}  // namespace detail

/// Adds one degree-0 symbol per class of H^1(F) until H^1(F) = 0, then
/// certifies H^0(F) = k and H^i(F) = 0 for 2 <= i <= W.
inline ResolutionResult build_resolution(const DgAlgebra& alg, int max_rounds) {
  const Field& field = alg.field();
  const int W = alg.window();
  auto bases = detail::graded_bases(alg, W + 1);

  ResolutionResult result;
  result.resolution = SemiFreeResolution::unit(field);
  SemiFreeResolution& F = result.resolution;

  for (;;) {
    detail::ResolutionComplex cx(alg, F, bases);
    auto boundaries = cx.images(0);
    auto cocycles = linalg::kernel_of_map(cx.images(1), field);
    auto classes = linalg::complement_basis(cocycles, boundaries);
    if (classes.empty()) break;
    if (result.rounds == max_rounds) {
      result.verdict = ResolutionVerdict::Undetermined;
      result.cohomology = cx.cohomology_dims(W);
      return result;
    }
    const std::size_t m = F.size();
    for (const auto& rep : classes) {
      std::vector<NcPoly> row(m, NcPoly(field));
      for (const auto& [idx, c] : rep) row[idx % m].add_term(bases[1].words[idx / m], c);
      F.append("b" + std::to_string(F.size() + 1), std::move(row), field);
    }
    ++result.rounds;
  }

  detail::ResolutionComplex cx(alg, F, bases);
  result.cohomology = cx.cohomology_dims(W);
  bool acyclic = result.cohomology[0] == 1;
  for (int i = 1; i <= W; ++i) acyclic = acyclic && result.cohomology[i] == 0;
  result.verdict = acyclic ? ResolutionVerdict::Resolved : ResolutionVerdict::NotKoszulInWindow;
  return result;
}

/// Checks the resolution invariants and window acyclicity.
inline ValidationReport verify_resolution(const SemiFreeResolution& F, const DgAlgebra& alg) {
  ValidationReport report;
  auto names = alg.names();
  const std::size_t m = F.size();
  auto entry_name = [&](std::size_t i, std::size_t j) {
    return "D[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
  };

  bool unit_zero = true;
  for (const auto& e : F.differential[0]) unit_zero = unit_zero && e.is_zero();
  report.entries.push_back({"unit_closed", F.basis[0], unit_zero, "d(1) = 0"});

  bool minimal = true;
  bool shape = true;
  std::string first_bad;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const NcPoly& e = F.differential[i][j];
      if (e.is_zero()) continue;
      if (!e.coefficient(Word{}).is_zero()) minimal = false;
      auto d = e.homogeneous_degree();
      if (!d || *d != 1) {
        shape = false;
        if (first_bad.empty()) first_bad = entry_name(i, j);
      }
    }
  }
  report.entries.push_back({"minimality", "D", minimal, "no entry has a degree-0 component"});
  report.entries.push_back({"hom_to_k_zero_differential", "Hom_A(F,k)", minimal,
                            "dim Hom_A(F,k) = " + std::to_string(m)});
  report.entries.push_back(
      {"koszul_shape", "D", shape, shape ? "all entries in A^1" : "offending entry " + first_bad});

  if (!shape) {
    report.entries.push_back({"flatness", "D", false, "skipped: entries not of degree 1"});
    return report;
  }

  bool flat = true;
  std::string flat_detail = "d_A(D) = D*D";
  for (std::size_t i = 0; i < m && flat; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      NcPoly lhs = alg.apply_differential(F.differential[i][j]);
      NcPoly rhs(alg.field());
      for (std::size_t l = 0; l < m; ++l) {
        if (F.differential[i][l].is_zero() || F.differential[l][j].is_zero()) continue;
        rhs += alg.multiply(F.differential[i][l], F.differential[l][j]);
      }
      if (!(lhs == rhs)) {
        flat = false;
        flat_detail = entry_name(i, j) + ": d_A gives " + lhs.to_string(names) + ", D*D gives " +
                      rhs.to_string(names);
        break;
      }
    }
  }
  report.entries.push_back({"flatness", "D", flat, flat_detail});
  if (!flat) return report;

  auto bases = detail::graded_bases(alg, alg.window() + 1);
  auto dims = detail::ResolutionComplex(alg, F, bases).cohomology_dims(alg.window());
  report.entries.push_back({"h0_is_k", "H^0(F)", dims[0] == 1, "dim " + std::to_string(dims[0])});
  for (int i = 1; i <= alg.window(); ++i) {
    report.entries.push_back({"acyclic", "H^" + std::to_string(i) + "(F)", dims[i] == 0,
                              "dim " + std::to_string(dims[i])});
  }
  return report;
}

struct KoszulSmooth {
  std::optional<bool> koszul;
  std::optional<bool> smooth;
  std::optional<std::size_t> basis_size;
};

inline KoszulSmooth is_koszul_smooth(const ResolutionResult& r) {
  switch (r.verdict) {
    case ResolutionVerdict::Resolved:
      return {true, true, r.resolution.size()};
    case ResolutionVerdict::NotKoszulInWindow:
      return {false, std::nullopt, std::nullopt};
    case ResolutionVerdict::Undetermined:
      break;
  }
  return {};
}

}  // namespace dgpic
