#pragma once

// Cochain DG algebras: a presentation plus the images of the generators
// under a degree +1 differential, extended by the graded Leibniz rule
//   d(ab) = d(a) b + (-1)^{|a|} a d(b).

#include <string>
#include <utility>
#include <vector>

#include "dgpic/linalg.hpp"
#include "dgpic/presentation.hpp"

namespace dgpic {

class DgAlgebra {
 public:
  DgAlgebra() = default;

  /// `differential[i]` is the image of generator i. `window` is the degree
  /// W up to which cohomology is reported; the presentation's completion
  /// window must be at least W + 1.
  DgAlgebra(Presentation pres, std::vector<NcPoly> differential, int window)
      : pres_(std::move(pres)), differential_(std::move(differential)), window_(window) {
    if (differential_.size() != pres_.num_generators()) {
      throw Error(ErrorCode::DimensionMismatch, "one differential image per generator required");
    }
    if (window_ < 1 || window_ + 1 > pres_.completion_window()) {
      throw Error(ErrorCode::DegreeWindowExceeded,
                  "window " + std::to_string(window_) + " needs completion window >= " +
                      std::to_string(window_ + 1));
    }
  }

  const Presentation& pres() const { return pres_; }
  const Field& field() const { return pres_.field(); }
  const std::vector<NcPoly>& differential() const { return differential_; }
  int window() const { return window_; }
  std::vector<std::string> names() const { return pres_.names(); }

  /// Leibniz extension, reduced to normal form.
  NcPoly apply_differential(const NcPoly& p) const {
    if (!p.homogeneous_degree()) {
      throw Error(ErrorCode::InhomogeneousInput, p.to_string(names()));
    }
    if (p.max_degree() + 1 > pres_.completion_window()) {
      throw Error(ErrorCode::DegreeWindowExceeded,
                  "differential of degree " + std::to_string(p.max_degree()) + " element");
    }
    NcPoly out(field());
    for (const auto& [w, c] : p.terms()) {
      Scalar sign = c;
      for (std::size_t i = 0; i < w.length(); ++i) {
        Word u = w.subword(0, i);
        Word v = w.subword(i + 1, w.length() - i - 1);
        out += differential_[w[i]].sandwiched(u, v, sign);
        sign = -sign;
      }
    }
    return pres_.normal_form(out);
  }

  NcPoly multiply(const NcPoly& p, const NcPoly& q) const { return pres_.multiply(p, q); }

 private:
  Presentation pres_;
  std::vector<NcPoly> differential_;
  int window_ = 1;
};

struct CheckEntry {
  std::string check;
  std::string subject;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckEntry> entries;

  bool passed() const {
    for (const auto& e : entries) {
      if (!e.passed) return false;
    }
    return true;
  }

  bool passed(const std::string& check) const {
    for (const auto& e : entries) {
      if (e.check == check && !e.passed) return false;
    }
    return true;
  }
};

/// Checks deg(d g) = deg(g) + 1 and d(d g) = 0 for every generator, and
/// d(r) = 0 in A for every relation r (taken literally as a lift).
inline ValidationReport validate_dga(const DgAlgebra& alg) {
  ValidationReport report;
  auto names = alg.names();
  const auto& gens = alg.pres().generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const NcPoly& image = alg.differential()[i];
    auto d = image.homogeneous_degree(gens[i].degree + 1);
    bool ok = d && *d == gens[i].degree + 1;
    report.entries.push_back({"differential_degree", gens[i].name, ok,
                              "d(" + gens[i].name + ") = " + image.to_string(names)});
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    CheckEntry e{"d_squared_zero", gens[i].name, false, ""};
    try {
      NcPoly dd = alg.apply_differential(alg.differential()[i]);
      e.passed = dd.is_zero();
      e.detail = "d(d(" + gens[i].name + ")) = " + dd.to_string(names);
    } catch (const Error& err) {
      e.detail = err.what();
    }
    report.entries.push_back(std::move(e));
  }
  for (const auto& r : alg.pres().relations()) {
    CheckEntry e{"relation_compatibility", r.to_string(names), false, ""};
    try {
      NcPoly dr = alg.apply_differential(r);
      e.passed = dr.is_zero();
      e.detail = "d(relation) = " + dr.to_string(names);
    } catch (const Error& err) {
      e.detail = err.what();
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

/// Coordinates of a homogeneous element in a graded basis; precondition: p
/// is in normal form and all its words lie in the basis.
inline linalg::SparseVector to_vector(const NcPoly& p, const GradedBasis& basis) {
  linalg::VectorBuilder b;
  for (const auto& [w, c] : p.terms()) {
    auto pos = basis.position(w);
    if (!pos) throw Error(ErrorCode::DimensionMismatch, "word outside graded basis");
    b.add(*pos, c);
  }
  return b.finish();
}

inline NcPoly from_vector(const linalg::SparseVector& v, const GradedBasis& basis,
                          const Field& field) {
  NcPoly p(field);
  for (const auto& [i, c] : v) p.add_term(basis.words[i], c);
  return p;
}

/// H^d(A) together with the data needed to expand classes.
struct CohomologyPiece {
  int degree = 0;
  GradedBasis basis;
  linalg::EchelonBasis boundaries;
  std::vector<linalg::SparseVector> representative_vectors;
  std::vector<NcPoly> representatives;

  std::size_t dim() const { return representatives.size(); }
};

/// Cocycles of degree d modulo boundaries. Representatives are the reduced
/// row echelon basis of cocycles reduced modulo the boundary echelon form.
inline CohomologyPiece cohomology_basis(const DgAlgebra& alg, int d) {
  if (d < 0 || d + 1 > alg.pres().completion_window()) {
    throw Error(ErrorCode::DegreeWindowExceeded,
                "cohomology in degree " + std::to_string(d) + " needs degree " +
                    std::to_string(d + 1));
  }
  CohomologyPiece piece;
  piece.degree = d;
  piece.basis = alg.pres().degree_basis(d);
  GradedBasis next = alg.pres().degree_basis(d + 1);
  const Field& field = alg.field();

  std::vector<linalg::SparseVector> images;
  for (const auto& w : piece.basis.words) {
    images.push_back(to_vector(alg.apply_differential(NcPoly::monomial(field, w, field.one())), next));
  }
  auto cocycles = linalg::kernel_of_map(images, field);

  if (d > 0) {
    GradedBasis prev = alg.pres().degree_basis(d - 1);
    for (const auto& w : prev.words) {
      piece.boundaries.insert(
          to_vector(alg.apply_differential(NcPoly::monomial(field, w, field.one())), piece.basis));
    }
  }
  piece.representative_vectors = linalg::complement_basis(cocycles, piece.boundaries.rows());
  for (const auto& v : piece.representative_vectors) {
    piece.representatives.push_back(from_vector(v, piece.basis, field));
  }
  return piece;
}

/// Coordinates of [c1][c2] in cohomology_basis(deg c1 + deg c2).
inline std::vector<Scalar> h_product(const NcPoly& c1, const NcPoly& c2, const DgAlgebra& alg) {
  for (const NcPoly* c : {&c1, &c2}) {
    if (!c->homogeneous_degree()) throw Error(ErrorCode::InhomogeneousInput, "h_product input");
    if (!alg.apply_differential(*c).is_zero()) {
      throw Error(ErrorCode::NotACocycle, c->to_string(alg.names()));
    }
  }
  int d = *c1.homogeneous_degree() + *c2.homogeneous_degree();
  CohomologyPiece piece = cohomology_basis(alg, d);
  NcPoly prod = alg.multiply(c1, c2);
  linalg::SparseVector v = piece.boundaries.reduce(to_vector(prod, piece.basis));
  if (piece.dim() == 0) return {};
  auto coords = linalg::Coordinates(piece.representative_vectors, alg.field()).solve(v);
  if (!coords) throw Error(ErrorCode::NotACocycle, "product left the cocycle space");
  return *coords;
}

}  // namespace dgpic
