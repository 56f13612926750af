#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgpic/scalar.hpp"

namespace dgpic {

/// Generators are referred to by their index in the presentation's
/// generator list; index order fixes the monomial order (earlier = larger).
using Letter = std::uint16_t;

/// Ordered sequence of generator indices. The empty word is the unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Every generator has degree 1, so the degree is the length.
  int degree() const { return static_cast<int>(letters_.size()); }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
  }

  friend Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> l = a.letters_;
    l.insert(l.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(l));
  }

  /// Position of the first occurrence of `w` as a factor, if any.
  std::optional<std::size_t> find(const Word& w) const {
    if (w.length() > length()) return std::nullopt;
    for (std::size_t i = 0; i + w.length() <= length(); ++i) {
      bool match = true;
      for (std::size_t k = 0; k < w.length(); ++k) {
        if (letters_[i + k] != w.letters_[k]) {
          match = false;
          break;
        }
      }
      if (match) return i;
    }
    return std::nullopt;
  }

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Degree-lexicographic monomial order, written as a strict "comes first"
/// relation: longer words first, then lexicographic on letter indices. With
/// it the first key of an ordered map is the leading word.
///
/// The same-length part is also the listing order used for graded bases,
/// e.g. x1x1, x1x2, x2x1, x2x2.
struct MonomialOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.letters() < b.letters();
  }
};

/// Element of the free algebra: finite linear combination of words with
/// nonzero coefficients in a fixed field.
class NcPoly {
 public:
  using Terms = std::map<Word, Scalar, MonomialOrder>;

  NcPoly() = default;
  explicit NcPoly(Field field) : field_(field) {}

  static NcPoly constant(const Field& field, const Scalar& c) {
    NcPoly p(field);
    p.add_term(Word{}, c);
    return p;
  }

  static NcPoly monomial(const Field& field, const Word& w, const Scalar& c) {
    NcPoly p(field);
    p.add_term(w, c);
    return p;
  }

  static NcPoly letter(const Field& field, Letter l) {
    return monomial(field, Word{l}, field.one());
  }

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// Leading word under MonomialOrder; precondition: nonzero.
  const Word& leading_word() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }

  /// The common degree of all terms, or nullopt when inhomogeneous. The zero
  /// polynomial is reported as homogeneous of every degree via `zero_degree`.
  std::optional<int> homogeneous_degree(int zero_degree = 0) const {
    if (terms_.empty()) return zero_degree;
    int d = terms_.begin()->first.degree();
    for (const auto& [w, c] : terms_) {
      if (w.degree() != d) return std::nullopt;
    }
    return d;
  }

  /// Largest degree of a term (0 for the zero polynomial).
  int max_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  NcPoly& operator+=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NcPoly& operator-=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }

  NcPoly operator-() const { return scaled(-field_.one()); }

  NcPoly scaled(const Scalar& s) const {
    NcPoly out(field_);
    if (s.is_zero()) return out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * s);
    return out;
  }

  /// Concatenation product in the free algebra (no rewriting).
  friend NcPoly free_product(const NcPoly& a, const NcPoly& b) {
    NcPoly out(a.field_);
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
    }
    return out;
  }

  /// u * this * v for words u, v.
  NcPoly sandwiched(const Word& u, const Word& v, const Scalar& c) const {
    NcPoly out(field_);
    if (c.is_zero()) return out;
    for (const auto& [w, s] : terms_) out.terms_.emplace(u * w * v, s * c);
    return out;
  }

  bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

  /// Human-readable text, e.g. "x1*x2 - 2*x2*x1".
  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      std::string coeff = c.to_string();
      bool negative = !coeff.empty() && coeff[0] == '-';
      if (negative) coeff = coeff.substr(1);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string body;
      for (std::size_t i = 0; i < w.length(); ++i) {
        if (i > 0) body += "*";
        body += names[w[i]];
      }
      if (body.empty()) {
        out += coeff;
      } else if (coeff == "1") {
        out += body;
      } else {
        out += coeff + "*" + body;
      }
    }
    return out;
  }

 private:
  Field field_;
  Terms terms_;
};

}  // namespace dgpic
