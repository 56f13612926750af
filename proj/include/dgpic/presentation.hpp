#pragma once

// Graded presentations k<x_1..x_n>/(R) with degree-truncated rewriting.
//
// Relations are homogeneous, so completion can run degree by degree: at
// degree d every overlap ambiguity between rules of smaller degree is
// resolved, and the resulting rule set gives correct normal forms for every
// word of degree <= completion window (diamond lemma, truncated).

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgpic/error.hpp"
#include "dgpic/expression.hpp"
#include "dgpic/ncpoly.hpp"

namespace dgpic {

struct Generator {
  std::string name;
  int degree = 1;
};

/// Oriented rule lead -> lead - poly, where poly is monic with leading word
/// `lead`.
struct RewriteRule {
  NcPoly poly;
  bool from_completion = false;

  const Word& lead() const { return poly.leading_word(); }
  int degree() const { return lead().degree(); }

  /// The right-hand side: what the leading word rewrites to.
  NcPoly rhs() const {
    NcPoly out = poly;
    out.add_term(lead(), -poly.leading_coefficient());
    return -out;
  }
};

/// An overlap (or inclusion) ambiguity whose two reductions disagree.
struct Ambiguity {
  std::size_t first_rule = 0;
  std::size_t second_rule = 0;
  Word word;
  NcPoly difference;
};

/// The graded basis of one degree: normal words in listing order.
struct GradedBasis {
  int degree = 0;
  std::vector<Word> words;
  std::map<Word, std::size_t, MonomialOrder> index;

  std::size_t size() const { return words.size(); }
  std::optional<std::size_t> position(const Word& w) const {
    auto it = index.find(w);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

class Presentation {
 public:
  Presentation() = default;

  /// Degree-truncated completion of the relation ideal. Relations are
  /// normalized (reduced, made monic) into rules; overlaps up to the window
  /// are resolved by adding rules, which are flagged `from_completion`.
  static Presentation complete_rewrites(Field field, std::vector<Generator> generators,
                                        std::vector<NcPoly> relations, int completion_window) {
    Presentation p(field, std::move(generators), completion_window);
    for (const auto& r : relations) {
      auto d = r.homogeneous_degree();
      if (r.is_zero()) continue;
      if (!d) throw Error(ErrorCode::NonHomogeneousRelation, r.to_string(p.names()));
      if (*d < 2) {
        throw Error(ErrorCode::NonHomogeneousRelation,
                    "relation " + r.to_string(p.names()) + " must have degree >= 2");
      }
    }
    p.relations_ = std::move(relations);
    p.complete();
    if (auto bad = p.unresolved_ambiguities(); !bad.empty()) {
      throw Error(ErrorCode::NotConfluent, "completion left an unresolved overlap at " +
                                               word_text(bad.front().word, p.names()));
    }
    return p;
  }

  /// Uses the given rules verbatim (no completion); throws NotConfluent if an
  /// ambiguity within the window fails to resolve.
  static Presentation from_rules(Field field, std::vector<Generator> generators,
                                 const std::vector<NcPoly>& rule_polys, int completion_window) {
    Presentation p(field, std::move(generators), completion_window);
    for (const auto& r : rule_polys) {
      if (r.is_zero()) continue;
      if (!r.homogeneous_degree()) {
        throw Error(ErrorCode::NonHomogeneousRelation, r.to_string(p.names()));
      }
      p.relations_.push_back(r);
      p.add_rule(r.scaled(r.leading_coefficient().inverse()), false);
    }
    if (auto bad = p.unresolved_ambiguities(); !bad.empty()) {
      throw Error(ErrorCode::NotConfluent,
                  "overlap at " + word_text(bad.front().word, p.names()) + " reduces to " +
                      bad.front().difference.to_string(p.names()));
    }
    return p;
  }

  const Field& field() const { return field_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<NcPoly>& relations() const { return relations_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  int completion_window() const { return window_; }
  std::size_t num_generators() const { return generators_.size(); }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& g : generators_) out.push_back(g.name);
    return out;
  }

  std::vector<RewriteRule> added_rules() const {
    std::vector<RewriteRule> out;
    for (const auto& r : rules_) {
      if (r.from_completion) out.push_back(r);
    }
    return out;
  }

  std::optional<Letter> generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].name == name) return static_cast<Letter>(i);
    }
    return std::nullopt;
  }

  /// Parses an expression in the generators as an element of the free
  /// algebra (no rewriting applied).
  NcPoly parse(const std::string& text) const {
    ExpressionOps<NcPoly> ops{
        [this](const Scalar& s) { return NcPoly::constant(field_, s); },
        [this](const std::string& id) {
          auto idx = generator_index(id);
          if (!idx) throw Error(ErrorCode::UnknownGenerator, "'" + id + "'");
          return NcPoly::letter(field_, *idx);
        },
        [](const NcPoly& a, const NcPoly& b) { return free_product(a, b); }};
    NcPoly p = parse_expression<NcPoly>(text, field_, ops);
    return p;
  }

  /// First (rule index, position) such that the rule's lead occurs in w.
  std::optional<std::pair<std::size_t, std::size_t>> find_reducer(const Word& w) const {
    for (std::size_t pos = 0; pos < w.length(); ++pos) {
      for (std::size_t len = 1; pos + len <= w.length(); ++len) {
        auto it = lead_index_.find(w.subword(pos, len));
        if (it != lead_index_.end()) return std::make_pair(it->second, pos);
      }
    }
    return std::nullopt;
  }

  bool is_normal(const Word& w) const { return !find_reducer(w); }

  /// Unique rewrite-irreducible representative of p modulo the relation
  /// ideal. Every word of p must have degree <= completion window.
  NcPoly normal_form(const NcPoly& p) const {
    check_window(p);
    NcPoly work = p;
    NcPoly result(field_);
    while (!work.is_zero()) {
      Word w = work.leading_word();
      Scalar c = work.leading_coefficient();
      auto red = find_reducer(w);
      if (!red) {
        result.add_term(w, c);
        work.add_term(w, -c);
        continue;
      }
      const RewriteRule& rule = rules_[red->first];
      Word u = w.subword(0, red->second);
      Word v = w.subword(red->second + rule.lead().length(),
                         w.length() - red->second - rule.lead().length());
      work -= rule.poly.sandwiched(u, v, c);
    }
    return result;
  }

  /// Normal words of degree d in listing order.
  GradedBasis degree_basis(int d) const {
    if (d < 0 || d > window_) {
      throw Error(ErrorCode::DegreeWindowExceeded,
                  "degree " + std::to_string(d) + " > window " + std::to_string(window_));
    }
    std::vector<Word> level{Word{}};
    for (int k = 0; k < d; ++k) {
      std::vector<Word> next;
      for (const auto& w : level) {
        for (Letter l = 0; l < generators_.size(); ++l) {
          Word ext = w * Word{l};
          if (!suffix_reducible(ext)) next.push_back(std::move(ext));
        }
      }
      level = std::move(next);
    }
    GradedBasis basis;
    basis.degree = d;
    basis.words = std::move(level);
    for (std::size_t i = 0; i < basis.words.size(); ++i) basis.index.emplace(basis.words[i], i);
    return basis;
  }

  NcPoly multiply(const NcPoly& p, const NcPoly& q) const {
    if (p.max_degree() + q.max_degree() > window_) {
      throw Error(ErrorCode::DegreeWindowExceeded, "product degree beyond window");
    }
    return normal_form(free_product(p, q));
  }

  /// All overlap and inclusion ambiguities of total degree <= window whose
  /// reductions differ.
  std::vector<Ambiguity> unresolved_ambiguities() const {
    std::vector<Ambiguity> out;
    for (std::size_t a = 0; a < rules_.size(); ++a) {
      for (std::size_t b = 0; b < rules_.size(); ++b) {
        for (auto& [word, s] : overlaps(a, b)) {
          if (word.degree() > window_) continue;
          NcPoly r = normal_form(s);
          if (!r.is_zero()) out.push_back({a, b, word, r});
        }
        if (a == b) continue;
        const Word& la = rules_[a].lead();
        const Word& lb = rules_[b].lead();
        if (la.degree() > window_) continue;
        if (auto pos = la.find(lb)) {
          Word u = la.subword(0, *pos);
          Word v = la.subword(*pos + lb.length(), la.length() - *pos - lb.length());
          NcPoly s = rules_[a].poly - rules_[b].poly.sandwiched(u, v, field_.one());
          NcPoly r = normal_form(s);
          if (!r.is_zero()) out.push_back({a, b, la, r});
        }
      }
    }
    return out;
  }

 private:
  Presentation(Field field, std::vector<Generator> generators, int window)
      : field_(field), generators_(std::move(generators)), window_(window) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (generators_[i].name == generators_[j].name) {
          throw Error(ErrorCode::ParseError, "duplicate generator '" + generators_[i].name + "'");
        }
      }
      if (generators_[i].degree != 1) {
        throw Error(ErrorCode::ParseError,
                    "generator '" + generators_[i].name + "' must have degree 1");
      }
    }
  }

  static std::string word_text(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.length(); ++i) {
      if (i > 0) out += "*";
      out += names[w[i]];
    }
    return out;
  }

  void check_window(const NcPoly& p) const {
    if (p.max_degree() > window_) {
      throw Error(ErrorCode::DegreeWindowExceeded,
                  "degree " + std::to_string(p.max_degree()) + " > window " +
                      std::to_string(window_));
    }
  }

  bool suffix_reducible(const Word& w) const {
    for (std::size_t len = 1; len <= w.length(); ++len) {
      if (lead_index_.count(w.subword(w.length() - len, len))) return true;
    }
    return false;
  }

  void add_rule(NcPoly monic, bool from_completion) {
    lead_index_[monic.leading_word()] = rules_.size();
    rules_.push_back({std::move(monic), from_completion});
  }

  /// Proper overlaps lead(a) = u s, lead(b) = s v with s nonempty; returns
  /// the ambiguous word u s v with its S-polynomial a v - u b.
  std::vector<std::pair<Word, NcPoly>> overlaps(std::size_t a, std::size_t b) const {
    std::vector<std::pair<Word, NcPoly>> out;
    const Word& la = rules_[a].lead();
    const Word& lb = rules_[b].lead();
    std::size_t max_k = std::min(la.length(), lb.length());
    for (std::size_t k = max_k - 1; k >= 1; --k) {
      if (la.subword(la.length() - k, k) == lb.subword(0, k)) {
        Word u = la.subword(0, la.length() - k);
        Word v = lb.subword(k, lb.length() - k);
        NcPoly s = rules_[a].poly.sandwiched(Word{}, v, field_.one()) -
                   rules_[b].poly.sandwiched(u, Word{}, field_.one());
        out.emplace_back(u * lb, std::move(s));
      }
      if (k == 1) break;
    }
    return out;
  }

  void complete() {
    for (int d = 2; d <= window_; ++d) {
      std::vector<std::pair<NcPoly, bool>> candidates;
      for (const auto& r : relations_) {
        if (r.max_degree() == d) candidates.emplace_back(r, false);
      }
      std::size_t existing = rules_.size();
      for (std::size_t a = 0; a < existing; ++a) {
        for (std::size_t b = 0; b < existing; ++b) {
          for (auto& [word, s] : overlaps(a, b)) {
            if (word.degree() == d) candidates.emplace_back(std::move(s), true);
          }
        }
      }
      std::size_t first_new = rules_.size();
      for (const auto& [poly, from_completion] : candidates) {
        NcPoly r = normal_form(poly);
        if (r.is_zero()) continue;
        add_rule(r.scaled(r.leading_coefficient().inverse()), from_completion);
      }
      // Inter-reduce the tails of this degree's rules.
      for (std::size_t i = first_new; i < rules_.size(); ++i) {
        NcPoly tail = rules_[i].poly;
        Word lead = tail.leading_word();
        tail.add_term(lead, -tail.leading_coefficient());
        NcPoly reduced = normal_form(tail);
        reduced.add_term(lead, field_.one());
        rules_[i].poly = std::move(reduced);
      }
    }
  }

  Field field_;
  std::vector<Generator> generators_;
  std::vector<NcPoly> relations_;
  std::vector<RewriteRule> rules_;
  std::map<Word, std::size_t, MonomialOrder> lead_index_;
  int window_ = 0;
};

}  // namespace dgpic
