#pragma once

// Commutative polynomials in finitely many named parameters. Used for the
// automorphism constraint systems (unknowns c_ij) and for parametrized
// matrix families (entries such as "2*a*b").

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dgpic/error.hpp"
#include "dgpic/expression.hpp"
#include "dgpic/scalar.hpp"

namespace dgpic {

/// Exponent vector indexed by variable id, trailing zeros trimmed.
using ParamMonomial = std::vector<unsigned>;

/// Higher total degree first, then lexicographically larger exponents
/// first (a^2 before a*b before b^2).
struct ParamMonomialOrder {
  bool operator()(const ParamMonomial& a, const ParamMonomial& b) const {
    unsigned da = 0;
    unsigned db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

class ParamPoly {
 public:
  using Terms = std::map<ParamMonomial, Scalar, ParamMonomialOrder>;

  ParamPoly() = default;
  explicit ParamPoly(Field field) : field_(field) {}

  static ParamPoly constant(const Field& field, const Scalar& c) {
    ParamPoly p(field);
    p.add_term({}, c);
    return p;
  }

  static ParamPoly variable(const Field& field, std::size_t id) {
    ParamMonomial m(id + 1, 0);
    m[id] = 1;
    ParamPoly p(field);
    p.add_term(m, field.one());
    return p;
  }

  /// Parses text over the given parameter names; unknown identifiers are a
  /// ParseError.
  static ParamPoly parse(const std::string& text, const Field& field,
                         const std::vector<std::string>& names) {
    ExpressionOps<ParamPoly> ops{
        [&field](const Scalar& s) { return constant(field, s); },
        [&field, &names](const std::string& id) {
          auto it = std::find(names.begin(), names.end(), id);
          if (it == names.end()) throw Error(ErrorCode::ParseError, "unknown parameter '" + id + "'");
          return variable(field, static_cast<std::size_t>(it - names.begin()));
        },
        [](const ParamPoly& a, const ParamPoly& b) { return a * b; }};
    return parse_expression<ParamPoly>(text, field, ops);
  }

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

  Scalar constant_term() const {
    auto it = terms_.find(ParamMonomial{});
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(ParamMonomial m, const Scalar& c) {
    if (c.is_zero()) return;
    while (!m.empty() && m.back() == 0) m.pop_back();
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  unsigned total_degree() const {
    if (terms_.empty()) return 0;
    unsigned d = 0;
    for (unsigned e : terms_.begin()->first) d += e;
    return d;
  }

  unsigned degree_in(std::size_t id) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
      if (id < m.size()) d = std::max(d, m[id]);
    }
    return d;
  }

  std::set<std::size_t> variables() const {
    std::set<std::size_t> out;
    for (const auto& [m, c] : terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] > 0) out.insert(i);
      }
    }
    return out;
  }

  /// Writes the polynomial as q * v + r with r free of v, when v occurs to
  /// degree at most one.
  std::optional<std::pair<ParamPoly, ParamPoly>> split_linear(std::size_t id) const {
    if (degree_in(id) > 1) return std::nullopt;
    ParamPoly q(field_);
    ParamPoly r(field_);
    for (const auto& [m, c] : terms_) {
      if (id < m.size() && m[id] == 1) {
        ParamMonomial reduced = m;
        reduced[id] = 0;
        q.add_term(std::move(reduced), c);
      } else {
        r.add_term(m, c);
      }
    }
    return std::make_pair(q, r);
  }

  ParamPoly& operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  ParamPoly& operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  ParamPoly operator-() const { return scaled(-field_.one()); }

  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out(a.field_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        ParamMonomial m(std::max(ma.size(), mb.size()), 0);
        for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
        for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
        out.add_term(std::move(m), ca * cb);
      }
    }
    return out;
  }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  ParamPoly scaled(const Scalar& s) const {
    ParamPoly out(field_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
  }

  ParamPoly pow(unsigned e) const {
    ParamPoly result = constant(field_, field_.one());
    for (unsigned i = 0; i < e; ++i) result *= *this;
    return result;
  }

  /// Replaces variable `id` by `value`.
  ParamPoly substitute(std::size_t id, const ParamPoly& value) const {
    ParamPoly out(field_);
    std::map<unsigned, ParamPoly> powers;
    for (const auto& [m, c] : terms_) {
      if (id >= m.size() || m[id] == 0) {
        out.add_term(m, c);
        continue;
      }
      unsigned e = m[id];
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
      ParamMonomial rest = m;
      rest[id] = 0;
      ParamPoly term(field_);
      term.add_term(std::move(rest), c);
      out += term * it->second;
    }
    return out;
  }

  /// Evaluates at a point; missing coordinates count as zero.
  Scalar evaluate(const std::vector<Scalar>& point) const {
    Scalar total = field_.zero();
    for (const auto& [m, c] : terms_) {
      Scalar t = c;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        t *= (i < point.size() ? point[i] : field_.zero()).pow(m[i]);
      }
      total += t;
    }
    return total;
  }

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

  /// e.g. "c22^2", "2*c22*c23", "a*b - c*d".
  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
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
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!body.empty()) body += "*";
        body += i < names.size() ? names[i] : "v" + std::to_string(i);
        if (m[i] > 1) body += "^" + std::to_string(m[i]);
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
