#pragma once

// The analysis report ("dgpic-report/1"): plain records of strings and
// integers so that JSON rendering is exact and round-trips.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace nlohmann {
template <class T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) {
      j = *v;
    } else {
      j = nullptr;
    }
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) {
      v.reset();
    } else {
      v = j.get<T>();
    }
  }
};
}  // namespace nlohmann

namespace dgpic {

inline constexpr const char* kReportSchema = "dgpic-report/1";
inline constexpr const char* kInputSchema = "dgpic-input/1";
inline constexpr const char* kFamilySchema = "dgpic-family/1";

/// One term of a serialized NcPoly: exact coefficient text and the word.
struct TermRecord {
  std::string coeff;
  std::vector<std::string> word;
  bool operator==(const TermRecord&) const = default;
};
using PolyRecord = std::vector<TermRecord>;

struct CheckRecord {
  std::string check;
  std::string subject;
  bool passed = false;
  std::string detail;
  bool operator==(const CheckRecord&) const = default;
};

struct InputRecord {
  std::string name;
  std::string field;
  std::vector<std::string> generators;
  std::vector<PolyRecord> relations;
  std::map<std::string, PolyRecord> differential;
  int window = 0;
  int completion_window = 0;
  int max_rounds = 0;
  bool operator==(const InputRecord&) const = default;
};

struct RewritingRecord {
  std::vector<PolyRecord> rules;
  std::vector<PolyRecord> added_rules;
  bool operator==(const RewritingRecord&) const = default;
};

struct ValidationRecord {
  bool passed = false;
  std::vector<CheckRecord> checks;
  bool operator==(const ValidationRecord&) const = default;
};

struct CohomologyRecord {
  std::vector<std::size_t> dims;
  std::vector<std::vector<PolyRecord>> representatives;
  bool operator==(const CohomologyRecord&) const = default;
};

struct ResolutionRecord {
  std::string verdict;
  int rounds = 0;
  std::vector<std::string> basis;
  /// differential[i][j]: coefficient of basis[j] in d(basis[i]).
  std::vector<std::vector<PolyRecord>> differential;
  std::vector<std::size_t> cohomology;
  std::vector<CheckRecord> certification;
  bool operator==(const ResolutionRecord&) const = default;
};

struct FlagsRecord {
  std::optional<bool> koszul;
  std::optional<bool> smooth;
  std::optional<std::size_t> basis_size;
  int certified_window = 0;
  bool operator==(const FlagsRecord&) const = default;
};

struct RadicalRecord {
  std::string method;
  std::size_t dim = 0;
  std::vector<std::size_t> filtration;
  bool operator==(const RadicalRecord&) const = default;
};

using ConstantsRecord = std::vector<std::vector<std::vector<std::string>>>;

struct ExtRecord {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  /// c[i][j][t] with e_i e_j = sum_t c[i][j][t] e_t.
  ConstantsRecord structure_constants;
  /// Constants of the opposite algebra (composition of maps).
  ConstantsRecord opposite_structure_constants;
  /// Basis matrices M with f(b_i) = sum_j M[i][j] b_j.
  ConstantsRecord matrices;
  std::vector<std::string> products;
  bool unit_law = false;
  bool associative = false;
  bool commutative = false;
  std::optional<RadicalRecord> radical;
  std::optional<bool> local;
  bool operator==(const ExtRecord&) const = default;
};

struct ConstraintRecord {
  std::vector<std::string> free_variables;
  std::map<std::string, std::string> pinned;
  std::map<std::string, std::string> bound;
  std::vector<std::string> residual;
  std::string determinant;
  bool consistent = false;
  std::vector<std::string> lines;
  bool operator==(const ConstraintRecord&) const = default;
};

struct FamilyRecord {
  std::vector<std::string> parameters;
  std::vector<std::vector<std::string>> entries;
  std::vector<std::string> side_conditions;
  bool identities_hold = false;
  bool dim_match = false;
  bool samples_pass = false;
  std::size_t samples_checked = 0;
  std::vector<std::string> failures;
  bool operator==(const FamilyRecord&) const = default;
};

struct AutRecord {
  std::size_t dim_der = 0;
  std::size_t dim_inn_der = 0;
  std::size_t dim_out = 0;
  bool lie_level_char_p_caveat = false;
  ConstraintRecord constraints;
  std::optional<FamilyRecord> family;
  bool operator==(const AutRecord&) const = default;
};

struct DpicRecord {
  std::string description;
  std::size_t dim_out = 0;
  std::string statement;
  std::optional<std::vector<std::vector<std::string>>> family;
  bool operator==(const DpicRecord&) const = default;
};

struct ErrorRecord {
  std::string stage;
  std::string code;
  std::string message;
  bool operator==(const ErrorRecord&) const = default;
};

struct AnalysisReport {
  std::string schema = kReportSchema;
  InputRecord input;
  RewritingRecord rewriting;
  ValidationRecord validation;
  std::optional<CohomologyRecord> cohomology;
  std::optional<ResolutionRecord> resolution;
  FlagsRecord flags;
  std::optional<ExtRecord> ext;
  std::optional<AutRecord> aut;
  std::optional<DpicRecord> dpic;
  std::vector<ErrorRecord> errors;
  bool operator==(const AnalysisReport&) const = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TermRecord, coeff, word)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckRecord, check, subject, passed, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(InputRecord, name, field, generators, relations, differential, window,
                                   completion_window, max_rounds)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RewritingRecord, rules, added_rules)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ValidationRecord, passed, checks)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CohomologyRecord, dims, representatives)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ResolutionRecord, verdict, rounds, basis, differential, cohomology,
                                   certification)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FlagsRecord, koszul, smooth, basis_size, certified_window)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RadicalRecord, method, dim, filtration)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ExtRecord, dim, labels, structure_constants, opposite_structure_constants,
                                   matrices, products, unit_law, associative, commutative, radical, local)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ConstraintRecord, free_variables, pinned, bound, residual, determinant,
                                   consistent, lines)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FamilyRecord, parameters, entries, side_conditions, identities_hold,
                                   dim_match, samples_pass, samples_checked, failures)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AutRecord, dim_der, dim_inn_der, dim_out, lie_level_char_p_caveat,
                                   constraints, family)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DpicRecord, description, dim_out, statement, family)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ErrorRecord, stage, code, message)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AnalysisReport, schema, input, rewriting, validation, cohomology, resolution,
                                   flags, ext, aut, dpic, errors)

/// Deterministic JSON text (sorted keys, two-space indent).
inline std::string render_json(const AnalysisReport& r) { return nlohmann::json(r).dump(2) + "\n"; }

inline AnalysisReport report_from_json(const std::string& text) {
  return nlohmann::json::parse(text).get<AnalysisReport>();
}

namespace detail {

inline std::string poly_text(const PolyRecord& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    std::string coeff = p[k].coeff;
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff = coeff.substr(1);
    if (k == 0) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body;
    for (std::size_t i = 0; i < p[k].word.size(); ++i) body += (i ? "*" : "") + p[k].word[i];
    if (body.empty()) {
      out += coeff;
    } else {
      out += (coeff == "1" ? "" : coeff + "*") + body;
    }
  }
  return out;
}

inline std::string tri(const std::optional<bool>& b) {
  if (!b) return "undetermined";
  return *b ? "yes" : "no";
}

}  // namespace detail

/// Human-readable report: resolution, Ext table, Aut constraints, DPic.
inline std::string render_text(const AnalysisReport& r) {
  std::string out;
  auto line = [&out](const std::string& s) { out += s + "\n"; };
  line("== " + r.input.name + " over " + r.input.field + " (window " + std::to_string(r.input.window) + ")");
  {
    std::string gens;
    for (const auto& g : r.input.generators) gens += (gens.empty() ? "" : ", ") + g;
    line("generators: " + gens);
  }
  for (const auto& rel : r.input.relations) line("relation: " + detail::poly_text(rel) + " = 0");
  for (const auto& [g, p] : r.input.differential) line("d(" + g + ") = " + detail::poly_text(p));
  for (const auto& rule : r.rewriting.added_rules) line("completion rule: " + detail::poly_text(rule));

  line("");
  line("-- validation: " + std::string(r.validation.passed ? "pass" : "FAIL"));
  for (const auto& c : r.validation.checks) {
    if (!c.passed) line("   failed " + c.check + " [" + c.subject + "]: " + c.detail);
  }

  if (r.cohomology) {
    std::string dims;
    for (std::size_t d = 0; d < r.cohomology->dims.size(); ++d) {
      dims += (d ? ", " : "") + std::to_string(r.cohomology->dims[d]);
    }
    line("-- cohomology dims H^0..H^" + std::to_string(r.cohomology->dims.size() - 1) + ": " + dims);
  }

  if (r.resolution) {
    const auto& res = *r.resolution;
    line("");
    line("-- resolution: " + res.verdict + " after " + std::to_string(res.rounds) + " round(s), basis size " +
         std::to_string(res.basis.size()));
    for (std::size_t i = 0; i < res.basis.size(); ++i) {
      std::string terms;
      for (std::size_t j = 0; j < res.basis.size(); ++j) {
        if (res.differential[i][j].empty()) continue;
        terms += (terms.empty() ? "" : " + ") + std::string("(") + detail::poly_text(res.differential[i][j]) +
                 ")" + res.basis[j];
      }
      line("   d(" + res.basis[i] + ") = " + (terms.empty() ? "0" : terms));
    }
    std::string dims;
    for (std::size_t d = 0; d < res.cohomology.size(); ++d) dims += (d ? ", " : "") + std::to_string(res.cohomology[d]);
    line("   H(F) dims: " + dims);
    for (const auto& c : res.certification) {
      if (!c.passed) line("   failed " + c.check + " [" + c.subject + "]: " + c.detail);
    }
  }
  line("-- koszul: " + detail::tri(r.flags.koszul) + ", smooth (certified within degree window " +
       std::to_string(r.flags.certified_window) + "): " + detail::tri(r.flags.smooth));

  if (r.ext) {
    const auto& e = *r.ext;
    line("");
    line("-- Ext-algebra E: dim " + std::to_string(e.dim) + (e.commutative ? ", commutative" : ", noncommutative") +
         ", local: " + detail::tri(e.local));
    line("   e1 = unit");
    for (const auto& p : e.products) line("   " + p);
    if (e.radical) {
      std::string f;
      for (std::size_t k = 0; k < e.radical->filtration.size(); ++k) {
        f += (k ? ", " : "") + std::to_string(e.radical->filtration[k]);
      }
      line("   radical filtration dims: " + f + " (" + e.radical->method + ")");
    }
  }

  if (r.aut) {
    const auto& a = *r.aut;
    line("");
    line("-- Aut(E): sigma(e_i) = sum_j c_ij e_j");
    for (const auto& l : a.constraints.lines) line("   " + l);
    std::string fv;
    for (const auto& v : a.constraints.free_variables) fv += (fv.empty() ? "" : ", ") + v;
    line("   free: " + fv);
    line("   dim Der = " + std::to_string(a.dim_der) + ", dim InnDer = " + std::to_string(a.dim_inn_der) +
         ", dim Out = " + std::to_string(a.dim_out) + (a.lie_level_char_p_caveat ? " (Lie-level, char p caveat)" : ""));
    if (a.family) {
      line("   family: identities " + std::string(a.family->identities_hold ? "hold" : "FAIL") + ", dim match " +
           (a.family->dim_match ? "yes" : "no") + ", samples " + (a.family->samples_pass ? "pass" : "FAIL") + " (" +
           std::to_string(a.family->samples_checked) + ")");
    }
  }

  if (r.dpic) {
    line("");
    line("-- DPic(A) = " + r.dpic->description);
    line("   " + r.dpic->statement);
  }
  for (const auto& e : r.errors) line("!! " + e.stage + ": " + e.code + ": " + e.message);
  return out;
}

}  // namespace dgpic
