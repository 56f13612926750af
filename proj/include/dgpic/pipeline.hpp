#pragma once

// Input files, the analyze pipeline and report assembly.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgpic/aut_group.hpp"
#include "dgpic/dga.hpp"
#include "dgpic/ext_algebra.hpp"
#include "dgpic/report.hpp"
#include "dgpic/resolution.hpp"

namespace dgpic {

/// A parsed "dgpic-input/1" file. Polynomials are kept as expression text;
/// every name in them is a declared generator.
struct InputSpec {
  std::string name;
  Field field;
  std::vector<std::string> generators;
  std::vector<std::string> relations;
  std::map<std::string, std::string> differential;
  int window = 6;
  int max_rounds = 8;
  /// Family file, already resolved against the input file's directory.
  std::optional<std::string> family;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parses JSON and reports syntax errors with line and column.
inline nlohmann::json parse_json_text(const std::string& text, const std::string& path) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError,
                path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

[[noreturn]] inline void field_error(const std::string& path, const std::string& where, const std::string& why) {
  throw Error(ErrorCode::ParseError, path + ": field '" + where + "': " + why);
}

/// Rethrows a library error with the offending field prefixed.
template <class F>
auto in_field(const std::string& path, const std::string& where, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), path + ": field '" + where + "': " + e.message());
  }
}

inline Field parse_field(const nlohmann::json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.size() == 1 && j.contains("Fp")) {
    const auto& p = j.at("Fp");
    if (!p.is_number_integer() || p.get<long long>() < 2) {
      throw Error(ErrorCode::BadField, path + ": field 'field.Fp': expected a prime");
    }
    return in_field(path, "field.Fp", [&] { return Field::prime(p.get<std::uint64_t>()); });
  }
  throw Error(ErrorCode::BadField, path + ": field 'field': expected \"Q\" or {\"Fp\": p}");
}

inline nlohmann::json field_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return nlohmann::json{{"Fp", f.characteristic()}};
}

/// A polynomial given as a string or as a list of {coeff, word} terms.
inline std::string poly_text(const nlohmann::json& j, const std::string& path, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_array()) field_error(path, where, "expected a string or a list of terms");
  std::string out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& t = j[k];
    std::string tw = where + "[" + std::to_string(k) + "]";
    if (!t.is_object() || !t.contains("coeff") || !t.contains("word")) {
      field_error(path, tw, "term needs 'coeff' and 'word'");
    }
    std::string coeff;
    if (t["coeff"].is_string()) {
      coeff = t["coeff"].get<std::string>();
    } else if (t["coeff"].is_number_integer()) {
      coeff = std::to_string(t["coeff"].get<long long>());
    } else {
      field_error(path, tw + ".coeff", "expected an integer or a \"p/q\" string");
    }
    if (!t["word"].is_array()) field_error(path, tw + ".word", "expected a list of generator names");
    std::string term = "(" + coeff + ")";
    for (const auto& g : t["word"]) {
      if (!g.is_string()) field_error(path, tw + ".word", "expected generator names");
      term += "*" + g.get<std::string>();
    }
    out += (k ? " + " : "") + term;
  }
  return out.empty() ? "0" : out;
}

/// Presentation with no rules, used to parse free-algebra expressions.
inline Presentation free_presentation(const Field& field, const std::vector<std::string>& names, int window) {
  std::vector<Generator> gens;
  for (const auto& n : names) gens.push_back({n, 1});
  return Presentation::from_rules(field, std::move(gens), {}, window);
}

}  // namespace detail

/// Reads and checks an input file. Errors carry the path and the offending
/// field (or line and column for malformed JSON).
inline InputSpec parse_input(const std::string& path) {
  nlohmann::json j = detail::parse_json_text(detail::read_file(path), path);
  if (!j.is_object()) detail::field_error(path, "", "top level must be an object");
  if (!j.contains("schema") || j["schema"] != kInputSchema) {
    detail::field_error(path, "schema", std::string("expected \"") + kInputSchema + "\"");
  }

  InputSpec spec;
  spec.name = j.value("name", std::filesystem::path(path).stem().string());
  if (!j.contains("field")) detail::field_error(path, "field", "missing");
  spec.field = detail::parse_field(j["field"], path);

  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty()) {
    detail::field_error(path, "generators", "expected a non-empty list of names");
  }
  for (std::size_t i = 0; i < j["generators"].size(); ++i) {
    const auto& g = j["generators"][i];
    std::string where = "generators[" + std::to_string(i) + "]";
    std::string name;
    if (g.is_string()) {
      name = g.get<std::string>();
    } else if (g.is_object() && g.contains("name") && g["name"].is_string()) {
      name = g["name"].get<std::string>();
      if (g.value("degree", 1) != 1) detail::field_error(path, where + ".degree", "only degree-1 generators are supported");
    } else {
      detail::field_error(path, where, "expected a name");
    }
    spec.generators.push_back(name);
  }

  for (const char* key : {"window", "max_rounds"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_number_integer() || j[key].get<int>() < 1) {
      detail::field_error(path, key, "expected a positive integer");
    }
  }
  spec.window = j.value("window", 6);
  spec.max_rounds = j.value("max_rounds", 8);

  Presentation helper = detail::in_field(path, "generators", [&] {
    return detail::free_presentation(spec.field, spec.generators, spec.window + 1);
  });
  auto names = helper.names();

  if (j.contains("relations")) {
    if (!j["relations"].is_array()) detail::field_error(path, "relations", "expected a list");
    for (std::size_t i = 0; i < j["relations"].size(); ++i) {
      std::string where = "relations[" + std::to_string(i) + "]";
      std::string text = detail::poly_text(j["relations"][i], path, where);
      detail::in_field(path, where, [&] { return helper.parse(text); });
      spec.relations.push_back(text);
    }
  }

  if (j.contains("differential")) {
    if (!j["differential"].is_object()) detail::field_error(path, "differential", "expected an object");
    for (const auto& [g, v] : j["differential"].items()) {
      std::string where = "differential." + g;
      if (!helper.generator_index(g)) throw Error(ErrorCode::UnknownGenerator, path + ": field '" + where + "': '" + g + "'");
      std::string text = detail::poly_text(v, path, where);
      NcPoly p = detail::in_field(path, where, [&] { return helper.parse(text); });
      auto d = p.homogeneous_degree(2);
      if (!d || *d != 2) {
        throw Error(ErrorCode::BadDifferentialDegree,
                    path + ": field '" + where + "': image " + p.to_string(names) + " is not of degree 2");
      }
      spec.differential[g] = text;
    }
  }

  if (j.contains("family")) {
    if (!j["family"].is_string()) detail::field_error(path, "family", "expected a file path");
    std::filesystem::path fam = j["family"].get<std::string>();
    if (fam.is_relative()) fam = std::filesystem::path(path).parent_path() / fam;
    spec.family = fam.lexically_normal().string();
  }
  return spec;
}

/// Builds the DG algebra of a spec, optionally over another field (the
/// expression text is re-read in that field). The completion window is W+1.
inline DgAlgebra build_dga(const InputSpec& spec, std::optional<Field> field = std::nullopt) {
  Field f = field.value_or(spec.field);
  Presentation helper = detail::free_presentation(f, spec.generators, spec.window + 1);
  std::vector<NcPoly> relations;
  for (const auto& r : spec.relations) relations.push_back(helper.parse(r));
  std::vector<Generator> gens = helper.generators();
  Presentation pres = Presentation::complete_rewrites(f, gens, std::move(relations), spec.window + 1);
  std::vector<NcPoly> diff;
  for (const auto& g : spec.generators) {
    auto it = spec.differential.find(g);
    diff.push_back(it == spec.differential.end() ? NcPoly(f) : pres.normal_form(helper.parse(it->second)));
  }
  return DgAlgebra(std::move(pres), std::move(diff), spec.window);
}

/// Reads a "dgpic-family/1" file. Entries are parsed over the family's own
/// field when it names one, otherwise over `default_field`.
inline MatrixFamily parse_family(const std::string& path, const Field& default_field) {
  nlohmann::json j = detail::parse_json_text(detail::read_file(path), path);
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kFamilySchema) {
    detail::field_error(path, "schema", std::string("expected \"") + kFamilySchema + "\"");
  }
  MatrixFamily fam;
  if (j.contains("field")) fam.field = detail::parse_field(j["field"], path);
  Field f = fam.field.value_or(default_field);
  if (!j.contains("parameters") || !j["parameters"].is_array()) {
    detail::field_error(path, "parameters", "expected a list of names");
  }
  for (const auto& p : j["parameters"]) {
    if (!p.is_string()) detail::field_error(path, "parameters", "expected names");
    fam.parameters.push_back(p.get<std::string>());
  }
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].empty()) {
    detail::field_error(path, "entries", "expected a square grid of polynomial strings");
  }
  const std::size_t n = j["entries"].size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = j["entries"][i];
    if (!row.is_array() || row.size() != n) {
      detail::field_error(path, "entries[" + std::to_string(i) + "]", "expected " + std::to_string(n) + " entries");
    }
    std::vector<ParamPoly> out;
    for (std::size_t k = 0; k < n; ++k) {
      std::string where = "entries[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      std::string text = row[k].is_string() ? row[k].get<std::string>() : row[k].dump();
      out.push_back(detail::in_field(path, where, [&] { return ParamPoly::parse(text, f, fam.parameters); }));
    }
    fam.entries.push_back(std::move(out));
  }
  if (j.contains("side_conditions")) {
    for (std::size_t i = 0; i < j["side_conditions"].size(); ++i) {
      std::string where = "side_conditions[" + std::to_string(i) + "]";
      const auto& s = j["side_conditions"][i];
      if (!s.is_string()) detail::field_error(path, where, "expected a polynomial string (meaning != 0)");
      std::string text = s.get<std::string>();
      fam.side_conditions.push_back(detail::in_field(path, where, [&] { return ParamPoly::parse(text, f, fam.parameters); }));
    }
  }
  return fam;
}

namespace detail {

inline PolyRecord poly_record(const NcPoly& p, const std::vector<std::string>& names) {
  PolyRecord out;
  for (const auto& [w, c] : p.terms()) {
    TermRecord t{c.to_string(), {}};
    for (Letter l : w.letters()) t.word.push_back(names[l]);
    out.push_back(std::move(t));
  }
  return out;
}

inline std::vector<CheckRecord> check_records(const ValidationReport& r) {
  std::vector<CheckRecord> out;
  for (const auto& e : r.entries) out.push_back({e.check, e.subject, e.passed, e.detail});
  return out;
}

inline ConstantsRecord constants_record(const StructureConstants& c) {
  ConstantsRecord out;
  for (const auto& plane : c) {
    auto& p = out.emplace_back();
    for (const auto& row : plane) {
      auto& r = p.emplace_back();
      for (const auto& s : row) r.push_back(s.to_string());
    }
  }
  return out;
}

inline ErrorRecord error_record(const std::string& stage, const Error& e) {
  return {stage, std::string(to_string(e.code())), e.what()};
}

inline std::vector<std::vector<std::string>> family_strings(const MatrixFamily& fam) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : fam.entries) {
    auto& r = out.emplace_back();
    for (const auto& e : row) r.push_back(e.to_string(fam.parameters));
  }
  return out;
}

}  // namespace detail

struct AnalyzeOptions {
  /// Overrides the input's family file.
  std::optional<MatrixFamily> family;
  std::size_t family_samples = 32;
  std::uint64_t seed = kDefaultSampleSeed;
};

/// Runs parse -> validate -> resolve -> Ext -> Aut -> DPic. Mathematical
/// failures become report entries; later stages are skipped when their
/// input is unavailable.
inline AnalysisReport analyze(const InputSpec& spec, const AnalyzeOptions& options = {}) {
  AnalysisReport report;
  auto& in = report.input;
  in.name = spec.name;
  in.field = spec.field.name();
  in.generators = spec.generators;
  in.window = spec.window;
  in.completion_window = spec.window + 1;
  in.max_rounds = spec.max_rounds;
  report.flags.certified_window = spec.window;

  DgAlgebra alg;
  try {
    Presentation helper = detail::free_presentation(spec.field, spec.generators, spec.window + 1);
    for (const auto& r : spec.relations) in.relations.push_back(detail::poly_record(helper.parse(r), spec.generators));
    for (const auto& [g, p] : spec.differential) in.differential[g] = detail::poly_record(helper.parse(p), spec.generators);
    alg = build_dga(spec);
  } catch (const Error& e) {
    report.errors.push_back(detail::error_record("rewriting", e));
    return report;
  }
  const auto names = alg.names();
  for (const auto& r : alg.pres().rules()) {
    report.rewriting.rules.push_back(detail::poly_record(r.poly, names));
    if (r.from_completion) report.rewriting.added_rules.push_back(detail::poly_record(r.poly, names));
  }

  ValidationReport validation = validate_dga(alg);
  report.validation.passed = validation.passed();
  report.validation.checks = detail::check_records(validation);
  if (!report.validation.passed) return report;

  try {
    CohomologyRecord coh;
    for (int d = 0; d <= spec.window; ++d) {
      CohomologyPiece piece = cohomology_basis(alg, d);
      coh.dims.push_back(piece.dim());
      auto& reps = coh.representatives.emplace_back();
      for (const auto& r : piece.representatives) reps.push_back(detail::poly_record(r, names));
    }
    report.cohomology = std::move(coh);
  } catch (const Error& e) {
    report.errors.push_back(detail::error_record("cohomology", e));
  }

  ResolutionResult res;
  try {
    res = build_resolution(alg, spec.max_rounds);
    ResolutionRecord rec;
    rec.verdict = to_string(res.verdict);
    rec.rounds = res.rounds;
    rec.basis = res.resolution.basis;
    for (const auto& row : res.resolution.differential) {
      auto& r = rec.differential.emplace_back();
      for (const auto& e : row) r.push_back(detail::poly_record(e, names));
    }
    rec.cohomology = res.cohomology;
    rec.certification = detail::check_records(verify_resolution(res.resolution, alg));
    report.resolution = std::move(rec);
  } catch (const Error& e) {
    report.errors.push_back(detail::error_record("resolution", e));
    return report;
  }
  KoszulSmooth ks = is_koszul_smooth(res);
  report.flags.koszul = ks.koszul;
  report.flags.smooth = ks.smooth;
  report.flags.basis_size = ks.basis_size;
  if (res.verdict != ResolutionVerdict::Resolved) return report;

  FinDimAlgebra E;
  try {
    E = compute_ext_algebra(res.resolution, alg);
  } catch (const Error& e) {
    report.errors.push_back(detail::error_record("ext", e));
    return report;
  }
  ExtRecord ext;
  ext.dim = E.dim();
  ext.labels = E.labels();
  ext.structure_constants = detail::constants_record(E.constants());
  ext.opposite_structure_constants = detail::constants_record(E.opposite().constants());
  if (E.matrices()) {
    for (const auto& M : *E.matrices()) {
      auto& m = ext.matrices.emplace_back();
      for (const auto& row : M) {
        auto& r = m.emplace_back();
        for (const auto& s : row) r.push_back(s.to_string());
      }
    }
  }
  ext.products = E.product_table();
  ext.unit_law = E.satisfies_unit_law();
  ext.associative = E.is_associative();
  ext.commutative = E.is_commutative();
  try {
    RadicalInfo rad = radical(E);
    ext.radical = RadicalRecord{rad.method, rad.dim(), rad.filtration};
    ext.local = is_local(E, rad);
  } catch (const Error& e) {
    report.errors.push_back(detail::error_record("ext", e));
  }
  report.ext = ext;

  AutRecord aut;
  OutDimension od = out_dimension(E);
  aut.dim_der = od.dim_der;
  aut.dim_inn_der = od.dim_inn_der;
  aut.dim_out = od.dim_out;
  aut.lie_level_char_p_caveat = od.char_p_caveat;
  AutConstraintSystem sys = aut_constraints(E);
  for (std::size_t v : sys.free_variables) aut.constraints.free_variables.push_back(sys.variables[v]);
  for (std::size_t v : sys.pinned()) aut.constraints.pinned[sys.variables[v]] = sys.solved.at(v).to_string(sys.variables);
  for (std::size_t v : sys.bound()) aut.constraints.bound[sys.variables[v]] = sys.solved.at(v).to_string(sys.variables);
  for (const auto& r : sys.residual) aut.constraints.residual.push_back(r.to_string(sys.variables));
  aut.constraints.determinant = sys.determinant.to_string(sys.variables);
  aut.constraints.consistent = sys.consistent;
  aut.constraints.lines = sys.lines();

  std::optional<MatrixFamily> family = options.family;
  if (!family && spec.family) {
    try {
      family = parse_family(*spec.family, spec.field);
    } catch (const Error& e) {
      report.errors.push_back(detail::error_record("aut", e));
    }
  }
  bool family_verified = false;
  if (family) {
    try {
      FamilyVerdict v = verify_family(*family, E, options.family_samples, options.seed);
      FamilyRecord fr;
      fr.parameters = family->parameters;
      fr.entries = detail::family_strings(*family);
      for (const auto& s : family->side_conditions) fr.side_conditions.push_back(s.to_string(family->parameters));
      fr.identities_hold = v.identities_hold;
      fr.dim_match = v.dim_match;
      fr.samples_pass = v.samples_pass;
      fr.samples_checked = v.samples_checked;
      fr.failures = v.failures;
      family_verified = v.passed();
      aut.family = std::move(fr);
    } catch (const Error& e) {
      report.errors.push_back(detail::error_record("aut", e));
    }
  }
  report.aut = aut;

  if (ks.koszul.value_or(false) && ks.smooth.value_or(false) && ext.local.value_or(false)) {
    DpicRecord dp;
    dp.description = "Z x Out_k(E)";
    dp.dim_out = od.dim_out;
    dp.statement = "DPic(A) = Z x Out_k(E) with dim Out_k(E) = " + std::to_string(od.dim_out) +
                   (od.char_p_caveat ? " (Lie-level, char p caveat)" : "") + "; Koszul and smooth certified up to degree " +
                   std::to_string(spec.window);
    if (family_verified) {
      dp.family = aut.family->entries;
      dp.statement += "; the supplied family is consistent with Aut(E) at tangent level";
    }
    report.dpic = std::move(dp);
  }
  return report;
}

}  // namespace dgpic
