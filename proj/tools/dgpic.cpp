// dgpic command-line driver.
//
// Exit codes: 0 success (negative verdicts included), 2 input or prime
// errors, 3 degree window or round budget exceeded, 1 anything else.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgpic/dgpic.hpp"

namespace {

int exit_code_for(dgpic::ErrorCode code) {
  using dgpic::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownGenerator:
    case ErrorCode::BadField:
    case ErrorCode::BadDifferentialDegree:
    case ErrorCode::BadPrime:
    case ErrorCode::ParameterFieldMismatch:
      return 2;
    case ErrorCode::DegreeWindowExceeded:
      return 3;
    default:
      return 1;
  }
}

int exit_code_for(const dgpic::AnalysisReport& r) {
  for (const auto& e : r.errors) {
    if (e.code == "DegreeWindowExceeded") return 3;
  }
  if (r.resolution && r.resolution->verdict == "Undetermined") return 3;
  return 0;
}

dgpic::InputSpec load(const std::string& path, std::optional<int> window, std::optional<int> rounds) {
  dgpic::InputSpec spec = dgpic::parse_input(path);
  if (window) spec.window = *window;
  if (rounds) spec.max_rounds = *rounds;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derived Picard groups of Koszul, homologically smooth connected cochain DG algebras"};
  app.require_subcommand(1);

  std::string input;
  std::string family;
  std::string format = "json";
  std::optional<int> window;
  std::optional<int> rounds;
  int degree = 0;
  std::uint64_t prime = 0;

  auto* analyze = app.add_subcommand("analyze", "run the full pipeline and print the report");
  analyze->add_option("--input", input, "dgpic-input/1 file")->required();
  analyze->add_option("--window", window, "degree window W (default 6 or the input's value)");
  analyze->add_option("--max-rounds", rounds, "resolution round budget (default 8)");
  analyze->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--family", family, "dgpic-family/1 file to verify against Aut(E)");

  auto* cohomology = app.add_subcommand("cohomology", "basis of H^d(A)");
  cohomology->add_option("--input", input, "dgpic-input/1 file")->required();
  cohomology->add_option("--degree", degree, "degree d")->required();
  cohomology->add_option("--window", window, "degree window W");

  auto* oracle = app.add_subcommand("oracle", "brute-force cross-check and finite-field recheck");
  oracle->add_option("--input", input, "dgpic-input/1 file")->required();
  oracle->add_option("--prime", prime, "prime for the finite-field recheck")->required();
  oracle->add_option("--window", window, "degree window W");
  oracle->add_option("--max-rounds", rounds, "resolution round budget");

  auto* verify = app.add_subcommand("verify-family", "check a parametrized family against Aut(E)");
  verify->add_option("--input", input, "dgpic-input/1 file")->required();
  verify->add_option("--family", family, "dgpic-family/1 file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    dgpic::InputSpec spec = load(input, window, rounds);

    if (analyze->parsed()) {
      dgpic::AnalyzeOptions opts;
      if (!family.empty()) opts.family = dgpic::parse_family(family, spec.field);
      dgpic::AnalysisReport report = dgpic::analyze(spec, opts);
      std::cout << (format == "text" ? dgpic::render_text(report) : dgpic::render_json(report));
      return exit_code_for(report);
    }

    if (cohomology->parsed()) {
      dgpic::DgAlgebra alg = dgpic::build_dga(spec);
      if (degree > spec.window) {
        throw dgpic::Error(dgpic::ErrorCode::DegreeWindowExceeded,
                           "degree " + std::to_string(degree) + " exceeds window " + std::to_string(spec.window));
      }
      dgpic::CohomologyPiece piece = dgpic::cohomology_basis(alg, degree);
      nlohmann::json j;
      j["degree"] = degree;
      j["dim"] = piece.dim();
      j["representatives"] = nlohmann::json::array();
      for (const auto& r : piece.representatives) j["representatives"].push_back(r.to_string(alg.names()));
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (oracle->parsed()) {
      dgpic::DgAlgebra alg = dgpic::build_dga(spec);
      nlohmann::json j;
      j["comparison"] = dgpic::oracle_cross_check(alg, spec.max_rounds);
      j["finite_field_recheck"] = dgpic::finite_field_recheck(spec, prime);
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      dgpic::AnalyzeOptions opts;
      opts.family = dgpic::parse_family(family, spec.field);
      dgpic::AnalysisReport report = dgpic::analyze(spec, opts);
      nlohmann::json j;
      j["ext_dim"] = report.ext ? nlohmann::json(report.ext->dim) : nlohmann::json(nullptr);
      j["family"] = report.aut ? nlohmann::json(report.aut->family) : nlohmann::json(nullptr);
      j["errors"] = report.errors;
      std::cout << j.dump(2) << "\n";
      for (const auto& e : report.errors) {
        if (e.code == "ParameterFieldMismatch") return 2;
      }
      return exit_code_for(report);
    }
  } catch (const dgpic::Error& e) {
    std::cerr << "dgpic: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return 1;
}
