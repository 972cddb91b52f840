// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: solve / check / compare over .elp files.
// Exit codes: 0 success (an empty result set is success), 1 usage or
// parse errors, 2 enumeration cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "elp/report.hpp"

namespace {

struct CommonArgs {
  std::string file;
  std::string semantics = "g91";
  std::string format = "text";
  int max_atoms = 0;  // 0: keep the per-engine defaults
  bool strict = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_semantics) {
  cmd->add_option("file", args.file, "program file (.elp)")->required();
  if (with_semantics)
    cmd->add_option("--semantics", args.semantics, "gl|g91|se16|narrative")
        ->check(CLI::IsMember({"gl", "g91", "se16", "narrative"}));
  cmd->add_option("--max-atoms", args.max_atoms,
                  "override the engine atom caps")
      ->envname("ELP_MAX_ATOMS");
  cmd->add_option("--format", args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--strict", args.strict,
                "treat duplicate-literal warnings as errors");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

elp::SolverLimits limits_for(const CommonArgs& args) {
  elp::SolverLimits limits;
  if (args.max_atoms > 0) {
    limits.max_atoms_gl = static_cast<uint32_t>(args.max_atoms);
    limits.max_atoms_epistemic = static_cast<uint32_t>(args.max_atoms);
  }
  return limits;
}

elp::Program load_program(const CommonArgs& args, std::string& source) {
  source = read_file(args.file);
  std::vector<std::string> warnings;
  elp::Program p =
      elp::parse_program(source, elp::ParseOptions{args.strict}, &warnings);
  for (const std::string& w : warnings)
    std::cerr << args.file << ":" << w << "\n";
  return p;
}

elp::SemanticsId semantics_for(const CommonArgs& args) {
  const auto s = elp::parse_semantics(args.semantics);
  if (!s) throw std::runtime_error("unknown semantics: " + args.semantics);
  return *s;
}

void emit(const std::string& text) { std::cout << text; }
void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int run_solve(const CommonArgs& args) {
  std::string source;
  const elp::Program p = load_program(args, source);
  const elp::SolveResult r = elp::solve(p, semantics_for(args), limits_for(args));
  if (args.format == "json")
    emit(elp::solve_report_json(source, p, r));
  else
    emit(elp::solve_report_text(p, r));
  return 0;
}

struct CheckArgs {
  CommonArgs common;
  std::string property;
  int constraint_index = -1;
};

int run_check(const CheckArgs& args) {
  std::string source;
  const elp::Program p = load_program(args.common, source);
  const elp::SemanticsId s = semantics_for(args.common);
  const elp::SolverLimits limits = limits_for(args.common);
  if (args.property == "cm") {
    std::optional<size_t> index;
    if (args.constraint_index >= 0)
      index = static_cast<size_t>(args.constraint_index);
    const elp::CmRun run =
        elp::run_constraint_monotonicity(p, index, s, limits);
    if (args.common.format == "json")
      emit(elp::check_cm_report_json(source, p, run));
    else
      emit(elp::check_cm_report_text(p, run));
    return 0;
  }
  const elp::SolveResult r = elp::solve(p, s, limits);
  const auto entries = elp::check_foundedness(p, r);
  if (args.common.format == "json")
    emit(elp::check_foundedness_report_json(source, p, r, entries));
  else
    emit(elp::check_foundedness_report_text(p, r, entries));
  return 0;
}

int run_compare(const CommonArgs& args) {
  std::string source;
  const elp::Program p = load_program(args, source);
  const auto rows = elp::run_compare(p, limits_for(args));
  if (args.format == "json")
    emit(elp::compare_report_json(source, p, rows));
  else
    emit(elp::compare_report_text(p, rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elp: a desk-scale workbench for epistemic logic programs"};
  app.require_subcommand(1);

  CommonArgs solve_args;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "compute answer sets or world views");
  add_common(solve_cmd, solve_args, true);

  CheckArgs check_args;
  CLI::App* check_cmd =
      app.add_subcommand("check", "check a semantic property");
  add_common(check_cmd, check_args.common, true);
  check_cmd->add_option("--property", check_args.property, "cm|foundedness")
      ->required()
      ->check(CLI::IsMember({"cm", "foundedness"}));
  check_cmd->add_option("--constraint", check_args.constraint_index,
                        "rule index of the designated constraint "
                        "(default: the last constraint)");

  CommonArgs compare_args;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "side-by-side results of every semantics");
  add_common(compare_cmd, compare_args, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_args);
    if (check_cmd->parsed()) return run_check(check_args);
    return run_compare(compare_args);
  } catch (const elp::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const elp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
