// SPDX-License-Identifier: Apache-2.0
//
// Report building for the command-line front end. The machine format is
// a single JSON object with sorted keys, interpretations as sorted
// literal-name arrays, and world views as arrays of interpretations, so
// repeated runs diff byte-for-byte. Timing never enters the machine
// format.

#pragma once

#include <json.hpp>

#include "elp/parser.hpp"
#include "elp/properties.hpp"

namespace elp {

inline constexpr std::string_view kToolName = "elp";
inline constexpr std::string_view kToolVersion = "0.1.0";

inline std::string fnv1a64_hex(std::string_view bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[static_cast<size_t>(k)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON building blocks
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const Interpretation& i,
                              const SymbolTable& syms) {
  return nlohmann::json(literal_names(i, syms));
}

inline nlohmann::json to_json(const WorldView& a, const SymbolTable& syms) {
  nlohmann::json out = nlohmann::json::array();
  for (const Interpretation& i : a.members) out.push_back(to_json(i, syms));
  return out;
}

inline nlohmann::json to_json(const PhiGuess& phi, const SymbolTable& syms) {
  nlohmann::json out = nlohmann::json::array();
  for (const EpNegLiteral& e : phi.chosen) out.push_back(render(e, syms));
  return out;
}

inline nlohmann::json to_json(const UnfoundedWitness& w,
                              const SymbolTable& syms) {
  nlohmann::json out = nlohmann::json::array();
  for (const UnfoundedPair& pair : w.pairs) {
    std::vector<std::string> names;
    for (uint32_t atom : pair.atoms) names.push_back(syms.name(atom));
    std::sort(names.begin(), names.end());
    out.push_back(nlohmann::json{
        {"atoms", names},
        {"interpretation", to_json(pair.interpretation, syms)}});
  }
  return out;
}

inline nlohmann::json to_json(const SolveStats& stats) {
  return nlohmann::json{
      {"collections_checked", stats.collections_checked},
      {"interpretations_checked", stats.interpretations_checked}};
}

inline nlohmann::json results_json(const SolveResult& r,
                                   const SymbolTable& syms) {
  nlohmann::json out;
  if (r.semantics == SemanticsId::GL) {
    nlohmann::json sets = nlohmann::json::array();
    for (const Interpretation& i : r.answer_sets)
      sets.push_back(to_json(i, syms));
    out["answer_sets"] = sets;
  } else {
    nlohmann::json views = nlohmann::json::array();
    for (const WorldView& a : r.world_views) views.push_back(to_json(a, syms));
    out["world_views"] = views;
    if (r.semantics == SemanticsId::SE16) {
      nlohmann::json pairs = nlohmann::json::array();
      for (const Se16WorldView& c : r.se16)
        pairs.push_back(nlohmann::json{
            {"phi", to_json(c.phi, syms)},
            {"world_view", to_json(c.world_view, syms)}});
      out["phi_per_world_view"] = pairs;
    }
  }
  return out;
}

inline nlohmann::json program_json(std::string_view source) {
  return nlohmann::json{{"hash", fnv1a64_hex(source)},
                        {"source", std::string(source)}};
}

inline nlohmann::json tool_json() {
  return nlohmann::json{{"name", std::string(kToolName)},
                        {"version", std::string(kToolVersion)}};
}

// ---------------------------------------------------------------------------
// Command-level results
// ---------------------------------------------------------------------------

struct FoundednessEntry {
  std::optional<Interpretation> answer_set;  // GL
  std::optional<WorldView> world_view;       // other semantics
  std::optional<UnfoundedWitness> witness;
  std::string error;  // non-empty when the finder was not applicable
};

/// Runs the appropriate finder on every answer set or world view.
inline std::vector<FoundednessEntry> check_foundedness(
    const Program& p, const SolveResult& r) {
  std::vector<FoundednessEntry> entries;
  if (r.semantics == SemanticsId::GL) {
    for (const Interpretation& i : r.answer_sets) {
      FoundednessEntry e;
      e.answer_set = i;
      try {
        e.witness = find_unfounded_set(p, i);
      } catch (const std::invalid_argument& err) {
        e.error = err.what();
      }
      entries.push_back(std::move(e));
    }
  } else {
    for (const WorldView& a : r.world_views) {
      FoundednessEntry e;
      e.world_view = a;
      try {
        e.witness = find_epistemic_unfounded(p, a);
      } catch (const std::invalid_argument& err) {
        e.error = err.what();
      }
      entries.push_back(std::move(e));
    }
  }
  return entries;
}

struct CmRun {
  size_t constraint_index = 0;
  Rule constraint;
  CmReport report;
};

/// Removes the designated constraint (default: the last one) and checks
/// whether adding it back introduces new results.
inline CmRun run_constraint_monotonicity(const Program& p,
                                         std::optional<size_t> constraint_index,
                                         SemanticsId s,
                                         const SolverLimits& limits = {}) {
  size_t index;
  if (constraint_index.has_value()) {
    index = *constraint_index;
    if (index >= p.rules.size())
      throw std::invalid_argument("constraint index out of range");
    if (!p.rules[index].is_constraint())
      throw std::invalid_argument("rule " + std::to_string(index) +
                                  " is not a constraint");
  } else {
    auto it = std::find_if(p.rules.rbegin(), p.rules.rend(),
                           [](const Rule& r) { return r.is_constraint(); });
    if (it == p.rules.rend())
      throw std::invalid_argument("program contains no constraint");
    index = static_cast<size_t>(p.rules.rend() - it) - 1;
  }
  CmRun run;
  run.constraint_index = index;
  run.constraint = p.rules[index];
  run.report = check_constraint_monotonicity(p.without_rule(index),
                                             run.constraint, s, limits);
  return run;
}

inline constexpr std::string_view kSplittingNote =
    "epistemic splitting implies subjective constraint monotonicity, so "
    "epistemic splitting fails on this instance as well";

// ---------------------------------------------------------------------------
// solve reports
// ---------------------------------------------------------------------------

inline nlohmann::json solve_report_json(std::string_view source,
                                        const Program& p,
                                        const SolveResult& r) {
  return nlohmann::json{{"command", "solve"},
                        {"program", program_json(source)},
                        {"results", results_json(r, p.symbols)},
                        {"semantics", std::string(to_string(r.semantics))},
                        {"stats", to_json(r.stats)},
                        {"tool", tool_json()}};
}

inline std::string result_lines(const SolveResult& r, const SymbolTable& syms,
                                const std::string& indent = "") {
  std::string out;
  if (r.semantics == SemanticsId::GL) {
    if (r.answer_sets.empty()) return indent + "no answer sets\n";
    for (const Interpretation& i : r.answer_sets)
      out += indent + "answer set: " + render(i, syms) + "\n";
    return out;
  }
  if (r.world_views.empty()) return indent + "no world views\n";
  if (r.semantics == SemanticsId::SE16) {
    for (const Se16WorldView& c : r.se16)
      out += indent + "world view: " + render(c.world_view, syms) +
             "   [phi " + render(c.phi, syms) + "]\n";
    return out;
  }
  for (const WorldView& a : r.world_views)
    out += indent + "world view: " + render(a, syms) + "\n";
  return out;
}

inline std::string stats_line(const SolveStats& stats) {
  const double ms = static_cast<double>(stats.elapsed.count()) / 1000.0;
  return "checked " + std::to_string(stats.interpretations_checked) +
         " interpretations, " + std::to_string(stats.collections_checked) +
         " collections in " + std::to_string(ms) + " ms\n";
}

inline std::string solve_report_text(const Program& p, const SolveResult& r) {
  std::string out = "semantics: " + std::string(to_string(r.semantics)) + "\n";
  out += result_lines(r, p.symbols);
  out += stats_line(r.stats);
  return out;
}

// ---------------------------------------------------------------------------
// check reports
// ---------------------------------------------------------------------------

inline nlohmann::json cm_results_json(const CmRun& run,
                                      const SymbolTable& syms) {
  const CmReport& rep = run.report;
  nlohmann::json violations = nlohmann::json::array();
  nlohmann::json with_c, without_c;
  if (rep.semantics == SemanticsId::GL) {
    for (const Interpretation& i : rep.violating_answer_sets)
      violations.push_back(to_json(i, syms));
    with_c = results_json(rep.with_constraint, syms)["answer_sets"];
    without_c = results_json(rep.without_constraint, syms)["answer_sets"];
  } else {
    for (const WorldView& a : rep.violating_world_views)
      violations.push_back(to_json(a, syms));
    with_c = results_json(rep.with_constraint, syms)["world_views"];
    without_c = results_json(rep.without_constraint, syms)["world_views"];
  }
  nlohmann::json out{{"constraint",
                      nlohmann::json{{"index", run.constraint_index},
                                     {"text", render(run.constraint, syms)}}},
                     {"holds", rep.holds},
                     {"violations", violations},
                     {"with_constraint", with_c},
                     {"without_constraint", without_c}};
  if (!rep.holds) out["note"] = std::string(kSplittingNote);
  return out;
}

inline nlohmann::json check_cm_report_json(std::string_view source,
                                           const Program& p, const CmRun& run) {
  return nlohmann::json{
      {"command", "check"},
      {"program", program_json(source)},
      {"property", "cm"},
      {"results", cm_results_json(run, p.symbols)},
      {"semantics", std::string(to_string(run.report.semantics))},
      {"stats", to_json(run.report.with_constraint.stats)},
      {"tool", tool_json()}};
}

inline std::string check_cm_report_text(const Program& p, const CmRun& run) {
  const CmReport& rep = run.report;
  const SymbolTable& syms = p.symbols;
  const char* kind =
      rep.semantics == SemanticsId::GL ? "answer sets" : "world views";
  std::string out = "semantics: " +
                    std::string(to_string(rep.semantics)) + "\n";
  out += "constraint (rule " + std::to_string(run.constraint_index) +
         "): " + render(run.constraint, syms) + "\n";
  out += std::string(kind) + " with the constraint:\n" +
         result_lines(rep.with_constraint, syms, "  ");
  out += std::string(kind) + " without the constraint:\n" +
         result_lines(rep.without_constraint, syms, "  ");
  out += std::string(rep.semantics == SemanticsId::GL
                         ? "constraint monotonicity: "
                         : "subjective constraint monotonicity: ");
  out += rep.holds ? "holds\n" : "FAILS\n";
  if (!rep.holds) {
    out += "violations:\n";
    if (rep.semantics == SemanticsId::GL)
      for (const Interpretation& i : rep.violating_answer_sets)
        out += "  " + render(i, syms) + "\n";
    else
      for (const WorldView& a : rep.violating_world_views)
        out += "  " + render(a, syms) + "\n";
    out += "note: " + std::string(kSplittingNote) + "\n";
  }
  return out;
}

inline nlohmann::json foundedness_results_json(
    const std::vector<FoundednessEntry>& entries, const SymbolTable& syms) {
  nlohmann::json list = nlohmann::json::array();
  bool all_founded = true;
  for (const FoundednessEntry& e : entries) {
    nlohmann::json item;
    if (e.answer_set) item["answer_set"] = to_json(*e.answer_set, syms);
    if (e.world_view) item["world_view"] = to_json(*e.world_view, syms);
    if (!e.error.empty()) {
      item["error"] = e.error;
    } else {
      item["founded"] = !e.witness.has_value();
      item["witness"] =
          e.witness ? to_json(*e.witness, syms) : nlohmann::json(nullptr);
      if (e.witness) all_founded = false;
    }
    list.push_back(std::move(item));
  }
  return nlohmann::json{{"all_founded", all_founded}, {"entries", list}};
}

inline nlohmann::json check_foundedness_report_json(
    std::string_view source, const Program& p, const SolveResult& r,
    const std::vector<FoundednessEntry>& entries) {
  return nlohmann::json{
      {"command", "check"},
      {"program", program_json(source)},
      {"property", "foundedness"},
      {"results", foundedness_results_json(entries, p.symbols)},
      {"semantics", std::string(to_string(r.semantics))},
      {"stats", to_json(r.stats)},
      {"tool", tool_json()}};
}

inline std::string check_foundedness_report_text(
    const Program& p, const SolveResult& r,
    const std::vector<FoundednessEntry>& entries) {
  const SymbolTable& syms = p.symbols;
  std::string out = "semantics: " + std::string(to_string(r.semantics)) + "\n";
  if (entries.empty()) {
    out += r.semantics == SemanticsId::GL ? "no answer sets\n"
                                          : "no world views\n";
    return out;
  }
  for (const FoundednessEntry& e : entries) {
    out += e.answer_set ? "answer set " + render(*e.answer_set, syms)
                        : "world view " + render(*e.world_view, syms);
    if (!e.error.empty())
      out += ": error: " + e.error + "\n";
    else if (e.witness)
      out += ": UNFOUNDED   witness " + render(*e.witness, syms) + "\n";
    else
      out += ": founded\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// compare reports
// ---------------------------------------------------------------------------

struct CompareRow {
  SemanticsId semantics = SemanticsId::GL;
  std::string solve_error;  // non-empty: the row failed, rest is unset
  SolveResult result;
  bool cm_applicable = false;
  std::string cm_error;
  std::optional<CmRun> cm;
  std::vector<FoundednessEntry> foundedness;
};

inline std::vector<CompareRow> run_compare(const Program& p,
                                           const SolverLimits& limits = {}) {
  const bool has_constraint =
      std::any_of(p.rules.begin(), p.rules.end(),
                  [](const Rule& r) { return r.is_constraint(); });
  std::vector<CompareRow> rows;
  for (SemanticsId s : {SemanticsId::GL, SemanticsId::G91, SemanticsId::SE16,
                        SemanticsId::Narrative}) {
    CompareRow row;
    row.semantics = s;
    try {
      row.result = solve(p, s, limits);
    } catch (const std::exception& err) {
      row.solve_error = err.what();
      rows.push_back(std::move(row));
      continue;
    }
    if (has_constraint) {
      try {
        row.cm = run_constraint_monotonicity(p, std::nullopt, s, limits);
        row.cm_applicable = true;
      } catch (const std::exception& err) {
        row.cm_error = err.what();
      }
    }
    row.foundedness = check_foundedness(p, row.result);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json compare_report_json(std::string_view source,
                                          const Program& p,
                                          const std::vector<CompareRow>& rows) {
  nlohmann::json out_rows = nlohmann::json::array();
  for (const CompareRow& row : rows) {
    nlohmann::json item{{"semantics", std::string(to_string(row.semantics))}};
    if (!row.solve_error.empty()) {
      item["status"] = "error";
      item["error"] = row.solve_error;
      out_rows.push_back(std::move(item));
      continue;
    }
    item["status"] = "ok";
    item["results"] = results_json(row.result, p.symbols);
    item["stats"] = to_json(row.result.stats);
    if (row.cm.has_value())
      item["cm"] = cm_results_json(*row.cm, p.symbols);
    else if (!row.cm_error.empty())
      item["cm"] = nlohmann::json{{"error", row.cm_error}};
    else
      item["cm"] = nlohmann::json{{"reason", "program has no constraint"}};
    item["foundedness"] =
        foundedness_results_json(row.foundedness, p.symbols);
    out_rows.push_back(std::move(item));
  }
  return nlohmann::json{{"command", "compare"},
                        {"program", program_json(source)},
                        {"rows", out_rows},
                        {"tool", tool_json()}};
}

inline std::string compare_report_text(const Program& p,
                                       const std::vector<CompareRow>& rows) {
  const SymbolTable& syms = p.symbols;
  std::string out = "results\n";
  auto label = [](SemanticsId s) {
    std::string name{to_string(s)};
    name.resize(10, ' ');
    return "  " + name + " ";
  };
  for (const CompareRow& row : rows) {
    out += label(row.semantics);
    if (!row.solve_error.empty()) {
      out += "error: " + row.solve_error + "\n";
      continue;
    }
    const SolveResult& r = row.result;
    if (r.semantics == SemanticsId::GL) {
      if (r.answer_sets.empty()) out += "no answer sets";
      for (size_t i = 0; i < r.answer_sets.size(); ++i)
        out += (i ? "  " : "") + render(r.answer_sets[i], syms);
    } else {
      if (r.world_views.empty()) out += "no world views";
      for (size_t i = 0; i < r.world_views.size(); ++i)
        out += (i ? "  " : "") + render(r.world_views[i], syms);
    }
    out += "\n";
  }
  out += "constraint monotonicity\n";
  for (const CompareRow& row : rows) {
    out += label(row.semantics);
    if (!row.solve_error.empty())
      out += "error: " + row.solve_error + "\n";
    else if (row.cm.has_value()) {
      const CmReport& rep = row.cm->report;
      if (rep.holds)
        out += "holds\n";
      else {
        out += "FAILS:";
        if (rep.semantics == SemanticsId::GL)
          for (const Interpretation& i : rep.violating_answer_sets)
            out += " " + render(i, syms);
        else
          for (const WorldView& a : rep.violating_world_views)
            out += " " + render(a, syms);
        out += "\n";
      }
    } else if (!row.cm_error.empty())
      out += "error: " + row.cm_error + "\n";
    else
      out += "n/a (no constraint)\n";
  }
  out += "foundedness\n";
  for (const CompareRow& row : rows) {
    out += label(row.semantics);
    if (!row.solve_error.empty()) {
      out += "error: " + row.solve_error + "\n";
      continue;
    }
    if (row.foundedness.empty()) {
      out += "no results\n";
      continue;
    }
    std::string line;
    for (const FoundednessEntry& e : row.foundedness) {
      if (!line.empty()) line += "  ";
      line += e.answer_set ? render(*e.answer_set, syms)
                           : render(*e.world_view, syms);
      if (!e.error.empty())
        line += ": error";
      else if (e.witness)
        line += ": unfounded " + render(*e.witness, syms);
      else
        line += ": founded";
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace elp
