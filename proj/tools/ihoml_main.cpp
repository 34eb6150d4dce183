// ihoml: finite-model workbench for intensional higher-order modal logic.
// Subcommands: check (one goal), suite (reproduction table), eval (formula
// on a model file). Exit codes: 0 ok/match, 1 mismatch, 2 usage or
// parse/type error, 3 inconclusive (budget exhausted).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ihoml/eval.hpp"
#include "ihoml/model_io.hpp"
#include "ihoml/parser.hpp"
#include "ihoml/printer.hpp"
#include "ihoml/report.hpp"

#ifndef IHOML_DATA_DIR
#define IHOML_DATA_DIR "data"
#endif

using namespace ihoml;

namespace {

uint64_t env_budget(uint64_t fallback) {
  const char* s = std::getenv("IHOML_BUDGET");
  if (!s || !*s) return fallback;
  return std::strtoull(s, nullptr, 10);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
}

std::string qualifiers(const SearchStats& s) {
  std::string q;
  if (s.sampled_models) q += " [sampled: models]";
  if (s.sampled_instances) q += " [sampled: instances]";
  if (s.pruned_hunt) q += " [pruned hunt]";
  if (s.budget_exhausted) q += " [budget exhausted]";
  return q;
}

std::string verdict_line(const Verdict& v) {
  std::string s = verdict_name(v.tag);
  if (v.model)
    s += " (" + std::to_string(v.model->frame.world_count) + " worlds, " +
         std::to_string(v.model->entity_count) + " entities)";
  return s + qualifiers(v.stats);
}

int cmd_check(const std::string& variant_name, const std::string& logic,
              const std::string& goal, const Bounds& bounds, int workers,
              uint64_t samples, const std::string& format, const std::string& expect,
              bool deterministic, const std::string& out_path) {
  VariantSpec v = build_variant(variant_name);
  FrameClass cls = frame_class_from_name(logic);
  SearchOptions opts;
  opts.workers = workers;
  opts.schema_samples = samples;
  Verdict verdict = goal == "consistency" ? find_model(v, bounds, cls, {}, opts)
                                          : check_entailment(v, goal, bounds, cls, opts);

  if (format == "json") {
    emit(check_report_json(variant_name, logic, bounds, goal, verdict, deterministic),
         out_path);
  } else {
    std::ostringstream os;
    os << "variant=" << variant_name << " logic=" << logic << " goal=" << goal
       << " bounds=" << bounds.max_worlds << "w" << bounds.max_entities << "e"
       << " strategy=" << strategy_name(bounds.strategy) << " seed=" << bounds.seed << "\n";
    os << "verdict: " << verdict_line(verdict) << "\n";
    const SearchStats& st = verdict.stats;
    os << "  space=" << st.space_size << (st.space_overflow ? "+ (overflow)" : "")
       << " checked=" << st.models_checked << " axiomModels=" << st.axiom_models
       << " instances=" << st.instances_checked;
    if (!st.a3_mode.empty()) os << " a3=" << st.a3_mode;
    os << "\n";
    if (verdict.model) os << "countermodel/witness:\n" << model_to_json(*verdict.model);
    emit(os.str(), out_path);
  }

  if (!expect.empty()) {
    ExpectedRow row;
    row.expect = expect;
    return row_matches(row, verdict) ? 0 : 1;
  }
  if (verdict.tag == Verdict::Tag::UnknownSampled && verdict.stats.budget_exhausted)
    return 3;
  return 0;
}

int cmd_suite(const std::string& variant_filter, const std::string& table_path,
              const SuiteOptions& opts, const std::string& format,
              const std::string& out_path) {
  std::vector<ExpectedRow> rows = load_expected_rows(table_path);
  if (variant_filter != "all") {
    std::vector<ExpectedRow> filtered;
    for (auto& r : rows)
      if (r.variant == variant_filter) filtered.push_back(r);
    rows = std::move(filtered);
  }
  if (rows.empty()) throw Error("no suite rows selected");
  std::vector<RowResult> results = run_suite(rows, opts);

  bool all_ok = true;
  bool any_budget = false;
  for (const auto& r : results) {
    all_ok = all_ok && r.matched;
    any_budget = any_budget || r.verdict.stats.budget_exhausted;
  }

  if (format == "json") {
    emit(suite_report_json(results, opts), out_path);
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      os << (r.matched ? "[ OK ] " : "[FAIL] ") << r.row.variant << " " << r.row.logic
         << " " << r.row.goal << " (" << r.row.worlds << "w" << r.row.entities << "e, "
         << r.row.strategy << ") expect=" << r.row.expect << " observed=" << r.observed
         << qualifiers(r.verdict.stats) << "\n";
    }
    os << (all_ok ? "suite: all rows match\n" : "suite: MISMATCH\n");
    emit(os.str(), out_path);
  }
  if (!all_ok) return 1;
  if (any_budget) return 3;
  return 0;
}

int cmd_eval(const std::string& model_path, const std::string& formula,
             const std::string& format, const std::string& out_path) {
  Model m = load_model(model_path);
  TermPtr t = parse_term(formula);
  Signature sig = m.symbol_types();
  Type ty = typecheck(t, sig);
  if (!(ty == Type::sigma()))
    throw TypeError("eval expects an s-typed formula, got " + ty.str());
  Universe u(m.entity_count, m.frame.world_count);
  std::vector<bool> table = world_table(t, m, u);
  bool valid = true;
  for (bool b : table) valid = valid && b;

  std::ostringstream os;
  if (format == "json") {
    os << "{\n  \"perWorld\": [";
    for (size_t i = 0; i < table.size(); ++i)
      os << (i ? ", " : "") << (table[i] ? "true" : "false");
    os << "],\n  \"globallyValid\": " << (valid ? "true" : "false") << "\n}\n";
  } else {
    for (size_t w = 0; w < table.size(); ++w)
      os << "w" << w << ": " << (table[w] ? "true" : "false") << "\n";
    os << "globally valid: " << (valid ? "yes" : "no") << "\n";
  }
  emit(os.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model workbench for intensional higher-order modal logic"};
  app.require_subcommand(1);

  std::string variant = "scott", logic = "KB", goal = "T6";
  std::string strategy = "auto", format = "text", expect, out_path;
  int max_worlds = 2, max_entities = 1, workers = 1;
  uint64_t seed = 0, budget = 0, samples = 100000;
  bool deterministic = false;

  CLI::App* check = app.add_subcommand("check", "check one goal against a variant");
  check->add_option("--variant", variant, "scott | anderson | fitting");
  check->add_option("--logic", logic, "K | KB | S5");
  check->add_option("--goal", goal, "goal name, or 'consistency'");
  check->add_option("--max-worlds", max_worlds);
  check->add_option("--max-entities", max_entities);
  check->add_option("--strategy", strategy, "exhaustive | randomized | auto");
  check->add_option("--seed", seed);
  check->add_option("--budget", budget, "candidate budget (default 1e8 or IHOML_BUDGET)");
  check->add_option("--samples", samples, "schema instance samples");
  check->add_option("--workers", workers);
  check->add_option("--format", format, "text | json");
  check->add_option("--expect", expect,
                    "valid | countermodel | witness | no-violation-sampled | no-model");
  check->add_flag("--deterministic", deterministic, "omit wall-clock fields");
  check->add_option("--out", out_path, "write the report to a file");

  std::string suite_variant = "all";
  std::string table_path = std::string(IHOML_DATA_DIR) + "/paper_verdicts.json";
  CLI::App* suite = app.add_subcommand("suite", "run the reproduction table");
  suite->add_option("--variant", suite_variant, "all | scott | anderson | fitting");
  suite->add_option("--paper-table", table_path, "expected-verdict table (JSON)");
  suite->add_option("--seed", seed);
  suite->add_option("--workers", workers);
  suite->add_option("--samples", samples, "schema instance samples");
  suite->add_option("--format", format, "text | json");
  suite->add_flag("--deterministic", deterministic);
  suite->add_option("--out", out_path);

  std::string model_path, formula;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a formula on a model file");
  eval_cmd->add_option("--model", model_path)->required();
  eval_cmd->add_option("--formula", formula)->required();
  eval_cmd->add_option("--format", format, "text | json");
  eval_cmd->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      Bounds b;
      b.max_worlds = max_worlds;
      b.max_entities = max_entities;
      b.strategy = strategy_from_name(strategy);
      b.seed = seed;
      b.budget.max_candidates = budget ? budget : env_budget(100000000);
      return cmd_check(variant, logic, goal, b, workers, samples, format, expect,
                       deterministic, out_path);
    }
    if (suite->parsed()) {
      SuiteOptions opts;
      opts.seed = seed;
      opts.workers = workers;
      opts.deterministic = deterministic;
      opts.default_budget = env_budget(100000000);
      opts.schema_samples = samples;
      return cmd_suite(suite_variant, table_path, opts, format, out_path);
    }
    if (eval_cmd->parsed()) return cmd_eval(model_path, formula, format, out_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << " (line " << e.span.line << ", column "
              << e.span.column << ")\n";
    return 2;
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
