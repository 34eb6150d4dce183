#pragma once

#include <string>
#include <vector>

#include "ihoml/search.hpp"

namespace ihoml {

// One row of the expected-verdict table (shipped as data so the
// reproduction suite is auditable).
struct ExpectedRow {
  std::string variant;
  std::string logic;
  std::string goal;  // goal name or "consistency"
  int worlds = 2;
  int entities = 2;
  std::string strategy = "auto";
  std::string expect;        // valid | countermodel | witness | no-violation-sampled
  int counter_worlds = 0;    // 0 = unconstrained
  int counter_entities = 0;
  uint64_t budget = 0;       // 0 = default
};

std::vector<ExpectedRow> load_expected_rows(const std::string& path);

struct SuiteOptions {
  uint64_t seed = 0;
  int workers = 1;
  bool deterministic = false;  // omit wall-clock fields from reports
  uint64_t default_budget = 100000000;
  uint64_t schema_samples = 100000;
};

struct RowResult {
  ExpectedRow row;
  Verdict verdict;
  bool matched = false;
  std::string observed;
};

// Runs the reproduction rows. Rows that resolve to a full exhaustive scan
// share one model enumeration per (variant, logic, bounds) group; sampled
// rows run through check_entailment individually. Verdicts are identical
// to per-goal check_entailment runs.
std::vector<RowResult> run_suite(const std::vector<ExpectedRow>& rows,
                                 const SuiteOptions& opts);

bool row_matches(const ExpectedRow& row, const Verdict& v);

// JSON rendering with stable key order; byte-identical across reruns with
// equal seeds when deterministic is set.
std::string verdict_json(const Verdict& v, bool deterministic);
std::string suite_report_json(const std::vector<RowResult>& results,
                              const SuiteOptions& opts);
std::string check_report_json(const std::string& variant, const std::string& logic,
                              const Bounds& b, const std::string& goal,
                              const Verdict& v, bool deterministic);

// Loads a suite report and re-verifies every embedded countermodel and
// witness against its variant's axioms; returns the number re-verified.
int reverify_report(const std::string& json_text);

}  // namespace ihoml
