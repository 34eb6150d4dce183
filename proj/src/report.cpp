#include "ihoml/report.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

#include "ihoml/errors.hpp"
#include "ihoml/eval.hpp"
#include "ihoml/model_io.hpp"
#include "ihoml/parser.hpp"

namespace ihoml {

using json = nlohmann::ordered_json;

namespace {

json value_json(const Value& v) {
  json j;
  j["type"] = v.type().str();
  std::function<json(const Value&)> enc = [&](const Value& x) -> json {
    switch (x.kind()) {
      case Value::Kind::Truth: return x.as_truth();
      case Value::Kind::Entity:
      case Value::Kind::World: return x.index();
      case Value::Kind::Table: {
        json arr = json::array();
        for (const Value& e : x.entries()) arr.push_back(enc(e));
        return arr;
      }
    }
    return nullptr;
  };
  j["table"] = enc(v);
  return j;
}

json stats_json(const SearchStats& s, bool deterministic) {
  json j;
  j["spaceSize"] = s.space_size;
  j["spaceOverflow"] = s.space_overflow;
  j["modelsChecked"] = s.models_checked;
  j["axiomModels"] = s.axiom_models;
  j["instancesChecked"] = s.instances_checked;
  j["skippedFrames"] = s.skipped_frames;
  j["sampledModels"] = s.sampled_models;
  j["sampledInstances"] = s.sampled_instances;
  j["prunedHunt"] = s.pruned_hunt;
  j["budgetExhausted"] = s.budget_exhausted;
  j["a3Mode"] = s.a3_mode;
  if (!deterministic) j["elapsedMs"] = s.elapsed_ms;
  return j;
}

json verdict_obj(const Verdict& v, bool deterministic) {
  json j;
  j["verdict"] = verdict_name(v.tag);
  if (v.model) {
    j["model"] = json::parse(model_to_json(*v.model));
    j["modelWorlds"] = v.model->frame.world_count;
    j["modelEntities"] = v.model->entity_count;
  }
  if (v.instance) {
    json inst;
    inst["goal"] = v.instance->goal;
    if (v.instance->param) inst["param"] = value_json(*v.instance->param);
    j["instance"] = std::move(inst);
  }
  j["stats"] = stats_json(v.stats, deterministic);
  return j;
}

}  // namespace

std::vector<ExpectedRow> load_expected_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read expected-verdict table " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(std::string("expected-verdict table is not valid JSON: ") + e.what());
  }
  std::vector<ExpectedRow> rows;
  for (const auto& r : j.at("rows")) {
    ExpectedRow row;
    row.variant = r.at("variant").get<std::string>();
    row.logic = r.at("logic").get<std::string>();
    row.goal = r.at("goal").get<std::string>();
    row.worlds = r.at("worlds").get<int>();
    row.entities = r.at("entities").get<int>();
    if (r.contains("strategy")) row.strategy = r.at("strategy").get<std::string>();
    row.expect = r.at("expect").get<std::string>();
    if (r.contains("counterWorlds")) row.counter_worlds = r.at("counterWorlds").get<int>();
    if (r.contains("counterEntities"))
      row.counter_entities = r.at("counterEntities").get<int>();
    if (r.contains("budget")) row.budget = r.at("budget").get<uint64_t>();
    rows.push_back(std::move(row));
  }
  return rows;
}

bool row_matches(const ExpectedRow& row, const Verdict& v) {
  if (row.expect == "valid") return v.tag == Verdict::Tag::ValidWithinBounds;
  if (row.expect == "witness") return v.tag == Verdict::Tag::ConsistencyWitness;
  if (row.expect == "no-model") return v.tag == Verdict::Tag::NoModelWithinBounds;
  if (row.expect == "no-violation-sampled") return v.tag == Verdict::Tag::UnknownSampled;
  if (row.expect == "countermodel") {
    if (v.tag != Verdict::Tag::Countermodel || !v.model) return false;
    if (row.counter_worlds && v.model->frame.world_count != row.counter_worlds) return false;
    if (row.counter_entities && v.model->entity_count != row.counter_entities) return false;
    return true;
  }
  throw Error("unknown expectation '" + row.expect + "'");
}

namespace {

std::string observed_string(const Verdict& v) {
  std::string s = verdict_name(v.tag);
  if (v.model)
    s += " (" + std::to_string(v.model->frame.world_count) + " worlds, " +
         std::to_string(v.model->entity_count) + " entities)";
  return s;
}

Bounds bounds_for(const ExpectedRow& row, const SuiteOptions& opts) {
  Bounds b;
  b.max_worlds = row.worlds;
  b.max_entities = row.entities;
  b.strategy = strategy_from_name(row.strategy);
  b.seed = opts.seed;
  b.budget.max_candidates = row.budget ? row.budget : opts.default_budget;
  return b;
}

// Rows that a single shared exhaustive scan can answer: auto/exhaustive
// strategy, space within budget, goal closed or enumerable schema (or the
// consistency pseudo-goal).
bool shareable(const VariantSpec& v, const ExpectedRow& row, const Bounds& b,
               FrameClass cls) {
  if (b.strategy == Strategy::Randomized) return false;
  bool ovf = false;
  uint64_t space = model_space_size(v.signature, b, cls, &ovf);
  if (ovf || space > b.budget.max_candidates) return false;
  if (row.goal == "consistency") return true;
  auto it = v.goals.find(row.goal);
  if (it == v.goals.end()) throw Error("unknown goal " + row.goal);
  if (!it->second.is_schema()) return true;
  Universe u(b.max_entities, b.max_worlds, b.carrier_cap);
  try {
    return u.carrier_size(it->second.schema->param) <= b.carrier_cap;
  } catch (const CarrierTooLarge&) {
    return false;
  }
}

struct PendingGoal {
  size_t row_index;
  const Goal* goal;  // null = consistency
  bool done = false;
  Verdict verdict;
};

// One exhaustive pass answering several goals at once; per-goal results are
// identical to individual check_entailment runs because models are visited
// in the same canonical order.
void shared_scan(const VariantSpec& v, FrameClass cls, const Bounds& b,
                 std::vector<PendingGoal>& pending, const SuiteOptions& opts) {
  SearchStats base;
  base.space_size = model_space_size(v.signature, b, cls, &base.space_overflow);

  uint64_t scanned = 0;
  for (int w = 1; w <= b.max_worlds; ++w) {
    for (int e = 1; e <= b.max_entities; ++e) {
      std::string mode;
      auto axioms = v.check_axioms(e, w, b.carrier_cap, &mode);
      ModelEnumerator en(v.signature, w, e, cls, b.carrier_cap);
      Universe u(e, w, b.carrier_cap);
      for (uint64_t i = 0; i < en.total(); ++i) {
        Model m = en.at(i);
        ++scanned;
        bool ok = true;
        for (const auto& [name, t] : axioms)
          if (!globally_valid(t, m, u)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (auto& p : pending) {
          if (p.done) continue;
          if (!p.goal) {
            // consistency: first axiom model is the witness
            reverify_model(axioms, m, nullptr, b.carrier_cap);
            p.verdict.tag = Verdict::Tag::ConsistencyWitness;
            p.verdict.model = m;
            p.verdict.stats = base;
            p.verdict.stats.models_checked = scanned;
            p.done = true;
            continue;
          }
          const Goal& goal = *p.goal;
          if (!goal.is_schema()) {
            if (!globally_valid(goal.closed, m, u)) {
              reverify_model(axioms, m, goal.closed, b.carrier_cap);
              p.verdict.tag = Verdict::Tag::Countermodel;
              p.verdict.model = m;
              p.verdict.instance = FailingInstance{goal.name, std::nullopt};
              p.verdict.stats = base;
              p.verdict.stats.models_checked = scanned;
              p.done = true;
            }
            continue;
          }
          SchemaPolicy pol{b.carrier_cap, opts.schema_samples, b.seed};
          SchemaOutcome so = check_schema(*goal.schema, m, u, pol);
          if (!so.holds) {
            TermPtr inst = goal.schema->instance(*so.failing);
            reverify_model(axioms, m, inst, b.carrier_cap);
            p.verdict.tag = Verdict::Tag::Countermodel;
            p.verdict.model = m;
            p.verdict.instance = FailingInstance{goal.name, so.failing};
            p.verdict.stats = base;
            p.verdict.stats.models_checked = scanned;
            p.done = true;
          }
        }
        bool all_done = true;
        for (const auto& p : pending) all_done = all_done && p.done;
        if (all_done) return;
      }
    }
  }
  for (auto& p : pending) {
    if (p.done) continue;
    p.verdict.tag = p.goal ? Verdict::Tag::ValidWithinBounds
                           : Verdict::Tag::NoModelWithinBounds;
    p.verdict.stats = base;
    p.verdict.stats.models_checked = scanned;
    p.done = true;
  }
}

}  // namespace

std::vector<RowResult> run_suite(const std::vector<ExpectedRow>& rows,
                                 const SuiteOptions& opts) {
  std::vector<RowResult> results(rows.size());
  std::map<std::string, VariantSpec> variants;
  for (const auto& row : rows)
    if (!variants.count(row.variant)) variants.emplace(row.variant, build_variant(row.variant));

  // group shareable rows by (variant, logic, bounds, budget)
  std::map<std::string, std::vector<size_t>> groups;
  std::vector<size_t> individual;
  for (size_t i = 0; i < rows.size(); ++i) {
    const ExpectedRow& row = rows[i];
    const VariantSpec& v = variants.at(row.variant);
    Bounds b = bounds_for(row, opts);
    FrameClass cls = frame_class_from_name(row.logic);
    if (shareable(v, row, b, cls)) {
      std::ostringstream key;
      key << row.variant << "/" << row.logic << "/" << row.worlds << "x" << row.entities
          << "/" << b.budget.max_candidates;
      groups[key.str()].push_back(i);
    } else {
      individual.push_back(i);
    }
  }

  for (const auto& [key, indices] : groups) {
    const ExpectedRow& first = rows[indices.front()];
    const VariantSpec& v = variants.at(first.variant);
    Bounds b = bounds_for(first, opts);
    FrameClass cls = frame_class_from_name(first.logic);
    std::vector<PendingGoal> pending;
    for (size_t i : indices) {
      PendingGoal p;
      p.row_index = i;
      p.goal = rows[i].goal == "consistency" ? nullptr : &v.goals.at(rows[i].goal);
      pending.push_back(std::move(p));
    }
    shared_scan(v, cls, b, pending, opts);
    for (const auto& p : pending) {
      results[p.row_index].row = rows[p.row_index];
      results[p.row_index].verdict = p.verdict;
    }
  }

  for (size_t i : individual) {
    const ExpectedRow& row = rows[i];
    const VariantSpec& v = variants.at(row.variant);
    Bounds b = bounds_for(row, opts);
    FrameClass cls = frame_class_from_name(row.logic);
    SearchOptions so;
    so.workers = opts.workers;
    so.schema_samples = opts.schema_samples;
    results[i].row = row;
    if (row.goal == "consistency")
      results[i].verdict = find_model(v, b, cls, {}, so);
    else
      results[i].verdict = check_entailment(v, row.goal, b, cls, so);
  }

  for (size_t i = 0; i < rows.size(); ++i) {
    results[i].matched = row_matches(rows[i], results[i].verdict);
    results[i].observed = observed_string(results[i].verdict);
  }
  return results;
}

std::string verdict_json(const Verdict& v, bool deterministic) {
  return verdict_obj(v, deterministic).dump(2);
}

std::string suite_report_json(const std::vector<RowResult>& results,
                              const SuiteOptions& opts) {
  json j;
  j["tool"] = "ihoml";
  j["mode"] = "suite";
  j["seed"] = opts.seed;
  j["deterministic"] = opts.deterministic;
  json rows = json::array();
  for (const auto& r : results) {
    json row;
    row["variant"] = r.row.variant;
    row["logic"] = r.row.logic;
    row["goal"] = r.row.goal;
    row["maxWorlds"] = r.row.worlds;
    row["maxEntities"] = r.row.entities;
    row["strategy"] = r.row.strategy;
    row["expect"] = r.row.expect;
    row["observed"] = r.observed;
    row["matched"] = r.matched;
    row["result"] = verdict_obj(r.verdict, opts.deterministic);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string check_report_json(const std::string& variant, const std::string& logic,
                              const Bounds& b, const std::string& goal,
                              const Verdict& v, bool deterministic) {
  json j;
  j["tool"] = "ihoml";
  j["mode"] = "check";
  j["variant"] = variant;
  j["logic"] = logic;
  j["goal"] = goal;
  j["maxWorlds"] = b.max_worlds;
  j["maxEntities"] = b.max_entities;
  j["strategy"] = strategy_name(b.strategy);
  j["seed"] = b.seed;
  j["budget"] = b.budget.max_candidates;
  j["carrierCap"] = b.carrier_cap;
  j["result"] = verdict_obj(v, deterministic);
  return j.dump(2) + "\n";
}

int reverify_report(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(std::string("report is not valid JSON: ") + e.what());
  }
  int verified = 0;
  if (!j.contains("rows")) return 0;
  std::map<std::string, VariantSpec> variants;
  for (const auto& row : j.at("rows")) {
    const auto& result = row.at("result");
    if (!result.contains("model")) continue;
    const std::string variant = row.at("variant").get<std::string>();
    if (!variants.count(variant)) variants.emplace(variant, build_variant(variant));
    const VariantSpec& v = variants.at(variant);
    Model m = model_from_json(result.at("model").dump());
    auto axioms = v.check_axioms(m.entity_count, m.frame.world_count, kDefaultCarrierCap);
    TermPtr falsified;
    const std::string verdict = result.at("verdict").get<std::string>();
    if (verdict == "countermodel") {
      const std::string goal_name = row.at("goal").get<std::string>();
      const Goal& goal = v.goals.at(goal_name);
      std::optional<Value> param;
      if (result.contains("instance") && result.at("instance").contains("param")) {
        const auto& pj = result.at("instance").at("param");
        Type ty = parse_type(pj.at("type").get<std::string>());
        Model probe = m;  // sizes only
        Universe u(probe.entity_count, probe.frame.world_count);
        std::function<Value(const Type&, const json&)> dec = [&](const Type& t,
                                                                 const json& x) -> Value {
          switch (t.tag()) {
            case Type::Tag::Tru: return Value::truth(x.get<bool>());
            case Type::Tag::Ent: return Value::entity(x.get<int32_t>());
            case Type::Tag::Wld: return Value::world(x.get<int32_t>());
            case Type::Tag::Fun: break;
          }
          std::vector<Value> entries;
          for (const auto& e : x) entries.push_back(dec(t.cod(), e));
          return Value::table(t, std::move(entries));
        };
        param = dec(ty, pj.at("table"));
      }
      falsified = goal.instance_term(param);
    }
    reverify_model(axioms, m, falsified, kDefaultCarrierCap);
    ++verified;
  }
  return verified;
}

}  // namespace ihoml
