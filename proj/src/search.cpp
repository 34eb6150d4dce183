#include "ihoml/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "ihoml/errors.hpp"
#include "ihoml/eval.hpp"
#include "ihoml/oracle.hpp"

namespace ihoml {

namespace {

using Clock = std::chrono::steady_clock;

uint64_t sat_mul(uint64_t a, uint64_t b, bool* overflow) {
  if (a != 0 && b > UINT64_MAX / a) {
    if (overflow) *overflow = true;
    return UINT64_MAX;
  }
  return a * b;
}

uint64_t sat_add(uint64_t a, uint64_t b, bool* overflow) {
  if (UINT64_MAX - a < b) {
    if (overflow) *overflow = true;
    return UINT64_MAX;
  }
  return a + b;
}

std::vector<std::pair<int, int>> sizes_ascending(const Bounds& b) {
  std::vector<std::pair<int, int>> out;  // (worlds, entities), lexicographic
  for (int w = 1; w <= b.max_worlds; ++w)
    for (int e = 1; e <= b.max_entities; ++e) out.emplace_back(w, e);
  return out;
}

}  // namespace

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Exhaustive: return "exhaustive";
    case Strategy::Randomized: return "randomized";
    case Strategy::Auto: return "auto";
  }
  return "?";
}

Strategy strategy_from_name(const std::string& s) {
  if (s == "exhaustive") return Strategy::Exhaustive;
  if (s == "randomized") return Strategy::Randomized;
  if (s == "auto") return Strategy::Auto;
  throw Error("unknown strategy: " + s);
}

const char* verdict_name(Verdict::Tag t) {
  switch (t) {
    case Verdict::Tag::ValidWithinBounds: return "valid-within-bounds";
    case Verdict::Tag::Countermodel: return "countermodel";
    case Verdict::Tag::ConsistencyWitness: return "consistency-witness";
    case Verdict::Tag::NoModelWithinBounds: return "no-model-within-bounds";
    case Verdict::Tag::UnknownSampled: return "unknown-sampled";
  }
  return "?";
}

// --- model enumeration ------------------------------------------------------

ModelEnumerator::ModelEnumerator(const Signature& sig, int worlds, int entities,
                                 FrameClass cls, uint64_t cap)
    : sig_(sig), worlds_(worlds), entities_(entities) {
  frames_ = frames_in_class(worlds, cls);
  Universe u(entities, worlds, cap);
  exists_count_ = u.carrier_size(Type::gamma());
  for (const auto& [name, ty] : sig_) {  // std::map: ascending name order
    syms_.emplace_back(name, ty);
    sym_counts_.push_back(u.carrier_size(ty));
  }
  per_frame_ = exists_count_;
  for (uint64_t c : sym_counts_) per_frame_ = sat_mul(per_frame_, c, &overflow_);
  total_ = sat_mul(per_frame_, frames_.size(), &overflow_);
}

Model ModelEnumerator::at(uint64_t index) const {
  Universe u(entities_, worlds_);
  const Frame& frame = frames_[size_t(index / per_frame_)];
  uint64_t rem = index % per_frame_;
  uint64_t interp_space = per_frame_ / exists_count_;
  uint64_t exists_rank = rem / interp_space;
  uint64_t sym_rank = rem % interp_space;
  Model m;
  m.frame = frame;
  m.entity_count = entities_;
  m.exists_at = u.value_at(Type::gamma(), exists_rank);
  // last symbol varies fastest
  for (size_t i = syms_.size(); i-- > 0;) {
    uint64_t c = sym_counts_[i];
    m.interp[syms_[i].first] = u.value_at(syms_[i].second, sym_rank % c);
    sym_rank /= c;
  }
  return m;
}

std::optional<Model> ModelEnumerator::next() {
  if (cursor_ >= total_) return std::nullopt;
  return at(cursor_++);
}

uint64_t model_space_size(const Signature& sig, const Bounds& b, FrameClass cls,
                          bool* overflow) {
  bool ovf = false;
  uint64_t total = 0;
  for (auto [w, e] : sizes_ascending(b)) {
    ModelEnumerator en(sig, w, e, cls, b.carrier_cap);
    if (en.overflow()) ovf = true;
    total = sat_add(total, en.total(), &ovf);
  }
  if (overflow) *overflow = ovf;
  return total;
}

// --- schema checking --------------------------------------------------------

namespace {

Value random_value(const Type& ty, Universe& u, std::mt19937_64& rng) {
  uint64_t n = 0;
  bool small = true;
  try {
    n = u.carrier_size(ty);
    small = n <= (uint64_t(1) << 16);
  } catch (const CarrierTooLarge&) {
    small = false;
  }
  if (small) return u.value_at(ty, rng() % n);
  std::vector<Value> entries;
  const uint64_t dn = u.carrier_size(ty.dom());
  entries.reserve(size_t(dn));
  for (uint64_t i = 0; i < dn; ++i) entries.push_back(random_value(ty.cod(), u, rng));
  return Value::table(ty, std::move(entries));
}

}  // namespace

SchemaOutcome check_schema(const Schema& schema, const Model& m, Universe& u,
                           const SchemaPolicy& policy) {
  SchemaOutcome out;
  uint64_t n = 0;
  bool enumerable = true;
  try {
    n = u.carrier_size(schema.param);
    enumerable = n <= policy.carrier_cap;
  } catch (const CarrierTooLarge&) {
    enumerable = false;
  }
  if (enumerable) {
    for (uint64_t i = 0; i < n; ++i) {
      Value v = u.value_at(schema.param, i);
      ++out.instances_checked;
      if (!globally_valid(schema.instance(v), m, u)) {
        out.holds = false;
        out.failing = std::move(v);
        return out;
      }
    }
    return out;
  }
  out.sampled = true;
  std::mt19937_64 rng(policy.seed);
  for (uint64_t i = 0; i < policy.samples; ++i) {
    Value v = random_value(schema.param, u, rng);
    ++out.instances_checked;
    if (!globally_valid(schema.instance(v), m, u)) {
      out.holds = false;
      out.failing = std::move(v);
      return out;
    }
  }
  return out;
}

// --- shared scan machinery --------------------------------------------------

namespace {

struct AxiomSet {
  std::vector<std::pair<std::string, TermPtr>> axioms;

  bool all_valid(const Model& m, Universe& u) const {
    for (const auto& [name, t] : axioms)
      if (!globally_valid(t, m, u)) return false;
    return true;
  }
};

// Outcome of checking one goal on one axiom-model.
struct GoalHit {
  bool violated = false;
  std::optional<Value> param;
};

// Checks a goal on a model known to satisfy the axioms. For schemas with an
// enumerable parameter carrier all instances run; oversized carriers are
// handled by the caller (deferred sampling).
GoalHit check_goal_enumerable(const Goal& goal, const Model& m, Universe& u,
                              uint64_t cap, uint64_t* instances) {
  GoalHit hit;
  if (!goal.is_schema()) {
    ++*instances;
    if (!globally_valid(goal.closed, m, u)) hit.violated = true;
    return hit;
  }
  const Schema& s = *goal.schema;
  const uint64_t n = u.carrier_size(s.param);
  (void)cap;
  for (uint64_t i = 0; i < n; ++i) {
    Value v = u.value_at(s.param, i);
    ++*instances;
    if (!globally_valid(s.instance(v), m, u)) {
      hit.violated = true;
      hit.param = std::move(v);
      return hit;
    }
  }
  return hit;
}

bool schema_param_enumerable(const Goal& goal, Universe& u, uint64_t cap) {
  if (!goal.is_schema()) return true;
  try {
    return u.carrier_size(goal.schema->param) <= cap;
  } catch (const CarrierTooLarge&) {
    return false;
  }
}

}  // namespace

void reverify_model(const std::vector<std::pair<std::string, TermPtr>>& axioms,
                    const Model& m, const TermPtr& falsified, uint64_t cap) {
  Universe u(m.entity_count, m.frame.world_count, cap);
  for (const auto& [name, t] : axioms) {
    if (!globally_valid(t, m, u))
      throw Error("internal: reported model fails axiom " + name + " on re-evaluation");
    Value direct = eval(t, m, u);
    Value oracle = oracle_eval(t, m, u);
    if (direct != oracle)
      throw Error("internal: evaluator disagreement on axiom " + name);
  }
  if (falsified) {
    if (globally_valid(falsified, m, u))
      throw Error("internal: reported countermodel satisfies the goal");
    if (eval(falsified, m, u) != oracle_eval(falsified, m, u))
      throw Error("internal: evaluator disagreement on the goal");
  }
}

namespace {

void verify_reported(const VariantSpec& v, const AxiomSet& axioms, const Model& m,
                     const TermPtr& falsified, uint64_t cap) {
  (void)v;
  reverify_model(axioms.axioms, m, falsified, cap);
}

TermPtr goal_term_for(const Goal& goal, const std::optional<Value>& param) {
  if (!goal.is_schema()) return goal.closed;
  return goal.schema->instance(*param);
}

struct ScanResult {
  bool found = false;
  uint64_t index = 0;
  std::optional<Value> param;
  std::vector<uint64_t> axiom_indices;  // collected when deferring sampling
  uint64_t axiom_models = 0;
  uint64_t instances = 0;
};

// Exhaustive scan of one size. goal == nullptr searches for an axiom model
// (consistency); defer_sampling collects axiom models for a later sampled
// instance pass instead of checking the goal inline.
ScanResult exhaustive_scan(const ModelEnumerator& en, const AxiomSet& axioms,
                           const Goal* goal, bool defer_sampling, uint64_t cap,
                           int workers, bool collect_axiom_models) {
  const uint64_t total = en.total();
  ScanResult result;
  if (total == 0) return result;

  auto scan_range = [&](uint64_t lo, uint64_t hi, std::atomic<uint64_t>& best,
                        ScanResult& local) {
    Universe u(en.at(lo).entity_count, en.at(lo).frame.world_count, cap);
    for (uint64_t i = lo; i < hi; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) return;
      Model m = en.at(i);
      if (!axioms.all_valid(m, u)) continue;
      ++local.axiom_models;
      if (collect_axiom_models) local.axiom_indices.push_back(i);
      if (!goal || defer_sampling) {
        if (!goal) {
          // first axiom model wins
          uint64_t prev = best.load();
          while (i < prev && !best.compare_exchange_weak(prev, i)) {}
          local.found = true;
          local.index = i;
          return;
        }
        continue;
      }
      GoalHit hit = check_goal_enumerable(*goal, m, u, cap, &local.instances);
      if (hit.violated) {
        uint64_t prev = best.load();
        while (i < prev && !best.compare_exchange_weak(prev, i)) {}
        if (!local.found || i < local.index) {
          local.found = true;
          local.index = i;
          local.param = std::move(hit.param);
        }
        return;
      }
    }
  };

  std::atomic<uint64_t> best{UINT64_MAX};
  const int k = std::max(1, workers);
  if (k == 1 || total < 4096) {
    scan_range(0, total, best, result);
    return result;
  }
  std::vector<ScanResult> locals(static_cast<size_t>(k));
  std::vector<std::thread> threads;
  for (int t = 0; t < k; ++t) {
    uint64_t lo = total * uint64_t(t) / uint64_t(k);
    uint64_t hi = total * uint64_t(t + 1) / uint64_t(k);
    threads.emplace_back(scan_range, lo, hi, std::ref(best), std::ref(locals[size_t(t)]));
  }
  for (auto& th : threads) th.join();
  for (auto& l : locals) {
    result.axiom_models += l.axiom_models;
    result.instances += l.instances;
    for (uint64_t i : l.axiom_indices) result.axiom_indices.push_back(i);
    if (l.found && (!result.found || l.index < result.index)) {
      result.found = true;
      result.index = l.index;
      result.param = l.param;
    }
  }
  std::sort(result.axiom_indices.begin(), result.axiom_indices.end());
  return result;
}

// --- pruned countermodel hunt ----------------------------------------------

std::vector<int> frame_components(const Frame& f) {
  std::vector<int> comp(size_t(f.world_count), -1);
  int next = 0;
  for (int s = 0; s < f.world_count; ++s) {
    if (comp[size_t(s)] >= 0) continue;
    comp[size_t(s)] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (auto [i, j] : f.accessibility) {
        int other = -1;
        if (i == w) other = j;
        else if (j == w) other = i;
        if (other >= 0 && comp[size_t(other)] < 0) {
          comp[size_t(other)] = next;
          stack.push_back(other);
        }
      }
    }
    ++next;
  }
  return comp;
}

// Sigma values constant on every component, ascending by canonical rank.
std::vector<Value> component_constant_sigmas(const Frame& f, Universe& u) {
  std::vector<int> comp = frame_components(f);
  std::vector<Value> out;
  for (const Value& s : u.carrier(Type::sigma())) {
    bool ok = true;
    for (int w1 = 0; w1 < f.world_count && ok; ++w1)
      for (int w2 = w1 + 1; w2 < f.world_count && ok; ++w2)
        if (comp[size_t(w1)] == comp[size_t(w2)] &&
            s.at(size_t(w1)).as_truth() != s.at(size_t(w2)).as_truth())
          ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

struct HuntResult {
  bool found = false;
  Model model;
  std::optional<Value> param;
  uint64_t checked = 0;
  uint64_t skipped_frames = 0;
  uint64_t axiom_models = 0;
  uint64_t instances = 0;
};

// Deterministic countermodel hunt over interpretations whose sigma results
// are constant along r-connected components (mirrors what an A4-style
// rigidity axiom forces on connected worlds). Sound only for finding
// countermodels: a completed hunt proves nothing.
HuntResult pruned_hunt(const VariantSpec& v, const AxiomSet& axioms, const Goal& goal,
                       int worlds, int entities, FrameClass cls, uint64_t cap,
                       uint64_t budget, Clock::time_point deadline, uint64_t samples,
                       uint64_t seed) {
  HuntResult hr;
  Universe u(entities, worlds, cap);
  const uint64_t exists_count = u.carrier_size(Type::gamma());
  std::vector<std::pair<std::string, Type>> syms(v.signature.begin(), v.signature.end());

  for (const Frame& frame : frames_in_class(worlds, cls)) {
    std::vector<Value> sigmas = component_constant_sigmas(frame, u);
    // per-symbol pruned table counts; symbols must be families over sigma
    bool prunable = true;
    uint64_t interp_count = 1;
    bool ovf = false;
    std::vector<uint64_t> dom_sizes;
    for (const auto& [name, ty] : syms) {
      if (!(ty.is_fun() && ty.cod() == Type::sigma())) {
        prunable = false;
        break;
      }
      uint64_t dn = u.carrier_size(ty.dom());
      dom_sizes.push_back(dn);
      for (uint64_t i = 0; i < dn; ++i)
        interp_count = sat_mul(interp_count, sigmas.size(), &ovf);
    }
    if (!prunable) continue;
    uint64_t frame_total = sat_mul(interp_count, exists_count, &ovf);
    if (ovf || frame_total > budget - std::min(budget, hr.checked)) {
      ++hr.skipped_frames;
      continue;
    }

    for (uint64_t er = 0; er < exists_count; ++er) {
      Value exists_at = u.value_at(Type::gamma(), er);
      for (uint64_t pi = 0; pi < interp_count; ++pi) {
        if ((hr.checked & 1023) == 0 && Clock::now() > deadline) return hr;
        ++hr.checked;
        // decode pruned index into tables, last symbol fastest
        uint64_t rem = pi;
        Model m;
        m.frame = frame;
        m.entity_count = entities;
        m.exists_at = exists_at;
        for (size_t s = syms.size(); s-- > 0;) {
          uint64_t dn = dom_sizes[s];
          std::vector<Value> entries(static_cast<size_t>(dn));
          for (uint64_t d = dn; d-- > 0;) {
            entries[size_t(d)] = sigmas[size_t(rem % sigmas.size())];
            rem /= sigmas.size();
          }
          m.interp[syms[s].first] = Value::table(syms[s].second, std::move(entries));
        }
        if (!axioms.all_valid(m, u)) continue;
        ++hr.axiom_models;
        if (schema_param_enumerable(goal, u, cap)) {
          GoalHit hit = check_goal_enumerable(goal, m, u, cap, &hr.instances);
          if (hit.violated) {
            hr.found = true;
            hr.model = std::move(m);
            hr.param = std::move(hit.param);
            return hr;
          }
        } else {
          SchemaPolicy pol{cap, std::min<uint64_t>(samples, 1024),
                           seed + hr.axiom_models};
          SchemaOutcome so = check_schema(*goal.schema, m, u, pol);
          hr.instances += so.instances_checked;
          if (!so.holds) {
            hr.found = true;
            hr.model = std::move(m);
            hr.param = std::move(so.failing);
            return hr;
          }
        }
      }
    }
  }
  return hr;
}

// --- randomized greedy search ------------------------------------------------

// Truth-leaf flipping on canonical tables (all leaves are truth values).
int leaf_count(const Value& v) {
  if (v.kind() == Value::Kind::Truth) return 1;
  int n = 0;
  for (const Value& e : v.entries()) n += leaf_count(e);
  return n;
}

void flip_leaf(Value& v, int leaf) {
  // rebuild along the path; values are small
  if (v.kind() == Value::Kind::Truth) {
    v = Value::truth(!v.as_truth());
    return;
  }
  std::vector<Value> entries = v.entries();
  for (Value& e : entries) {
    int n = leaf_count(e);
    if (leaf < n) {
      flip_leaf(e, leaf);
      v = Value::table(v.type(), std::move(entries));
      return;
    }
    leaf -= n;
  }
}

struct RandomizedResult {
  bool found = false;
  Model model;
  std::optional<Value> param;
  uint64_t checked = 0;
  uint64_t axiom_models = 0;
  uint64_t instances = 0;
};

RandomizedResult randomized_search(const VariantSpec& v, const AxiomSet& axioms,
                                   const Goal* goal, int worlds, int entities,
                                   FrameClass cls, uint64_t cap, uint64_t budget,
                                   Clock::time_point deadline, uint64_t samples,
                                   uint64_t seed) {
  RandomizedResult rr;
  Universe u(entities, worlds, cap);
  std::mt19937_64 rng(seed);
  std::vector<Frame> frames = frames_in_class(worlds, cls);
  std::vector<std::pair<std::string, Type>> syms(v.signature.begin(), v.signature.end());
  const int max_score = int(axioms.axioms.size()) * worlds;

  // satisfied (axiom, world) pairs, evaluated cheap-first and cut off at the
  // first axiom that is not globally valid; a monotone and cheap hill signal
  auto score_of = [&](const Model& m) {
    int score = 0;
    for (const auto& [name, t] : axioms.axioms) {
      int valid_worlds = 0;
      for (bool b : world_table(t, m, u)) valid_worlds += b ? 1 : 0;
      score += valid_worlds;
      if (valid_worlds < worlds) break;
    }
    return score;
  };

  auto goal_check = [&](const Model& m) -> bool {
    ++rr.axiom_models;
    if (!goal) {
      rr.found = true;
      rr.model = m;
      return true;
    }
    if (schema_param_enumerable(*goal, u, cap)) {
      GoalHit hit = check_goal_enumerable(*goal, m, u, cap, &rr.instances);
      if (hit.violated) {
        rr.found = true;
        rr.model = m;
        rr.param = std::move(hit.param);
        return true;
      }
      return false;
    }
    SchemaPolicy pol{cap, std::min<uint64_t>(samples, 1024), seed ^ rr.axiom_models};
    SchemaOutcome so = check_schema(*goal->schema, m, u, pol);
    rr.instances += so.instances_checked;
    if (!so.holds) {
      rr.found = true;
      rr.model = m;
      rr.param = std::move(so.failing);
      return true;
    }
    return false;
  };

  const int plateau_limit = 512;
  while (rr.checked < budget) {
    if (Clock::now() > deadline) return rr;
    // restart
    Model m;
    m.frame = frames[size_t(rng() % frames.size())];
    m.entity_count = entities;
    m.exists_at = random_value(Type::gamma(), u, rng);
    for (const auto& [name, ty] : syms) m.interp[name] = random_value(ty, u, rng);
    ++rr.checked;
    int score = score_of(m);
    if (score == max_score && goal_check(m)) return rr;

    int stale = 0;
    while (stale < plateau_limit && rr.checked < budget) {
      if ((rr.checked & 1023) == 0 && Clock::now() > deadline) return rr;
      // flip one truth leaf of existsAt or an interpretation
      int total_leaves = leaf_count(m.exists_at);
      std::vector<int> sym_leaves;
      for (const auto& [name, ty] : syms) {
        sym_leaves.push_back(leaf_count(m.interp[name]));
        total_leaves += sym_leaves.back();
      }
      int pick = int(rng() % uint64_t(total_leaves));
      Model next = m;
      if (pick < leaf_count(next.exists_at)) {
        flip_leaf(next.exists_at, pick);
      } else {
        pick -= leaf_count(next.exists_at);
        for (size_t s = 0; s < syms.size(); ++s) {
          if (pick < sym_leaves[s]) {
            flip_leaf(next.interp[syms[s].first], pick);
            break;
          }
          pick -= sym_leaves[s];
        }
      }
      ++rr.checked;
      int next_score = score_of(next);
      if (next_score >= score) {
        if (next_score > score) stale = 0;
        else ++stale;
        m = std::move(next);
        score = next_score;
        if (score == max_score && goal_check(m)) return rr;
      } else {
        ++stale;
      }
    }
  }
  return rr;
}

}  // namespace

// --- public entry points ------------------------------------------------------

namespace {

struct RunContext {
  const VariantSpec& variant;
  const Bounds& bounds;
  FrameClass cls;
  const SearchOptions& opts;
  const Goal* goal;  // null for find_model
  std::vector<TermPtr> extra_axioms;
};

Verdict run_search(const RunContext& rc) {
  const auto t0 = Clock::now();
  const auto deadline = t0 + std::chrono::milliseconds(rc.bounds.budget.wall_ms);
  const Bounds& b = rc.bounds;

  Verdict verdict;
  SearchStats& stats = verdict.stats;
  stats.space_size = model_space_size(rc.variant.signature, b, rc.cls, &stats.space_overflow);

  uint64_t remaining = b.budget.max_candidates;
  bool fully_exhaustive = true;

  auto finish = [&](Verdict::Tag tag) {
    verdict.tag = tag;
    stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return verdict;
  };

  auto report_found = [&](const AxiomSet& axioms, Model m, std::optional<Value> param) {
    TermPtr falsified;
    if (rc.goal) {
      FailingInstance fi{rc.goal->name, param};
      falsified = goal_term_for(*rc.goal, param);
      verdict.instance = std::move(fi);
    }
    verify_reported(rc.variant, axioms, m, falsified, b.carrier_cap);
    verdict.model = std::move(m);
    return finish(rc.goal ? Verdict::Tag::Countermodel : Verdict::Tag::ConsistencyWitness);
  };

  const auto sizes = sizes_ascending(b);
  for (auto [w, e] : sizes) {
    // pure randomized runs sample at the maximal size only; smaller sizes
    // are the exhaustive strategies' job
    if (b.strategy == Strategy::Randomized && (w != b.max_worlds || e != b.max_entities))
      continue;
    std::string mode;
    AxiomSet axioms;
    for (auto& [name, t] : rc.variant.check_axioms(e, w, b.carrier_cap, &mode))
      axioms.axioms.emplace_back(name, t);
    for (size_t i = 0; i < rc.extra_axioms.size(); ++i)
      axioms.axioms.emplace_back("extra" + std::to_string(i), rc.extra_axioms[i]);
    if (!mode.empty()) {
      if (!stats.a3_mode.empty()) stats.a3_mode += ";";
      stats.a3_mode += std::to_string(w) + "w" + std::to_string(e) + "e:" + mode;
    }

    ModelEnumerator en(rc.variant.signature, w, e, rc.cls, b.carrier_cap);
    Universe u(e, w, b.carrier_cap);

    const bool schema_enumerable =
        !rc.goal || schema_param_enumerable(*rc.goal, u, b.carrier_cap);

    if (b.strategy != Strategy::Randomized && !en.overflow() && en.total() <= remaining &&
        Clock::now() <= deadline) {
      const bool defer = rc.goal && !schema_enumerable;
      ScanResult sr = exhaustive_scan(en, axioms, rc.goal, defer, b.carrier_cap,
                                      rc.opts.workers, defer);
      stats.models_checked += sr.found ? sr.index + 1 : en.total();
      stats.axiom_models += sr.axiom_models;
      stats.instances_checked += sr.instances;
      remaining -= std::min(remaining, en.total());
      if (sr.found) return report_found(axioms, en.at(sr.index), sr.param);
      if (defer && !sr.axiom_indices.empty()) {
        // a completed model scan with sampled instances: spread the sample
        // budget over the collected axiom models
        stats.sampled_instances = true;
        fully_exhaustive = false;
        uint64_t k = std::max<uint64_t>(
            1, rc.opts.schema_samples / sr.axiom_indices.size());
        for (size_t i = 0; i < sr.axiom_indices.size(); ++i) {
          Model m = en.at(sr.axiom_indices[i]);
          SchemaPolicy pol{b.carrier_cap, k, b.seed + sr.axiom_indices[i]};
          SchemaOutcome so = check_schema(*rc.goal->schema, m, u, pol);
          stats.instances_checked += so.instances_checked;
          if (!so.holds) return report_found(axioms, std::move(m), so.failing);
        }
      }
      continue;
    }

    if (b.strategy == Strategy::Exhaustive) {
      // exhaustive permitted only within budget
      stats.budget_exhausted = true;
      fully_exhaustive = false;
      break;
    }

    fully_exhaustive = false;

    // countermodel hunt over component-constant interpretations
    if (b.strategy == Strategy::Auto && rc.opts.prune && rc.goal) {
      HuntResult hr =
          pruned_hunt(rc.variant, axioms, *rc.goal, w, e, rc.cls, b.carrier_cap,
                      remaining, deadline, rc.opts.schema_samples, b.seed);
      stats.pruned_hunt = true;
      stats.models_checked += hr.checked;
      stats.axiom_models += hr.axiom_models;
      stats.instances_checked += hr.instances;
      stats.skipped_frames += hr.skipped_frames;
      remaining -= std::min(remaining, hr.checked);
      if (hr.found) return report_found(axioms, std::move(hr.model), hr.param);
    }

    // randomized restarts with greedy truth-leaf flips
    if (remaining > 0 && Clock::now() <= deadline) {
      stats.sampled_models = true;
      RandomizedResult rr =
          randomized_search(rc.variant, axioms, rc.goal, w, e, rc.cls, b.carrier_cap,
                            remaining, deadline, rc.opts.schema_samples, b.seed);
      stats.models_checked += rr.checked;
      stats.axiom_models += rr.axiom_models;
      stats.instances_checked += rr.instances;
      remaining -= std::min(remaining, rr.checked);
      if (rr.found) return report_found(axioms, std::move(rr.model), rr.param);
    } else {
      stats.budget_exhausted = true;
    }
  }

  if (Clock::now() > deadline) stats.budget_exhausted = true;

  if (rc.goal) {
    if (fully_exhaustive) return finish(Verdict::Tag::ValidWithinBounds);
    return finish(Verdict::Tag::UnknownSampled);
  }
  if (fully_exhaustive) return finish(Verdict::Tag::NoModelWithinBounds);
  return finish(Verdict::Tag::UnknownSampled);
}

}  // namespace

Verdict find_model(const VariantSpec& v, const Bounds& b, FrameClass cls,
                   const std::vector<TermPtr>& extra_axioms, const SearchOptions& opts) {
  RunContext rc{v, b, cls, opts, nullptr, extra_axioms};
  return run_search(rc);
}

Verdict check_entailment(const VariantSpec& v, const std::string& goal_name,
                         const Bounds& b, FrameClass cls, const SearchOptions& opts) {
  auto it = v.goals.find(goal_name);
  if (it == v.goals.end()) throw Error("unknown goal " + goal_name + " for " + v.name);
  RunContext rc{v, b, cls, opts, &it->second, {}};
  return run_search(rc);
}

}  // namespace ihoml
