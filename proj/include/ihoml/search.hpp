#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ihoml/variants.hpp"

namespace ihoml {

enum class Strategy { Exhaustive, Randomized, Auto };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& s);

struct Budget {
  uint64_t max_candidates = 100000000;  // model evaluations
  uint64_t wall_ms = 10 * 60 * 1000;
};

struct Bounds {
  int max_worlds = 2;
  int max_entities = 2;
  uint64_t carrier_cap = kDefaultCarrierCap;
  Strategy strategy = Strategy::Auto;
  uint64_t seed = 0;
  Budget budget;
};

struct SearchOptions {
  int workers = 1;
  uint64_t schema_samples = 100000;  // instance samples for oversized carriers
  bool prune = true;                 // interpretation pruning in the hunt phase
};

struct SearchStats {
  uint64_t space_size = 0;  // exact model count within bounds (saturated)
  bool space_overflow = false;
  uint64_t models_checked = 0;
  uint64_t axiom_models = 0;
  uint64_t instances_checked = 0;
  uint64_t skipped_frames = 0;
  bool sampled_models = false;
  bool sampled_instances = false;
  bool pruned_hunt = false;
  bool budget_exhausted = false;
  std::string a3_mode;  // Scott only: "A3" or "A3-replaced-by-T2" per size
  double elapsed_ms = 0;
};

struct FailingInstance {
  std::string goal;
  std::optional<Value> param;  // schema parameter, absent for closed goals
};

// Countermodels and witnesses are re-verified by direct evaluation (fast
// evaluator and substitution oracle) before being reported.
struct Verdict {
  enum class Tag {
    ValidWithinBounds,
    Countermodel,
    ConsistencyWitness,
    NoModelWithinBounds,
    UnknownSampled
  };
  Tag tag;
  std::optional<Model> model;
  std::optional<FailingInstance> instance;
  SearchStats stats;
};

const char* verdict_name(Verdict::Tag t);

// Deterministic stream of all models of a signature within one size, in
// canonical order: accessibility mask ascending (restricted to the frame
// class), then existsAt, then interpretations in canonical carrier order.
class ModelEnumerator {
 public:
  ModelEnumerator(const Signature& sig, int worlds, int entities, FrameClass cls,
                  uint64_t cap = kDefaultCarrierCap);

  uint64_t total() const { return total_; }
  bool overflow() const { return overflow_; }
  Model at(uint64_t index) const;  // index < total()
  std::optional<Model> next();     // stream interface

 private:
  Signature sig_;
  int worlds_, entities_;
  std::vector<Frame> frames_;
  std::vector<std::pair<std::string, Type>> syms_;
  std::vector<uint64_t> sym_counts_;
  uint64_t exists_count_ = 0;
  uint64_t per_frame_ = 0;
  uint64_t total_ = 0;
  bool overflow_ = false;
  uint64_t cursor_ = 0;
};

// Exact model count for a signature within bounds (all sizes), saturating.
uint64_t model_space_size(const Signature& sig, const Bounds& b, FrameClass cls,
                          bool* overflow = nullptr);

// Searches for a model satisfying all axioms (plus extras) within bounds.
Verdict find_model(const VariantSpec& v, const Bounds& b, FrameClass cls,
                   const std::vector<TermPtr>& extra_axioms = {},
                   const SearchOptions& opts = {});

// Searches for a model satisfying the axioms but falsifying the named goal.
// Exhaustive completion without a hit gives ValidWithinBounds; sampled or
// truncated searches give UnknownSampled.
Verdict check_entailment(const VariantSpec& v, const std::string& goal_name,
                         const Bounds& b, FrameClass cls, const SearchOptions& opts = {});

struct SchemaPolicy {
  uint64_t carrier_cap = kDefaultCarrierCap;
  uint64_t samples = 100000;
  uint64_t seed = 0;
};

struct SchemaOutcome {
  bool holds = true;
  std::optional<Value> failing;
  uint64_t instances_checked = 0;
  bool sampled = false;
};

// Checks every instance of a schema on one model: exhaustively when the
// parameter carrier is within the cap, otherwise on seeded pseudorandom
// samples (flagged).
SchemaOutcome check_schema(const Schema& schema, const Model& m, Universe& u,
                           const SchemaPolicy& policy);

// Confirms by direct evaluation (fast evaluator and substitution oracle)
// that `m` satisfies every axiom and, when non-null, falsifies
// `falsified_goal`. Throws on any mismatch. All reported verdicts pass
// through this.
void reverify_model(const std::vector<std::pair<std::string, TermPtr>>& axioms,
                    const Model& m, const TermPtr& falsified_goal, uint64_t cap);

}  // namespace ihoml
