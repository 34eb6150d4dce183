#pragma once

#include <vector>

#include "ihoml/model.hpp"
#include "ihoml/term.hpp"

namespace ihoml {

// Evaluation environment: bound variables, innermost-last. Bindings hold
// pointers into carrier storage or enclosing loop locals; the evaluator
// manages their lifetime.
class Env {
 public:
  void push(const std::string& name, const Value* v) { binds_.emplace_back(&name, v); }
  void pop() { binds_.pop_back(); }
  const Value* find(const std::string& name) const {
    for (auto it = binds_.rbegin(); it != binds_.rend(); ++it)
      if (*it->first == name) return it->second;
    return nullptr;
  }

 private:
  std::vector<std::pair<const std::string*, const Value*>> binds_;
};

// Total, deterministic evaluation of a well-typed term by the direct
// semantic clauses. Throws CarrierTooLarge when a quantifier or lambda
// ranges over an oversized carrier and UnboundSymbol for unknown names.
Value eval(const Term& t, Env& env, const Model& m, Universe& u);
Value eval(const TermPtr& t, const Model& m, Universe& u);

// Global validity of a closed s-typed term: true at every world.
bool globally_valid(const TermPtr& t, const Model& m, Universe& u);

// Per-world truth table of a closed s-typed term.
std::vector<bool> world_table(const TermPtr& t, const Model& m, Universe& u);

// One-step lambda definition of the head lifted primitive (children are
// left untouched). Throws NotAPrimitive when the head is core syntax.
TermPtr expand_primitive(const TermPtr& t);

// Recursively rewrites every lifted primitive into core syntax
// (Var/Sym/Lit/Lam/App plus meta connectives and quantifiers).
TermPtr expand_all(const TermPtr& t);

}  // namespace ihoml
