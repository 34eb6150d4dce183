#pragma once

#include "ihoml/eval.hpp"
#include "ihoml/term.hpp"

namespace ihoml {

// World-lifted set algebra over property extensions (d) or intensions (g),
// plus the filter and ultrafilter predicates on families of such sets.
// Families have type d>s resp. g>s; a delta-ultrafilter predicate is a
// world-lifted characteristic function of type (d>s)>s.
enum class FamilyKind { Delta, Gamma };

inline Type member_type(FamilyKind k) {
  return k == FamilyKind::Delta ? Type::delta() : Type::gamma();
}
inline Type family_type(FamilyKind k) {
  return Type::fun(member_type(k), Type::sigma());
}

// Term builders for the lifted set operations on the member lattice.
struct SetOps {
  FamilyKind kind;

  TermPtr top() const;                          // full set of entities
  TermPtr empty() const;                        // lifted empty set
  TermPtr elem(TermPtr x, TermPtr family) const;             // X in Phi
  TermPtr subset(TermPtr x, TermPtr y) const;                // s-typed
  TermPtr inter(TermPtr x, TermPtr y) const;                 // pointwise and
  TermPtr complement(TermPtr x) const;                            // pointwise not
};

inline SetOps set_ops(FamilyKind kind) { return SetOps{kind}; }

// s-typed term that holds at w iff `family` is a filter at w: it contains
// the top element, excludes the empty set, and is closed under supersets
// and intersections. `family` must have the kind's family type.
TermPtr filter_pred(FamilyKind kind, TermPtr family);

// filter_pred plus the maximality condition: every member set or its
// complement belongs to the family.
TermPtr ultrafilter_pred(FamilyKind kind, TermPtr family);

// Direct evaluators over a family value, bypassing the term route; a
// property test ties the two together.
bool is_filter_at(FamilyKind kind, const Value& family, const Model& m, Universe& u, int world);
bool is_ultrafilter_at(FamilyKind kind, const Value& family, const Model& m, Universe& u,
                       int world);
bool is_ultrafilter_globally(FamilyKind kind, const Value& family, const Model& m, Universe& u);

}  // namespace ihoml
