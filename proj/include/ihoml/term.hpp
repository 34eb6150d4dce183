#pragma once

#include <memory>
#include <string>

#include "ihoml/value.hpp"

namespace ihoml {

struct SourceSpan {
  size_t start = 0, end = 0;  // byte offsets, start <= end
  int line = 0, column = 0;   // 1-based position of start
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Deep embedding of the IHOML term language. The core fragment is
// Var/Sym/Lit/Lam/App plus meta-level (t-typed) connectives and
// quantifiers; everything from MFalse onward is a world-lifted primitive
// with a direct semantic clause in eval() and a lambda definition
// reachable through expand_primitive().
enum class Kind : uint8_t {
  Var, Sym, Lit, Lam, App,
  Not, And, Or, Imp, Iff, Forall, Exists,        // meta, type t
  MFalse, MTrue, MNot, MAnd, MOr, MImp, MEqu,    // lifted, type s
  NegExt, NegInt,                                // property negation on d / g
  Box, Dia,
  ForallP, ExistsP,                              // possibilist, any type
  ForallE, ExistsE,                              // actualist, entities only
  Rigid,                                         // t -> s
  Down, DownBold, Down1,
  Valid                                          // s -> t
};

struct Term {
  Kind kind;
  std::string name;  // Var/Sym name, binder variable
  Type ann;          // binder annotation / Lam domain
  Value lit;         // Lit payload
  TermPtr a, b;      // children (binders use a as the body)
  SourceSpan span;

  Term(Kind k) : kind(k) {}
};

bool term_eq(const Term& x, const Term& y);  // structural, spans ignored
inline bool term_eq(const TermPtr& x, const TermPtr& y) { return term_eq(*x, *y); }

bool is_binder(Kind k);
bool is_lifted_primitive(Kind k);
const char* kind_name(Kind k);

// Construction helpers.
namespace mk {

TermPtr var(std::string name);
TermPtr sym(std::string name);
TermPtr lit(Value v);
TermPtr tru(bool b);
TermPtr lam(std::string x, Type ty, TermPtr body);
TermPtr app(TermPtr f, TermPtr a);
TermPtr app2(TermPtr f, TermPtr a, TermPtr b);

TermPtr not_(TermPtr a);
TermPtr and_(TermPtr a, TermPtr b);
TermPtr or_(TermPtr a, TermPtr b);
TermPtr imp(TermPtr a, TermPtr b);
TermPtr iff(TermPtr a, TermPtr b);
TermPtr forall(std::string x, Type ty, TermPtr body);
TermPtr exists(std::string x, Type ty, TermPtr body);

TermPtr mfalse();
TermPtr mtrue();
TermPtr mnot(TermPtr a);
TermPtr mand(TermPtr a, TermPtr b);
TermPtr mor(TermPtr a, TermPtr b);
TermPtr mimp(TermPtr a, TermPtr b);
TermPtr mequ(TermPtr a, TermPtr b);
TermPtr negd(TermPtr a);
TermPtr negg(TermPtr a);
TermPtr box(TermPtr a);
TermPtr dia(TermPtr a);
TermPtr forallP(std::string x, Type ty, TermPtr body);
TermPtr existsP(std::string x, Type ty, TermPtr body);
TermPtr forallE(std::string x, TermPtr body);
TermPtr existsE(std::string x, TermPtr body);
TermPtr rigid(TermPtr a);
TermPtr down(TermPtr f, TermPtr p);
TermPtr downb(TermPtr f, TermPtr p);
TermPtr down1(TermPtr f, TermPtr p);
TermPtr valid(TermPtr a);

}  // namespace mk

}  // namespace ihoml
