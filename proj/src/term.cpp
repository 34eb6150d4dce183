#include "ihoml/term.hpp"

namespace ihoml {

bool is_binder(Kind k) {
  switch (k) {
    case Kind::Lam:
    case Kind::Forall:
    case Kind::Exists:
    case Kind::ForallP:
    case Kind::ExistsP:
    case Kind::ForallE:
    case Kind::ExistsE: return true;
    default: return false;
  }
}

bool is_lifted_primitive(Kind k) {
  switch (k) {
    case Kind::MFalse: case Kind::MTrue: case Kind::MNot: case Kind::MAnd:
    case Kind::MOr: case Kind::MImp: case Kind::MEqu: case Kind::NegExt:
    case Kind::NegInt: case Kind::Box: case Kind::Dia: case Kind::ForallP:
    case Kind::ExistsP: case Kind::ForallE: case Kind::ExistsE:
    case Kind::Rigid: case Kind::Down: case Kind::DownBold: case Kind::Down1:
    case Kind::Valid: return true;
    default: return false;
  }
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Var: return "var";
    case Kind::Sym: return "sym";
    case Kind::Lit: return "lit";
    case Kind::Lam: return "lam";
    case Kind::App: return "app";
    case Kind::Not: return "~";
    case Kind::And: return "&";
    case Kind::Or: return "|";
    case Kind::Imp: return "->";
    case Kind::Iff: return "<->";
    case Kind::Forall: return "!";
    case Kind::Exists: return "?";
    case Kind::MFalse: return "mfalse";
    case Kind::MTrue: return "mtrue";
    case Kind::MNot: return "mnot";
    case Kind::MAnd: return "mand";
    case Kind::MOr: return "mor";
    case Kind::MImp: return "mimp";
    case Kind::MEqu: return "mequ";
    case Kind::NegExt: return "negd";
    case Kind::NegInt: return "negg";
    case Kind::Box: return "box";
    case Kind::Dia: return "dia";
    case Kind::ForallP: return "forall";
    case Kind::ExistsP: return "exists";
    case Kind::ForallE: return "forallE";
    case Kind::ExistsE: return "existsE";
    case Kind::Rigid: return "rigid";
    case Kind::Down: return "down";
    case Kind::DownBold: return "downb";
    case Kind::Down1: return "down1";
    case Kind::Valid: return "valid";
  }
  return "?";
}

bool term_eq(const Term& x, const Term& y) {
  if (x.kind != y.kind || x.name != y.name) return false;
  if (!(x.ann == y.ann)) return false;
  if (x.kind == Kind::Lit && x.lit != y.lit) return false;
  if ((x.a == nullptr) != (y.a == nullptr)) return false;
  if ((x.b == nullptr) != (y.b == nullptr)) return false;
  if (x.a && !term_eq(*x.a, *y.a)) return false;
  if (x.b && !term_eq(*x.b, *y.b)) return false;
  return true;
}

namespace mk {

namespace {
std::shared_ptr<Term> node(Kind k) { return std::make_shared<Term>(k); }
}  // namespace

TermPtr var(std::string name) {
  auto t = node(Kind::Var);
  t->name = std::move(name);
  return t;
}
TermPtr sym(std::string name) {
  auto t = node(Kind::Sym);
  t->name = std::move(name);
  return t;
}
TermPtr lit(Value v) {
  auto t = node(Kind::Lit);
  t->ann = v.type();
  t->lit = std::move(v);
  return t;
}
TermPtr tru(bool b) { return lit(Value::truth(b)); }
TermPtr lam(std::string x, Type ty, TermPtr body) {
  auto t = node(Kind::Lam);
  t->name = std::move(x);
  t->ann = std::move(ty);
  t->a = std::move(body);
  return t;
}
TermPtr app(TermPtr f, TermPtr a) {
  auto t = node(Kind::App);
  t->a = std::move(f);
  t->b = std::move(a);
  return t;
}
TermPtr app2(TermPtr f, TermPtr a, TermPtr b) {
  return app(app(std::move(f), std::move(a)), std::move(b));
}

namespace {
TermPtr unary(Kind k, TermPtr a) {
  auto t = node(k);
  t->a = std::move(a);
  return t;
}
TermPtr binary(Kind k, TermPtr a, TermPtr b) {
  auto t = node(k);
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}
TermPtr binder(Kind k, std::string x, Type ty, TermPtr body) {
  auto t = node(k);
  t->name = std::move(x);
  t->ann = std::move(ty);
  t->a = std::move(body);
  return t;
}
}  // namespace

TermPtr not_(TermPtr a) { return unary(Kind::Not, std::move(a)); }
TermPtr and_(TermPtr a, TermPtr b) { return binary(Kind::And, std::move(a), std::move(b)); }
TermPtr or_(TermPtr a, TermPtr b) { return binary(Kind::Or, std::move(a), std::move(b)); }
TermPtr imp(TermPtr a, TermPtr b) { return binary(Kind::Imp, std::move(a), std::move(b)); }
TermPtr iff(TermPtr a, TermPtr b) { return binary(Kind::Iff, std::move(a), std::move(b)); }
TermPtr forall(std::string x, Type ty, TermPtr body) {
  return binder(Kind::Forall, std::move(x), std::move(ty), std::move(body));
}
TermPtr exists(std::string x, Type ty, TermPtr body) {
  return binder(Kind::Exists, std::move(x), std::move(ty), std::move(body));
}

TermPtr mfalse() { return node(Kind::MFalse); }
TermPtr mtrue() { return node(Kind::MTrue); }
TermPtr mnot(TermPtr a) { return unary(Kind::MNot, std::move(a)); }
TermPtr mand(TermPtr a, TermPtr b) { return binary(Kind::MAnd, std::move(a), std::move(b)); }
TermPtr mor(TermPtr a, TermPtr b) { return binary(Kind::MOr, std::move(a), std::move(b)); }
TermPtr mimp(TermPtr a, TermPtr b) { return binary(Kind::MImp, std::move(a), std::move(b)); }
TermPtr mequ(TermPtr a, TermPtr b) { return binary(Kind::MEqu, std::move(a), std::move(b)); }
TermPtr negd(TermPtr a) { return unary(Kind::NegExt, std::move(a)); }
TermPtr negg(TermPtr a) { return unary(Kind::NegInt, std::move(a)); }
TermPtr box(TermPtr a) { return unary(Kind::Box, std::move(a)); }
TermPtr dia(TermPtr a) { return unary(Kind::Dia, std::move(a)); }
TermPtr forallP(std::string x, Type ty, TermPtr body) {
  return binder(Kind::ForallP, std::move(x), std::move(ty), std::move(body));
}
TermPtr existsP(std::string x, Type ty, TermPtr body) {
  return binder(Kind::ExistsP, std::move(x), std::move(ty), std::move(body));
}
TermPtr forallE(std::string x, TermPtr body) {
  return binder(Kind::ForallE, std::move(x), Type::ent(), std::move(body));
}
TermPtr existsE(std::string x, TermPtr body) {
  return binder(Kind::ExistsE, std::move(x), Type::ent(), std::move(body));
}
TermPtr rigid(TermPtr a) { return unary(Kind::Rigid, std::move(a)); }
TermPtr down(TermPtr f, TermPtr p) { return binary(Kind::Down, std::move(f), std::move(p)); }
TermPtr downb(TermPtr f, TermPtr p) { return binary(Kind::DownBold, std::move(f), std::move(p)); }
TermPtr down1(TermPtr f, TermPtr p) { return binary(Kind::Down1, std::move(f), std::move(p)); }
TermPtr valid(TermPtr a) { return unary(Kind::Valid, std::move(a)); }

}  // namespace mk

}  // namespace ihoml
