#include "ihoml/typecheck.hpp"

namespace ihoml {

namespace {

[[noreturn]] void fail(const Term& t, const std::string& msg) {
  throw TypeError(std::string(kind_name(t.kind)) + ": " + msg, t.span);
}

void expect(const Term& t, const Type& found, const Type& want, const char* where) {
  if (!(found == want))
    fail(t, std::string(where) + " expected " + want.str() + ", found " + found.str());
}

}  // namespace

Type typecheck(const Term& t, TypingContext& ctx, const Signature& sig) {
  const Type s = Type::sigma();
  const Type tr = Type::tru();
  switch (t.kind) {
    case Kind::Var: {
      if (auto ty = ctx.find(t.name)) return *ty;
      fail(t, "unbound variable " + t.name);
    }
    case Kind::Sym: {
      auto it = sig.find(t.name);
      if (it == sig.end()) throw TypeError("unbound symbol " + t.name, t.span);
      return it->second;
    }
    case Kind::Lit: return t.lit.type();
    case Kind::Lam: {
      ctx.push(t.name, t.ann);
      Type body = typecheck(*t.a, ctx, sig);
      ctx.pop();
      return Type::fun(t.ann, body);
    }
    case Kind::App: {
      Type f = typecheck(*t.a, ctx, sig);
      Type a = typecheck(*t.b, ctx, sig);
      if (!f.is_fun()) fail(t, "applied non-function of type " + f.str());
      expect(t, a, f.dom(), "argument");
      return f.cod();
    }
    case Kind::Not:
      expect(t, typecheck(*t.a, ctx, sig), tr, "operand");
      return tr;
    case Kind::And: case Kind::Or: case Kind::Imp: case Kind::Iff:
      expect(t, typecheck(*t.a, ctx, sig), tr, "left operand");
      expect(t, typecheck(*t.b, ctx, sig), tr, "right operand");
      return tr;
    case Kind::Forall: case Kind::Exists: {
      ctx.push(t.name, t.ann);
      Type body = typecheck(*t.a, ctx, sig);
      ctx.pop();
      expect(t, body, tr, "body");
      return tr;
    }
    case Kind::MFalse: case Kind::MTrue: return s;
    case Kind::MNot:
      expect(t, typecheck(*t.a, ctx, sig), s, "operand");
      return s;
    case Kind::MAnd: case Kind::MOr: case Kind::MImp: case Kind::MEqu:
      expect(t, typecheck(*t.a, ctx, sig), s, "left operand");
      expect(t, typecheck(*t.b, ctx, sig), s, "right operand");
      return s;
    case Kind::NegExt:
      expect(t, typecheck(*t.a, ctx, sig), Type::delta(), "operand");
      return Type::delta();
    case Kind::NegInt:
      expect(t, typecheck(*t.a, ctx, sig), Type::gamma(), "operand");
      return Type::gamma();
    case Kind::Box: case Kind::Dia:
      expect(t, typecheck(*t.a, ctx, sig), s, "operand");
      return s;
    case Kind::ForallP: case Kind::ExistsP: {
      ctx.push(t.name, t.ann);
      Type body = typecheck(*t.a, ctx, sig);
      ctx.pop();
      expect(t, body, s, "body");
      return s;
    }
    case Kind::ForallE: case Kind::ExistsE: {
      ctx.push(t.name, Type::ent());
      Type body = typecheck(*t.a, ctx, sig);
      ctx.pop();
      expect(t, body, s, "body");
      return s;
    }
    case Kind::Rigid:
      expect(t, typecheck(*t.a, ctx, sig), tr, "operand");
      return s;
    case Kind::Down: {
      expect(t, typecheck(*t.a, ctx, sig), Type::fun(Type::delta(), s), "first argument");
      expect(t, typecheck(*t.b, ctx, sig), Type::gamma(), "second argument");
      return s;
    }
    case Kind::DownBold: {
      expect(t, typecheck(*t.a, ctx, sig), Type::fun(Type::gamma(), s), "first argument");
      expect(t, typecheck(*t.b, ctx, sig), Type::gamma(), "second argument");
      return s;
    }
    case Kind::Down1: {
      expect(t, typecheck(*t.a, ctx, sig),
             Type::fun(Type::delta(), Type::fun(Type::ent(), s)), "first argument");
      expect(t, typecheck(*t.b, ctx, sig), Type::gamma(), "second argument");
      return Type::fun(Type::ent(), s);
    }
    case Kind::Valid:
      expect(t, typecheck(*t.a, ctx, sig), s, "operand");
      return tr;
  }
  fail(t, "unhandled term");
}

Type typecheck(const TermPtr& t, const Signature& sig) {
  TypingContext ctx;
  return typecheck(*t, ctx, sig);
}

}  // namespace ihoml
