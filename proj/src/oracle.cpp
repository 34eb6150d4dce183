#include "ihoml/oracle.hpp"

#include "ihoml/errors.hpp"

namespace ihoml {

TermPtr subst(const TermPtr& t, const std::string& name, const TermPtr& replacement) {
  switch (t->kind) {
    case Kind::Var:
      return t->name == name ? replacement : t;
    case Kind::Sym:
    case Kind::Lit:
      return t;
    default: break;
  }
  if (is_binder(t->kind) && t->name == name) return t;  // shadowed
  auto n = std::make_shared<Term>(*t);
  if (t->a) n->a = subst(t->a, name, replacement);
  if (t->b) n->b = subst(t->b, name, replacement);
  return n;
}

namespace {

// Evaluates a closed core term (no lifted primitives, no free variables).
Value core_eval(const TermPtr& t, const Model& m, Universe& u) {
  switch (t->kind) {
    case Kind::Lit: return t->lit;
    case Kind::Sym: {
      if (t->name == "r") return m.frame.as_value();
      if (t->name == "existsAt") return m.exists_at;
      return m.lookup(t->name);
    }
    case Kind::Var: throw UnboundSymbol("oracle met free variable " + t->name);
    case Kind::App: {
      Value a = core_eval(t->b, m, u);
      if (t->a->kind == Kind::Lam)
        return core_eval(subst(t->a->a, t->a->name, mk::lit(std::move(a))), m, u);
      Value f = core_eval(t->a, m, u);
      return f.at(size_t(u.rank(a)));
    }
    case Kind::Lam: {
      const uint64_t n = u.carrier_size(t->ann);
      if (n > u.cap())
        throw CarrierTooLarge("oracle lambda over " + t->ann.str() + " exceeds cap");
      std::vector<Value> entries;
      entries.reserve(size_t(n));
      for (uint64_t i = 0; i < n; ++i) {
        Value v = u.value_at(t->ann, i);
        entries.push_back(core_eval(subst(t->a, t->name, mk::lit(std::move(v))), m, u));
      }
      Type result_ty = Type::fun(t->ann, entries.front().type());
      return Value::table(std::move(result_ty), std::move(entries));
    }
    case Kind::Not: return Value::truth(!core_eval(t->a, m, u).as_truth());
    case Kind::And:
      return Value::truth(core_eval(t->a, m, u).as_truth() &&
                          core_eval(t->b, m, u).as_truth());
    case Kind::Or:
      return Value::truth(core_eval(t->a, m, u).as_truth() ||
                          core_eval(t->b, m, u).as_truth());
    case Kind::Imp:
      return Value::truth(!core_eval(t->a, m, u).as_truth() ||
                          core_eval(t->b, m, u).as_truth());
    case Kind::Iff:
      return Value::truth(core_eval(t->a, m, u).as_truth() ==
                          core_eval(t->b, m, u).as_truth());
    case Kind::Forall: case Kind::Exists: {
      const bool is_all = t->kind == Kind::Forall;
      const uint64_t n = u.carrier_size(t->ann);
      if (n > u.cap())
        throw CarrierTooLarge("oracle quantifier over " + t->ann.str() + " exceeds cap");
      for (uint64_t i = 0; i < n; ++i) {
        Value v = u.value_at(t->ann, i);
        bool b = core_eval(subst(t->a, t->name, mk::lit(std::move(v))), m, u).as_truth();
        if (b != is_all) return Value::truth(!is_all);
      }
      return Value::truth(is_all);
    }
    default:
      throw Error(std::string("oracle met non-core term: ") + kind_name(t->kind));
  }
}

}  // namespace

Value oracle_eval(const TermPtr& t, const Model& m, Universe& u) {
  return core_eval(expand_all(t), m, u);
}

}  // namespace ihoml
