#include "ihoml/eval.hpp"

#include <atomic>

#include "ihoml/errors.hpp"

namespace ihoml {

namespace {

constexpr uint64_t kMaterializeLimit = 1 << 16;

Value sigma_table(std::vector<bool> bits) {
  std::vector<Value> es;
  es.reserve(bits.size());
  for (bool b : bits) es.push_back(Value::truth(b));
  return Value::table(Type::sigma(), std::move(es));
}

Value const_sigma(int worlds, bool b) {
  return sigma_table(std::vector<bool>(size_t(worlds), b));
}

// Applies a table value by canonical rank of the argument.
const Value& apply(const Value& f, const Value& a, Universe& u) {
  return f.at(size_t(u.rank(a)));
}

template <typename F>
void for_each_in_carrier(const Type& ty, Universe& u, F&& f) {
  const uint64_t n = u.carrier_size(ty);
  if (n <= kMaterializeLimit) {
    for (const Value& v : u.carrier(ty)) f(v);
  } else {
    if (n > u.cap())
      throw CarrierTooLarge("quantification over " + ty.str() + " with " +
                            std::to_string(n) + " elements exceeds cap " +
                            std::to_string(u.cap()));
    for (uint64_t i = 0; i < n; ++i) {
      Value v = u.value_at(ty, i);
      f(v);
    }
  }
}

}  // namespace

Value eval(const Term& t, Env& env, const Model& m, Universe& u) {
  const int W = m.frame.world_count;
  switch (t.kind) {
    case Kind::Var: {
      const Value* v = env.find(t.name);
      if (!v) throw UnboundSymbol("unbound variable " + t.name);
      return *v;
    }
    case Kind::Sym: {
      if (t.name == "r") return m.frame.as_value();
      if (t.name == "existsAt") return m.exists_at;
      return m.lookup(t.name);
    }
    case Kind::Lit: return t.lit;
    case Kind::Lam: {
      const uint64_t n = u.carrier_size(t.ann);
      if (n > u.cap())
        throw CarrierTooLarge("lambda over " + t.ann.str() + " with " + std::to_string(n) +
                              " elements exceeds cap " + std::to_string(u.cap()));
      std::vector<Value> entries;
      entries.reserve(size_t(n));
      Type body_ty;
      for_each_in_carrier(t.ann, u, [&](const Value& v) {
        env.push(t.name, &v);
        entries.push_back(eval(*t.a, env, m, u));
        env.pop();
      });
      if (entries.empty()) throw Error("lambda over empty carrier");
      body_ty = entries.front().type();
      return Value::table(Type::fun(t.ann, body_ty), std::move(entries));
    }
    case Kind::App: {
      Value f = eval(*t.a, env, m, u);
      Value a = eval(*t.b, env, m, u);
      return apply(f, a, u);
    }
    case Kind::Not: return Value::truth(!eval(*t.a, env, m, u).as_truth());
    case Kind::And: {
      if (!eval(*t.a, env, m, u).as_truth()) return Value::truth(false);
      return Value::truth(eval(*t.b, env, m, u).as_truth());
    }
    case Kind::Or: {
      if (eval(*t.a, env, m, u).as_truth()) return Value::truth(true);
      return Value::truth(eval(*t.b, env, m, u).as_truth());
    }
    case Kind::Imp: {
      if (!eval(*t.a, env, m, u).as_truth()) return Value::truth(true);
      return Value::truth(eval(*t.b, env, m, u).as_truth());
    }
    case Kind::Iff:
      return Value::truth(eval(*t.a, env, m, u).as_truth() ==
                          eval(*t.b, env, m, u).as_truth());
    case Kind::Forall: case Kind::Exists: {
      const bool is_all = t.kind == Kind::Forall;
      bool result = is_all;
      try {
        for_each_in_carrier(t.ann, u, [&](const Value& v) {
          env.push(t.name, &v);
          bool b = eval(*t.a, env, m, u).as_truth();
          env.pop();
          if (b != is_all) {
            result = !is_all;
            throw char(0);  // early exit
          }
        });
      } catch (char) {}
      return Value::truth(result);
    }
    case Kind::MFalse: return const_sigma(W, false);
    case Kind::MTrue: return const_sigma(W, true);
    case Kind::MNot: {
      Value a = eval(*t.a, env, m, u);
      std::vector<bool> bits(size_t(W), false);
      for (int w = 0; w < W; ++w) bits[size_t(w)] = !a.at(size_t(w)).as_truth();
      return sigma_table(std::move(bits));
    }
    case Kind::MAnd: case Kind::MOr: case Kind::MImp: case Kind::MEqu: {
      Value a = eval(*t.a, env, m, u);
      Value b = eval(*t.b, env, m, u);
      std::vector<bool> bits(size_t(W), false);
      for (int w = 0; w < W; ++w) {
        bool x = a.at(size_t(w)).as_truth(), y = b.at(size_t(w)).as_truth();
        switch (t.kind) {
          case Kind::MAnd: bits[size_t(w)] = x && y; break;
          case Kind::MOr: bits[size_t(w)] = x || y; break;
          case Kind::MImp: bits[size_t(w)] = !x || y; break;
          default: bits[size_t(w)] = x == y; break;
        }
      }
      return sigma_table(std::move(bits));
    }
    case Kind::NegExt: {
      Value a = eval(*t.a, env, m, u);
      std::vector<Value> es;
      es.reserve(a.size());
      for (const Value& e : a.entries()) es.push_back(Value::truth(!e.as_truth()));
      return Value::table(Type::delta(), std::move(es));
    }
    case Kind::NegInt: {
      Value a = eval(*t.a, env, m, u);
      std::vector<Value> es;
      es.reserve(a.size());
      for (const Value& row : a.entries()) {
        std::vector<bool> bits(size_t(W), false);
        for (int w = 0; w < W; ++w) bits[size_t(w)] = !row.at(size_t(w)).as_truth();
        es.push_back(sigma_table(std::move(bits)));
      }
      return Value::table(Type::gamma(), std::move(es));
    }
    case Kind::Box: case Kind::Dia: {
      Value a = eval(*t.a, env, m, u);
      const bool is_box = t.kind == Kind::Box;
      std::vector<bool> bits(size_t(W), false);
      for (int w = 0; w < W; ++w) {
        bool acc = is_box;
        for (int v : m.frame.successors(w)) {
          bool b = a.at(size_t(v)).as_truth();
          if (b != is_box) { acc = !is_box; break; }
        }
        bits[size_t(w)] = acc;
      }
      return sigma_table(std::move(bits));
    }
    case Kind::ForallP: case Kind::ExistsP: {
      const bool is_all = t.kind == Kind::ForallP;
      std::vector<bool> bits(size_t(W), is_all);
      for_each_in_carrier(t.ann, u, [&](const Value& v) {
        env.push(t.name, &v);
        Value body = eval(*t.a, env, m, u);
        env.pop();
        for (int w = 0; w < W; ++w) {
          bool b = body.at(size_t(w)).as_truth();
          if (b != is_all) bits[size_t(w)] = !is_all;
        }
      });
      return sigma_table(std::move(bits));
    }
    case Kind::ForallE: case Kind::ExistsE: {
      const bool is_all = t.kind == Kind::ForallE;
      std::vector<bool> bits(size_t(W), is_all);
      const std::vector<Value>& ents = u.carrier(Type::ent());
      for (int z = 0; z < m.entity_count; ++z) {
        env.push(t.name, &ents[size_t(z)]);
        Value body = eval(*t.a, env, m, u);
        env.pop();
        for (int w = 0; w < W; ++w) {
          if (!m.exists(z, w)) continue;
          bool b = body.at(size_t(w)).as_truth();
          if (b != is_all) bits[size_t(w)] = !is_all;
        }
      }
      return sigma_table(std::move(bits));
    }
    case Kind::Rigid:
      return const_sigma(W, eval(*t.a, env, m, u).as_truth());
    case Kind::Down: {
      // table w |-> f (table z |-> p z w) (w)
      Value f = eval(*t.a, env, m, u);
      Value p = eval(*t.b, env, m, u);
      std::vector<bool> bits(size_t(W), false);
      for (int w = 0; w < W; ++w) {
        std::vector<Value> ext;
        ext.reserve(p.size());
        for (const Value& row : p.entries()) ext.push_back(row.at(size_t(w)));
        Value x = Value::table(Type::delta(), std::move(ext));
        bits[size_t(w)] = apply(f, x, u).at(size_t(w)).as_truth();
      }
      return sigma_table(std::move(bits));
    }
    case Kind::DownBold: {
      // table w |-> f (table z |-> constant table v |-> p z w) (w)
      Value f = eval(*t.a, env, m, u);
      Value p = eval(*t.b, env, m, u);
      std::vector<bool> bits(size_t(W), false);
      for (int w = 0; w < W; ++w) {
        std::vector<Value> rig;
        rig.reserve(p.size());
        for (const Value& row : p.entries())
          rig.push_back(const_sigma(W, row.at(size_t(w)).as_truth()));
        Value x = Value::table(Type::gamma(), std::move(rig));
        bits[size_t(w)] = apply(f, x, u).at(size_t(w)).as_truth();
      }
      return sigma_table(std::move(bits));
    }
    case Kind::Down1: {
      // table z |-> table w |-> f (table x |-> p x w) (z) (w)
      Value f = eval(*t.a, env, m, u);
      Value p = eval(*t.b, env, m, u);
      std::vector<Value> rows;
      rows.reserve(size_t(m.entity_count));
      for (int z = 0; z < m.entity_count; ++z) {
        std::vector<bool> bits(size_t(W), false);
        for (int w = 0; w < W; ++w) {
          std::vector<Value> ext;
          ext.reserve(p.size());
          for (const Value& row : p.entries()) ext.push_back(row.at(size_t(w)));
          Value x = Value::table(Type::delta(), std::move(ext));
          bits[size_t(w)] = apply(f, x, u).at(size_t(z)).at(size_t(w)).as_truth();
        }
        rows.push_back(sigma_table(std::move(bits)));
      }
      return Value::table(Type::gamma(), std::move(rows));
    }
    case Kind::Valid: {
      Value a = eval(*t.a, env, m, u);
      for (int w = 0; w < W; ++w)
        if (!a.at(size_t(w)).as_truth()) return Value::truth(false);
      return Value::truth(true);
    }
  }
  throw Error("unhandled term kind in eval");
}

Value eval(const TermPtr& t, const Model& m, Universe& u) {
  Env env;
  return eval(*t, env, m, u);
}

bool globally_valid(const TermPtr& t, const Model& m, Universe& u) {
  Value v = eval(t, m, u);
  for (const Value& e : v.entries())
    if (!e.as_truth()) return false;
  return true;
}

std::vector<bool> world_table(const TermPtr& t, const Model& m, Universe& u) {
  Value v = eval(t, m, u);
  std::vector<bool> bits;
  bits.reserve(v.size());
  for (const Value& e : v.entries()) bits.push_back(e.as_truth());
  return bits;
}

// ---------------------------------------------------------------------------
// Lambda definitions of the lifted primitives.

namespace {

std::string gensym(const char* stem) {
  static std::atomic<uint64_t> counter{0};
  return std::string("%") + stem + std::to_string(counter.fetch_add(1));
}

}  // namespace

TermPtr expand_primitive(const TermPtr& t) {
  using namespace mk;
  const Type w_ty = Type::wld();
  switch (t->kind) {
    case Kind::MFalse: {
      std::string w = gensym("w");
      return lam(w, w_ty, tru(false));
    }
    case Kind::MTrue: {
      std::string w = gensym("w");
      return lam(w, w_ty, tru(true));
    }
    case Kind::MNot: {
      std::string w = gensym("w");
      return lam(w, w_ty, not_(app(t->a, var(w))));
    }
    case Kind::MAnd: case Kind::MOr: case Kind::MImp: case Kind::MEqu: {
      std::string w = gensym("w");
      TermPtr l = app(t->a, var(w)), r = app(t->b, var(w));
      TermPtr body;
      switch (t->kind) {
        case Kind::MAnd: body = and_(l, r); break;
        case Kind::MOr: body = or_(l, r); break;
        case Kind::MImp: body = imp(l, r); break;
        default: body = iff(l, r); break;
      }
      return lam(w, w_ty, body);
    }
    case Kind::NegExt: {
      std::string z = gensym("z");
      return lam(z, Type::ent(), not_(app(t->a, var(z))));
    }
    case Kind::NegInt: {
      std::string z = gensym("z"), w = gensym("w");
      return lam(z, Type::ent(), lam(w, w_ty, not_(app2(t->a, var(z), var(w)))));
    }
    case Kind::Box: {
      std::string w = gensym("w"), v = gensym("v");
      return lam(w, w_ty,
                 forall(v, w_ty, imp(app2(sym("r"), var(w), var(v)), app(t->a, var(v)))));
    }
    case Kind::Dia:
      return mnot(box(mnot(t->a)));
    case Kind::ForallP: case Kind::ExistsP: {
      std::string w = gensym("w");
      TermPtr body = app(t->a, var(w));
      TermPtr q = t->kind == Kind::ForallP ? forall(t->name, t->ann, body)
                                           : exists(t->name, t->ann, body);
      return lam(w, w_ty, q);
    }
    case Kind::ForallE: {
      std::string w = gensym("w");
      return lam(w, w_ty,
                 forall(t->name, Type::ent(),
                        imp(app2(sym("existsAt"), var(t->name), var(w)), app(t->a, var(w)))));
    }
    case Kind::ExistsE: {
      std::string w = gensym("w");
      return lam(w, w_ty,
                 exists(t->name, Type::ent(),
                        and_(app2(sym("existsAt"), var(t->name), var(w)), app(t->a, var(w)))));
    }
    case Kind::Rigid: {
      std::string w = gensym("w");
      return lam(w, w_ty, t->a);
    }
    case Kind::Down: {
      std::string w = gensym("w"), z = gensym("z");
      return lam(w, w_ty,
                 app2(t->a, lam(z, Type::ent(), app2(t->b, var(z), var(w))), var(w)));
    }
    case Kind::DownBold: {
      std::string w = gensym("w"), z = gensym("z"), v = gensym("v");
      return lam(w, w_ty,
                 app2(t->a,
                      lam(z, Type::ent(), lam(v, w_ty, app2(t->b, var(z), var(w)))),
                      var(w)));
    }
    case Kind::Down1: {
      std::string z = gensym("z"), w = gensym("w"), x = gensym("x");
      return lam(z, Type::ent(),
                 lam(w, w_ty,
                     app2(app(t->a, lam(x, Type::ent(), app2(t->b, var(x), var(w)))),
                          var(z), var(w))));
    }
    case Kind::Valid: {
      std::string w = gensym("w");
      return forall(w, w_ty, app(t->a, var(w)));
    }
    default:
      throw NotAPrimitive(std::string(kind_name(t->kind)) + " is not a lifted primitive");
  }
}

TermPtr expand_all(const TermPtr& t) {
  if (is_lifted_primitive(t->kind)) return expand_all(expand_primitive(t));
  if (!t->a && !t->b) return t;
  auto n = std::make_shared<Term>(*t);
  if (t->a) n->a = expand_all(t->a);
  if (t->b) n->b = expand_all(t->b);
  return n;
}

}  // namespace ihoml
