#pragma once

// Shared fixtures for the test suites: deterministic random models over a
// small test signature and a random well-typed term generator.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "ihoml/eval.hpp"
#include "ihoml/model.hpp"
#include "ihoml/term.hpp"
#include "ihoml/typecheck.hpp"

namespace testutil {

using namespace ihoml;

// Test signature: one intensional property, one extensional property, one
// proposition.
inline Signature test_signature() {
  return {{"P", Type::gamma()},
          {"Q", Type::delta()},
          {"A", Type::sigma()}};
}

inline Signature with_builtins(Signature sig) {
  sig.emplace("r", Type::tau());
  sig.emplace("existsAt", Type::gamma());
  return sig;
}

// A deterministic random model at the given sizes, interpreting the test
// signature.
inline Model random_model(std::mt19937_64& rng, int entities, int worlds,
                          FrameClass cls = FrameClass::K) {
  Universe u(entities, worlds);
  std::vector<Frame> frames = frames_in_class(worlds, cls);
  const Frame& frame = frames[rng() % frames.size()];
  Value ex = u.value_at(Type::gamma(), rng() % u.carrier_size(Type::gamma()));
  std::map<std::string, Value> interp;
  Signature sig = test_signature();
  for (const auto& [name, ty] : sig)
    interp.emplace(name, u.value_at(ty, rng() % u.carrier_size(ty)));
  return make_model(frame, entities, std::move(ex), std::move(interp), sig, cls);
}

// Enumerates every model of the test signature at the given sizes (frames
// unrestricted, i.e. class K).
inline std::vector<Model> all_models(int entities, int worlds) {
  Universe u(entities, worlds);
  Signature sig = test_signature();
  std::vector<Model> out;
  uint64_t ex_n = u.carrier_size(Type::gamma());
  uint64_t p_n = u.carrier_size(sig.at("P"));
  uint64_t q_n = u.carrier_size(sig.at("Q"));
  uint64_t a_n = u.carrier_size(sig.at("A"));
  for (const Frame& f : frames_in_class(worlds, FrameClass::K))
    for (uint64_t e = 0; e < ex_n; ++e)
      for (uint64_t p = 0; p < p_n; ++p)
        for (uint64_t q = 0; q < q_n; ++q)
          for (uint64_t a = 0; a < a_n; ++a) {
            std::map<std::string, Value> interp{
                {"P", u.value_at(sig.at("P"), p)},
                {"Q", u.value_at(sig.at("Q"), q)},
                {"A", u.value_at(sig.at("A"), a)}};
            out.push_back(make_model(f, entities, u.value_at(Type::gamma(), e),
                                     std::move(interp), sig, FrameClass::K));
          }
  return out;
}

// Random well-typed term generator. Produces terms over the test signature
// and bound variables; literal values are restricted to truth literals so a
// generated term is meaningful on every model.
class TermGen {
 public:
  TermGen(std::mt19937_64& rng, bool surface_only = false)
      : rng_(rng), surface_only_(surface_only) {}

  TermPtr gen(const Type& ty, int depth) {
    std::vector<std::pair<std::string, Type>> scope;
    return gen(ty, depth, scope);
  }

  TermPtr gen_sigma(int depth) { return gen(Type::sigma(), depth); }

 private:
  std::mt19937_64& rng_;
  bool surface_only_;
  int fresh_ = 0;

  size_t pick(size_t n) { return size_t(rng_() % n); }
  bool coin() { return (rng_() & 1) != 0; }

  std::string fresh_var() { return "x" + std::to_string(fresh_++); }

  Type small_type() {
    switch (pick(5)) {
      case 0: return Type::ent();
      case 1: return Type::wld();
      case 2: return Type::tru();
      case 3: return Type::sigma();
      default: return Type::delta();
    }
  }

  TermPtr leaf(const Type& ty, const std::vector<std::pair<std::string, Type>>& scope) {
    std::vector<TermPtr> opts;
    for (const auto& [name, vty] : scope)
      if (vty == ty) opts.push_back(mk::var(name));
    for (const auto& [name, sty] : test_signature())
      if (sty == ty) opts.push_back(mk::sym(name));
    if (ty == Type::tau()) opts.push_back(mk::sym("r"));
    if (ty == Type::gamma()) opts.push_back(mk::sym("existsAt"));
    if (ty == Type::tru()) opts.push_back(mk::tru(coin()));
    if (ty == Type::sigma()) opts.push_back(coin() ? mk::mtrue() : mk::mfalse());
    if (!opts.empty()) return opts[pick(opts.size())];
    // no leaf of this type: eta-expand through a lambda
    if (ty.is_fun()) {
      std::vector<std::pair<std::string, Type>> inner = scope;
      std::string x = fresh_var();
      inner.emplace_back(x, ty.dom());
      return mk::lam(x, ty.dom(), leaf(ty.cod(), inner));
    }
    // entity/world with nothing in scope: bind through a quantifier upstream;
    // fall back to a literal index 0 (valid in every model)
    if (ty.tag() == Type::Tag::Ent) return mk::lit(Value::entity(0));
    return mk::lit(Value::world(0));
  }

  TermPtr gen(const Type& ty, int depth, std::vector<std::pair<std::string, Type>>& scope) {
    if (depth <= 0) return leaf(ty, scope);
    const Type s = Type::sigma();
    if (ty == s) {
      switch (pick(12)) {
        case 0: return mk::mnot(gen(s, depth - 1, scope));
        case 1: return mk::mand(gen(s, depth - 1, scope), gen(s, depth - 1, scope));
        case 2: return mk::mor(gen(s, depth - 1, scope), gen(s, depth - 1, scope));
        case 3: return mk::mimp(gen(s, depth - 1, scope), gen(s, depth - 1, scope));
        case 4: return mk::mequ(gen(s, depth - 1, scope), gen(s, depth - 1, scope));
        case 5: return mk::box(gen(s, depth - 1, scope));
        case 6: return mk::dia(gen(s, depth - 1, scope));
        case 7: {
          std::string x = fresh_var();
          Type qt = coin() ? Type::ent() : small_type();
          scope.emplace_back(x, qt);
          TermPtr body = gen(s, depth - 1, scope);
          scope.pop_back();
          return coin() ? mk::forallP(x, qt, body) : mk::existsP(x, qt, body);
        }
        case 8: {
          std::string x = fresh_var();
          scope.emplace_back(x, Type::ent());
          TermPtr body = gen(s, depth - 1, scope);
          scope.pop_back();
          return coin() ? mk::forallE(x, body) : mk::existsE(x, body);
        }
        case 9: return mk::rigid(gen(Type::tru(), depth - 1, scope));
        case 10: {
          TermPtr p = gen(Type::gamma(), depth - 1, scope);
          if (coin()) {
            TermPtr f = gen(Type::fun(Type::delta(), s), depth - 1, scope);
            return mk::down(f, p);
          }
          TermPtr f = gen(Type::fun(Type::gamma(), s), depth - 1, scope);
          return mk::downb(f, p);
        }
        default: {
          // application of a gamma-term to an entity
          bool have_ent = false;
          for (const auto& [n, t] : scope) have_ent = have_ent || t == Type::ent();
          if (surface_only_ && !have_ent) {
            std::string x = fresh_var();
            scope.emplace_back(x, Type::ent());
            TermPtr g = gen(Type::gamma(), depth - 1, scope);
            scope.pop_back();
            return mk::existsE(x, mk::app(g, mk::var(x)));
          }
          TermPtr g = gen(Type::gamma(), depth - 1, scope);
          TermPtr e = gen(Type::ent(), depth - 1, scope);
          return mk::app(g, e);
        }
      }
    }
    if (ty == Type::tru()) {
      switch (pick(6)) {
        case 0: return mk::not_(gen(ty, depth - 1, scope));
        case 1: return mk::and_(gen(ty, depth - 1, scope), gen(ty, depth - 1, scope));
        case 2: return mk::or_(gen(ty, depth - 1, scope), gen(ty, depth - 1, scope));
        case 3: return mk::imp(gen(ty, depth - 1, scope), gen(ty, depth - 1, scope));
        case 4: {
          std::string x = fresh_var();
          Type qt = small_type();
          scope.emplace_back(x, qt);
          TermPtr body = gen(ty, depth - 1, scope);
          scope.pop_back();
          return coin() ? mk::forall(x, qt, body) : mk::exists(x, qt, body);
        }
        default: return mk::valid(gen(s, depth - 1, scope));
      }
    }
    if (ty == Type::delta()) {
      if (pick(3) == 0) return mk::negd(gen(ty, depth - 1, scope));
      std::string x = fresh_var();
      scope.emplace_back(x, Type::ent());
      TermPtr body = gen(Type::tru(), depth - 1, scope);
      scope.pop_back();
      return mk::lam(x, Type::ent(), body);
    }
    if (ty == Type::gamma()) {
      switch (pick(3)) {
        case 0: return mk::negg(gen(ty, depth - 1, scope));
        case 1: {
          TermPtr f = gen(Type::fun(Type::delta(), Type::gamma()), depth - 1, scope);
          TermPtr p = gen(Type::gamma(), depth - 1, scope);
          return mk::down1(f, p);
        }
        default: {
          std::string x = fresh_var();
          scope.emplace_back(x, Type::ent());
          TermPtr body = gen(s, depth - 1, scope);
          scope.pop_back();
          return mk::lam(x, Type::ent(), body);
        }
      }
    }
    if (ty.is_fun()) {
      std::string x = fresh_var();
      scope.emplace_back(x, ty.dom());
      TermPtr body = gen(ty.cod(), depth - 1, scope);
      scope.pop_back();
      return mk::lam(x, ty.dom(), body);
    }
    return leaf(ty, scope);
  }
};

}  // namespace testutil
