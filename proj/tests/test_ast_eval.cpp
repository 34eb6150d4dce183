#include "doctest.h"

#include <random>

#include "ihoml/errors.hpp"
#include "ihoml/eval.hpp"
#include "ihoml/oracle.hpp"
#include "ihoml/typecheck.hpp"
#include "testutil.hpp"

using namespace ihoml;
using testutil::TermGen;

TEST_CASE("typecheck assigns the figure operator types") {
  Signature sig = testutil::with_builtins(testutil::test_signature());
  CHECK(typecheck(mk::box(mk::sym("A")), sig) == Type::sigma());
  CHECK(typecheck(mk::dia(mk::mtrue()), sig) == Type::sigma());
  CHECK(typecheck(mk::rigid(mk::tru(true)), sig) == Type::sigma());
  CHECK(typecheck(mk::valid(mk::sym("A")), sig) == Type::tru());
  CHECK(typecheck(mk::negd(mk::sym("Q")), sig) == Type::delta());
  CHECK(typecheck(mk::negg(mk::sym("P")), sig) == Type::gamma());

  // down: first argument d>s, second g, result s
  TermPtr phi = mk::lam("X", Type::delta(), mk::mtrue());
  CHECK(typecheck(mk::down(phi, mk::sym("P")), sig) == Type::sigma());
  TermPtr phig = mk::lam("X", Type::gamma(), mk::mtrue());
  CHECK(typecheck(mk::downb(phig, mk::sym("P")), sig) == Type::sigma());
  TermPtr phi1 = mk::lam("X", Type::delta(), mk::lam("z", Type::ent(), mk::mtrue()));
  CHECK(typecheck(mk::down1(phi1, mk::sym("P")), sig) ==
        Type::fun(Type::ent(), Type::sigma()));

  // box applied to an entity-typed term is a type error
  TermPtr bad = mk::box(mk::lam("x", Type::ent(), mk::var("x")));
  CHECK_THROWS_AS(typecheck(bad, sig), TypeError);
  CHECK_THROWS_AS(typecheck(mk::down(phig, mk::sym("P")), sig), TypeError);
  CHECK_THROWS_AS(typecheck(mk::var("loose"), sig), TypeError);
}

TEST_CASE("box over a successor-less world is vacuously true") {
  Universe u(1, 1);
  Signature sig;
  Model m = make_model(Frame(1, {}), 1, u.value_at(Type::gamma(), 1), {}, sig, FrameClass::K);
  CHECK(globally_valid(mk::box(mk::mfalse()), m, u));
  // on a reflexive single world box mfalse is false
  Model mr = make_model(Frame(1, {{0, 0}}), 1, u.value_at(Type::gamma(), 1), {}, sig,
                        FrameClass::S5);
  CHECK(!globally_valid(mk::box(mk::mfalse()), mr, u));
  CHECK(globally_valid(mk::mtrue(), mr, u));
}

TEST_CASE("the box-over-forall reduction matches its first-order clause") {
  // box (forall x:e. P x)  ==  lam w:w. ! v:w. ! x:e. r w v -> P x v
  TermPtr lifted = mk::box(mk::forallP("x", Type::ent(), mk::app(mk::sym("P"), mk::var("x"))));
  TermPtr clause = mk::lam(
      "w", Type::wld(),
      mk::forall("v", Type::wld(),
                 mk::forall("x", Type::ent(),
                            mk::imp(mk::app2(mk::sym("r"), mk::var("w"), mk::var("v")),
                                    mk::app2(mk::sym("P"), mk::var("x"), mk::var("v"))))));
  for (int e = 1; e <= 2; ++e)
    for (int w = 1; w <= 2; ++w) {
      Universe u(e, w);
      Signature sig{{"P", Type::gamma()}};
      uint64_t pn = u.carrier_size(Type::gamma());
      for (const Frame& f : frames_in_class(w, FrameClass::K))
        for (uint64_t p = 0; p < pn; ++p) {
          Model m = make_model(f, e, u.value_at(Type::gamma(), pn - 1),
                               {{"P", u.value_at(Type::gamma(), p)}}, sig, FrameClass::K);
          CHECK(eval(lifted, m, u) == eval(clause, m, u));
        }
    }
}

TEST_CASE("rigidified intensions differ from the original somewhere at two worlds") {
  // brute force at |E|=1, |W|=2: find a model, phi and P with
  // downb(phi, P) != phi P, computed directly on value tables
  Universe u(1, 2);
  const Type gs = Type::fun(Type::gamma(), Type::sigma());
  bool found = false;
  Frame witness_frame(1, {});
  uint64_t witness_phi = 0, witness_p = 0;
  for (const Frame& f : frames_in_class(2, FrameClass::K)) {
    for (uint64_t pi = 0; pi < u.carrier_size(Type::gamma()) && !found; ++pi) {
      Value p = u.value_at(Type::gamma(), pi);
      for (uint64_t fi = 0; fi < u.carrier_size(gs) && !found; ++fi) {
        Value phi = u.value_at(gs, fi);
        // direct table computation of both sides
        std::vector<bool> lhs, rhs;
        for (int w = 0; w < 2; ++w) {
          std::vector<Value> rig;
          for (const Value& row : p.entries()) {
            bool b = row.at(size_t(w)).as_truth();
            rig.push_back(Value::table(Type::sigma(), {Value::truth(b), Value::truth(b)}));
          }
          Value rigided = Value::table(Type::gamma(), std::move(rig));
          lhs.push_back(phi.at(size_t(u.rank(rigided))).at(size_t(w)).as_truth());
          rhs.push_back(phi.at(size_t(u.rank(p))).at(size_t(w)).as_truth());
        }
        if (lhs != rhs) {
          found = true;
          witness_frame = f;
          witness_phi = fi;
          witness_p = pi;
        }
      }
    }
    if (found) break;
  }
  REQUIRE(found);

  // the evaluator agrees on the witness
  Signature sig{{"phi", gs}, {"P", Type::gamma()}};
  Model m = make_model(witness_frame, 1, u.value_at(Type::gamma(), 3),
                       {{"phi", u.value_at(gs, witness_phi)},
                        {"P", u.value_at(Type::gamma(), witness_p)}},
                       sig, FrameClass::K);
  TermPtr side_a = mk::downb(mk::sym("phi"), mk::sym("P"));
  TermPtr side_b = mk::app(mk::sym("phi"), mk::sym("P"));
  CHECK(eval(side_a, m, u) != eval(side_b, m, u));
}

TEST_CASE("dia is the dual of box on every small model") {
  std::mt19937_64 rng(7);
  for (int e = 1; e <= 2; ++e)
    for (int w = 1; w <= 2; ++w) {
      Universe u(e, w);
      for (int i = 0; i < 20; ++i) {
        Model m = testutil::random_model(rng, e, w);
        for (const Value& phi : u.carrier(Type::sigma())) {
          TermPtr t = mk::lit(phi);
          CHECK(eval(mk::dia(t), m, u) == eval(mk::mnot(mk::box(mk::mnot(t))), m, u));
        }
      }
    }
}

TEST_CASE("expand_primitive yields the lambda definitions") {
  TermPtr a = mk::sym("A");
  TermPtr e = expand_primitive(mk::mor(a, a));
  REQUIRE(e->kind == Kind::Lam);
  CHECK(e->a->kind == Kind::Or);

  TermPtr d = expand_primitive(mk::dia(a));
  CHECK(d->kind == Kind::MNot);
  CHECK(d->a->kind == Kind::Box);
  CHECK(d->a->a->kind == Kind::MNot);

  TermPtr fe = expand_primitive(mk::forallE("z", mk::app(mk::sym("P"), mk::var("z"))));
  REQUIRE(fe->kind == Kind::Lam);
  REQUIRE(fe->a->kind == Kind::Forall);
  CHECK(fe->a->a->kind == Kind::Imp);  // existsAt guard

  CHECK_THROWS_AS(expand_primitive(mk::tru(true)), NotAPrimitive);
  CHECK_THROWS_AS(expand_primitive(mk::app(a, a)), NotAPrimitive);
}

TEST_CASE("every lifted primitive agrees with its expansion on random instantiations") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 200) {
    int e = 1 + int(rng() % 2), w = 1 + int(rng() % 2);
    Universe u(e, w);
    Model m = testutil::random_model(rng, e, w);
    TermGen gen(rng);
    TermPtr t = gen.gen_sigma(3);
    Signature sig = testutil::with_builtins(testutil::test_signature());
    typecheck(t, sig);
    if (!is_lifted_primitive(t->kind)) continue;
    TermPtr ex = expand_primitive(t);
    CHECK(eval(t, m, u) == eval(ex, m, u));
    ++checked;
  }
}

TEST_CASE("evaluation results inhabit the carrier of the term's type") {
  std::mt19937_64 rng(13);
  Signature sig = testutil::with_builtins(testutil::test_signature());
  for (int i = 0; i < 100; ++i) {
    int e = 1 + int(rng() % 2), w = 1 + int(rng() % 2);
    Universe u(e, w);
    Model m = testutil::random_model(rng, e, w);
    TermGen gen(rng);
    TermPtr t = gen.gen_sigma(4);
    Type ty = typecheck(t, sig);
    Value v = eval(t, m, u);
    CHECK(v.type() == ty);
    CHECK(u.rank(v) < u.carrier_size(ty));
  }
}

TEST_CASE("eval reports unbound symbols and oversized quantifiers") {
  Universe u(2, 2);
  Signature sig;
  Model m = make_model(Frame(2, {{0, 1}, {1, 0}}), 2, u.value_at(Type::gamma(), 0), {}, sig,
                       FrameClass::KB);
  CHECK_THROWS_AS(eval(mk::sym("nope"), m, u), UnboundSymbol);
  const Type big = Type::fun(Type::fun(Type::gamma(), Type::sigma()), Type::sigma());
  TermPtr q = mk::forall("Z", Type::fun(Type::gamma(), Type::sigma()), mk::tru(true));
  CHECK_THROWS_AS(eval(q, m, u), CarrierTooLarge);
  (void)big;
}
