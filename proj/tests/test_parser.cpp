#include "doctest.h"

#include <random>

#include "ihoml/parser.hpp"
#include "ihoml/printer.hpp"
#include "ihoml/typecheck.hpp"
#include "testutil.hpp"

using namespace ihoml;

TEST_CASE("basic shapes parse to the expected trees") {
  TermPtr t = parse_term("box (forall X:e. P X)");
  REQUIRE(t->kind == Kind::Box);
  REQUIRE(t->a->kind == Kind::ForallP);
  CHECK(t->a->ann == Type::ent());
  CHECK(t->a->a->kind == Kind::App);
  CHECK(t->a->a->a->kind == Kind::Sym);   // P free -> symbol
  CHECK(t->a->a->b->kind == Kind::Var);   // X bound

  // binders extend maximally right, parens are optional here
  CHECK(term_eq(parse_term("box forall X:e. P X"), t));

  TermPtr v = parse_term("valid[ down(Pos, G) ]");
  REQUIRE(v->kind == Kind::Valid);
  REQUIRE(v->a->kind == Kind::Down);
  CHECK(v->a->a->kind == Kind::Sym);
  CHECK(v->a->a->name == "Pos");
  CHECK(v->a->b->name == "G");
}

TEST_CASE("arity and syntax errors carry positions") {
  CHECK_THROWS_AS(parse_term("mand p"), ParseError);
  CHECK_THROWS_AS(parse_term("down(P)"), ParseError);
  CHECK_THROWS_AS(parse_term("forall x. p"), ParseError);  // annotation required
  CHECK_THROWS_AS(parse_term("box"), ParseError);
  CHECK_THROWS_AS(parse_term("(p"), ParseError);
  CHECK_THROWS_AS(parse_term("p q)"), ParseError);
  try {
    parse_term("p mand\n  @q");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.span.line == 2);
    CHECK(e.span.column == 3);
  }
}

TEST_CASE("precedence and associativity match the declared grammar") {
  // not > and > or > imp > iff, implication right-associative
  TermPtr t = parse_term("a mimp b mimp c");
  REQUIRE(t->kind == Kind::MImp);
  CHECK(t->b->kind == Kind::MImp);

  TermPtr u = parse_term("mnot a mand b mor c mimp d mequ e");
  REQUIRE(u->kind == Kind::MEqu);
  REQUIRE(u->a->kind == Kind::MImp);
  REQUIRE(u->a->a->kind == Kind::MOr);
  REQUIRE(u->a->a->a->kind == Kind::MAnd);
  CHECK(u->a->a->a->a->kind == Kind::MNot);

  // application binds tightest
  TermPtr w = parse_term("P x mand Q y");
  REQUIRE(w->kind == Kind::MAnd);
  CHECK(w->a->kind == Kind::App);
  CHECK(w->b->kind == Kind::App);
}

TEST_CASE("types parse and print with abbreviations") {
  CHECK(parse_type("g>s") == Type::fun(Type::gamma(), Type::sigma()));
  CHECK(parse_type("e>w>t") == Type::fun(Type::ent(), Type::sigma()));
  CHECK(parse_type("(e>t)>s") == Type::fun(Type::delta(), Type::sigma()));
  CHECK(parse_type("d>s") == Type::fun(Type::delta(), Type::sigma()));
  CHECK(parse_type(Type::fun(Type::fun(Type::gamma(), Type::sigma()), Type::tru()).str()) ==
        Type::fun(Type::fun(Type::gamma(), Type::sigma()), Type::tru()));
}

TEST_CASE("printing uses parentheses only where required") {
  CHECK(print_term(parse_term("box mfalse")) == "box mfalse");
  CHECK(print_term(parse_term("a mimp b mimp c")) == "a mimp b mimp c");
  CHECK(print_term(parse_term("(a mimp b) mimp c")) == "(a mimp b) mimp c");
  CHECK(print_term(parse_term("mnot (a mand b)")) == "mnot (a mand b)");
  CHECK(print_term(parse_term("(mnot a) mand b")) == "mnot a mand b");
  CHECK(print_term(parse_term("P x y")) == "P x y");
  CHECK(print_term(parse_term("P (x y)")) == "P (x y)");
  CHECK(print_term(parse_term("box forall X:e. P X")) == "box forall X:e. P X");
  CHECK(print_term(parse_term("(forall X:e. P X) mand q")) == "(forall X:e. P X) mand q");
  CHECK(print_term(parse_term("q mand forall X:e. P X")) == "q mand forall X:e. P X");
  CHECK(print_term(parse_term("(q mand forall X:e. P X) mand z")) ==
        "q mand (forall X:e. P X) mand z");
}

TEST_CASE("round-trip on seeded random well-typed terms") {
  std::mt19937_64 rng(20240811);
  Signature sig = testutil::with_builtins(testutil::test_signature());
  int done = 0;
  while (done < 1000) {
    testutil::TermGen gen(rng, /*surface_only=*/true);
    TermPtr t = gen.gen_sigma(6);
    typecheck(t, sig);
    std::string s = print_term(t);
    TermPtr back = parse_term(s);
    if (!term_eq(back, t)) {
      CAPTURE(s);
      CHECK(term_eq(back, t));
    }
    ++done;
  }
  CHECK(done == 1000);
}
