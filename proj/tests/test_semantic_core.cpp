#include "doctest.h"

#include "ihoml/errors.hpp"
#include "ihoml/model.hpp"
#include "ihoml/universe.hpp"

using namespace ihoml;

TEST_CASE("carrier sizes follow the size formula") {
  Universe u(2, 2);
  CHECK(u.carrier_size(Type::tru()) == 2);
  CHECK(u.carrier_size(Type::ent()) == 2);
  CHECK(u.carrier_size(Type::wld()) == 2);
  CHECK(u.carrier_size(Type::sigma()) == 4);
  CHECK(u.carrier_size(Type::delta()) == 4);
  // enumerate-and-count oracle for gamma at |E|=|W|=2: must equal 2^(E*W)
  CHECK(u.carrier(Type::gamma()).size() == 16);
  CHECK(u.carrier_size(Type::gamma()) == 16);

  Universe u1(1, 3);
  CHECK(u1.carrier_size(Type::sigma()) == 8);
}

TEST_CASE("carrier enumeration is canonical and bijective") {
  Universe u(2, 2);
  const Type types[] = {Type::tru(), Type::ent(), Type::delta(), Type::sigma(),
                        Type::gamma(), Type::fun(Type::delta(), Type::sigma())};
  for (const Type& ty : types) {
    const auto& c = u.carrier(ty);
    CHECK(c.size() == u.carrier_size(ty));
    for (size_t i = 0; i < c.size(); ++i) {
      CHECK(u.rank(c[i]) == i);
      CHECK(u.value_at(ty, i) == c[i]);
      for (size_t j = i + 1; j < c.size(); ++j) CHECK(c[i] != c[j]);
    }
  }
}

TEST_CASE("truth and entity carriers are ordered as expected") {
  Universe u(2, 1);
  const auto& tr = u.carrier(Type::tru());
  CHECK(tr[0] == Value::truth(false));
  CHECK(tr[1] == Value::truth(true));
  const auto& ents = u.carrier(Type::ent());
  CHECK(ents[0] == Value::entity(0));
  CHECK(ents[1] == Value::entity(1));
  // first delta table is constantly false
  const auto& ds = u.carrier(Type::delta());
  CHECK(ds.size() == 4);
  CHECK(ds[0].at(0) == Value::truth(false));
  CHECK(ds[0].at(1) == Value::truth(false));
  CHECK(ds[3].at(0) == Value::truth(true));
  CHECK(ds[3].at(1) == Value::truth(true));
  // entry 0 is the most significant digit
  CHECK(ds[1].at(0) == Value::truth(false));
  CHECK(ds[1].at(1) == Value::truth(true));
}

TEST_CASE("oversized carriers are refused, not wrapped") {
  Universe u(2, 2);
  const Type big = Type::fun(Type::gamma(), Type::sigma());  // 4^16 = 2^32
  CHECK(u.carrier_size(big) == (uint64_t(1) << 32));
  CHECK_THROWS_AS(u.carrier(big), CarrierTooLarge);
  // overflow of 64-bit size arithmetic is an error as well
  const Type huge = Type::fun(big, Type::sigma());
  CHECK_THROWS_AS(u.carrier_size(huge), CarrierTooLarge);
}

TEST_CASE("frame_satisfies models the relational conditions") {
  Frame empty(2, {});
  CHECK(frame_satisfies(empty, FrameClass::KB));  // vacuous symmetry
  CHECK(!frame_satisfies(empty, FrameClass::S5)); // not reflexive

  Frame one_way(2, {{0, 1}});
  CHECK(!frame_satisfies(one_way, FrameClass::KB));
  CHECK(frame_satisfies(one_way, FrameClass::K));

  Frame total(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(frame_satisfies(total, FrameClass::S5));

  // S5 implies KB over all frames on up to 3 worlds
  for (int w = 1; w <= 3; ++w)
    for (const Frame& f : frames_in_class(w, FrameClass::S5))
      CHECK(frame_satisfies(f, FrameClass::KB));
}

TEST_CASE("make_model validates class, domain and interpretation types") {
  Universe u(1, 1);
  Frame reflexive(1, {{0, 0}});
  Value exists_all = u.value_at(Type::gamma(), u.carrier_size(Type::gamma()) - 1);
  std::map<std::string, Type> sig{{"P", Type::fun(Type::gamma(), Type::sigma())}};
  Value p_all_true =
      u.value_at(sig.at("P"), u.carrier_size(sig.at("P")) - 1);

  // 1 world, 1 entity, reflexive r, P = all-true: the Scott witness shape
  Model m = make_model(reflexive, 1, exists_all, {{"P", p_all_true}}, sig, FrameClass::KB);
  CHECK(m.exists(0, 0));

  Frame one_way(2, {{0, 1}});
  Universe u2(1, 2);
  Value ex2 = u2.value_at(Type::gamma(), 0);
  Value p2 = u2.value_at(sig.at("P"), 0);
  CHECK_THROWS_AS(make_model(one_way, 1, ex2, {{"P", p2}}, sig, FrameClass::KB),
                  FrameClassViolation);

  // P given at s where g>s is declared
  Value p_sigma = u.value_at(Type::sigma(), 0);
  CHECK_THROWS_AS(make_model(reflexive, 1, exists_all, {{"P", p_sigma}}, sig, FrameClass::KB),
                  TypeMismatch);

  CHECK_THROWS_AS(make_model(reflexive, 0, exists_all, {{"P", p_all_true}}, sig, FrameClass::KB),
                  EmptyDomain);
}

TEST_CASE("type strings use the standard abbreviations") {
  CHECK(Type::delta().str() == "d");
  CHECK(Type::sigma().str() == "s");
  CHECK(Type::gamma().str() == "g");
  CHECK(Type::fun(Type::gamma(), Type::sigma()).str() == "g>s");
  CHECK(Type::fun(Type::fun(Type::ent(), Type::ent()), Type::tru()).str() == "(e>e)>t");
  CHECK(Type::tau().str() == "w>s");
}
