#include "ihoml/universe.hpp"

#include <limits>

#include "ihoml/errors.hpp"

namespace ihoml {

std::string Type::str() const {
  switch (tag_) {
    case Tag::Ent: return "e";
    case Tag::Wld: return "w";
    case Tag::Tru: return "t";
    case Tag::Fun: break;
  }
  if (*this == Type::delta()) return "d";
  if (*this == Type::sigma()) return "s";
  if (*this == Type::gamma()) return "g";
  std::string d = dom().str();
  if (d.find('>') != std::string::npos) d = "(" + d + ")";
  return d + ">" + cod().str();
}

std::string type_str(const Type& t) { return t.str(); }

namespace {

uint64_t checked_pow(uint64_t base, uint64_t exp, const Type& ty) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<uint64_t>::max() / base)
      throw CarrierTooLarge("carrier size overflows 64 bits for type " + ty.str());
    r *= base;
  }
  return r;
}

}  // namespace

Universe::Universe(int entity_count, int world_count, uint64_t cap)
    : entities_(entity_count), worlds_(world_count), cap_(cap) {}

uint64_t Universe::carrier_size(const Type& ty) {
  switch (ty.tag()) {
    case Type::Tag::Ent: return uint64_t(entities_);
    case Type::Tag::Wld: return uint64_t(worlds_);
    case Type::Tag::Tru: return 2;
    case Type::Tag::Fun: break;
  }
  const std::string key = ty.str();
  auto it = size_cache_.find(key);
  if (it != size_cache_.end()) return it->second;
  uint64_t n = checked_pow(carrier_size(ty.cod()), carrier_size(ty.dom()), ty);
  size_cache_.emplace(key, n);
  return n;
}

Value Universe::value_at(const Type& ty, uint64_t i) {
  switch (ty.tag()) {
    case Type::Tag::Ent: return Value::entity(int32_t(i));
    case Type::Tag::Wld: return Value::world(int32_t(i));
    case Type::Tag::Tru: return Value::truth(i != 0);
    case Type::Tag::Fun: break;
  }
  const uint64_t dom_n = carrier_size(ty.dom());
  const uint64_t cod_n = carrier_size(ty.cod());
  std::vector<Value> entries(dom_n);
  // entry 0 is the most significant digit of the index in base cod_n
  for (uint64_t pos = dom_n; pos-- > 0;) {
    entries[pos] = value_at(ty.cod(), i % cod_n);
    i /= cod_n;
  }
  return Value::table(ty, std::move(entries));
}

uint64_t Universe::rank(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Truth: return v.as_truth() ? 1 : 0;
    case Value::Kind::Entity:
    case Value::Kind::World: return uint64_t(v.index());
    case Value::Kind::Table: break;
  }
  const uint64_t cod_n = carrier_size(v.type().cod());
  uint64_t r = 0;
  for (const Value& e : v.entries()) r = r * cod_n + rank(e);
  return r;
}

const std::vector<Value>& Universe::carrier(const Type& ty) {
  const std::string key = ty.str();
  auto it = carrier_cache_.find(key);
  if (it != carrier_cache_.end()) return it->second;
  const uint64_t n = carrier_size(ty);
  if (n > cap_)
    throw CarrierTooLarge("carrier of " + ty.str() + " has " + std::to_string(n) +
                          " elements, cap is " + std::to_string(cap_));
  std::vector<Value> vs;
  vs.reserve(size_t(n));
  for (uint64_t i = 0; i < n; ++i) vs.push_back(value_at(ty, i));
  return carrier_cache_.emplace(key, std::move(vs)).first->second;
}

uint64_t carrier_size(const Type& ty, int entity_count, int world_count) {
  Universe u(entity_count, world_count);
  return u.carrier_size(ty);
}

std::vector<Value> enumerate_carrier(const Type& ty, int entity_count, int world_count,
                                     uint64_t cap) {
  Universe u(entity_count, world_count, cap);
  return u.carrier(ty);
}

}  // namespace ihoml
