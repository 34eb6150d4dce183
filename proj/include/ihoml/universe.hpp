#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ihoml/value.hpp"

namespace ihoml {

constexpr uint64_t kDefaultCarrierCap = uint64_t(1) << 24;

// Carrier enumeration context for fixed domain sizes (|E|, |W|).
// Carriers have a deterministic canonical order: entities and worlds by
// index, truth values false < true, and function tables in lexicographic
// order of codomain values over the ordered domain (entry 0 is the most
// significant digit). Small carriers are memoized; larger ones are decoded
// on demand through value_at.
//
// Not thread-safe; parallel workers each own a Universe.
class Universe {
 public:
  Universe(int entity_count, int world_count, uint64_t cap = kDefaultCarrierCap);

  int entity_count() const { return entities_; }
  int world_count() const { return worlds_; }
  uint64_t cap() const { return cap_; }

  // Size of the carrier of `ty`; throws CarrierTooLarge on 64-bit overflow.
  uint64_t carrier_size(const Type& ty);

  // Materialized carrier; throws CarrierTooLarge when the size exceeds the cap.
  const std::vector<Value>& carrier(const Type& ty);

  // i-th carrier element (0-based canonical order); the streaming
  // counterpart of carrier() for sizes above the memoization limit.
  Value value_at(const Type& ty, uint64_t i);

  // Canonical index of a value in its type's carrier; inverse of value_at.
  uint64_t rank(const Value& v);

 private:
  int entities_;
  int worlds_;
  uint64_t cap_;
  std::map<std::string, uint64_t> size_cache_;
  std::map<std::string, std::vector<Value>> carrier_cache_;
};

// Stateless forms of the two core carrier operations.
uint64_t carrier_size(const Type& ty, int entity_count, int world_count);
std::vector<Value> enumerate_carrier(const Type& ty, int entity_count, int world_count,
                                     uint64_t cap = kDefaultCarrierCap);

}  // namespace ihoml
