#pragma once

#include <cstdint>
#include <vector>

#include "ihoml/types.hpp"

namespace ihoml {

// A canonical finite denotation: a truth value, an entity index, a world
// index, or a total function table over the enumerated domain carrier.
// Tables are stored in canonical carrier order, so structural equality
// coincides with extensional (Leibniz) equality.
class Value {
 public:
  enum class Kind : uint8_t { Truth, Entity, World, Table };

  Value() : kind_(Kind::Truth), truth_(false), type_(Type::tru()) {}

  static Value truth(bool b) {
    Value v;
    v.kind_ = Kind::Truth;
    v.truth_ = b;
    v.type_ = Type::tru();
    return v;
  }
  static Value entity(int32_t i) {
    Value v;
    v.kind_ = Kind::Entity;
    v.index_ = i;
    v.type_ = Type::ent();
    return v;
  }
  static Value world(int32_t i) {
    Value v;
    v.kind_ = Kind::World;
    v.index_ = i;
    v.type_ = Type::wld();
    return v;
  }
  static Value table(Type ty, std::vector<Value> entries) {
    Value v;
    v.kind_ = Kind::Table;
    v.type_ = std::move(ty);
    v.entries_ = std::move(entries);
    return v;
  }

  Kind kind() const { return kind_; }
  const Type& type() const { return type_; }
  bool as_truth() const { return truth_; }
  int32_t index() const { return index_; }
  const std::vector<Value>& entries() const { return entries_; }
  const Value& at(size_t i) const { return entries_[i]; }
  size_t size() const { return entries_.size(); }

  bool operator==(const Value& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
      case Kind::Truth: return truth_ == o.truth_;
      case Kind::Entity:
      case Kind::World: return index_ == o.index_;
      case Kind::Table:
        if (!(type_ == o.type_) || entries_.size() != o.entries_.size()) return false;
        for (size_t i = 0; i < entries_.size(); ++i)
          if (!(entries_[i] == o.entries_[i])) return false;
        return true;
    }
    return false;
  }
  bool operator!=(const Value& o) const { return !(*this == o); }

 private:
  Kind kind_;
  bool truth_ = false;
  int32_t index_ = 0;
  Type type_;
  std::vector<Value> entries_;
};

}  // namespace ihoml
