#pragma once

#include <memory>
#include <string>
#include <utility>

namespace ihoml {

// Simple types over entities (e), worlds (w) and truth values (t).
// The standard abbreviations are
//   d = e>t   extensional properties
//   s = w>t   world-lifted propositions (truth sets)
//   g = e>s   intensional properties
//   tau = w>s accessibility relations
class Type {
 public:
  enum class Tag : uint8_t { Ent, Wld, Tru, Fun };

  Type() : tag_(Tag::Tru) {}

  static Type ent() { return Type(Tag::Ent); }
  static Type wld() { return Type(Tag::Wld); }
  static Type tru() { return Type(Tag::Tru); }
  static Type fun(Type dom, Type cod) {
    Type t(Tag::Fun);
    t.fun_ = std::make_shared<std::pair<Type, Type>>(std::move(dom), std::move(cod));
    return t;
  }

  static Type delta() { return fun(ent(), tru()); }
  static Type sigma() { return fun(wld(), tru()); }
  static Type gamma() { return fun(ent(), sigma()); }
  static Type tau() { return fun(wld(), sigma()); }

  Tag tag() const { return tag_; }
  bool is_fun() const { return tag_ == Tag::Fun; }
  const Type& dom() const { return fun_->first; }
  const Type& cod() const { return fun_->second; }

  bool operator==(const Type& o) const {
    if (tag_ != o.tag_) return false;
    if (tag_ != Tag::Fun) return true;
    if (fun_ == o.fun_) return true;
    return dom() == o.dom() && cod() == o.cod();
  }
  bool operator!=(const Type& o) const { return !(*this == o); }

  // "e", "w", "t", abbreviations d/s/g where they match, otherwise "a>b"
  // with parentheses around function-typed domains.
  std::string str() const;

 private:
  explicit Type(Tag tag) : tag_(tag) {}

  Tag tag_;
  std::shared_ptr<const std::pair<Type, Type>> fun_;
};

std::string type_str(const Type& t);

}  // namespace ihoml
