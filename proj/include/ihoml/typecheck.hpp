#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ihoml/errors.hpp"
#include "ihoml/term.hpp"

namespace ihoml {

struct TypeError : Error {
  SourceSpan span;
  TypeError(const std::string& msg, SourceSpan s = {}) : Error(msg), span(s) {}
};

// Ordered variable typing context; shadowing resolves innermost-first.
class TypingContext {
 public:
  void push(const std::string& name, Type ty) { binds_.emplace_back(name, std::move(ty)); }
  void pop() { binds_.pop_back(); }
  std::optional<Type> find(const std::string& name) const {
    for (auto it = binds_.rbegin(); it != binds_.rend(); ++it)
      if (it->first == name) return it->second;
    return std::nullopt;
  }

 private:
  std::vector<std::pair<std::string, Type>> binds_;
};

using Signature = std::map<std::string, Type>;

// Returns the unique type of `t` or throws TypeError. Free names are
// resolved against `sig` (model symbols, including r and existsAt).
Type typecheck(const Term& t, TypingContext& ctx, const Signature& sig);
Type typecheck(const TermPtr& t, const Signature& sig);

}  // namespace ihoml
