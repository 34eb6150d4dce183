#pragma once

#include <string>

#include "ihoml/errors.hpp"
#include "ihoml/term.hpp"

namespace ihoml {

struct ParseError : Error {
  SourceSpan span;
  ParseError(const std::string& msg, SourceSpan s) : Error(msg), span(s) {}
};

// Parses the ASCII term syntax. Precedence, loosest first:
// mequ/<->, mimp/-> (right associative), mor/|, mand/&, prefix
// (mnot ~ box dia), application. Binders (forall, exists, forallE,
// existsE, lam, !, ?) extend maximally to the right. Free identifiers
// become symbols, bound ones variables.
TermPtr parse_term(const std::string& text);

// Type syntax: e, w, t, the abbreviations d = e>t, s = w>t, g = e>s,
// and right-associative arrows with parentheses.
Type parse_type(const std::string& text);

}  // namespace ihoml
