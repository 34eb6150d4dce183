#pragma once

#include <string>

#include "ihoml/term.hpp"

namespace ihoml {

// Prints a term in the surface syntax with parentheses only where the
// grammar requires them; parse_term(print_term(t)) is structurally t.
// Literal values other than truth constants have no surface form and are
// rejected with std::logic_error.
std::string print_term(const TermPtr& t);
std::string print_term(const Term& t);

}  // namespace ihoml
