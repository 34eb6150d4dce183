#pragma once

#include "ihoml/eval.hpp"

namespace ihoml {

// Independent differential oracle for the fast evaluator: expands every
// lifted primitive into its lambda definition and then evaluates the
// resulting core term by naive substitution of literal values. Shares no
// code path with eval() beyond the Value representation.
Value oracle_eval(const TermPtr& t, const Model& m, Universe& u);

// Capture-free substitution of a closed term for a free variable.
TermPtr subst(const TermPtr& t, const std::string& name, const TermPtr& replacement);

}  // namespace ihoml
